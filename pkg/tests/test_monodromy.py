import random

import pytest
from hypothesis import given, settings, strategies as st

from cubiclab.monodromy import (OMEGA, OMEGA2, ONE, ZERO, Cyclo, a2_lattice, build_global,
                                char_poly_2x2, closure_dim, closure_trials, decompose_rep,
                                eigenbasis, eigenvector_span, has_order_three, in_span,
                                invariant_closure, is_invariant, kernel, local_monodromy, matvec,
                                milnor_number, normalize, pl_reflect, preserves_form, random_vector,
                                rank, sign_conventions)

rationals = st.fractions(max_denominator=12).filter(lambda q: abs(q) < 50)
cyclos = st.builds(Cyclo, rationals, rationals)


def test_omega_is_a_primitive_cube_root():
    assert OMEGA ** 3 == ONE and OMEGA != ONE
    assert OMEGA * OMEGA == OMEGA2 == -ONE - OMEGA
    assert ONE + OMEGA + OMEGA2 == ZERO


@settings(max_examples=200, deadline=None)
@given(cyclos, cyclos, cyclos)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    if x:
        assert x * x.inverse() == ONE
        assert (y / x) * x == y
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x * x.conj()).b == 0


def test_milnor_numbers():
    assert milnor_number((3, 2, 2, 2, 2)) == 2
    assert milnor_number((2, 2, 2, 2, 2)) == 1
    assert milnor_number((3, 3, 2, 2, 2)) == 4
    with pytest.raises(ValueError):
        milnor_number((3, 1, 2))


def test_a2_lattice():
    lat = a2_lattice()
    assert lat.det == 3
    assert lat.gram == ((2, -1), (-1, 2))


def test_reflection_examples():
    lat = a2_lattice()
    d1, d2 = lat.cycle(1), lat.cycle(2)
    assert pl_reflect(d1, d1, lat) == tuple(-x for x in d1)
    assert pl_reflect(d2, d1, lat) == (ONE, ONE)
    with pytest.raises(ValueError):
        pl_reflect((ONE, ONE, ONE), d1, lat)


@settings(max_examples=100, deadline=None)
@given(st.tuples(cyclos, cyclos), st.tuples(cyclos, cyclos), st.sampled_from([1, 2]))
def test_reflection_is_an_involutive_isometry(z, w, k):
    lat = a2_lattice()
    d = lat.cycle(k)
    tz, tw = pl_reflect(z, d, lat), pl_reflect(w, d, lat)
    assert pl_reflect(tz, d, lat) == z
    assert lat.pair(tz, tw) == lat.pair(z, w)


def test_local_monodromy():
    r = local_monodromy()
    rr = [[sum(r[i][k] * r[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    r3 = [[sum(rr[i][k] * r[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert r3 == [[1, 0], [0, 1]] and r != [[1, 0], [0, 1]]
    assert char_poly_2x2(r) == (1, 1, 1)
    assert r[0][0] + r[1][1] == -1


def test_only_consistent_signs_give_order_three():
    table = {(off, sign): ok for off, sign, ok in sign_conventions()}
    assert table[(-1, -1)]
    # a reflection sign of +1 never squares to the identity for a norm-2 cycle
    assert not table[(-1, 1)] and not table[(1, 1)]
    with pytest.raises(ValueError):
        local_monodromy(sign=1)


def test_eigenbasis():
    r = local_monodromy()
    dw, dw2 = eigenbasis(r)
    assert matvec(r, dw) == tuple(OMEGA * x for x in dw)
    assert matvec(r, dw2) == tuple(OMEGA2 * x for x in dw2)
    assert rank([dw, dw2]) == 2
    for lam in (OMEGA, OMEGA2):
        shifted = [[Cyclo.of(x) - (lam if i == j else ZERO) for j, x in enumerate(row)]
                   for i, row in enumerate(r)]
        assert len(kernel(shifted)) == 1


def test_galois_swaps_eigenlines():
    dw, dw2 = eigenbasis(local_monodromy())
    assert normalize(tuple(x.conj() for x in dw)) == normalize(dw2)


@pytest.mark.parametrize("m", range(1, 9))
def test_global_generators(m):
    rep = build_global(m)
    form = rep.form()
    ident = [[int(i == j) for j in range(rep.dim)] for i in range(rep.dim)]
    for g in rep.ops:
        assert has_order_three([list(row) for row in g])
        assert preserves_form(g, form)
    for b, g in enumerate(rep.ops):
        for other in range(m):
            if other != b:
                v = rep.embed(other, (ONE, OMEGA))
                assert matvec(g, v) == v
    for t in rep.transports:
        assert preserves_form(t, form)
        assert [[sum(t[i][k] * t[k][j] for k in range(rep.dim)) for j in range(rep.dim)]
                for i in range(rep.dim)] == ident


def test_m_equal_1_is_the_local_representation():
    rep = build_global(1)
    assert [list(r) for r in rep.ops[0]] == local_monodromy()
    assert rep.transports == ()


def test_disjoint_blocks_commute():
    rep = build_global(2)
    a, b = rep.ops
    ab = [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    assert ab == ba


def test_build_global_rejects_zero_points():
    with pytest.raises(ValueError):
        build_global(0)


@pytest.mark.parametrize("m", range(1, 9))
def test_decomposition(m):
    rep = build_global(m)
    dec = decompose_rep(rep)
    assert len(dec.h_omega) == len(dec.h_omega2) == m
    assert dec.invariant and dec.direct_sum and dec.complete
    assert is_invariant(rep, dec.h_omega) and is_invariant(rep, dec.h_omega2)
    assert rank(list(dec.h_omega) + list(dec.h_omega2)) == 2 * m
    for v in eigenvector_span(rep, OMEGA):
        assert in_span(dec.h_omega, v)
    for v in eigenvector_span(rep, OMEGA2):
        assert in_span(dec.h_omega2, v)


def _commutant_dim(rep):
    """Dimension of {X : X g = g X for every generator g}, solved as one linear system."""
    n = rep.dim
    rows = []
    for g in rep.generators():
        for i in range(n):
            for j in range(n):
                # (X g - g X)[i][j] = sum_k X[i][k] g[k][j] - g[i][k] X[k][j]
                row = [ZERO] * (n * n)
                for k in range(n):
                    if g[k][j]:
                        row[i * n + k] = row[i * n + k] + g[k][j]
                    if g[i][k]:
                        row[k * n + j] = row[k * n + j] - g[i][k]
                if any(row):
                    rows.append(row)
    return len(kernel(rows, n * n))


@pytest.mark.parametrize("m", [1, 2, 5])
def test_exactly_two_nonisomorphic_summands(m):
    # for a completely reducible module, a commutant of dimension 2 means exactly two
    # non-isomorphic irreducible summands, so no other proper invariant subspaces exist
    assert _commutant_dim(build_global(m)) == 2


def test_m5_closure_search():
    rep = build_global(5)
    dec = decompose_rep(rep)
    rng = random.Random(5)
    seen = set()
    for _ in range(60):
        v = random_vector(rng, rep.dim, bound=3)
        mode = rng.randrange(3)
        if mode:
            span = dec.h_omega if mode == 1 else dec.h_omega2
            coeffs = random_vector(rng, 5, bound=3)
            v = tuple(sum((c * b[i] for c, b in zip(coeffs, span)), ZERO) for i in range(rep.dim))
        seen.add(closure_dim(rep, v))
    assert seen <= {5, 10} and 5 in seen and 10 in seen


def test_closure_of_an_eigenvector_is_its_part():
    rep = build_global(3)
    dec = decompose_rep(rep)
    closure = invariant_closure(rep, eigenvector_span(rep, OMEGA)[2])
    assert len(closure) == 3
    assert all(in_span(dec.h_omega, v) for v in closure)


def test_closure_trials_seeded():
    trials = closure_trials(1000, seed=0)
    assert len(trials) == 1000
    assert all(t.ok for t in trials)
    assert {t.m for t in trials} <= set(range(1, 9))
    assert [t.closure_dim for t in closure_trials(40, 3)] == [t.closure_dim for t in closure_trials(40, 3)]


def test_decomposition_json():
    js = decompose_rep(build_global(2)).to_json()
    assert js["dims"] == [2, 2] and js["complete"] is True

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cubiclab.bbw import (ALL, CohomTable, Interval, Space, bott_formula, clear_memo,
                          line_cohomology, projective_weight, symbolic_line_cohomology)

GAMMA = Space.incidence(6)
G26 = Space.grassmannian(6)
P5 = Space.projective(5)
OMEGA_GAMMA = (-7, -5, 0, 0, 0, 0)


def test_space_dimensions():
    assert GAMMA.dim == 9
    assert G26.dim == 8
    assert P5.dim == 5
    assert Space.parse("Gamma6") == GAMMA
    assert Space.parse("G26") == G26
    assert Space.parse("P5") == P5
    with pytest.raises(ValueError):
        Space.parse("Q7")


def test_calibration():
    assert line_cohomology(GAMMA, (1, 0, 0, 0, 0, 0)).dims == {0: 6}
    assert line_cohomology(GAMMA, OMEGA_GAMMA).dims == {9: 1}
    assert line_cohomology(GAMMA, (-1, 1, 0, 0, 0, 0)).dims == {1: 1}
    assert line_cohomology(G26, (1, 1, 0, 0, 0, 0)).dims == {0: 15}
    assert line_cohomology(GAMMA, (0, 0, 0, 0, 0, -1)).dims == {0: 6}
    assert line_cohomology(GAMMA, (0, 0, 1, 0, 0, 0)).is_zero()


def test_rejects_non_block_dominant():
    with pytest.raises(ValueError):
        line_cohomology(GAMMA, (0, 0, 0, 1, 0, 0))
    with pytest.raises(ValueError):
        line_cohomology(G26, (0, 1, 0, 0, 0, 0))


def test_bott_examples():
    assert bott_formula(5, 1, 0).dims == {1: 1}
    assert bott_formula(5, 1, 1).is_zero()
    assert bott_formula(5, 2, -3).is_zero()
    with pytest.raises(ValueError):
        bott_formula(5, 6, 0)


def test_bott_agrees_with_bbw():
    for p in range(6):
        for k in range(-12, 13):
            assert bott_formula(5, p, k) == line_cohomology(P5, projective_weight(5, p, k)), (p, k)


def test_sections_of_o_t_count_monomials():
    def monomials(deg, nvars):
        # stars and bars by direct recursion
        if nvars == 1:
            return 1
        return sum(monomials(deg - i, nvars - 1) for i in range(deg + 1))

    for t in range(0, 9):
        assert line_cohomology(GAMMA, (t, 0, 0, 0, 0, 0)).dims == {0: monomials(t, 6)}


def _dual(weight):
    # irreducible bundle dual: negate and reverse inside each block
    t, s, *mu = weight
    return (-t, -s) + tuple(-m for m in reversed(mu))


def _tensor_line(weight, line):
    return tuple(a + b for a, b in zip(weight, line))


def _random_gamma_weight(rnd):
    mu = sorted((rnd.randint(-10, 10) for _ in range(4)), reverse=True)
    return (rnd.randint(-10, 10), rnd.randint(-10, 10), *mu)


def test_serre_duality_500():
    rnd = random.Random(20240601)
    for _ in range(500):
        lam = _random_gamma_weight(rnd)
        h = line_cohomology(GAMMA, lam)
        hd = line_cohomology(GAMMA, _tensor_line(_dual(lam), OMEGA_GAMMA))
        for i in range(10):
            assert h[i] == hd[9 - i], lam


def test_concentration():
    rnd = random.Random(7)
    for space in (GAMMA, G26, P5):
        for _ in range(200):
            w = []
            for size in space.blocks:
                w += sorted((rnd.randint(-8, 8) for _ in range(size)), reverse=True)
            assert len(line_cohomology(space, w).dims) <= 1


def _interpolates_as_polynomial(values, degree):
    # forward differences of order degree + 1 vanish
    diffs = list(values)
    for _ in range(degree + 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return all(d == 0 for d in diffs)


@pytest.mark.parametrize("space,base,direction", [
    (GAMMA, (0, -3, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0)),
    (GAMMA, (2, 0, 1, 0, 0, -1), (0, 1, 0, 0, 0, 0)),
    (G26, (1, 0, 0, 0, 0, -2), (1, 1, 0, 0, 0, 0)),
    (P5, (0, 1, 1, 0, 0, 0), (1, 0, 0, 0, 0, 0)),
])
def test_euler_characteristic_is_polynomial(space, base, direction):
    values = [line_cohomology(space, [b + t * d for b, d in zip(base, direction)]).euler()
              for t in range(-15, -15 + space.dim + 2 + 6)]
    assert _interpolates_as_polynomial(values, space.dim)


def test_symbolic_examples():
    v = symbolic_line_cohomology(GAMMA, (0,) * 6, (1, 0, 0, 0, 0, 0), Interval(None, -1))
    # no sections for t <= -1; the only survivor is H^5 from the base P^5
    assert 0 not in v.degrees()
    assert v.degrees() == {5}
    assert all(v.at(t).is_zero() for t in range(-5, 0))
    v = symbolic_line_cohomology(GAMMA, (0, -5, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), ALL)
    assert v.degrees() <= {4, 9}
    v = symbolic_line_cohomology(GAMMA, (0,) * 6, (1, 0, 0, 0, 0, 0), Interval(0, None))
    assert v.degrees() == {0}
    for t in (0, 1, 5, 40, 1000):
        assert v.at(t).dims == {0: comb(t + 5, 5)}


def test_symbolic_partitions_domain():
    v = symbolic_line_cohomology(GAMMA, (0, -5, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), ALL)
    ivs = [s.interval for s in v.intervals]
    assert ivs[0].lo is None and ivs[-1].hi is None
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi + 1 == b.lo


def test_symbolic_rejects_bad_templates():
    with pytest.raises(ValueError):
        symbolic_line_cohomology(GAMMA, (0,) * 6, (2, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        symbolic_line_cohomology(GAMMA, (0,) * 6, (0, 0, 1, 0, 0, 0))


block_dominant_gamma = st.tuples(
    st.integers(-9, 9), st.integers(-9, 9),
    st.lists(st.integers(-4, 4), min_size=4, max_size=4).map(lambda xs: tuple(sorted(xs, reverse=True))),
).map(lambda x: (x[0], x[1]) + x[2])
directions = st.sampled_from([(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (-1, 0, 0, 0, 0, 0),
                              (0, -1, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 1, 1),
                              (1, -1, 0, 0, 0, 0)])


@settings(max_examples=120, deadline=None)
@given(block_dominant_gamma, directions)
def test_symbolic_matches_pointwise(base, direction):
    v = symbolic_line_cohomology(GAMMA, base, direction, ALL)
    for t in range(-25, 26):
        w = [b + t * d for b, d in zip(base, direction)]
        assert v.at(t) == line_cohomology(GAMMA, w), t


def test_dimension_polynomial_coefficients():
    v = symbolic_line_cohomology(P5, (0,) * 6, (1, 0, 0, 0, 0, 0), Interval(0, None))
    coeffs = v.intervals[0].dimension.coefficients()
    assert coeffs[-1] == Fraction(1, 120)
    assert len(coeffs) == 6


def test_memo_concurrent_readers():
    clear_memo()
    weights = [(t, s, 0, 0, 0, 0) for t in range(-6, 6) for s in range(-6, 6)]
    expected = [line_cohomology(GAMMA, w) for w in weights]
    clear_memo()
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(lambda w: line_cohomology(GAMMA, w), weights * 4))
    assert got == expected * 4


def test_cohom_table_normalizes():
    t = CohomTable({3: 0, 1: 2})
    assert t.dims == {1: 2}
    assert t[5] == 0
    assert t.euler() == -2

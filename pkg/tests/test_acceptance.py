"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` for just the summary lines.
"""
import random
import time
from collections import Counter

import pytest

from cubiclab import chow, lattice, monodromy
from cubiclab.bbw import Space, bott_formula, clear_memo, line_cohomology, projective_weight
from cubiclab.bundles import parse_bundle
from cubiclab.cohom import fano_cotangent_sections, fano_structure_sheaf, load_ledger, verify_ledger
from cubiclab.cohom.koszul import Status
from cubiclab.config import resolve_ledger

RESULTS = {}


def record(number, ok, detail, capsys=None):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    return ok


def _ledger(name):
    return verify_ledger(load_ledger(resolve_ledger(name)))


# 1 --------------------------------------------------------------------------------------

def criterion_1():
    clear_memo()
    start = time.perf_counter()
    claims = load_ledger(resolve_ledger("gamma_vanishing"))
    rep = verify_ledger(claims)
    secs = time.perf_counter() - start
    bad = [r.id for r in rep.results if not r.proven]
    symbolic = sum(1 for c in claims if any(iv.lo is None or iv.hi is None
                                            for dom in c.param_domains.values() for iv in dom))
    ok = len(claims) >= 40 and not bad and secs < 30 and symbolic > 0
    return ok, (f"{len(claims)} clauses ({symbolic} with unbounded domains), "
                f"{len(claims) - len(bad)} Proven, not Proven: {bad or 'none'}, {secs:.2f} s")


# 2 --------------------------------------------------------------------------------------

def criterion_2():
    clear_memo()
    start = time.perf_counter()
    reps = {name: _ledger(name) for name in ("auxiliary_vanishing", "conormal_chain", "cotangent_chain")}
    secs = time.perf_counter() - start
    clauses = {r.ref.split(")")[0] + ")" for r in reps["auxiliary_vanishing"].results}
    numerals = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"]
    have_all = all(f"auxiliary lemma ({x})" in clauses for x in numerals)
    chains = [{r.id for r in reps[n].results} >= {f"{p}.{k}" for k in range(1, 6)}
              for n, p in (("conormal_chain", "cn"), ("cotangent_chain", "ct"))]
    bad = [r.id for rep in reps.values() for r in rep.results if not r.proven]
    ok = have_all and all(chains) and not bad and secs < 10
    total = sum(len(r.results) for r in reps.values())
    return ok, f"{total} claims, clauses (i)-(viii) present: {have_all}, not Proven: {bad or 'none'}, {secs:.2f} s"


# 3 --------------------------------------------------------------------------------------

def criterion_3():
    f = fano_structure_sheaf(6)
    omega, omega_status = fano_cotangent_sections(6)
    values = [f.table[1], f.table[3], f.table[2], omega]
    statuses = [f.degree_status[1], f.degree_status[3], f.degree_status[2], omega_status]
    ok = values == [0, 0, 1, 0] and all(s is Status.EXACT for s in statuses) and f.euler == 3
    return ok, (f"h1={values[0]} h3={values[1]} h2={values[2]} h0(Omega)={values[3]} "
                f"status={[s.value for s in statuses]}; derived h4={f.table[4]} "
                f"({f.degree_status[4].value}), chi(O_F)={f.euler}")


# 4 --------------------------------------------------------------------------------------

def criterion_4():
    s = fano_structure_sheaf(5)
    h01 = s.table[1]
    b1 = 2 * h01
    chi = chow.chi_top_fano(5)
    b2 = chow.betti_from_chi(chi, b1)
    terms = [1, -b1, b2, -b1, 1]
    ok = (h01 == 5 and s.degree_status[1] is Status.EXACT and b1 == 10 and chi == 27
          and b2 == 45 and terms == [1, -10, 45, -10, 1] and sum(terms) == 27)
    return ok, f"h01={h01} b1={b1} chi_top={chi} b2={b2} terms={terms} sum={sum(terms)}"


# 5 --------------------------------------------------------------------------------------

def criterion_5():
    clear_memo()
    start = time.perf_counter()
    p5 = Space.projective(5)
    mismatches = [(p, k) for p in range(6) for k in range(-12, 13)
                  if bott_formula(5, p, k) != line_cohomology(p5, projective_weight(5, p, k))]
    secs = time.perf_counter() - start
    return not mismatches and secs < 5, f"{6 * 25} pairs, mismatches: {mismatches or 'none'}, {secs:.2f} s"


# 6 --------------------------------------------------------------------------------------

def _schur_22_coefficient(poly):
    """Integral over G(2,4): coefficient of s_(2,2), read off (a - b) f at a^3 b^2."""
    return poly.get((2, 2), 0) - poly.get((3, 1), 0)


def criterion_6():
    got = chow.integrate(chow.chern(parse_bundle("Sym3(Q)"), 4)[4], 4)
    # independent route: c_4 = prod over the roots 3a, 2a+b, a+2b, 3b
    prod = Counter({(0, 0): 1})
    for u, v in [(3, 0), (2, 1), (1, 2), (0, 3)]:
        nxt = Counter()
        for (i, j), c in prod.items():
            nxt[(i + 1, j)] += c * u
            nxt[(i, j + 1)] += c * v
        prod = nxt
    oracle = _schur_22_coefficient(prod)
    return got == oracle == 27, f"Schubert calculus {got}, root-product oracle {oracle}"


# 7 --------------------------------------------------------------------------------------

def criterion_7():
    gamma = Space.incidence(6)
    omega = (-7, -5, 0, 0, 0, 0)
    rnd = random.Random(20240601)
    bad = 0
    for _ in range(500):
        mu = sorted((rnd.randint(-10, 10) for _ in range(4)), reverse=True)
        lam = (rnd.randint(-10, 10), rnd.randint(-10, 10), *mu)
        dual = (-lam[0], -lam[1]) + tuple(-m for m in reversed(lam[2:]))
        h = line_cohomology(gamma, lam)
        hd = line_cohomology(gamma, tuple(a + b for a, b in zip(dual, omega)))
        bad += any(h[i] != hd[9 - i] for i in range(10))
    return bad == 0, f"500 seeded bundles, violations: {bad}"


# 8 --------------------------------------------------------------------------------------

_UNIMODULAR = [[[1]], [[1, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 0], [0, -1]],
               [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
               [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
               [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]]


def _unimodular_change(n, rnd):
    u = lattice.identity(n)
    for _ in range(10):
        if n == 1:
            break
        i, j = rnd.sample(range(n), 2)
        f = rnd.randint(-2, 2)
        for r in range(n):
            u[r][j] += f * u[r][i]
    return u


def criterion_8():
    rnd = random.Random(8)
    glue_ok = 0
    done = 0
    while done < 200:
        base = rnd.choice(_UNIMODULAR)
        n = len(base)
        u = _unimodular_change(n, rnd)
        gram = lattice.matmul(lattice.matmul(lattice.transpose(u), base), u)
        w = _unimodular_change(n, rnd)
        k = rnd.randint(1, n)
        vectors = [[w[r][c] for r in range(n)] for c in range(k)]
        sub = lattice.matmul(lattice.matmul(vectors, gram), lattice.transpose(vectors))
        if lattice.det(sub) == 0:
            continue
        done += 1
        glue_ok += lattice.glue_verify(lattice.IntLattice.of(gram), vectors).ok
    neg = [lattice.neg_id_test(lattice.IntLattice.of([[3]]))] + [
        lattice.neg_id_test(lattice.IntLattice.of([[3, 0], [0, 2 * n]])) for n in range(2, 11)]
    excl = [lattice.exclude_order_two(lattice.MiddlePicardConfig(((3, 0), (0, 2 * n)))).excluded
            for n in range(2, 11)]
    ok = glue_ok == 200 and not any(neg) and all(excl)
    return ok, (f"glue {glue_ok}/200, Id = -Id on A anywhere: {any(neg)}, "
                f"order two excluded for n=2..10: {sum(excl)}/9")


# 9 --------------------------------------------------------------------------------------

def criterion_9():
    c1, c2 = lattice.classify_aut(1), lattice.classify_aut(2)
    external = {e.m for e in c1.trace if e.tag == lattice.TAG_EXTERNAL and e.event == "removed"}
    flagged = {e.m for e in c1.trace if e.event == "flagged" and e.tag == lattice.TAG_OPEN}
    ok = (list(c1.final) == [1, 3] and list(c2.final) == [1] and external >= {23, 46}
          and flagged == {4, 6})
    return ok, (f"rank 1 final {list(c1.final)}, rank 2 final {list(c2.final)}, "
                f"external {sorted(external)}, flagged open {sorted(flagged)}")


# 10 -------------------------------------------------------------------------------------

def criterion_10():
    start = time.perf_counter()
    r = monodromy.local_monodromy()
    order3 = monodromy.has_order_three(r)
    d_w, d_w2 = monodromy.eigenbasis(r)
    eig = (monodromy.matvec(r, d_w) == tuple(monodromy.OMEGA * x for x in d_w)
           and monodromy.matvec(r, d_w2) == tuple(monodromy.OMEGA2 * x for x in d_w2))
    dims = []
    for m in range(1, 9):
        rep = monodromy.build_global(m)
        if not all(monodromy.has_order_three([list(row) for row in g]) for g in rep.ops):
            order3 = False
        dec = monodromy.decompose_rep(rep)
        dims.append((len(dec.h_omega), len(dec.h_omega2), dec.complete))
    runs = monodromy.closure_trials(1000, 0, range(1, 9))
    secs = time.perf_counter() - start
    ok = (order3 and eig and dims == [(m, m, True) for m in range(1, 9)]
          and all(t.ok for t in runs) and secs < 10)
    return ok, (f"order 3: {order3}, eigenlines: {eig}, dims {[d[:2] for d in dims]}, "
                f"closures {sum(t.ok for t in runs)}/1000, {secs:.2f} s")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    assert record(number, ok, detail, capsys), RESULTS[number]


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        record(i, ok, detail)
        print(RESULTS[i])

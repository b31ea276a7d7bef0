"""Exact-value suites run alongside the ledgers by ``cubiclab verify``."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from . import chow, lattice, monodromy
from .bundles import parse_bundle
from .cohom import fano_cotangent_sections, fano_structure_sheaf


@dataclass(frozen=True)
class Check:
    """One computed value; ``expected`` is None for values that are only reported."""

    name: str
    got: Any
    expected: Any = None
    source: str = "stated"

    @property
    def ok(self) -> bool:
        return self.expected is None or self.got == self.expected

    def to_json(self) -> dict:
        out = {"name": self.name, "got": self.got, "source": self.source, "ok": self.ok}
        if self.expected is not None:
            out["expected"] = self.expected
        return out


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: Tuple[Check, ...]
    details: Dict[str, Any]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self, timing: bool = True) -> dict:
        out = {"name": self.name, "ok": self.ok, "checks": [c.to_json() for c in self.checks],
               "details": self.details}
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


def koszul_suite(_cfg=None) -> Tuple[List[Check], dict]:
    f4 = fano_structure_sheaf(6)
    f3 = fano_structure_sheaf(5)
    omega, omega_status = fano_cotangent_sections(6)
    checks = [
        Check("h^1(O_F), cubic fourfold", f4.table[1], 0),
        Check("h^2(O_F), cubic fourfold", f4.table[2], 1),
        Check("h^3(O_F), cubic fourfold", f4.table[3], 0),
        Check("h^0(Omega^1_F), cubic fourfold", omega, 0),
        Check("status of h^1, h^2, h^3 and h^0(Omega^1)",
              [f4.degree_status[1].value, f4.degree_status[2].value, f4.degree_status[3].value,
               omega_status.value], ["exact"] * 4),
        Check("h^4(O_F), cubic fourfold", f4.table[4], 1, "derived"),
        Check("chi(O_F), cubic fourfold", f4.euler, 3, "derived"),
        Check("h^1(O_S), cubic threefold", f3.table[1], 5),
        Check("status of h^1(O_S)", f3.degree_status[1].value, "exact"),
    ]
    return checks, {"fano_cubic4": f4.to_json(), "fano_cubic3": f3.to_json()}


def chow_suite(_cfg=None) -> Tuple[List[Check], dict]:
    s3 = chow.chern(parse_bundle("Sym3(Q)"), 4)
    line_count = chow.integrate(s3[4], 4)
    h01 = fano_structure_sheaf(5).table[1]
    b1 = 2 * h01
    chi5 = chow.chi_top_fano(5)
    b2 = chow.betti_from_chi(chi5, b1)
    chi6 = chow.chi_top_fano(6)
    checks = [
        Check("lines on a cubic surface, integral of c_4(Sym3 Q) on G(2,4)", line_count, 27, "derived"),
        Check("chi_top of the Fano surface", chi5, 27),
        Check("b_1 of the Fano surface", b1, 10),
        Check("b_2 of the Fano surface", b2, 45),
        Check("alternating Betti sum 1-b1+b2-b3+b4", 1 - b1 + b2 - b1 + 1, 27),
        Check("chi_top of the Fano variety of a cubic fourfold", chi6, None, "derived"),
        Check("chi_top for n = 4", chow.chi_top_fano(4), 27, "derived"),
        Check("Riemann-Roch on the surface, (6, 2)", chow.rr_surface(6, 2), 5),
    ]
    return checks, {"c_Sym3Q_G24": [str(c) for c in s3], "betti": [1, b1, b2, b1, 1]}


def lattice_suite(cfg=None) -> Tuple[List[Check], dict]:
    ext = True if cfg is None else cfg.external_exclusions
    disc = True if cfg is None else cfg.discriminant_exclusions
    c1 = lattice.classify_aut(1, ext, disc)
    c2 = lattice.classify_aut(2, ext, disc)
    flagged = sorted({e.m for e in c1.trace if e.event == "flagged"})
    excl = [lattice.exclude_order_two(lattice.MiddlePicardConfig(((3, 0), (0, 2 * n)))).excluded
            for n in range(2, 11)]
    boundary = lattice.exclude_order_two(lattice.MiddlePicardConfig(((3, 0), (0, 2)))).excluded
    checks = [
        Check("Id != -Id on A for (3)", lattice.neg_id_test(lattice.IntLattice.of([[3]])), False),
        Check("Id != -Id on A for (3)+(2n), n in 2..10",
              [lattice.neg_id_test(lattice.IntLattice.of([[3, 0], [0, 2 * n]])) for n in range(2, 11)],
              [False] * 9),
        Check("order two excluded for (3)+(2n), n in 2..10", excl, [True] * 9),
        Check("order two on (3)+(2), outside n >= 2", boundary, False, "derived"),
        Check("flagged preimage entries (rank 1)", flagged, [4, 6], "derived"),
    ]
    if ext and disc:
        checks += [Check("Aut orders, middle Picard rank 1", list(c1.final), [1, 3]),
                   Check("Aut orders, middle Picard rank 2", list(c2.final), [1])]
    else:
        checks += [Check("Aut orders, middle Picard rank 1", list(c1.final), None, "derived"),
                   Check("Aut orders, middle Picard rank 2", list(c2.final), None, "derived")]
    return checks, {"rank1": c1.to_json(), "rank2": c2.to_json()}


def monodromy_suite(cfg=None) -> Tuple[List[Check], dict]:
    points = 8 if cfg is None else cfg.monodromy_points
    trials = 1000 if cfg is None else cfg.monodromy_trials
    seed = 0 if cfg is None else cfg.seed
    r = monodromy.local_monodromy()
    d_w, d_w2 = monodromy.eigenbasis(r)
    dims = []
    complete = []
    for m in range(1, points + 1):
        dec = monodromy.decompose_rep(monodromy.build_global(m))
        dims.append([len(dec.h_omega), len(dec.h_omega2)])
        complete.append(dec.complete)
    runs = monodromy.closure_trials(trials, seed, range(1, points + 1))
    hist: Dict[str, int] = {}
    for t in runs:
        key = "both" if t.contains_omega and t.contains_omega2 else (
            "omega" if t.contains_omega else "omega2" if t.contains_omega2 else "neither")
        hist[key] = hist.get(key, 0) + 1
    checks = [
        Check("r^3 = Id and r != Id", monodromy.has_order_three(r), True),
        Check("characteristic polynomial of r", list(monodromy.char_poly_2x2(r)), [1, 1, 1]),
        Check("eigenlines", [str(x) for x in d_w + d_w2], None, "derived"),
        Check("invariant subspace dimensions, m = 1..%d" % points, dims,
              [[m, m] for m in range(1, points + 1)]),
        Check("complete reducibility, m = 1..%d" % points, complete, [True] * points),
        Check("random closures containing an eigen-part", sum(t.ok for t in runs), trials),
    ]
    return checks, {"local_monodromy": r, "closure_histogram": dict(sorted(hist.items())),
                    "trials": trials, "seed": seed}


SUITE_FUNCTIONS: Dict[str, Callable] = {
    "koszul": koszul_suite, "chow": chow_suite, "lattice": lattice_suite,
    "monodromy": monodromy_suite,
}


def run_suite(name: str, cfg=None) -> SuiteResult:
    start = time.perf_counter()
    checks, details = SUITE_FUNCTIONS[name](cfg)
    return SuiteResult(name, tuple(checks), details, time.perf_counter() - start)

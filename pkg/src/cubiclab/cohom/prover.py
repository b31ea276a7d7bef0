"""Vanishing prover, Euler characteristics and the ledger verifier.

The prover works on the associated graded of a bundle. If every graded
piece has zero cohomology in a degree, the filtration spectral sequence
forces the bundle's cohomology there to vanish as well. A nonzero piece
proves nothing on its own, because differentials may cancel it, so the
answer in that case is ``Inconclusive`` with a reproducible witness.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

from ..bbw import CohomTable, Interval, Space, Status, line_cohomology, symbolic_line_cohomology
from ..bundles import BundleExpr, character, check_symbols, free_params, is_split
from ..bundles.character import split_character
from ..weights import Weight
from .claims import Dimension, VanishClaim


@dataclass(frozen=True)
class Witness:
    """Parameter values, graded piece, degree and dimension of a nonzero entry.

    ``exact`` is true when the entry is known to survive to the bundle's own
    cohomology: either the bundle is split, or no other entry sits in an
    adjacent degree. ``total`` is the full graded contribution in that degree.
    """

    params: Tuple[Tuple[str, int], ...]
    weight: Weight
    degree: int
    dimension: int
    total: int
    exact: bool

    def to_json(self) -> dict:
        return {"params": dict(self.params), "weight": list(self.weight), "degree": self.degree,
                "dimension": self.dimension, "total": self.total, "exact": self.exact}


@dataclass(frozen=True)
class Proven:
    def to_json(self) -> dict:
        return {"verdict": "Proven"}


@dataclass(frozen=True)
class Refuted:
    witness: Witness

    def to_json(self) -> dict:
        return {"verdict": "Refuted", "witness": self.witness.to_json()}


@dataclass(frozen=True)
class Inconclusive:
    witness: Witness

    def to_json(self) -> dict:
        return {"verdict": "Inconclusive", "witness": self.witness.to_json()}


Verdict = Union[Proven, Refuted, Inconclusive]


# -- graded cohomology ----------------------------------------------------------------

@dataclass(frozen=True)
class BundleCohomology:
    """Cohomology of an expression computed through its graded pieces.

    ``table`` holds the graded totals; a degree is listed in ``exact_degrees``
    when that total is the true dimension.
    """

    table: CohomTable
    exact_degrees: FrozenSet[int]
    pieces: Tuple[Tuple[Weight, int, CohomTable], ...]
    split: bool


def bundle_cohomology(expr: BundleExpr, space: Space,
                      env: Optional[Mapping[str, int]] = None) -> BundleCohomology:
    check_symbols(expr, space)
    split = is_split(expr, space)
    pieces = []
    totals: Dict[int, int] = {}
    for w, m in split_character(character(expr, space, env), space):
        table = line_cohomology(space, w)
        pieces.append((w, m, table))
        for q, d in table.dims.items():
            totals[q] = totals.get(q, 0) + m * d
    exact = frozenset(q for q in range(space.dim + 1)
                      if split or not (totals.get(q - 1) or totals.get(q + 1)))
    status = Status.EXACT if all(q in exact for q in totals) else Status.UPPER_BOUND
    return BundleCohomology(CohomTable(totals, status), exact, tuple(pieces), split)


def euler_char(expr: BundleExpr, space: Space, env: Optional[Mapping[str, int]] = None) -> int:
    """Euler characteristic; exact whatever the extensions, since it is additive."""
    total = 0
    for w, m in split_character(character(expr, space, env), space):
        total += m * line_cohomology(space, w).euler()
    return total


# -- the prover -------------------------------------------------------------------------

def _shift(char, slope, k):
    return {tuple(a + k * b for a, b in zip(w, slope)): c for w, c in char.items()}


def affine_pieces(expr: BundleExpr, space: Space, env: Mapping[str, int],
                  name: str) -> Tuple[List[Tuple[Weight, int]], Weight]:
    """Graded pieces at ``name = 0`` and the common slope in ``name``.

    Raises when the character is not a pure translate in the parameter.
    """
    c0 = character(expr, space, {**env, name: 0})
    zero = (0,) * space.rank
    if not c0:
        return [], zero
    c1 = character(expr, space, {**env, name: 1})
    slope = tuple(a - b for a, b in zip(max(c1), max(c0)))
    for k in (1, -1, 2):
        ck = c1 if k == 1 else character(expr, space, {**env, name: k})
        if ck != _shift(c0, slope, k):
            raise ValueError(f"non-affine dependence on parameter {name!r}")
    return split_character(c0, space), slope


def _assignments(claim: VanishClaim, names: Sequence[str]):
    ranges = []
    for name in names:
        vals: List[int] = []
        for iv in claim.param_domains[name]:
            vals.extend(iv.values())
        ranges.append(sorted(set(vals)))
    for combo in product(*ranges):
        yield dict(zip(names, combo))


def vanish_check(claim: VanishClaim) -> Verdict:
    """Decide a claim by graded domination over the whole parameter domain."""
    space = claim.space
    degrees = claim.degrees.resolve(space.dim)
    if not degrees:
        return Proven()
    params = sorted(free_params(claim.expr))
    unbounded = [p for p in params if not all(iv.is_finite() for iv in claim.param_domains[p])]
    if len(unbounded) > 1:
        raise ValueError(f"claim {claim.id}: more than one unbounded parameter {unbounded}")
    bounded = [p for p in params if p not in unbounded]
    if isinstance(claim.expect, Dimension):
        if unbounded:
            raise ValueError(f"claim {claim.id}: dimension claims need bounded parameters")
        return _dimension_check(claim, bounded, degrees)
    for env in _assignments(claim, bounded):
        if unbounded:
            hit = _symbolic_hit(claim, env, unbounded[0], degrees)
        else:
            hit = _concrete_hit(claim, env, degrees)
        if hit is not None:
            return Inconclusive(hit)
    return Proven()


def _witness(claim: VanishClaim, env: Dict[str, int], degree: int, weight: Weight,
             dimension: int) -> Witness:
    coh = bundle_cohomology(claim.expr, claim.space, env)
    return Witness(tuple(sorted(env.items())), tuple(weight), degree, dimension,
                   coh.table[degree], degree in coh.exact_degrees)


def _concrete_hit(claim: VanishClaim, env: Dict[str, int], degrees) -> Optional[Witness]:
    coh = bundle_cohomology(claim.expr, claim.space, env)
    for w, m, table in coh.pieces:
        for q, d in table.dims.items():
            if q in degrees:
                return Witness(tuple(sorted(env.items())), w, q, m * d, coh.table[q],
                               q in coh.exact_degrees)
    return None


def _symbolic_hit(claim: VanishClaim, env: Dict[str, int], name: str,
                  degrees) -> Optional[Witness]:
    pieces, slope = affine_pieces(claim.expr, claim.space, env, name)
    best = None
    for w, m in pieces:
        verdict = symbolic_line_cohomology(claim.space, w, slope, claim.param_domains[name])
        for seg in verdict.intervals:
            if seg.degree in degrees:
                t = seg.interval.sample()
                key = (abs(t), t)
                if best is None or key < best[0]:
                    piece = tuple(a + t * b for a, b in zip(w, slope))
                    best = (key, t, piece, seg.degree, m * seg.dimension(t))
    if best is None:
        return None
    _, t, piece, degree, dim = best
    return _witness(claim, {**env, name: t}, degree, piece, dim)


def _dimension_check(claim: VanishClaim, bounded: List[str], degrees) -> Verdict:
    want = claim.expect.d
    pending: Optional[Witness] = None
    for env in _assignments(claim, bounded):
        coh = bundle_cohomology(claim.expr, claim.space, env)
        for q in sorted(degrees):
            got = coh.table[q]
            if got == want and q in coh.exact_degrees:
                continue
            weight = next((w for w, _, t in coh.pieces if t[q]), (0,) * claim.space.rank)
            wit = Witness(tuple(sorted(env.items())), weight, q, got, got, q in coh.exact_degrees)
            if wit.exact:
                return Refuted(wit)
            pending = pending or wit
    return Inconclusive(pending) if pending else Proven()


# -- batch verification -----------------------------------------------------------------

@dataclass(frozen=True)
class ClaimResult:
    id: str
    ref: str
    space: str
    bundle: str
    params: str
    degrees: str
    expect: str
    verdict: Optional[Verdict]
    seconds: float
    error: Optional[str] = None

    @property
    def proven(self) -> bool:
        return isinstance(self.verdict, Proven)

    def to_json(self, timing: bool = True) -> dict:
        out = {"id": self.id, "ref": self.ref, "space": self.space, "bundle": self.bundle,
               "params": self.params, "degrees": self.degrees, "expect": self.expect}
        if self.error is not None:
            out["verdict"] = "Error"
            out["error"] = self.error
        else:
            out.update(self.verdict.to_json())
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass(frozen=True)
class LedgerReport:
    results: Tuple[ClaimResult, ...] = field(default_factory=tuple)

    @property
    def all_proven(self) -> bool:
        return all(r.proven for r in self.results)

    def counts(self) -> Dict[str, int]:
        out = {"Proven": 0, "Refuted": 0, "Inconclusive": 0, "Error": 0}
        for r in self.results:
            key = "Error" if r.error is not None else type(r.verdict).__name__
            out[key] += 1
        return out


def check_one(claim: VanishClaim) -> ClaimResult:
    start = time.perf_counter()
    try:
        verdict, error = vanish_check(claim), None
    except Exception as exc:  # collected per claim, never aborts the batch
        verdict, error = None, f"{type(exc).__name__}: {exc}"
    return ClaimResult(claim.id, claim.ref, claim.space.ident, str(claim.expr),
                       claim.params_text(), str(claim.degrees), str(claim.expect),
                       verdict, time.perf_counter() - start, error)


def verify_ledger(claims: Sequence[VanishClaim], jobs: int = 1) -> LedgerReport:
    """Check every claim; results are ordered by claim id whatever the schedule."""
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if jobs == 1 or len(claims) < 2:
        results = [check_one(c) for c in claims]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_one, claims))
    return LedgerReport(tuple(sorted(results, key=lambda r: r.id)))

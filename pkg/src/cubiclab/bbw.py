"""Borel-Weil-Bott on P^n, G(2,n) and the point-line incidence flag.

Every space is a partial flag variety GL(N)/P described by its block sizes.
A weight is block-dominant when it is non-increasing inside each block, and
the cohomology of the corresponding irreducible bundle is read off from
``rho_sort`` and the Weyl dimension of the full group.
"""
from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, prod
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .weights import Regular, Weight, rho_sort, weyl_dimension


# -- spaces ------------------------------------------------------------------

@dataclass(frozen=True)
class Space:
    """A partial flag variety of GL(rank).

    ``kind`` is one of ``"P"`` (projective space P^n, blocks (1, n)),
    ``"G"`` (Grassmannian of rank-2 quotients of an n-space, blocks (2, n-2))
    and ``"Gamma"`` (point-line incidence in P^(n-1) x G(2,n), blocks
    (1, 1, n-2)).
    """

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("P", "G", "Gamma"):
            raise ValueError(f"unknown space kind {self.kind!r}")
        low = {"P": 1, "G": 3, "Gamma": 3}[self.kind]
        if self.n < low:
            raise ValueError(f"{self.kind}{self.n}: n too small")

    @classmethod
    def projective(cls, n: int) -> "Space":
        return cls("P", n)

    @classmethod
    def grassmannian(cls, n: int) -> "Space":
        return cls("G", n)

    @classmethod
    def incidence(cls, n: int) -> "Space":
        return cls("Gamma", n)

    @classmethod
    def parse(cls, ident: str) -> "Space":
        """Parse identifiers such as ``P5``, ``G26`` or ``Gamma6``."""
        text = ident.strip()
        m = re.fullmatch(r"P(\d+)", text)
        if m:
            return cls.projective(int(m.group(1)))
        m = re.fullmatch(r"G2(\d+)", text)
        if m:
            return cls.grassmannian(int(m.group(1)))
        m = re.fullmatch(r"Gamma(\d+)", text)
        if m:
            return cls.incidence(int(m.group(1)))
        raise ValueError(f"unknown space identifier {ident!r}")

    @property
    def ident(self) -> str:
        return {"P": "P", "G": "G2", "Gamma": "Gamma"}[self.kind] + str(self.n)

    @property
    def rank(self) -> int:
        """Dimension of the underlying vector space."""
        return self.n + 1 if self.kind == "P" else self.n

    @property
    def blocks(self) -> Tuple[int, ...]:
        if self.kind == "P":
            return (1, self.n)
        if self.kind == "G":
            return (2, self.n - 2)
        return (1, 1, self.n - 2)

    @property
    def dim(self) -> int:
        b = self.blocks
        return sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))

    def block_slices(self) -> List[slice]:
        out, start = [], 0
        for size in self.blocks:
            out.append(slice(start, start + size))
            start += size
        return out

    def is_block_dominant(self, weight: Sequence[int]) -> bool:
        if len(weight) != self.rank:
            return False
        for sl in self.block_slices():
            part = weight[sl]
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                return False
        return True

    def __str__(self) -> str:
        return self.ident


# -- cohomology tables ---------------------------------------------------------

class Status(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"


@dataclass
class CohomTable:
    """Degree -> dimension. Missing degrees are zero."""

    dims: Dict[int, int] = field(default_factory=dict)
    status: Status = Status.EXACT

    def __post_init__(self):
        self.dims = {int(k): int(v) for k, v in sorted(self.dims.items()) if v}

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def euler(self) -> int:
        return sum((-1) ** q * d for q, d in self.dims.items())

    def is_zero(self) -> bool:
        return not self.dims

    def to_json(self) -> dict:
        return {"dims": {str(k): v for k, v in self.dims.items()}, "status": self.status.value}


# -- memo / pluggable persistent cache --------------------------------------------

_MEMO: Dict[Tuple[str, Weight], CohomTable] = {}
_MEMO_LOCK = threading.Lock()
_STORE = None


def set_store(store) -> None:
    """Install a persistent cache with ``get(key)`` / ``put(key, table)`` methods."""
    global _STORE
    _STORE = store


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


def line_cohomology(space: Space, weight: Sequence[int]) -> CohomTable:
    """Cohomology of the irreducible homogeneous bundle with highest weight ``weight``."""
    weight = tuple(int(w) for w in weight)
    if not space.is_block_dominant(weight):
        raise ValueError(f"weight {weight} is not block-dominant on {space}")
    key = (space.ident, weight)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    table = _STORE.get(key) if _STORE is not None else None
    if table is None:
        table = _bbw(weight)
        if _STORE is not None:
            _STORE.put(key, table)
    with _MEMO_LOCK:
        _MEMO[key] = table
    return table


def _bbw(weight: Weight) -> CohomTable:
    res = rho_sort(weight)
    if not isinstance(res, Regular):
        return CohomTable({})
    return CohomTable({res.degree: weyl_dimension(res.dominant)})


def projective_weight(n: int, p: int, k: int) -> Weight:
    """Weight of Omega^p(k) on P^n in the (1, n) flag convention."""
    return (k - p,) + (1,) * p + (0,) * (n - p)


def bott_formula(n: int, p: int, k: int) -> CohomTable:
    """Closed-form Bott table for H^q(P^n, Omega^p(k))."""
    if not 0 <= p <= n:
        raise ValueError("need 0 <= p <= n")
    if k > p:
        return CohomTable({0: comb(k + n - p, k) * comb(k - 1, p)})
    if k == 0:
        return CohomTable({p: 1})
    if k < p - n:
        return CohomTable({n: comb(-k + p, -k) * comb(-k - 1, n - p)})
    return CohomTable({})


# -- one-parameter families ----------------------------------------------------

@dataclass(frozen=True, order=True)
class Interval:
    """Integer interval; ``None`` marks an unbounded end."""

    lo: Optional[int] = None
    hi: Optional[int] = None

    def is_empty(self) -> bool:
        return self.lo is not None and self.hi is not None and self.lo > self.hi

    def is_finite(self) -> bool:
        return self.lo is not None and self.hi is not None

    def __contains__(self, t: int) -> bool:
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def intersect(self, other: "Interval") -> "Interval":
        lo = other.lo if self.lo is None else self.lo if other.lo is None else max(self.lo, other.lo)
        hi = other.hi if self.hi is None else self.hi if other.hi is None else min(self.hi, other.hi)
        return Interval(lo, hi)

    def values(self) -> Iterator[int]:
        if not self.is_finite():
            raise ValueError("cannot enumerate an unbounded interval")
        return iter(range(self.lo, self.hi + 1))

    def sample(self) -> int:
        """Deterministic representative: the member closest to zero."""
        if 0 in self:
            return 0
        if self.lo is not None and self.lo > 0:
            return self.lo
        return self.hi

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


ALL = Interval(None, None)


@dataclass(frozen=True)
class DimPoly:
    """Product of affine factors (c0 + c1 t) divided by ``den``."""

    factors: Tuple[Tuple[int, int], ...]
    den: int

    def __call__(self, t: int) -> int:
        return prod(c0 + c1 * t for c0, c1 in self.factors) // self.den

    def coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients in increasing powers of t."""
        poly = [Fraction(1)]
        for c0, c1 in self.factors:
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, a in enumerate(poly):
                nxt[i] += a * c0
                nxt[i + 1] += a * c1
            poly = nxt
        poly = [c / self.den for c in poly]
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        return tuple(poly)


@dataclass(frozen=True)
class Segment:
    """A stretch of the parameter line with a constant cohomology pattern.

    ``degree`` is None when everything vanishes; otherwise the bundle has
    cohomology only in ``degree`` with dimension ``dimension(t)``.
    """

    interval: Interval
    degree: Optional[int]
    dimension: Optional[DimPoly]


@dataclass(frozen=True)
class ParamVerdict:
    intervals: Tuple[Segment, ...]
    complete: bool = True

    def degrees(self) -> set:
        return {s.degree for s in self.intervals if s.degree is not None}

    def at(self, t: int) -> CohomTable:
        for seg in self.intervals:
            if t in seg.interval:
                if seg.degree is None:
                    return CohomTable({})
                return CohomTable({seg.degree: seg.dimension(t)})
        raise ValueError(f"t={t} outside the queried domain")


def _regions(critical: Iterable[Fraction]) -> List[Interval]:
    """Integer regions cut out by the critical parameter values."""
    cs = sorted(set(critical))
    out: List[Interval] = []
    prev: Optional[Fraction] = None
    for c in cs + [None]:
        lo = None if prev is None else (prev.numerator // prev.denominator) + 1
        if c is None:
            hi = None
        else:
            hi = -((-c.numerator) // c.denominator) - 1
        region = Interval(lo, hi)
        if not region.is_empty():
            out.append(region)
        if c is not None and c.denominator == 1:
            out.append(Interval(int(c), int(c)))
        prev = c
    return out


def symbolic_line_cohomology(space: Space, base: Sequence[int], direction: Sequence[int],
                             domain: Sequence[Interval] = (ALL,)) -> ParamVerdict:
    """Cohomology of the weight ``base + t * direction`` for every integer t in ``domain``.

    The answer is exact on the whole (possibly unbounded) domain: the order of
    the rho-shifted entries only changes at finitely many critical values of t,
    and between them the degree is constant and the dimension is polynomial.
    """
    n = space.rank
    base = tuple(base)
    direction = tuple(direction)
    if len(base) != n or len(direction) != n:
        raise ValueError("weight length does not match the space")
    if any(d not in (-1, 0, 1) for d in direction):
        raise ValueError("parameter coefficients must lie in {-1, 0, 1}")
    for sl in space.block_slices():
        if len(set(direction[sl])) > 1:
            raise ValueError("parameter must enter each block uniformly")
    if isinstance(domain, Interval):
        domain = (domain,)
    b = [base[i] + n - 1 - i for i in range(n)]
    critical = [Fraction(b[j] - b[i], direction[i] - direction[j])
                for i in range(n) for j in range(i + 1, n) if direction[i] != direction[j]]
    segments: List[Segment] = []
    for region in _regions(critical):
        parts = [region.intersect(d) for d in domain]
        parts = [p for p in parts if not p.is_empty()]
        if not parts:
            continue
        t0 = region.sample()
        if not space.is_block_dominant([base[i] + t0 * direction[i] for i in range(n)]):
            raise ValueError(f"weight is not block-dominant at t={t0}")
        values = [b[i] + direction[i] * t0 for i in range(n)]
        if len(set(values)) < n:
            pattern: Tuple[Optional[int], Optional[DimPoly]] = (None, None)
        else:
            degree = sum(1 for i in range(n) for j in range(i + 1, n) if values[i] < values[j])
            order = sorted(range(n), key=lambda i: -values[i])
            dc = [b[i] for i in order]
            dd = [direction[i] for i in order]
            factors = tuple((dc[i] - dc[j], dd[i] - dd[j])
                            for i in range(n) for j in range(i + 1, n))
            den = prod(j - i for i in range(n) for j in range(i + 1, n))
            pattern = (degree, DimPoly(factors, den))
        for p in parts:
            segments.append(Segment(p, *pattern))
    segments.sort(key=lambda s: (s.interval.lo is not None, s.interval.lo if s.interval.lo is not None else 0))
    return ParamVerdict(tuple(segments))

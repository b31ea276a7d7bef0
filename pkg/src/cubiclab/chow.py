"""Chern classes and integration on the Grassmannian G(2,n).

Classes are polynomials in c1 = c1(Q) and c2 = c2(Q) for the rank-2 bundle Q.
The Chow ring is Z[c1, c2] modulo h_(n-1) and h_n, where h_k is the degree-k
complete symmetric polynomial in the Chern roots a, b of Q; these are the
vanishing Chern classes of the rank n-2 bundle complementary to Q.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Mapping, Sequence, Tuple

from .bbw import Space
from .bundles import BundleExpr, character, check_symbols, symbols

Poly2 = Dict[Tuple[int, int], Fraction]  # a^i b^j -> coefficient
_Q_ONLY = frozenset({"Q", "O", "E"})


# -- two-variable polynomials in the Chern roots --------------------------------------

def _pmul(f: Poly2, g: Poly2) -> Poly2:
    out: Poly2 = {}
    for (i, j), c in f.items():
        for (k, l), d in g.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _padd(f: Poly2, g: Poly2, scale=1) -> Poly2:
    out = dict(f)
    for k, v in g.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def _pdeg(f: Poly2, d: int) -> Poly2:
    return {k: v for k, v in f.items() if k[0] + k[1] == d}


def _ppow(f: Poly2, k: int) -> Poly2:
    out: Poly2 = {(0, 0): Fraction(1)}
    for _ in range(k):
        out = _pmul(out, f)
    return out


_A: Poly2 = {(1, 0): Fraction(1)}
_B: Poly2 = {(0, 1): Fraction(1)}
_C1: Poly2 = {(1, 0): Fraction(1), (0, 1): Fraction(1)}
_C2: Poly2 = {(1, 1): Fraction(1)}


# -- Chow classes ---------------------------------------------------------------------

@dataclass(frozen=True)
class ChowClass:
    """Polynomial in c1, c2 on G(2,n); ``coeffs`` maps (p, q) to the coefficient of c1^p c2^q."""

    n: int
    coeffs: Tuple[Tuple[Tuple[int, int], Fraction], ...]

    @classmethod
    def from_dict(cls, n: int, coeffs: Mapping[Tuple[int, int], Fraction]) -> "ChowClass":
        clean = tuple(sorted((k, Fraction(v)) for k, v in coeffs.items() if v))
        return cls(n, clean)

    @classmethod
    def c1(cls, n: int) -> "ChowClass":
        return cls.from_dict(n, {(1, 0): 1})

    @classmethod
    def c2(cls, n: int) -> "ChowClass":
        return cls.from_dict(n, {(0, 1): 1})

    @classmethod
    def one(cls, n: int) -> "ChowClass":
        return cls.from_dict(n, {(0, 0): 1})

    def as_dict(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self.coeffs)

    def degrees(self) -> set:
        return {p + 2 * q for (p, q), _ in self.coeffs}

    def part(self, d: int) -> "ChowClass":
        return ChowClass.from_dict(self.n, {k: v for k, v in self.coeffs if k[0] + 2 * k[1] == d})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._same(other)
        out = self.as_dict()
        for k, v in other.coeffs:
            out[k] = out.get(k, 0) + v
        return ChowClass.from_dict(self.n, out)

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + other.scale(-1)

    def __mul__(self, other) -> "ChowClass":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same(other)
        out: Dict[Tuple[int, int], Fraction] = {}
        for (p, q), c in self.coeffs:
            for (r, s), d in other.coeffs:
                key = (p + r, q + s)
                out[key] = out.get(key, 0) + c * d
        return ChowClass.from_dict(self.n, out).truncate()

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowClass":
        out = ChowClass.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "ChowClass":
        return ChowClass.from_dict(self.n, {k: c * v for k, v in self.coeffs})

    def truncate(self) -> "ChowClass":
        top = 2 * (self.n - 2)
        return ChowClass.from_dict(self.n, {k: v for k, v in self.coeffs if k[0] + 2 * k[1] <= top})

    def reduced(self) -> "ChowClass":
        """Normal form modulo the relation ideal, degree by degree."""
        out: Dict[Tuple[int, int], Fraction] = {}
        for d in sorted(self.degrees()):
            out.update(_reduce_degree(self.part(d).as_dict(), self.n, d))
        return ChowClass.from_dict(self.n, out)

    def equivalent(self, other: "ChowClass") -> bool:
        return (self - other).reduced().is_zero()

    def roots_polynomial(self) -> Poly2:
        out: Poly2 = {}
        for (p, q), c in self.coeffs:
            out = _padd(out, _pmul(_ppow(_C1, p), _ppow(_C2, q)), c)
        return out

    def _same(self, other: "ChowClass") -> None:
        if self.n != other.n:
            raise ValueError(f"classes live on G(2,{self.n}) and G(2,{other.n})")

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (p, q), c in sorted(self.coeffs, key=lambda kv: (kv[0][0] + 2 * kv[0][1], kv[0])):
            mono = "*".join(x for x in ((f"c1^{p}" if p > 1 else "c1" if p else ""),
                                        (f"c2^{q}" if q > 1 else "c2" if q else "")) if x)
            coef = str(c)
            terms.append(mono if coef == "1" and mono else f"{coef}*{mono}" if mono else coef)
        return " + ".join(terms)


def symmetric_to_chern(f: Poly2, n: int) -> ChowClass:
    """Rewrite a symmetric polynomial in the roots a, b through c1 = a+b, c2 = ab."""
    rest = {k: Fraction(v) for k, v in f.items() if v}
    out: Dict[Tuple[int, int], Fraction] = {}
    while rest:
        i, j = max(rest, key=lambda k: (k[0] + k[1], k[0]))
        c = rest[(i, j)]
        if i < j or rest.get((j, i)) != c:
            raise ValueError("polynomial is not symmetric in the Chern roots")
        out[(i - j, j)] = out.get((i - j, j), 0) + c
        rest = _padd(rest, _pmul(_ppow(_C1, i - j), _ppow(_C2, j)), -c)
    return ChowClass.from_dict(n, out).truncate()


# -- Chern classes of Q-constructions -------------------------------------------------

def chern_roots(expr: BundleExpr, n: int) -> List[Tuple[int, int]]:
    """Chern roots u*a + v*b of a bundle built from Q, as (u, v) pairs with multiplicity."""
    unsupported = symbols(expr) - _Q_ONLY
    if unsupported:
        raise ValueError(f"Chern classes only for constructions on Q; got {sorted(unsupported)}")
    space = Space.grassmannian(n)
    check_symbols(expr, space)
    out = []
    for w, m in sorted(character(expr, space).items()):
        if any(w[2:]) or m < 0:
            raise ValueError("expression is not a genuine bundle on Q")
        out.extend([(w[0], w[1])] * m)
    return out


def _total_from_roots(roots: Sequence[Tuple[int, int]], limit: int) -> Poly2:
    out: Poly2 = {(0, 0): Fraction(1)}
    for u, v in roots:
        factor = {(0, 0): Fraction(1)}
        if u:
            factor[(1, 0)] = Fraction(u)
        if v:
            factor[(0, 1)] = Fraction(v)
        out = {k: c for k, c in _pmul(out, factor).items() if k[0] + k[1] <= limit}
    return out


def chern(expr: BundleExpr, n: int) -> List[ChowClass]:
    """[c_0, ..., c_rank] of a bundle built from Q on G(2,n)."""
    roots = chern_roots(expr, n)
    total = _total_from_roots(roots, len(roots))
    return [symmetric_to_chern(_pdeg(total, d), n) for d in range(len(roots) + 1)]


def total_chern(expr: BundleExpr, n: int) -> ChowClass:
    out = ChowClass.from_dict(n, {})
    for c in chern(expr, n):
        out = out + c
    return out


# -- the tangent bundle through power sums -------------------------------------------

def _power_sum(k: int) -> Poly2:
    return _padd(_ppow(_A, k), _ppow(_B, k))


def _elementary_from_power_sums(p: Sequence[Poly2], top: int) -> List[Poly2]:
    # Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i.
    e: List[Poly2] = [{(0, 0): Fraction(1)}]
    for k in range(1, top + 1):
        acc: Poly2 = {}
        for i in range(1, k + 1):
            acc = _padd(acc, _pmul(e[k - i], p[i]), (-1) ** (i - 1))
        e.append({key: v / k for key, v in acc.items()})
    return e


def tangent_chern(n: int) -> List[ChowClass]:
    """Chern classes of T_G = Hom(S, Q) = Dual(M) (x) Q on G(2,n).

    The rank n-2 bundle M satisfies c(M) c(Q) = 1, so its power sums are
    p_0 = n-2 and p_k = -p_k(a, b) for k >= 1.
    """
    top = 2 * (n - 2)
    pm = [{(0, 0): Fraction(n - 2)}] + [{k: -v for k, v in _power_sum(k).items()}
                                        for k in range(1, top + 1)]
    pq = [{(0, 0): Fraction(2)}] + [_power_sum(k) for k in range(1, top + 1)]
    # p_k(Dual(M) (x) Q) = sum_i C(k,i) (-1)^i p_i(M) p_(k-i)(Q)
    pt: List[Poly2] = [{(0, 0): Fraction(2 * (n - 2))}]
    for k in range(1, top + 1):
        acc: Poly2 = {}
        for i in range(k + 1):
            acc = _padd(acc, _pmul(pm[i], pq[k - i]), comb(k, i) * (-1) ** i)
        pt.append(acc)
    return [symmetric_to_chern(e, n) for e in _elementary_from_power_sums(pt, top)]


# -- integration ---------------------------------------------------------------------

def complete_symmetric(n: int, k: int) -> ChowClass:
    """h_k(a, b) through h_k = c1 h_(k-1) - c2 h_(k-2), without truncation."""
    h = [{(0, 0): Fraction(1)}, {(1, 0): Fraction(1)}]
    for j in range(2, k + 1):
        nxt: Dict[Tuple[int, int], Fraction] = {}
        for (p, q), c in h[-1].items():
            nxt[(p + 1, q)] = nxt.get((p + 1, q), 0) + c
        for (p, q), c in h[-2].items():
            nxt[(p, q + 1)] = nxt.get((p, q + 1), 0) - c
        h.append(nxt)
    return ChowClass(n, tuple(sorted((key, v) for key, v in h[k].items() if v)))


def _monomials(d: int) -> List[Tuple[int, int]]:
    return [(d - 2 * q, q) for q in range(d // 2 + 1)]


@lru_cache(maxsize=None)
def _point_functional(n: int) -> Dict[Tuple[int, int], Fraction]:
    """The linear form on top-degree monomials killing the relation ideal, normalized on c2^(n-2)."""
    top = 2 * (n - 2)
    basis = _monomials(top)
    index = {m: i for i, m in enumerate(basis)}
    rows: List[List[Fraction]] = []
    for k in (n - 1, n):
        h = complete_symmetric(n, k).as_dict()
        if k > top:
            continue
        for p, q in _monomials(top - k):
            row = [Fraction(0)] * len(basis)
            for (r, s), c in h.items():
                row[index[(p + r, q + s)]] += c
            rows.append(row)
    kernel = _nullspace(rows, len(basis))
    if len(kernel) != 1:
        raise ArithmeticError(f"top degree of G(2,{n}) is not one-dimensional")
    vec = kernel[0]
    norm = vec[index[(0, n - 2)]]
    return {m: vec[i] / norm for i, m in enumerate(basis)}


def _nullspace(rows: List[List[Fraction]], width: int) -> List[List[Fraction]]:
    # Vectors v with row . v = 0 for every row.
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(width) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        out.append(v)
    return out


@lru_cache(maxsize=None)
def _ideal_echelon(n: int, d: int) -> Tuple[Tuple[int, Tuple[Fraction, ...]], ...]:
    # Reduced echelon form of the relation ideal in degree d; columns are
    # monomials c1^p c2^q ordered by decreasing power of c1.
    basis = _monomials(d)
    index = {m: i for i, m in enumerate(basis)}
    rows: List[List[Fraction]] = []
    for k in (n - 1, n):
        if k > d:
            continue
        h = complete_symmetric(n, k).as_dict()
        for p, q in _monomials(d - k):
            row = [Fraction(0)] * len(basis)
            for (r, s), c in h.items():
                row[index[(p + r, q + s)]] += c
            rows.append(row)
    out = []
    for c in range(len(basis)):
        pr = next((i for i, r in enumerate(rows) if r[c]), None)
        if pr is None:
            continue
        piv = rows.pop(pr)
        piv = [x / piv[c] for x in piv]
        rows = [[x - r[c] * y for x, y in zip(r, piv)] for r in rows]
        out = [(pc, tuple(x - v[c] * y for x, y in zip(v, piv))) for pc, v in out]
        out.append((c, tuple(piv)))
    return tuple(out)


def _reduce_degree(part: Dict[Tuple[int, int], Fraction], n: int, d: int) -> Dict[Tuple[int, int], Fraction]:
    if d > 2 * (n - 2):
        return {}
    basis = _monomials(d)
    vec = [Fraction(part.get(m, 0)) for m in basis]
    for c, row in _ideal_echelon(n, d):
        if vec[c]:
            f = vec[c]
            vec = [x - f * y for x, y in zip(vec, row)]
    return {m: v for m, v in zip(basis, vec) if v}


def integrate(cls: ChowClass, n: int = None) -> int:
    """Degree of a top-dimensional class on G(2,n)."""
    n = cls.n if n is None else n
    if n != cls.n:
        raise ValueError(f"class lives on G(2,{cls.n}), not G(2,{n})")
    top = 2 * (n - 2)
    if cls.is_zero():
        return 0
    if cls.degrees() != {top}:
        raise ValueError(f"integration needs a class of degree {top} on G(2,{n}); "
                         f"got degrees {sorted(cls.degrees())}")
    functional = _point_functional(n)
    value = sum(c * functional[k] for k, c in cls.coeffs)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral degree {value}")
    return int(value)


# -- Fano schemes of lines -----------------------------------------------------------

def _sym3_chern(n: int) -> List[ChowClass]:
    from .bundles import parse_bundle
    return chern(parse_bundle("Sym3(Q)"), n)


def _inverse_total(c: List[ChowClass], n: int) -> List[ChowClass]:
    # Graded pieces of 1/c, c_0 = 1.
    top = 2 * (n - 2)
    inv = [ChowClass.one(n)]
    for d in range(1, top + 1):
        acc = ChowClass.from_dict(n, {})
        for i in range(1, min(d, len(c) - 1) + 1):
            acc = acc - c[i] * inv[d - i]
        inv.append(acc)
    return inv


def chi_top_fano(n: int) -> int:
    """Topological Euler characteristic of the lines on a smooth cubic in P^(n-1).

    0 -> T_F -> T_G|F -> Sym3(Q)|F -> 0 gives c(T_F) = c(T_G)/c(Sym3 Q), and F
    is the zero locus of a regular section of Sym3(Q), so
    chi = integral over G of c_(dim F)(T_F) c_4(Sym3 Q).
    """
    if n < 4:
        raise ValueError("a cubic in P^(n-1) has a Fano scheme of lines only for n >= 4")
    dim_f = 2 * (n - 2) - 4
    tg = tangent_chern(n)
    s3 = _sym3_chern(n)
    inv = _inverse_total(s3, n)
    tf = ChowClass.from_dict(n, {})
    for i in range(dim_f + 1):
        tf = tf + tg[i] * inv[dim_f - i]
    return integrate(tf * s3[4], n)


def rr_surface(self_int: int, chi_o: int) -> int:
    """Riemann-Roch on a surface: chi(L) = self_int/2 + chi(O_S), with self_int = c1(L).(c1(L) - K)."""
    if self_int % 2:
        raise ValueError(f"self-intersection {self_int} must be even")
    return self_int // 2 + chi_o


def betti_from_chi(chi_top: int, b1: int) -> int:
    """b2 of a compact surface from chi_top = 2 - 2 b1 + b2."""
    return chi_top - 2 + 2 * b1

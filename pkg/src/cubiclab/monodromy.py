"""Picard-Lefschetz linear algebra over Q(omega) for A2 singularities.

Each A2 point contributes a rank-2 Milnor lattice spanned by two vanishing
cycles. Its local monodromy is the product of the two reflections and has
order 3. Gluing m such blocks gives a 2m-dimensional representation that
splits into the omega- and omega^2-eigenspace parts.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple



class Cyclo:
    """a + b*omega with omega^2 = -1 - omega, over Q."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def of(x) -> "Cyclo":
        return x if isinstance(x, Cyclo) else Cyclo(x)

    def __add__(self, o):
        o = Cyclo.of(o)
        return Cyclo(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-Cyclo.of(o))

    def __rsub__(self, o):
        return Cyclo.of(o) - self

    def __mul__(self, o):
        if isinstance(o, int):
            return Cyclo(self.a * o, self.b * o)
        o = Cyclo.of(o)
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w
        bd = self.b * o.b
        return Cyclo(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def conj(self) -> "Cyclo":
        """Image under omega -> omega^2 (complex conjugation)."""
        return Cyclo(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "Cyclo":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(omega)")
        c = self.conj()
        return Cyclo(c.a / n, c.b / n)

    def __truediv__(self, o):
        return self * Cyclo.of(o).inverse()

    def __rtruediv__(self, o):
        return Cyclo.of(o) * self.inverse()

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = Cyclo(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.b == 0 and self.a == o
        if isinstance(o, Cyclo):
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"Cyclo({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}w"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}w"


OMEGA = Cyclo(0, 1)
OMEGA2 = Cyclo(-1, -1)
ZERO = Cyclo(0)
ONE = Cyclo(1)

Vector = Tuple[Cyclo, ...]
Matrix = List[List[Cyclo]]


def vec(xs: Iterable) -> Vector:
    return tuple(Cyclo.of(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return [[Cyclo.of(x) for x in r] for r in rows]


def matvec(m: Sequence[Sequence], v: Sequence) -> Vector:
    out = []
    for row in m:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + (Cyclo.of(y) if x == 1 else Cyclo.of(y) * x)
        out.append(acc)
    return tuple(out)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((Cyclo.of(x) * y for x, y in zip(row, col)), ZERO) for col in bt] for row in a]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_eq(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    return all(Cyclo.of(x) == Cyclo.of(y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rref(rows: Sequence[Sequence]) -> Tuple[List[List[Cyclo]], List[int]]:
    """Reduced row echelon form over Q(omega) and the pivot columns."""
    m = [[Cyclo.of(x) for x in r] for r in rows]
    pivots: List[int] = []
    width = len(m[0]) if m else 0
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def kernel(m: Sequence[Sequence], width: Optional[int] = None) -> List[Vector]:
    """Basis of {x : m x = 0} over Q(omega)."""
    width = len(m[0]) if m else width
    red, pivots = rref(m) if m else ([], [])
    out = []
    for f in (c for c in range(width) if c not in pivots):
        x = [ZERO] * width
        x[f] = ONE
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        out.append(tuple(x))
    return out


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    return rank(list(basis) + [v]) == rank(basis) if basis else not any(Cyclo.of(x) for x in v)


def normalize(v: Sequence) -> Vector:
    """Scale so that the first nonzero coordinate is 1."""
    lead = next((Cyclo.of(x) for x in v if Cyclo.of(x)), None)
    if lead is None:
        return vec(v)
    inv = lead.inverse()
    return tuple(Cyclo.of(x) * inv for x in v)


# -- the local model ------------------------------------------------------------------

def milnor_number(exponents: Sequence[int]) -> int:
    """Milnor number of x_1^a_1 + ... + x_k^a_k, the product of (a_i - 1)."""
    if any(a < 2 for a in exponents):
        raise ValueError("Brieskorn-Pham exponents must be at least 2")
    out = 1
    for a in exponents:
        out *= a - 1
    return out


@dataclass(frozen=True)
class MilnorLattice:
    """Intersection form on the vanishing cycles Delta_1, Delta_2."""

    gram: Tuple[Tuple[int, int], Tuple[int, int]]

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in r) for r in self.gram)
        object.__setattr__(self, "gram", g)
        if len(g) != 2 or any(len(r) != 2 for r in g) or g[0][1] != g[1][0]:
            raise ValueError("Milnor lattice of an A2 point is a symmetric 2x2 form")
        if self.det == 0:
            raise ValueError("Milnor lattice must be nondegenerate")

    @property
    def det(self) -> int:
        return self.gram[0][0] * self.gram[1][1] - self.gram[0][1] * self.gram[1][0]

    def pair(self, x: Sequence, y: Sequence) -> Cyclo:
        return sum((Cyclo.of(x[i]) * self.gram[i][j] * y[j] for i in range(2) for j in range(2)), ZERO)

    def cycle(self, k: int) -> Vector:
        return vec([int(k == 1), int(k == 2)])


def a2_lattice() -> MilnorLattice:
    return MilnorLattice(((2, -1), (-1, 2)))


def pl_reflect(z: Sequence, delta: Sequence, lattice: MilnorLattice, sign: int = -1) -> Vector:
    """z + sign * <z, delta> delta; the default sign -1 is the one giving order-3 monodromy."""
    if len(z) != 2 or len(delta) != 2:
        raise ValueError("vectors must lie in the rank-2 Milnor lattice")
    c = lattice.pair(z, delta)
    return tuple(Cyclo.of(x) + sign * c * Cyclo.of(d) for x, d in zip(z, delta))


def reflection_matrix(lattice: MilnorLattice, k: int, sign: int = -1) -> List[List[int]]:
    cols = [pl_reflect(lattice.cycle(j), lattice.cycle(k), lattice, sign) for j in (1, 2)]
    return [[int(cols[j][i].a) for j in range(2)] for i in range(2)]


def local_monodromy(lattice: Optional[MilnorLattice] = None, sign: int = -1) -> List[List[int]]:
    """r = T_1 T_2; rejects sign conventions for which r does not have order 3."""
    lattice = lattice or a2_lattice()
    t1 = reflection_matrix(lattice, 1, sign)
    t2 = reflection_matrix(lattice, 2, sign)
    r = [[sum(t1[i][k] * t2[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    if not has_order_three(r):
        raise ValueError(f"sign convention {sign:+d} with Gram {lattice.gram} does not give order 3")
    return r


def _int_matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def has_order_three(r) -> bool:
    n = len(r)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    return r != ident and _int_matmul(_int_matmul(r, r), r) == ident


def sign_conventions() -> List[Tuple[int, int, bool]]:
    """(off-diagonal entry, reflection sign, order 3?) for the four sign choices."""
    out = []
    for off in (-1, 1):
        lat = MilnorLattice(((2, off), (off, 2)))
        for sign in (-1, 1):
            t1 = reflection_matrix(lat, 1, sign)
            t2 = reflection_matrix(lat, 2, sign)
            out.append((off, sign, has_order_three(_int_matmul(t1, t2))))
    return out


def _self_test() -> None:
    r = local_monodromy(a2_lattice())
    if r != [[0, -1], [1, -1]]:
        raise AssertionError(f"unexpected local monodromy {r}")


_self_test()


def eigenbasis(r: Sequence[Sequence]) -> Tuple[Vector, Vector]:
    """Normalized generators of the omega- and omega^2-eigenlines of r."""
    out = []
    for lam in (OMEGA, OMEGA2):
        shifted = [[Cyclo.of(x) - (lam if i == j else ZERO) for j, x in enumerate(row)]
                   for i, row in enumerate(r)]
        ker = kernel(shifted)
        if len(ker) != 1:
            raise ArithmeticError(f"eigenspace for {lam} has dimension {len(ker)}")
        out.append(normalize(ker[0]))
    return out[0], out[1]


def char_poly_2x2(r: Sequence[Sequence[int]]) -> Tuple[int, int, int]:
    """Coefficients (1, -trace, det) of x^2 - tr x + det."""
    tr = r[0][0] + r[1][1]
    dt = r[0][0] * r[1][1] - r[0][1] * r[1][0]
    return 1, -tr, dt


# -- the global representation --------------------------------------------------------

@dataclass(frozen=True)
class GlobalRep:
    """m blocks of the local model; ``ops[i]`` acts by r on block i only.

    ``transports[j-1]`` swaps block 0 and block j with scalar 1; together with
    the ops they generate the monodromy group acting on the vanishing part.
    """

    m: int
    local: Tuple[Tuple[int, int], Tuple[int, int]]
    gram: Tuple[Tuple[int, int], Tuple[int, int]]
    ops: Tuple[Tuple[Tuple[int, ...], ...], ...]
    transports: Tuple[Tuple[Tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return 2 * self.m

    def generators(self) -> List[Tuple[Tuple[int, ...], ...]]:
        return list(self.ops) + list(self.transports)

    def form(self) -> List[List[int]]:
        n = self.dim
        out = [[0] * n for _ in range(n)]
        for b in range(self.m):
            for i in range(2):
                for j in range(2):
                    out[2 * b + i][2 * b + j] = self.gram[i][j]
        return out

    def embed(self, block: int, v: Sequence) -> Vector:
        out = [ZERO] * self.dim
        out[2 * block] = Cyclo.of(v[0])
        out[2 * block + 1] = Cyclo.of(v[1])
        return tuple(out)


def build_global(m: int, lattice: Optional[MilnorLattice] = None) -> GlobalRep:
    if m < 1:
        raise ValueError("need at least one singular point")
    lattice = lattice or a2_lattice()
    r = local_monodromy(lattice)
    n = 2 * m
    ops = []
    for b in range(m):
        g = [[int(i == j) for j in range(n)] for i in range(n)]
        for i in range(2):
            for j in range(2):
                g[2 * b + i][2 * b + j] = r[i][j]
        ops.append(tuple(tuple(row) for row in g))
    transports = []
    for b in range(1, m):
        perm = list(range(n))
        perm[0], perm[1], perm[2 * b], perm[2 * b + 1] = 2 * b, 2 * b + 1, 0, 1
        g = [[int(perm[i] == j) for j in range(n)] for i in range(n)]
        transports.append(tuple(tuple(row) for row in g))
    return GlobalRep(m, tuple(tuple(x) for x in r), lattice.gram, tuple(ops), tuple(transports))


def preserves_form(g: Sequence[Sequence[int]], form: Sequence[Sequence[int]]) -> bool:
    gt = [list(c) for c in zip(*g)]
    return _int_matmul(_int_matmul(gt, form), g) == [list(r) for r in form]


# -- invariant closures ---------------------------------------------------------------
#
# A vector over Q(omega) with n coordinates is stored as 2n rationals: the
# omega^0 parts followed by the omega^1 parts. The generators have integer
# entries, so they act on both halves separately; multiplication by omega is
# (a, b) -> (-b, a - b). The Q-span closed under these maps is the
# Q(omega)-span closed under the generators.

def _realify(v: Sequence) -> List[int]:
    cs = [Cyclo.of(x) for x in v]
    den = 1
    for c in cs:
        den = den * c.a.denominator // gcd(den, c.a.denominator)
        den = den * c.b.denominator // gcd(den, c.b.denominator)
    return [int(c.a * den) for c in cs] + [int(c.b * den) for c in cs]


def _complexify(x: Sequence[int], n: int) -> Vector:
    return tuple(Cyclo(x[i], x[n + i]) for i in range(n))


def _sparse(g: Sequence[Sequence[int]]) -> List[List[Tuple[int, int]]]:
    return [[(j, x) for j, x in enumerate(row) if x] for row in g]


def _apply_real(sp, x: List[int], n: int) -> List[int]:
    a = [sum(v * x[j] for j, v in row) for row in sp]
    b = [sum(v * x[n + j] for j, v in row) for row in sp]
    return a + b


def _omega_real(x: List[int], n: int) -> List[int]:
    a, b = x[:n], x[n:]
    return [-y for y in b] + [p - q for p, q in zip(a, b)]


class _Echelon:
    """Fraction-free semi-echelon basis over Z with primitive rows."""

    def __init__(self, width: int):
        self.width = width
        self.rows: List[Tuple[int, List[int]]] = []

    def reduce(self, x: List[int]) -> List[int]:
        for c, row in self.rows:
            if x[c]:
                p, q = row[c], x[c]
                x = [p * u - q * w for u, w in zip(x, row)]
                g = gcd(*x)
                if g > 1:
                    x = [u // g for u in x]
        return x

    def add(self, x: List[int]) -> Optional[List[int]]:
        x = self.reduce(list(x))
        c = next((i for i, u in enumerate(x) if u), None)
        if c is None:
            return None
        if x[c] < 0:
            x = [-u for u in x]
        self.rows.append((c, x))
        return x

    def __len__(self):
        return len(self.rows)


def _closure_real(rep: GlobalRep, seeds: Sequence[Sequence]) -> _Echelon:
    n = rep.dim
    gens = [_sparse(g) for g in rep.generators()]
    ech = _Echelon(2 * n)
    queue = []
    for s in seeds:
        x = ech.add(_realify(s))
        if x is not None:
            queue.append(x)
    while queue and len(ech) < 2 * n:
        x = queue.pop()
        images = [_omega_real(x, n)] + [_apply_real(sp, x, n) for sp in gens]
        for y in images:
            y = ech.add(y)
            if y is not None:
                queue.append(y)
                if len(ech) == 2 * n:
                    break
    return ech


def invariant_closure(rep: GlobalRep, v: Sequence) -> List[Vector]:
    """A Q(omega)-basis of the smallest invariant subspace containing v."""
    return _q_omega_basis(_closure_real(rep, [v]), rep.dim)


def closure_dim(rep: GlobalRep, v: Sequence) -> int:
    return len(_closure_real(rep, [v])) // 2


def contains_real(ech: _Echelon, v: Sequence) -> bool:
    return not any(ech.reduce(_realify(v)))


def _q_omega_basis(ech: _Echelon, n: int) -> List[Vector]:
    vectors = [_complexify(row, n) for _, row in ech.rows]
    red, _ = rref(vectors) if vectors else ([], [])
    return [tuple(r) for r in red]


def _in_rref_span(red: Sequence[Sequence[Cyclo]], pivots: Sequence[int], v: Sequence) -> bool:
    rest = [Cyclo.of(x) for x in v]
    for row, p in zip(red, pivots):
        f = rest[p]
        if f:
            rest = [x - f * y if y else x for x, y in zip(rest, row)]
    return not any(rest)


def is_invariant(rep: GlobalRep, basis: Sequence[Sequence]) -> bool:
    if not basis:
        return True
    red, pivots = rref(basis)
    return all(_in_rref_span(red, pivots, matvec(g, v)) for g in rep.generators() for v in basis)


@dataclass(frozen=True)
class Decomposition:
    """The two isotypic pieces and the checks that pin them down."""

    h_omega: Tuple[Vector, ...]
    h_omega2: Tuple[Vector, ...]
    invariant: bool
    direct_sum: bool
    envelope_dims: Tuple[int, int]
    traces: Tuple[Cyclo, Cyclo]

    @property
    def subspaces(self) -> List[Tuple[Vector, ...]]:
        return [self.h_omega, self.h_omega2]

    @property
    def irreducible(self) -> bool:
        m = len(self.h_omega)
        return self.envelope_dims == (m * m, len(self.h_omega2) ** 2)

    @property
    def complete(self) -> bool:
        """Exactly two proper invariant subspaces: irreducible, non-isomorphic summands."""
        return (self.invariant and self.direct_sum and self.irreducible
                and self.traces[0] != self.traces[1])

    def to_json(self) -> dict:
        return {"dims": [len(self.h_omega), len(self.h_omega2)], "invariant": self.invariant,
                "direct_sum": self.direct_sum, "envelope_dims": list(self.envelope_dims),
                "traces_r1": [str(t) for t in self.traces], "complete": self.complete}


def _restrict(rep: GlobalRep, g, basis: Sequence[Vector]) -> Matrix:
    """Matrix of g on the span of ``basis`` (columns are coordinates of images)."""
    n = len(basis)
    # basis is in reduced echelon form, so coordinates are read at the pivots
    _, pivots = rref(basis)
    cols = []
    for v in basis:
        w = matvec(g, v)
        coords = [w[p] for p in pivots]
        cols.append(coords)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _integral_pair(m: Matrix) -> Tuple[List[List[int]], List[List[int]]]:
    # A + B*omega with A, B integral after clearing a common denominator; a
    # nonzero rescaling of a generator leaves the span of all words unchanged.
    den = 1
    for row in m:
        for x in row:
            for q in (x.a, x.b):
                den = den * q.denominator // gcd(den, q.denominator)
    return ([[int(x.a * den) for x in row] for row in m],
            [[int(x.b * den) for x in row] for row in m])


def _envelope_dim(mats: Sequence[Matrix]) -> int:
    """Dimension over Q(omega) of the algebra generated by ``mats``.

    Words are multiplied as integer pairs and reduced in the realified
    (2 n^2)-dimensional Q-space, closing under omega so that the Q-span is the
    Q(omega)-span.
    """
    n = len(mats[0])
    gens = [_integral_pair(g) for g in mats]
    nn = n * n

    def mul(g, a):
        (ga, gb), (aa, ab) = g, a
        out_a = [[0] * n for _ in range(n)]
        out_b = [[0] * n for _ in range(n)]
        for i in range(n):
            for k in range(n):
                x, y = ga[i][k], gb[i][k]
                if not (x or y):
                    continue
                ra, rb, oa, ob = aa[k], ab[k], out_a[i], out_b[i]
                for j in range(n):
                    # (x + y w)(u + v w) = xu - yv + (xv + yu - yv) w
                    u, v = ra[j], rb[j]
                    oa[j] += x * u - y * v
                    ob[j] += x * v + y * u - y * v
        return out_a, out_b

    def flat(a):
        return [x for row in a[0] for x in row] + [x for row in a[1] for x in row]

    ech = _Echelon(2 * nn)
    ident = ([[int(i == j) for j in range(n)] for i in range(n)], [[0] * n for _ in range(n)])
    for x in (flat(ident), _omega_real(flat(ident), nn)):
        ech.add(x)
    frontier = [ident]
    while frontier and len(ech) < 2 * nn:
        new = []
        for a in frontier:
            for g in gens:
                p = mul(g, a)
                fp = flat(p)
                if ech.add(fp) is not None:
                    ech.add(_omega_real(fp, nn))
                    new.append(p)
                    if len(ech) == 2 * nn:
                        return nn
        frontier = new
    return len(ech) // 2


def decompose_rep(rep: GlobalRep) -> Decomposition:
    d_w, d_w2 = eigenbasis(rep.local)
    h_w = tuple(invariant_closure(rep, rep.embed(0, d_w)))
    h_w2 = tuple(invariant_closure(rep, rep.embed(0, d_w2)))
    invariant = is_invariant(rep, h_w) and is_invariant(rep, h_w2)
    direct = rank(list(h_w) + list(h_w2)) == rep.dim == len(h_w) + len(h_w2)
    envelope = tuple(_envelope_dim([_restrict(rep, g, h) for g in rep.generators()]) if h else 0
                     for h in (h_w, h_w2))
    traces = tuple(sum((_restrict(rep, rep.ops[0], h)[i][i] for i in range(len(h))), ZERO)
                   for h in (h_w, h_w2))
    return Decomposition(h_w, h_w2, invariant, direct, envelope, traces)


def eigenvector_span(rep: GlobalRep, which: Cyclo) -> List[Vector]:
    """span{delta^i} for the chosen eigenvalue, one eigenvector per block."""
    d_w, d_w2 = eigenbasis(rep.local)
    d = d_w if which == OMEGA else d_w2
    return [rep.embed(b, d) for b in range(rep.m)]


def random_vector(rng: random.Random, n: int, bound: int = 5) -> Vector:
    while True:
        v = tuple(Cyclo(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n))
        if any(v):
            return v


@dataclass(frozen=True)
class ClosureTrial:
    m: int
    closure_dim: int
    contains_omega: bool
    contains_omega2: bool

    @property
    def ok(self) -> bool:
        return self.contains_omega or self.contains_omega2


def closure_trials(trials: int, seed: int, m_range: Sequence[int] = range(1, 9)) -> List[ClosureTrial]:
    """Invariant closures of seeded random nonzero vectors, checked against H_omega and H_omega^2."""
    rng = random.Random(seed)
    reps = {m: build_global(m) for m in m_range}
    spans = {m: (eigenvector_span(reps[m], OMEGA), eigenvector_span(reps[m], OMEGA2)) for m in m_range}
    out = []
    for _ in range(trials):
        m = rng.choice(list(m_range))
        rep = reps[m]
        hw, hw2 = spans[m]
        mode = rng.randrange(3)
        if mode == 0:
            v = random_vector(rng, rep.dim)
        else:
            # a random nonzero vector inside one eigen-part exercises the proper closures
            coeffs = random_vector(rng, rep.m)
            v = tuple(sum((c * x[i] for c, x in zip(coeffs, hw if mode == 1 else hw2)), ZERO)
                      for i in range(rep.dim))
        ech = _closure_real(rep, [v])
        out.append(ClosureTrial(m, len(ech) // 2, all(contains_real(ech, v) for v in hw),
                                all(contains_real(ech, v) for v in hw2)))
    return out

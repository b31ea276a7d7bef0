"""Characters of bundle expressions and their graded decomposition.

A character is a dict from weight tuples to multiplicities over the torus of
GL(rank). Tensor, Sym, Wedge and Dual act by the usual lambda-ring rules and
the decomposition peels off the lex-largest weight repeatedly, subtracting
the character of the Levi irreducible with that highest weight.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple

from ..bbw import Space
from ..weights import Weight, schur_polynomial, weyl_dimension
from .ast import BundleExpr, Dual, LinePow, Param, Sum, Sym, Taut, Tensor, Wedge, symbols

Character = Dict[Weight, int]

_AVAILABLE = {
    "P": frozenset({"K", "O", "Omega"}),
    "G": frozenset({"Q", "M", "E", "O", "Omega"}),
    "Gamma": frozenset({"Q", "M", "E", "O", "Omega", "K", "N", "R"}),
}
# Symbols whose bundles on the incidence flag are only filtered, not split.
_FILTERED_ON_GAMMA = frozenset({"Q", "K", "E", "Omega"})


def check_symbols(expr: BundleExpr, space: Space) -> None:
    bad = sorted(symbols(expr) - _AVAILABLE[space.kind])
    if bad:
        raise ValueError(f"symbol(s) {', '.join(bad)} not defined on {space}")


def _unit(space: Space, i: int) -> Weight:
    w = [0] * space.rank
    w[i] = 1
    return tuple(w)


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _scale(a: Weight, k: int) -> Weight:
    return tuple(k * x for x in a)


def line_weight(symbol: str, space: Space) -> Weight:
    """Weight of the line bundle N, R or O(1)."""
    if symbol not in _AVAILABLE[space.kind]:
        raise ValueError(f"symbol {symbol} not defined on {space}")
    if symbol == "R":
        return _unit(space, 0)
    if symbol == "N":
        return _unit(space, 1)
    if space.kind == "G":
        return _add(_unit(space, 0), _unit(space, 1))
    return _unit(space, 0)


def symbol_character(symbol: str, space: Space) -> Character:
    if symbol not in _AVAILABLE[space.kind]:
        raise ValueError(f"symbol {symbol} not defined on {space}")
    n = space.rank
    if symbol in ("N", "R", "O"):
        return {line_weight(symbol, space): 1}
    if symbol == "Q":
        return {_unit(space, 0): 1, _unit(space, 1): 1}
    if symbol == "M":
        return {_unit(space, j): 1 for j in range(2, n)}
    if symbol == "K":
        return {_unit(space, j): 1 for j in range(1, n)}
    if symbol == "E":
        return dual(sym_power(symbol_character("Q", space), 3))
    # Omega: cotangent bundle, one weight e_j - e_i per pair in distinct blocks.
    owner = []
    for b, size in enumerate(space.blocks):
        owner.extend([b] * size)
    out: Character = {}
    for i in range(n):
        for j in range(i + 1, n):
            if owner[i] != owner[j]:
                w = [0] * n
                w[j] += 1
                w[i] -= 1
                out[tuple(w)] = out.get(tuple(w), 0) + 1
    return out


def multiply(a: Character, b: Character) -> Character:
    out: Character = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            key = _add(wa, wb)
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def add(a: Character, b: Character) -> Character:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) + c
    return {k: v for k, v in out.items() if v}


def dual(a: Character) -> Character:
    return {_scale(w, -1): c for w, c in a.items()}


def _graded_power(a: Character, k: int, coeff) -> Character:
    # Multiply out prod over weights w of (sum_j coeff(mult, j) * w^j) in degree k.
    n = len(next(iter(a))) if a else 0
    if k == 0:
        return {(0,) * n: 1}
    if not a:
        return {}
    levels: List[Character] = [{(0,) * n: 1}] + [{} for _ in range(k)]
    for w, m in a.items():
        if m < 0:
            raise ValueError("symmetric and exterior powers need a genuine character")
        new = [dict(level) for level in levels]
        for j in range(1, k + 1):
            c = coeff(m, j)
            if not c:
                continue
            shift = _scale(w, j)
            for deg in range(0, k - j + 1):
                for u, cu in levels[deg].items():
                    key = _add(u, shift)
                    new[deg + j][key] = new[deg + j].get(key, 0) + c * cu
        levels = new
    return {w: c for w, c in levels[k].items() if c}


def sym_power(a: Character, k: int) -> Character:
    return _graded_power(a, k, lambda m, j: comb(m + j - 1, j))


def wedge_power(a: Character, k: int) -> Character:
    return _graded_power(a, k, lambda m, j: comb(m, j))


def power(a: Character, k: int) -> Character:
    if k < 0:
        a, k = dual(a), -k
    n = len(next(iter(a))) if a else 0
    out: Character = {(0,) * n: 1}
    for _ in range(k):
        out = multiply(out, a)
    return out


def character(expr: BundleExpr, space: Space, env: Optional[Mapping[str, int]] = None) -> Character:
    """Character of ``expr`` on ``space`` with parameters taken from ``env``."""
    env = env or {}
    if isinstance(expr, Taut):
        return symbol_character(expr.symbol, space)
    if isinstance(expr, LinePow):
        exp = expr.exponent
        if isinstance(exp, Param):
            exp = exp.evaluate(env)
        if isinstance(expr.base, str):
            return {_scale(line_weight(expr.base, space), exp): 1}
        return power(character(expr.base, space, env), exp)
    if isinstance(expr, Dual):
        return dual(character(expr.child, space, env))
    if isinstance(expr, Sym):
        if expr.k < 0:
            raise ValueError("Sym arity must be non-negative")
        return sym_power(character(expr.child, space, env), expr.k)
    if isinstance(expr, Wedge):
        if expr.k < 0:
            raise ValueError("Wedge arity must be non-negative")
        return wedge_power(character(expr.child, space, env), expr.k)
    if isinstance(expr, Tensor):
        out: Character = {(0,) * space.rank: 1}
        for c in expr.children:
            out = multiply(out, character(c, space, env))
        return out
    if isinstance(expr, Sum):
        out = {}
        for c in expr.children:
            out = add(out, character(c, space, env))
        return out
    raise TypeError(f"not a bundle expression: {expr!r}")


def rank(expr: BundleExpr, space: Space, env: Optional[Mapping[str, int]] = None) -> int:
    return sum(character(expr, space, env).values())


# -- decomposition -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _irreducible(blocks: Tuple[int, ...], weight: Weight) -> Tuple[Tuple[Weight, int], ...]:
    parts = []
    start = 0
    for size in blocks:
        parts.append(list(schur_polynomial(weight[start:start + size]).items()))
        start += size
    out = []
    for combo in cartesian(*parts):
        exps: Tuple[int, ...] = ()
        c = 1
        for e, m in combo:
            exps += e
            c *= m
        out.append((exps, c))
    return tuple(out)


def irreducible_character(space: Space, weight: Weight) -> Character:
    """Character of the irreducible Levi module with block-dominant highest weight."""
    if not space.is_block_dominant(weight):
        raise ValueError(f"weight {weight} is not block-dominant on {space}")
    return dict(_irreducible(space.blocks, tuple(weight)))


def levi_rank(space: Space, weight: Weight) -> int:
    """Rank of the irreducible homogeneous bundle with the given highest weight."""
    out = 1
    for sl in space.block_slices():
        out *= weyl_dimension(weight[sl])
    return out


def split_character(char: Character, space: Space) -> List[Tuple[Weight, int]]:
    rest = {k: v for k, v in char.items() if v}
    pieces: Dict[Weight, int] = {}
    while rest:
        top = max(rest)
        mult = rest[top]
        if mult < 0 or not space.is_block_dominant(top):
            raise ValueError("character is not that of a homogeneous bundle")
        pieces[top] = pieces.get(top, 0) + mult
        for w, c in _irreducible(space.blocks, top):
            v = rest.get(w, 0) - mult * c
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return sorted(pieces.items(), reverse=True)


@dataclass(frozen=True)
class GradedPieces:
    """Irreducible pieces of the associated graded bundle.

    ``split`` records whether the bundle is known to be the direct sum of its
    pieces; when it is not, cohomology of the pieces only bounds the answer.
    """

    space: Space
    pieces: Tuple[Tuple[Weight, int], ...]
    split: bool

    @property
    def rank(self) -> int:
        return sum(m * levi_rank(self.space, w) for w, m in self.pieces)

    def character(self) -> Character:
        out: Character = {}
        for w, m in self.pieces:
            for u, c in _irreducible(self.space.blocks, w):
                out[u] = out.get(u, 0) + m * c
        return {k: v for k, v in out.items() if v}


def is_split(expr: BundleExpr, space: Space) -> bool:
    if space.kind != "Gamma":
        return True
    return not (symbols(expr) & _FILTERED_ON_GAMMA)


def decompose(expr: BundleExpr, space: Space, env: Optional[Mapping[str, int]] = None) -> GradedPieces:
    check_symbols(expr, space)
    char = character(expr, space, env)
    return GradedPieces(space, tuple(split_character(char, space)), is_split(expr, space))

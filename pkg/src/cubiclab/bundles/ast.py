"""Syntax tree for bundle expressions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Mapping, Tuple, Union

LINE_SYMBOLS = frozenset({"N", "R", "O"})
TAUT_SYMBOLS = frozenset({"Q", "M", "K", "E", "Omega"})


@dataclass(frozen=True)
class Param:
    """Exponent ``scale * name + offset``."""

    name: str
    scale: int = 1
    offset: int = 0

    def evaluate(self, env: Mapping[str, int]) -> int:
        if self.name not in env:
            raise KeyError(f"parameter {self.name!r} has no value")
        return self.scale * env[self.name] + self.offset

    def __str__(self) -> str:
        head = self.name if self.scale == 1 else f"-{self.name}"
        if not self.offset:
            return head
        sign = "+" if self.offset > 0 else "-"
        return f"({head}{sign}{abs(self.offset)})"


Exponent = Union[int, Param]


@dataclass(frozen=True)
class Taut:
    symbol: str

    def __str__(self) -> str:
        return self.symbol


@dataclass(frozen=True)
class Dual:
    child: "BundleExpr"

    def __str__(self) -> str:
        return f"Dual({self.child})"


@dataclass(frozen=True)
class Tensor:
    children: Tuple["BundleExpr", ...]

    def __str__(self) -> str:
        return "*".join(_wrap(c) for c in self.children)


@dataclass(frozen=True)
class Sum:
    children: Tuple["BundleExpr", ...]

    def __str__(self) -> str:
        return "+".join(str(c) for c in self.children)


@dataclass(frozen=True)
class Sym:
    k: int
    child: "BundleExpr"

    def __str__(self) -> str:
        return f"Sym{self.k}({self.child})"


@dataclass(frozen=True)
class Wedge:
    k: int
    child: "BundleExpr"

    def __str__(self) -> str:
        return f"Wedge{self.k}({self.child})"


@dataclass(frozen=True)
class LinePow:
    """``base`` raised to ``exponent``.

    ``base`` is a line symbol (``N``, ``R`` or ``O`` meaning O(1)) or an
    arbitrary subexpression. Negative and parametric exponents are only
    meaningful on line bundles and are checked when the character is built.
    """

    base: Union[str, "BundleExpr"]
    exponent: Exponent

    def __str__(self) -> str:
        if self.base == "O":
            return f"O({str(self.exponent).strip('()')})"
        head = self.base if isinstance(self.base, str) else _wrap(self.base, atom=True)
        return head if self.exponent == 1 else f"{head}^{self.exponent}"


BundleExpr = Union[Taut, Dual, Tensor, Sum, Sym, Wedge, LinePow]


def _wrap(e: BundleExpr, atom: bool = False) -> str:
    if isinstance(e, Sum) or (atom and isinstance(e, Tensor)):
        return f"({e})"
    return str(e)


def free_params(expr: BundleExpr) -> FrozenSet[str]:
    if isinstance(expr, Taut):
        return frozenset()
    if isinstance(expr, LinePow):
        inner = frozenset() if isinstance(expr.base, str) else free_params(expr.base)
        if isinstance(expr.exponent, Param):
            inner = inner | {expr.exponent.name}
        return inner
    if isinstance(expr, (Dual, Sym, Wedge)):
        return free_params(expr.child)
    return frozenset().union(*(free_params(c) for c in expr.children))


def symbols(expr: BundleExpr) -> FrozenSet[str]:
    if isinstance(expr, Taut):
        return frozenset({expr.symbol})
    if isinstance(expr, LinePow):
        return frozenset({expr.base}) if isinstance(expr.base, str) else symbols(expr.base)
    if isinstance(expr, (Dual, Sym, Wedge)):
        return symbols(expr.child)
    return frozenset().union(*(symbols(c) for c in expr.children))


def substitute(expr: BundleExpr, env: Mapping[str, int]) -> BundleExpr:
    """Replace the parameters named in ``env`` by integers."""
    if isinstance(expr, Taut):
        return expr
    if isinstance(expr, LinePow):
        base = expr.base if isinstance(expr.base, str) else substitute(expr.base, env)
        exp = expr.exponent
        if isinstance(exp, Param) and exp.name in env:
            exp = exp.evaluate(env)
        return LinePow(base, exp)
    if isinstance(expr, Dual):
        return Dual(substitute(expr.child, env))
    if isinstance(expr, Sym):
        return Sym(expr.k, substitute(expr.child, env))
    if isinstance(expr, Wedge):
        return Wedge(expr.k, substitute(expr.child, env))
    return type(expr)(tuple(substitute(c, env) for c in expr.children))

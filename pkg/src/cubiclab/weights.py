"""Weight combinatorics for GL(n).

Weights are plain tuples of ints. The module provides the rho-shift sort
that drives Borel-Weil-Bott, the Weyl dimension formula, Schur characters
as Laurent polynomials and Littlewood-Richardson products computed from
those characters.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple, Union

Weight = Tuple[int, ...]
Partition = Tuple[int, ...]
# Laurent polynomial: exponent vector -> integer coefficient.
Laurent = Dict[Tuple[int, ...], int]


@dataclass(frozen=True)
class Singular:
    """lambda + rho has a repeated entry; all cohomology vanishes."""


@dataclass(frozen=True)
class Regular:
    degree: int
    dominant: Weight


RhoSortResult = Union[Singular, Regular]
SINGULAR = Singular()


def rho(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def is_dominant(weight) -> bool:
    return all(weight[i] >= weight[i + 1] for i in range(len(weight) - 1))


def rho_sort(weight) -> RhoSortResult:
    """Sort lambda + rho into strictly decreasing order.

    Returns ``Singular`` on a collision, otherwise the number of inversions
    of lambda + rho together with the dominant weight sort(lambda + rho) - rho.
    """
    n = len(weight)
    shifted = [w + n - 1 - i for i, w in enumerate(weight)]
    if len(set(shifted)) < n:
        return SINGULAR
    inversions = 0
    for i in range(n):
        si = shifted[i]
        for j in range(i + 1, n):
            if si < shifted[j]:
                inversions += 1
    ordered = sorted(shifted, reverse=True)
    return Regular(inversions, tuple(v - (n - 1 - i) for i, v in enumerate(ordered)))


def weyl_dimension(mu) -> int:
    """Dimension of the irreducible GL(n)-module with highest weight mu."""
    mu = tuple(mu)
    if not is_dominant(mu):
        raise ValueError(f"weight {mu} is not dominant")
    num = 1
    den = 1
    n = len(mu)
    for i in range(n):
        for j in range(i + 1, n):
            num *= mu[i] - mu[j] + j - i
            den *= j - i
    return num // den


def as_partition(entries) -> Partition:
    """Strip trailing zeros; reject non-partitions."""
    entries = tuple(entries)
    if not is_dominant(entries) or (entries and entries[-1] < 0):
        raise ValueError(f"{entries} is not a partition")
    while entries and entries[-1] == 0:
        entries = entries[:-1]
    return entries


# -- Schur characters --------------------------------------------------------

@lru_cache(maxsize=None)
def _schur_partition(mu: Partition, k: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    # Branching rule: s_mu(x_1..x_k) = sum over nu interlacing mu of
    # s_nu(x_1..x_{k-1}) * x_k^(|mu| - |nu|).
    if k == 0:
        return (((), 1),) if not any(mu) else ()
    if k == 1:
        if any(mu[1:]):
            return ()
        return (((mu[0] if mu else 0,), 1),)
    mu = tuple(mu) + (0,) * (k - len(mu))
    if any(mu[k:]):
        return ()
    mu = mu[:k]
    total = sum(mu)
    out: Counter = Counter()
    for nu in _interlacing(mu):
        rest = total - sum(nu)
        for exps, c in _schur_partition(nu, k - 1):
            out[exps + (rest,)] += c
    return tuple(sorted(out.items()))


def _interlacing(mu: Partition):
    # nu_i ranges over [mu_{i+1}, mu_i] for i < len(mu) - 1.
    k = len(mu)
    ranges = [range(mu[i + 1], mu[i] + 1) for i in range(k - 1)]

    def rec(i, acc):
        if i == k - 1:
            yield tuple(acc)
            return
        for v in ranges[i]:
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def schur_polynomial(mu) -> Laurent:
    """Character of the GL(k)-irreducible with dominant weight mu, k = len(mu).

    Negative entries are allowed; they are handled by a determinant twist.
    """
    mu = tuple(mu)
    if not is_dominant(mu):
        raise ValueError(f"weight {mu} is not dominant")
    k = len(mu)
    if k == 0:
        return {(): 1}
    shift = mu[-1]
    base = tuple(m - shift for m in mu)
    return {tuple(e + shift for e in exps): c for exps, c in _schur_partition(base, k)}


def laurent_mul(a: Laurent, b: Laurent) -> Laurent:
    out: Dict[Tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def decompose_gl(char: Laurent) -> Counter:
    """Split a GL(k) character into irreducibles by peeling lex-max weights."""
    rest = {k: v for k, v in char.items() if v}
    out: Counter = Counter()
    while rest:
        top = max(rest)
        mult = rest[top]
        if mult < 0 or not is_dominant(top):
            raise ValueError("not the character of a genuine representation")
        out[top] += mult
        for exps, c in schur_polynomial(top).items():
            v = rest.get(exps, 0) - mult * c
            if v:
                rest[exps] = v
            else:
                rest.pop(exps, None)
    return out


def lr_multiply(mu, nu, rows: int) -> Counter:
    """Littlewood-Richardson product of s_mu and s_nu truncated to ``rows`` rows.

    Computed from characters in ``rows`` variables, so partitions with more
    rows never appear.
    """
    if rows < 1:
        raise ValueError("rows must be positive")
    mu = as_partition(mu)
    nu = as_partition(nu)
    if len(mu) > rows or len(nu) > rows:
        return Counter()
    pad = lambda p: p + (0,) * (rows - len(p))
    product = laurent_mul(schur_polynomial(pad(mu)), schur_polynomial(pad(nu)))
    return Counter({as_partition(w): m for w, m in decompose_gl(product).items()})

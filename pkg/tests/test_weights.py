from collections import Counter
from itertools import combinations_with_replacement, permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from cubiclab.weights import (Regular, SINGULAR, as_partition, decompose_gl, laurent_mul,
                              lr_multiply, rho, rho_sort, schur_polynomial, weyl_dimension)


def test_rho_sort_examples():
    assert rho_sort((0,) * 6) == Regular(0, (0,) * 6)
    assert rho_sort((-7, -5, 0, 0, 0, 0)) == Regular(9, (-2,) * 6)
    assert rho_sort((0, 1, 0, 0, 0, 0)) == SINGULAR


def test_weyl_dimension_examples():
    assert weyl_dimension((0,) * 6) == 1
    assert weyl_dimension((1, 0, 0, 0, 0, 0)) == 6
    assert weyl_dimension((1, 1, 0, 0, 0, 0)) == 15


def test_weyl_dimension_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dimension((0, 1))


def test_lr_examples():
    assert lr_multiply((1,), (1,), 2) == Counter({(2,): 1, (1, 1): 1})
    assert lr_multiply((3,), (3,), 2) == Counter({(6,): 1, (5, 1): 1, (4, 2): 1, (3, 3): 1})
    assert lr_multiply((1, 1), (1,), 2) == Counter({(2, 1): 1})


def test_lr_rejects_bad_rows():
    with pytest.raises(ValueError):
        lr_multiply((1,), (1,), 0)


def _ssyt_count(shape, n):
    """Brute-force count of semistandard tableaux of ``shape`` in {1..n}."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    count = 0
    # rows are weakly increasing multisets, so enumerate those and test columns
    row_choices = [list(combinations_with_replacement(range(1, n + 1), length))
                   for length in shape if length]
    for rows in product(*row_choices):
        ok = all(rows[r][c] > rows[r - 1][c] for r in range(1, len(rows)) for c in range(len(rows[r])))
        count += ok
    return count


def _dominant_weights(n, top):
    for w in product(range(top, -1, -1), repeat=n):
        if all(w[i] >= w[i + 1] for i in range(n - 1)):
            yield w


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weyl_dimension_counts_tableaux(n):
    for mu in _dominant_weights(n, 4 if n <= 3 else 3):
        assert weyl_dimension(mu) == _ssyt_count([m for m in mu if m], n), mu


def test_weyl_dimension_counts_tableaux_rank6_sample():
    for mu in [(2, 1, 0, 0, 0, 0), (1, 1, 1, 0, 0, 0), (3, 0, 0, 0, 0, 0), (2, 2, 1, 1, 0, 0)]:
        assert weyl_dimension(mu) == _ssyt_count([m for m in mu if m], 6)


def test_schur_polynomial_size_is_dimension():
    for mu in [(3, 1, 0), (2, 2, 0, 0), (1, -1), (0, -2, -2)]:
        assert sum(schur_polynomial(mu).values()) == weyl_dimension(mu)


def test_schur_polynomial_is_symmetric():
    s = schur_polynomial((3, 1, 0))
    for exps, c in s.items():
        for perm in permutations(exps):
            assert s[perm] == c


weights = st.lists(st.integers(-4, 4), min_size=1, max_size=6)


@settings(max_examples=300, deadline=None)
@given(weights, st.randoms(use_true_random=False))
def test_rho_sort_independent_of_pre_permutation(lam, rnd):
    n = len(lam)
    shifted = [w + r for w, r in zip(lam, rho(n))]
    perm = shifted[:]
    rnd.shuffle(perm)
    other = tuple(p - r for p, r in zip(perm, rho(n)))
    a, b = rho_sort(tuple(lam)), rho_sort(other)
    if a == SINGULAR:
        assert b == SINGULAR
    else:
        assert b.dominant == a.dominant
        # degrees differ by the parity of the shuffle
        sign = lambda xs: sum(1 for i in range(n) for j in range(i + 1, n) if xs[i] < xs[j]) % 2
        assert (a.degree - b.degree) % 2 == (sign(shifted) - sign(perm)) % 2


@settings(max_examples=300, deadline=None)
@given(weights)
def test_rho_sort_degree_bound_and_dominance(lam):
    res = rho_sort(tuple(lam))
    if res != SINGULAR:
        n = len(lam)
        assert 0 <= res.degree <= n * (n - 1) // 2
        assert all(res.dominant[i] >= res.dominant[i + 1] for i in range(n - 1))


def _partitions(rows, top):
    for w in _dominant_weights(rows, top):
        yield as_partition(w)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lr_dimension_identity(n):
    pad = lambda p: tuple(p) + (0,) * (n - len(p))
    parts = list(_partitions(n, 3))
    for mu in parts:
        for nu in parts:
            total = sum(m * weyl_dimension(pad(lam)) for lam, m in lr_multiply(mu, nu, n).items())
            assert total == weyl_dimension(pad(mu)) * weyl_dimension(pad(nu)), (mu, nu)


def test_lr_commutes():
    for mu, nu in [((2, 1), (1,)), ((3,), (2, 2)), ((2, 1), (2, 1))]:
        assert lr_multiply(mu, nu, 4) == lr_multiply(nu, mu, 4)


def test_lr_classical_coefficient():
    # c^{(3,2,1)}_{(2,1),(2,1)} = 2 is the smallest LR coefficient above 1
    assert lr_multiply((2, 1), (2, 1), 3)[(3, 2, 1)] == 2


def test_decompose_gl_roundtrip():
    char = laurent_mul(schur_polynomial((1, 0, 0)), schur_polynomial((1, 1, 0)))
    assert decompose_gl(char) == Counter({(2, 1, 0): 1, (1, 1, 1): 1})


def test_as_partition():
    assert as_partition((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ValueError):
        as_partition((1, 2))
    with pytest.raises(ValueError):
        as_partition((1, -1))

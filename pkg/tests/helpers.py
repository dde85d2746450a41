"""Shared builders for tests: random types, random standard-form matrices, scrambles."""

from __future__ import annotations

import numpy as np

from zpzp2.mixed_code import CodeType, GeneratorMatrix
from zpzp2.words import from_array


def random_type(rng: np.random.Generator, max_alpha=3, max_beta=4, max_log=8) -> CodeType:
    while True:
        alpha = int(rng.integers(0, max_alpha + 1))
        beta = int(rng.integers(1, max_beta + 1))
        delta = int(rng.integers(0, beta + 1))
        kappa = int(rng.integers(0, alpha + 1))
        gamma = int(rng.integers(kappa, kappa + beta - delta + 1))
        if gamma + delta == 0 or gamma + 2 * delta > max_log:
            continue
        return CodeType(alpha, beta, gamma, delta, kappa)


def standard_rows(rng: np.random.Generator, p: int, t: CodeType) -> np.ndarray:
    """A random generator matrix already in block standard form for type ``t``."""
    a, b, g, d, k = t.astuple()
    s = b - (g - k) - d
    M = np.zeros((g + d, a + b), dtype=np.int64)
    M[:k, :k] = np.eye(k, dtype=np.int64)
    M[:k, k:a] = rng.integers(0, p, (k, a - k))
    M[:k, a : a + s] = p * rng.integers(0, p, (k, s))
    M[k:g, a : a + s] = p * rng.integers(0, p, (g - k, s))
    M[k:g, a + s : a + s + g - k] = p * np.eye(g - k, dtype=np.int64)
    M[g:, k:a] = rng.integers(0, p, (d, a - k))
    M[g:, a : a + s] = rng.integers(0, p * p, (d, s))
    M[g:, a + s : a + s + g - k] = rng.integers(0, p, (d, g - k))
    M[g:, a + s + g - k :] = np.eye(d, dtype=np.int64)
    return M


def matrix_from_array(p: int, alpha: int, M: np.ndarray, gamma: int) -> GeneratorMatrix:
    return GeneratorMatrix(p, alpha, M.shape[1] - alpha, from_array(M[:gamma], p, alpha), from_array(M[gamma:], p, alpha))


def random_standard_matrix(rng, p: int, t: CodeType) -> GeneratorMatrix:
    return matrix_from_array(p, t.alpha, standard_rows(rng, p, t), t.gamma)


def random_code_rows(rng, p: int, alpha: int, beta: int, n_rows: int) -> np.ndarray:
    rows = np.concatenate(
        [rng.integers(0, p, (n_rows, alpha)), rng.integers(0, p * p, (n_rows, beta))], axis=1
    )
    return rows[np.any(rows, axis=1)]


def scramble(rng, p: int, t: CodeType, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Unimodular row mixing, row shuffle, and a column permutation within X and within Y.

    Returns ``(scrambled, perm)`` where scrambled column ``i`` is column ``perm[i]`` of the mixed rows.
    """
    a, g = t.alpha, t.gamma
    M = M.copy()
    q = p * p
    mods = np.array([p] * a + [q] * t.beta)
    for _ in range(3 * len(M)):
        i, j = rng.integers(0, len(M), 2)
        if i == j:
            continue
        # order-p rows only absorb order-p rows; order-p^2 rows absorb anything
        if i < g and j >= g:
            continue
        c = int(rng.integers(1, p if i < g else q))
        M[i] = (M[i] + c * M[j]) % mods
    for i in range(g, len(M)):
        unit = int(rng.choice([u for u in range(1, q) if u % p]))
        M[i] = (M[i] * unit) % mods
    M = M[rng.permutation(len(M))]
    perm = list(rng.permutation(a)) + list(a + rng.permutation(t.beta))
    return M[:, perm], [int(c) for c in perm]

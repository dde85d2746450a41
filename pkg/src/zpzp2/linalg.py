"""Dense Gaussian elimination over Z_p and a Smith-form kernel over Z_{p^2}."""

from __future__ import annotations

import numpy as np


def rref_mod_p(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` over Z_p.

    Pivots are taken column by column; within a column the first row at or
    below the current pivot row with a nonzero entry is used.

    Returns ``(R, pivot_cols)``; the first ``len(pivot_cols)`` rows of ``R``
    form a basis of the row space.
    """
    R = np.array(M, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if nz.size == 0:
            continue
        found = row + int(nz[0])
        if found != row:
            R[[row, found]] = R[[found, row]]
        R[row] = R[row] * pow(int(R[row, col]), -1, p) % p
        factors = R[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = (R[hit] - np.outer(factors[hit], R[row])) % p
        pivots.append(col)
        row += 1
    return R, pivots


def rank_mod_p(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref_mod_p(M, p)[1])


def row_space_basis(M, p: int) -> np.ndarray:
    R, pivots = rref_mod_p(M, p)
    return R[: len(pivots)]


def in_row_space(basis: np.ndarray, vec, p: int) -> bool:
    """Whether ``vec`` lies in the span of the rows of ``basis`` (any form)."""
    if len(basis) == 0:
        return not np.any(np.asarray(vec) % p)
    return rank_mod_p(np.vstack([basis, vec]), p) == rank_mod_p(basis, p)


def _valuation(a: int, p: int) -> int:
    """p-adic valuation of a nonzero element of Z_{p^2} (0 or 1)."""
    return 0 if a % p else 1


def kernel_mod_p2(H, p: int) -> np.ndarray:
    """Generators of ``{z in Z_{p^2}^m : H z = 0}`` via a Smith form.

    Z_{p^2} is a chain ring, so each pivot is chosen with minimal valuation
    and divides everything in its row and column.
    """
    q = p * p
    A = np.array(H, dtype=np.int64) % q
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    r, m = A.shape
    V = np.eye(m, dtype=np.int64)
    diag: list[int] = []
    t = 0
    while t < min(r, m):
        sub = A[t:, t:]
        nz = np.argwhere(sub != 0)
        if nz.size == 0:
            break
        units = [ij for ij in nz if sub[ij[0], ij[1]] % p]
        i, j = (units[0] if units else nz[0]) + t
        A[[t, i]] = A[[i, t]]
        A[:, [t, j]] = A[:, [j, t]]
        V[:, [t, j]] = V[:, [j, t]]
        piv = int(A[t, t])
        v = _valuation(piv, p)
        unit = piv // (p**v)
        A[t] = A[t] * pow(unit, -1, q) % q
        step = p**v
        for k in range(r):
            if k != t and A[k, t]:
                A[k] = (A[k] - (int(A[k, t]) // step) * A[t]) % q
        for l in range(m):
            if l != t and A[t, l]:
                f = int(A[t, l]) // step
                A[:, l] = (A[:, l] - f * A[:, t]) % q
                V[:, l] = (V[:, l] - f * V[:, t]) % q
        diag.append(step)
        t += 1
    gens = []
    for idx, d in enumerate(diag):
        if d == p:
            gens.append(p * V[:, idx] % q)
    for idx in range(len(diag), m):
        gens.append(V[:, idx] % q)
    if not gens:
        return np.zeros((0, m), dtype=np.int64)
    return np.array(gens, dtype=np.int64)

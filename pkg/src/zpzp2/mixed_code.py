"""Additive codes over Z_p^alpha x Z_{p^2}^beta.

Generator matrices, code types, the block standard form, enumeration,
membership and duality.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .gray import gray_batch, gray_inverse_batch
from .linalg import kernel_mod_p2
from .ring_arith import check_prime
from .words import (
    MixedWord,
    ShapeError,
    as_array,
    column_moduli,
    from_array,
    normalize,
    word_add,
    word_order,
    word_scale,
    word_star,
)

DEFAULT_CAP = 3**15

__all__ = [
    "DEFAULT_CAP",
    "AdditiveCode",
    "CapExceeded",
    "CodeType",
    "DependentRows",
    "GeneratorMatrix",
    "InvalidType",
    "MembershipIndex",
    "MixedWord",
    "StandardForm",
    "brute_force_dual_words",
    "compute_type",
    "contains",
    "dual",
    "enumerate_code",
    "inner_product",
    "load_code",
    "save_code",
    "standardize",
    "word_add",
    "word_order",
    "word_scale",
    "word_star",
]


class InvalidType(ValueError):
    """A type tuple violating alpha + beta > 0, 0 < gamma + delta <= beta + kappa, kappa <= min(alpha, gamma)."""


class DependentRows(ValueError):
    """Generator rows do not generate a group of the expected size."""


class CapExceeded(RuntimeError):
    """Enumeration would exceed the configured cap."""

    def __init__(self, needed: int, cap: int) -> None:
        super().__init__(f"enumeration needs {needed} words but the cap is {cap}; raise the cap to at least {needed}")
        self.needed = needed
        self.cap = cap


@dataclass(frozen=True)
class CodeType:
    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int

    def __post_init__(self) -> None:
        a, b, g, d, k = self.alpha, self.beta, self.gamma, self.delta, self.kappa
        if min(a, b, g, d, k) < 0:
            raise InvalidType(f"negative entry in type {self}")
        if a + b <= 0:
            raise InvalidType("need alpha + beta > 0")
        if not 0 < g + d <= b + k:
            raise InvalidType(f"need 0 < gamma + delta <= beta + kappa, got {self}")
        if k > min(a, g):
            raise InvalidType(f"need kappa <= min(alpha, gamma), got {self}")

    @property
    def log_size(self) -> int:
        """Exponent ``gamma + 2 delta`` of the code size."""
        return self.gamma + 2 * self.delta

    @property
    def length(self) -> int:
        return self.alpha + self.beta

    def gray_length(self, p: int) -> int:
        return self.alpha + p * self.beta

    def dual(self) -> CodeType:
        a, b, g, d, k = self.astuple()
        return CodeType(a, b, a + g - 2 * k, b - g - d + k, a - k)

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta, self.kappa)

    def __str__(self) -> str:
        a, b, g, d, k = self.astuple()
        return f"({a},{b};{g},{d};{k})"

    @classmethod
    def parse(cls, text: str) -> CodeType:
        """Parse ``"(a,b;g,d;k)"``."""
        nums = [int(t) for t in text.strip().strip("()").replace(";", ",").split(",")]
        if len(nums) != 5:
            raise ValueError(f"bad type literal {text!r}")
        return cls(*nums)


def _type_or_trivial(alpha: int, beta: int, gamma: int, delta: int, kappa: int) -> CodeType:
    """CodeType, allowing the zero code (gamma = delta = 0) which the invariants exclude."""
    if gamma + delta == 0:
        t = object.__new__(CodeType)
        for name, val in zip(("alpha", "beta", "gamma", "delta", "kappa"), (alpha, beta, 0, 0, 0)):
            object.__setattr__(t, name, val)
        return t
    return CodeType(alpha, beta, gamma, delta, kappa)


def inner_product(u: MixedWord, v: MixedWord) -> int:
    """``p <x_u, x_v> + <y_u, y_v>`` in Z_{p^2}."""
    u._check(v)
    p = u.p
    xs = sum(a * b for a, b in zip(u.x, v.x)) % p
    ys = sum(a * b for a, b in zip(u.y, v.y))
    return (p * xs + ys) % (p * p)


def inner_product_batch(A: np.ndarray, B: np.ndarray, p: int, alpha: int) -> np.ndarray:
    """Matrix of inner products between the rows of ``A`` and ``B``."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    xs = (A[:, :alpha] @ B[:, :alpha].T) % p
    ys = A[:, alpha:] @ B[:, alpha:].T
    return (p * xs + ys) % (p * p)


# -- standard form ----------------------------------------------------------


@dataclass(frozen=True)
class _Reduction:
    M: np.ndarray  # reduced rows, original column order
    kappa_rows: list[int]
    kappa_cols: list[int]
    prow_rows: list[int]
    prow_cols: list[int]
    v_rows: list[int]
    v_cols: list[int]


def _reduce(p: int, alpha: int, beta: int, rows: np.ndarray) -> _Reduction:
    """Row-reduce a spanning set into the block standard form.

    1. Y block over Z_{p^2}: rows with a unit become the order-p^2 rows; each
       pivot is the rightmost unit of the lowest-index candidate row.
    2. X block over Z_p among the remaining (order-p) rows; leftmost pivot.
    3. Y block of the rows left over (entries in pZ_{p^2}), divided by p;
       rightmost pivot.  Entries of order-p^2 rows in these columns are
       reduced into [0, p).
    Rows that become zero are dropped.
    """
    q = p * p
    M = np.array(rows, dtype=np.int64).reshape(-1, alpha + beta)
    normalize(M, p, alpha)
    nrows = len(M)

    def sub_row(k: int, f: int, i: int) -> None:
        M[k] = M[k] - f * M[i]
        M[k, :alpha] %= p
        M[k, alpha:] %= q

    def scale_row(i: int, a: int) -> None:
        M[i] = M[i] * a
        M[i, :alpha] %= p
        M[i, alpha:] %= q

    used: set[int] = set()
    v_rows: list[int] = []
    v_cols: list[int] = []
    while True:
        pick = None
        for i in range(nrows):
            if i in used:
                continue
            units = np.flatnonzero(M[i, alpha:] % p)
            if units.size:
                pick = (i, alpha + int(units[-1]))
                break
        if pick is None:
            break
        i, c = pick
        scale_row(i, pow(int(M[i, c]), -1, q))
        for k in range(nrows):
            if k != i and M[k, c]:
                sub_row(k, int(M[k, c]), i)
        used.add(i)
        v_rows.append(i)
        v_cols.append(c)

    kappa_rows: list[int] = []
    kappa_cols: list[int] = []
    while True:
        pick = None
        for i in range(nrows):
            if i in used:
                continue
            nz = np.flatnonzero(M[i, :alpha])
            if nz.size:
                pick = (i, int(nz[0]))
                break
        if pick is None:
            break
        i, c = pick
        scale_row(i, pow(int(M[i, c]), -1, p))
        for k in range(nrows):
            if k != i and M[k, c]:
                sub_row(k, int(M[k, c]), i)
        used.add(i)
        kappa_rows.append(i)
        kappa_cols.append(c)

    prow_rows: list[int] = []
    prow_cols: list[int] = []
    while True:
        pick = None
        for i in range(nrows):
            if i in used:
                continue
            nz = np.flatnonzero(M[i, alpha:])
            if nz.size:
                pick = (i, alpha + int(nz[-1]))
                break
        if pick is None:
            break
        i, c = pick
        scale_row(i, pow(int(M[i, c]) // p, -1, p))
        for k in range(nrows):
            if k == i or not M[k, c]:
                continue
            # order-p rows hold a multiple of p here; order-p^2 rows keep a residue in [0, p)
            sub_row(k, int(M[k, c]) // p, i)
        used.add(i)
        prow_rows.append(i)
        prow_cols.append(c)

    return _Reduction(M, kappa_rows, kappa_cols, prow_rows, prow_cols, v_rows, v_cols)


@dataclass(frozen=True)
class StandardForm:
    """A generator matrix in block standard form plus the column permutation.

    Layout (rows: kappa, gamma - kappa, delta; X columns then Y columns)::

        I_kappa  T'  | p T2  0           0
        0        0   | p T1  p I_{g-k}   0
        0        S'  | S     R           I_delta

    ``column_permutation[i]`` is the original column placed at position ``i``;
    X positions map to X positions and Y to Y.
    """

    column_permutation: tuple[int, ...]
    matrix: GeneratorMatrix

    @property
    def type(self) -> CodeType:
        return self.matrix.type

    def _blocks(self) -> np.ndarray:
        return self.matrix.as_array()

    @property
    def T_prime(self) -> np.ndarray:
        t = self.type
        return self._blocks()[: t.kappa, t.kappa : t.alpha]

    @property
    def S_prime(self) -> np.ndarray:
        t = self.type
        return self._blocks()[t.gamma :, t.kappa : t.alpha]

    @property
    def _s_width(self) -> int:
        t = self.type
        return t.beta - (t.gamma - t.kappa) - t.delta

    @property
    def T2(self) -> np.ndarray:
        t = self.type
        return self._blocks()[: t.kappa, t.alpha : t.alpha + self._s_width] // self.matrix.p

    @property
    def T1(self) -> np.ndarray:
        t = self.type
        return self._blocks()[t.kappa : t.gamma, t.alpha : t.alpha + self._s_width] // self.matrix.p

    @property
    def S(self) -> np.ndarray:
        t = self.type
        return self._blocks()[t.gamma :, t.alpha : t.alpha + self._s_width]

    @property
    def R(self) -> np.ndarray:
        t = self.type
        lo = t.alpha + self._s_width
        return self._blocks()[t.gamma :, lo : lo + t.gamma - t.kappa]

    def original_matrix_rows(self) -> np.ndarray:
        """Rows of the standard form with columns moved back to the original order."""
        arr = self._blocks()
        out = np.empty_like(arr)
        out[:, list(self.column_permutation)] = arr
        return out


def standardize(matrix: GeneratorMatrix | Sequence[MixedWord], p: int | None = None,
                alpha: int | None = None, beta: int | None = None) -> StandardForm:
    """Bring a generator matrix (or any spanning list of rows) to standard form."""
    if isinstance(matrix, GeneratorMatrix):
        p, alpha, beta = matrix.p, matrix.alpha, matrix.beta
        rows = matrix.as_array()
    else:
        rows = as_array(matrix, p, alpha, beta)
    red = _reduce(p, alpha, beta, rows)
    M = red.M
    rest_x = [c for c in range(alpha) if c not in red.kappa_cols]
    pivot_y = set(red.prow_cols) | set(red.v_cols)
    rest_y = [c for c in range(alpha, alpha + beta) if c not in pivot_y]
    perm = red.kappa_cols + rest_x + rest_y + red.prow_cols + red.v_cols
    order = red.kappa_rows + red.prow_rows + red.v_rows
    P = M[order][:, perm]
    gamma = len(red.kappa_rows) + len(red.prow_rows)
    u_rows = from_array(P[:gamma], p, alpha)
    v_rows = from_array(P[gamma:], p, alpha)
    gm = GeneratorMatrix(p, alpha, beta, u_rows, v_rows, _checked=True)
    return StandardForm(tuple(perm), gm)


def compute_type(matrix: GeneratorMatrix | Sequence[MixedWord], p: int | None = None,
                 alpha: int | None = None, beta: int | None = None) -> CodeType:
    """Type ``(alpha, beta; gamma, delta; kappa)`` of the group generated by the rows."""
    if isinstance(matrix, GeneratorMatrix):
        p, alpha, beta = matrix.p, matrix.alpha, matrix.beta
        rows = matrix.as_array()
    else:
        rows = as_array(matrix, p, alpha, beta)
    red = _reduce(p, alpha, beta, rows)
    gamma = len(red.kappa_rows) + len(red.prow_rows)
    return _type_or_trivial(alpha, beta, gamma, len(red.v_rows), len(red.kappa_rows))


# -- generator matrices and codes -------------------------------------------


@dataclass(frozen=True)
class GeneratorMatrix:
    """Rows of order p (``rows_order_p``) followed by rows of order p^2."""

    p: int
    alpha: int
    beta: int
    rows_order_p: tuple[MixedWord, ...]
    rows_order_p2: tuple[MixedWord, ...]
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "rows_order_p", tuple(self.rows_order_p))
        object.__setattr__(self, "rows_order_p2", tuple(self.rows_order_p2))
        if self.alpha < 0 or self.beta < 0 or self.alpha + self.beta == 0:
            raise ShapeError("need alpha, beta >= 0 and alpha + beta > 0")
        for w in self.rows:
            if w.shape != (self.p, self.alpha, self.beta):
                raise ShapeError(f"row {w} does not match shape {(self.p, self.alpha, self.beta)}")
        for w in self.rows_order_p:
            if word_order(w) != self.p:
                raise DependentRows(f"row {w} listed as order p has order {word_order(w)}")
        for w in self.rows_order_p2:
            if word_order(w) != self.p * self.p:
                raise DependentRows(f"row {w} listed as order p^2 has order {word_order(w)}")
        if not self._checked:
            t = compute_type(self.rows, self.p, self.alpha, self.beta)
            if t.log_size != len(self.rows_order_p) + 2 * len(self.rows_order_p2):
                raise DependentRows(
                    f"rows generate a group of size {self.p}^{t.log_size}, expected "
                    f"{self.p}^{len(self.rows_order_p) + 2 * len(self.rows_order_p2)}"
                )

    @classmethod
    def from_rows(cls, p: int, alpha: int, beta: int, rows: Iterable[Sequence[int] | MixedWord]) -> GeneratorMatrix:
        """Classify rows (flat integer lists or words) by order; rows may be interleaved."""
        words = [r if isinstance(r, MixedWord) else MixedWord.from_flat(p, alpha, r) for r in rows]
        for w in words:
            if len(w.flat()) != alpha + beta:
                raise ShapeError(f"row {w} has length {len(w.flat())}, expected {alpha + beta}")
        u = [w for w in words if word_order(w) == p]
        v = [w for w in words if word_order(w) == p * p]
        if len(u) + len(v) != len(words):
            raise DependentRows("zero rows are not allowed")
        return cls(p, alpha, beta, u, v)

    @classmethod
    def spanning(cls, p: int, alpha: int, beta: int, rows: Iterable[MixedWord]) -> GeneratorMatrix:
        """An independent generator matrix (standard form) for the group spanned by ``rows``."""
        red = _reduce(p, alpha, beta, as_array(list(rows), p, alpha, beta))
        M = red.M
        u = from_array(M[red.kappa_rows + red.prow_rows], p, alpha)
        v = from_array(M[red.v_rows], p, alpha)
        return cls(p, alpha, beta, u, v, _checked=True)

    @property
    def rows(self) -> tuple[MixedWord, ...]:
        return self.rows_order_p + self.rows_order_p2

    @property
    def gamma(self) -> int:
        return len(self.rows_order_p)

    @property
    def delta(self) -> int:
        return len(self.rows_order_p2)

    @property
    def type(self) -> CodeType:
        return compute_type(self)

    def as_array(self) -> np.ndarray:
        return as_array(self.rows, self.p, self.alpha, self.beta).reshape(-1, self.alpha + self.beta)

    def permuted(self, perm: Sequence[int]) -> GeneratorMatrix:
        """Apply a column permutation (new column ``i`` = old column ``perm[i]``)."""
        perm = list(perm)
        _check_perm(perm, self.alpha, self.beta)
        arr = self.as_array()[:, perm]
        return GeneratorMatrix(self.p, self.alpha, self.beta, from_array(arr[: self.gamma], self.p, self.alpha),
                               from_array(arr[self.gamma :], self.p, self.alpha), _checked=True)

    def to_dict(self) -> dict:
        return {"p": self.p, "alpha": self.alpha, "beta": self.beta,
                "rows": [list(w.flat()) for w in self.rows]}


def _check_perm(perm: list[int], alpha: int, beta: int) -> None:
    if sorted(perm) != list(range(alpha + beta)):
        raise ValueError("not a permutation of the columns")
    if sorted(perm[:alpha]) != list(range(alpha)):
        raise ValueError("column permutation must keep X positions among X positions")


class MembershipIndex:
    """Sorted keys of an enumerated word set for vectorized lookups.

    Words that fit in 62 bits get exact mixed-radix keys.  Longer words are
    keyed by a fixed random hash and every hit is confirmed against the
    stored row, so lookups stay exact.
    """

    def __init__(self, words: np.ndarray, p: int, alpha: int, beta: int) -> None:
        self.p, self.alpha, self.beta = p, alpha, beta
        self._radix = column_moduli(p, alpha, beta)
        self._use_int = (alpha + 2 * beta) * math.log2(p) < 62
        words = np.asarray(words)
        if self._use_int:
            self._keys = np.unique(self.keys(words))
        else:
            rng = np.random.default_rng(0x5EED)
            self._coeffs = rng.integers(1, 2**62, alpha + beta, dtype=np.int64).astype(np.uint64)
            rows = normalize(words.astype(np.int64), p, alpha)
            h = self._hash(rows)
            order = np.lexsort(rows.T[::-1])
            rows, h = rows[order], h[order]
            keep = np.ones(len(rows), dtype=bool)
            keep[1:] = np.any(rows[1:] != rows[:-1], axis=1)
            rows, h = rows[keep], h[keep]
            order = np.argsort(h, kind="stable")
            self._keys, self._rows = h[order], rows[order]
            self._dup_hash = bool(np.any(self._keys[1:] == self._keys[:-1]))
        self.size = len(self._keys)

    def _hash(self, words: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):
            return words.astype(np.uint64) @ self._coeffs

    def keys(self, words: np.ndarray) -> np.ndarray:
        words = np.asarray(words)
        key = np.zeros(len(words), dtype=np.int64)
        for c, r in enumerate(self._radix):
            key *= int(r)
            key += words[:, c]
        return key

    def contains_many(self, words: np.ndarray) -> np.ndarray:
        words = np.asarray(words, dtype=np.int64)
        if len(words) == 0 or self.size == 0:
            return np.zeros(len(words), dtype=bool)
        words = normalize(words.copy(), self.p, self.alpha)
        if self._use_int:
            k = self.keys(words)
            pos = np.minimum(np.searchsorted(self._keys, k), self.size - 1)
            return self._keys[pos] == k
        h = self._hash(words)
        pos = np.minimum(np.searchsorted(self._keys, h), self.size - 1)
        hit = self._keys[pos] == h
        out = hit & np.all(self._rows[pos] == words, axis=1)
        if self._dup_hash:
            # rare: several stored rows share a hash; scan the run
            for i in np.flatnonzero(hit & ~out):
                j = pos[i] + 1
                while j < self.size and self._keys[j] == h[i]:
                    if np.array_equal(self._rows[j], words[i]):
                        out[i] = True
                        break
                    j += 1
        return out

    def __len__(self) -> int:
        return self.size


def enumerate_code(matrix: GeneratorMatrix, cap: int = DEFAULT_CAP) -> np.ndarray:
    """All ``p^(gamma + 2 delta)`` codewords as an integer array (one per row).

    Row ``i`` corresponds to the coefficient vector obtained by reading ``i``
    in mixed radix (last generator fastest).
    """
    p, alpha = matrix.p, matrix.alpha
    size = p ** (matrix.gamma + 2 * matrix.delta)
    if size > cap:
        raise CapExceeded(size, cap)
    dtype = np.int16 if p**4 + p**2 < 2**15 else np.int64
    words = np.zeros((1, alpha + matrix.beta), dtype=dtype)
    q = p * p
    for g, order in [(w, p) for w in matrix.rows_order_p] + [(w, q) for w in matrix.rows_order_p2]:
        g = np.array(g.flat(), dtype=dtype)
        steps = np.arange(order, dtype=dtype)[:, None] * g[None, :]
        words = (words[:, None, :] + steps[None, :, :]).reshape(-1, len(g))
        words[:, :alpha] %= p
        words[:, alpha:] %= q
    return words


class AdditiveCode:
    """An additive code given by a generator matrix; the codeword index is built lazily."""

    def __init__(self, generators: GeneratorMatrix, cap: int = DEFAULT_CAP) -> None:
        self.generators = generators
        self.cap = cap
        self.type = compute_type(generators)
        self._words: np.ndarray | None = None
        self._index: MembershipIndex | None = None

    @classmethod
    def from_rows(cls, p: int, alpha: int, beta: int, rows, cap: int = DEFAULT_CAP) -> AdditiveCode:
        return cls(GeneratorMatrix.from_rows(p, alpha, beta, rows), cap=cap)

    @property
    def p(self) -> int:
        return self.generators.p

    @property
    def alpha(self) -> int:
        return self.generators.alpha

    @property
    def beta(self) -> int:
        return self.generators.beta

    @property
    def size(self) -> int:
        return self.p ** self.type.log_size

    @property
    def u_rows(self) -> tuple[MixedWord, ...]:
        return self.generators.rows_order_p

    @property
    def v_rows(self) -> tuple[MixedWord, ...]:
        return self.generators.rows_order_p2

    def words(self) -> np.ndarray:
        if self._words is None:
            self._words = enumerate_code(self.generators, self.cap)
        return self._words

    def index(self) -> MembershipIndex:
        if self._index is None:
            self._index = MembershipIndex(self.words(), self.p, self.alpha, self.beta)
            if self._index.size != self.size:
                raise DependentRows(f"enumerated {self._index.size} distinct words, expected {self.size}")
        return self._index

    def contains(self, w: MixedWord) -> bool:
        if w.shape != (self.p, self.alpha, self.beta):
            raise ShapeError(f"word {w} does not match code shape {(self.p, self.alpha, self.beta)}")
        return bool(self.index().contains_many(np.array([w.flat()]))[0])

    __contains__ = contains

    def contains_many(self, arr: np.ndarray) -> np.ndarray:
        return self.index().contains_many(arr)

    def gray_contains_many(self, g: np.ndarray) -> np.ndarray:
        """Membership of Gray vectors in the Gray image of the code."""
        words, valid = gray_inverse_batch(g, self.p, self.alpha, self.beta)
        out = np.zeros(len(g), dtype=bool)
        if valid.any():
            out[valid] = self.contains_many(words[valid])
        return out

    def gray_words(self) -> np.ndarray:
        return gray_batch(self.words().astype(np.int64), self.p, self.alpha)

    def order_p_words(self) -> np.ndarray:
        w = self.words()
        return w[np.all(w[:, self.alpha :] % self.p == 0, axis=1)]

    def word_set(self) -> set[tuple[int, ...]]:
        return {tuple(r) for r in self.words().tolist()}

    def __repr__(self) -> str:
        return f"AdditiveCode(p={self.p}, type={self.type})"


def contains(code: AdditiveCode, w: MixedWord) -> bool:
    return code.contains(w)


# -- duality ----------------------------------------------------------------


def dual(code: AdditiveCode | GeneratorMatrix, cap: int | None = None) -> AdditiveCode:
    """The annihilator of the code under the mixed inner product.

    X coordinates are lifted to Z_{p^2}; ``p <x, x'>`` equals ``<x~, p x'~>``
    for any lifts, so the dual is the X-reduction of the kernel over Z_{p^2}
    of the matrix with rows ``(p x | y)``.
    """
    gm = code.generators if isinstance(code, AdditiveCode) else code
    if cap is None:
        cap = code.cap if isinstance(code, AdditiveCode) else DEFAULT_CAP
    p, alpha, beta = gm.p, gm.alpha, gm.beta
    H = gm.as_array()
    H[:, :alpha] *= p
    sols = kernel_mod_p2(H, p)
    words = [MixedWord.from_flat(p, alpha, row) for row in sols.tolist()]
    words = [w for w in words if not w.is_zero()]
    return AdditiveCode(GeneratorMatrix.spanning(p, alpha, beta, words), cap=cap)


def brute_force_dual_words(code: AdditiveCode, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Annihilator by sweeping the whole ambient space (for cross-checks)."""
    p, alpha, beta = code.p, code.alpha, code.beta
    total = p ** (alpha + 2 * beta)
    if total > cap:
        raise CapExceeded(total, cap)
    mods = column_moduli(p, alpha, beta)
    grids = np.indices(tuple(int(m) for m in mods)).reshape(alpha + beta, -1).T
    gens = code.generators.as_array()
    ok = np.all(inner_product_batch(grids, gens, p, alpha) == 0, axis=1)
    return grids[ok]


# -- file format ------------------------------------------------------------


class MalformedCodeFile(ValueError):
    pass


def code_from_dict(data: dict, cap: int = DEFAULT_CAP) -> AdditiveCode:
    try:
        p, alpha, beta, rows = int(data["p"]), int(data["alpha"]), int(data["beta"]), data["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCodeFile(f"missing or invalid field: {exc}") from exc
    if not isinstance(rows, list):
        raise MalformedCodeFile("'rows' must be a list")
    for r in rows:
        if not isinstance(r, list) or len(r) != alpha + beta:
            raise MalformedCodeFile(f"row {r!r} must be a list of length {alpha + beta}")
        if any(not isinstance(v, int) or v < 0 for v in r):
            raise MalformedCodeFile(f"row {r!r} must hold nonnegative integers")
        if any(v >= p for v in r[:alpha]) or any(v >= p * p for v in r[alpha:]):
            raise MalformedCodeFile(f"row {r!r} has entries out of range")
    return AdditiveCode.from_rows(p, alpha, beta, rows, cap=cap)


def save_code(gm: GeneratorMatrix, path: str | Path) -> None:
    Path(path).write_text(json.dumps(gm.to_dict()) + "\n", encoding="utf-8")


def load_code(path: str | Path, cap: int = DEFAULT_CAP) -> AdditiveCode:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedCodeFile(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise MalformedCodeFile(f"{path}: expected an object")
    return code_from_dict(data, cap=cap)

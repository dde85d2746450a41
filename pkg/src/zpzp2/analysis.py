"""Rank and kernel of the Gray image of an additive code.

Every quantity has two routes: a structural one that works from the
generator rows, and a brute-force one that only looks at the set of Gray
images.  Tests cross-check the two.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .gray import carry_batch, gray_batch, hom_weight_batch
from .linalg import rank_mod_p, rref_mod_p
from .mixed_code import AdditiveCode, GeneratorMatrix, MembershipIndex
from .words import MixedWord, as_array

# Candidate pairs are processed in blocks of at most this many rows.
_BLOCK_ROWS = 1 << 20


class UnsupportedPrime(ValueError):
    """The requested method is only established for p = 3."""


@dataclass(frozen=True)
class RankReport:
    rank: int
    r_bar: int
    method: str
    span_generators: tuple[MixedWord, ...] = ()


@dataclass(frozen=True)
class KernelReport:
    kernel_dim: int
    k_bar: int
    kernel_coset_exponents: tuple[tuple[int, ...], ...]
    method: str
    p: int = 3

    @property
    def subgroup_basis(self) -> np.ndarray:
        """A row basis over Z_p of the accepted coefficient subgroup."""
        S = np.array(self.kernel_coset_exponents, dtype=np.int64)
        if S.size == 0:
            return np.zeros((0, S.shape[1] if S.ndim == 2 else 0), dtype=np.int64)
        R, piv = rref_mod_p(S, self.p)
        return R[: len(piv)]


def transversal(code: AdditiveCode) -> tuple[np.ndarray, np.ndarray]:
    """Words ``sum a_j v_j`` for every ``a`` in Z_p^delta, with their coefficient vectors.

    Every codeword equals exactly one of these plus a codeword of order
    dividing p.
    """
    p, delta = code.p, len(code.v_rows)
    coeffs = np.array(list(itertools.product(range(p), repeat=delta)), dtype=np.int64).reshape(p**delta, delta)
    V = as_array(code.v_rows, p, code.alpha, code.beta).reshape(delta, code.alpha + code.beta)
    words = coeffs @ V
    words[:, : code.alpha] %= p
    words[:, code.alpha :] %= p * p
    return words, coeffs


def _pair_blocks(n_left: int, n_right: int):
    step = max(1, _BLOCK_ROWS // max(n_right, 1))
    for lo in range(0, n_left, step):
        yield slice(lo, min(lo + step, n_left))


def _all_carry_words_in_code(code: AdditiveCode, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """For each row ``u`` of ``left``: does ``pP'(u, v)`` lie in the code for all ``v`` in ``right``?"""
    out = np.zeros(len(left), dtype=bool)
    for sl in _pair_blocks(len(left), len(right)):
        block = carry_batch(left[sl, None, :], right[None, :, :], code.p, code.alpha)
        ok = code.contains_many(block.reshape(-1, block.shape[-1])).reshape(block.shape[:2])
        out[sl] = ok.all(axis=1)
    return out


def _all_gray_sums_in_code(code: AdditiveCode, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """For each row ``w`` of ``left``: is ``Phi(w) + Phi(c)`` in ``Phi(C)`` for all ``c`` in ``right``?"""
    p, alpha = code.p, code.alpha
    gl = gray_batch(left, p, alpha)
    gr = gray_batch(right, p, alpha)
    out = np.zeros(len(left), dtype=bool)
    for sl in _pair_blocks(len(left), len(right)):
        sums = (gl[sl, None, :] + gr[None, :, :]) % p
        ok = code.gray_contains_many(sums.reshape(-1, sums.shape[-1])).reshape(sums.shape[:2])
        out[sl] = ok.all(axis=1)
    return out


def is_gray_linear(code: AdditiveCode, exhaustive: bool = False) -> bool:
    """Whether the Gray image is a linear code: ``pP'(u, v)`` in the code for all codewords.

    The carry only depends on the low digits of the Y entries, which are
    unchanged by adding an order-p codeword, so by default ``u`` and ``v``
    range over the p^delta transversal words instead of the whole code.
    """
    if not code.v_rows:
        return True
    side = code.words().astype(np.int64) if exhaustive else transversal(code)[0]
    return bool(_all_carry_words_in_code(code, side, side).all())


# -- rank ---------------------------------------------------------------------


def span_generators_p3(code: AdditiveCode) -> list[MixedWord]:
    """Rows, then ``3 v_k * v_l`` (l <= k) and ``3 v_x * v_y * v_z`` (x <= y <= z).

    The Gray images of these words span the linear span of the Gray image
    when p = 3.  Zero products are left out.
    """
    if code.p != 3:
        raise UnsupportedPrime("the spanning set of the Gray span is only known for p = 3")
    gens = list(code.u_rows) + list(code.v_rows)
    v = code.v_rows
    d = len(v)
    extra = []
    for k in range(d):
        for l in range(k + 1):
            extra.append(3 * (v[k] * v[l]))
    for x, y, z in itertools.combinations_with_replacement(range(d), 3):
        extra.append(3 * (v[x] * v[y] * v[z]))
    gens.extend(w for w in extra if not w.is_zero())
    return gens


def _gray_rank_chunked(code: AdditiveCode, chunk: int = 1 << 16) -> int:
    p = code.p
    words = code.words()
    basis = np.zeros((0, code.type.gray_length(p)), dtype=np.int64)
    for lo in range(0, len(words), chunk):
        g = gray_batch(words[lo : lo + chunk].astype(np.int64), p, code.alpha)
        R, piv = rref_mod_p(np.vstack([basis, g]), p)
        basis = R[: len(piv)]
    return len(basis)


def rank(code: AdditiveCode, method: str = "auto") -> RankReport:
    """Dimension over Z_p of the span of the Gray image.

    ``method`` is ``"span"`` (p = 3 only: eliminate the Gray images of
    :func:`span_generators_p3`), ``"bruteforce"`` (eliminate all Gray images)
    or ``"auto"`` (span when p = 3).
    """
    if method == "auto":
        method = "span" if code.p == 3 else "bruteforce"
    base = code.type.log_size
    if method == "span":
        gens = span_generators_p3(code)
        arr = as_array(gens, code.p, code.alpha, code.beta)
        r = rank_mod_p(gray_batch(arr, code.p, code.alpha), code.p)
        return RankReport(r, r - base, "span-elimination", tuple(gens))
    if method == "bruteforce":
        r = _gray_rank_chunked(code)
        return RankReport(r, r - base, "brute-force")
    raise ValueError(f"unknown rank method {method!r}")


def span_code(code: AdditiveCode) -> AdditiveCode:
    """The additive code generated by the p = 3 spanning words; its Gray image is the Gray span."""
    gens = span_generators_p3(code)
    return AdditiveCode(GeneratorMatrix.spanning(code.p, code.alpha, code.beta, gens), cap=code.cap)


# -- kernel -------------------------------------------------------------------


def _accepted_subgroup(accept: np.ndarray, coeffs: np.ndarray, p: int) -> tuple[tuple[int, ...], ...]:
    S = coeffs[accept]
    if len(S) == 0:
        raise AssertionError("the zero coefficient vector was rejected")
    # S is a subgroup iff it has exactly p^rank elements
    if len(S) != p ** rank_mod_p(S, p):
        raise AssertionError(f"accepted coefficient set of size {len(S)} is not a subgroup")
    return tuple(map(tuple, S.tolist()))


def kernel(code: AdditiveCode, method: str = "coset", test: str = "definitional",
           exhaustive: bool = False) -> KernelReport:
    """Dimension of the kernel ``K(C) = {x : x + C = C}`` of the Gray image C.

    ``method="coset"`` tests, for every ``a`` in Z_p^delta, whether the Gray
    image of ``w_a = sum a_j v_j`` is in K(C).  The accepting set S is a
    subgroup of Z_p^delta:

    * K(C) is a linear code containing the Gray images of all order-p codewords;
    * adding an order-p word causes no carry, so ``Phi(c + o) = Phi(c) + Phi(o)``
      and membership of ``Phi(c)`` in K(C) depends only on ``c`` modulo order-p words;
    * ``w_a + w_b`` and ``w_{a+b mod p}`` differ by an order-p word, and
      ``Phi(x1) + Phi(x2)`` in K(C) forces ``Phi(x1 + x2)`` in K(C).

    Hence ``ker = gamma + delta + log_p |S|``.  ``test`` chooses between the
    definitional check ``Phi(w) + Phi(c) in Phi(C)`` and the carry check
    ``pP'(w, c) in C``.  By the same carry-free argument, ``c`` may range over
    the transversal words instead of the whole code; ``exhaustive=True`` sweeps
    all codewords instead.

    ``method="bruteforce"`` ignores the algebra and searches the Gray image set
    directly (see :func:`brute_force_kernel_basis`).
    """
    base = code.type.log_size
    if method == "bruteforce":
        basis = brute_force_kernel_basis(code)
        k = len(basis)
        return KernelReport(k, base - k, (), "brute-force", code.p)
    if method != "coset":
        raise ValueError(f"unknown kernel method {method!r}")
    reps, coeffs = transversal(code)
    side = code.words().astype(np.int64) if exhaustive else reps
    if test == "definitional":
        accept = _all_gray_sums_in_code(code, reps, side)
    elif test == "carry":
        accept = _all_carry_words_in_code(code, reps, side)
    else:
        raise ValueError(f"unknown kernel test {test!r}")
    S = _accepted_subgroup(accept, coeffs, code.p)
    t = code.type
    k = t.gamma + t.delta + round(math.log(len(S), code.p))
    return KernelReport(k, base - k, S, "coset", code.p)


def _gray_index(G: np.ndarray, p: int) -> MembershipIndex:
    return MembershipIndex(G, p, G.shape[1], 0)


def _span(basis: list[np.ndarray], p: int) -> np.ndarray:
    B = np.array(basis, dtype=np.int64)
    coeffs = np.array(list(itertools.product(range(p), repeat=len(basis))), dtype=np.int64)
    return coeffs @ B % p


def _row_keys(rows: np.ndarray, index: MembershipIndex) -> list:
    if index._use_int:
        return index.keys(rows).tolist()
    return [bytes(r) for r in np.ascontiguousarray(rows, dtype=np.int64)]


def brute_force_kernel_basis(code: AdditiveCode, sample: int = 256, seed: int = 0) -> list[np.ndarray]:
    """A Z_p basis of ``K(C)`` found from the Gray image set alone.

    Only uses that K(C) is closed under addition: candidates already in the
    span of accepted vectors are skipped, the rest are checked against every
    codeword (after a cheap rejection pass against a random sample of
    codewords).
    """
    p = code.p
    G = code.gray_words()
    idx = _gray_index(G, p)
    rng = np.random.default_rng(seed)
    survivors = np.arange(len(G))
    idle = 0
    for j in rng.permutation(len(G))[: min(sample, len(G))]:
        before = len(survivors)
        survivors = survivors[idx.contains_many((G[survivors] + G[j]) % p)]
        # stop probing once the survivors look like a fixed set
        idle = idle + 1 if len(survivors) == before else 0
        if idle == 8:
            break
    basis: list[np.ndarray] = []
    zero = np.zeros(G.shape[1], dtype=G.dtype)
    survivors = survivors[np.any(G[survivors] != zero, axis=1)]
    while len(survivors):
        x = G[survivors[0]]
        survivors = survivors[1:]
        if not idx.contains_many((G + x) % p).all():
            continue
        basis.append(x)
        span = _span(basis, p)
        survivors = survivors[~_gray_index(span, p).contains_many(G[survivors])]
    return basis


def brute_force_kernel_set(code: AdditiveCode) -> np.ndarray:
    """Every Gray vector x of C with ``x + C = C``, each tested in full (small codes only)."""
    p = code.p
    G = code.gray_words()
    idx = _gray_index(G, p)
    keep = [i for i in range(len(G)) if idx.contains_many((G + G[i]) % p).all()]
    return G[keep]


def kernel_code(code: AdditiveCode, report: KernelReport | None = None) -> AdditiveCode:
    """The additive subcode whose Gray image is K(C)."""
    if report is None or report.method != "coset":
        report = kernel(code)
    p = code.p
    gens = list(code.u_rows) + [p * v for v in code.v_rows]
    for a in report.subgroup_basis.tolist():
        w = MixedWord.zero(p, code.alpha, code.beta)
        for aj, v in zip(a, code.v_rows):
            w = w + aj * v
        gens.append(w)
    gens = [g for g in gens if not g.is_zero()]
    return AdditiveCode(GeneratorMatrix.spanning(p, code.alpha, code.beta, gens), cap=code.cap)


def complement_rows(report: KernelReport, p: int, delta: int) -> list[int]:
    """Indices ``j`` such that the unit vectors ``e_j`` complement S in Z_p^delta."""
    basis = report.subgroup_basis
    rows = [r for r in basis] if basis.size else []
    chosen = []
    for j in range(delta):
        e = np.zeros(delta, dtype=np.int64)
        e[j] = 1
        trial = np.array(rows + [e]).reshape(-1, delta)
        if rank_mod_p(trial, p) > len(rows):
            rows.append(e)
            chosen.append(j)
    return chosen


def coset_decomposition_check(code: AdditiveCode, report: KernelReport) -> bool:
    """Check that C is the disjoint union of ``K(C) + Phi(sum a_i v_i)``.

    The ``v_i`` are the order-p^2 rows indexed by :func:`complement_rows` and
    ``a`` runs over Z_p^(k_bar); none of the chosen rows maps into K(C).
    """
    p, alpha = code.p, code.alpha
    K = kernel_code(code, report).gray_words()
    chosen = complement_rows(report, p, len(code.v_rows))
    if len(chosen) != report.k_bar:
        return False
    G = code.gray_words()
    idx = _gray_index(G, p)
    kidx = _gray_index(K, p)
    for j in chosen:
        g = gray_batch(np.array([code.v_rows[j].flat()]), p, alpha)[0]
        if kidx.contains_many(g[None, :])[0]:
            return False
    seen: set = set()
    total = 0
    for a in itertools.product(range(p), repeat=len(chosen)):
        w = MixedWord.zero(p, alpha, code.beta)
        for aj, j in zip(a, chosen):
            w = w + aj * code.v_rows[j]
        shift = gray_batch(np.array([w.flat()]), p, alpha)[0]
        coset = (K + shift) % p
        if not idx.contains_many(coset).all():
            return False
        keys = _row_keys(coset, idx)
        seen.update(keys)
        total += len(keys)
    return total == len(seen) == len(G)


def min_hamming_distance(code: AdditiveCode) -> int:
    """Minimum Hamming weight of a nonzero Gray codeword."""
    w = hom_weight_batch(code.words().astype(np.int64), code.p, code.alpha)
    nonzero = w[w > 0]
    if nonzero.size == 0:
        raise ValueError("the zero code has no minimum distance")
    return int(nonzero.min())

"""The Gray map Z_{p^2} -> Z_p^p, its coordinatewise extension, and carries.

``phi(theta) = high * (1, ..., 1) + low * (0, 1, ..., p - 1)`` where
``theta = high * p + low``.  It turns homogeneous distance on Z_{p^2} into
Hamming distance on Z_p^p.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .ring_arith import check_prime, digits
from .words import MixedWord, ShapeError


class NotGrayImage(ValueError):
    """Raised when a vector is not in the image of the Gray map."""

    def __init__(self, block) -> None:
        super().__init__(f"not a Gray image: {tuple(block)}")


def phi(theta: int, p: int) -> tuple[int, ...]:
    low, high = digits(theta, p)
    return tuple((high + low * i) % p for i in range(p))


def phi_inverse(block: Sequence[int], p: int) -> int:
    check_prime(p)
    block = [int(b) % p for b in block]
    if len(block) != p:
        raise NotGrayImage(block)
    high = block[0]
    low = (block[1] - block[0]) % p
    if any((high + low * i) % p != b for i, b in enumerate(block)):
        raise NotGrayImage(block)
    return high * p + low


def big_phi(w: MixedWord) -> tuple[int, ...]:
    """Gray image of a mixed word, of length ``alpha + p * beta``."""
    out = list(w.x)
    for theta in w.y:
        out.extend(phi(theta, w.p))
    return tuple(out)


def big_phi_inverse(g: Sequence[int], p: int, alpha: int, beta: int) -> MixedWord:
    g = list(g)
    if len(g) != alpha + p * beta:
        raise ShapeError(f"Gray word of length {len(g)} does not fit alpha={alpha}, beta={beta}")
    y = [phi_inverse(g[alpha + p * j : alpha + p * (j + 1)], p) for j in range(beta)]
    return MixedWord(p, tuple(g[:alpha]), tuple(y))


def hom_weight(theta: int, p: int) -> int:
    theta %= p * p
    if theta == 0:
        return 0
    return p if theta % p == 0 else p - 1


def hom_distance(a: Sequence[int], b: Sequence[int], p: int) -> int:
    if len(a) != len(b):
        raise ShapeError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(hom_weight(s - t, p) for s, t in zip(a, b))


def carry_P(u: MixedWord, v: MixedWord) -> MixedWord:
    """Per-coordinate carry of the low digits: 1 where ``u' + v' >= p``."""
    u._check(v)
    p = u.p
    y = tuple(int(s % p + t % p >= p) for s, t in zip(u.y, v.y))
    return MixedWord(p, (0,) * u.alpha, y)


def p_carry_Pprime(u: MixedWord, v: MixedWord) -> MixedWord:
    """The correction word ``p * P'(u, v)`` with ``P = (p - 1) P'``.

    Since ``(p - 1)^-1 = p - 1`` mod p, each carrying coordinate holds
    ``p * (p - 1)`` in Z_{p^2}, and
    ``Phi(u + v) = Phi(u) + Phi(v) + (p - 1) Phi(p P'(u, v))``.
    """
    carry = carry_P(u, v)
    return MixedWord(u.p, carry.x, tuple(u.p * (u.p - 1) * c for c in carry.y))


def cubic_correction(u: MixedWord, v: MixedWord) -> MixedWord:
    """For p = 3, the word ``3 (u*v + u*u*v + u*v*v)`` with the X part zeroed.

    Satisfies ``Phi(u + v) = Phi(u) + Phi(v) + 2 Phi(cubic_correction(u, v))``.
    """
    u._check(v)
    if u.p != 3:
        raise ValueError("the cubic carry polynomial is only valid for p = 3")
    y = tuple(3 * (a * b + a * a * b + a * b * b) for a, b in zip(u.y, v.y))
    return MixedWord(3, (0,) * u.alpha, y)


# -- batched ----------------------------------------------------------------


def gray_batch(words: np.ndarray, p: int, alpha: int) -> np.ndarray:
    """Gray images of a batch of words, shape (N, alpha + p * beta)."""
    words = np.asarray(words)
    x = words[:, :alpha] % p
    y = words[:, alpha:] % (p * p)
    low, high = y % p, y // p
    ramp = np.arange(p, dtype=words.dtype)
    blocks = (high[:, :, None] + low[:, :, None] * ramp) % p
    return np.concatenate([x, blocks.reshape(len(words), -1)], axis=1)


def gray_inverse_batch(g: np.ndarray, p: int, alpha: int, beta: int) -> tuple[np.ndarray, np.ndarray]:
    """Invert a batch of Gray vectors.

    Returns ``(words, valid)``; rows where ``valid`` is False are not in the
    image of the Gray map and their ``words`` entries are meaningless.
    """
    g = np.asarray(g) % p
    blocks = g[:, alpha:].reshape(len(g), beta, p)
    high = blocks[:, :, 0]
    low = (blocks[:, :, 1] - high) % p if p > 1 else np.zeros_like(high)
    ramp = np.arange(p, dtype=g.dtype)
    valid = np.all((high[:, :, None] + low[:, :, None] * ramp) % p == blocks, axis=(1, 2))
    words = np.concatenate([g[:, :alpha], high * p + low], axis=1)
    return words, valid


def hom_weight_batch(words: np.ndarray, p: int, alpha: int) -> np.ndarray:
    """Hamming weight of X plus homogeneous weight of Y, per row."""
    words = np.asarray(words)
    x = words[:, :alpha] % p
    y = words[:, alpha:] % (p * p)
    wy = np.where(y == 0, 0, np.where(y % p == 0, p, p - 1))
    return np.count_nonzero(x, axis=1) + wy.sum(axis=1)


def carry_batch(u: np.ndarray, v: np.ndarray, p: int, alpha: int) -> np.ndarray:
    """Batched ``p * P'(u, v)`` (X part zero)."""
    out = np.zeros(np.broadcast_shapes(u.shape, v.shape), dtype=np.int64)
    carry = (u[..., alpha:] % p) + (v[..., alpha:] % p) >= p
    out[..., alpha:] = carry * (p * (p - 1))
    return out

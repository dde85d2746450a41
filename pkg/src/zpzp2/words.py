"""Words of Z_p^alpha x Z_{p^2}^beta and their batched array form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .ring_arith import check_prime


class ShapeError(ValueError):
    """Raised when words of different shapes (p, alpha, beta) are combined."""


@dataclass(frozen=True)
class MixedWord:
    """An element ``(x | y)`` with ``x`` over Z_p and ``y`` over Z_{p^2}.

    Entries are stored as their smallest nonnegative residues.
    """

    p: int
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        q = self.p * self.p
        object.__setattr__(self, "x", tuple(int(a) % self.p for a in self.x))
        object.__setattr__(self, "y", tuple(int(b) % q for b in self.y))

    @classmethod
    def zero(cls, p: int, alpha: int, beta: int) -> MixedWord:
        return cls(p, (0,) * alpha, (0,) * beta)

    @classmethod
    def from_flat(cls, p: int, alpha: int, values: Sequence[int]) -> MixedWord:
        values = [int(v) for v in values]
        return cls(p, tuple(values[:alpha]), tuple(values[alpha:]))

    @classmethod
    def parse(cls, p: int, text: str) -> MixedWord:
        """Parse the literal ``"x1,x2|y1,y2"``; either side may be empty."""
        if text.count("|") != 1:
            raise ValueError(f"word literal needs exactly one '|': {text!r}")
        left, right = text.split("|")

        def entries(part: str) -> tuple[int, ...]:
            part = part.strip()
            if not part:
                return ()
            return tuple(int(tok) for tok in part.split(","))

        return cls(p, entries(left), entries(right))

    @property
    def alpha(self) -> int:
        return len(self.x)

    @property
    def beta(self) -> int:
        return len(self.y)

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.p, len(self.x), len(self.y))

    def flat(self) -> tuple[int, ...]:
        return self.x + self.y

    def is_zero(self) -> bool:
        return not any(self.x) and not any(self.y)

    def _check(self, other: MixedWord) -> None:
        if not isinstance(other, MixedWord) or other.shape != self.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {getattr(other, 'shape', other)}")

    def __add__(self, other: MixedWord) -> MixedWord:
        return word_add(self, other)

    def __sub__(self, other: MixedWord) -> MixedWord:
        return word_add(self, word_scale(-1, other))

    def __neg__(self) -> MixedWord:
        return word_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, MixedWord):
            return word_star(self, other)
        if isinstance(other, (int, np.integer)):
            return word_scale(int(other), self)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ",".join(map(str, self.x)) + "|" + ",".join(map(str, self.y))


def word_add(u: MixedWord, v: MixedWord) -> MixedWord:
    u._check(v)
    return MixedWord(u.p, tuple(a + b for a, b in zip(u.x, v.x)), tuple(a + b for a, b in zip(u.y, v.y)))


def word_scale(a: int, u: MixedWord) -> MixedWord:
    return MixedWord(u.p, tuple(a * t for t in u.x), tuple(a * t for t in u.y))


def word_star(u: MixedWord, v: MixedWord) -> MixedWord:
    """Componentwise product, mod p on X and mod p^2 on Y."""
    u._check(v)
    return MixedWord(u.p, tuple(a * b for a, b in zip(u.x, v.x)), tuple(a * b for a, b in zip(u.y, v.y)))


def word_order(u: MixedWord) -> int:
    """Smallest positive ``a`` with ``a * u == 0``: one of 1, p, p^2."""
    if u.is_zero():
        return 1
    if all(t % u.p == 0 for t in u.y):
        return u.p
    return u.p * u.p


# -- batched form -----------------------------------------------------------
# A batch of words is an integer array of shape (N, alpha + beta); the first
# alpha columns hold Z_p entries and the rest Z_{p^2} entries.


def column_moduli(p: int, alpha: int, beta: int) -> np.ndarray:
    return np.array([p] * alpha + [p * p] * beta, dtype=np.int64)


def as_array(words: Iterable[MixedWord], p: int, alpha: int, beta: int) -> np.ndarray:
    words = list(words)
    arr = np.zeros((len(words), alpha + beta), dtype=np.int64)
    for i, w in enumerate(words):
        if w.shape != (p, alpha, beta):
            raise ShapeError(f"word {w} does not have shape {(p, alpha, beta)}")
        arr[i] = w.flat()
    return arr


def from_array(arr: np.ndarray, p: int, alpha: int) -> list[MixedWord]:
    return [MixedWord.from_flat(p, alpha, row) for row in np.asarray(arr).tolist()]


def normalize(arr: np.ndarray, p: int, alpha: int) -> np.ndarray:
    """Reduce a batch in place: X columns mod p, Y columns mod p^2."""
    arr[:, :alpha] %= p
    arr[:, alpha:] %= p * p
    return arr

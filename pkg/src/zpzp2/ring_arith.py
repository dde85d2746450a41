"""Residue arithmetic modulo p and p^2 for odd primes p."""

from __future__ import annotations

from functools import lru_cache

MAX_PRIME = 97


class RingError(ValueError):
    """Raised on invalid residues, primes or non-invertible elements."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """Validate ``p`` as an odd prime no larger than ``MAX_PRIME`` and return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise RingError(f"p must be an integer, got {p!r}")
    if not is_prime(p):
        raise RingError(f"p={p} is not prime")
    if p < 3:
        raise RingError("p must be an odd prime (p >= 3)")
    if p > MAX_PRIME:
        raise RingError(f"p={p} exceeds the supported bound {MAX_PRIME}")
    return p


def digits(theta: int, p: int) -> tuple[int, int]:
    """Split ``theta`` in Z_{p^2} as ``theta = high * p + low``.

    Returns ``(low, high)``, the low digit first.

    >>> digits(7, 3)
    (1, 2)
    """
    theta %= p * p
    return theta % p, theta // p


def inv_mod_p(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise RingError(f"no inverse: 0 mod {p}")
    return pow(a, -1, p)


def inv_mod_p2(a: int, p: int) -> int:
    """Inverse of a unit of Z_{p^2}."""
    if a % p == 0:
        raise RingError(f"no inverse: {a} is not a unit mod {p * p}")
    return pow(a, -1, p * p)

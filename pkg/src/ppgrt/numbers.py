"""Random number plumbing and modular-arithmetic helpers.

All probabilistic operations in the package draw from an injectable
``random.Random``-compatible source so runs can be replayed with a seeded
generator.  The default source is ``random.SystemRandom``.
"""
from __future__ import annotations

import math
import random

import gmpy2

# Miller-Rabin rounds used for final acceptance of generated primes.
_PRIME_ROUNDS = 30
# Candidates examined per prime before giving up; scaled with bit size for
# safe primes, whose density is far lower.
_MAX_PRIME_ATTEMPTS = 200_000

powmod = gmpy2.powmod


def default_rng() -> random.Random:
    """OS-backed randomness source used when none is injected."""
    return random.SystemRandom()


def rng_or_default(rng: random.Random | None) -> random.Random:
    return rng if rng is not None else default_rng()


def invmod(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n``; raises CryptoError if not invertible."""
    from .errors import CryptoError

    try:
        return int(gmpy2.invert(a, n))
    except ZeroDivisionError:
        raise CryptoError(f"value not invertible modulo n (gcd != 1)") from None


def is_probable_prime(n: int) -> bool:
    return bool(gmpy2.is_prime(n, _PRIME_ROUNDS))


def random_prime(bits: int, rng: random.Random) -> int:
    """Uniformly sampled probable prime with the top bit set."""
    from .errors import CryptoError

    if bits < 8:
        raise ValueError(f"prime size too small: {bits} bits")
    for _ in range(_MAX_PRIME_ATTEMPTS):
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(candidate):
            return candidate
    raise CryptoError(f"prime generation exceeded attempt budget at {bits} bits")


def random_safe_prime(bits: int, rng: random.Random) -> tuple[int, int]:
    """Probable safe prime ``p = 2*p' + 1``; returns ``(p, p')``."""
    from .errors import CryptoError

    if bits < 8:
        raise ValueError(f"prime size too small: {bits} bits")
    # Sophie-Germain density ~ 1/ln^2; give the search room to breathe.
    budget = _MAX_PRIME_ATTEMPTS * max(1, bits // 64)
    for _ in range(budget):
        sophie = rng.getrandbits(bits - 1) | (1 << (bits - 2)) | 1
        p = 2 * sophie + 1
        if gmpy2.is_prime(sophie, 10) and is_probable_prime(p) and is_probable_prime(sophie):
            return p, sophie
    raise CryptoError(f"safe-prime generation exceeded attempt budget at {bits} bits")


def random_unit(n: int, rng: random.Random) -> int:
    """Uniform element of Z_n^* (nonzero, coprime with n)."""
    while True:
        r = rng.randrange(1, n)
        if math.gcd(r, n) == 1:
            return r


def int_to_bytes(x: int, length: int | None = None) -> bytes:
    """Big-endian encoding, minimal length unless ``length`` is given."""
    if length is None:
        length = max(1, (x.bit_length() + 7) // 8)
    return x.to_bytes(length, "big")

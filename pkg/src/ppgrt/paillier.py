"""Paillier cryptosystem over safe-prime moduli.

Implements key generation, probabilistic encryption, decryption via the
L function, and the two homomorphic properties the matching layer relies
on: multiplying ciphertexts adds plaintexts, and raising a ciphertext to a
scalar multiplies its plaintext.

Keys default to ``g = n + 1``, which always has order ``n`` in Z*_{n^2}
and makes ``L(g^lambda mod n^2) = lambda mod n`` invertible whenever
``gcd(lambda, n) = 1``.  Arbitrary valid bases can be injected through
``keygen_from_primes`` for tests.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import CryptoError
from .numbers import (
    invmod,
    is_probable_prime,
    powmod,
    random_prime,
    random_safe_prime,
    random_unit,
    rng_or_default,
)

MIN_KEY_BITS = 128


@dataclass(frozen=True)
class PaillierPublic:
    """Public half of a keypair.

    ``n`` is the composite modulus, ``n_squared`` its cached square, and
    ``g`` a base of Z*_{n^2} whose order is a nonzero multiple of ``n``.
    """

    n: int
    n_squared: int
    g: int
    bit_length: int


@dataclass(frozen=True)
class PaillierSecret:
    """Secret half of a keypair.

    ``lam`` is the Carmichael value lcm(p-1, q-1) and ``mu`` the
    precomputed inverse of ``L(g^lam mod n^2)`` modulo ``n``.  The
    Sophie-Germain cofactors ``p_prime``/``q_prime`` are populated only
    when the key was generated in safe-prime mode.
    """

    p: int
    q: int
    p_prime: int | None
    q_prime: int | None
    lam: int
    mu: int

    @property
    def phi_n(self) -> int:
        return (self.p - 1) * (self.q - 1)

    @property
    def phi_n_squared(self) -> int:
        return self.p * self.q * self.phi_n


@dataclass(frozen=True)
class Ciphertext:
    """A Paillier ciphertext: an element of Z*_{n^2}."""

    value: int


def keygen(bits: int, safe_primes: bool = True,
           rng: random.Random | None = None) -> tuple[PaillierPublic, PaillierSecret]:
    """Generate a keypair with an exactly ``bits``-bit modulus.

    ``safe_primes`` selects primes of the form 2p'+1 (slow at large sizes
    but matches the intended deployment); turning it off is fine for test
    keys since correctness only needs ``gcd(lambda, n) = 1``, which is
    validated either way.
    """
    if bits < MIN_KEY_BITS:
        raise ValueError(f"modulus size must be >= {MIN_KEY_BITS} bits, got {bits}")
    rng = rng_or_default(rng)
    half = bits // 2
    while True:
        if safe_primes:
            p, p_prime = random_safe_prime(half, rng)
            q, q_prime = random_safe_prime(bits - half, rng)
        else:
            p, q = random_prime(half, rng), random_prime(bits - half, rng)
            p_prime = q_prime = None
        if p == q or (p * q).bit_length() != bits:
            continue
        return _assemble(p, q, p_prime, q_prime, g=None)


def keygen_from_primes(p: int, q: int,
                       g: int | None = None) -> tuple[PaillierPublic, PaillierSecret]:
    """Test hook: build a deterministic keypair from explicit primes.

    ``g`` defaults to n+1; any base whose ``L(g^lambda mod n^2)`` is
    invertible mod n is accepted, others raise CryptoError.
    """
    if p == q or not (is_probable_prime(p) and is_probable_prime(q)):
        raise CryptoError("p and q must be distinct primes")
    p_prime = (p - 1) // 2 if is_probable_prime((p - 1) // 2) else None
    q_prime = (q - 1) // 2 if is_probable_prime((q - 1) // 2) else None
    return _assemble(p, q, p_prime, q_prime, g)


def _assemble(p, q, p_prime, q_prime, g):
    n = p * q
    n_squared = n * n
    lam = math.lcm(p - 1, q - 1)
    if math.gcd(lam, n) != 1:
        raise CryptoError("degenerate primes: gcd(lambda, n) != 1")
    if g is None:
        g = n + 1
    if not (1 < g < n_squared) or math.gcd(g, n_squared) != 1:
        raise CryptoError("base g is not a unit of Z*_{n^2}")
    # Valid bases have order a nonzero multiple of n, equivalently
    # L(g^lambda mod n^2) invertible mod n.
    l_value = l_function(int(powmod(g, lam, n_squared)), n)
    if math.gcd(l_value, n) != 1:
        raise CryptoError("base g has invalid order (L(g^lambda) not invertible)")
    public = PaillierPublic(n=n, n_squared=n_squared, g=g, bit_length=n.bit_length())
    secret = PaillierSecret(p=p, q=q, p_prime=p_prime, q_prime=q_prime,
                            lam=lam, mu=invmod(l_value, n))
    return public, secret


def l_function(x: int, n: int) -> int:
    """The map L(x) = (x-1)/n, defined only for x = 1 (mod n)."""
    quotient, remainder = divmod(x - 1, n)
    if remainder != 0:
        raise CryptoError("L function input not congruent to 1 modulo n")
    return quotient


def encrypt(pk: PaillierPublic, x: int, r: int | None = None,
            rng: random.Random | None = None) -> Ciphertext:
    """Encrypt ``x`` as g^x * r^n mod n^2 with fresh (or supplied) r."""
    if not 0 <= x < pk.n:
        raise ValueError(f"plaintext out of range [0, n): {x}")
    if r is None:
        r = random_unit(pk.n, rng_or_default(rng))
    elif not (0 < r < pk.n) or math.gcd(r, pk.n) != 1:
        raise CryptoError("randomizer r must be a unit of Z_n")
    if pk.g == pk.n + 1:
        g_x = (1 + x * pk.n) % pk.n_squared  # (1+n)^x by the binomial theorem
    else:
        g_x = int(powmod(pk.g, x, pk.n_squared))
    value = g_x * int(powmod(r, pk.n, pk.n_squared)) % pk.n_squared
    return Ciphertext(value)


def decrypt(sk: PaillierSecret, pk: PaillierPublic, y: Ciphertext) -> int:
    """Recover the plaintext: L(y^lambda mod n^2) * mu mod n."""
    check_ciphertext(pk, y)
    powered = int(powmod(y.value, sk.lam, pk.n_squared))
    return l_function(powered, pk.n) * sk.mu % pk.n


def check_ciphertext(pk: PaillierPublic, y: Ciphertext) -> None:
    """Validate ciphertext range and invertibility under ``pk``."""
    if not 0 < y.value < pk.n_squared:
        raise CryptoError("ciphertext outside Z_{n^2}; modulus mismatch?")
    if math.gcd(y.value, pk.n_squared) != 1:
        raise CryptoError("ciphertext not a unit of Z*_{n^2}")


def hom_add(pk: PaillierPublic, y1: Ciphertext, y2: Ciphertext) -> Ciphertext:
    """Ciphertext of x1 + x2 mod n, by multiplying ciphertexts."""
    check_ciphertext(pk, y1)
    check_ciphertext(pk, y2)
    return Ciphertext(y1.value * y2.value % pk.n_squared)


def hom_scale(pk: PaillierPublic, y: Ciphertext, sigma: int) -> Ciphertext:
    """Ciphertext of sigma * x mod n, by exponentiation."""
    if sigma < 1:
        raise ValueError(f"scalar must be >= 1, got {sigma}")
    check_ciphertext(pk, y)
    return Ciphertext(int(powmod(y.value, sigma, pk.n_squared)))

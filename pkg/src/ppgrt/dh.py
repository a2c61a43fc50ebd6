"""Diffie-Hellman agreement of the query-salting secret.

The database owner and the test issuer run a classic modular DH exchange
and derive two Z_n scalars ``(a, b)`` from the shared value.  Those
scalars parameterize the per-position salt ``a*x_j + b`` that keeps the
storage server from fabricating valid queries on its own.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .errors import CryptoError
from .numbers import int_to_bytes, rng_or_default

BINDING_LETTER_ONLY = "letter-only"
BINDING_POSITION_LETTER = "position-and-letter"
BINDING_MODES = (BINDING_LETTER_ONLY, BINDING_POSITION_LETTER)


@dataclass(frozen=True)
class DhGroup:
    """A multiplicative group modulo a prime, with generator ``g``."""

    prime: int
    generator: int

    @property
    def bits(self) -> int:
        return self.prime.bit_length()


# RFC 2409 Oakley group 2: the standard 1024-bit MODP group.
OAKLEY_GROUP_2 = DhGroup(
    prime=int(
        "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E08"
        "8A67CC74020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B"
        "302B0A6DF25F14374FE1356D6D51C245E485B576625E7EC6F44C42E9"
        "A637ED6B0BFF5CB6F406B7EDEE386BFB5A899FA5AE9F24117C4B1FE6"
        "49286651ECE65381FFFFFFFFFFFFFFFF", 16),
    generator=2,
)

DEFAULT_GROUP = OAKLEY_GROUP_2


@dataclass(frozen=True)
class DhPrivate:
    group: DhGroup
    exponent: int


@dataclass(frozen=True)
class DhPublic:
    group: DhGroup
    value: int


@dataclass(frozen=True)
class SharedSecret:
    """Salt coefficients agreed by both encrypting parties.

    ``binding_mode`` states what the per-position salt commits to:
    position-and-letter binding is stronger but only position-aligned
    comparisons (Hamming) can use it; cross-position algorithms (LCS,
    edit) need letter-only binding.
    """

    a: int
    b: int
    binding_mode: str = BINDING_LETTER_ONLY

    def __post_init__(self):
        if self.binding_mode not in BINDING_MODES:
            raise CryptoError(f"unknown binding mode: {self.binding_mode}")


def dh_keypair(group: DhGroup = DEFAULT_GROUP,
               rng: random.Random | None = None) -> tuple[DhPrivate, DhPublic]:
    """Fresh exponent in [2, p-2] and the matching public value."""
    rng = rng_or_default(rng)
    x = rng.randrange(2, group.prime - 1)
    return DhPrivate(group, x), DhPublic(group, pow(group.generator, x, group.prime))


def check_peer_public(group: DhGroup, peer: DhPublic) -> None:
    if peer.group != group:
        raise CryptoError("mismatched group parameters")
    if not 1 < peer.value < group.prime - 1:
        raise CryptoError("peer public value outside the valid range")


def dh_derive(private: DhPrivate, peer: DhPublic, n: int,
              binding_mode: str = BINDING_LETTER_ONLY,
              algorithm: str = "sha256") -> SharedSecret:
    """Derive the (a, b) salt coefficients from the DH shared value.

    Both sides call this with their own private half and the peer's
    public half and obtain identical scalars in Z_n.
    """
    check_peer_public(private.group, peer)
    shared = pow(peer.value, private.exponent, private.group.prime)
    blob = int_to_bytes(shared, (private.group.prime.bit_length() + 7) // 8)
    return SharedSecret(a=_kdf(b"kdf-a", blob, n, algorithm),
                        b=_kdf(b"kdf-b", blob, n, algorithm),
                        binding_mode=binding_mode)


def _kdf(tag: bytes, blob: bytes, n: int, algorithm: str) -> int:
    import math

    need = (n.bit_length() + 7) // 8 + 8
    for attempt in range(64):
        buf = b""
        block = 0
        while len(buf) < need:
            h = hashlib.new(algorithm)
            h.update(tag)
            h.update(attempt.to_bytes(2, "big"))
            h.update(block.to_bytes(2, "big"))
            h.update(blob)
            buf += h.digest()
            block += 1
        value = int.from_bytes(buf[:need], "big") % n
        if value != 0 and math.gcd(value, n) == 1:
            return value
    raise CryptoError("key derivation failed; modulus is degenerate")

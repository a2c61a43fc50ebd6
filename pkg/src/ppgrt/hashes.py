"""Domain-separated hashing into Z_n^*.

One underlying digest (SHA-256 by default, MD5 available for
compatibility with legacy deployments) serves all three roles the scheme
needs: letter hashing, group-element hashing, and salted letter hashing.
Separation comes from a role tag mixed into every digest input.  Outputs
are expanded past the modulus width and reduced mod n, re-hashing on the
rare non-unit result so every returned value is invertible.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

from .errors import CryptoError
from .haplotypes import Haplotype
from .numbers import int_to_bytes

SUPPORTED_ALGORITHMS = ("sha256", "md5")

_TAG_LETTER = b"H"
_TAG_GROUP = b"H0"
_TAG_SALTED = b"Hp"


def _letter_byte(letter) -> bytes:
    text = letter.letters if isinstance(letter, Haplotype) else letter
    if len(text) != 1:
        raise ValueError(f"expected a single letter, got {text!r}")
    return text.encode("ascii")


@dataclass(frozen=True)
class HashSuite:
    """Hashes tied to a modulus ``n`` and a digest algorithm name."""

    n: int
    algorithm: str = "sha256"

    def __post_init__(self):
        if self.algorithm not in SUPPORTED_ALGORITHMS:
            raise CryptoError(f"unsupported hash algorithm: {self.algorithm}")

    def _to_unit(self, tag: bytes, data: bytes) -> int:
        """Expand digest output past |n| and reduce into Z_n^*."""
        need = (self.n.bit_length() + 7) // 8 + 8
        for attempt in range(64):
            buf = b""
            block = 0
            while len(buf) < need:
                h = hashlib.new(self.algorithm)
                h.update(tag)
                h.update(attempt.to_bytes(2, "big"))
                h.update(block.to_bytes(2, "big"))
                h.update(data)
                buf += h.digest()
                block += 1
            value = int.from_bytes(buf[:need], "big") % self.n
            if value != 0 and math.gcd(value, self.n) == 1:
                return value
        raise CryptoError("hash-to-unit failed; modulus is degenerate")

    def letter(self, letter) -> int:
        """H: the hash of one letter's encoding."""
        return self._to_unit(_TAG_LETTER, _letter_byte(letter))

    def position_letter(self, position: int, letter) -> int:
        """H over position-and-letter, for position-bound salts."""
        if position < 1:
            raise ValueError(f"positions are 1-based, got {position}")
        return self._to_unit(_TAG_LETTER,
                             position.to_bytes(8, "big") + _letter_byte(letter))

    def group_element(self, element: int) -> int:
        """H0: the hash of an element of the order-n group."""
        width = (self.n.bit_length() + 7) // 8
        return self._to_unit(_TAG_GROUP, int_to_bytes(element % self.n, width))

    def salted_letter(self, letter, salt: int) -> int:
        """H': the hash of a letter together with a Z_n salt."""
        width = (self.n.bit_length() + 7) // 8
        return self._to_unit(_TAG_SALTED,
                             _letter_byte(letter) + int_to_bytes(salt % self.n, width))

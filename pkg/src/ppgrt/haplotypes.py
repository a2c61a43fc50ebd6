"""Haplotype data model: parsing, segmentation, and payload encryption.

A haplotype is a string over the five-letter alphabet A, G, C, T, ``*``
(``*`` marks unknown positions).  Each letter is encoded as its ASCII
byte, so the hash-input width per letter is 8 bits and encoded files stay
human-readable.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import HaplotypeError, LengthMismatchError
from .numbers import rng_or_default

ALPHABET = "AGCT*"
PAD_LETTER = "*"

_LETTER_SET = frozenset(ALPHABET)


@dataclass(frozen=True)
class Haplotype:
    """An immutable letter sequence over the haplotype alphabet."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise HaplotypeError("empty haplotype")
        for i, ch in enumerate(self.letters, start=1):
            if ch not in _LETTER_SET:
                raise HaplotypeError(
                    f"invalid letter {ch!r} at position {i}", position=i)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    @property
    def encoded(self) -> bytes:
        """Canonical byte encoding (one ASCII byte per letter)."""
        return self.letters.encode("ascii")


@dataclass(frozen=True)
class SegmentedHaplotype:
    """Fixed-width segments of a haplotype; the last one is ``*``-padded."""

    segments: tuple[Haplotype, ...]
    segment_length: int


@dataclass(frozen=True)
class OtpKey:
    """One-time pad with the same byte length as the encoded haplotype."""

    pad: bytes


def parse_haplotype(text: str) -> Haplotype:
    """Parse one haplotype from text.

    Surrounding whitespace is trimmed and lowercase letters are folded to
    uppercase; any other character is rejected with its 1-based position.
    """
    folded = text.strip().upper()
    return Haplotype(folded)


def decode_haplotype(data: bytes) -> Haplotype:
    """Inverse of ``Haplotype.encoded``."""
    try:
        return Haplotype(data.decode("ascii"))
    except UnicodeDecodeError as exc:
        raise HaplotypeError(f"bytes are not a letter encoding: {exc}") from None


def segment(h: Haplotype, seg_len: int) -> SegmentedHaplotype:
    """Cut ``h`` into ceil(len/seg_len) segments of ``seg_len`` letters.

    The final segment is padded with ``*`` up to full length, so joining
    the segments and stripping trailing pad letters reproduces ``h``.
    """
    if seg_len < 1:
        raise ValueError(f"segment length must be >= 1, got {seg_len}")
    pieces = []
    for start in range(0, len(h), seg_len):
        chunk = h.letters[start:start + seg_len]
        if len(chunk) < seg_len:
            chunk = chunk + PAD_LETTER * (seg_len - len(chunk))
        pieces.append(Haplotype(chunk))
    return SegmentedHaplotype(segments=tuple(pieces), segment_length=seg_len)


def join_segments(sh: SegmentedHaplotype, original_length: int) -> Haplotype:
    """Reassemble a segmented haplotype, dropping the padding."""
    joined = "".join(s.letters for s in sh.segments)
    return Haplotype(joined[:original_length])


def otp_key_for(h: Haplotype, rng: random.Random | None = None) -> OtpKey:
    """Fresh pad as long as the encoded haplotype."""
    return OtpKey(rng_or_default(rng).randbytes(len(h)))


def otp_encrypt(key: OtpKey, h: Haplotype) -> bytes:
    """XOR the encoded haplotype with the pad."""
    encoded = h.encoded
    if len(key.pad) != len(encoded):
        raise LengthMismatchError(
            f"pad length {len(key.pad)} != haplotype length {len(encoded)}")
    return bytes(a ^ b for a, b in zip(encoded, key.pad))


def otp_decrypt(key: OtpKey, data: bytes) -> Haplotype:
    """Inverse of ``otp_encrypt``; validates the recovered letters."""
    if len(key.pad) != len(data):
        raise LengthMismatchError(
            f"pad length {len(key.pad)} != ciphertext length {len(data)}")
    return decode_haplotype(bytes(a ^ b for a, b in zip(data, key.pad)))


def read_haplotype_file(path) -> list[Haplotype]:
    """Load haplotypes from a UTF-8 text file, one per line.

    Blank lines and ``#``-prefixed comment lines are ignored.  Parse
    errors are re-raised with the offending line number.
    """
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                out.append(parse_haplotype(stripped))
            except HaplotypeError as exc:
                raise HaplotypeError(f"{path}:{lineno}: {exc}",
                                     position=exc.position) from None
    return out


def write_haplotype_file(path, haplotypes) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for h in haplotypes:
            fh.write(h.letters + "\n")

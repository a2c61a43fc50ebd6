"""Exception types shared across the package."""


class PpgrtError(Exception):
    """Base class for all library errors."""


class CryptoError(PpgrtError):
    """Invalid cryptographic input or state (bad key material, malformed
    ciphertext, mode mismatch, failed integrity precondition)."""


class FormatError(PpgrtError):
    """Malformed key/EDB/query/result file or wire frame."""


class HaplotypeError(PpgrtError):
    """Rejected haplotype text. ``position`` is 1-based when known."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class LengthMismatchError(PpgrtError):
    """Operands that must have equal length do not."""

"""Plaintext shared-length algorithms.

These are the ground truth the privacy-preserving variants are checked
against: longest common subsequence length, count of agreeing positions
(Hamming complement), and max-length minus Levenshtein distance.
"""
from __future__ import annotations

from .errors import LengthMismatchError
from .haplotypes import Haplotype


def _letters(x) -> str:
    return x.letters if isinstance(x, Haplotype) else x


def lcs_len(x, y) -> int:
    """Length of the longest common subsequence, standard DP table w[i,j]."""
    a, b = _letters(x), _letters(y)
    t, m = len(a), len(b)
    w = {}
    for i in range(t + 1):
        w[i, 0] = 0
    for j in range(m + 1):
        w[0, j] = 0
    for i in range(1, t + 1):
        for j in range(1, m + 1):
            if a[i - 1] == b[j - 1]:
                w[i, j] = 1 + w[i - 1, j - 1]
            elif w[i - 1, j] >= w[i, j - 1]:
                w[i, j] = w[i - 1, j]
            else:
                w[i, j] = w[i, j - 1]
    return w[t, m]


def hamming_shared(x, y) -> int:
    """Number of positions where equal-length sequences agree."""
    a, b = _letters(x), _letters(y)
    if len(a) != len(b):
        raise LengthMismatchError(
            f"equal-length segments required: {len(a)} != {len(b)}")
    return sum(1 for u, v in zip(a, b) if u == v)


def edit_shared(x, y) -> int:
    """max(|x|, |y|) minus the unit-cost Levenshtein distance.

    The recurrence mirrors the matching layer bit for bit, including the
    replace/insert/delete tie order, so the two stay comparable cell by
    cell.
    """
    a, b = _letters(x), _letters(y)
    len1, len2 = len(a), len(b)
    length = len2 if len1 < len2 else len1
    dp = [[0] * (len2 + 1) for _ in range(len1 + 1)]
    for i in range(len1 + 1):
        dp[i][0] = i
    for j in range(len2 + 1):
        dp[0][j] = j
    for i in range(len1):
        for j in range(len2):
            if a[i] == b[j]:
                dp[i + 1][j + 1] = dp[i][j]
            else:
                replace = dp[i][j] + 1
                insert = dp[i][j + 1] + 1
                delete = dp[i + 1][j] + 1
                best = insert if replace > insert else replace
                best = delete if best > delete else best
                dp[i + 1][j + 1] = best
    return length - dp[len1][len2]

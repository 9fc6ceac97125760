"""Executable divisibility facts about triangular numbers.

Both checks verify divisibility by direct division and report the actual
quotient; the closed-form quotient and the mod-4 pattern live only in the
tests, so a wrong claim would be falsified rather than baked in.  Python
integers are unbounded, so no input can overflow here.
"""

from __future__ import annotations

from dataclasses import dataclass


def _tri(k: int) -> int:
    return k * (k + 1) // 2


@dataclass(frozen=True)
class PropositionVerdict:
    """Outcome of one divisibility check.

    witness_ratio is the exact quotient dividend / T(n) when the
    divisibility holds, else None.
    """

    n: int
    holds: bool
    witness_ratio: int | None


def prop1_check(n: int) -> PropositionVerdict:
    """Does T(n) divide T(n(n+1))?  Holds for every n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    divisor = _tri(n)
    dividend = _tri(n * (n + 1))
    if dividend % divisor == 0:
        return PropositionVerdict(n=n, holds=True, witness_ratio=dividend // divisor)
    return PropositionVerdict(n=n, holds=False, witness_ratio=None)


def prop2_check(n: int) -> PropositionVerdict:
    """Does T(n) divide T(T(n))?  Holds exactly when n is 1 or 2 mod 4."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    divisor = _tri(n)
    dividend = _tri(_tri(n))
    if dividend % divisor == 0:
        return PropositionVerdict(n=n, holds=True, witness_ratio=dividend // divisor)
    return PropositionVerdict(n=n, holds=False, witness_ratio=None)


@dataclass(frozen=True)
class RangeScan:
    """Summary of running both checks over 1..max_n."""

    max_n: int
    prop1_failures: tuple[int, ...]
    prop2_pattern_breaks: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.prop1_failures and not self.prop2_pattern_breaks


def scan_range(max_n: int) -> RangeScan:
    """Exhaustively check 1..max_n.

    prop1 must hold everywhere; prop2 must hold exactly on n = 1, 2 mod 4.
    Divisibility is recomputed by division each time, never inferred from
    the residue.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    p1_bad = []
    p2_bad = []
    for n in range(1, max_n + 1):
        if not prop1_check(n).holds:
            p1_bad.append(n)
        expected = n % 4 in (1, 2)
        if prop2_check(n).holds != expected:
            p2_bad.append(n)
    return RangeScan(
        max_n=max_n,
        prop1_failures=tuple(p1_bad),
        prop2_pattern_breaks=tuple(p2_bad),
    )

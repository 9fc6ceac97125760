"""Mobius values of divisibility posets, by recursion and by exact matrix inversion.

The recursion over cached predecessor lists is the production path; building
the zeta matrix and inverting it stays in as an independent correctness
oracle for moderate sizes.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

from .poset import DivisibilityPoset, SequenceKind

I64_MAX = 2**63 - 1

# Per-poset memo for two-variable values.  Entries are only ever inserted,
# never rewritten, and each insert is a single dict assignment under the
# GIL, so concurrent readers are safe; construction is single-writer.
_TWO_VAR_MEMO: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _guard_magnitude(value: int) -> int:
    """Abort loudly instead of letting a value leave the signed 64-bit range."""
    if not -I64_MAX - 1 <= value <= I64_MAX:
        raise OverflowError(f"Mobius value {value} exceeds the signed 64-bit range")
    return value


@dataclass(frozen=True)
class MobiusVector:
    """One-variable values mu(1, n) for n = 1..len(self), exact integers.

    values[0] is an unused slot so that values[n] is the n-th entry.
    """

    kind: SequenceKind
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values) - 1

    def value(self, n: int) -> int:
        if not 1 <= n < len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self)}")
        return self.values[n]

    __getitem__ = value

    def terms(self) -> list[int]:
        """The entries as a plain 0-based list [mu(1,1), ..., mu(1,N)]."""
        return list(self.values[1:])


def mobius_one_var(poset: DivisibilityPoset, n: int | None = None) -> MobiusVector:
    """Compute mu(1, k) for k = 1..n by the zero-sum recursion.

    mu(1, 1) = 1 and, for k >= 2, mu(1, k) is minus the sum of mu(1, d)
    over all strict predecessors d of k.  Predecessor lists come from the
    poset's bulk cache, so the whole vector costs one pass over the lists.
    """
    if n is None:
        n = poset.max_index
    table = poset.predecessor_table(n)
    values = [0] * (n + 1)
    values[1] = 1
    for k in range(2, n + 1):
        acc = 0
        row = values
        for d in table[k]:
            acc += row[d]
        values[k] = _guard_magnitude(-acc)
    return MobiusVector(kind=poset.kind, values=tuple(values))


def mobius_two_var(poset: DivisibilityPoset, m: int, n: int) -> int:
    """mu(m, n) via recursion over the interval between m and n, memoized.

    Zero when m is not below n; one on the diagonal; otherwise minus the
    sum of mu(m, z) over the strictly smaller elements of the interval.
    """
    poset._check_index(m)
    poset._check_index(n)
    memo = _TWO_VAR_MEMO.setdefault(poset, {})

    def rec(upper: int) -> int:
        if upper == m:
            return 1
        if not poset.leq(m, upper):
            return 0
        key = (m, upper)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = 0
        for z in poset.strict_predecessors(upper):
            if z >= m and poset.leq(m, z):
                acc += rec(z)
        result = _guard_magnitude(-acc)
        memo[key] = result
        return result

    return rec(n)


@dataclass(frozen=True)
class ZetaMatrix:
    """0/1 incidence matrix: rows[i-1][j-1] = 1 iff j is below i.

    Lower triangular with unit diagonal, since a smaller value never has a
    larger index.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MobiusMatrix:
    """Exact integer inverse of a zeta matrix: rows[i-1][j-1] = mu(j, i)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def first_column(self) -> list[int]:
        return [row[0] for row in self.rows]


def zeta_matrix(poset: DivisibilityPoset, n: int) -> ZetaMatrix:
    """Dense incidence matrix of the poset restricted to 1..n."""
    table = poset.predecessor_table(n)
    rows = []
    for i in range(1, n + 1):
        row = [0] * n
        row[i - 1] = 1
        for d in table[i]:
            row[d - 1] = 1
        rows.append(tuple(row))
    return ZetaMatrix(n=n, rows=tuple(rows))


def _require_lower_unitriangular(rows: tuple[tuple[int, ...], ...]) -> None:
    for i, row in enumerate(rows):
        if row[i] != 1:
            raise ValueError(f"diagonal entry at row {i + 1} is {row[i]}, expected 1")
        for j in range(i + 1, len(rows)):
            if row[j] != 0:
                raise ValueError(f"nonzero entry above the diagonal at ({i + 1}, {j + 1})")


def invert_zeta(zeta: ZetaMatrix) -> MobiusMatrix:
    """Exact integer inverse of a lower unitriangular 0/1 matrix.

    Forward substitution row by row, walking only the positions where a
    zeta column holds a 1.  The product check runs before returning, so a
    bad inverse can never escape.
    """
    n = zeta.n
    _require_lower_unitriangular(zeta.rows)
    # ones_below[j] = rows k > j with a 1 in column j, ascending
    ones_below = [
        [k for k in range(j + 1, n) if zeta.rows[k][j] == 1] for j in range(n)
    ]
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        for j in range(i - 1, -1, -1):
            acc = 0
            for k in ones_below[j]:
                if k > i:
                    break
                acc += row[k]
            row[j] = _guard_magnitude(-acc)
        rows.append(tuple(row))
    mobius = MobiusMatrix(n=n, rows=tuple(rows))
    if not verify_inverse(zeta, mobius):
        raise ArithmeticError("forward substitution produced a non-inverse")
    return mobius


def verify_inverse(zeta: ZetaMatrix, mobius: MobiusMatrix) -> bool:
    """True iff mobius . zeta is exactly the identity matrix."""
    if zeta.n != mobius.n:
        raise ValueError(f"dimension mismatch: {mobius.n} vs {zeta.n}")
    n = zeta.n
    ones = [[k for k in range(n) if zeta.rows[k][j] == 1] for j in range(n)]
    for i in range(n):
        mrow = mobius.rows[i]
        for j in range(n):
            acc = 0
            for k in ones[j]:
                acc += mrow[k]
            if acc != (1 if i == j else 0):
                return False
    return True

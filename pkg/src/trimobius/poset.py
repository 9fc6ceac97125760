"""Divisibility posets induced by strictly increasing integer sequences.

The poset on 1..N puts i below j whenever the i-th sequence value divides
the j-th exactly.  Two sequences are built in: the triangular numbers
i(i+1)/2 and the identity (giving the ordinary divisor lattice).  All
arithmetic is exact integer arithmetic; sequence values are kept within
the unsigned 64-bit range so results are portable to fixed-width code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

U64_MAX = 2**64 - 1

# Largest i with i(i+1)/2 <= U64_MAX.
MAX_TRIANGULAR_INDEX = 6_074_000_999


class SequenceKind(enum.Enum):
    """Which strictly increasing sequence induces the divisibility order."""

    TRIANGULAR = "triangular"
    IDENTITY = "identity"


def sequence_value(kind: SequenceKind, i: int) -> int:
    """Return the i-th sequence value: i(i+1)/2 for triangular, i for identity.

    Raises OverflowError when the value would exceed the unsigned 64-bit
    range, ValueError for i < 1.
    """
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if kind is SequenceKind.TRIANGULAR:
        if i > MAX_TRIANGULAR_INDEX:
            raise OverflowError(
                f"triangular value for index {i} exceeds the 64-bit range "
                f"(max index {MAX_TRIANGULAR_INDEX})"
            )
        return i * (i + 1) // 2
    if i > U64_MAX:
        raise OverflowError(f"index {i} exceeds the 64-bit range")
    return i


def triangular_index(v: int) -> int:
    """Index k with k(k+1)/2 == v, or 0 when v is not a triangular number.

    Uses the exact test: v is triangular iff 8v+1 is a perfect square.
    Integer square root only; no floating point near 2**63.
    """
    s = isqrt(8 * v + 1)
    if s * s != 8 * v + 1:
        return 0
    return (s - 1) // 2


@dataclass(frozen=True)
class HasseGraph:
    """Covering-relation edge list for the poset restricted to 1..n_elements.

    Edges are (lower, upper) pairs, lexicographically sorted, duplicate-free.
    """

    n_elements: int
    edges: tuple[tuple[int, int], ...]


class DivisibilityPoset:
    """The poset (1..max_index, <=) with i below j iff value(i) divides value(j).

    Instances are immutable after construction and safe for concurrent
    readers; the lazily built predecessor table is filled under the GIL
    and only ever grows.
    """

    def __init__(self, kind: SequenceKind, max_index: int):
        if max_index < 1:
            raise ValueError(f"max_index must be >= 1, got {max_index}")
        # 64-bit budget is enforced once here, not per query.
        sequence_value(kind, max_index)
        self.kind = kind
        self.max_index = max_index
        self._pred_table: list[list[int]] = []

    def __repr__(self) -> str:
        return f"DivisibilityPoset({self.kind.value!r}, max_index={self.max_index})"

    def value(self, i: int) -> int:
        """Sequence value of element i (range-checked)."""
        self._check_index(i)
        if self.kind is SequenceKind.TRIANGULAR:
            return i * (i + 1) // 2
        return i

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.max_index:
            raise IndexError(f"element {i} outside 1..{self.max_index}")

    def leq(self, i: int, j: int) -> bool:
        """True iff value(i) divides value(j) exactly."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            return True
        if i > j:
            # values are strictly increasing, so a larger index cannot divide
            return False
        return self.value(j) % self.value(i) == 0

    def strict_predecessors(self, n: int) -> list[int]:
        """All d < n with d below n, ascending.

        Divisor-enumeration path: walks divisor pairs of value(n) up to its
        square root and keeps the ones that are sequence values.
        """
        self._check_index(n)
        v = self.value(n)
        idxs = []
        for d in range(1, isqrt(v) + 1):
            if v % d == 0:
                for cand in (d, v // d):
                    k = self._index_of_value(cand)
                    if 1 <= k < n:
                        idxs.append(k)
        idxs = sorted(set(idxs))
        return idxs

    def strict_predecessors_trial(self, n: int) -> list[int]:
        """Oracle path: trial loop over every d < n calling leq. O(n) divisions."""
        self._check_index(n)
        return [d for d in range(1, n) if self.leq(d, n)]

    def _index_of_value(self, v: int) -> int:
        """Index whose sequence value is v, or 0 if v is not in the sequence."""
        if self.kind is SequenceKind.TRIANGULAR:
            return triangular_index(v)
        return v

    def predecessor_table(self, n: int) -> list[list[int]]:
        """Predecessor lists for every element 1..n, built in bulk and cached.

        Returns a list indexed by element (slot 0 unused).  The table is a
        shared cache: callers must not mutate the lists.  Rebuilt from
        scratch when a larger prefix is requested.
        """
        self._check_index(n)
        if len(self._pred_table) <= n:
            self._pred_table = self._build_predecessors(n)
        return self._pred_table

    def _build_predecessors(self, n: int) -> list[list[int]]:
        if self.kind is SequenceKind.IDENTITY:
            # classic multiples sieve: d is a proper divisor of every 2d, 3d, ...
            tbl: list[list[int]] = [[] for _ in range(n + 1)]
            for d in range(1, n // 2 + 1):
                for m in range(2 * d, n + 1, d):
                    tbl[m].append(d)
            return tbl
        return _build_triangular_predecessors(n)

    def covers(self, i: int, j: int) -> bool:
        """True iff j covers i: i below j, i != j, nothing strictly between."""
        self._check_index(i)
        self._check_index(j)
        if i == j or not self.leq(i, j):
            return False
        for z in self.strict_predecessors(j):
            if z != i and self.leq(i, z):
                return False
        return True

    def hasse_edges(self, n: int) -> HasseGraph:
        """Exactly the covering pairs among elements 1..n."""
        self._check_index(n)
        table = self.predecessor_table(n)
        edges = []
        for j in range(2, n + 1):
            preds = table[j]
            for i in preds:
                if not any(z != i and self.leq(i, z) for z in preds):
                    edges.append((i, j))
        edges.sort()
        return HasseGraph(n_elements=n, edges=tuple(edges))


def _smallest_prime_factors(limit: int) -> list[int]:
    """spf[m] = smallest prime factor of m, for 0 <= m <= limit."""
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def _build_triangular_predecessors(n: int) -> list[list[int]]:
    """Bulk predecessor lists for the triangular poset on 1..n.

    Factors k(k+1)/2 by merging the factorizations of k and k+1 (coprime)
    from a smallest-prime-factor sieve, enumerates its divisors, and keeps
    the triangular ones.  Far cheaper than per-element square-root walks:
    the divisor counts, not the magnitudes, drive the cost.
    """
    spf = _smallest_prime_factors(n + 1)
    tbl: list[list[int]] = [[] for _ in range(n + 1)]
    for k in range(2, n + 1):
        factors: dict[int, int] = {}
        for m in (k, k + 1):
            while m > 1:
                p = spf[m]
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors[p] = factors.get(p, 0) + e
        # halve: exactly one of k, k+1 is even
        factors[2] -= 1
        if factors[2] == 0:
            del factors[2]
        divisors = [1]
        for p, e in factors.items():
            powers = [p**a for a in range(e + 1)]
            divisors = [d * q for d in divisors for q in powers]
        idxs = []
        for d in divisors:
            ix = triangular_index(d)
            if 1 <= ix < k:
                idxs.append(ix)
        idxs.sort()
        tbl[k] = idxs
    return tbl

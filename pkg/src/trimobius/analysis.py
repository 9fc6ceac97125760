"""Partial-sum series, magnitude records, and the classical Mobius baseline.

Series over integer terms stay exact.  The two ratio series accumulate in
exact rational arithmetic up to a configurable prefix (default 10,000) and
switch to compensated floating summation beyond it, cross-checking the two
paths where they overlap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .mobius import MobiusVector
from .poset import sequence_value

EXACT_RATIO_LIMIT = 10_000

# Exact and compensated accumulation must agree this closely on the overlap.
RATIO_CROSSCHECK_TOL = 1e-9


@dataclass(frozen=True)
class SeriesReport:
    """A named prefix-sum series with slope estimates.

    ys[k] is the partial sum through xs[k]; entries are exact ints, exact
    Fractions, or floats (ratio tails).  slope_estimate is the headline
    per-index slope; slope_lsq is an ordinary least-squares slope kept
    alongside because the endpoint formula is sensitive to both ends.
    """

    name: str
    xs: list[int]
    ys: list
    slope_estimate: Fraction | float
    slope_lsq: float
    final_value: Fraction | float | int

    def __len__(self) -> int:
        return len(self.xs)


def _endpoint_slope(xs, ys):
    """(y_N - y_1) / (N - 1); zero for a single point."""
    if len(xs) < 2:
        return Fraction(0)
    dy = ys[-1] - ys[0]
    dx = xs[-1] - xs[0]
    if isinstance(dy, (int, Fraction)):
        return Fraction(dy, dx)
    return dy / dx


def _lsq_slope(xs, ys) -> float:
    """Ordinary least-squares slope through the series."""
    n = len(xs)
    if n < 2:
        return 0.0
    fx = np.asarray(xs, dtype=np.float64)
    fy = np.asarray([float(v) for v in ys], dtype=np.float64)
    mx = fx.mean()
    my = fy.mean()
    denom = ((fx - mx) ** 2).sum()
    return float(((fx - mx) * (fy - my)).sum() / denom)


def _prefix_sums(terms: list[int]) -> list[int]:
    ys = []
    acc = 0
    for t in terms:
        acc += t
        ys.append(acc)
    return ys


def mertens_tri(mu: MobiusVector) -> SeriesReport:
    """Partial sums of the Mobius values, the poset analog of Mertens sums."""
    terms = mu.terms()
    if not terms:
        raise ValueError("empty Mobius vector")
    xs = list(range(1, len(terms) + 1))
    ys = _prefix_sums(terms)
    return SeriesReport(
        name="mobius_partial_sums",
        xs=xs,
        ys=ys,
        slope_estimate=_endpoint_slope(xs, ys),
        slope_lsq=_lsq_slope(xs, ys),
        final_value=ys[-1],
    )


def abs_sums(mu: MobiusVector) -> SeriesReport:
    """Partial sums of |mu|.  slope_estimate here is the density ys[N] / N."""
    terms = [abs(t) for t in mu.terms()]
    if not terms:
        raise ValueError("empty Mobius vector")
    xs = list(range(1, len(terms) + 1))
    ys = _prefix_sums(terms)
    return SeriesReport(
        name="mobius_abs_partial_sums",
        xs=xs,
        ys=ys,
        slope_estimate=Fraction(ys[-1], len(ys)),
        slope_lsq=_lsq_slope(xs, ys),
        final_value=ys[-1],
    )


def _ratio_series(name, mu, denominators, exact_limit):
    """Shared builder for the two ratio series.

    Exact Fractions through min(N, exact_limit); Neumaier-compensated
    floats beyond.  The float path runs from the start so the two can be
    cross-checked where they overlap.
    """
    terms = mu.terms()
    if not terms:
        raise ValueError("empty Mobius vector")
    n = len(terms)
    xs = list(range(1, n + 1))
    ys: list = []

    comp = 0.0  # Neumaier correction
    fsum = 0.0
    exact = Fraction(0)
    for k in range(1, n + 1):
        t = terms[k - 1]
        if t:
            term = t / denominators[k - 1]
            add = fsum + term
            if abs(fsum) >= abs(term):
                comp += (fsum - add) + term
            else:
                comp += (term - add) + fsum
            fsum = add
        if k <= exact_limit:
            if t:
                exact = exact + Fraction(t, denominators[k - 1])
            ys.append(exact)
            if k == exact_limit and n > exact_limit:
                drift = abs(float(exact) - (fsum + comp))
                if drift > RATIO_CROSSCHECK_TOL:
                    raise ArithmeticError(
                        f"exact/compensated accumulation disagree by {drift:.3e} "
                        f"at n={k}"
                    )
        else:
            ys.append(fsum + comp)
    return SeriesReport(
        name=name,
        xs=xs,
        ys=ys,
        slope_estimate=_endpoint_slope(xs, ys),
        slope_lsq=_lsq_slope(xs, ys),
        final_value=ys[-1],
    )


def ratio_sums_index(mu: MobiusVector, exact_limit: int = EXACT_RATIO_LIMIT) -> SeriesReport:
    """Partial sums of mu(n)/n."""
    denominators = list(range(1, len(mu) + 1))
    return _ratio_series("mobius_over_index_partial_sums", mu, denominators, exact_limit)


def ratio_sums_triangular(
    mu: MobiusVector, exact_limit: int = EXACT_RATIO_LIMIT
) -> SeriesReport:
    """Partial sums of mu(n)/value(n), value being the poset's own sequence."""
    denominators = [sequence_value(mu.kind, k) for k in range(1, len(mu) + 1)]
    return _ratio_series("mobius_over_value_partial_sums", mu, denominators, exact_limit)


def compensated_ratio_sum(mu: MobiusVector, denominators: list[int]) -> float:
    """Neumaier-compensated float sum of mu(n)/denominator(n), full range.

    Kept separate so tests can compare it against the exact rational path.
    """
    fsum = 0.0
    comp = 0.0
    for t, d in zip(mu.terms(), denominators):
        if not t:
            continue
        term = t / d
        add = fsum + term
        if abs(fsum) >= abs(term):
            comp += (fsum - add) + term
        else:
            comp += (term - add) + fsum
        fsum = add
    return fsum + comp


@dataclass(frozen=True)
class MagnitudeRecord:
    magnitude: int
    first_at_least: int
    first_equal: int | None


@dataclass(frozen=True)
class MagnitudeRecordTable:
    """Record indices per magnitude, under both the >=M and the ==M reading.

    first_at_least is non-decreasing down the table by construction;
    first_equal need not be.
    """

    signed: bool
    rows: tuple[MagnitudeRecord, ...]

    def first_at_least(self, magnitude: int) -> int | None:
        for row in self.rows:
            if row.magnitude == magnitude:
                return row.first_at_least
        return None

    def first_equal(self, magnitude: int) -> int | None:
        for row in self.rows:
            if row.magnitude == magnitude:
                return row.first_equal
        return None


def magnitude_records(mu: MobiusVector, signed: bool = False) -> MagnitudeRecordTable:
    """First indices reaching each magnitude 1..max.

    With signed=False the magnitude of mu(n) is |mu(n)|; with signed=True
    it is mu(n) itself and only positive values count.
    """
    terms = mu.terms()
    if not terms:
        raise ValueError("empty Mobius vector")
    first_geq: dict[int, int] = {}
    first_eq: dict[int, int] = {}
    top = 0
    for n, t in enumerate(terms, start=1):
        v = t if signed else abs(t)
        if v < 1:
            continue
        if v > top:
            for m in range(top + 1, v + 1):
                first_geq[m] = n
            top = v
        if v not in first_eq:
            first_eq[v] = n
    rows = tuple(
        MagnitudeRecord(m, first_geq[m], first_eq.get(m)) for m in range(1, top + 1)
    )
    return MagnitudeRecordTable(signed=signed, rows=rows)


def estimate_C(mertens: SeriesReport, tail_start: int | None = None) -> Fraction:
    """min over n in [tail_start, N] of -ys[n] / n, as an exact rational.

    A positive return means the partial sums stayed at or below a straight
    line of that slope over the whole tail window.  tail_start defaults to
    N/10: the early sums are transient and would dominate the minimum.
    """
    n = len(mertens)
    if tail_start is None:
        tail_start = max(1, n // 10)
    if not 1 <= tail_start < n:
        raise ValueError(f"empty tail window: tail_start={tail_start}, N={n}")
    return min(
        Fraction(-mertens.ys[k - 1], k) for k in range(tail_start, n + 1)
    )


@dataclass(frozen=True, eq=False)
class ClassicalMobiusSieve:
    """Classical mu(n) for n = 1..N, sieve-computed. values[0] is unused."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def value(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise IndexError(f"index {k} outside 1..{self.n}")
        return int(self.values[k])

    def terms(self) -> list[int]:
        return [int(v) for v in self.values[1:]]


def classical_mobius(n: int) -> ClassicalMobiusSieve:
    """Sieve the classical Mobius function up to n.

    One pass per prime flips the sign of its multiples; multiples of p**2
    are zeroed.  int8 is safe: values never leave {-1, 0, 1}.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    mob = np.ones(n + 1, dtype=np.int8)
    mob[0] = 0
    composite = np.zeros(n + 1, dtype=bool)
    for p in range(2, n + 1):
        if not composite[p]:
            mob[p::p] *= -1
            sq = p * p
            if sq <= n:
                composite[sq::p] = True
                mob[sq::sq] = 0
    return ClassicalMobiusSieve(values=mob)


def classical_mertens(sieve: ClassicalMobiusSieve) -> SeriesReport:
    """Partial sums of the classical Mobius function."""
    if sieve.n < 1:
        raise ValueError("empty sieve")
    xs = list(range(1, sieve.n + 1))
    ys = np.cumsum(sieve.values[1:], dtype=np.int64).tolist()
    return SeriesReport(
        name="classical_mertens",
        xs=xs,
        ys=ys,
        slope_estimate=_endpoint_slope(xs, ys),
        slope_lsq=_lsq_slope(xs, ys),
        final_value=ys[-1],
    )

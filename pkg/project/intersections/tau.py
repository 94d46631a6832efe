# intersections/tau.py
"""Witten-Kontsevich numbers <tau_{d_1} ... tau_{d_n}>_g on M(g,n).

The primary evaluator strips tau_0 and tau_1 insertions with the string and
dilaton equations and then applies the DVV (Virasoro) recursion to the
largest index. A second, independent recursion in normalized form and the
genus-zero closed formula serve as cross-checks.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .arith import InvalidArgument, double_factorial, format_rational, sub_multisets

logger = logging.getLogger(__name__)

BASE_CASES = {
    (0, (0, 0, 0)): Fraction(1),
    (1, (1,)): Fraction(1, 24),
}


class TauQuery(NamedTuple):
    g: int
    d: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.d)


def is_stable(g: int, n: int) -> bool:
    return g >= 0 and n >= 0 and 2 * g - 2 + n > 0


def dimension(g: int, n: int) -> int:
    return 3 * g - 3 + n


def _canon(d: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(d, reverse=True))


def tau_query(g: int, d: Sequence[int]) -> TauQuery:
    d = _canon(int(x) for x in d)
    if not is_stable(g, len(d)):
        raise InvalidArgument(f"unstable space M({g},{len(d)})")
    if d and d[-1] < 0:
        raise InvalidArgument(f"negative psi exponent in {d}")
    return TauQuery(g, d)


def tau_number(q: TauQuery) -> Fraction:
    """Exact value of the query; 0 when the degree misses the dimension."""
    q = tau_query(q.g, q.d)
    return _tau(q.g, q.d)


def _distinct(d: Tuple[int, ...]) -> Iterator[Tuple[int, int]]:
    # d is sorted, so equal values are adjacent
    i = 0
    while i < len(d):
        j = i
        while j < len(d) and d[j] == d[i]:
            j += 1
        yield d[i], j - i
        i = j


def _replace(d: Tuple[int, ...], old: int, new: int) -> Tuple[int, ...]:
    i = d.index(old)
    return _canon(d[:i] + (new,) + d[i + 1:])


@lru_cache(maxsize=None)
def _tau(g: int, d: Tuple[int, ...]) -> Fraction:
    n = len(d)
    if g < 0 or 2 * g - 2 + n <= 0 or sum(d) != dimension(g, n):
        return Fraction(0)
    base = BASE_CASES.get((g, d))
    if base is not None:
        return base
    if d[-1] == 0:
        # string equation
        rest = d[:-1]
        total = Fraction(0)
        for value, count in _distinct(rest):
            if value:
                total += count * _tau(g, _replace(rest, value, value - 1))
        return total
    if d[-1] == 1:
        # dilaton equation
        return (2 * g - 2 + n - 1) * _tau(g, d[:-1])
    return _dvv(g, d)


def _dvv(g: int, d: Tuple[int, ...]) -> Fraction:
    k = d[0] - 1
    rest = d[1:]
    total = Fraction(0)
    for value, count in _distinct(rest):
        coeff = Fraction(double_factorial(2 * k + 2 * value + 1), double_factorial(2 * value - 1))
        total += count * coeff * _tau(g, _replace(rest, value, value + k))
    for r in range(k):
        s = k - 1 - r
        inner = Fraction(0)
        if g > 0:
            inner += _tau(g - 1, _canon(rest + (r, s)))
        for mult, left, right in sub_multisets(rest):
            # the left factor only survives in the genus matching its degree
            top = r + sum(left) - len(left) + 2
            if top % 3:
                continue
            g1 = top // 3
            if g1 > g:
                continue
            a = _tau(g1, _canon(left + (r,)))
            if a:
                inner += mult * a * _tau(g - g1, _canon(right + (s,)))
        total += Fraction(double_factorial(2 * r + 1) * double_factorial(2 * s + 1), 2) * inner
    return total / double_factorial(2 * k + 3)


def tau_number_normalized(g: int, d: Sequence[int]) -> Fraction:
    """Same numbers through the normalized recursion over ordered point
    subsets, with F = prod (2d_i+1)!! <tau_d> and F_1(1) = 1/8."""
    q = tau_query(g, d)
    norm = prod(double_factorial(2 * x + 1) for x in q.d)
    return _normalized(q.g, q.d) / norm


@lru_cache(maxsize=None)
def _normalized(g: int, d: Tuple[int, ...]) -> Fraction:
    n = len(d)
    if g < 0 or 2 * g - 2 + n <= 0 or sum(d) != dimension(g, n):
        return Fraction(0)
    if (g, d) == (0, (0, 0, 0)):
        return Fraction(1)
    if (g, d) == (1, (1,)):
        return Fraction(1, 8)
    k = d[0] - 1
    rest = d[1:]
    total = Fraction(0)
    for j, dj in enumerate(rest):
        moved = rest[:j] + (dj + k,) + rest[j + 1:]
        total += (2 * dj + 1) * _normalized(g, _canon(moved))
    positions = range(len(rest))
    for r in range(k):
        s = k - 1 - r
        inner = Fraction(0)
        if g > 0:
            inner += _normalized(g - 1, _canon(rest + (r, s)))
        for size in range(len(rest) + 1):
            for chosen in combinations(positions, size):
                left = tuple(rest[i] for i in chosen)
                right = tuple(rest[i] for i in positions if i not in chosen)
                for g1 in range(g + 1):
                    a = _normalized(g1, _canon(left + (r,)))
                    if a:
                        inner += a * _normalized(g - g1, _canon(right + (s,)))
        total += inner / 2
    return total


def genus_zero_tau(d: Sequence[int]) -> Fraction:
    """Closed form <prod tau_{d_i}>_0 = (n-3)! / prod d_i!."""
    q = tau_query(0, d)
    if sum(q.d) != q.n - 3:
        return Fraction(0)
    return Fraction(factorial(q.n - 3), prod(factorial(x) for x in q.d))


def _partitions(total: int, parts: int, minimum: int, maximum: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Descending tuples of `parts` integers >= minimum summing to total."""
    if maximum is None:
        maximum = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(maximum, total - minimum * (parts - 1)), minimum - 1, -1):
        for tail in _partitions(total - first, parts - 1, minimum, first):
            yield (first,) + tail


def export_table(g_max: int) -> List[Tuple[TauQuery, Fraction]]:
    """Every stable query with g <= g_max and all d_i >= 2, sorted by
    (g, n, d)."""
    if g_max < 2:
        raise InvalidArgument(f"g_max must be >= 2, got {g_max}")
    rows = []
    for g in range(g_max + 1):
        # all d_i >= 2 forces n <= sum(d_i - 1) = 3g - 3
        for n in range(1, 3 * g - 2):
            for d in _partitions(dimension(g, n), n, 2):
                rows.append((TauQuery(g, d), _tau(g, d)))
    rows.sort(key=lambda row: (row[0].g, row[0].n, row[0].d))
    logger.info("tau table up to genus %d: %d rows", g_max, len(rows))
    return rows


def format_table(rows: Sequence[Tuple[TauQuery, Fraction]]) -> str:
    lines = []
    for q, value in rows:
        exps = ",".join(str(x) for x in q.d)
        lines.append(f"{q.g}\t{q.n}\t{exps}\t{format_rational(value)}\n")
    return "".join(lines)

# intersections/arith.py
"""Exact arithmetic shared by every evaluator: Bernoulli numbers, double
factorials and sub-multiset enumeration."""
import threading
from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterator, List, Sequence, Tuple

__all__ = [
    "InvalidArgument",
    "Rational",
    "bernoulli",
    "double_factorial",
    "format_rational",
    "parse_rational",
    "sub_multisets",
    "splits",
]

Rational = Fraction


class InvalidArgument(ValueError):
    """Raised for arguments outside an operation's domain (unstable spaces,
    odd Bernoulli indices, even Chern characters, ...)."""


# B_0 and B_1 seed the recurrence; B_1 = -1/2 here, the even values do not
# depend on that choice.
_BERNOULLI: List[Fraction] = [Fraction(1), Fraction(-1, 2)]
_bernoulli_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """Return B_k for even k >= 2 (B_2 = 1/6, B_4 = -1/30)."""
    if k < 2 or k % 2:
        raise InvalidArgument(f"bernoulli index must be even and >= 2, got {k}")
    if k < len(_BERNOULLI):
        return _BERNOULLI[k]
    with _bernoulli_lock:
        while len(_BERNOULLI) <= k:
            m = len(_BERNOULLI)
            s = sum(comb(m + 1, j) * _BERNOULLI[j] for j in range(m))
            _BERNOULLI.append(-s / (m + 1))
    return _BERNOULLI[k]


def double_factorial(k: int) -> int:
    if k < -1:
        raise InvalidArgument(f"double factorial needs k >= -1, got {k}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def format_rational(value: Fraction) -> str:
    # p/1 stays p/1 so output is always machine-parsable as a fraction
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgument(f"not a rational number: {text!r}") from exc


def _counts(items: Sequence[int]) -> List[Tuple[int, int]]:
    return sorted(Counter(items).items())


def sub_multisets(items: Sequence[int]) -> Iterator[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    """Yield (multiplicity, chosen, rest) for every sub-multiset of items.

    The multiplicity counts the ways of picking `chosen` out of the labelled
    list, i.e. the product of C(c, c1) over distinct values.
    """
    counts = _counts(items)
    ranges = [range(c + 1) for _, c in counts]
    for picks in product(*ranges):
        mult = 1
        chosen: List[int] = []
        rest: List[int] = []
        for (value, c), c1 in zip(counts, picks):
            mult *= comb(c, c1)
            chosen.extend([value] * c1)
            rest.extend([value] * (c - c1))
        yield mult, tuple(chosen), tuple(rest)


def splits(items: Sequence[int]) -> List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    """Materialized sub_multisets, for loops that reuse the same split list."""
    return list(sub_multisets(items))

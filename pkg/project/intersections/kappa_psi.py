# intersections/kappa_psi.py
"""Mixed kappa/psi numbers on M(g,n), reduced to tau numbers.

kappa classes are the Arbarello-Cornalba ones, so kappa_a on M(g,n) equals
the pushforward of psi^{a+1} at an extra point and pulls back along a
forgetful map as kappa_a - psi^a at the forgotten point.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .arith import InvalidArgument, sub_multisets
from .tau import _tau, dimension, is_stable

logger = logging.getLogger(__name__)

# (d, kappas) with d sorted descending and kappas ascending
Shape = Tuple[Tuple[int, ...], Tuple[int, ...]]


class KappaPsiQuery(NamedTuple):
    g: int
    n: int
    d: Tuple[int, ...]
    kappas: Tuple[int, ...]


def _psi(d: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(d, reverse=True))


def _kap(kappas: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(kappas))


def kappa_psi_query(g: int, n: int, d: Sequence[int] = (), kappas: Sequence[int] = ()) -> KappaPsiQuery:
    d = tuple(int(x) for x in d) or (0,) * n
    if len(d) != n:
        raise InvalidArgument(f"expected {n} psi exponents, got {len(d)}")
    if not is_stable(g, n):
        raise InvalidArgument(f"unstable space M({g},{n})")
    if any(x < 0 for x in d):
        raise InvalidArgument(f"negative psi exponent in {d}")
    if any(a < 1 for a in kappas):
        raise InvalidArgument(f"kappa indices must be positive, got {tuple(kappas)}")
    return KappaPsiQuery(g, n, _psi(d), _kap(kappas))


def kappa_psi_number(q: KappaPsiQuery) -> Fraction:
    q = kappa_psi_query(q.g, q.n, q.d, q.kappas)
    return _kappa_psi(q.g, q.d, q.kappas)


@lru_cache(maxsize=None)
def _kappa_psi(g: int, d: Tuple[int, ...], kappas: Tuple[int, ...]) -> Fraction:
    if 2 * g - 2 + len(d) <= 0 or sum(d) + sum(kappas) != dimension(g, len(d)):
        return Fraction(0)
    if not kappas:
        return _tau(g, d)
    total = Fraction(0)
    for coeff, (g1, d1, k1) in _reduce(g, d, kappas):
        total += coeff * _kappa_psi(g1, d1, k1)
    return total


def _reduce(g: int, d: Tuple[int, ...], kappas: Tuple[int, ...]):
    # kappa_a = pi_*(psi^{a+1}); the remaining kappas pulled back to the new
    # point differ by psi^b there, which merges them into the new kappa.
    last, rest = kappas[-1], kappas[:-1]
    terms = [(1, (g, _psi(d + (last + 1,)), rest))]
    for mult, chosen, remaining in sub_multisets(rest):
        if chosen:
            terms.append((-mult, (g, d, _kap(remaining + (last + sum(chosen),)))))
    return terms


def kappa_reduce_step(q: KappaPsiQuery) -> List[Tuple[Fraction, KappaPsiQuery]]:
    """Trade the largest kappa for a new marked point, with the correction
    terms that merge it into the other kappa indices."""
    if not q.kappas:
        raise InvalidArgument("kappa_reduce_step needs at least one kappa factor")
    q = kappa_psi_query(q.g, q.n, q.d, q.kappas)
    return [
        (Fraction(coeff), KappaPsiQuery(g, len(d), d, k))
        for coeff, (g, d, k) in _reduce(q.g, q.d, q.kappas)
    ]


def forget_point(g: int, n: int, d: Sequence[int], kappas: Sequence[int]) -> List[Tuple[Fraction, Shape]]:
    """Push psi^d * prod kappa forward along the map forgetting the last point.

    Returns terms on M(g, n-1). kappa_0 is the scalar 2g-2+(n-1).
    """
    if not is_stable(g, n - 1):
        raise InvalidArgument(f"cannot forget a point of M({g},{n})")
    d = tuple(d)
    kappas = _kap(kappas)
    d_last, d_rest = d[-1], d[:-1]
    terms: List[Tuple[Fraction, Shape]] = []
    for mult, chosen, remaining in sub_multisets(kappas):
        e = d_last + sum(chosen)
        if e >= 2:
            terms.append((Fraction(mult), (_psi(d_rest), _kap(remaining + (e - 1,)))))
        elif e == 1:
            terms.append((Fraction(mult * (2 * g - 3 + n)), (_psi(d_rest), remaining)))
        else:
            # string equation on the remaining psi exponents
            for j, dj in enumerate(d_rest):
                if dj:
                    lowered = d_rest[:j] + (dj - 1,) + d_rest[j + 1:]
                    terms.append((Fraction(mult), (_psi(lowered), remaining)))
    return terms


def push_down(g: int, d: Sequence[int], kappas: Sequence[int], target_n: int) -> Dict[Shape, Fraction]:
    """Forget points (smallest psi exponent first) down to M(g, target_n)."""
    poly: Dict[Shape, Fraction] = {(_psi(d), _kap(kappas)): Fraction(1)}
    n = len(d)
    while n > target_n:
        nxt: Dict[Shape, Fraction] = defaultdict(Fraction)
        for (dd, kk), coeff in poly.items():
            for c, shape in forget_point(g, n, dd, kk):
                nxt[shape] += coeff * c
        poly = {shape: c for shape, c in nxt.items() if c}
        n -= 1
    return poly

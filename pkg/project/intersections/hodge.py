# intersections/hodge.py
"""Hodge integrals: kappa, psi and odd Chern characters of the Hodge bundle.

The highest ch_{2i-1} is expanded with Mumford's formula

    ch_{2i-1}(E) = B_{2i}/(2i)! [kappa_{2i-1}
                   + 1/2 sum_h i_h*( sum_{a+b=2i-2} (-1)^b K_1^a K_2^b )]

where i_0 glues two points of M(g-1,2) and i_h (1 <= h <= g-1) glues
M(h,1) x M(g-h,1); the gluing pushforwards are taken at face value.
lambda classes are converted to ch through Newton's identities with every
even power sum set to zero.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Mapping, NamedTuple, Sequence, Tuple, Union

from .arith import InvalidArgument, bernoulli, splits
from .kappa_psi import _kap, _kappa_psi, _psi, forget_point
from .tau import dimension, is_stable

logger = logging.getLogger(__name__)

# sorted tuple of odd ch indices -> coefficient
ChPolynomial = Dict[Tuple[int, ...], Fraction]


class ChQuery(NamedTuple):
    g: int
    n: int
    d: Tuple[int, ...]
    kappas: Tuple[int, ...]
    chs: Tuple[int, ...]


class LambdaMonomial(NamedTuple):
    g: int
    e: Tuple[int, ...]  # exponents of lambda_1 .. lambda_g

    @property
    def degree(self) -> int:
        return sum(j * x for j, x in enumerate(self.e, start=1))


def ch_query(g: int, n: int, d: Sequence[int] = (), kappas: Sequence[int] = (), chs: Sequence[int] = ()) -> ChQuery:
    d = tuple(int(x) for x in d) or (0,) * n
    if len(d) != n:
        raise InvalidArgument(f"expected {n} psi exponents, got {len(d)}")
    if not is_stable(g, n):
        raise InvalidArgument(f"unstable space M({g},{n})")
    if any(x < 0 for x in d) or any(a < 1 for a in kappas):
        raise InvalidArgument("psi exponents must be >= 0 and kappa indices >= 1")
    for c in chs:
        if c < 1 or c % 2 == 0:
            raise InvalidArgument(f"ch_{c}(E) is not admitted: only odd positive indices")
    return ChQuery(g, n, _psi(d), _kap(kappas), tuple(sorted(chs)))


def ch_number(q: ChQuery) -> Fraction:
    q = ch_query(q.g, q.n, q.d, q.kappas, q.chs)
    return _ch(q.g, q.d, q.kappas, q.chs)


@lru_cache(maxsize=None)
def _ch(g: int, d: Tuple[int, ...], kappas: Tuple[int, ...], chs: Tuple[int, ...]) -> Fraction:
    n = len(d)
    if 2 * g - 2 + n <= 0 or sum(d) + sum(kappas) + sum(chs) != dimension(g, n):
        return Fraction(0)
    if not chs:
        return _kappa_psi(g, d, kappas)
    if g == 0:
        return Fraction(0)
    base_n = 1 if g == 1 else 0
    if n > base_n:
        # ch(E) is pulled back along forgetful maps, so push everything else down
        total = Fraction(0)
        for coeff, (d1, k1) in forget_point(g, n, d, kappas):
            total += coeff * _ch(g, d1, k1, chs)
        return total
    if g == 1:
        # M(1,1): ch_1 = lambda_1 = 1/24 is the only survivor in degree 1
        return Fraction(1, 24) if chs == (1,) else Fraction(0)
    return _mumford(g, kappas, chs)


def _mumford(g: int, kappas: Tuple[int, ...], chs: Tuple[int, ...]) -> Fraction:
    top, rest = chs[-1], chs[:-1]
    i = (top + 1) // 2
    logger.debug("expanding ch_%d on M(%d,0) with kappas %s, chs %s", top, g, kappas, rest)
    total = _ch(g, (), _kap(kappas + (top,)), rest)
    kappa_splits = splits(kappas)
    ch_splits = splits(rest)
    for a in range(2 * i - 1):
        b = 2 * i - 2 - a
        boundary = _ch(g - 1, _psi((a, b)), kappas, rest)
        for h in range(1, g):
            for m1, k1, k2 in kappa_splits:
                for m2, c1, c2 in ch_splits:
                    if a + sum(k1) + sum(c1) != dimension(h, 1):
                        continue
                    left = _ch(h, (a,), k1, c1)
                    if left:
                        boundary += m1 * m2 * left * _ch(g - h, (b,), k2, c2)
        total += Fraction((-1) ** b, 2) * boundary
    return bernoulli(2 * i) / factorial(2 * i) * total


def _poly_mul(p: ChPolynomial, q: ChPolynomial) -> ChPolynomial:
    out: ChPolynomial = defaultdict(Fraction)
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            out[tuple(sorted(k1 + k2))] += c1 * c2
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def _elementary(k: int) -> ChPolynomial:
    # k e_k = sum_{p odd} p! ch_p e_{k-p}
    if k == 0:
        return {(): Fraction(1)}
    out: ChPolynomial = defaultdict(Fraction)
    for p in range(1, k + 1, 2):
        for key, c in _elementary(k - p).items():
            out[tuple(sorted(key + (p,)))] += Fraction(factorial(p), k) * c
    return dict(out)


def lambda_monomial(g: int, exps: Union[Mapping[int, int], Sequence[int]]) -> LambdaMonomial:
    if g < 0:
        raise InvalidArgument(f"negative genus {g}")
    if isinstance(exps, Mapping):
        if any(j < 1 or j > g for j in exps):
            raise InvalidArgument(f"lambda indices must lie in 1..{g}")
        e = tuple(exps.get(j, 0) for j in range(1, g + 1))
    else:
        e = tuple(exps) + (0,) * (g - len(exps))
        if len(e) != g:
            raise InvalidArgument(f"at most {g} lambda exponents on genus {g}")
    if any(x < 0 for x in e):
        raise InvalidArgument("negative lambda exponent")
    return LambdaMonomial(g, e)


def lambda_to_ch(m: LambdaMonomial) -> ChPolynomial:
    poly: ChPolynomial = {(): Fraction(1)}
    for j, power in enumerate(m.e, start=1):
        for _ in range(power):
            poly = _poly_mul(poly, _elementary(j))
    return poly


def lambda_number(m: LambdaMonomial) -> Fraction:
    """lambda monomial on M(g,0), or on M(1,1) for genus 1."""
    if m.g < 1:
        raise InvalidArgument("lambda numbers need genus >= 1")
    d = (0,) if m.g == 1 else ()
    if m.degree != dimension(m.g, len(d)):
        return Fraction(0)
    return _lambda_number(m)


@lru_cache(maxsize=None)
def _lambda_number(m: LambdaMonomial) -> Fraction:
    d = (0,) if m.g == 1 else ()
    total = Fraction(0)
    for chs, coeff in lambda_to_ch(m).items():
        total += coeff * _ch(m.g, d, (), chs)
    return total


def mixed_number(
    g: int,
    d: Sequence[int],
    kappas: Sequence[int],
    lambdas: Mapping[int, int],
    chs: Sequence[int] = (),
) -> Fraction:
    """Boundary-free psi * kappa * lambda * ch monomial on M(g, len(d))."""
    lambdas = {j: e for j, e in lambdas.items() if e}
    if any(j > g for j in lambdas):
        return Fraction(0)
    if any(c < 1 or c % 2 == 0 for c in chs):
        raise InvalidArgument(f"only odd ch indices are admitted, got {tuple(chs)}")
    poly: ChPolynomial = {tuple(sorted(chs)): Fraction(1)}
    for j, power in sorted(lambdas.items()):
        for _ in range(power):
            poly = _poly_mul(poly, _elementary(j))
    d, kappas = _psi(d), _kap(kappas)
    total = Fraction(0)
    for key, coeff in poly.items():
        total += coeff * _ch(g, d, kappas, key)
    return total

# intersections/taut_ag.py
"""The lambda ring of the compactified moduli of abelian varieties and the
tautological projection of the Jacobian locus.

The ring is Q[lambda_1..lambda_g] modulo the homogeneous parts of
(1 - lambda_1 + lambda_2 - ...)(1 + lambda_1 + lambda_2 + ...) = 1. Every
class reduces to square-free monomials, and lambda_1 ... lambda_g integrates
to prod |B_2i| / 4i.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import sympy

from .arith import InvalidArgument, bernoulli, format_rational
from .hodge import lambda_monomial, lambda_number
from .tau import _partitions

logger = logging.getLogger(__name__)

# lambda indices in ascending order, repetitions allowed: (1, 1, 2) = l1^2 l2
LambdaIndices = Tuple[int, ...]


class SingularSystem(ArithmeticError):
    """The chosen probe monomials do not pair to an invertible system."""


class RingElement(NamedTuple):
    g: int
    degree: int
    basis: Tuple[LambdaIndices, ...]
    coefficients: Tuple[Fraction, ...]

    def as_dict(self) -> Dict[LambdaIndices, Fraction]:
        return dict(zip(self.basis, self.coefficients))


def _indices(mono: Sequence[int]) -> LambdaIndices:
    mono = tuple(sorted(int(j) for j in mono))
    if mono and mono[0] < 1:
        raise InvalidArgument(f"lambda indices must be positive, got {mono}")
    return mono


class TautRing:
    """Graded pieces of the lambda ring in genus g."""

    def __init__(self, g: int):
        if g < 1:
            raise InvalidArgument(f"genus must be >= 1, got {g}")
        self.g = g

    @property
    def top_degree(self) -> int:
        return self.g * (self.g + 1) // 2

    def basis(self, degree: int) -> List[LambdaIndices]:
        return _square_free(self.g, degree)

    def reduce(self, mono: Sequence[int]) -> Dict[LambdaIndices, Fraction]:
        return dict(_reduce(self.g, _indices(mono)))


@lru_cache(maxsize=None)
def _square_free(g: int, degree: int) -> List[LambdaIndices]:
    def walk(start: int, remaining: int) -> Iterator[LambdaIndices]:
        if remaining == 0:
            yield ()
            return
        for j in range(start, min(g, remaining) + 1):
            for tail in walk(j + 1, remaining - j):
                yield (j,) + tail

    return sorted(walk(1, degree))


@lru_cache(maxsize=None)
def _reduce(g: int, mono: LambdaIndices) -> Tuple[Tuple[LambdaIndices, Fraction], ...]:
    if mono and mono[-1] > g:
        return ()
    for pos in range(len(mono) - 1):
        if mono[pos] == mono[pos + 1]:
            break
    else:
        return ((mono, Fraction(1)),)
    # lambda_k^2 = 2 sum_{i<k} (-1)^{k+1+i} lambda_i lambda_{2k-i}, lambda_0 = 1
    k = mono[pos]
    rest = mono[:pos] + mono[pos + 2:]
    out: Dict[LambdaIndices, Fraction] = defaultdict(Fraction)
    for i in range(k):
        j = 2 * k - i
        if j > g:
            continue
        new = tuple(sorted(rest + ((i, j) if i else (j,))))
        for key, c in _reduce(g, new):
            out[key] += 2 * (-1) ** (k + 1 + i) * c
    return tuple((key, c) for key, c in sorted(out.items()) if c)


def proportionality_value(g: int) -> Fraction:
    """Integral of lambda_1 ... lambda_g, i.e. prod_{i<=g} |B_2i| / 4i."""
    if g < 1:
        raise InvalidArgument(f"genus must be >= 1, got {g}")
    return prod((abs(bernoulli(2 * i)) / (4 * i) for i in range(1, g + 1)), start=Fraction(1))


def evaluate_top(g: int, mono: Sequence[int]) -> Fraction:
    mono = _indices(mono)
    top = TautRing(g).top_degree
    if sum(mono) != top:
        raise InvalidArgument(f"degree {sum(mono)} is not the top degree {top} in genus {g}")
    reduced = dict(_reduce(g, mono))
    return reduced.get(tuple(range(1, g + 1)), Fraction(0)) * proportionality_value(g)


@lru_cache(maxsize=None)
def _groebner(g: int):
    syms = sympy.symbols(f"l1:{g + 1}")
    lam = (sympy.Integer(1),) + syms
    relations = []
    for k in range(1, g + 1):
        terms = [(-1) ** i * lam[i] * lam[2 * k - i] for i in range(2 * k + 1) if i <= g and 2 * k - i <= g]
        relations.append(sympy.expand(sum(terms)))
    logger.debug("groebner basis for genus %d", g)
    return syms, sympy.groebner(relations, *syms, order="grevlex")


def evaluate_top_groebner(g: int, mono: Sequence[int]) -> Fraction:
    """evaluate_top through a Groebner-basis normal form instead of the
    square-free rewriting."""
    mono = _indices(mono)
    if sum(mono) != TautRing(g).top_degree:
        raise InvalidArgument(f"degree {sum(mono)} is not the top degree in genus {g}")
    if mono and mono[-1] > g:
        return Fraction(0)
    syms, basis = _groebner(g)
    _, normal = basis.reduce(sympy.Mul(*(syms[j - 1] for j in mono)))
    _, socle = basis.reduce(sympy.Mul(*syms))
    ratio = sympy.cancel(normal / socle)
    if not ratio.is_Rational:
        raise ArithmeticError(f"normal forms of {mono} and the socle are not proportional")
    return Fraction(int(ratio.p), int(ratio.q)) * proportionality_value(g)


def pair(g: int, m1: Sequence[int], m2: Sequence[int]) -> Fraction:
    return evaluate_top(g, _indices(m1) + _indices(m2))


def probe_monomials(g: int) -> List[LambdaIndices]:
    """Degree 3g-3 monomials, square-free first, then fewest distinct factors."""
    degree = 3 * g - 3
    candidates = []
    for parts in range(1, degree + 1):
        for p in _partitions(degree, parts, 1, g):
            candidates.append(tuple(sorted(p)))

    def cost(mono: LambdaIndices):
        return len(set(mono)) != len(mono), len(set(mono)), len(mono), mono

    return sorted(candidates, key=cost)


def _choose_probes(g: int, basis: List[LambdaIndices]) -> List[LambdaIndices]:
    chosen: List[LambdaIndices] = []
    rows: List[list] = []
    for mono in probe_monomials(g):
        row = [_to_sympy(pair(g, s, mono)) for s in basis]
        if sympy.Matrix(rows + [row]).rank() > len(rows):
            chosen.append(mono)
            rows.append(row)
            if len(chosen) == len(basis):
                return chosen
    raise SingularSystem(f"no {len(basis)} independent probe monomials in genus {g}")


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _lambda_value(g: int, mono: LambdaIndices) -> Fraction:
    exps: Dict[int, int] = defaultdict(int)
    for j in mono:
        exps[j] += 1
    return lambda_number(lambda_monomial(g, exps))


@lru_cache(maxsize=None)
def _jacobian_class(g: int, probes: Optional[Tuple[LambdaIndices, ...]]) -> RingElement:
    degree = comb(g - 2, 2)
    basis = _square_free(g, degree)
    if probes is None:
        probes = tuple(_choose_probes(g, basis))
    elif len(probes) != len(basis):
        raise InvalidArgument(f"need exactly {len(basis)} probe monomials in genus {g}")
    logger.info("jacobian class in genus %d: basis %s, probe monomials %s", g, basis, probes)
    matrix = sympy.Matrix([[_to_sympy(pair(g, s, t)) for s in basis] for t in probes])
    if matrix.det() == 0:
        raise SingularSystem(f"probe monomials {probes} give a singular pairing in genus {g}")
    rhs = sympy.Matrix([_to_sympy(_lambda_value(g, t) / 2) for t in probes])
    solution = matrix.LUsolve(rhs)
    coefficients = tuple(Fraction(int(x.p), int(x.q)) for x in solution)
    return RingElement(g, degree, tuple(basis), coefficients)


def jacobian_class(g: int, probes: Optional[Sequence[Sequence[int]]] = None) -> RingElement:
    """[J_g] = 1/2 t_* 1 projected to the lambda ring, solved against the
    pairing with degree 3g-3 probe monomials."""
    if g < 3:
        raise InvalidArgument(f"jacobian class needs genus >= 3, got {g}")
    if probes is not None:
        probes = tuple(_indices(t) for t in probes)
        for t in probes:
            if sum(t) != 3 * g - 3 or t[-1] > g:
                raise InvalidArgument(f"{t} is not a degree {3 * g - 3} lambda monomial in genus {g}")
    return _jacobian_class(g, probes)


def recover_lambda_number(g: int, cls: RingElement, mono: Sequence[int]) -> Fraction:
    """Predict the lambda number of mono on M(g,0) from a solved class."""
    mono = _indices(mono)
    return 2 * sum(
        (c * pair(g, s, mono) for s, c in zip(cls.basis, cls.coefficients)),
        Fraction(0),
    )


def conjecture1_coefficient(g: int) -> Fraction:
    """Conjectured coefficient of lambda_1 lambda_2 ... lambda_{g-3}."""
    if g < 3:
        raise InvalidArgument(f"genus must be >= 3, got {g}")
    product = prod((Fraction(2) / ((2 * i + 1) * abs(bernoulli(2 * i))) for i in range(1, g - 1)), start=Fraction(1))
    return product / (2 * g - 2)


def conjecture2_coefficient(g: int) -> Fraction:
    """Conjectured coefficient of lambda_2 lambda_3 ... lambda_{g-4} lambda_{g-2}."""
    if g < 5:
        raise InvalidArgument(f"genus must be >= 5, got {g}")
    return (Fraction(g * (2 * g - 2), 12) - 2 ** (g - 3)) * conjecture1_coefficient(g)


def format_monomial(mono: LambdaIndices) -> str:
    return "".join(f"la{j}" for j in mono) or "1"


def format_class(cls: RingElement) -> str:
    terms = []
    for mono, c in zip(cls.basis, cls.coefficients):
        if c:
            coeff = str(c.numerator) if c.denominator == 1 else format_rational(c)
            terms.append(f"{coeff} * {format_monomial(mono)}")
    return " + ".join(terms) or "0"

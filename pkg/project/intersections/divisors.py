# intersections/divisors.py
"""Top intersections of divisor classes on M(g,n) by boundary restriction.

A monomial in psi_i, kappa_a, delta_irr, delta_{h,N} and lambda_j of degree
3g-3+n is evaluated by picking a boundary factor, pulling the remaining
factors back to the boundary component (M(g-1,n+2) or a product
M(g1,|N1|+1) x M(g2,|N2|+1)) and recursing. Boundary-free monomials go to
kappa_psi or, with lambda factors, to hodge.

Conventions: delta_{h,N} for n > 0 names the side holding point 1 (1 in N,
genus h); for n = 0 the label is the smaller genus and N is empty. On a
product the node is the last point (*) of side 1 and point 1 (the bullet) of
side 2; the remaining points keep their relative order.
"""
import logging
import threading
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import factorial
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .arith import InvalidArgument
from .hodge import _ch, mixed_number
from .kappa_psi import _kap, _kappa_psi, _psi, push_down
from .tau import _tau, dimension, is_stable

logger = logging.getLogger(__name__)

PSI, KAPPA, IRR, RED, LAMBDA = range(5)


class SpaceId(NamedTuple):
    g: int
    n: int

    @property
    def dim(self) -> int:
        return dimension(self.g, self.n)


def space(g: int, n: int) -> SpaceId:
    if not is_stable(g, n):
        raise InvalidArgument(f"unstable space M({g},{n})")
    return SpaceId(g, n)


class DivClass(NamedTuple):
    """A generator; tuple order is the enumerate_classes order."""

    kind: int
    index: int = 0
    size: int = 0
    subset: Tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return self.index if self.kind in (KAPPA, LAMBDA) else 1


def psi(i: int) -> DivClass:
    return DivClass(PSI, i)


def kappa(a: int = 1) -> DivClass:
    return DivClass(KAPPA, a)


def delta(h: int, subset: Iterable[int] = ()) -> DivClass:
    subset = tuple(sorted(subset))
    return DivClass(RED, h, len(subset), subset)


def lam(j: int) -> DivClass:
    return DivClass(LAMBDA, j)


KAPPA1 = kappa(1)
DELTA_IRR = DivClass(IRR)

Factors = Tuple[Tuple[DivClass, int], ...]


class ClassMonomial(NamedTuple):
    g: int
    n: int
    factors: Factors

    @property
    def space(self) -> SpaceId:
        return SpaceId(self.g, self.n)

    @property
    def degree(self) -> int:
        return sum(c.degree * e for c, e in self.factors)

    @property
    def exps(self) -> Dict[DivClass, int]:
        return {c: e for c, e in self.factors if c.kind != LAMBDA}

    @property
    def lambda_exps(self) -> Dict[int, int]:
        return {c.index: e for c, e in self.factors if c.kind == LAMBDA}


ClassPolynomial = Dict[ClassMonomial, Fraction]
ProductPolynomial = Dict[Tuple[ClassMonomial, ClassMonomial], Fraction]


def _red_stable(g: int, n: int, h: int, size: int) -> bool:
    return (h >= 1 or size >= 2) and (g - h >= 1 or n - size >= 2)


def check_class(s: SpaceId, c: DivClass) -> None:
    g, n = s
    if c.kind == PSI:
        ok = 1 <= c.index <= n
    elif c.kind in (KAPPA, LAMBDA):
        ok = c.index >= 1
    elif c.kind == IRR:
        ok = True
    elif n == 0:
        ok = not c.subset and 1 <= c.index <= g // 2
    else:
        sub = c.subset
        ok = (
            0 <= c.index <= g
            and sub[:1] == (1,)
            and sub == tuple(sorted(set(sub)))
            and len(sub) == c.size
            and sub[-1] <= n
            and _red_stable(g, n, c.index, c.size)
        )
    if not ok:
        raise InvalidArgument(f"{c} is not a class on M({g},{n})")


def monomial(s: SpaceId, exps: Mapping[DivClass, int]) -> ClassMonomial:
    s = space(*s)
    merged: Dict[DivClass, int] = defaultdict(int)
    for c, e in exps.items():
        check_class(s, c)
        if e < 0:
            raise InvalidArgument(f"negative exponent for {c}")
        if e:
            merged[c] += e
    return ClassMonomial(s.g, s.n, tuple(sorted(merged.items())))


def enumerate_classes(s: SpaceId) -> List[DivClass]:
    g, n = space(*s)
    classes = [psi(i) for i in range(1, n + 1)] + [KAPPA1, DELTA_IRR]
    if n == 0:
        return classes + [delta(h) for h in range(1, g // 2 + 1)]
    reds = []
    others = range(2, n + 1)
    for h in range(g + 1):
        for size in range(len(others) + 1):
            for chosen in combinations(others, size):
                if _red_stable(g, n, h, size + 1):
                    reds.append(delta(h, (1,) + chosen))
    return classes + sorted(reds)


# -- pull-backs --------------------------------------------------------------

def _bump(key: Factors, c: DivClass) -> Factors:
    exps = dict(key)
    exps[c] = exps.get(c, 0) + 1
    return tuple(sorted(exps.items()))


def _drop(key: Factors, c: DivClass) -> Factors:
    exps = dict(key)
    exps[c] -= 1
    return tuple(sorted((k, e) for k, e in exps.items() if e))


@lru_cache(maxsize=None)
def _irr_images(g: int, n: int, c: DivClass) -> Tuple[Tuple[int, DivClass], ...]:
    """Linear image of c on M(g-1, n+2), the glued points being n+1, n+2."""
    if c.kind in (PSI, KAPPA):
        return ((1, c),)
    if c.kind == LAMBDA:
        return ((1, c),) if c.index <= g - 1 else ()
    if c.kind == IRR:
        out = [(-1, psi(n + 1)), (-1, psi(n + 2))]
        if g >= 2:
            out.append((1, DELTA_IRR))
        if n == 0:
            out.extend((1, delta(h, (1,))) for h in range(1, g - 1))
            return tuple(out)
        others = range(2, n + 1)
        for h in range(g):
            for size in range(len(others) + 1):
                for chosen in combinations(others, size):
                    if h == g - 1 and size == n - 1:
                        continue
                    m = (1,) + chosen
                    out.append((1, delta(h, m + (n + 1,))))
                    out.append((1, delta(h, m + (n + 2,))))
        return tuple(out)
    h, m = c.index, c.subset
    if n == 0:
        first, second = delta(h - 1, (1, 2)), delta(g - 1 - h, (1, 2))
        return ((1, first),) if first == second else ((1, first), (1, second))
    out = []
    if h >= 1:
        out.append((1, delta(h - 1, m + (n + 1, n + 2))))
    if h <= g - 1:
        out.append((1, delta(h, m)))
    return tuple(out)


Side = Optional[DivClass]


@lru_cache(maxsize=None)
def _red_images(g: int, n: int, target: DivClass, c: DivClass) -> Tuple[Tuple[int, Side, Side], ...]:
    """Image of c on the product for target delta_{g1,N1}, as
    (coefficient, side-1 class, side-2 class) with None for the unit."""
    g1, n1 = target.index, set(target.subset)
    g2 = g - g1
    rest2 = [p for p in range(1, n + 1) if p not in n1]
    map1 = {p: k for k, p in enumerate(target.subset, start=1)}
    map2 = {p: k for k, p in enumerate(rest2, start=2)}
    star = len(target.subset) + 1

    if c.kind == PSI:
        i = c.index
        return ((1, psi(map1[i]), None),) if i in n1 else ((1, None, psi(map2[i])),)
    if c.kind == KAPPA:
        return ((1, c, None), (1, None, c))
    if c.kind == LAMBDA:
        out = []
        for a in range(c.index + 1):
            b = c.index - a
            if a <= g1 and b <= g2:
                out.append((1, lam(a) if a else None, lam(b) if b else None))
        return tuple(out)
    if c.kind == IRR:
        out = []
        if g1 >= 1:
            out.append((1, DELTA_IRR, None))
        if g2 >= 1:
            out.append((1, None, DELTA_IRR))
        return tuple(out)

    if c == target:
        out = [(-1, psi(star), None), (-1, None, psi(1))]
        if n == 0:
            if g1 < g2:
                out.append((1, None, delta(g2 - g1, (1,))))
        elif not rest2 and g1 >= g2 > 0:
            out.append((1, delta(g1 - g2, range(1, star + 1)), None))
        return tuple(out)

    h = c.index
    if n == 0:
        if g1 > h:
            return ((1, delta(g1 - h, (1,)), None), (1, None, delta(g2 - h, (1,))))
        first, second = delta(g2 - h, (1,)), delta(h - g1, (1,))
        return ((1, None, first),) if first == second else ((1, None, first), (1, None, second))

    m = set(c.subset)
    out = []
    if g1 >= h and m <= n1:
        out.append((1, delta(h, (map1[p] for p in m)), None))
    if h >= g1 and n1 <= m:
        out.append((1, None, delta(h - g1, [1] + [map2[p] for p in m - n1])))
    if h >= g2 and set(rest2) <= m:
        out.append((1, delta(h - g2, [map1[p] for p in m & n1] + [star]), None))
    return tuple(out)


def pullback_to_irr(s: SpaceId, c: DivClass) -> ClassPolynomial:
    g, n = space(*s)
    if g < 1:
        raise InvalidArgument("M(0,n) has no irreducible boundary")
    check_class(s, c)
    return {ClassMonomial(g - 1, n + 2, ((cls, 1),)): Fraction(coeff) for coeff, cls in _irr_images(g, n, c)}


def _side_spaces(g: int, n: int, target: DivClass) -> Tuple[SpaceId, SpaceId]:
    n1 = target.size
    return SpaceId(target.index, n1 + 1), SpaceId(g - target.index, n - n1 + 1)


def pullback_to_red(s: SpaceId, target: DivClass, c: DivClass) -> ProductPolynomial:
    g, n = space(*s)
    check_class(s, target)
    check_class(s, c)
    if target.kind != RED:
        raise InvalidArgument(f"{target} is not a reducible boundary class")
    s1, s2 = _side_spaces(g, n, target)
    out: ProductPolynomial = {}
    for coeff, a, b in _red_images(g, n, target, c):
        key = (
            ClassMonomial(s1.g, s1.n, ((a, 1),) if a else ()),
            ClassMonomial(s2.g, s2.n, ((b, 1),) if b else ()),
        )
        out[key] = out.get(key, Fraction(0)) + coeff
    return out


def _expand_irr(g: int, n: int, factors: Factors) -> Dict[Factors, Fraction]:
    terms: Dict[Factors, Fraction] = {(): Fraction(1)}
    for c, e in factors:
        images = _irr_images(g, n, c)
        for _ in range(e):
            out: Dict[Factors, Fraction] = defaultdict(Fraction)
            for key, coeff in terms.items():
                for k, cls in images:
                    out[_bump(key, cls)] += coeff * k
            terms = {key: v for key, v in out.items() if v}
    return terms


def _expand_red(g: int, n: int, target: DivClass, factors: Factors, dims: Tuple[int, int]):
    # side degrees ride along in the key so over-degree terms are pruned early
    terms = {((), (), 0, 0): Fraction(1)}
    for c, e in factors:
        images = _red_images(g, n, target, c)
        for _ in range(e):
            out = defaultdict(Fraction)
            for (k1, k2, d1, d2), coeff in terms.items():
                for k, a, b in images:
                    n1, n2, e1, e2 = k1, k2, d1, d2
                    if a is not None:
                        e1 += a.degree
                        if e1 > dims[0]:
                            continue
                        n1 = _bump(k1, a)
                    if b is not None:
                        e2 += b.degree
                        if e2 > dims[1]:
                            continue
                        n2 = _bump(k2, b)
                    out[(n1, n2, e1, e2)] += coeff * k
            terms = {key: v for key, v in out.items() if v}
    return terms


# -- canonical form ----------------------------------------------------------

def canonicalize(m: ClassMonomial) -> ClassMonomial:
    """Least representative under relabeling the marked points."""
    return _canonical(m.g, m.n, tuple(sorted(m.factors)))


def _relabel(g: int, n: int, factors: Factors, mapping: Mapping[int, int]) -> Factors:
    out = []
    for c, e in factors:
        if c.kind == PSI:
            c = psi(mapping[c.index])
        elif c.kind == RED:
            sub = {mapping[p] for p in c.subset}
            if 1 in sub:
                c = delta(c.index, sub)
            else:
                c = delta(g - c.index, set(range(1, n + 1)) - sub)
        out.append((c, e))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _canonical(g: int, n: int, factors: Factors) -> ClassMonomial:
    if n < 2 or not any(c.kind in (PSI, RED) for c, _ in factors):
        return ClassMonomial(g, n, factors)
    exps = dict(factors)
    reds = [(c, e) for c, e in factors if c.kind == RED]

    def profile(p: int):
        sides = sorted(
            (c.index, c.size, e) if p in c.subset else (g - c.index, n - c.size, e)
            for c, e in reds
        )
        return (-exps.get(psi(p), 0), sides)

    points = sorted(range(1, n + 1), key=profile)
    groups: List[List[int]] = []
    for p in points:
        if groups and profile(groups[-1][0]) == profile(p):
            groups[-1].append(p)
        else:
            groups.append([p])

    best = None
    for arrangement in product(*(permutations(grp) for grp in groups)):
        order = [p for grp in arrangement for p in grp]
        mapping = {old: new for new, old in enumerate(order, start=1)}
        candidate = _relabel(g, n, factors, mapping)
        if best is None or candidate < best:
            best = candidate
    return ClassMonomial(g, n, best)


# -- evaluation --------------------------------------------------------------

_memo: Dict[ClassMonomial, Fraction] = {}
_memo_lock = threading.Lock()


def _validate(m: ClassMonomial) -> ClassMonomial:
    merged: Dict[DivClass, int] = defaultdict(int)
    for c, e in m.factors:
        merged[c] += e
    return monomial(SpaceId(m.g, m.n), merged)


def evaluate(m: ClassMonomial) -> Fraction:
    """Exact top intersection number; 0 when the degree misses the dimension."""
    m = _validate(m)
    if m.degree != m.space.dim:
        return Fraction(0)
    return _evaluate(canonicalize(m))


def _value(g: int, n: int, factors: Factors) -> Fraction:
    return _evaluate(_canonical(g, n, factors))


def _evaluate(m: ClassMonomial) -> Fraction:
    value = _memo.get(m)
    if value is None:
        value = _compute(m)
        with _memo_lock:
            _memo.setdefault(m, value)
    return value


def _split_free(m: ClassMonomial):
    """psi exponents by point, kappa indices, and the remaining factors."""
    d = [0] * m.n
    kappas: List[int] = []
    others = []
    for c, e in m.factors:
        if c.kind == PSI:
            d[c.index - 1] = e
        elif c.kind == KAPPA:
            kappas.extend([c.index] * e)
        else:
            others.append((c, e))
    return d, kappas, others


def _compute(m: ClassMonomial) -> Fraction:
    g, n, factors = m
    exps = dict(factors)
    lambdas = m.lambda_exps
    irr = exps.get(DELTA_IRR, 0)
    reds = [c for c, _ in factors if c.kind == RED]
    if any(j > g for j in lambdas) or (g == 0 and (irr or lambdas)):
        return Fraction(0)
    if irr > max(g, 3 * g - 3):
        return Fraction(0)
    if not reds and not irr:
        d, kappas, _ = _split_free(m)
        if lambdas:
            return mixed_number(g, d, kappas, lambdas)
        return _kappa_psi(g, _psi(d), _kap(kappas))
    if reds:
        return _restrict_red(m, _choose_target(g, n, reds))
    if n > _base_points(g):
        return sum((c * _evaluate(mono) for mono, c in pushdown(m).items()), Fraction(0))
    return _restrict_irr(m)


def _choose_target(g: int, n: int, reds: Sequence[DivClass]) -> DivClass:
    def balance(c: DivClass):
        s1, s2 = _side_spaces(g, n, c)
        return abs(s1.dim - s2.dim), c

    return min(reds, key=balance)


def _restrict_irr(m: ClassMonomial) -> Fraction:
    g, n, factors = m
    logger.debug("restricting %s to delta_irr", m)
    total = Fraction(0)
    for key, coeff in _expand_irr(g, n, _drop(factors, DELTA_IRR)).items():
        total += coeff * _value(g - 1, n + 2, key)
    return total / 2


def _restrict_red(m: ClassMonomial, target: DivClass) -> Fraction:
    g, n, factors = m
    s1, s2 = _side_spaces(g, n, target)
    dims = (s1.dim, s2.dim)
    logger.debug("restricting %s to %s", m, target)
    total = Fraction(0)
    for (k1, k2, d1, d2), coeff in _expand_red(g, n, target, _drop(factors, target), dims).items():
        if (d1, d2) != dims:
            continue
        left = _value(s1.g, s1.n, k1)
        if left:
            total += coeff * left * _value(s2.g, s2.n, k2)
    if n == 0 and 2 * target.index == g:
        total /= 2
    return total


def restrict(m: ClassMonomial, target: DivClass) -> Fraction:
    """Evaluate m by restricting to the given boundary factor first."""
    m = _validate(m)
    if target not in m.exps or target.kind not in (IRR, RED):
        raise InvalidArgument(f"{target} is not a boundary factor of the monomial")
    if m.degree != m.space.dim:
        return Fraction(0)
    if target.kind == IRR:
        if m.g == 0:
            return Fraction(0)
        return _restrict_irr(m)
    return _restrict_red(m, target)


def evaluate_power(s: SpaceId, combination: Mapping[DivClass, Fraction], power: int) -> Fraction:
    """Top intersection of (sum c_i D_i)^power, expanded by the multinomial
    theorem over monomials in the D_i."""
    s = space(*s)
    weights = {c: Fraction(x) for c, x in combination.items() if x}
    terms = list(weights)
    for c in terms:
        check_class(s, c)
    if power < 0:
        raise InvalidArgument(f"negative power {power}")
    total = Fraction(0)
    for combo in combinations_with_replacement(range(len(terms)), power):
        coeff = Fraction(factorial(power))
        exps: Dict[DivClass, int] = defaultdict(int)
        for i in combo:
            exps[terms[i]] += 1
        for c, e in exps.items():
            coeff *= weights[c] ** e / factorial(e)
        total += coeff * evaluate(monomial(s, exps))
    return total


def _base_points(g: int) -> int:
    return 1 if g == 1 else 0


def pushdown(m: ClassMonomial) -> ClassPolynomial:
    """Forget the marked points of a monomial without delta_{h,N} factors,
    down to M(g,0), or M(1,1) in genus 1."""
    if any(c.kind == RED for c, _ in m.factors):
        raise InvalidArgument("pushdown needs a monomial without reducible boundary factors")
    g, n = m.g, m.n
    if m.exps.get(DELTA_IRR, 0) > max(g, 3 * g - 3):
        return {}
    target_n = min(n, _base_points(g))
    if g == 0:
        target_n = 3 if n >= 3 else n
    logger.debug("pushing %s down to %d points", m, target_n)
    d, kappas, others = _split_free(m)
    out: ClassPolynomial = {}
    for (d1, k1), coeff in push_down(g, d, kappas, target_n).items():
        exps: Dict[DivClass, int] = defaultdict(int)
        for i, e in enumerate(d1, start=1):
            if e:
                exps[psi(i)] += e
        for a in k1:
            exps[kappa(a)] += 1
        for c, e in others:
            exps[c] += e
        mono = _canonical(g, target_n, tuple(sorted(exps.items())))
        out[mono] = out.get(mono, Fraction(0)) + coeff
    return {mono: c for mono, c in out.items() if c}


# -- memo table --------------------------------------------------------------

def memo_items() -> List[Tuple[ClassMonomial, Fraction]]:
    with _memo_lock:
        items = list(_memo.items())
    return sorted(items)


def seed_memo(entries: Iterable[Tuple[ClassMonomial, Fraction]]) -> int:
    count = 0
    with _memo_lock:
        for m, value in entries:
            _memo[canonicalize(m)] = Fraction(value)
            count += 1
    return count


def clear_memo() -> None:
    """Empty the memo table and the recursion caches feeding it."""
    with _memo_lock:
        _memo.clear()
    for cached in (_canonical, _irr_images, _red_images, _tau, _kappa_psi, _ch):
        cached.cache_clear()

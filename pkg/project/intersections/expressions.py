# intersections/expressions.py
"""Parser and printer for monomial expressions such as

    M(3,2): psi1^2 * d1_{1} * ka1^3

Grammar: ``M(g,n): factor (* factor)*`` with ``factor := token ['^' int]``.
Tokens: psi<i>, ka<j>, la<j>, ch<j>, d_irr, d<h> (n = 0) and d<h>_{1,...}
(n > 0, the subset holds point 1). The lone factor ``1`` is the empty
product. Whitespace between tokens is ignored.
"""
import logging
import re
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

from .arith import InvalidArgument
from .divisors import (
    IRR,
    KAPPA,
    LAMBDA,
    PSI,
    RED,
    DELTA_IRR,
    ClassMonomial,
    DivClass,
    SpaceId,
    check_class,
    delta,
    evaluate,
    kappa,
    lam,
    psi,
    space,
)
from .hodge import mixed_number

logger = logging.getLogger(__name__)

_WS = re.compile(r"\s*")
_HEADER = re.compile(r"\s*M\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:")
_TOKEN = re.compile(
    r"""
      psi(?P<psi>\d+)
    | ka(?P<ka>\d+)
    | la(?P<la>\d+)
    | ch(?P<ch>\d+)
    | (?P<irr>d_irr)
    | d(?P<h>\d+)(?:_\{(?P<subset>[^}]*)\})?
    | (?P<one>1)(?!\d)
    """,
    re.VERBOSE,
)
_EXPONENT = re.compile(r"\^\s*(\d+)")


class ExpressionError(ValueError):
    def __init__(self, message: str, offset: int):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class Expression(NamedTuple):
    space: SpaceId
    factors: Tuple[Tuple[DivClass, int], ...]
    chs: Tuple[Tuple[int, int], ...] = ()

    @property
    def monomial(self) -> ClassMonomial:
        return ClassMonomial(self.space.g, self.space.n, self.factors)

    @property
    def degree(self) -> int:
        return self.monomial.degree + sum(j * e for j, e in self.chs)

    @property
    def tokens(self) -> List[Tuple[str, int]]:
        out = [(class_token(c, self.space.n), e) for c, e in self.factors]
        return out + [(f"ch{j}", e) for j, e in self.chs]


def _offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _skip(text: str, pos: int) -> int:
    return _WS.match(text, pos).end()


def parse(text: str) -> Expression:
    header = _HEADER.match(text)
    if not header:
        raise ExpressionError("expected 'M(g,n):'", _offset(text, _skip(text, 0)))
    g, n = int(header.group(1)), int(header.group(2))
    try:
        s = space(g, n)
    except InvalidArgument as exc:
        raise ExpressionError(str(exc), _offset(text, header.start(1))) from exc
    return _parse_factors(text, header.end(), s)


def parse_factors(s: SpaceId, text: str) -> Expression:
    """Parse only the factor list, for a space known from elsewhere."""
    return _parse_factors(text, 0, space(*s))


def _parse_factors(text: str, pos: int, s: SpaceId) -> Expression:
    classes: Dict[DivClass, int] = defaultdict(int)
    chs: Dict[int, int] = defaultdict(int)
    boundary_at = ch_at = one_at = None
    count = 0
    while True:
        pos = _skip(text, pos)
        start = pos
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError("unknown token", _offset(text, start))
        pos = _skip(text, m.end())
        exponent = 1
        if text.startswith("^", pos):
            e = _EXPONENT.match(text, pos)
            if not e:
                raise ExpressionError("expected an exponent after '^'", _offset(text, pos + 1))
            exponent = int(e.group(1))
            if exponent == 0:
                raise ExpressionError("exponent must be positive", _offset(text, e.start(1)))
            pos = _skip(text, e.end())
        count += 1

        if m.group("one"):
            one_at = start
        elif m.group("ch"):
            j = int(m.group("ch"))
            if j < 1 or j % 2 == 0:
                raise ExpressionError(f"ch{j} is not admitted: only odd indices", _offset(text, start))
            chs[j] += exponent
            ch_at = start
        else:
            cls = _token_class(text, m, s)
            try:
                check_class(s, cls)
            except InvalidArgument as exc:
                raise ExpressionError(f"{m.group(0)} is not a class on M({s.g},{s.n})", _offset(text, start)) from exc
            if cls.kind in (IRR, RED):
                boundary_at = start
            classes[cls] += exponent

        if pos == len(text):
            break
        if text[pos] != "*":
            raise ExpressionError("expected '*'", _offset(text, pos))
        pos += 1

    if one_at is not None and count > 1:
        raise ExpressionError("'1' stands alone", _offset(text, one_at))
    if ch_at is not None and boundary_at is not None:
        raise ExpressionError("ch factors do not combine with boundary classes", _offset(text, max(ch_at, boundary_at)))
    return Expression(s, tuple(sorted(classes.items())), tuple(sorted(chs.items())))


def _token_class(text: str, m: "re.Match", s: SpaceId) -> DivClass:
    if m.group("psi"):
        return psi(int(m.group("psi")))
    if m.group("ka"):
        return kappa(int(m.group("ka")))
    if m.group("la"):
        return lam(int(m.group("la")))
    if m.group("irr"):
        return DELTA_IRR
    h = int(m.group("h"))
    raw = m.group("subset")
    if raw is None:
        if s.n:
            raise ExpressionError("d<h> needs a subset when n > 0", _offset(text, m.end("h")))
        return delta(h)
    if s.n == 0:
        raise ExpressionError("d<h> takes no subset when n = 0", _offset(text, m.start("subset")))
    items = [item.strip() for item in raw.split(",")]
    if not all(item.isdigit() for item in items):
        raise ExpressionError("malformed subset", _offset(text, m.start("subset")))
    points = [int(item) for item in items]
    if points != sorted(set(points)):
        raise ExpressionError("subset must be strictly ascending", _offset(text, m.start("subset")))
    return delta(h, points)


def class_token(c: DivClass, n: int) -> str:
    if c.kind == PSI:
        return f"psi{c.index}"
    if c.kind == KAPPA:
        return f"ka{c.index}"
    if c.kind == LAMBDA:
        return f"la{c.index}"
    if c.kind == IRR:
        return "d_irr"
    if n == 0:
        return f"d{c.index}"
    return f"d{c.index}_{{{','.join(str(p) for p in c.subset)}}}"


def format_factors(expr: Expression) -> str:
    parts = [tok if e == 1 else f"{tok}^{e}" for tok, e in expr.tokens]
    return " * ".join(parts) or "1"


def format_expression(expr: Expression) -> str:
    return f"M({expr.space.g},{expr.space.n}): {format_factors(expr)}"


def format_monomial(m: ClassMonomial) -> str:
    return format_expression(Expression(m.space, m.factors))


def evaluate_expression(expr: Expression) -> Fraction:
    if not expr.chs:
        return evaluate(expr.monomial)
    d = [0] * expr.space.n
    kappas: List[int] = []
    lambdas: Dict[int, int] = {}
    for c, e in expr.factors:
        if c.kind == PSI:
            d[c.index - 1] = e
        elif c.kind == KAPPA:
            kappas.extend([c.index] * e)
        else:
            lambdas[c.index] = e
    chs = [j for j, e in expr.chs for _ in range(e)]
    if expr.degree != expr.space.dim:
        return Fraction(0)
    return mixed_number(expr.space.g, d, kappas, lambdas, chs)

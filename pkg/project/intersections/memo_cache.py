# intersections/memo_cache.py
"""Persistent copy of the divisor memo table.

    # tautcalc-cache v1
    SPACE 3 0<TAB>ka1^4 * d_irr^2<TAB>-13/2880
"""
import logging
import os
from pathlib import Path
from typing import Union

from .arith import InvalidArgument, format_rational, parse_rational
from .divisors import SpaceId, memo_items, seed_memo
from .expressions import Expression, format_factors, parse_factors

logger = logging.getLogger(__name__)

HEADER = "# tautcalc-cache v1"

PathLike = Union[str, os.PathLike]


def dump() -> str:
    lines = [HEADER]
    for m, value in memo_items():
        factors = format_factors(Expression(m.space, m.factors))
        lines.append(f"SPACE {m.g} {m.n}\t{factors}\t{format_rational(value)}")
    return "\n".join(lines) + "\n"


def save(path: PathLike) -> int:
    path = Path(path)
    text = dump()
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)
    count = text.count("\n") - 1
    logger.info("saved %d cache entries to %s", count, path)
    return count


def load(path: PathLike) -> int:
    """Seed the memo table from path; a missing file is an empty cache."""
    path = Path(path)
    if not path.exists():
        logger.info("no cache at %s yet", path)
        return 0
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0].strip() != HEADER:
        logger.warning("ignoring %s: unknown cache header %r", path, lines[0] if lines else "")
        return 0
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            head, factors, value = line.split("\t")
            tag, g, n = head.split()
            if tag != "SPACE":
                raise InvalidArgument(f"unexpected tag {tag!r}")
            expr = parse_factors(SpaceId(int(g), int(n)), factors)
            if expr.chs:
                raise InvalidArgument("ch factors are not cached")
            if expr.degree != expr.space.dim:
                raise InvalidArgument("degree does not match the space")
            entries.append((expr.monomial, parse_rational(value)))
        except ValueError as exc:
            logger.warning("%s:%d: skipping cache line (%s)", path, lineno, exc)
    count = seed_memo(entries)
    logger.info("loaded %d cache entries from %s", count, path)
    return count

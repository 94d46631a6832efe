# intersections/management/commands/table.py
from collections import Counter
from itertools import combinations_with_replacement

from django.core.management.base import CommandError

from intersections.arith import format_rational
from intersections.cli_helpers import EngineCommand, ordered_map
from intersections.divisors import SpaceId, enumerate_classes, evaluate, monomial, space
from intersections.expressions import format_monomial


def _space_arg(value: str) -> SpaceId:
    try:
        g, n = (int(part) for part in value.split(","))
    except ValueError:
        raise CommandError(f"--space expects g,n, got {value!r}")
    return space(g, n)


class Command(EngineCommand):
    help = "Every divisor monomial of one degree on M(g,n), one value per line."

    def add_command_arguments(self, parser):
        parser.add_argument("--space", required=True, help="g,n")
        parser.add_argument("--degree", type=int, help="defaults to the dimension 3g-3+n")

    def run(self, *args, **options):
        s = _space_arg(options["space"])
        degree = s.dim if options["degree"] is None else options["degree"]
        if degree < 0:
            raise CommandError("--degree must be non-negative")
        classes = enumerate_classes(s)
        monomials = [monomial(s, Counter(combo)) for combo in combinations_with_replacement(classes, degree)]
        values = ordered_map(evaluate, monomials, jobs=options["jobs"], desc=f"M({s.g},{s.n})")
        for m, value in zip(monomials, values):
            self.stdout.write(f"{format_monomial(m)}\t{format_rational(value)}")

# intersections/management/commands/eval.py
from intersections.arith import format_rational
from intersections.cli_helpers import EngineCommand
from intersections.expressions import evaluate_expression, parse


class Command(EngineCommand):
    help = 'Evaluate one intersection number, e.g. "M(2,0): d_irr^3".'

    def add_command_arguments(self, parser):
        parser.add_argument("expression", help='"M(g,n): factor * factor^e * ..."')

    def run(self, *args, **options):
        expr = parse(options["expression"])
        if expr.degree != expr.space.dim:
            self.warn(f"degree {expr.degree} differs from dimension {expr.space.dim}; the number is 0")
        self.stdout.write(format_rational(evaluate_expression(expr)))

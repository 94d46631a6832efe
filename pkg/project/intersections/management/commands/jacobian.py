# intersections/management/commands/jacobian.py
import re
from argparse import ArgumentTypeError

from intersections.cli_helpers import EngineCommand
from intersections.taut_ag import format_class, jacobian_class

_PROBE = re.compile(r"(?:la\d+)+")


def _probe_arg(value: str):
    if not _PROBE.fullmatch(value):
        raise ArgumentTypeError(f"--probe expects a lambda monomial like la1la2la3, got {value!r}")
    return sorted(int(j) for j in re.findall(r"\d+", value))


class Command(EngineCommand):
    help = "Projection of the Jacobian locus class into the lambda ring of A_g."

    def add_command_arguments(self, parser):
        parser.add_argument("--genus", type=int, required=True)
        parser.add_argument(
            "--probe",
            action="append",
            type=_probe_arg,
            help="degree 3g-3 monomial to pair against, repeatable; replaces the automatic choice",
        )

    def run(self, *args, **options):
        self.stdout.write(format_class(jacobian_class(options["genus"], options["probe"])))

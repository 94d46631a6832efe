# intersections/management/commands/selftest.py
import logging

from django.core.management.base import CommandError
from tqdm import tqdm

from intersections import acceptance
from intersections.cli_helpers import EngineCommand

logger = logging.getLogger(__name__)


def _show(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


class Command(EngineCommand):
    help = "Check the engine against published intersection numbers and Jacobian classes."

    def add_command_arguments(self, parser):
        parser.add_argument("--full", action="store_true", help="include the M(4,0)..M(7,0) checks")

    def run(self, *args, **options):
        full = options["full"]
        total = sum(1 for c in acceptance.CHECKS if full or not c.slow)
        failed = 0
        for check, actual, ok in tqdm(acceptance.run_checks(full), total=total, disable=None, leave=False):
            if ok:
                self.stdout.write(f"PASS {check.name}")
            else:
                failed += 1
                self.stdout.write(f"FAIL {check.name}: expected {_show(check.expected)}, got {_show(actual)}")
                logger.warning("selftest check %r failed", check.name)
        if failed:
            raise CommandError(f"{failed} of {total} checks failed")

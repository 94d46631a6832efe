# intersections/management/commands/tau.py
from intersections.cli_helpers import EngineCommand
from intersections.tau import export_table, format_table


class Command(EngineCommand):
    help = "Export <tau_d1 ... tau_dn>_g for every genus up to --gmax."

    def add_command_arguments(self, parser):
        parser.add_argument("--gmax", type=int, required=True)

    def run(self, *args, **options):
        self.stdout.write(format_table(export_table(options["gmax"])), ending="")

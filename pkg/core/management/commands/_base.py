"""
Shared plumbing for the algebra commands: ``--json``/``--threads`` options,
graph input, error-to-exit-code mapping and table rendering.
"""

import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rich import box
from rich.console import Console
from rich.table import Table

from core.errors import CapExceeded, GesselError
from core.schemas import parse_graph

EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_SELFTEST = 3


class GesselCommand(BaseCommand):
    requires_system_checks = []
    requires_migrations_checks = False

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', dest='as_json', help='Print a JSON document.')
        parser.add_argument('--threads', type=int, default=None, help='Worker threads for enumeration.')

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # argument errors become CommandError with exit code 1
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except CommandError as exc:
            self.stderr.write(str(exc))
            sys.exit(exc.returncode)

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except CapExceeded as exc:
            raise CommandError(str(exc), returncode=EXIT_CAP) from exc
        except GesselError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

    # input

    def read_graph(self, source):
        """Graph from a path, or from standard input when ``source`` is ``-``."""
        if source == '-':
            text = sys.stdin.read()
        else:
            try:
                text = Path(source).read_text()
            except OSError as exc:
                raise CommandError(f"cannot read {source}: {exc}", returncode=EXIT_USAGE) from exc
        return parse_graph(text)

    # output

    def emit_json(self, payload):
        self.stdout.write(payload.model_dump_json(indent=2))

    def emit_table(self, title, columns, rows):
        table = Table(title=title, box=box.SIMPLE, show_lines=False)
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*(str(cell) for cell in row))
        console = Console(width=120, color_system=None, force_terminal=False, highlight=False)
        with console.capture() as capture:
            console.print(table)
        self.stdout.write(capture.get(), ending='')

from django.core.management.base import CommandError

from core.schemas import CheckPayload, SelftestPayload
from core.selftest import run_checks

from ._base import EXIT_SELFTEST, GesselCommand


class Command(GesselCommand):
    help = "Run the worked examples and report any disagreement."

    def handle(self, *args, **options):
        results = run_checks()
        if options['as_json']:
            self.emit_json(SelftestPayload(
                passed=all(r.passed for r in results),
                checks=[
                    CheckPayload(name=r.name, expected=r.expected, actual=r.actual, passed=r.passed)
                    for r in results
                ],
            ))
        else:
            self.emit_table(
                "Self-test",
                ['check', 'result', 'expected', 'actual'],
                [(r.name, 'ok' if r.passed else 'FAIL', r.expected, r.actual) for r in results],
            )
        failed = [r.name for r in results if not r.passed]
        if failed:
            raise CommandError(f"{len(failed)} check(s) failed: {', '.join(failed)}", returncode=EXIT_SELFTEST)

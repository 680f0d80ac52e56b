from dataclasses import asdict

from core.bases import family_reports
from core.errors import PreconditionError
from core.schemas import FamilyReportListPayload, FamilyReportPayload

from ._base import GesselCommand


class Command(GesselCommand):
    help = "Unitriangularity and determinants of the L, F, G_I and B_(I,J) families up to degree n."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=3)

    def handle(self, *args, **options):
        if options['n'] < 1:
            raise PreconditionError("degree must be at least 1")
        reports = [report for degree in range(1, options['n'] + 1) for report in family_reports(degree)]
        if options['as_json']:
            return self.emit_json(FamilyReportListPayload(
                reports=[FamilyReportPayload(**asdict(r)) for r in reports],
            ))
        self.emit_table(
            "Triangular families",
            ['family', 'degree', 'size', 'unitriangular', 'determinant'],
            [(r.family, r.degree, r.size, 'yes' if r.unitriangular else 'NO', r.determinant) for r in reports],
        )

"""
JSON payloads for command output and graph input.

Coefficients travel as strings (``"3"`` or ``"-1/2"``); term lists are
sorted by canonical key so equal inputs give byte-identical documents.
"""

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .digraph import Digraph, GraphVec
from .errors import FormatError
from .sparse import format_coefficient, parse_coefficient


class _Payload(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)


class WqsymPayload(_Payload):
    basis: str
    degree: int
    terms: list[tuple[str, str]]


class QsymPayload(_Payload):
    degree: int
    terms: list[tuple[str, str]]


class GraphPayload(_Payload):
    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = []


class GraphTermPayload(GraphPayload):
    coefficient: str

    @field_validator('coefficient')
    @classmethod
    def _rational(cls, value):
        parse_coefficient(value)
        return value


class GraphVecPayload(_Payload):
    terms: list[GraphTermPayload]


class CyclePayload(_Payload):
    vertices: list[int]
    plus_edges: list[tuple[int, int]]
    minus_edges: list[tuple[int, int]]


class CycleListPayload(_Payload):
    cycles: list[CyclePayload]


class BiPolynomialPayload(_Payload):
    m: int
    terms: list[tuple[list[int], list[int], str]]


class RankPayload(_Payload):
    n: int
    mode: str
    bipartite: bool
    graphs: int
    ordered_bell: int
    rank: int


class KerovPayload(_Payload):
    mu: list[int]
    coefficients: list[tuple[list[int], str]]


class FamilyReportPayload(_Payload):
    family: str
    degree: int
    size: int
    unitriangular: bool
    determinant: int


class FamilyReportListPayload(_Payload):
    reports: list[FamilyReportPayload]


class CheckPayload(_Payload):
    name: str
    expected: str
    actual: str
    passed: bool


class SelftestPayload(_Payload):
    passed: bool
    checks: list[CheckPayload]


# =========================
#   CONVERSIONS
# =========================

def wqsym_payload(vec):
    return WqsymPayload(
        basis=vec.basis.value,
        degree=vec.degree,
        terms=[(str(key), format_coefficient(c)) for key, c in vec.items()],
    )


def qsym_payload(vec):
    return QsymPayload(
        degree=vec.degree,
        terms=[(str(key), format_coefficient(c)) for key, c in vec.items()],
    )


def graphvec_payload(vec):
    return GraphVecPayload(terms=[
        GraphTermPayload(
            n=graph.n,
            edges=list(graph.sorted_edges),
            coefficient=format_coefficient(c),
        )
        for graph, c in vec.items()
    ])


def bipolynomial_payload(poly):
    return BiPolynomialPayload(
        m=poly.m,
        terms=[(list(pe), list(qe), format_coefficient(c)) for (pe, qe), c in poly.items()],
    )


def graphvec_from_payload(payload):
    return GraphVec([
        (Digraph(term.n, frozenset(map(tuple, term.edges))), parse_coefficient(term.coefficient))
        for term in payload.terms
    ])


def parse_graph(text):
    """A ``Digraph`` from the text format or from a ``GraphPayload`` JSON document."""
    if text.lstrip().startswith('{'):
        try:
            payload = GraphPayload.model_validate_json(text)
        except ValidationError as exc:
            raise FormatError(f"invalid graph JSON: {exc}") from exc
        if len(set(payload.edges)) != len(payload.edges):
            raise FormatError("repeated edge")
        return Digraph(payload.n, frozenset(payload.edges))
    return Digraph.parse(text)

"""JSON verdicts: serialization of certificates and re-verification.

Every verdict has the keys ``property``, ``holds``, ``certificate`` and
``input_echo`` (graph6 of the input). Certificate shapes:

========================  ======  ==============================================
property                  holds   certificate
========================  ======  ==============================================
``two-cliques``           true    ``{"side1": [...], "side2": [...]}``
``two-cliques``           false   ``{"cycle_order": [...]}``
``quasi-line``            true    ``{"per_vertex": [{"vertex", "side1", "side2"}]}``
``quasi-line``            false   ``{"apex": v, "witness": [...]}``
``induced-pattern``       true    ``{"expr": E, "embedding": [...]}``
``induced-pattern``       false   ``{"expr": E, "embedding": null}``
========================  ======  ==============================================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from quasiline.formats import encode_graph6, parse_graph6
from quasiline.forbidden import build_pattern, find_induced, parse_pattern, verify_embedding
from quasiline.graph import Graph
from quasiline.recognition import (
    OddAntiholeWitness,
    QuasiLineCertificate,
    QuasiLineObstruction,
    TwoCliqueCover,
    verify_antihole,
    verify_quasi_line_certificate,
    verify_quasi_line_obstruction,
    verify_two_clique_cover,
)

TWO_CLIQUES = "two-cliques"
QUASI_LINE = "quasi-line"
INDUCED_PATTERN = "induced-pattern"


class VerdictFormatError(ValueError):
    """Verdict JSON does not match any known schema."""


@dataclass(frozen=True)
class Verdict:
    property: str
    holds: bool
    certificate: dict[str, Any]
    input_echo: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "holds": self.holds,
            "certificate": self.certificate,
            "input_echo": self.input_echo,
        }


def _cover_json(c: TwoCliqueCover) -> dict[str, list[int]]:
    return {"side1": list(c.side1), "side2": list(c.side2)}


def two_cliques_verdict(g: Graph, result: TwoCliqueCover | OddAntiholeWitness) -> Verdict:
    echo = encode_graph6(g).decode()
    if isinstance(result, TwoCliqueCover):
        return Verdict(TWO_CLIQUES, True, _cover_json(result), echo)
    return Verdict(TWO_CLIQUES, False, {"cycle_order": list(result.cycle_order)}, echo)


def quasi_line_verdict(g: Graph, result: QuasiLineCertificate | QuasiLineObstruction) -> Verdict:
    echo = encode_graph6(g).decode()
    if isinstance(result, QuasiLineCertificate):
        rows = [{"vertex": v, **_cover_json(c)} for v, c in sorted(result.per_vertex.items())]
        return Verdict(QUASI_LINE, True, {"per_vertex": rows}, echo)
    cert = {"apex": result.apex, "witness": list(result.witness.cycle_order)}
    return Verdict(QUASI_LINE, False, cert, echo)


def pattern_verdict(g: Graph, expr: str, embedding: tuple[int, ...] | None) -> Verdict:
    echo = encode_graph6(g).decode()
    cert = {"expr": expr, "embedding": list(embedding) if embedding is not None else None}
    return Verdict(INDUCED_PATTERN, embedding is not None, cert, echo)


def verdict_from_dict(data: Any) -> Verdict:
    if not isinstance(data, dict):
        raise VerdictFormatError("verdict must be a JSON object")
    missing = {"property", "holds", "certificate", "input_echo"} - set(data)
    if missing:
        raise VerdictFormatError(f"verdict lacks keys: {', '.join(sorted(missing))}")
    if not isinstance(data["holds"], bool) or not isinstance(data["certificate"], dict):
        raise VerdictFormatError("'holds' must be boolean and 'certificate' an object")
    return Verdict(data["property"], data["holds"], data["certificate"], str(data["input_echo"]))


def _ints(value: Any, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise VerdictFormatError(f"{what} must be a list of integers")
    return tuple(value)


def verify_verdict(v: Verdict, g: Graph | None = None) -> bool:
    """Re-check ``v`` against ``g`` (default: the graph in ``input_echo``).

    Raises VerdictFormatError for malformed certificates and
    VertexRangeError for labels outside the graph.
    """
    if g is None:
        g = parse_graph6(v.input_echo.encode())
    cert = v.certificate
    if v.property == TWO_CLIQUES:
        if v.holds:
            cover = TwoCliqueCover(_ints(cert.get("side1"), "side1"), _ints(cert.get("side2"), "side2"))
            return verify_two_clique_cover(g, cover)
        return verify_antihole(g, OddAntiholeWitness(_ints(cert.get("cycle_order"), "cycle_order")))
    if v.property == QUASI_LINE:
        if v.holds:
            entries = cert.get("per_vertex")
            if not isinstance(entries, list):
                raise VerdictFormatError("per_vertex must be a list")
            per_vertex = {}
            for e in entries:
                if not isinstance(e, dict) or not isinstance(e.get("vertex"), int):
                    raise VerdictFormatError("per_vertex entries need an integer 'vertex'")
                per_vertex[e["vertex"]] = TwoCliqueCover(
                    _ints(e.get("side1"), "side1"), _ints(e.get("side2"), "side2")
                )
            if len(per_vertex) != len(entries):
                return False
            return verify_quasi_line_certificate(g, QuasiLineCertificate(per_vertex))
        apex = cert.get("apex")
        if not isinstance(apex, int):
            raise VerdictFormatError("apex must be an integer")
        witness = OddAntiholeWitness(_ints(cert.get("witness"), "witness"))
        return verify_quasi_line_obstruction(g, QuasiLineObstruction(apex, witness))
    if v.property == INDUCED_PATTERN:
        expr = cert.get("expr")
        if not isinstance(expr, str):
            raise VerdictFormatError("expr must be a string")
        pattern = build_pattern(parse_pattern(expr))
        if v.holds:
            return verify_embedding(g, pattern, _ints(cert.get("embedding"), "embedding"))
        # absence has no compact certificate; repeat the exhaustive search
        return cert.get("embedding") is None and find_induced(g, pattern) is None
    raise VerdictFormatError(f"unknown property {v.property!r}")

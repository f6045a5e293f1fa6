"""Oracle-versus-recognition sweeps over graph streams."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from quasiline.forbidden import corollary2_check
from quasiline.formats import encode_graph6
from quasiline.graph import Graph, induced_subgraph, iter_bits
from quasiline.oracle import brute_find_odd_antihole, brute_two_clique_cover
from quasiline.recognition import (
    QuasiLineCertificate,
    TwoCliqueCover,
    quasi_line,
    two_clique_cover,
    verify_antihole,
    verify_quasi_line_certificate,
    verify_quasi_line_obstruction,
    verify_two_clique_cover,
)

CHECKS = ("theorem", "corollary1", "corollary2", "soundness")


@dataclass
class SweepReport:
    graphs: int = 0
    mismatches: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    first_offender: dict[str, str] = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not any(self.mismatches.values())

    def record(self, check: str, g: Graph) -> None:
        self.mismatches[check] += 1
        self.first_offender.setdefault(check, encode_graph6(g).decode())


def failed_checks(g: Graph, corollary2: bool = True) -> list[str]:
    """Names of the checks that ``g`` violates; empty when everything agrees."""
    bad = []
    cover = two_clique_cover(g)
    has_cover = isinstance(cover, TwoCliqueCover)
    brute_cover = brute_two_clique_cover(g)
    antihole = brute_find_odd_antihole(g)
    if has_cover != (brute_cover is not None) or has_cover != (antihole is None):
        bad.append("theorem")

    ql = quasi_line(g)
    per_vertex = all(
        brute_two_clique_cover(induced_subgraph(g, iter_bits(g.rows[v]))[0]) is not None
        for v in range(g.n)
    )
    if isinstance(ql, QuasiLineCertificate) != per_vertex:
        bad.append("corollary1")

    if corollary2:
        report = corollary2_check(g)
        if report.implied_quasi_line and not isinstance(ql, QuasiLineCertificate):
            bad.append("corollary2")

    sound = verify_two_clique_cover(g, cover) if has_cover else verify_antihole(g, cover)
    if isinstance(ql, QuasiLineCertificate):
        sound = sound and verify_quasi_line_certificate(g, ql)
    else:
        sound = sound and verify_quasi_line_obstruction(g, ql)
    if brute_cover is not None:
        sound = sound and verify_two_clique_cover(g, brute_cover)
    if antihole is not None:
        sound = sound and verify_antihole(g, antihole)
    if not sound:
        bad.append("soundness")
    return bad


def sweep(graphs: Iterable[Graph], corollary2: bool = True) -> SweepReport:
    report = SweepReport()
    for g in graphs:
        report.graphs += 1
        for check in failed_checks(g, corollary2):
            report.record(check, g)
    return report

"""Cross-validation of the face machinery against the brute-force oracle.

Four independent checks: certified points satisfy every predicted facet
inequality, every facet is tight somewhere on the sample, every lattice
point the inequalities admit is certified by the oracle, and distinct
faces stay distinct as point sets of extreme rays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product

from .config import DEFAULT_CONFIG, RunConfig
from .errors import VerificationFailure
from .facecone import (
    ConeInequality,
    cone_extreme_rays,
    dot,
    enumerate_faces,
    face_rayset,
    facet_inequalities,
    flatten_point,
)
from .oracle import sample_cone
from .rootsys import RootSystem


@dataclass
class VerifyReport:
    cartan_type: str
    s: int
    box: int
    depth: int
    sample_size: int = 0
    facet_count: int = 0
    face_count: int = 0
    validity_failures: list = field(default_factory=list)
    tightness_failures: list = field(default_factory=list)
    completeness_failures: list = field(default_factory=list)
    injectivity_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.validity_failures
            or self.tightness_failures
            or self.completeness_failures
            or self.injectivity_failures
        )

    def lines(self) -> list[str]:
        def verdict(name: str, failures: list, detail: str) -> str:
            state = "PASS" if not failures else f"FAIL ({len(failures)} {detail})"
            return f"{name}: {state}"

        return [
            f"sample: {self.sample_size} certified points, "
            f"box {self.box}, depth {self.depth}",
            f"facets: {self.facet_count}, faces: {self.face_count}",
            verdict("validity", self.validity_failures, "negative values"),
            verdict("tightness", self.tightness_failures, "slack facets"),
            verdict("completeness", self.completeness_failures, "uncertified points"),
            verdict("injectivity", self.injectivity_failures, "merged face pairs"),
        ]


def verify_cone(
    rs: RootSystem,
    s: int,
    box: int,
    depth: int,
    config: RunConfig = DEFAULT_CONFIG,
    jobs: int = 1,
) -> VerifyReport:
    """Run all cross-checks for one type and factor count at one box size."""
    report = VerifyReport(str(rs.cartan_type), s, box, depth)
    sample = sample_cone(rs, s, box, depth, config, jobs)
    report.sample_size = len(sample)
    facets = facet_inequalities(rs, s, config, sample=sample)
    report.facet_count = len(facets)
    vectors = [flatten_point(pt.weights) for pt in sample]
    rows = [f.row(rs) for f in facets]
    for pt, vec in zip(sample, vectors):
        for fi, row in enumerate(rows):
            if dot(row, vec) < 0:
                report.validity_failures.append((pt.weights, fi))
    certified = set(vectors)
    for fi, row in enumerate(rows):
        if not any(dot(row, v) == 0 and any(v) for v in vectors):
            report.tightness_failures.append(fi)
    n = rs.rank
    for combo in iter_product(range(box + 1), repeat=n * (s + 1)):
        if combo in certified:
            continue
        if all(dot(row, combo) >= 0 for row in rows):
            report.completeness_failures.append(combo)
    faces = enumerate_faces(rs, s, None, config)
    report.face_count = len(faces)
    rays = cone_extreme_rays(rs, s, facets)
    signatures = [face_rayset(rs, face, rays) for face in faces]
    for a in range(len(faces)):
        for b in range(a + 1, len(faces)):
            if signatures[a] == signatures[b]:
                report.injectivity_failures.append((a, b))
    return report


def require_ok(report: VerifyReport) -> None:
    if report.ok:
        return
    detail = []
    if report.validity_failures:
        pt, fi = report.validity_failures[0]
        detail.append(f"facet {fi} negative on certified point {pt}")
    if report.tightness_failures:
        detail.append(f"facet {report.tightness_failures[0]} never tight on sample")
    if report.completeness_failures:
        detail.append(
            f"point {report.completeness_failures[0]} admitted by facets "
            "but not certified"
        )
    if report.injectivity_failures:
        a, b = report.injectivity_failures[0]
        detail.append(f"faces {a} and {b} share an extreme-ray set")
    raise VerificationFailure("; ".join(detail))

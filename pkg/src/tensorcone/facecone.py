"""Faces of the tensor cone, parametrized by parabolic-plus-classes data.

A face descriptor is a proper standard parabolic together with a tuple of
minimal coset representatives whose degenerate product is the point class
with coefficient one.  The attached linear equations cut the face out of
the ambient product of dominant chambers; facets are the codimension-one
case, oriented empirically against certified cone points.  The geometric
cross-checks go through exact extreme-ray enumeration and never reuse the
combinatorial containment test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bkprod import DEFAULT_CONVENTION, PointTuple, enumerate_theta
from .config import DEFAULT_CONFIG, RunConfig
from .errors import ConfigError, ConsistencyError
from .oracle import CertifiedPoint, sample_cone
from .rays import Row, extreme_rays
from .rootsys import RootSystem, Weight, is_dominant
from .weylgrp import WeylElement, weyl_group


@dataclass(frozen=True)
class FaceDescriptor:
    """One face: defining Levi subset, class tuple, and derived equations."""

    levi: tuple[int, ...]
    complement: tuple[int, ...]
    reps: tuple[WeylElement, ...]
    s: int

    @property
    def codim(self) -> int:
        return len(self.complement)

    def sort_key(self):
        return (self.codim, self.complement, tuple(w.word for w in self.reps))


def face_from_tuple(rs: RootSystem, s: int, t: PointTuple) -> FaceDescriptor:
    """Wrap a point-class tuple as a face of the cone with s+1 factors."""
    if not (t.cup_coeff == 1 and t.movable):
        raise ConsistencyError("face labels need a movable tuple with coefficient 1")
    if len(t.reps) != s + 1:
        raise ConfigError(f"tuple has {len(t.reps)} classes, expected {s + 1}")
    group = weyl_group(rs)
    p = group.parabolic(t.levi)
    return FaceDescriptor(p.levi, p.complement, t.reps, s)


def equation_row(rs: RootSystem, face: FaceDescriptor, k: int) -> Row:
    """Coefficients of one face equation on flattened fundamental coordinates.

    The functional sends a tuple of weights to the sum over factors of the
    k-th coweight pairing after undoing each factor's class.
    """
    group = weyl_group(rs)
    n = rs.rank
    row: list[Fraction] = []
    for w in face.reps:
        inv = group.invert(w)
        for j in range(n):
            basis = Weight([1 if c == j else 0 for c in range(n)])
            row.append(rs.root_coords(group.act(inv, basis))[k - 1])
    return tuple(row)


def equation_rows(rs: RootSystem, face: FaceDescriptor) -> list[Row]:
    return [equation_row(rs, face, k) for k in face.complement]


def flatten_point(point: tuple[Weight, ...] | list[Weight]) -> tuple[Fraction, ...]:
    return tuple(c for w in point for c in w.coords)


def dot(row: Row, vec: tuple[Fraction, ...] | tuple[int, ...]) -> Fraction:
    return sum((a * b for a, b in zip(row, vec)), Fraction(0))


def enumerate_faces(
    rs: RootSystem,
    s: int,
    max_codim: int | None = None,
    config: RunConfig = DEFAULT_CONFIG,
    convention: str = DEFAULT_CONVENTION,
) -> list[FaceDescriptor]:
    """All faces up to the requested codimension, deterministically ordered."""
    group = weyl_group(rs)
    n = rs.rank
    if max_codim is not None and max_codim < 0:
        raise ConfigError("maximum codimension must be non-negative")
    top = n if max_codim is None else min(max_codim, n)
    out: list[FaceDescriptor] = []
    for size in range(1, top + 1):
        for complement in combinations(range(1, n + 1), size):
            levi = tuple(i for i in range(1, n + 1) if i not in complement)
            p = group.parabolic(levi)
            for t in enumerate_theta(rs, s, p, config, convention):
                out.append(face_from_tuple(rs, s, t))
    out.sort(key=lambda f: f.sort_key())
    if len(set(out)) != len(out):
        raise ConsistencyError("face enumeration produced a duplicate descriptor")
    return out


@dataclass(frozen=True)
class ConeInequality:
    """A facet with its orientation fixed so the cone side is nonnegative."""

    face: FaceDescriptor
    orientation: int

    def row(self, rs: RootSystem) -> Row:
        (k,) = self.face.complement
        base = equation_row(rs, self.face, k)
        if self.orientation == 1:
            return base
        return tuple(-x for x in base)

    def value(self, rs: RootSystem, point: tuple[Weight, ...]) -> Fraction:
        return dot(self.row(rs), flatten_point(point))


def facet_inequalities(
    rs: RootSystem,
    s: int,
    config: RunConfig = DEFAULT_CONFIG,
    convention: str = DEFAULT_CONVENTION,
    sample: list[CertifiedPoint] | None = None,
) -> list[ConeInequality]:
    """Codimension-one faces oriented against a certified point sample.

    A facet functional must be one-signed on the sample with at least one
    strict value; anything else means the machinery and the oracle disagree
    and is raised as an inconsistency.
    """
    faces = enumerate_faces(rs, s, 1, config, convention)
    if sample is None:
        sample = sample_cone(rs, s, config.box_bound, config.saturation_depth, config)
    vectors = [flatten_point(pt.weights) for pt in sample]
    out = []
    for face in faces:
        (k,) = face.complement
        row = equation_row(rs, face, k)
        values = [dot(row, v) for v in vectors]
        has_pos = any(v > 0 for v in values)
        has_neg = any(v < 0 for v in values)
        if has_pos and has_neg:
            raise ConsistencyError(
                f"facet {face.sort_key()} changes sign on certified cone points"
            )
        if not has_pos and not has_neg:
            raise ConsistencyError(
                f"facet {face.sort_key()} vanishes on every certified sample point"
            )
        out.append(ConeInequality(face, 1 if has_pos else -1))
    return out


def dominance_rows(rs: RootSystem, s: int) -> list[Row]:
    """Coordinate-nonnegativity rows for the ambient product of chambers."""
    n = rs.rank
    d = (s + 1) * n
    rows = []
    for idx in range(d):
        rows.append(tuple(Fraction(1 if j == idx else 0) for j in range(d)))
    return rows


def cone_rows(
    rs: RootSystem, s: int, facets: list[ConeInequality]
) -> list[Row]:
    return dominance_rows(rs, s) + [f.row(rs) for f in facets]


_RAY_CACHE: dict[tuple[int, int, str], list[tuple[int, ...]]] = {}


def cone_extreme_rays(
    rs: RootSystem,
    s: int,
    facets: list[ConeInequality],
    convention: str = DEFAULT_CONVENTION,
) -> list[tuple[int, ...]]:
    key = (id(rs), s, convention)
    got = _RAY_CACHE.get(key)
    if got is None:
        got = extreme_rays(cone_rows(rs, s, facets))
        _RAY_CACHE[key] = got
    return got


def face_rayset(
    rs: RootSystem, face: FaceDescriptor, rays: list[tuple[int, ...]]
) -> frozenset[int]:
    """Indices of the extreme rays on which every face equation vanishes."""
    rows = equation_rows(rs, face)
    return frozenset(
        i for i, ray in enumerate(rays) if all(dot(r, ray) == 0 for r in rows)
    )


def face_inclusion(rs: RootSystem, inner: FaceDescriptor, outer: FaceDescriptor) -> bool:
    """Containment test by Levi nesting plus coset projection of the classes."""
    if inner.s != outer.s:
        raise ConfigError("faces live over different factor counts")
    if not set(inner.levi) <= set(outer.levi):
        return False
    group = weyl_group(rs)
    q = group.parabolic(outer.levi)
    return all(
        group.project_to_coset(u, q) == v
        for u, v in zip(inner.reps, outer.reps, strict=True)
    )


def hasse_diagram(
    rs: RootSystem, faces: list[FaceDescriptor]
) -> list[tuple[int, int]]:
    """Cover relations (inner index, outer index) of the face containment order."""
    m = len(faces)
    below = [[False] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            if face_inclusion(rs, faces[a], faces[b]):
                if faces[a].codim <= faces[b].codim:
                    raise ConsistencyError(
                        "containment does not respect codimension grading"
                    )
                below[a][b] = True
    edges = []
    for a in range(m):
        for b in range(m):
            if not below[a][b]:
                continue
            if any(below[a][c] and below[c][b] for c in range(m)):
                continue
            edges.append((a, b))
    return edges


@dataclass(frozen=True)
class MembershipResult:
    """Classification of one rational tuple against the cone."""

    category: str
    facet_values: tuple[Fraction, ...]
    active_facets: tuple[int, ...]
    active_faces: tuple[int, ...]
    active_walls: tuple[tuple[int, int], ...]


def membership(
    rs: RootSystem,
    point: tuple[Weight, ...] | list[Weight],
    facets: list[ConeInequality],
    faces: list[FaceDescriptor] | None = None,
) -> MembershipResult:
    """Classify a tuple as interior, boundary, or outside, with active data.

    The active faces are reported only for points in the cone; walls are the
    vanishing coordinates (factor index, simple index), both one-based.
    """
    point = tuple(point)
    if facets and len(flatten_point(point)) != len(facets[0].row(rs)):
        raise ConfigError("point has the wrong number of factors for these facets")
    vec = flatten_point(point)
    values = tuple(dot(f.row(rs), vec) for f in facets)
    dominant = all(is_dominant(w) for w in point)
    if not dominant or any(v < 0 for v in values):
        return MembershipResult("outside", values, (), (), ())
    walls = tuple(
        (i + 1, j + 1)
        for i, w in enumerate(point)
        for j, c in enumerate(w.coords)
        if c == 0
    )
    active_facets = tuple(i for i, v in enumerate(values) if v == 0)
    active_faces: tuple[int, ...] = ()
    if faces is not None:
        active_faces = tuple(
            i
            for i, face in enumerate(faces)
            if all(dot(r, vec) == 0 for r in equation_rows(rs, face))
        )
    category = "boundary" if walls or active_facets else "interior"
    return MembershipResult(category, values, active_facets, active_faces, walls)

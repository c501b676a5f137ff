"""Face descriptors, facets, membership, and the containment order."""

from fractions import Fraction

import pytest

from tensorcone.errors import ConfigError
from tensorcone.facecone import (
    cone_extreme_rays,
    dot,
    enumerate_faces,
    equation_rows,
    face_inclusion,
    face_rayset,
    facet_inequalities,
    flatten_point,
    hasse_diagram,
    membership,
)
from tensorcone.rootsys import Weight, build_root_system


def triangle_facets():
    rs = build_root_system("A1")
    return rs, facet_inequalities(rs, 2)


def test_rank_one_facet_rows_are_triangle():
    rs, ineqs = triangle_facets()
    assert len(ineqs) == 3
    normalized = sorted(tuple(2 * x for x in f.row(rs)) for f in ineqs)
    assert normalized == [(-1, 1, 1), (1, -1, 1), (1, 1, -1)]
    assert all(f.orientation == 1 for f in ineqs)


def test_rank_one_membership_categories():
    rs, ineqs = triangle_facets()
    faces = enumerate_faces(rs, 2)

    def classify(a, b, c):
        return membership(rs, (Weight([a]), Weight([b]), Weight([c])), ineqs, faces)

    assert classify(1, 1, 1).category == "interior"
    r = classify(1, 1, 2)
    assert r.category == "boundary"
    assert len(r.active_facets) == 1 and r.active_walls == ()
    assert classify(3, 1, 1).category == "outside"
    wall = classify(0, 1, 1)
    assert wall.category == "boundary" and wall.active_walls == ((1, 1),)


def test_face_count_and_codims_a2():
    rs = build_root_system("A2")
    faces = enumerate_faces(rs, 2)
    assert len(faces) == 27
    assert sorted(set(f.codim for f in faces)) == [1, 2]
    assert sum(1 for f in faces if f.codim == 1) == 12
    assert all(f.codim == len(f.complement) for f in faces)


def test_max_codim_zero_is_empty():
    rs = build_root_system("A2")
    assert enumerate_faces(rs, 2, 0) == []
    with pytest.raises(ConfigError):
        enumerate_faces(rs, 2, -1)


def test_inclusion_projects_classes():
    rs = build_root_system("A2")
    faces = enumerate_faces(rs, 2)
    deep = [f for f in faces if f.codim == 2]
    shallow = [f for f in faces if f.codim == 1]
    for d in deep:
        parents = [s for s in shallow if face_inclusion(rs, d, s)]
        assert parents, d.sort_key()
    for s in shallow:
        assert not any(face_inclusion(rs, s, d) for d in deep)
    for f in faces:
        assert face_inclusion(rs, f, f)


def test_hasse_edges_connect_adjacent_codims():
    rs = build_root_system("A2")
    faces = enumerate_faces(rs, 2)
    edges = hasse_diagram(rs, faces)
    assert edges
    for a, b in edges:
        assert faces[a].codim == 2 and faces[b].codim == 1
        assert face_inclusion(rs, faces[a], faces[b])


def test_rayset_matches_equation_kernel_on_triangle():
    rs, ineqs = triangle_facets()
    rays = cone_extreme_rays(rs, 2, ineqs)
    assert rays == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    faces = enumerate_faces(rs, 2)
    for face in faces:
        sig = face_rayset(rs, face, rays)
        assert len(sig) == 2
        rows = equation_rows(rs, face)
        for i in sig:
            assert all(dot(r, rays[i]) == 0 for r in rows)


def test_facet_values_scale_linearly():
    rs, ineqs = triangle_facets()
    point = (Weight([2]), Weight([1]), Weight([1]))
    doubled = tuple(w.scale(2) for w in point)
    for f in ineqs:
        assert f.value(rs, doubled) == 2 * f.value(rs, point)


def test_flatten_point_concatenates():
    assert flatten_point((Weight([1, 2]), Weight([3, 4]))) == (
        Fraction(1),
        Fraction(2),
        Fraction(3),
        Fraction(4),
    )

"""Acceptance gate: nine end-to-end checks of the face machinery.

Each test prints a single verdict line and enforces the runtime budget
where one applies.  The checks pit independent routes against each other:
facet enumeration against the brute-force invariant oracle, the degenerate
product against plain cup tables, combinatorial face containment against
exact ray geometry, and divided-difference products against the divisor
multiplication rule.
"""

import math
import random
import time
from dataclasses import replace
from fractions import Fraction
from itertools import combinations, product as iter_product

import pytest

from tensorcone import (
    DEFAULT_CONFIG,
    Weight,
    bk_point_coefficient,
    build_root_system,
    cone_extreme_rays,
    enumerate_faces,
    enumerate_point_tuples,
    face_inclusion,
    face_rayset,
    facet_inequalities,
    freudenthal,
    schubert_ring,
    tensor_decompose,
    verify_cone,
    weyl_dim,
    weyl_group,
)
from tensorcone.rays import matrix_rank


@pytest.fixture(scope="module")
def a1():
    return build_root_system("A1")


@pytest.fixture(scope="module")
def a2():
    return build_root_system("A2")


@pytest.fixture(scope="module")
def b2():
    return build_root_system("B2")


@pytest.fixture(scope="module")
def a3():
    return build_root_system("A3")


def _geometry(rs):
    faces = enumerate_faces(rs, 2, max_codim=rs.rank)
    facets = facet_inequalities(rs, 2)
    rays = cone_extreme_rays(rs, 2, facets)
    raysets = [face_rayset(rs, f, rays) for f in faces]
    return faces, rays, raysets


@pytest.fixture(scope="module")
def a2_geometry(a2):
    return _geometry(a2)


@pytest.fixture(scope="module")
def b2_geometry(b2):
    return _geometry(b2)


def _primitive(row):
    scale = math.lcm(*(x.denominator for x in row))
    ints = [int(x * scale) for x in row]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def _proper_levis(rank):
    out = []
    for r in range(rank):
        out.extend(combinations(range(1, rank + 1), r))
    return out


def _verdict(name, start):
    print(f"[acceptance] {name}: PASS ({time.monotonic() - start:.2f}s)")


def test_rank_one_triangle_facets(a1):
    start = time.monotonic()
    facets = facet_inequalities(a1, 2)
    rows = {_primitive(f.row(a1)) for f in facets}
    assert rows == {(-1, 1, 1), (1, -1, 1), (1, 1, -1)}
    assert len(facets) == 3
    report = verify_cone(a1, 2, box=6, depth=2)
    assert report.ok, report.lines()
    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"rank-one check took {elapsed:.2f}s"
    _verdict("triangle inequalities in rank one", start)


def test_rank_two_box_equality(a2):
    start = time.monotonic()
    report = verify_cone(a2, 2, box=5, depth=3)
    assert report.validity_failures == []
    assert report.tightness_failures == []
    assert report.completeness_failures == []
    assert report.ok, report.lines()
    elapsed = time.monotonic() - start
    assert elapsed < 120.0, f"box equality took {elapsed:.2f}s"
    _verdict("exact box agreement with the oracle", start)


def test_degenerate_product_dichotomy(a2, b2, a3):
    start = time.monotonic()
    checked = 0
    for rs in (a2, b2, a3):
        group = weyl_group(rs)
        ring = schubert_ring(rs)
        for levi in _proper_levis(rs.rank):
            p = group.parabolic(levi)
            for s in (1, 2, 3):
                listed = enumerate_point_tuples(rs, s, p)
                for t in listed:
                    assert t.cup_coeff > 0
                    assert t.bk_coeff in (0, t.cup_coeff)
                    checked += 1
                if rs.rank > 2:
                    continue
                # Independent brute pass over every degree-valid tuple.
                reps = group.min_coset_reps(p)
                dim = ring.dim_quotient(p)
                brute = {}
                for combo in iter_product(reps, repeat=s + 1):
                    if sum(w.length for w in combo) != dim:
                        continue
                    cup = ring.multi_point_coefficient(p, list(combo))
                    bk = bk_point_coefficient(rs, p, combo)
                    assert bk in (0, cup)
                    if cup:
                        brute[tuple(w.word for w in combo)] = (cup, bk)
                assert brute == {
                    tuple(w.word for w in t.reps): (t.cup_coeff, t.bk_coeff)
                    for t in listed
                }
    assert checked > 3000
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, f"dichotomy sweep took {elapsed:.2f}s"
    _verdict("degenerate coefficients are cup or zero", start)


def test_grassmannian_tables_match(a2, a3):
    start = time.monotonic()
    for rs in (a2, a3):
        group = weyl_group(rs)
        for cut in range(1, rs.rank + 1):
            levi = tuple(i for i in range(1, rs.rank + 1) if i != cut)
            p = group.parabolic(levi)
            for s in (1, 2, 3):
                for t in enumerate_point_tuples(rs, s, p):
                    assert t.movable
                    assert t.bk_coeff == t.cup_coeff
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"table comparison took {elapsed:.2f}s"
    _verdict("one-node quotients keep the full cup table", start)


def test_face_codimension_counts_cut_nodes(a2, b2, a2_geometry, b2_geometry):
    start = time.monotonic()
    for rs, (faces, rays, raysets) in ((a2, a2_geometry), (b2, b2_geometry)):
        d = 3 * rs.rank
        for face, rayset in zip(faces, raysets):
            span = [list(rays[i]) for i in sorted(rayset)]
            assert face.codim == len(face.complement)
            assert d - matrix_rank(span) == len(face.complement)
    _verdict("face codimension equals the number of cut nodes", start)


def test_inclusion_routes_agree(a2, a2_geometry):
    start = time.monotonic()
    faces, _, raysets = a2_geometry
    for i, inner in enumerate(faces):
        for j, outer in enumerate(faces):
            combinatorial = face_inclusion(a2, inner, outer)
            geometric = raysets[i] <= raysets[j]
            assert combinatorial == geometric, (i, j)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"inclusion comparison took {elapsed:.2f}s"
    _verdict("combinatorial and geometric containment agree", start)


def test_distinct_labels_give_distinct_faces(a2, b2, a2_geometry, b2_geometry):
    start = time.monotonic()
    for faces, _, raysets in (a2_geometry, b2_geometry):
        assert len(set(raysets)) == len(faces)
    _verdict("distinct labels give distinct faces", start)


def test_divisor_products_and_duality(a2, b2, a3):
    start = time.monotonic()
    for rs in (a2, b2, a3):
        group = weyl_group(rs)
        ring = schubert_ring(rs)
        borel = group.parabolic(())
        for i in range(1, rs.rank + 1):
            si = group.simple(i)
            for w in group.elements:
                assert ring.chevalley_multiply(i, w) == ring.cup_expand(borel, si, w)
        for r in range(rs.rank + 1):
            for levi in combinations(range(1, rs.rank + 1), r):
                p = group.parabolic(levi)
                matrix = ring.duality_matrix(p)
                for row in matrix:
                    assert sum(row) == 1 and all(x in (0, 1) for x in row)
                for col in zip(*matrix):
                    assert sum(col) == 1
                reps = group.min_coset_reps(p)
                for u in reps:
                    for v in reps:
                        for c in ring.cup_expand(p, u, v).values():
                            assert isinstance(c, int) and c >= 0
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"kernel cross-check took {elapsed:.2f}s"
    _verdict("divisor products, duality, and positivity", start)


def test_oracle_bookkeeping(a1, a2, b2):
    start = time.monotonic()
    rng = random.Random(90321)
    config = replace(DEFAULT_CONFIG, dim_cap=10**4)
    systems = [(a1, 12), (a2, 5), (b2, 4)]
    for _ in range(200):
        rs, top = rng.choice(systems)
        while True:
            lam = Weight([Fraction(rng.randint(0, top)) for _ in range(rs.rank)])
            mu = Weight([Fraction(rng.randint(0, top)) for _ in range(rs.rank)])
            if weyl_dim(rs, lam) * weyl_dim(rs, mu) <= 10**4:
                break
        table = tensor_decompose(rs, lam, mu, config)
        total = sum(c * weyl_dim(rs, nu) for nu, c in table.items())
        assert total == weyl_dim(rs, lam) * weyl_dim(rs, mu)
    for _ in range(50):
        rs, _ = rng.choice(systems)
        lam = Weight([Fraction(rng.randint(0, 3)) for _ in range(rs.rank)])
        diagram = freudenthal(rs, lam)
        assert sum(diagram.values()) == weyl_dim(rs, lam)
    _verdict("oracle dimension bookkeeping", start)

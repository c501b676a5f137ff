"""Degenerate product: retention rule, anchors, and coherence."""

from itertools import combinations, permutations

import pytest

from tensorcone.bkprod import (
    bk_expand,
    bk_point_coefficient,
    enumerate_point_tuples,
    enumerate_theta,
    levi_movable,
    resolve_convention,
)
from tensorcone.config import RunConfig
from tensorcone.errors import BudgetError, ConfigError
from tensorcone.rootsys import build_root_system
from tensorcone.schubert import schubert_ring
from tensorcone.weylgrp import weyl_group


def proper_parabolics(g):
    n = g.rs.rank
    out = []
    for size in range(n):
        for levi in combinations(range(1, n + 1), size):
            out.append(g.parabolic(levi))
    return out


def test_rank_one_triples():
    rs = build_root_system("A1")
    g = weyl_group(rs)
    p = g.parabolic(())
    theta = enumerate_theta(rs, 2, p)
    got = {tuple(w.word for w in t.reps) for t in theta}
    assert got == {((1,), (), ()), ((), (1,), ()), ((), (), (1,))}


def test_a2_full_flag_triples_frozen_list():
    rs = build_root_system("A2")
    g = weyl_group(rs)
    p = g.parabolic(())
    theta = enumerate_theta(rs, 2, p)
    got = {tuple(w.word for w in t.reps) for t in theta}
    want = set()
    for shape in [((1, 2, 1), (), ()), ((1, 2), (1,), ()), ((2, 1), (2,), ())]:
        want.update(permutations(shape))
    assert got == want
    assert len(theta) == 15


def test_pair_labels_are_dual_pairs():
    for cartan in ["A2", "B2"]:
        rs = build_root_system(cartan)
        g = weyl_group(rs)
        ring = schubert_ring(rs)
        for p in proper_parabolics(g):
            got = {t.reps for t in enumerate_theta(rs, 1, p)}
            want = {(u, ring.dual(p, u)) for u in g.min_coset_reps(p)}
            assert got == want


def test_convention_arbitration_is_decisive():
    assert resolve_convention() == ["inverse"]


def test_plain_convention_fails_pair_duality():
    rs = build_root_system("A2")
    g = weyl_group(rs)
    ring = schubert_ring(rs)
    p = g.parabolic(())
    got = {t.reps for t in enumerate_theta(rs, 1, p, convention="plain")}
    want = {(u, ring.dual(p, u)) for u in g.min_coset_reps(p)}
    assert got != want


def test_spin_quotient_drops_exactly_one_triple():
    rs = build_root_system("B2")
    g = weyl_group(rs)
    p = g.parabolic((1,))
    dropped = [
        tuple(w.word for w in t.reps)
        for t in enumerate_point_tuples(rs, 2, p)
        if t.cup_coeff > 0 and not t.movable
    ]
    assert dropped == [((2,), (2,), (2,))]


def test_minuscule_binary_tables_keep_everything():
    for cartan, levi in [("B2", (1,)), ("A3", (1, 2)), ("A3", (2, 3))]:
        rs = build_root_system(cartan)
        g = weyl_group(rs)
        p = g.parabolic(levi)
        for t in enumerate_point_tuples(rs, 1, p):
            assert t.movable or t.cup_coeff == 0


def test_degenerate_product_is_associative():
    for cartan, levi in [("A2", ()), ("B2", ()), ("B2", (1,))]:
        rs = build_root_system(cartan)
        g = weyl_group(rs)
        p = g.parabolic(levi)
        reps = g.min_coset_reps(p)
        dim = schubert_ring(rs).dim_quotient(p)
        for u in reps:
            for v in reps:
                for x in reps:
                    if u.length + v.length + x.length > dim:
                        continue
                    left: dict = {}
                    for w, c in bk_expand(rs, p, u, v).items():
                        for y, d in bk_expand(rs, p, w, x).items():
                            left[y] = left.get(y, 0) + c * d
                    right: dict = {}
                    for w, c in bk_expand(rs, p, v, x).items():
                        for y, d in bk_expand(rs, p, u, w).items():
                            right[y] = right.get(y, 0) + c * d
                    assert {k: v2 for k, v2 in left.items() if v2} == {
                        k: v2 for k, v2 in right.items() if v2
                    }


def test_identity_class_is_neutral():
    rs = build_root_system("B2")
    g = weyl_group(rs)
    p = g.parabolic((2,))
    for u in g.min_coset_reps(p):
        assert bk_expand(rs, p, g.identity, u) == {u: 1}


def test_point_coefficient_zero_off_degree():
    rs = build_root_system("A2")
    g = weyl_group(rs)
    p = g.parabolic(())
    e = g.identity
    assert bk_point_coefficient(rs, p, (e, e, e)) == 0


def test_movability_rejects_non_minimal_inputs():
    rs = build_root_system("A2")
    g = weyl_group(rs)
    p = g.parabolic((1,))
    w = g.simple(1)
    from tensorcone.errors import ConsistencyError

    with pytest.raises(ConsistencyError):
        levi_movable(rs, p, (w, w, w))


def test_budget_and_scope_errors():
    rs = build_root_system("A2")
    g = weyl_group(rs)
    with pytest.raises(ConfigError):
        enumerate_point_tuples(rs, 2, g.parabolic((1, 2)))
    with pytest.raises(ConfigError):
        enumerate_point_tuples(rs, 0, g.parabolic(()))
    tight = RunConfig(tuple_budget=5)
    with pytest.raises(BudgetError):
        enumerate_point_tuples(rs, 2, g.parabolic(()), tight)

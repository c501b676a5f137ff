"""Character-theoretic oracle: frozen small cases and internal cross-routes."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensorcone.config import RunConfig
from tensorcone.errors import BudgetError, ConfigError
from tensorcone.oracle import (
    freudenthal,
    invariant_dim,
    sample_cone,
    tensor_decompose,
    weight_multiplicity,
    weyl_dim,
)
from tensorcone.rootsys import Weight, build_root_system, dual_weight


def W(*coords):
    return Weight(coords)


def as_table(decomp):
    return sorted(
        (tuple(int(c) for c in k.coords), v) for k, v in decomp.items()
    )


def test_weyl_dim_frozen_values():
    a1 = build_root_system("A1")
    a2 = build_root_system("A2")
    b2 = build_root_system("B2")
    g2 = build_root_system("G2")
    assert weyl_dim(a1, W(2)) == 3
    assert weyl_dim(a2, W(1, 0)) == 3
    assert weyl_dim(a2, W(1, 1)) == 8
    assert weyl_dim(a2, W(3, 0)) == 10
    assert weyl_dim(b2, W(1, 0)) == 5
    assert weyl_dim(b2, W(0, 1)) == 4
    assert weyl_dim(b2, W(0, 2)) == 10
    assert weyl_dim(g2, W(1, 0)) == 7 or weyl_dim(g2, W(0, 1)) == 7


def test_weyl_dim_rejects_bad_weights():
    a2 = build_root_system("A2")
    with pytest.raises(ConfigError):
        weyl_dim(a2, W(-1, 0))
    with pytest.raises(ConfigError):
        weyl_dim(a2, Weight(["1/2", 0]))


def test_freudenthal_adjoint_zero_weight():
    a2 = build_root_system("A2")
    table = freudenthal(a2, W(1, 1))
    assert table[W(0, 0)] == 2
    assert sum(table.values()) == 8


@pytest.mark.parametrize(
    "cartan,coords",
    [("A2", (2, 1)), ("B2", (1, 1)), ("A3", (1, 0, 1)), ("G2", (0, 1))],
)
def test_freudenthal_total_matches_dimension(cartan, coords):
    rs = build_root_system(cartan)
    table = freudenthal(rs, Weight(coords))
    assert sum(table.values()) == weyl_dim(rs, Weight(coords))


def test_weight_multiplicity_is_orbit_invariant():
    from tensorcone.rootsys import reflect

    b2 = build_root_system("B2")
    lam = W(1, 1)
    assert weight_multiplicity(b2, lam, lam) == 1
    lowest = Weight([-1, -1])
    assert weight_multiplicity(b2, lam, lowest) == 1
    mu = W(1, -1)
    for i in (1, 2):
        assert weight_multiplicity(b2, lam, reflect(b2, i, mu)) == weight_multiplicity(
            b2, lam, mu
        )
    assert weight_multiplicity(b2, lam, W(5, 5)) == 0


def test_tensor_rank_one_string():
    a1 = build_root_system("A1")
    assert as_table(tensor_decompose(a1, W(2), W(2))) == [((0,), 1), ((2,), 1), ((4,), 1)]
    assert as_table(tensor_decompose(a1, W(3), W(1))) == [((2,), 1), ((4,), 1)]


def test_tensor_a2_frozen_tables():
    a2 = build_root_system("A2")
    assert as_table(tensor_decompose(a2, W(1, 0), W(0, 1))) == [
        ((0, 0), 1),
        ((1, 1), 1),
    ]
    adj = tensor_decompose(a2, W(1, 1), W(1, 1))
    assert as_table(adj) == [
        ((0, 0), 1),
        ((0, 3), 1),
        ((1, 1), 2),
        ((2, 2), 1),
        ((3, 0), 1),
    ]
    total = sum(c * weyl_dim(a2, nu) for nu, c in adj.items())
    assert total == 64


def test_tensor_bookkeeping_b2():
    b2 = build_root_system("B2")
    dec = tensor_decompose(b2, W(0, 1), W(0, 1))
    total = sum(c * weyl_dim(b2, nu) for nu, c in dec.items())
    assert total == 16


def test_invariant_dim_frozen_values():
    a2 = build_root_system("A2")
    assert invariant_dim(a2, [W(1, 0), W(1, 0), W(1, 0)]) == 1
    assert invariant_dim(a2, [W(1, 1), W(1, 1), W(1, 1)]) == 2
    assert invariant_dim(a2, [W(1, 0), W(0, 1)]) == 1
    assert invariant_dim(a2, [W(1, 0), W(1, 0)]) == 0
    a1 = build_root_system("A1")
    assert invariant_dim(a1, [W(1), W(1), W(2)]) == 1
    assert invariant_dim(a1, [W(1)] * 4 ) == 2


def test_invariant_dim_routes_agree():
    # alternating-sum shortcut vs full decomposition plus dual pairing
    a2 = build_root_system("A2")
    triples = [
        (W(1, 0), W(1, 0), W(1, 0)),
        (W(2, 0), W(0, 2), W(1, 1)),
        (W(1, 1), W(2, 1), W(1, 2)),
        (W(3, 1), W(1, 2), W(2, 2)),
    ]
    for triple in triples:
        fast = invariant_dim(a2, list(triple))
        dec = tensor_decompose(a2, triple[0], triple[1])
        slow = dec.get(dual_weight(a2, triple[2]), 0)
        assert fast == slow


def test_dimension_cap_budget():
    a2 = build_root_system("A2")
    with pytest.raises(BudgetError):
        freudenthal(a2, W(2, 2), RunConfig(dim_cap=10))


def test_sample_rank_one_frozen():
    a1 = build_root_system("A1")
    pts = sample_cone(a1, 2, 2, 2)
    got = {
        tuple(int(c) for w in p.weights for c in w.coords): p.witness for p in pts
    }
    assert got[(1, 1, 2)] == 1
    assert got[(1, 1, 1)] == 2
    assert (3, 1, 1) not in got and (1, 0, 2) not in got
    shallow = sample_cone(a1, 2, 2, 1)
    assert all(p.witness == 1 for p in shallow)
    assert len(shallow) < len(pts)


def test_sample_parallel_matches_serial():
    a1 = build_root_system("A1")
    serial = sample_cone(a1, 2, 2, 2, jobs=1)
    parallel = sample_cone(a1, 2, 2, 2, jobs=2)
    assert serial == parallel


small_weight = st.tuples(
    st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2)
)


@settings(max_examples=20, deadline=None)
@given(small_weight, small_weight)
def test_tensor_product_is_commutative(a, b):
    a2 = build_root_system("A2")
    assert as_table(tensor_decompose(a2, Weight(a), Weight(b))) == as_table(
        tensor_decompose(a2, Weight(b), Weight(a))
    )

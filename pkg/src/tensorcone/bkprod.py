"""Degenerate cup product on G/P cohomology and its point-class tuples.

The product keeps a cup structure constant only when the factor classes
satisfy a balance condition against the radical character of the parabolic;
everything here is exact integer and rational arithmetic.  The enumeration
entry point lists every tuple of minimal representatives whose degenerate
product is the point class with coefficient one, which is the combinatorial
data that parametrizes faces of the tensor cone downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .config import DEFAULT_CONFIG, RunConfig
from .errors import BudgetError, ConfigError, ConsistencyError
from .rootsys import RootSystem, build_root_system, pair_coweight
from .schubert import schubert_ring
from .weylgrp import ParabolicSubset, WeylElement, weyl_group

CONVENTIONS = ("inverse", "plain")
DEFAULT_CONVENTION = "inverse"


def radical_character(rs: RootSystem, p: ParabolicSubset):
    """Sum of the roots of the unipotent radical of P."""
    return weyl_group(rs).theta(p, weyl_group(rs).identity)


def levi_movable(
    rs: RootSystem,
    p: ParabolicSubset,
    reps: tuple[WeylElement, ...] | list[WeylElement],
    convention: str = DEFAULT_CONVENTION,
) -> bool:
    """Whether a tuple of classes survives the degeneration of the cup product.

    The test is a balance of twisted radical characters: for every simple
    index k outside the Levi, the sum over factors of the k-th coweight
    pairing of the character twisted by each class must equal (number of
    factors - 1) times the pairing of the untwisted character.
    """
    if convention not in CONVENTIONS:
        raise ConfigError(f"unknown product convention {convention!r}")
    group = weyl_group(rs)
    allowed = set(group.min_coset_reps(p))
    for w in reps:
        if w not in allowed:
            raise ConsistencyError(
                "movability test requires minimal coset representatives"
            )
    s_count = len(reps) - 1
    if s_count < 1:
        raise ConfigError("movability needs at least two factors")
    base = group.theta(p, group.identity)
    for k in p.complement:
        rhs = s_count * pair_coweight(rs, base, k)
        lhs = sum(
            pair_coweight(
                rs,
                group.theta(p, group.invert(w) if convention == "inverse" else w),
                k,
            )
            for w in reps
        )
        if lhs != rhs:
            return False
    return True


def bk_point_coefficient(
    rs: RootSystem,
    p: ParabolicSubset,
    reps: tuple[WeylElement, ...] | list[WeylElement],
    convention: str = DEFAULT_CONVENTION,
) -> int:
    """Point-class coefficient of the degenerate product (0 if not movable)."""
    ring = schubert_ring(rs)
    cup = ring.multi_point_coefficient(p, list(reps))
    if cup == 0:
        return 0
    return cup if levi_movable(rs, p, reps, convention) else 0


def bk_expand(
    rs: RootSystem,
    p: ParabolicSubset,
    u: WeylElement,
    v: WeylElement,
    convention: str = DEFAULT_CONVENTION,
) -> dict[WeylElement, int]:
    """The degenerate product of two classes in the class basis.

    A cup term survives exactly when the triple (u, v, dual of the target)
    passes the movability balance.
    """
    ring = schubert_ring(rs)
    out: dict[WeylElement, int] = {}
    for w, c in ring.cup_expand(p, u, v).items():
        if c == 0:
            continue
        partner = ring.dual(p, w)
        if levi_movable(rs, p, (u, v, partner), convention):
            out[w] = c
    return out


@dataclass(frozen=True)
class PointTuple:
    """A degree-complementary tuple of classes with both product coefficients."""

    levi: tuple[int, ...]
    reps: tuple[WeylElement, ...]
    cup_coeff: int
    movable: bool

    @property
    def bk_coeff(self) -> int:
        return self.cup_coeff if self.movable else 0


def _tuple_sort_key(reps: tuple[WeylElement, ...]):
    return tuple(w.word for w in reps)


def enumerate_point_tuples(
    rs: RootSystem,
    s: int,
    p: ParabolicSubset,
    config: RunConfig = DEFAULT_CONFIG,
    convention: str = DEFAULT_CONVENTION,
) -> list[PointTuple]:
    """All (s+1)-tuples of minimal representatives with top total degree.

    Each comes with its cup point coefficient and the movability verdict, in
    deterministic order.  Raises BudgetError before starting if the raw
    search space exceeds the configured tuple budget.
    """
    if s < 1:
        raise ConfigError(f"number of factors must be at least 2, got s={s}")
    if p.is_full:
        raise ConfigError(
            "the full Levi set gives the whole group; no proper face there"
        )
    group = weyl_group(rs)
    reps = group.min_coset_reps(p)
    total = len(reps) ** (s + 1)
    if total > config.tuple_budget:
        raise BudgetError(
            f"|W^P|^(s+1) = {total} exceeds tuple budget {config.tuple_budget}"
        )
    ring = schubert_ring(rs)
    dim = ring.dim_quotient(p)
    by_len = sorted(reps, key=lambda w: (w.length, w.word))
    suffix_max = [w.length for w in by_len]
    max_len = max(suffix_max)
    out: list[PointTuple] = []

    def descend(prefix: list[WeylElement], degree: int) -> None:
        slots_left = s + 1 - len(prefix)
        if slots_left == 0:
            if degree != dim:
                return
            cup = ring.multi_point_coefficient(p, prefix)
            if cup == 0:
                return
            movable = levi_movable(rs, p, prefix, convention)
            out.append(PointTuple(p.levi, tuple(prefix), cup, movable))
            return
        for w in by_len:
            d = degree + w.length
            if d > dim:
                break
            if d + (slots_left - 1) * max_len < dim:
                continue
            prefix.append(w)
            descend(prefix, d)
            prefix.pop()

    descend([], 0)
    out.sort(key=lambda t: _tuple_sort_key(t.reps))
    return out


def enumerate_theta(
    rs: RootSystem,
    s: int,
    p: ParabolicSubset,
    config: RunConfig = DEFAULT_CONFIG,
    convention: str = DEFAULT_CONVENTION,
) -> list[PointTuple]:
    """Tuples whose degenerate product is exactly the point class.

    These are the tuples with cup coefficient 1 that pass the movability
    balance; they are the face labels for the parabolic P.
    """
    return [
        t
        for t in enumerate_point_tuples(rs, s, p, config, convention)
        if t.cup_coeff == 1 and t.movable
    ]


def _a1_triple_anchor(convention: str) -> bool:
    """Rank one, three factors: the labels must be the permutations of (s1, e, e)."""
    rs = build_root_system("A1")
    group = weyl_group(rs)
    p = group.parabolic(())
    got = {t.reps for t in enumerate_theta(rs, 2, p, convention=convention)}
    e = group.identity
    s1 = group.simple(1)
    want = set(permutations((s1, e, e)))
    return got == want


def _pair_duality_anchor(cartan: str, convention: str) -> bool:
    """Two factors on G/B: the labels must be exactly the dual pairs."""
    rs = build_root_system(cartan)
    group = weyl_group(rs)
    ring = schubert_ring(rs)
    p = group.parabolic(())
    got = {t.reps for t in enumerate_theta(rs, 1, p, convention=convention)}
    want = {(u, ring.dual(p, u)) for u in group.min_coset_reps(p)}
    return got == want


def _cominuscule_anchor(cartan: str, levi: tuple[int, ...], convention: str) -> bool:
    """On a minuscule quotient the degenerate product keeps every cup term."""
    rs = build_root_system(cartan)
    group = weyl_group(rs)
    p = group.parabolic(levi)
    for t in enumerate_point_tuples(rs, 2, p, convention=convention):
        if t.cup_coeff > 0 and not t.movable:
            return False
    return True


def resolve_convention() -> list[str]:
    """Run the anchor computations and list the conventions passing all of them."""
    survivors = []
    for convention in CONVENTIONS:
        ok = (
            _a1_triple_anchor(convention)
            and _pair_duality_anchor("A2", convention)
            and _cominuscule_anchor("A2", (2,), convention)
            and _cominuscule_anchor("A2", (1,), convention)
        )
        if ok:
            survivors.append(convention)
    return survivors

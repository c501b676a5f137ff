"""Brute-force representation theory used to audit the cone machinery.

Everything here goes through classical character-theoretic algorithms:
the product formula for module dimensions, the recursive weight
multiplicity formula, tensor decomposition by folding one factor's weight
diagram, and an alternating-sum shortcut for a single multiplicity.
Nothing in this module touches Schubert calculus or the degenerate cup
product, so agreement between the two sides is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from multiprocessing import get_context

from .config import DEFAULT_CONFIG, RunConfig
from .errors import BudgetError, ConfigError, ConsistencyError
from .rootsys import (
    RootSystem,
    Weight,
    build_root_system,
    coroot_pairing,
    dominant_fold,
    dual_weight,
    is_dominant,
    reflect,
)
from .weylgrp import weyl_group


def _require_dominant_integral(rs: RootSystem, lam: Weight) -> None:
    if len(lam.coords) != rs.rank:
        raise ConfigError(f"weight has {len(lam.coords)} coordinates, rank is {rs.rank}")
    if not lam.is_integral():
        raise ConfigError(f"highest weight must be integral, got {lam!r}")
    if not is_dominant(lam):
        raise ConfigError(f"highest weight must be dominant, got {lam!r}")


_WEYL_DIM_CACHE: dict[tuple[str, tuple[Fraction, ...]], int] = {}


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module, by the product formula."""
    _require_dominant_integral(rs, lam)
    key = (str(rs.cartan_type), lam.coords)
    got = _WEYL_DIM_CACHE.get(key)
    if got is not None:
        return got
    shifted = lam + rs.rho
    num = Fraction(1)
    for root in rs.positive_roots:
        num *= coroot_pairing(rs, shifted, root) / coroot_pairing(rs, rs.rho, root)
    if num.denominator != 1 or num <= 0:
        raise ConsistencyError(f"dimension formula returned {num} for {lam!r}")
    _WEYL_DIM_CACHE[key] = int(num)
    return int(num)


def _check_dim_cap(rs: RootSystem, lam: Weight, config: RunConfig) -> int:
    dim = weyl_dim(rs, lam)
    if dim > config.dim_cap:
        raise BudgetError(
            f"module dimension {dim} exceeds dimension cap {config.dim_cap}"
        )
    return dim


_DOMINANT_MULT_CACHE: dict[tuple[str, tuple[Fraction, ...]], dict[Weight, int]] = {}


def _dominant_multiplicities(
    rs: RootSystem, lam: Weight, config: RunConfig
) -> dict[Weight, int]:
    """Multiplicity of every dominant weight of the module, by recursion.

    The recursion solves for each multiplicity from the ones at strictly
    higher weights, in increasing distance from the top.  All sums run over
    root strings, which are unbroken, so the first missing weight ends each
    inner loop.
    """
    _check_dim_cap(rs, lam, config)
    key = (str(rs.cartan_type), lam.coords)
    got = _DOMINANT_MULT_CACHE.get(key)
    if got is not None:
        return got
    n = rs.rank
    alphas = [rs.simple_root(i) for i in range(1, n + 1)]
    # Box bound: the drop from the top to any weight, written in simple
    # roots, is coordinatewise at most the drop to the lowest weight.
    drop = rs.root_coords(lam + dual_weight(rs, lam))
    limits = []
    for c in drop:
        if c.denominator != 1 or c < 0:
            raise ConsistencyError("weight diagram box bound is not a natural number")
        limits.append(int(c))
    dominants: list[tuple[int, Weight]] = []
    for counts in iter_product(*(range(m + 1) for m in limits)):
        mu = lam
        for j, a in enumerate(counts):
            if a:
                mu = mu - alphas[j].scale(a)
        if is_dominant(mu):
            dominants.append((sum(counts), mu))
    dominants.sort(key=lambda pair: (pair[0], pair[1].coords))
    table: dict[Weight, int] = {}
    shifted_top = lam + rs.rho
    top_norm = rs.inner(shifted_top, shifted_top)
    roots = [rs.root_weight(r) for r in rs.positive_roots]
    for height, mu in dominants:
        if height == 0:
            table[mu] = 1
            continue
        total = Fraction(0)
        for alpha in roots:
            xi = mu + alpha
            while True:
                folded, _ = dominant_fold(rs, xi)
                m = table.get(folded)
                if m is None:
                    break
                total += m * rs.inner(xi, alpha)
                xi = xi + alpha
        shifted = mu + rs.rho
        denom = top_norm - rs.inner(shifted, shifted)
        if denom <= 0:
            raise ConsistencyError("multiplicity recursion hit a bad denominator")
        value = 2 * total / denom
        if value.denominator != 1 or value < 1:
            raise ConsistencyError(f"non-natural multiplicity {value} at {mu!r}")
        table[mu] = int(value)
    _DOMINANT_MULT_CACHE[key] = table
    return table


def _orbit(rs: RootSystem, mu: Weight) -> list[Weight]:
    seen = {mu}
    frontier = [mu]
    while frontier:
        new = []
        for w in frontier:
            for i in range(1, rs.rank + 1):
                img = reflect(rs, i, w)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    return list(seen)


def freudenthal(
    rs: RootSystem, lam: Weight, config: RunConfig = DEFAULT_CONFIG
) -> dict[Weight, int]:
    """Full weight diagram of the irreducible module with multiplicities."""
    table = _dominant_multiplicities(rs, lam, config)
    out: dict[Weight, int] = {}
    for mu, m in table.items():
        for w in _orbit(rs, mu):
            out[w] = m
    return out


def weight_multiplicity(
    rs: RootSystem, lam: Weight, mu: Weight, config: RunConfig = DEFAULT_CONFIG
) -> int:
    """Multiplicity of one weight in the module with the given highest weight."""
    folded, _ = dominant_fold(rs, mu)
    return _dominant_multiplicities(rs, lam, config).get(folded, 0)


def tensor_decompose(
    rs: RootSystem, lam: Weight, mu: Weight, config: RunConfig = DEFAULT_CONFIG
) -> dict[Weight, int]:
    """Decomposition of a two-factor tensor product into irreducibles.

    Folds the smaller factor's weight diagram around the shifted chamber;
    points on a wall cancel, off-wall points contribute with the sign of
    the folding parity.
    """
    _require_dominant_integral(rs, lam)
    _require_dominant_integral(rs, mu)
    if weyl_dim(rs, mu) > weyl_dim(rs, lam):
        lam, mu = mu, lam
    _check_dim_cap(rs, lam, config)
    diagram = freudenthal(rs, mu, config)
    acc: dict[Weight, int] = {}
    shifted = lam + rs.rho
    for wt, m in diagram.items():
        xi = shifted + wt
        folded, steps = dominant_fold(rs, xi)
        if any(c == 0 for c in folded.coords):
            continue
        nu = folded - rs.rho
        sign = -1 if steps % 2 else 1
        acc[nu] = acc.get(nu, 0) + sign * m
    out = {nu: c for nu, c in acc.items() if c != 0}
    for nu, c in out.items():
        if c < 0:
            raise ConsistencyError(f"negative tensor multiplicity {c} at {nu!r}")
    return out


def _pair_coefficient(
    rs: RootSystem, lam: Weight, mu: Weight, nu: Weight, config: RunConfig
) -> int:
    """Multiplicity of the module with highest weight nu inside lam (x) mu.

    Alternating sum over the Weyl group of one weight multiplicity each,
    much cheaper than a full decomposition when only one coefficient is
    needed.
    """
    if weyl_dim(rs, mu) > weyl_dim(rs, lam):
        lam, mu = mu, lam
    group = weyl_group(rs)
    target = nu + rs.rho
    shifted = lam + rs.rho
    total = 0
    for w in group.elements:
        diff = group.act(w, target) - shifted
        m = weight_multiplicity(rs, mu, diff, config)
        if m:
            total += -m if w.length % 2 else m
    if total < 0:
        raise ConsistencyError(f"negative pair coefficient {total}")
    return total


_INVARIANT_CACHE: dict[tuple[str, tuple[tuple[Fraction, ...], ...]], int] = {}


def invariant_dim(
    rs: RootSystem, weights: list[Weight] | tuple[Weight, ...],
    config: RunConfig = DEFAULT_CONFIG,
) -> int:
    """Dimension of the invariant subspace of a tensor product of modules."""
    if len(weights) < 2:
        raise ConfigError("invariant dimension needs at least two factors")
    for w in weights:
        _require_dominant_integral(rs, w)
        _check_dim_cap(rs, w, config)
    # Invariants are insensitive to factor order; cache on the sorted tuple.
    key = (str(rs.cartan_type), tuple(sorted(w.coords for w in weights)))
    got = _INVARIANT_CACHE.get(key)
    if got is not None:
        return got
    _INVARIANT_CACHE[key] = result = _invariant_dim_raw(rs, weights, config)
    return result


def _invariant_dim_raw(
    rs: RootSystem, weights: list[Weight] | tuple[Weight, ...],
    config: RunConfig,
) -> int:
    if len(weights) == 2:
        return 1 if weights[1] == dual_weight(rs, weights[0]) else 0
    if len(weights) == 3:
        target = dual_weight(rs, weights[2])
        return _pair_coefficient(rs, weights[0], weights[1], target, config)
    acc = tensor_decompose(rs, weights[0], weights[1], config)
    for mid in weights[2:-1]:
        new: dict[Weight, int] = {}
        for xi, c in acc.items():
            for eta, d in tensor_decompose(rs, xi, mid, config).items():
                new[eta] = new.get(eta, 0) + c * d
        acc = new
    return acc.get(dual_weight(rs, weights[-1]), 0)


@dataclass(frozen=True)
class CertifiedPoint:
    """A lattice tuple in the cone together with its stretch witness."""

    weights: tuple[Weight, ...]
    witness: int


def _box_weights(rank: int, box: int) -> list[Weight]:
    return [Weight(c) for c in iter_product(range(box + 1), repeat=rank)]


def _certify(
    rs: RootSystem, weights: tuple[Weight, ...], depth: int, config: RunConfig
) -> int | None:
    for k in range(1, depth + 1):
        scaled = [w.scale(k) for w in weights]
        if invariant_dim(rs, scaled, config) > 0:
            return k
    return None


def _sample_worker(args) -> list[tuple[tuple[tuple[int, ...], ...], int]]:
    cartan, chunk, depth, config = args
    rs = build_root_system(cartan, config)
    out = []
    for coords in chunk:
        weights = tuple(Weight(c) for c in coords)
        witness = _certify(rs, weights, depth, config)
        if witness is not None:
            out.append((coords, witness))
    return out


def sample_cone(
    rs: RootSystem,
    s: int,
    box: int,
    depth: int,
    config: RunConfig = DEFAULT_CONFIG,
    jobs: int = 1,
) -> list[CertifiedPoint]:
    """Certified cone points among all dominant lattice tuples in a box.

    Tries stretch factors 1..depth on every (s+1)-tuple with coordinates at
    most box and keeps the tuples where some stretch admits an invariant,
    recording the smallest such stretch.  Output order is the lexicographic
    order of the coordinate tuples, independent of the job count.
    """
    if s < 1:
        raise ConfigError(f"number of factors must be at least 2, got s={s}")
    if box < 0 or depth < 1:
        raise ConfigError("box bound must be >= 0 and stretch depth >= 1")
    singles = [w.coords for w in _box_weights(rs.rank, box)]
    tuples = [
        tuple(tuple(int(x) for x in c) for c in combo)
        for combo in iter_product(singles, repeat=s + 1)
    ]
    jobs = max(1, jobs)
    cartan = str(rs.cartan_type)
    if jobs == 1 or len(tuples) < 4 * jobs:
        results = _sample_worker((cartan, tuples, depth, config))
    else:
        step = (len(tuples) + jobs - 1) // jobs
        chunks = [tuples[i : i + step] for i in range(0, len(tuples), step)]
        with get_context("fork").Pool(jobs) as pool:
            parts = pool.map(
                _sample_worker, [(cartan, c, depth, config) for c in chunks]
            )
        results = [item for part in parts for item in part]
    return [
        CertifiedPoint(tuple(Weight(c) for c in coords), witness)
        for coords, witness in results
    ]

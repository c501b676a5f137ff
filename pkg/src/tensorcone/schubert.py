"""Schubert calculus on G/B and G/P via BGG divided-difference operators.

Classes are indexed by minimal coset representatives with cohomological
degree equal to the length.  Structure constants are extracted from
polynomial representatives: c_{u,v}^w is the constant term of the
operator of w applied to S_u * S_v.  The Chevalley rule is implemented
independently and serves as the cross-check oracle, never as the
primary path.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConsistencyError
from .polynomials import MPoly
from .rootsys import RootSystem, Weight
from .weylgrp import ParabolicSubset, WeylElement, WeylGroup, weyl_group


class SchubertRing:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.group: WeylGroup = weyl_group(rs)
        self.nvars = rs.rank
        self._alpha_rows = [
            [Fraction(rs.cartan[i][j]) for j in range(rs.rank)] for i in range(rs.rank)
        ]
        self._reflect_powers: list[dict[int, MPoly]] = [dict() for _ in range(rs.rank)]
        self._reps: dict[WeylElement, MPoly] = {}
        self._pair_cache: dict[tuple[WeylElement, WeylElement], dict[WeylElement, int]] = {}
        self._dual_cache: dict[tuple[tuple[int, ...], WeylElement], WeylElement] = {}
        self._build_representatives()

    # -- polynomial model ------------------------------------------------

    def weight_poly(self, w: Weight) -> MPoly:
        return MPoly.linear(list(w.coords))

    def _reflect_image_power(self, i: int, e: int) -> MPoly:
        """(s_i x_i)^e, cached; s_i fixes every other variable."""
        cache = self._reflect_powers[i - 1]
        got = cache.get(e)
        if got is None:
            row = self._alpha_rows[i - 1]
            image = MPoly.linear(
                [(1 if j == i - 1 else 0) - row[j] for j in range(self.nvars)]
            )
            got = MPoly.constant(self.nvars, 1)
            for _ in range(e):
                got = got * image
            cache[e] = got
        return got

    def act_simple(self, i: int, f: MPoly) -> MPoly:
        """Apply the simple reflection s_i to a polynomial."""
        out: dict[tuple[int, ...], Fraction] = {}
        iv = i - 1
        for exp, c in f.terms.items():
            e = exp[iv]
            if e == 0:
                out[exp] = out.get(exp, Fraction(0)) + c
                continue
            base = tuple(x if j != iv else 0 for j, x in enumerate(exp))
            for exp2, c2 in self._reflect_image_power(i, e).terms.items():
                full = tuple(a + b for a, b in zip(base, exp2))
                out[full] = out.get(full, Fraction(0)) + c * c2
        return MPoly(self.nvars, out)

    def divided_difference(self, i: int, f: MPoly) -> MPoly:
        """BGG operator: (f - s_i f) / alpha_i."""
        self.rs._check_index(i)
        g = f - self.act_simple(i, f)
        if g.is_zero():
            return g
        return g.divide_by_linear(self._alpha_rows[i - 1], i - 1)

    def apply_word(self, word: tuple[int, ...], f: MPoly) -> MPoly:
        for i in reversed(word):
            if f.is_zero():
                return f
            f = self.divided_difference(i, f)
        return f

    # -- representatives -------------------------------------------------

    def _build_representatives(self) -> None:
        top = MPoly.constant(self.nvars, Fraction(1, self.rs.weyl_order))
        for root in self.rs.positive_roots:
            top = top * self.weight_poly(self.rs.root_weight(root))
        order = sorted(self.group.elements, key=lambda w: -w.length)
        self._reps[self.group.longest] = top
        for w in order:
            if w in self._reps:
                continue
            parent = None
            letter = None
            for i in range(1, self.rs.rank + 1):
                cand = self.group.compose(w, self.group.simple(i))
                if cand.length == w.length + 1 and cand in self._reps:
                    parent, letter = cand, i
                    break
            if parent is None:
                raise ConsistencyError(f"no ascent with known representative for {w}")
            self._reps[w] = self.divided_difference(letter, self._reps[parent])
        unit = self._reps[self.group.identity]
        if unit.terms != {(0,) * self.nvars: Fraction(1)}:
            raise ConsistencyError("representative of the identity is not 1")

    def representative(self, w: WeylElement) -> MPoly:
        return self._reps[w]

    def extract(self, f: MPoly, w: WeylElement) -> Fraction:
        """Coefficient of the class of w in a homogeneous polynomial of degree l(w)."""
        return self.apply_word(w.word, f).constant_term()

    # -- cup product -----------------------------------------------------

    def cup_pair(self, u: WeylElement, v: WeylElement) -> dict[WeylElement, int]:
        """Full-flag structure constants: sigma_u . sigma_v in H*(G/B)."""
        if (v.length, v.word) < (u.length, u.word):
            u, v = v, u
        key = (u, v)
        got = self._pair_cache.get(key)
        if got is not None:
            return got
        degree = u.length + v.length
        out: dict[WeylElement, int] = {}
        if degree <= self.group.longest.length:
            prod = self._reps[u] * self._reps[v]
            for w in self.group.elements:
                if w.length != degree:
                    continue
                c = self.extract(prod, w)
                if c == 0:
                    continue
                if c.denominator != 1 or c < 0:
                    raise ConsistencyError(
                        f"structure constant c_({u},{v})^({w}) = {c} is not a "
                        "non-negative integer"
                    )
                out[w] = int(c)
        self._pair_cache[key] = out
        return out

    def cup_expand(
        self, p: ParabolicSubset, u: WeylElement, v: WeylElement
    ) -> dict[WeylElement, int]:
        """Product of two G/P classes at minimal representatives."""
        reps = set(self.group.min_coset_reps(p))
        if u not in reps or v not in reps:
            raise ConsistencyError("cup_expand requires minimal coset representatives")
        out = self.cup_pair(u, v)
        for w in out:
            if w not in reps:
                raise ConsistencyError(
                    "product of parabolic classes left the minimal representatives"
                )
        return out

    def chevalley_multiply(self, i: int, v: WeylElement) -> dict[WeylElement, int]:
        """Independent oracle: sigma_{s_i} . sigma_v by the Chevalley rule."""
        self.rs._check_index(i)
        omega = Weight([1 if j == i - 1 else 0 for j in range(self.rs.rank)])
        out: dict[WeylElement, int] = {}
        for root in self.rs.positive_roots:
            refl = self.group.reflection_of_root(root)
            w = self.group.compose(v, refl)
            if w.length != v.length + 1:
                continue
            c = self.group.coroot_pairing(omega, root)
            if c.denominator != 1 or c < 0:
                raise ConsistencyError(f"Chevalley coefficient {c} is not integral")
            if c != 0:
                out[w] = out.get(w, 0) + int(c)
        return out

    # -- parabolic point classes ----------------------------------------

    def dim_quotient(self, p: ParabolicSubset) -> int:
        return len(self.group.radical_roots(p))

    def top_element(self, p: ParabolicSubset) -> WeylElement:
        reps = self.group.min_coset_reps(p)
        dim = self.dim_quotient(p)
        tops = [w for w in reps if w.length == dim]
        if len(tops) != 1:
            raise ConsistencyError("top-degree minimal representative is not unique")
        return tops[0]

    def point_class(self, p: ParabolicSubset) -> WeylElement:
        """Handle of [pt]: the top-degree class of G/P."""
        return self.top_element(p)

    def multi_point_coefficient(
        self, p: ParabolicSubset, reps: list[WeylElement] | tuple[WeylElement, ...]
    ) -> int:
        """Coefficient of [pt] in the cup product of the given G/P classes."""
        allowed = set(self.group.min_coset_reps(p))
        for w in reps:
            if w not in allowed:
                raise ConsistencyError(
                    "point coefficient requires minimal coset representatives"
                )
        dim = self.dim_quotient(p)
        if sum(w.length for w in reps) != dim:
            return 0
        if not reps:
            return 0
        acc: dict[WeylElement, int] = {reps[0]: 1}
        for nxt in reps[1:]:
            new: dict[WeylElement, int] = {}
            for w, c in acc.items():
                for x, cx in self.cup_pair(w, nxt).items():
                    if x.length <= dim:
                        new[x] = new.get(x, 0) + c * cx
            acc = new
        return acc.get(self.top_element(p), 0)

    def dual(self, p: ParabolicSubset, u: WeylElement) -> WeylElement:
        """Poincare dual handle: the unique v with point coefficient 1."""
        key = (p.levi, u)
        got = self._dual_cache.get(key)
        if got is not None:
            return got
        dim = self.dim_quotient(p)
        found = []
        for v in self.group.min_coset_reps(p):
            if v.length != dim - u.length:
                continue
            c = self.multi_point_coefficient(p, [u, v])
            if c == 1:
                found.append(v)
            elif c != 0:
                raise ConsistencyError("duality pairing has an entry outside {0, 1}")
        if len(found) != 1:
            raise ConsistencyError(f"duality pairing is not a permutation at {u}")
        self._dual_cache[key] = found[0]
        return found[0]

    def duality_matrix(self, p: ParabolicSubset) -> list[list[int]]:
        """Pairing matrix between complementary-degree layers, for checks."""
        reps = self.group.min_coset_reps(p)
        return [
            [self.multi_point_coefficient(p, [u, v]) for v in reps] for u in reps
        ]


_RING_CACHE: dict[int, SchubertRing] = {}


def schubert_ring(rs: RootSystem) -> SchubertRing:
    got = _RING_CACHE.get(id(rs))
    if got is None:
        got = SchubertRing(rs)
        _RING_CACHE[id(rs)] = got
    return got


def schubert_representative(rs: RootSystem, w: WeylElement) -> MPoly:
    return schubert_ring(rs).representative(w)


def divided_difference(rs: RootSystem, i: int, f: MPoly) -> MPoly:
    return schubert_ring(rs).divided_difference(i, f)

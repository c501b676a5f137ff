"""Weyl group enumeration, parabolic cosets, and unipotent-radical characters.

Elements are stored with their integer action matrix on fundamental
coordinates together with a canonical handle: the lexicographically
smallest reduced word (1-based simple reflection indices).  Enumeration
is breadth-first by length, so handles and iteration order are stable
across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, ConsistencyError
from .rootsys import RootSystem, Weight, coroot_pairing

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    """One Weyl group element: canonical reduced word plus action matrix."""

    word: tuple[int, ...]
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self) -> str:
        if not self.word:
            return "W(e)"
        return "W(" + ".".join(f"s{i}" for i in self.word) + ")"


@dataclass(frozen=True)
class ParabolicSubset:
    """A standard parabolic, recorded by the simple indices of its Levi."""

    levi: tuple[int, ...]
    rank: int

    def __post_init__(self):
        seen = sorted(set(self.levi))
        if list(self.levi) != seen:
            raise ConfigError(f"levi indices must be sorted and distinct: {self.levi}")
        for i in self.levi:
            if not 1 <= i <= self.rank:
                raise ConfigError(f"levi index {i} out of range 1..{self.rank}")

    @property
    def complement(self) -> tuple[int, ...]:
        inside = set(self.levi)
        return tuple(i for i in range(1, self.rank + 1) if i not in inside)

    @property
    def is_full(self) -> bool:
        return len(self.levi) == self.rank


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    # s_i(mu)_j = mu_j - mu_{i-1} * cartan[i-1][j]
    n = rs.rank
    row = rs.cartan[i - 1]
    return tuple(
        tuple((1 if j == k else 0) - (row[j] if k == i - 1 else 0) for k in range(n))
        for j in range(n)
    )


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


class WeylGroup:
    """The full Weyl group of a root system, enumerated once."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._simple_mats = {i: _reflection_matrix(rs, i) for i in range(1, rs.rank + 1)}
        self.elements: tuple[WeylElement, ...] = self._enumerate()
        self.by_matrix: dict[Matrix, WeylElement] = {w.matrix: w for w in self.elements}
        self.identity = self.elements[0]
        self.longest = self.elements[-1]
        self._inverse_cache: dict[WeylElement, WeylElement] = {}
        self._subgroup_cache: dict[tuple[int, ...], tuple[WeylElement, ...]] = {}
        self._coset_cache: dict[tuple[int, ...], tuple[WeylElement, ...]] = {}
        self._sanity()

    def _enumerate(self) -> tuple[WeylElement, ...]:
        n = self.rs.rank
        identity = WeylElement((), _identity_matrix(n))
        seen = {identity.matrix: identity}
        level = [identity]
        out = [identity]
        while level:
            level.sort(key=lambda w: w.word)
            nxt = []
            for y in level:
                for i in range(1, n + 1):
                    mat = _mat_mul(y.matrix, self._simple_mats[i])
                    if mat not in seen:
                        x = WeylElement(y.word + (i,), mat)
                        seen[mat] = x
                        nxt.append(x)
            out.extend(sorted(nxt, key=lambda w: w.word))
            level = nxt
        return tuple(out)

    def _sanity(self) -> None:
        if len(self.elements) != self.rs.weyl_order:
            raise ConsistencyError(
                f"enumerated {len(self.elements)} Weyl elements for "
                f"{self.rs.cartan_type}, expected {self.rs.weyl_order}"
            )
        if self.longest.length != len(self.rs.positive_roots):
            raise ConsistencyError("longest element length != number of positive roots")
        if _mat_mul(self.longest.matrix, self.longest.matrix) != self.identity.matrix:
            raise ConsistencyError("longest element is not an involution")

    def simple(self, i: int) -> WeylElement:
        self.rs._check_index(i)
        return self.by_matrix[self._simple_mats[i]]

    def compose(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """a then b read right-to-left: act(compose(a, b), v) = a(b(v))."""
        return self.by_matrix[_mat_mul(a.matrix, b.matrix)]

    def invert(self, w: WeylElement) -> WeylElement:
        got = self._inverse_cache.get(w)
        if got is None:
            mat = _identity_matrix(self.rs.rank)
            for i in reversed(w.word):
                mat = _mat_mul(mat, self._simple_mats[i])
            got = self.by_matrix[mat]
            self._inverse_cache[w] = got
        return got

    def act(self, w: WeylElement, v: Weight) -> Weight:
        n = self.rs.rank
        return Weight(
            sum(w.matrix[i][j] * v.coords[j] for j in range(n)) for i in range(n)
        )

    def from_word(self, word: tuple[int, ...] | list[int]) -> WeylElement:
        mat = _identity_matrix(self.rs.rank)
        for i in word:
            self.rs._check_index(i)
            mat = _mat_mul(mat, self._simple_mats[i])
        return self.by_matrix[mat]

    def parabolic(self, levi: tuple[int, ...] | list[int]) -> ParabolicSubset:
        return ParabolicSubset(tuple(sorted(levi)), self.rs.rank)

    def subgroup(self, p: ParabolicSubset) -> tuple[WeylElement, ...]:
        """All elements of W_P, sorted by (length, word)."""
        got = self._subgroup_cache.get(p.levi)
        if got is None:
            gens = [self.simple(i) for i in p.levi]
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in gens:
                        x = self.compose(w, g)
                        if x not in seen:
                            seen.add(x)
                            nxt.append(x)
                frontier = nxt
            got = tuple(sorted(seen, key=lambda w: (w.length, w.word)))
            if len(self.elements) % len(got) != 0:
                raise ConsistencyError("parabolic subgroup order must divide |W|")
            self._subgroup_cache[p.levi] = got
        return got

    def _sends_levi_positive(self, w: WeylElement, p: ParabolicSubset) -> bool:
        for i in p.levi:
            image = self.act(w, self.rs.simple_root(i))
            if any(c < 0 for c in self.rs.root_coords(image)):
                return False
        return True

    def min_coset_reps(self, p: ParabolicSubset) -> tuple[WeylElement, ...]:
        """Minimal-length representatives of W/W_P, sorted by (length, word)."""
        got = self._coset_cache.get(p.levi)
        if got is None:
            reps = tuple(
                w for w in self.elements if self._sends_levi_positive(w, p)
            )
            expected = len(self.elements) // len(self.subgroup(p))
            if len(reps) != expected:
                raise ConsistencyError(
                    f"found {len(reps)} minimal coset representatives, "
                    f"expected {expected}"
                )
            self._coset_cache[p.levi] = reps
            got = reps
        return got

    def project_to_coset(self, w: WeylElement, p: ParabolicSubset) -> WeylElement:
        """The minimal-length element of the coset w W_P."""
        best = None
        for v in self.subgroup(p):
            x = self.compose(w, v)
            if best is None or x.length < best.length:
                best = x
        assert best is not None
        if not self._sends_levi_positive(best, p):
            raise ConsistencyError("coset projection left the minimal representatives")
        return best

    def radical_roots(self, p: ParabolicSubset) -> tuple[tuple[int, ...], ...]:
        """Positive roots of the unipotent radical: support meets the complement."""
        comp = set(k - 1 for k in p.complement)
        return tuple(
            r for r in self.rs.positive_roots if any(r[j] != 0 for j in comp)
        )

    def levi_roots(self, p: ParabolicSubset) -> tuple[tuple[int, ...], ...]:
        inside = set(i - 1 for i in p.levi)
        return tuple(
            r
            for r in self.rs.positive_roots
            if all(c == 0 or j in inside for j, c in enumerate(r))
        )

    def theta(self, p: ParabolicSubset, w: WeylElement) -> Weight:
        """Sum of the radical roots lying in w applied to the positive roots."""
        winv = self.invert(w)
        total = Weight([0] * self.rs.rank)
        for r in self.radical_roots(p):
            pulled = self.act(winv, self.rs.root_weight(r))
            if all(c >= 0 for c in self.rs.root_coords(pulled)):
                total = total + self.rs.root_weight(r)
        return total

    def rho_levi(self, p: ParabolicSubset) -> Weight:
        total = Weight([0] * self.rs.rank)
        for r in self.levi_roots(p):
            total = total + self.rs.root_weight(r)
        return total.scale(Fraction(1, 2))

    def inversion_sum(self, w: WeylElement) -> Weight:
        """Sum of the positive roots sent negative by w."""
        total = Weight([0] * self.rs.rank)
        for r in self.rs.positive_roots:
            image = self.act(w, self.rs.root_weight(r))
            if any(c < 0 for c in self.rs.root_coords(image)):
                total = total + self.rs.root_weight(r)
        return total

    def coroot_pairing(self, mu: Weight, root: tuple[int, ...]) -> Fraction:
        """<mu, beta^vee> = 2(mu, beta)/(beta, beta), beta in root coordinates."""
        return coroot_pairing(self.rs, mu, root)

    def reflection_of_root(self, root: tuple[int, ...]) -> WeylElement:
        """The reflection s_beta for a positive root beta."""
        n = self.rs.rank
        beta = self.rs.root_weight(root)
        cols = []
        for k in range(n):
            mu = Weight([1 if j == k else 0 for j in range(n)])
            image = mu - beta.scale(self.coroot_pairing(mu, root))
            cols.append(image.coords)
        for col in cols:
            if any(c.denominator != 1 for c in col):
                raise ConsistencyError(f"reflection of root {root} is not integral")
        mat = tuple(
            tuple(int(cols[k][j]) for k in range(n)) for j in range(n)
        )
        got = self.by_matrix.get(mat)
        if got is None:
            raise ConsistencyError(f"reflection matrix for root {root} not in group")
        return got


_WEYL_CACHE: dict[int, WeylGroup] = {}


def weyl_group(rs: RootSystem) -> WeylGroup:
    got = _WEYL_CACHE.get(id(rs))
    if got is None:
        got = WeylGroup(rs)
        _WEYL_CACHE[id(rs)] = got
    return got


def enumerate_weyl(rs: RootSystem) -> tuple[WeylElement, ...]:
    return weyl_group(rs).elements

"""Exact root-system data for semisimple types A/B/C/D/F/G.

Weights are stored by their fundamental-weight coordinates as exact
rationals; roots by integer coordinates in the simple-root basis.  The
Cartan matrix is stored as ``cartan[i][j] = <alpha_i, alpha_j^vee>``
(0-based internally), so the fundamental coordinates of a root with
simple-root coordinate vector ``c`` are ``transpose(cartan) @ c``.

Public functions that accept a single simple-root index (``reflect``,
``pair_coweight``) use 1-based indices, matching the serialized formats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .config import DEFAULT_CONFIG, RunConfig
from .errors import ConfigError, ConsistencyError

FAMILY_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "F": (4, 4),
    "G": (2, 2),
}


def expected_positive_root_count(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "F":
        return 24
    if family == "G":
        return 6
    raise ConfigError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CartanType:
    """A product of simple factors, e.g. A2 or A1xA1."""

    factors: tuple[tuple[str, int], ...]

    @staticmethod
    def parse(text: str) -> "CartanType":
        if not isinstance(text, str) or not text.strip():
            raise ConfigError("empty Cartan type")
        factors = []
        for part in text.strip().upper().split("X"):
            part = part.strip()
            if len(part) < 2 or part[0] not in FAMILY_RANK_RANGE:
                raise ConfigError(f"cannot parse Cartan type factor {part!r}")
            family = part[0]
            try:
                rank = int(part[1:])
            except ValueError:
                raise ConfigError(f"cannot parse rank in factor {part!r}") from None
            lo, hi = FAMILY_RANK_RANGE[family]
            if rank < lo or (hi is not None and rank > hi):
                raise ConfigError(f"rank {rank} out of range for family {family}")
            factors.append((family, rank))
        return CartanType(tuple(factors))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    def __str__(self) -> str:
        return "x".join(f"{fam}{rank}" for fam, rank in self.factors)


def _simple_factor_cartan(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix of one simple factor, entries <alpha_i, alpha_j^vee>."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    if family == "B" and rank >= 2:
        # alpha_rank is short: <alpha_{r-1}, alpha_r^vee> = -2
        a[rank - 2][rank - 1] = -2
    elif family == "C" and rank >= 2:
        # alpha_rank is long: <alpha_r, alpha_{r-1}^vee> = -2
        a[rank - 1][rank - 2] = -2
    elif family == "D":
        for i, j in ((rank - 2, rank - 1), (rank - 1, rank - 2)):
            a[i][j] = 0
        a[rank - 3][rank - 1] = -1
        a[rank - 1][rank - 3] = -1
    elif family == "G":
        a[0][1] = -1
        a[1][0] = -3
    elif family == "F":
        a[1][2] = -2
        a[2][1] = -1
    return a


def _invert_fraction_matrix(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[tuple[Fraction, ...], ...]:
    """Invert a square matrix over the rationals by Gauss-Jordan elimination."""
    n = len(rows)
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ConsistencyError("singular matrix has no inverse")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [inv * x for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


class Weight:
    """A weight in fundamental-weight coordinates, exact rationals."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[Fraction | int]):
        self.coords = tuple(Fraction(c) for c in coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def scale(self, k: Fraction | int) -> "Weight":
        k = Fraction(k)
        return Weight(k * a for a in self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"

    def serialize(self) -> list[str]:
        return [str(c) for c in self.coords]

    @staticmethod
    def deserialize(items: Sequence[str | int]) -> "Weight":
        try:
            return Weight([Fraction(x) for x in items])
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad weight coordinates {items!r}: {exc}") from None


class RootSystem:
    """Root data of a semisimple group, built once and then read-only."""

    def __init__(self, cartan_type: CartanType, config: RunConfig):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        if self.rank > config.rank_cap:
            from .errors import BudgetError

            raise BudgetError(
                f"total rank {self.rank} exceeds rank cap {config.rank_cap}"
            )
        self.cartan: tuple[tuple[int, ...], ...] = self._build_cartan()
        self.positive_roots: tuple[tuple[int, ...], ...] = self._close_positive_roots()
        self._check_counts()
        self._inv_cartan_t = _invert_fraction_matrix(
            [[Fraction(self.cartan[j][i]) for j in range(self.rank)] for i in range(self.rank)]
        )
        self.symmetrizer: tuple[Fraction, ...] = self._solve_symmetrizer()
        self.rho = Weight([1] * self.rank)
        self.weyl_order = self._weyl_order()

    def _build_cartan(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        a = [[0] * n for _ in range(n)]
        offset = 0
        for family, rank in self.cartan_type.factors:
            block = _simple_factor_cartan(family, rank)
            for i in range(rank):
                for j in range(rank):
                    a[offset + i][offset + j] = block[i][j]
            offset += rank
        return tuple(tuple(row) for row in a)

    def _close_positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        known = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(n):
                    pairing = sum(beta[j] * self.cartan[j][i] for j in range(n))
                    img = list(beta)
                    img[i] -= pairing
                    img_t = tuple(img)
                    if all(c >= 0 for c in img_t) and img_t not in known:
                        known.add(img_t)
                        new.append(img_t)
            frontier = new
        return tuple(sorted(known, key=lambda r: (sum(r), r)))

    def _check_counts(self) -> None:
        expected = sum(
            expected_positive_root_count(fam, rank)
            for fam, rank in self.cartan_type.factors
        )
        if len(self.positive_roots) != expected:
            raise ConsistencyError(
                f"positive root closure produced {len(self.positive_roots)} roots "
                f"for {self.cartan_type}, expected {expected}"
            )

    def _solve_symmetrizer(self) -> tuple[Fraction, ...]:
        # t_j with t_j * cartan[i][j] == t_i * cartan[j][i]; BFS per component.
        # t_j is then proportional to (alpha_j, alpha_j)/2.
        n = self.rank
        t: list[Fraction | None] = [None] * n
        for start in range(n):
            if t[start] is not None:
                continue
            t[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if i != j and self.cartan[i][j] != 0 and t[j] is None:
                        t[j] = t[i] * Fraction(self.cartan[j][i], self.cartan[i][j])
                        stack.append(j)
        return tuple(x if x is not None else Fraction(1) for x in t)

    def _weyl_order(self) -> int:
        order = 1
        for family, rank in self.cartan_type.factors:
            if family == "A":
                f = 1
                for k in range(2, rank + 2):
                    f *= k
                order *= f
            elif family in ("B", "C"):
                f = 1
                for k in range(2, rank + 1):
                    f *= k
                order *= f * 2**rank
            elif family == "D":
                f = 1
                for k in range(2, rank + 1):
                    f *= k
                order *= f * 2 ** (rank - 1)
            elif family == "F":
                order *= 1152
            elif family == "G":
                order *= 12
        return order

    def simple_root(self, i: int) -> Weight:
        """Simple root alpha_i (1-based) in fundamental coordinates."""
        self._check_index(i)
        return Weight(self.cartan[i - 1])

    def root_weight(self, root: Sequence[int]) -> Weight:
        """Fundamental coordinates of a root given in the simple-root basis."""
        n = self.rank
        return Weight(
            sum(root[j] * self.cartan[j][i] for j in range(n)) for i in range(n)
        )

    def root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the simple-root basis."""
        n = self.rank
        return tuple(
            sum(self._inv_cartan_t[i][j] * w.coords[j] for j in range(n))
            for i in range(n)
        )

    def inner(self, a: Weight, b: Weight) -> Fraction:
        """W-invariant symmetric bilinear form, exact."""
        rb = self.root_coords(b)
        return sum(
            (self.symmetrizer[j] * a.coords[j] * rb[j] for j in range(self.rank)),
            Fraction(0),
        )

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ConfigError(f"simple-root index {i} out of range 1..{self.rank}")


_ROOT_SYSTEM_CACHE: dict[tuple[str, int], RootSystem] = {}


def build_root_system(
    cartan_type: CartanType | str, config: RunConfig | None = None
) -> RootSystem:
    """Build (or fetch a cached copy of) the root system for a Cartan type."""
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)
    config = config or DEFAULT_CONFIG
    key = (str(cartan_type), config.rank_cap)
    got = _ROOT_SYSTEM_CACHE.get(key)
    if got is None:
        got = RootSystem(cartan_type, config)
        _ROOT_SYSTEM_CACHE[key] = got
    return got


def reflect(rs: RootSystem, i: int, w: Weight) -> Weight:
    """Simple reflection s_i applied to a weight, i 1-based."""
    rs._check_index(i)
    c = w.coords[i - 1]
    if c == 0:
        return w
    alpha = rs.simple_root(i)
    return w - alpha.scale(c)


def pair_coweight(rs: RootSystem, w: Weight, k: int) -> Fraction:
    """<w, omega_k^vee>: the coefficient of alpha_k in the simple-root basis."""
    rs._check_index(k)
    return rs.root_coords(w)[k - 1]


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w.coords)


def is_strictly_dominant(w: Weight) -> bool:
    return all(c > 0 for c in w.coords)


def dominant_fold(rs: RootSystem, w: Weight) -> tuple[Weight, int]:
    """Fold a weight into the dominant chamber.

    Returns the dominant representative and the number of simple
    reflections applied.  The count's parity is well defined only for
    weights off every wall.
    """
    coords = list(w.coords)
    steps = 0
    guard = 4 * len(rs.positive_roots) + 4
    while True:
        for i in range(rs.rank):
            if coords[i] < 0:
                c = coords[i]
                row = rs.cartan[i]
                for j in range(rs.rank):
                    coords[j] -= c * row[j]
                steps += 1
                break
        else:
            return Weight(coords), steps
        guard -= 1
        if guard < 0:
            raise ConsistencyError("dominant folding failed to terminate")


def dual_weight(rs: RootSystem, w: Weight) -> Weight:
    """Highest weight of the dual module: the dominant fold of -w."""
    folded, _ = dominant_fold(rs, -w)
    return folded


def coroot_pairing(rs: RootSystem, mu: Weight, root: Sequence[int]) -> Fraction:
    """<mu, beta^vee> = 2(mu, beta)/(beta, beta) for a root beta."""
    n = rs.rank
    beta = rs.root_weight(root)
    norm = sum(
        (rs.symmetrizer[j] * root[j] * beta.coords[j] for j in range(n)), Fraction(0)
    )
    num = sum(
        (rs.symmetrizer[j] * Fraction(root[j]) * mu.coords[j] for j in range(n)),
        Fraction(0),
    )
    return 2 * num / norm

"""Sparse multivariate polynomials over the rationals.

Terms map exponent tuples to nonzero Fraction coefficients.  Only the
operations the divided-difference calculus needs are provided: ring
arithmetic, substitution of variables by linear forms, and exact
division by a linear form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ConsistencyError


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, c in terms.items():
                if c != 0:
                    self.terms[exp] = Fraction(c)

    @staticmethod
    def zero(nvars: int) -> "MPoly":
        return MPoly(nvars)

    @staticmethod
    def constant(nvars: int, c: Fraction | int) -> "MPoly":
        c = Fraction(c)
        if c == 0:
            return MPoly(nvars)
        return MPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def linear(coeffs: Iterable[Fraction | int]) -> "MPoly":
        """The degree-1 polynomial with the given variable coefficients."""
        coeffs = [Fraction(c) for c in coeffs]
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                exp = tuple(1 if j == i else 0 for j in range(n))
                terms[exp] = c
        return MPoly(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return MPoly(self.nvars, out)

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + other.scale(-1)

    def scale(self, k: Fraction | int) -> "MPoly":
        k = Fraction(k)
        if k == 0:
            return MPoly(self.nvars)
        return MPoly(self.nvars, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other: "MPoly") -> "MPoly":
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return MPoly(self.nvars, out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def substitute_linear(self, images: list[list[Fraction]]) -> "MPoly":
        """Replace variable i by the linear form with coefficients images[i]."""
        n = self.nvars
        lin = [MPoly.linear(images[i]) for i in range(n)]
        powers: list[dict[int, MPoly]] = [dict() for _ in range(n)]
        out = MPoly(n)
        for exp, c in self.terms.items():
            term = MPoly.constant(n, c)
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                cache = powers[i]
                if e not in cache:
                    p = cache.get(e - 1)
                    if p is None:
                        p = MPoly.constant(n, 1)
                        for _ in range(e - 1):
                            p = p * lin[i]
                        cache[e - 1] = p
                    cache[e] = p * lin[i]
                term = term * cache[e]
            out = out + term
        return out

    def divide_by_linear(self, coeffs: list[Fraction], pivot: int) -> "MPoly":
        """Exact quotient by a linear form whose pivot coefficient is nonzero.

        Raises if a nonzero remainder appears; callers rely on exactness.
        """
        a = Fraction(coeffs[pivot])
        if a == 0:
            raise ConsistencyError("pivot coefficient of divisor is zero")
        rest = MPoly.linear([c if i != pivot else Fraction(0) for i, c in enumerate(coeffs)])
        # Collect coefficients of powers of the pivot variable.
        layers: dict[int, MPoly] = {}
        for exp, c in self.terms.items():
            d = exp[pivot]
            stripped = tuple(e if i != pivot else 0 for i, e in enumerate(exp))
            layer = layers.setdefault(d, MPoly(self.nvars))
            layer.terms[stripped] = layer.terms.get(stripped, Fraction(0)) + c
        if not layers:
            return MPoly(self.nvars)
        top = max(layers)
        quotient_layers: dict[int, MPoly] = {}
        carry = MPoly(self.nvars)
        for d in range(top, 0, -1):
            g = layers.get(d, MPoly(self.nvars)) - carry
            q = g.scale(Fraction(1, 1) / a)
            if not q.is_zero():
                quotient_layers[d - 1] = q
            carry = rest * q
        remainder = layers.get(0, MPoly(self.nvars)) - carry
        if not remainder.is_zero():
            raise ConsistencyError("division by linear form left a remainder")
        out: dict[tuple[int, ...], Fraction] = {}
        for d, layer in quotient_layers.items():
            for exp, c in layer.terms.items():
                full = tuple(e if i != pivot else d for i, e in enumerate(exp))
                out[full] = c
        return MPoly(self.nvars, out)

    def __repr__(self) -> str:
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e > 0
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MPoly(" + " + ".join(bits) + ")"

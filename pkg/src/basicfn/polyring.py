"""Exact sparse arithmetic in Z[v, v^-1] with v^2 = q, and weight series.

Half powers of q (from pairings against rho) are kept integral by working
in the variable v; an element "is a polynomial in q" exactly when all its
v-exponents are even and nonnegative.  Weight series are finite maps from
cocharacters to Laurent polynomials, graded and truncated by the central
grading det_G; the X variable of generating series is implicit, each entry
carrying X^{det_G(mu)}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DatumMismatch, NonPositiveGrading
from .root_datum import BasedRootDatum, Weight

Scalar = Union[int, "LaurentV"]


class LaurentV:
    """Integer-coefficient Laurent polynomial in v.  Immutable by use."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {int(e): int(c) for e, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentV is immutable")

    # -- constructors --

    @staticmethod
    def zero() -> "LaurentV":
        return LaurentV()

    @staticmethod
    def one() -> "LaurentV":
        return LaurentV({0: 1})

    @staticmethod
    def v_power(exp: int, coeff: int = 1) -> "LaurentV":
        return LaurentV({exp: coeff})

    @staticmethod
    def q_power(exp: int, coeff: int = 1) -> "LaurentV":
        """coeff * q^exp, i.e. coeff * v^(2 exp)."""
        return LaurentV({2 * exp: coeff})

    @staticmethod
    def from_q_coeffs(coeffs: Mapping[int, int]) -> "LaurentV":
        return LaurentV({2 * e: c for e, c in coeffs.items()})

    # -- ring structure --

    def __add__(self, other: "LaurentV") -> "LaurentV":
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentV(acc)

    def __sub__(self, other: "LaurentV") -> "LaurentV":
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) - c
        return LaurentV(acc)

    def __neg__(self) -> "LaurentV":
        return LaurentV({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Scalar) -> "LaurentV":
        if isinstance(other, int):
            return LaurentV({e: c * other for e, c in self.terms.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentV(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentV) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure queries --

    def is_zero(self) -> bool:
        return not self.terms

    def is_q_polynomial(self) -> bool:
        return all(e >= 0 and e % 2 == 0 for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def has_nonnegative_coeffs(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def v_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def q_degree(self) -> Fraction:
        return Fraction(self.v_degree(), 2)

    def min_v_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self.terms)

    # -- substitutions and evaluation --

    def shift(self, v_exp: int) -> "LaurentV":
        """Multiply by v^v_exp."""
        return LaurentV({e + v_exp: c for e, c in self.terms.items()})

    def reciprocal_variable(self) -> "LaurentV":
        """Substitute v -> v^-1 (hence q -> q^-1)."""
        return LaurentV({-e: c for e, c in self.terms.items()})

    def eval_v(self, v: Fraction) -> Fraction:
        v = Fraction(v)
        if v == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at v=0")
        return sum((c * v ** e for e, c in self.terms.items()), Fraction(0))

    def eval_q(self, q: Fraction) -> Fraction:
        """Evaluate at v^2 = q; requires all exponents even."""
        if any(e % 2 for e in self.terms):
            raise ValueError("odd v-exponents present; value depends on sqrt(q)")
        q = Fraction(q)
        return sum((c * q ** (e // 2) for e, c in self.terms.items()), Fraction(0))

    # -- canonical text and JSON forms --

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        use_q = all(e % 2 == 0 for e in self.terms)
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            ee = e // 2 if use_q else e
            var = "q" if use_q else "v"
            if ee == 0:
                body = str(abs(c))
            else:
                head = f"{var}^{ee}" if ee != 1 else var
                body = head if abs(c) == 1 else f"{abs(c)}*{head}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentV({self})"

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(obj: Iterable) -> "LaurentV":
        return LaurentV({int(e): int(c) for e, c in obj})


def laurent_mul(a: LaurentV, b: LaurentV) -> LaurentV:
    """Exact product in Z[v, v^-1]."""
    return a * b


@dataclass(frozen=True)
class WeightSeries:
    """Finite det-graded map from cocharacters to Laurent polynomials.

    Entries with zero value are never stored, and every stored weight mu
    satisfies 0 <= det_G(mu) <= max_det.
    """

    datum: BasedRootDatum
    entries: Mapping[Weight, LaurentV]
    max_det: int

    def __post_init__(self):
        clean = {}
        for mu, val in self.entries.items():
            if val.is_zero():
                continue
            d = self.datum.det(mu)
            if not (0 <= d <= self.max_det):
                raise ValueError(f"series entry at {mu} has det {d} outside [0, {self.max_det}]")
            clean[mu] = val
        object.__setattr__(self, "entries", clean)

    @staticmethod
    def one(datum: BasedRootDatum, max_det: int) -> "WeightSeries":
        return WeightSeries(datum, {datum.zero(): LaurentV.one()}, max_det)

    def coeff(self, mu: Weight) -> LaurentV:
        return self.entries.get(mu, LaurentV.zero())

    def truncate(self, max_det: int) -> "WeightSeries":
        kept = {mu: v for mu, v in self.entries.items() if self.datum.det(mu) <= max_det}
        return WeightSeries(self.datum, kept, max_det)

    def __add__(self, other: "WeightSeries") -> "WeightSeries":
        if self.datum != other.datum:
            raise DatumMismatch("cannot add series over different data")
        bound = min(self.max_det, other.max_det)
        acc: dict[Weight, LaurentV] = {}
        for src in (self, other):
            for mu, val in src.entries.items():
                if self.datum.det(mu) <= bound:
                    acc[mu] = acc.get(mu, LaurentV.zero()) + val
        return WeightSeries(self.datum, acc, bound)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightSeries)
            and self.datum == other.datum
            and self.max_det == other.max_det
            and dict(self.entries) == dict(other.entries)
        )

    def sorted_items(self) -> list[tuple[Weight, LaurentV]]:
        return sorted(self.entries.items(), key=lambda kv: (self.datum.det(kv[0]), kv[0].coords))


def series_mul(a: WeightSeries, b: WeightSeries) -> WeightSeries:
    """Convolution product, dropping terms beyond the smaller det bound."""
    if a.datum != b.datum:
        raise DatumMismatch("cannot multiply series over different data")
    datum = a.datum
    bound = min(a.max_det, b.max_det)
    acc: dict[Weight, LaurentV] = {}
    for mu1, v1 in a.entries.items():
        d1 = datum.det(mu1)
        for mu2, v2 in b.entries.items():
            if d1 + datum.det(mu2) > bound:
                continue
            mu = mu1 + mu2
            acc[mu] = acc.get(mu, LaurentV.zero()) + v1 * v2
    return WeightSeries(datum, acc, bound)


def geometric_expand(datum: BasedRootDatum, mu: Weight, c: LaurentV, max_det: int) -> WeightSeries:
    """Expansion of (1 - c e^mu)^{-1} = sum_j c^j e^{j mu}, truncated by det.

    Termination needs det_G(mu) >= 1.
    """
    d = datum.det(mu)
    if not (isinstance(d, int) and d >= 1):
        raise NonPositiveGrading(f"det_G({mu}) = {d} must be a positive integer")
    acc: dict[Weight, LaurentV] = {}
    power = LaurentV.one()
    current = datum.zero()
    j = 0
    while j * d <= max_det:
        acc[current] = power
        j += 1
        power = power * c
        current = current + mu
    return WeightSeries(datum, acc, max_det)

"""Basic-function coefficients and their det-graded generating series.

For a representation of the dual group whose weights all sit in grading
degree 1, the coefficient at an anti-dominant cocharacter mu is

    sum over constituents V(lambda) of Sym^{det mu}, lambda >= mu,
    of  mult * K_{lambda,mu}(q),

which is the polynomial c_mu(q^|-1|) in q.  An independent route computes
the same value through the generalized Kostka-Foulkes polynomial of the
joined multiset (rep weights and positive roots), divided by q^{det mu};
the two must agree, and the cross-check exercises the partition, kostka
and character modules simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iproduct
from math import isqrt
from typing import Optional, Sequence

from . import linalg
from .characters import RepSpec, decompose_character, sym_power_character
from .errors import IrrationalHalfPower, PsiNotCertified
from .kostka import KFRequest, basic_psi, generalized_kf, lusztig_q
from .polyring import LaurentV, WeightSeries
from .root_datum import BasedRootDatum, Weight, bruhat_leq, is_antidominant, pair


@dataclass(frozen=True)
class SupportCone:
    """Exact ray/facet description of the cone spanned by the rep weights."""

    datum: BasedRootDatum
    generators: tuple[Weight, ...]
    rays: tuple[Weight, ...]
    facets: tuple[tuple[int, ...], ...]
    equalities: tuple[tuple[int, ...], ...]

    def contains(self, mu: Weight) -> bool:
        v = mu.coords
        for eq in self.equalities:
            if sum(a * b for a, b in zip(eq, v)) != 0:
                return False
        for n in self.facets:
            if sum(a * b for a, b in zip(n, v)) < 0:
                return False
        return True


def support_cone(rep: RepSpec) -> SupportCone:
    """Facets and extremal rays of cone(Supp(V) + {0}) by double description."""
    datum = rep.datum
    rank = datum.rank
    gens = []
    for w, _ in rep.supp:
        if not w.is_zero() and w not in gens:
            gens.append(w)
    rows = [list(w.coords) for w in gens]
    equalities = tuple(
        linalg.primitive_integer_vector(v) for v in linalg.nullspace(rows) if any(v)
    ) if gens else tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    span_dim = rank - len(equalities)
    if span_dim == 0:
        return SupportCone(datum, tuple(gens), (), (), equalities)

    span_rows = rows  # functionals vanishing on all generators
    facets: dict[tuple, tuple[int, ...]] = {}
    for subset in combinations(range(len(gens)), span_dim - 1):
        sub = [rows[i] for i in subset]
        if sub and linalg.rank(sub) < span_dim - 1:
            continue
        kernel = linalg.nullspace(sub) if sub else [
            [Fraction(int(i == j)) for j in range(rank)] for i in range(rank)
        ]
        candidate = None
        for x in kernel:
            if any(sum(Fraction(g) * xi for g, xi in zip(row, x)) != 0 for row in span_rows):
                candidate = x
                break
        if candidate is None:
            continue
        values = [sum(Fraction(g) * xi for g, xi in zip(row, candidate)) for row in rows]
        if all(v >= 0 for v in values):
            pass
        elif all(v <= 0 for v in values):
            candidate = [-x for x in candidate]
            values = [-v for v in values]
        else:
            continue
        key = linalg.primitive_integer_vector(values)
        if key not in facets:
            facets[key] = linalg.primitive_integer_vector(candidate)
    facet_list = tuple(sorted(facets.values()))

    rays = []
    for g in gens:
        tight = [list(n) for n in facet_list
                 if sum(a * b for a, b in zip(n, g.coords)) == 0]
        tight += [list(e) for e in equalities]
        face_dim = (rank - linalg.rank(tight)) if tight else rank
        if face_dim == 1:
            ray = Weight.cochar(linalg.primitive_integer_vector(g.coords))
            if ray not in rays:
                rays.append(ray)
    return SupportCone(datum, tuple(gens), tuple(rays), facet_list, equalities)


@dataclass(frozen=True)
class BasicFunction:
    """The coefficient table of a basic function up to a det bound.

    The entry at mu stores c_mu(q^|-1|) as a polynomial in q; the Cartan
    coefficient of the basic function itself carries an extra factor
    q_F^{-<rho_Bminus, mu>} X^{det mu}, restored by ``specialize``.
    """

    datum: BasedRootDatum
    rep: RepSpec
    coeffs: WeightSeries
    max_det: int

    def entry(self, mu: Weight) -> LaurentV:
        return self.coeffs.coeff(mu)

    def sorted_items(self) -> list[tuple[Weight, LaurentV]]:
        return self.coeffs.sorted_items()


@lru_cache(maxsize=None)
def _sym_constituents(rep: RepSpec, k: int) -> tuple[tuple[Weight, int], ...]:
    table = sym_power_character(rep, k)
    return tuple(decompose_character(table))


def c_mu(rep: RepSpec, mu: Weight) -> LaurentV:
    """c_mu(q^|-1|) as a q-polynomial, via symmetric power decomposition."""
    datum = rep.datum
    k = datum.det(mu)
    if not isinstance(k, int) or k < 0 or not is_antidominant(datum, mu):
        return LaurentV.zero()
    total = LaurentV.zero()
    for lam, mult in _sym_constituents(rep, k):
        if bruhat_leq(datum, mu, lam):
            total = total + mult * lusztig_q(datum, lam, mu)
    assert total.is_zero() or total.has_nonnegative_coeffs()
    return total


def c_mu_via_gkf(rep: RepSpec, mu: Weight) -> LaurentV:
    """Independent recomputation of c_mu through the joined multiset."""
    datum = rep.datum
    if not is_antidominant(datum, mu):
        raise PsiNotCertified("the dual route is stated for anti-dominant mu")
    k = datum.det(mu)
    if not isinstance(k, int) or k < 0:
        return LaurentV.zero()
    psi = basic_psi(rep)
    m = generalized_kf(KFRequest(datum, datum.zero(), mu, psi))
    result = m.shift(-2 * k)  # divide by q^{det mu}
    assert result.is_zero() or result.is_q_polynomial()
    return result


def _det_one_copies(rep: RepSpec) -> list[Weight]:
    if not rep.has_det_one_weights():
        raise ValueError("layer operations need all rep weights in grading degree 1")
    return rep.labeled_weights()


def layer_points(rep: RepSpec, k: int) -> list[Weight]:
    """Anti-dominant lattice points of the support cone with det = k.

    Enumerates a coordinate box spanned by k * conv(Supp V) and filters by
    the exact facet description plus anti-dominance.
    """
    datum = rep.datum
    if k < 0:
        return []
    if k == 0:
        return [datum.zero()]
    cone = support_cone(rep)
    coords = [w.coords for w, _ in rep.supp]
    los = [min(k * c[i] for c in coords) for i in range(datum.rank)]
    his = [max(k * c[i] for c in coords) for i in range(datum.rank)]
    points = []
    for tup in iproduct(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        mu = Weight.cochar(tup)
        if datum.det(mu) != k:
            continue
        if not cone.contains(mu):
            continue
        if not is_antidominant(datum, mu):
            continue
        points.append(mu)
    points.sort(key=lambda w: w.coords)
    return points


def layer_count(rep: RepSpec, k: int) -> int:
    """|C_rho intersect X_*(T)_- intersect {det = k}|, by direct filtering."""
    return len(layer_points(rep, k))


def basic_series(rep: RepSpec, max_det: int) -> BasicFunction:
    """Fill every layer up to max_det with the coefficients c_mu(q^|-1|)."""
    if max_det < 0:
        raise ValueError("max_det must be >= 0")
    datum = rep.datum
    entries: dict[Weight, LaurentV] = {}
    for k in range(max_det + 1):
        pts = layer_points(rep, k)
        if not pts:
            continue
        constituents = _sym_constituents(rep, k)
        for mu in pts:
            total = LaurentV.zero()
            for lam, mult in constituents:
                if bruhat_leq(datum, mu, lam):
                    total = total + mult * lusztig_q(datum, lam, mu)
            if not total.is_zero():
                assert total.has_nonnegative_coeffs()
                entries[mu] = total
    series = WeightSeries(datum, entries, max_det)
    assert series.coeff(datum.zero()) == LaurentV.one()
    return BasicFunction(datum, rep, series, max_det)


def classical_limit_count(rep: RepSpec, mu: Weight) -> int:
    """Number of ways to write mu as a sum of rep weights, brute force.

    The grading pins the number of parts to det(mu) exactly, which bounds
    the enumeration.
    """
    datum = rep.datum
    k = datum.det(mu)
    if not isinstance(k, int) or k < 0:
        return 0
    copies = _det_one_copies(rep)

    def rec(idx: int, remaining: int, acc: Weight) -> int:
        if idx == len(copies):
            return 1 if remaining == 0 and acc == mu else 0
        total = 0
        current = acc
        for take in range(remaining + 1):
            total += rec(idx + 1, remaining - take, current)
            current = current + copies[idx]
        return total

    if not copies:
        return 1 if k == 0 and mu.is_zero() else 0
    return rec(0, k, datum.zero())


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _rational_power(qf: Fraction, exp: Fraction, vf: Optional[Fraction]) -> Fraction:
    exp = Fraction(exp)
    if exp.denominator == 1:
        return Fraction(qf) ** int(exp)
    if exp.denominator == 2 and vf is not None:
        return Fraction(vf) ** int(2 * exp)
    raise IrrationalHalfPower(
        f"q_F^{exp} is not rational for q_F = {qf}" + ("" if vf else " (no square root supplied)")
    )


def specialize(
    bf: BasicFunction,
    qf: Fraction,
    s: Fraction = Fraction(0),
    vf: Optional[Fraction] = None,
) -> list[tuple[Weight, Fraction]]:
    """Exact Cartan coefficients of f_{rho,s}: c_mu(q_F) q_F^{-<rho,mu>-s det mu}."""
    qf = Fraction(qf)
    if qf <= 1:
        raise ValueError("q_F must exceed 1")
    if vf is None:
        vf = rational_sqrt(qf)
    elif Fraction(vf) ** 2 != qf:
        raise ValueError("vf^2 must equal qf")
    rho = bf.datum.rho_bminus
    out = []
    for mu, poly in bf.sorted_items():
        value = poly.eval_q(Fraction(1, 1) / qf)
        expo = -Fraction(pair(rho, mu)) - Fraction(s) * bf.datum.det(mu)
        out.append((mu, value * _rational_power(qf, expo, vf)))
    return out


def l1_threshold(rep: RepSpec) -> Fraction:
    """The exponent bound max over rep weights of <rho_Bminus, weight>."""
    rho = rep.datum.rho_bminus
    return max(Fraction(pair(rho, w)) for w, _ in rep.supp)

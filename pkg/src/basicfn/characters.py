"""Weight multiplicities and symmetric-power decomposition for dual-group
representations.

Irreducible characters follow the B^- highest weight convention: highest
weights are anti-dominant cocharacters, and the full weight multiset of
V(lambda) consists of Weyl orbits of the anti-dominant weights mu <= lambda
in the B^- Bruhat order.  Multiplicities come from Freudenthal's recursion
run against the opposite positive system, with the datum's cached
W-invariant form supplying the inner products.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import comb
from typing import Optional, Sequence, Union

from .errors import NegativeMultiplicity, NotAntiDominant, NotWInvariant
from .root_datum import (
    BasedRootDatum,
    Weight,
    antidominant_representative,
    bruhat_leq,
    is_antidominant,
    pair,
    weyl_orbit,
)

IRREDUCIBLE = "irreducible"
COMPOSITE = "composite"


@dataclass(frozen=True)
class CharacterTable:
    """Finite weight-to-multiplicity map, W-invariant for true characters."""

    datum: BasedRootDatum
    weights: dict[Weight, int]
    tag: Union[str, tuple[str, Weight]] = COMPOSITE

    def __post_init__(self):
        object.__setattr__(
            self, "weights", {w: m for w, m in self.weights.items() if m != 0}
        )

    @property
    def dimension(self) -> int:
        return sum(self.weights.values())

    def mult(self, mu: Weight) -> int:
        return self.weights.get(mu, 0)

    def check_w_invariant(self):
        for mu, m in self.weights.items():
            for nu in weyl_orbit(self.datum, mu):
                if self.weights.get(nu, 0) != m:
                    raise NotWInvariant(f"multiplicity differs on the orbit of {mu}")

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.weights.items(), key=lambda kv: kv[0].coords)


@dataclass(frozen=True)
class RepSpec:
    """A representation given by its weight multiset (plus optional highest
    weight tag, for irreducibles)."""

    datum: BasedRootDatum
    supp: tuple[tuple[Weight, int], ...]
    highest_weight: Optional[Weight] = None

    def __post_init__(self):
        for w, m in self.supp:
            if w.side != "cocharacter" or not w.is_integral():
                raise ValueError("rep weights live on the integral cocharacter lattice")
            if m < 1:
                raise ValueError("weight multiplicities must be >= 1")
        if self.highest_weight is not None:
            table = irreducible_weights(self.datum, self.highest_weight)
            if dict(self.supp) != table.weights:
                raise ValueError("supp does not match the irreducible weight multiset")

    @staticmethod
    def from_highest_weight(datum: BasedRootDatum, hw: Weight) -> "RepSpec":
        table = irreducible_weights(datum, hw)
        supp = tuple(sorted(table.weights.items(), key=lambda kv: kv[0].coords))
        return RepSpec(datum, supp, hw)

    @staticmethod
    def from_weights(
        datum: BasedRootDatum,
        weights: Sequence[tuple[Weight, int]],
        require_det_one: bool = True,
    ) -> "RepSpec":
        """Bare multiset constructor for possibly reducible inputs."""
        supp = tuple(sorted(weights, key=lambda kv: kv[0].coords))
        rep = RepSpec(datum, supp)
        if require_det_one and not rep.has_det_one_weights():
            raise ValueError("rep weights must all satisfy det_G = 1")
        return rep

    def has_det_one_weights(self) -> bool:
        return all(self.datum.det(w) == 1 for w, _ in self.supp)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.supp)

    def labeled_weights(self) -> list[Weight]:
        """Weights repeated by multiplicity."""
        return [w for w, m in self.supp for _ in range(m)]

    def character_table(self) -> CharacterTable:
        return CharacterTable(self.datum, dict(self.supp), COMPOSITE)


# -- irreducible weight multisets ------------------------------------------


def _antidominant_submodule_weights(d: BasedRootDatum, lam: Weight) -> list[tuple[Weight, int]]:
    """Anti-dominant mu <= lam, each with its level sum(n_i) where
    lam - mu = sum n_i (-alpha_i^)."""
    if not d.simple_coroots:
        return [(lam, 0)]
    bound_frac = pair(d.rho_bminus, lam)
    bound = int(bound_frac)  # levels are integers <= <rho_B^-, lam>
    found = []
    ranges = [range(bound + 1)] * len(d.simple_coroots)
    for ns in iproduct(*ranges):
        if sum(ns) > bound:
            continue
        mu = lam
        for n, ac in zip(ns, d.simple_coroots):
            mu = mu + ac.scale(n)
        if is_antidominant(d, mu):
            found.append((mu, sum(ns)))
    return found


def irreducible_weights(d: BasedRootDatum, lam: Weight) -> CharacterTable:
    """Full weight multiset of V(lambda), B^- convention, via Freudenthal."""
    if not is_antidominant(d, lam):
        raise NotAntiDominant(f"{lam} is not anti-dominant")
    if not lam.is_integral():
        raise NotAntiDominant("highest weights must be integral")
    rho = d.rho_check_bminus
    lam_norm = d.form(lam + rho, lam + rho)
    neg_coroots = [(-c) for _, c in d.positive_root_pairs]

    candidates = _antidominant_submodule_weights(d, lam)
    candidates.sort(key=lambda t: t[1])
    mults: dict[Weight, int] = {}
    for mu, level in candidates:
        if level == 0:
            mults[mu] = 1
            continue
        rhs = Fraction(0)
        for gamma in neg_coroots:
            j = 1
            while True:
                nu = mu + gamma.scale(j)  # j steps closer to lam
                m = mults.get(antidominant_representative(d, nu))
                if m is None:  # left the weight set; strings are unbroken
                    break
                rhs += m * d.form(nu, gamma)
                j += 1
        denom = lam_norm - d.form(mu + rho, mu + rho)
        value = 2 * rhs / denom
        assert value.denominator == 1 and value >= 0, f"Freudenthal failed at {mu}"
        mults[mu] = int(value)

    table: dict[Weight, int] = {}
    for mu, m in mults.items():
        if m == 0:
            continue
        for nu in weyl_orbit(d, mu):
            table[nu] = m
    return CharacterTable(d, table, (IRREDUCIBLE, lam))


def weyl_dim(d: BasedRootDatum, lam: Weight) -> int:
    """Weyl dimension formula in the B^- convention, exact."""
    if not is_antidominant(d, lam):
        raise NotAntiDominant(f"{lam} is not anti-dominant")
    rho = d.rho_check_bminus
    result = Fraction(1)
    for alpha, _ in d.positive_root_pairs:
        result *= Fraction(pair(alpha, lam + rho)) / Fraction(pair(alpha, rho))
    assert result.denominator == 1 and result > 0
    return int(result)


# -- symmetric powers -------------------------------------------------------


def sym_power_character(rep: RepSpec, k: int) -> CharacterTable:
    """Weight multiset of Sym^k V by the power-sum recursion.

    k h_k = sum_{i=1..k} p_i h_{k-i} on weight tables, with exact rational
    intermediates; the final table is asserted integral.
    """
    if k < 0:
        raise ValueError("symmetric power degree must be >= 0")
    datum = rep.datum
    zero = datum.zero()
    h: list[dict[Weight, Fraction]] = [{zero: Fraction(1)}]
    base = dict(rep.supp)
    for degree in range(1, k + 1):
        acc: dict[Weight, Fraction] = {}
        for i in range(1, degree + 1):
            # p_i: nu -> i*nu with the original multiplicities
            for nu, m in base.items():
                scaled = nu.scale(i)
                for w, c in h[degree - i].items():
                    key = w + scaled
                    acc[key] = acc.get(key, Fraction(0)) + m * c
        h.append({w: c / degree for w, c in acc.items() if c})
    table = {}
    for w, c in h[k].items():
        if c.denominator != 1:
            raise NegativeMultiplicity(f"non-integral multiplicity {c} at {w}")
        if c:
            table[w] = int(c)
    return CharacterTable(datum, table, COMPOSITE)


def sym_power_by_enumeration(rep: RepSpec, k: int) -> CharacterTable:
    """Direct multiset enumeration of Sym^k; the small-input oracle."""
    labeled = rep.labeled_weights()
    datum = rep.datum
    table: dict[Weight, int] = {}

    def rec(idx: int, remaining: int, acc: Weight):
        if idx == len(labeled) - 1:
            w = acc + labeled[idx].scale(remaining) if remaining else acc
            table[w] = table.get(w, 0) + 1
            return
        for take in range(remaining + 1):
            rec(idx + 1, remaining - take, acc + labeled[idx].scale(take))

    if not labeled:
        if k == 0:
            table[datum.zero()] = 1
        return CharacterTable(datum, table, COMPOSITE)
    rec(0, k, datum.zero())
    return CharacterTable(datum, table, COMPOSITE)


# -- decomposition into irreducibles ---------------------------------------


def _generic_antidominant_functional(d: BasedRootDatum, seed: int) -> tuple[Fraction, ...]:
    """Strictly anti-dominant rational functional with a seeded perturbation."""
    rng = random.Random(seed)
    rho = d.rho_bminus
    eps = [Fraction(rng.randint(1, 97), 99991) for _ in range(d.rank)]
    return tuple(Fraction(c) + e for c, e in zip(rho.coords, eps))


def decompose_character(
    t: CharacterTable, seed: int = 0
) -> list[tuple[Weight, int]]:
    """Decompose a W-invariant character into irreducibles.

    Repeatedly strips the constituent whose highest weight maximizes a
    fixed strictly anti-dominant functional (lexicographic tie-break).
    """
    t.check_w_invariant()
    if any(m < 0 for m in t.weights.values()):
        raise NegativeMultiplicity("character table has negative multiplicities")
    d = t.datum
    zeta = _generic_antidominant_functional(d, seed)

    def key(w: Weight):
        score = sum((z * Fraction(c) for z, c in zip(zeta, w.coords)), Fraction(0))
        return (score, w.coords)

    remaining = dict(t.weights)
    result: list[tuple[Weight, int]] = []
    while remaining:
        lam = max(remaining, key=key)
        if not is_antidominant(d, lam):
            raise NotWInvariant(f"leading weight {lam} is not anti-dominant")
        mult = remaining[lam]
        if mult < 0:
            raise NegativeMultiplicity(f"negative leading multiplicity at {lam}")
        irr = irreducible_weights(d, lam)
        for w, m in irr.weights.items():
            newval = remaining.get(w, 0) - mult * m
            if newval < 0:
                raise NegativeMultiplicity(f"stripping V({lam}) drove {w} below zero")
            if newval:
                remaining[w] = newval
            else:
                remaining.pop(w, None)
        result.append((lam, mult))
    result.sort(key=lambda kv: kv[0].coords)
    return result

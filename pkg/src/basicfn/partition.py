"""q-analogue vector partition functions over a strongly convex multiset.

P_psi(nu; q) counts the expressions of nu as a nonnegative integer
combination of the multiset items, graded by the total number of parts.
Items carrying multiplicity m contribute a stars-and-bars factor, i.e. m
labeled copies.

Strong convexity is certified by an exact rational functional ell with
<ell, psi> >= 1 for every item; the certificate both proves termination of
the dynamic program and bounds the recursion depth.  When no such
functional exists, Fourier-Motzkin elimination produces a convex
combination of the items equal to zero, which is returned as the witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import NotStronglyConvex, PartitionCapExceeded, PsiNotCertified
from .polyring import LaurentV
from .root_datum import BasedRootDatum, Weight

PARTITION_CAP = 64


def _eliminate(rows: list[tuple[list[Fraction], Fraction, list[Fraction]]], var: int):
    """One Fourier-Motzkin step on constraints  coeffs . x >= rhs.

    Each row carries the nonnegative multipliers expressing it in terms of
    the original constraints, so infeasibility yields a Farkas certificate.
    """
    lowers, uppers, rest = [], [], []
    for coeffs, rhs, mults in rows:
        a = coeffs[var]
        if a > 0:
            lowers.append((coeffs, rhs, mults))
        elif a < 0:
            uppers.append((coeffs, rhs, mults))
        else:
            rest.append((coeffs, rhs, mults))
    for lc, lr, lm in lowers:
        for uc, ur, um in uppers:
            s, t = -uc[var], lc[var]
            coeffs = [s * a + t * b for a, b in zip(lc, uc)]
            rhs = s * lr + t * ur
            mults = [s * a + t * b for a, b in zip(lm, um)]
            rest.append((coeffs, rhs, mults))
    return rest


def positive_functional(items: Sequence[Weight]) -> tuple[Fraction, ...]:
    """Exact rational ell with <ell, psi> >= 1 for every item.

    Raises NotStronglyConvex with a convex combination witnessing 0 in the
    hull of the items when no such functional exists.
    """
    if not items:
        raise ValueError("positive_functional needs a nonempty item list")
    rank = items[0].rank
    nitems = len(items)
    rows = [
        ([Fraction(x) for x in psi.coords], Fraction(1),
         [Fraction(int(i == j)) for j in range(nitems)])
        for i, psi in enumerate(items)
    ]
    stages = [rows]
    for var in range(rank):
        rows = _eliminate(rows, var)
        stages.append(rows)
    for coeffs, rhs, mults in rows:
        if rhs > 0:  # 0 >= rhs with rhs > 0: infeasible
            total = sum(mults)
            witness = [
                (items[i], mults[i] / total) for i in range(nitems) if mults[i] != 0
            ]
            raise NotStronglyConvex(
                "0 lies in the convex hull of the items", witness=witness
            )
    # Feasible: back-substitute through the elimination stages.
    ell = [Fraction(0)] * rank
    for var in range(rank - 1, -1, -1):
        lowers, uppers = [], []
        for coeffs, rhs, _ in stages[var]:
            a = coeffs[var]
            if a == 0:
                continue
            bound = (rhs - sum(coeffs[j] * ell[j] for j in range(var + 1, rank))) / a
            (lowers if a > 0 else uppers).append(bound)
        if lowers:
            ell[var] = max(lowers)
        elif uppers:
            ell[var] = min(uppers)
    return tuple(ell)


@dataclass(frozen=True)
class WeightMultiset:
    """Weight multiset with a stored strict-positivity certificate.

    ``kind`` records how the multiset arose ("roots" for the negated
    positive coroots, "basic" for a basic-function multiset, "custom"
    otherwise); consumers use it to decide which structural assertions
    apply.
    """

    datum: BasedRootDatum
    items: tuple[tuple[Weight, int], ...]
    functional: tuple[Fraction, ...]
    kind: str = "custom"
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.items:
            raise PsiNotCertified("empty weight multiset")
        sides = {w.side for w, _ in self.items}
        if len(sides) != 1:
            raise PsiNotCertified("items live on different lattice sides")
        for w, m in self.items:
            if w.is_zero():
                raise PsiNotCertified("zero weight in multiset")
            if not w.is_integral():
                raise PsiNotCertified("multiset items must be integral")
            if m < 1:
                raise PsiNotCertified("multiplicities must be >= 1")
            if self._score(w) < 1:
                raise PsiNotCertified(f"certificate fails on {w}")

    def _score(self, w: Weight) -> Fraction:
        return sum((f * Fraction(c) for f, c in zip(self.functional, w.coords)), Fraction(0))

    @property
    def size(self) -> int:
        return sum(m for _, m in self.items)

    def __hash__(self):
        return hash((self.datum, self.items, self.functional, self.kind))


def certify_multiset(
    datum: BasedRootDatum,
    items: Sequence[tuple[Weight, int]],
    kind: str = "custom",
) -> WeightMultiset:
    """Build a WeightMultiset, computing the positivity certificate."""
    ell = positive_functional([w for w, _ in items])
    return WeightMultiset(datum, tuple(items), ell, kind)


def kostant_partition_q(
    psi: WeightMultiset, nu: Weight, cap: int = PARTITION_CAP
) -> LaurentV:
    """The coefficient P_psi(nu; q) of the product expansion over psi.

    Equals the sum over all ways nu = sum a_i psi_i (a_i >= 0, items with
    multiplicity counted stars-and-bars) of q^{sum a_i}.  Returns 0 off the
    cone.  Memoized per multiset; the memo key is (item index, nu).
    """
    if nu.side != psi.items[0][0].side:
        raise ValueError("weight lies on the wrong lattice side")
    if not nu.is_integral():
        raise ValueError("partition queries take integral weights")
    score = psi._score(nu)
    if score < 0:
        return LaurentV.zero()
    if score > cap:
        raise PartitionCapExceeded(
            f"<ell, nu> = {score} exceeds cap {cap}; raise the cap explicitly"
        )
    items = psi.items
    memo = psi._memo

    def rec(i: int, target: Weight) -> LaurentV:
        s = psi._score(target)
        if s < 0:
            return LaurentV.zero()
        if s == 0:
            return LaurentV.one() if target.is_zero() else LaurentV.zero()
        if i == 0:
            return LaurentV.zero()
        key = (i, target.coords)
        hit = memo.get(key)
        if hit is not None:
            return hit
        w, mult = items[i - 1]
        acc = LaurentV.zero()
        amax = int(s / psi._score(w))
        current = target
        for a in range(amax + 1):
            sub = rec(i - 1, current)
            if not sub.is_zero():
                acc = acc + sub.shift(2 * a) * comb(a + mult - 1, mult - 1)
            current = current - w
        memo[key] = acc
        return acc

    return rec(len(items), nu)

"""Lusztig q-analogues and their generalization over arbitrary certified
weight multisets.

The alternating sum runs over the Weyl group with arguments shifted by the
half sum of negative coroots; all shifts cancel to integral vectors, which
is asserted before each partition query.  The classical q-analogue is the
special case where the multiset consists of the negated positive coroots
("roots" kind); the basic-function case appends the negated representation
weights ("basic" kind).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import RepSpec
from .errors import PsiNotCertified
from .partition import PARTITION_CAP, WeightMultiset, certify_multiset, kostant_partition_q
from .polyring import LaurentV
from .root_datum import BasedRootDatum, Weight, bruhat_leq, is_antidominant

ROOTS_KIND = "roots"
BASIC_KIND = "basic"


@dataclass(frozen=True)
class KFRequest:
    datum: BasedRootDatum
    lam: Weight
    mu: Weight
    psi: WeightMultiset

    def __post_init__(self):
        if not is_antidominant(self.datum, self.lam):
            raise PsiNotCertified(f"lambda = {self.lam} must be anti-dominant")
        if not (self.lam.is_integral() and self.mu.is_integral()):
            raise PsiNotCertified("lambda and mu must be integral")


@lru_cache(maxsize=None)
def std_psi(d: BasedRootDatum) -> WeightMultiset:
    """Negated positive coroots: the multiset recovering Lusztig's q-analogue."""
    items = tuple(((-coroot), 1) for _, coroot in d.positive_root_pairs)
    return certify_multiset(d, items, ROOTS_KIND)


@lru_cache(maxsize=None)
def basic_psi(rep: RepSpec) -> WeightMultiset:
    """Negated rep weights joined with the negated positive coroots.

    This is the multiset whose generalized Kostka-Foulkes polynomials at
    lambda = 0 encode the basic-function coefficients.
    """
    d = rep.datum
    items = {}
    for w, m in rep.supp:
        key = -w
        items[key] = items.get(key, 0) + m
    for _, coroot in d.positive_root_pairs:
        key = -coroot
        items[key] = items.get(key, 0) + 1
    ordered = tuple(sorted(items.items(), key=lambda kv: kv[0].coords))
    return certify_multiset(d, ordered, BASIC_KIND)


def generalized_kf(req: KFRequest, cap: int = PARTITION_CAP) -> LaurentV:
    """The alternating Weyl sum of partition values for the request."""
    d, lam, mu, psi = req.datum, req.lam, req.mu, req.psi
    rho = d.rho_check_bminus
    shifted_lam = lam + rho
    shifted_mu = mu + rho
    total = LaurentV.zero()
    for w in d.weyl_elements:
        arg = w.apply(shifted_lam) - shifted_mu
        assert arg.is_integral(), "rho shifts must cancel to an integral argument"
        value = kostant_partition_q(psi, arg, cap=cap)
        if not value.is_zero():
            total = total + (value if w.sign > 0 else -value)
    if psi.kind == ROOTS_KIND:
        if mu == lam:
            assert total == LaurentV.one(), "K_{lambda,lambda} must be 1"
        if not total.is_zero():
            assert bruhat_leq(d, mu, lam), "nonzero value requires mu <= lambda"
        if is_antidominant(d, mu):
            assert total.has_nonnegative_coeffs() or total.is_zero()
    if psi.kind == BASIC_KIND and lam.is_zero() and is_antidominant(d, mu):
        det = d.det(mu)
        if det < 0:
            assert total.is_zero(), "vanishing off the nonnegative grading"
        elif not total.is_zero():
            assert total.has_nonnegative_coeffs()
            assert total.min_v_exponent() >= 2 * det, "q^det must divide the value"
    return total


def lusztig_q(d: BasedRootDatum, lam: Weight, mu: Weight, cap: int = PARTITION_CAP) -> LaurentV:
    """K_{lambda,mu}(q) in the anti-dominant convention."""
    return generalized_kf(KFRequest(d, lam, mu, std_psi(d)), cap=cap)

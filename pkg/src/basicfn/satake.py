"""Change of basis between Hecke indicators and irreducible characters,
zonal spherical evaluation, and the truncated L-factor identity.

Evaluation conventions, fixed once and validated by the round-trip
invariant (expanding tr V(lambda) over the Hecke basis and evaluating each
indicator by the spherical formula must reproduce the character value):

* a torus point c acts on an integral cocharacter nu by c^nu = prod c_i^{nu_i};
* the Weyl sum runs over w |-> c^{w nu}, using each element's own matrix
  (summing over the group absorbs the inversion);
* the factor for a positive coroot alpha^ is
  (1 - q_F^{-1} c^{w alpha^}) / (1 - c^{w alpha^}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .basic_fn import BasicFunction, basic_series, rational_sqrt
from .characters import RepSpec, irreducible_weights
from .errors import DegenerateParameter, NotSaturated
from .kostka import lusztig_q
from .polyring import LaurentV
from .root_datum import BasedRootDatum, Weight, is_antidominant, pair


@dataclass(frozen=True)
class SatakeParameter:
    """A rational point of the dual torus with the residue cardinality."""

    coords: tuple[Fraction, ...]
    qf: Fraction
    vf: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        object.__setattr__(self, "qf", Fraction(self.qf))
        object.__setattr__(self, "vf", Fraction(self.vf))
        if any(c == 0 for c in self.coords):
            raise ValueError("Satake parameter coordinates must be nonzero")
        if self.qf <= 1:
            raise ValueError("q_F must exceed 1")
        if self.vf ** 2 != self.qf:
            raise ValueError("vf^2 must equal qf")

    @staticmethod
    def make(coords: Iterable, qf) -> "SatakeParameter":
        qf = Fraction(qf)
        vf = rational_sqrt(qf)
        if vf is None:
            raise ValueError(f"q_F = {qf} is not a square of a rational")
        return SatakeParameter(tuple(Fraction(c) for c in coords), qf, vf)

    def power(self, nu: Weight) -> Fraction:
        """c^nu for an integral cocharacter nu."""
        assert nu.is_integral()
        value = Fraction(1)
        for c, e in zip(self.coords, nu.coords):
            value *= c ** int(e)
        return value

    def is_nondegenerate(self, d: BasedRootDatum) -> bool:
        return all(self.power(coroot) != 1 for _, coroot in d.positive_root_pairs)


def char_eval(d: BasedRootDatum, lam: Weight, c: SatakeParameter) -> Fraction:
    """tr V(lambda) at the torus point, exactly."""
    table = irreducible_weights(d, lam)
    return sum((m * c.power(mu) for mu, m in table.weights.items()), Fraction(0))


@dataclass(frozen=True)
class KLMatrix:
    """Triangular change of basis tr V(lambda) = sum_mu M[lambda][mu] S(1_mu).

    Entries are Laurent polynomials in v; the inverse is computed by exact
    back-substitution along a linear extension of the Bruhat order and
    verified against the identity.
    """

    datum: BasedRootDatum
    weights: tuple[Weight, ...]
    entries: dict[tuple[Weight, Weight], LaurentV]
    inverse: dict[tuple[Weight, Weight], LaurentV]

    def entry(self, lam: Weight, mu: Weight) -> LaurentV:
        return self.entries.get((lam, mu), LaurentV.zero())

    def inverse_entry(self, mu: Weight, lam: Weight) -> LaurentV:
        return self.inverse.get((mu, lam), LaurentV.zero())


def _divide_by_monomial(p: LaurentV, mono: LaurentV) -> LaurentV:
    (exp, coeff), = mono.terms.items()
    out = {}
    for e, c in p.terms.items():
        q, r = divmod(c, coeff)
        if r:
            raise ValueError("entry not divisible by the diagonal monomial")
        out[e - exp] = q
    return LaurentV(out)


def kato_lusztig_matrix(d: BasedRootDatum, weights: Sequence[Weight]) -> KLMatrix:
    """Build the change-of-basis matrix over a Bruhat-saturated weight set."""
    wset = []
    for w in weights:
        if not is_antidominant(d, w):
            raise NotSaturated(f"{w} is not anti-dominant")
        if w not in wset:
            wset.append(w)
    have = set(wset)
    for lam in list(wset):
        table = irreducible_weights(d, lam)
        for mu in table.weights:
            if is_antidominant(d, mu) and mu not in have:
                raise NotSaturated(f"missing {mu} <= {lam} from the weight set")
    # ascending along the Bruhat order: <rho_Bminus, .> strictly increases
    rho = d.rho_bminus
    wset.sort(key=lambda w: (d.det(w), Fraction(pair(rho, w)), w.coords))

    entries: dict[tuple[Weight, Weight], LaurentV] = {}
    for lam in wset:
        table = irreducible_weights(d, lam)
        for mu in wset:
            if table.mult(mu) == 0 or not is_antidominant(d, mu):
                continue
            kq = lusztig_q(d, lam, mu)
            if kq.is_zero():
                continue
            shift = -2 * Fraction(pair(rho, mu))
            assert shift.denominator == 1
            entries[(lam, mu)] = kq.reciprocal_variable().shift(int(shift))

    n = len(wset)
    inv: dict[tuple[Weight, Weight], LaurentV] = {}
    for j, lam in enumerate(wset):  # solve M . x_col(lam) = e_lam
        col: dict[Weight, LaurentV] = {}
        for i in range(n):
            mu = wset[i]
            acc = LaurentV.one() if mu == lam else LaurentV.zero()
            for k in range(i):
                m_ik = entries.get((mu, wset[k]))
                x_k = col.get(wset[k])
                if m_ik is not None and x_k is not None:
                    acc = acc - m_ik * x_k
            if not acc.is_zero():
                col[mu] = _divide_by_monomial(acc, entries[(mu, mu)])
        for mu, val in col.items():
            inv[(mu, lam)] = val

    mat = KLMatrix(d, tuple(wset), entries, inv)
    _assert_inverse(mat)
    return mat


def _assert_inverse(mat: KLMatrix):
    for lam in mat.weights:
        for nu in mat.weights:
            acc = LaurentV.zero()
            for mu in mat.weights:
                acc = acc + mat.entry(lam, mu) * mat.inverse_entry(mu, nu)
            expected = LaurentV.one() if lam == nu else LaurentV.zero()
            assert acc == expected, "M . M^-1 differs from the identity"


def _weyl_transforms(d: BasedRootDatum, c: SatakeParameter) -> list[tuple]:
    """For each w, the tuple t with t^nu = c^{w nu}."""
    out = []
    for w in d.weyl_elements:
        m = w.cochar_rows
        t = tuple(
            _prod(c.coords[j] ** m[j][k] for j in range(d.rank)) for k in range(d.rank)
        )
        out.append((w, t))
    return out


def _prod(xs) -> Fraction:
    value = Fraction(1)
    for x in xs:
        value *= x
    return value


def _power(t: tuple, nu: Weight) -> Fraction:
    value = Fraction(1)
    for c, e in zip(t, nu.coords):
        value *= Fraction(c) ** int(e)
    return value


def macdonald_spherical(d: BasedRootDatum, mu: Weight, c: SatakeParameter) -> Fraction:
    """Value of the zonal spherical function pairing at mu, exactly.

    mu must be anti-dominant; the parameter must avoid the root hyperplanes.
    """
    if not is_antidominant(d, mu):
        raise ValueError("spherical evaluation is stated for anti-dominant mu")
    qinv = Fraction(1, 1) / c.qf
    coroots = [coroot for _, coroot in d.positive_root_pairs]
    total = Fraction(0)
    for w, t in _weyl_transforms(d, c):
        term = _power(t, mu)
        for alpha_check in coroots:
            x = _power(t, alpha_check)
            if x == 1:
                raise DegenerateParameter(
                    f"parameter lies on the hyperplane of {alpha_check}"
                )
            term *= (1 - qinv * x) / (1 - x)
        total += term
    stab = sum(
        (qinv ** w.length for w in d.weyl_elements if w.apply(mu) == mu), Fraction(0)
    )
    rho_pairing = 2 * Fraction(pair(d.rho_bminus, mu))
    assert rho_pairing.denominator == 1
    return (c.vf ** int(rho_pairing)) / stab * total


def satake_round_trip(d: BasedRootDatum, lam: Weight, c: SatakeParameter) -> tuple[Fraction, Fraction]:
    """(character value, value reassembled through the Hecke basis)."""
    table = irreducible_weights(d, lam)
    wset = [mu for mu in table.weights if is_antidominant(d, mu)]
    mat = kato_lusztig_matrix(d, wset)
    total = Fraction(0)
    for mu in mat.weights:
        entry = mat.entry(lam, mu)
        if not entry.is_zero():
            total += entry.eval_v(c.vf) * macdonald_spherical(d, mu, c)
    return char_eval(d, lam, c), total


def lfactor_series(rep: RepSpec, c: SatakeParameter, max_k: int) -> list[Fraction]:
    """Coefficients of the L-factor as a power series, two ways, asserted equal.

    Route (a) evaluates the symmetric power characters; route (b) expands
    the inverse characteristic polynomial over the weight multiset.
    """
    from .characters import sym_power_character

    route_a = []
    for k in range(max_k + 1):
        table = sym_power_character(rep, k)
        route_a.append(
            sum((m * c.power(w) for w, m in table.weights.items()), Fraction(0))
        )
    route_b = [Fraction(1)] + [Fraction(0)] * max_k
    for w in rep.labeled_weights():
        ratio = c.power(w)
        nxt = [Fraction(0)] * (max_k + 1)
        for k in range(max_k + 1):
            power = Fraction(1)
            for j in range(k + 1):
                nxt[k] += route_b[k - j] * power
                power *= ratio
        route_b = nxt
    assert route_a == route_b, "L-factor routes disagree"
    return route_a


def verify_l_identity(rep: RepSpec, c: SatakeParameter, max_k: int) -> dict:
    """Degree-by-degree check of the L-factor against the spherical side."""
    datum = rep.datum
    if not c.is_nondegenerate(datum):
        raise DegenerateParameter("parameter lies on a root hyperplane")
    lhs = lfactor_series(rep, c, max_k)
    bf = basic_series(rep, max_k)
    qinv = Fraction(1, 1) / c.qf
    rho = datum.rho_bminus
    rhs = [Fraction(0)] * (max_k + 1)
    for mu, poly in bf.sorted_items():
        k = datum.det(mu)
        coeff = poly.eval_q(qinv)
        rho_pairing = -2 * Fraction(pair(rho, mu))
        assert rho_pairing.denominator == 1
        rhs[k] += coeff * c.vf ** int(rho_pairing) * macdonald_spherical(datum, mu, c)
    checks = []
    for k in range(max_k + 1):
        checks.append(
            {
                "degree": k,
                "lhs": str(lhs[k]),
                "rhs": str(rhs[k]),
                "equal": lhs[k] == rhs[k],
            }
        )
    return {"ok": all(ch["equal"] for ch in checks), "checks": checks}

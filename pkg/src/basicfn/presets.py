"""Golden data: GL(n) with its standard representation, GSp(4) with the
spin representation, closed-form oracles for both, and the lattice-level
central extension recipe producing them from simply connected data.

Coordinate choices keep both lattices equal to Z^rank with the dot-product
pairing:

* GL(n) uses the standard cocharacter basis; the grading character is
  (1, ..., 1) and the rep weights are the basis vectors.
* GSp(4) is presented on the basis (alpha^, beta^, gamma^) of its
  cocharacter lattice; the eps-coordinate description on the sublattice
  {x1 + x4 = x2 + x3} of Z^4 is reachable through the conversion maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Optional, Sequence, Union

from . import linalg
from .characters import RepSpec, irreducible_weights
from .errors import NotSimplyConnected, XiNotAntiDominant
from .polyring import LaurentV, WeightSeries, geometric_expand, series_mul
from .root_datum import BasedRootDatum, Weight, is_antidominant, pair, validate_datum


@dataclass(frozen=True)
class Preset:
    """A datum with a distinguished representation and its closed-form checkers."""

    label: str
    datum: BasedRootDatum
    rep: RepSpec
    oracles: dict[str, Callable] = field(default_factory=dict, compare=False, repr=False)


def gl_preset(n: int) -> Preset:
    """GL(n) with the standard representation; grading is the determinant."""
    if n < 1:
        raise ValueError("n must be >= 1")
    roots = [[0] * n for _ in range(n - 1)]
    for i in range(n - 1):
        roots[i][i], roots[i][i + 1] = 1, -1
    datum = validate_datum(roots, [r[:] for r in roots], [1] * n, label=f"gl{n}")
    weights = tuple(
        (Weight.cochar(tuple(int(i == j) for j in range(n))), 1) for i in range(n)
    )
    hw = Weight.cochar((0,) * (n - 1) + (1,))
    rep = RepSpec(datum, weights, hw)
    preset = Preset(f"gl{n}", datum, rep)
    preset.oracles["closed_cmu"] = lambda mu: gl_closed_cmu(n, mu)
    return preset


GSP4_SPIN_WEIGHTS = ((0, 0, 1), (0, -1, 1), (-1, -1, 1), (-1, -2, 1))


def gsp4_preset() -> Preset:
    """GSp(4) with the spin representation of its dual, in the basis
    (alpha^, beta^, gamma^); the grading is the similitude pairing."""
    datum = validate_datum(
        simple_roots=[[2, -1, 0], [-2, 2, 1]],
        simple_coroots=[[1, 0, 0], [0, 1, 0]],
        det_grading=[0, 0, 1],
        label="gsp4",
    )
    weights = tuple((Weight.cochar(c), 1) for c in GSP4_SPIN_WEIGHTS)
    hw = Weight.cochar((-1, -2, 1))
    rep = RepSpec(datum, tuple(sorted(weights, key=lambda kv: kv[0].coords)), hw)
    preset = Preset("gsp4", datum, rep)
    preset.oracles["cone_member"] = gsp4_cone_member
    return preset


def gsp4_basis_to_eps(mu: Weight) -> tuple[int, int, int, int]:
    """(a, b, c) on (alpha^, beta^, gamma^) -> coordinates in Z^4."""
    a, b, c = mu.coords
    return (a + c, -a + b + c, a - b, -a)


def gsp4_eps_to_basis(x: Sequence[int]) -> Weight:
    """eps-coordinates -> basis coordinates; requires x1 + x4 = x2 + x3."""
    x1, x2, x3, x4 = x
    if x1 + x4 != x2 + x3:
        raise ValueError("not in the GSp(4) cocharacter lattice")
    a = -x4
    b = a - x3
    c = x1 - a
    return Weight.cochar((a, b, c))


def gsp4_cone_member(mu: Union[Weight, Sequence[int]]) -> bool:
    """Membership of C_spin intersect X_*(T)_- by the closed inequalities."""
    if isinstance(mu, Weight):
        x1, x2, x3, x4 = gsp4_basis_to_eps(mu)
    else:
        x1, x2, x3, x4 = mu
        if x1 + x4 != x2 + x3:
            return False
    return 0 <= x1 <= x2 <= x3


def gl_closed_cmu(n: int, mu: Weight) -> LaurentV:
    """Closed-form monomial coefficient for GL(n): q^{sum_i mu_i (n-i)} on
    the nonnegative anti-dominant cone, else 0."""
    coords = mu.coords
    if any(c < 0 for c in coords):
        return LaurentV.zero()
    if any(coords[i] > coords[i + 1] for i in range(n - 1)):
        return LaurentV.zero()
    exponent = sum(int(coords[i]) * (n - 1 - i) for i in range(n))
    return LaurentV.q_power(exponent)


def gl_product_series(n: int, max_det: int) -> WeightSeries:
    """Truncated expansion of the closed generating product for GL(n)."""
    preset = gl_preset(n)
    datum = preset.datum
    series = WeightSeries.one(datum, max_det)
    for i in range(1, n + 1):
        lam_i = Weight.cochar(tuple(0 if j < n - i else 1 for j in range(n)))
        factor = geometric_expand(
            datum, lam_i, LaurentV.q_power(i * (i - 1) // 2), max_det
        )
        series = series_mul(series, factor)
    return series


# -- simply connected inputs for the extension recipe -----------------------


def sl_datum(n: int) -> BasedRootDatum:
    """SL(n) in simple coroot coordinates."""
    if n < 2:
        raise ValueError("n must be >= 2")
    r = n - 1
    roots = [[0] * r for _ in range(r)]
    for i in range(r):
        roots[i][i] = 2
        if i > 0:
            roots[i][i - 1] = -1
        if i + 1 < r:
            roots[i][i + 1] = -1
    coroots = [[int(i == j) for j in range(r)] for i in range(r)]
    return validate_datum(roots, coroots, [0] * r, label=f"sl{n}")


def sp4_datum() -> BasedRootDatum:
    """Sp(4) in simple coroot coordinates (alpha short, beta long)."""
    return validate_datum(
        simple_roots=[[2, -1], [-2, 2]],
        simple_coroots=[[1, 0], [0, 1]],
        det_grading=[0, 0],
        label="sp4",
    )


def ngo_extend(d0: BasedRootDatum, xi_bar: Sequence[int]) -> Preset:
    """Central extension of a simply connected datum by the grading torus.

    ``xi_bar`` is an anti-dominant coweight of the adjoint torus, given by
    its pairings with the simple roots.  The extended cocharacter lattice
    is spanned by the simple coroots together with the lift (xi_bar, 1);
    in that basis the coroots are the first standard vectors, each root
    acquires the extra coordinate <alpha_i, xi_bar>, the grading is the
    last coordinate, and the representation is the irreducible with
    highest weight (0, ..., 0, 1).
    """
    r = len(d0.simple_roots)
    if r != d0.rank:
        raise NotSimplyConnected("datum must be semisimple (rank equals root number)")
    coroot_rows = [list(c.coords) for c in d0.simple_coroots]
    if abs(linalg.det(coroot_rows)) != 1:
        raise NotSimplyConnected("simple coroots do not span the cocharacter lattice")
    xi = [int(x) for x in xi_bar]
    if len(xi) != r:
        raise XiNotAntiDominant("xi_bar must have one pairing per simple root")
    if any(x > 0 for x in xi):
        raise XiNotAntiDominant("xi_bar must pair <= 0 with every simple root")
    cartan = d0.cartan_matrix
    roots = [list(cartan[i]) + [xi[i]] for i in range(r)]
    coroots = [[int(i == j) for j in range(r)] + [0] for i in range(r)]
    datum = validate_datum(roots, coroots, [0] * r + [1], label=f"ngo-{d0.label}")
    hw = Weight.cochar((0,) * r + (1,))
    rep = RepSpec.from_highest_weight(datum, hw)
    assert rep.has_det_one_weights()
    return Preset(f"ngo-{d0.label}", datum, rep)


# -- explicit isomorphism of based data --------------------------------------


def _cartan_automorphisms(d: BasedRootDatum) -> list[tuple[int, ...]]:
    n = len(d.simple_roots)
    cartan = d.cartan_matrix
    autos = []
    for perm in permutations(range(n)):
        if all(
            cartan[perm[i]][perm[j]] == cartan[i][j] for i in range(n) for j in range(n)
        ):
            autos.append(perm)
    return autos


def datum_isomorphism(p1: Preset, p2: Preset) -> Optional[tuple[tuple[int, ...], ...]]:
    """A unimodular map of cocharacter lattices carrying preset 1 to preset 2.

    Matches simple roots and coroots (up to a Cartan automorphism), the
    grading character, and the representation weight multiset.  Returns the
    matrix rows, or None.
    """
    d1, d2 = p1.datum, p2.datum
    if d1.rank != d2.rank or len(d1.simple_roots) != len(d2.simple_roots):
        return None
    n = d1.rank
    chars1 = [list(a.coords) for a in d1.simple_roots] + [list(d1.det_grading.coords)]
    if len(chars1) != n:
        return None
    supp1 = sorted(w.coords for w, m in p1.rep.supp for _ in range(m))
    for perm in _cartan_automorphisms(d2):
        chars2 = [list(d2.simple_roots[perm[i]].coords) for i in range(len(d2.simple_roots))]
        chars2.append(list(d2.det_grading.coords))
        # solve phi^T . chars2[i] = chars1[i]
        a2 = linalg.transpose(chars2)
        a1 = linalg.transpose(chars1)
        try:
            a2_inv = linalg.inverse(a2)
        except ValueError:
            continue
        phi_t = linalg.mat_mul(a1, a2_inv)
        phi = linalg.transpose(phi_t)
        if any(x.denominator != 1 for row in phi for x in row):
            continue
        phi_int = tuple(tuple(int(x) for x in row) for row in phi)
        if abs(linalg.det(phi_int)) != 1:
            continue
        ok = all(
            tuple(linalg.mat_vec(phi_int, d1.simple_coroots[i].coords))
            == tuple(map(Fraction, d2.simple_coroots[perm[i]].coords))
            for i in range(len(d1.simple_coroots))
        )
        if not ok:
            continue
        image = sorted(
            tuple(int(x) for x in linalg.mat_vec(phi_int, w)) for w in supp1
        )
        supp2 = sorted(w.coords for w, m in p2.rep.supp for _ in range(m))
        if image != [tuple(map(int, c)) for c in supp2]:
            continue
        return phi_int
    return None

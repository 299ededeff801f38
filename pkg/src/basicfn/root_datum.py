"""Based root data with a central grading character.

A datum lives on the integer lattice Z^rank on both sides, with the dot
product as the perfect pairing between the character and cocharacter
lattices.  Presets choose coordinates so this convention holds.

Conventions used throughout the library:

* anti-dominant means pairing <= 0 against every B-simple root;
* the Bruhat order on cocharacters is taken relative to the opposite
  Borel: mu <= lam iff lam - mu is a nonnegative integer combination of
  the *negated* simple coroots;
* rho_bminus (and its coroot analogue) is the half sum over the negative
  roots, stored with denominator 2.

All types are immutable values; Weyl and root tables are computed once per
datum and cached on the instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from . import linalg
from .errors import CartanViolation, GradingViolation, InfiniteWeyl, OrderCapExceeded

CHARACTER = "character"
COCHARACTER = "cocharacter"

Coord = Union[int, Fraction]

WEYL_ORDER_CAP = 10 ** 5
ROOT_CLOSURE_CAP = 10 ** 4


def _norm_coord(x) -> Coord:
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    if f.denominator != 2:
        raise ValueError(f"weight coordinate {x} has denominator > 2")
    return f


@dataclass(frozen=True)
class Weight:
    """Lattice vector tagged with the side of the pairing it lives on.

    Denominator-2 coordinates are allowed only for rho-shifts; integral
    weights are stored with plain int coordinates.
    """

    coords: tuple[Coord, ...]
    side: str

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_norm_coord(x) for x in self.coords))
        if self.side not in (CHARACTER, COCHARACTER):
            raise ValueError(f"unknown lattice side {self.side!r}")

    @staticmethod
    def char(coords: Iterable) -> "Weight":
        return Weight(tuple(coords), CHARACTER)

    @staticmethod
    def cochar(coords: Iterable) -> "Weight":
        return Weight(tuple(coords), COCHARACTER)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def denominator(self) -> int:
        return 2 if any(isinstance(x, Fraction) for x in self.coords) else 1

    def is_integral(self) -> bool:
        return self.denominator == 1

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def _check_compatible(self, other: "Weight"):
        if self.side != other.side:
            raise ValueError("cannot combine weights from different lattices")
        if len(self.coords) != len(other.coords):
            raise ValueError("rank mismatch between weights")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.side)

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.side)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.side)

    def scale(self, r) -> "Weight":
        return Weight(tuple(Fraction(r) * a for a in self.coords), self.side)

    def __repr__(self) -> str:
        inner = ", ".join(str(x) for x in self.coords)
        tag = "X*" if self.side == CHARACTER else "X_*"
        return f"{tag}({inner})"


def pair(chi: Weight, v: Weight) -> Coord:
    """Canonical pairing between a character and a cocharacter."""
    if chi.side != CHARACTER or v.side != COCHARACTER:
        raise ValueError("pairing expects (character, cocharacter)")
    if len(chi.coords) != len(v.coords):
        raise ValueError("rank mismatch in pairing")
    total = sum((Fraction(a) * Fraction(b) for a, b in zip(chi.coords, v.coords)), Fraction(0))
    return int(total) if total.denominator == 1 else total


def _mat_apply(rows: Sequence[Sequence[int]], coords: Sequence[Coord]) -> tuple[Coord, ...]:
    return tuple(sum(m * c for m, c in zip(row, coords)) for row in rows)


@dataclass(frozen=True)
class WeylElement:
    """One Weyl group element, with its exact action on both lattices."""

    cochar_rows: tuple[tuple[int, ...], ...]
    char_rows: tuple[tuple[int, ...], ...]
    length: int
    word: tuple[int, ...]

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def apply(self, w: Weight) -> Weight:
        rows = self.char_rows if w.side == CHARACTER else self.cochar_rows
        return Weight(_mat_apply(rows, w.coords), w.side)

    def __repr__(self) -> str:
        name = "".join(f"s{i}" for i in self.word) or "e"
        return f"WeylElement({name}, l={self.length})"


class PositiveRoots(NamedTuple):
    pairs: tuple[tuple[Weight, Weight], ...]
    rho_bminus: Weight
    rho_check_bminus: Weight


@dataclass(frozen=True)
class BasedRootDatum:
    rank: int
    simple_roots: tuple[Weight, ...]
    simple_coroots: tuple[Weight, ...]
    det_grading: Weight
    label: str = ""

    # -- structural tables, computed once and cached on the value --

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(int(pair(a, b)) for b in self.simple_coroots) for a in self.simple_roots
        )

    @cached_property
    def _simple_reflections(self) -> tuple[WeylElement, ...]:
        refl = []
        for i, (alpha, alpha_check) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            co = tuple(
                tuple(
                    (1 if r == c else 0) - alpha_check.coords[r] * alpha.coords[c]
                    for c in range(self.rank)
                )
                for r in range(self.rank)
            )
            ch = tuple(
                tuple(
                    (1 if r == c else 0) - alpha.coords[r] * alpha_check.coords[c]
                    for c in range(self.rank)
                )
                for r in range(self.rank)
            )
            refl.append(WeylElement(co, ch, 1, (i,)))
        return tuple(refl)

    @cached_property
    def positive_root_pairs(self) -> tuple[tuple[Weight, Weight], ...]:
        """All positive (root, coroot) pairs, by reflection closure."""
        simples = list(zip(self.simple_roots, self.simple_coroots))
        seen = {p[0].coords: p for p in simples}
        frontier = list(simples)
        while frontier:
            if len(seen) > ROOT_CLOSURE_CAP:
                raise InfiniteWeyl(
                    f"root closure exceeded {ROOT_CLOSURE_CAP} elements; datum is not finite type"
                )
            nxt = []
            for root, coroot in frontier:
                for s in self._simple_reflections:
                    r2, c2 = s.apply(root), s.apply(coroot)
                    if r2.coords not in seen:
                        seen[r2.coords] = (r2, c2)
                        nxt.append((r2, c2))
            frontier = nxt
        positive = [p for p in seen.values() if self._is_positive_root(p[0])]
        positive.sort(key=lambda p: p[0].coords)
        return tuple(positive)

    def _is_positive_root(self, root: Weight) -> bool:
        if not self.simple_roots:
            return False
        cols = [list(a.coords) for a in self.simple_roots]
        sol = linalg.solve(linalg.transpose(cols), root.coords)
        return sol is not None and all(c >= 0 for c in sol)

    @cached_property
    def rho_bminus(self) -> Weight:
        total = Weight.char((0,) * self.rank)
        for root, _ in self.positive_root_pairs:
            total = total + root
        return total.scale(Fraction(-1, 2))

    @cached_property
    def rho_check_bminus(self) -> Weight:
        total = Weight.cochar((0,) * self.rank)
        for _, coroot in self.positive_root_pairs:
            total = total + coroot
        return total.scale(Fraction(-1, 2))

    @cached_property
    def weyl_elements(self) -> tuple[WeylElement, ...]:
        return self._enumerate_weyl(WEYL_ORDER_CAP)

    def _enumerate_weyl(self, cap: int) -> tuple[WeylElement, ...]:
        ident = WeylElement(
            tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)),
            tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)),
            0,
            (),
        )
        elements = {ident.cochar_rows: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for i, s in enumerate(self._simple_reflections):
                    co = tuple(
                        tuple(sum(s.cochar_rows[r][k] * w.cochar_rows[k][c] for k in range(self.rank))
                              for c in range(self.rank))
                        for r in range(self.rank)
                    )
                    if co in elements:
                        continue
                    ch = tuple(
                        tuple(sum(s.char_rows[r][k] * w.char_rows[k][c] for k in range(self.rank))
                              for c in range(self.rank))
                        for r in range(self.rank)
                    )
                    el = WeylElement(co, ch, w.length + 1, (i,) + w.word)
                    elements[co] = el
                    nxt.append(el)
                    if len(elements) > cap:
                        raise OrderCapExceeded(f"Weyl group larger than cap {cap}")
            frontier = nxt
        ordered = sorted(elements.values(), key=lambda e: (e.length, e.word))
        return tuple(ordered)

    @cached_property
    def longest_element(self) -> WeylElement:
        return max(self.weyl_elements, key=lambda e: e.length)

    @cached_property
    def invariant_form(self) -> tuple[tuple[int, ...], ...]:
        """A W-invariant positive definite form on the cocharacter lattice.

        Sum over W of M^T M; left unnormalized since every consumer is
        homogeneous in the form.
        """
        n = self.rank
        acc = [[0] * n for _ in range(n)]
        for w in self.weyl_elements:
            m = w.cochar_rows
            for i in range(n):
                for j in range(n):
                    acc[i][j] += sum(m[k][i] * m[k][j] for k in range(n))
        return tuple(tuple(row) for row in acc)

    def form(self, a: Weight, b: Weight) -> Fraction:
        """Evaluate the cached invariant form on two cocharacters."""
        if a.side != COCHARACTER or b.side != COCHARACTER:
            raise ValueError("invariant form is defined on the cocharacter side")
        bm = self.invariant_form
        return sum(
            (Fraction(a.coords[i]) * bm[i][j] * Fraction(b.coords[j])
             for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def det(self, mu: Weight) -> Coord:
        """Value of the grading character det_G on a cocharacter."""
        return pair(self.det_grading, mu)

    def zero(self, side: str = COCHARACTER) -> Weight:
        return Weight((0,) * self.rank, side)

    def __repr__(self) -> str:
        name = self.label or "datum"
        return f"BasedRootDatum({name}, rank={self.rank}, nroots={len(self.simple_roots)})"


def validate_datum(
    simple_roots: Sequence[Sequence[int]],
    simple_coroots: Sequence[Sequence[int]],
    det_grading: Sequence[int],
    label: str = "",
) -> BasedRootDatum:
    """Build and validate a based root datum from raw integer vectors."""
    rank = len(det_grading)
    if len(simple_roots) != len(simple_coroots):
        raise CartanViolation("number of simple roots and coroots differ")
    roots = tuple(Weight.char(r) for r in simple_roots)
    coroots = tuple(Weight.cochar(c) for c in simple_coroots)
    for w in roots + coroots:
        if w.rank != rank:
            raise CartanViolation("weight length does not match rank")
        if not w.is_integral():
            raise CartanViolation("simple roots and coroots must be integral")
        if w.is_zero():
            raise CartanViolation("simple roots and coroots must be nonzero")
    d = BasedRootDatum(rank, roots, coroots, Weight.char(det_grading), label)
    n = len(roots)
    cartan = [[pair(roots[i], coroots[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if cartan[i][i] != 2:
            raise CartanViolation(f"<alpha_{i}, alpha_{i}^> = {cartan[i][i]} != 2")
        for j in range(n):
            if i != j and cartan[i][j] > 0:
                raise CartanViolation(f"<alpha_{i}, alpha_{j}^> = {cartan[i][j]} > 0")
    if n and linalg.rank([list(r.coords) for r in roots]) != n:
        raise CartanViolation("simple roots are linearly dependent")
    if n and linalg.rank([list(c.coords) for c in coroots]) != n:
        raise CartanViolation("simple coroots are linearly dependent")
    for j, c in enumerate(coroots):
        if pair(d.det_grading, c) != 0:
            raise GradingViolation(f"det grading is nonzero on simple coroot {j}")
    d.positive_root_pairs  # forces the bounded orbit closure; raises InfiniteWeyl
    return d


def datum_to_json(d: BasedRootDatum) -> dict:
    return {
        "rank": d.rank,
        "simple_roots": [list(map(int, r.coords)) for r in d.simple_roots],
        "simple_coroots": [list(map(int, c.coords)) for c in d.simple_coroots],
        "det_grading": list(map(int, d.det_grading.coords)),
        "label": d.label,
    }


def datum_from_json(obj: dict) -> BasedRootDatum:
    d = validate_datum(
        obj["simple_roots"],
        obj["simple_coroots"],
        obj["det_grading"],
        obj.get("label", ""),
    )
    if d.rank != obj["rank"]:
        raise CartanViolation("declared rank does not match det_grading length")
    return d


# -- operations -----------------------------------------------------------


def positive_roots(d: BasedRootDatum) -> PositiveRoots:
    """Positive (root, coroot) pairs together with the B^- half sums."""
    return PositiveRoots(d.positive_root_pairs, d.rho_bminus, d.rho_check_bminus)


def weyl_group(d: BasedRootDatum, cap: Optional[int] = None) -> tuple[WeylElement, ...]:
    """Complete Weyl enumeration with exact lengths, identity first."""
    if cap is not None and cap != WEYL_ORDER_CAP:
        return d._enumerate_weyl(cap)
    return d.weyl_elements


def is_antidominant(d: BasedRootDatum, mu: Weight) -> bool:
    return all(pair(alpha, mu) <= 0 for alpha in d.simple_roots)


def is_dominant(d: BasedRootDatum, mu: Weight) -> bool:
    return all(pair(alpha, mu) >= 0 for alpha in d.simple_roots)


def antidominant_representative(d: BasedRootDatum, mu: Weight) -> Weight:
    """The unique anti-dominant weight in the Weyl orbit of mu."""
    current = mu
    guard = 0
    while True:
        for alpha, s in zip(d.simple_roots, d._simple_reflections):
            if pair(alpha, current) > 0:
                current = s.apply(current)
                break
        else:
            return current
        guard += 1
        if guard > 10 ** 6:
            raise RuntimeError("antidominant reduction did not terminate")


def weyl_orbit(d: BasedRootDatum, mu: Weight) -> list[Weight]:
    """The full Weyl orbit of a weight, deduplicated, in sorted order."""
    orbit = {w.apply(mu).coords: w.apply(mu) for w in d.weyl_elements}
    return [orbit[c] for c in sorted(orbit)]


def bruhat_leq(d: BasedRootDatum, mu: Weight, lam: Weight) -> bool:
    """Bruhat order relative to B^-: lam - mu in Z_{>=0} . (-simple coroots).

    The simple coroots are linearly independent, so the candidate
    coefficient vector is unique; solve the rational system exactly and
    check integrality and nonnegativity.
    """
    if mu.side != COCHARACTER or lam.side != COCHARACTER:
        raise ValueError("Bruhat order compares cocharacters")
    if not (mu.is_integral() and lam.is_integral()):
        raise ValueError("Bruhat order compares integral weights")
    diff = lam - mu
    if diff.is_zero():
        return True
    if not d.simple_coroots:
        return False
    cols = [[-x for x in c.coords] for c in d.simple_coroots]
    sol = linalg.solve(linalg.transpose(cols), diff.coords)
    if sol is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in sol)

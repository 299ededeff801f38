"""Exception hierarchy shared by all basicfn modules.

Every failure mode that a caller can sensibly react to gets its own class;
the CLI maps any ``BasicFnError`` to exit code 3, carrying the class name.
"""

from __future__ import annotations


class BasicFnError(Exception):
    """Base class for all library errors."""


class CartanViolation(BasicFnError):
    """Pairing of simple roots with coroots is not a valid Cartan matrix."""


class GradingViolation(BasicFnError):
    """The grading character does not vanish on a simple coroot."""


class InfiniteWeyl(BasicFnError):
    """Reflection closure of the root set exceeded the configured bound."""


class OrderCapExceeded(BasicFnError):
    """Weyl group enumeration exceeded the configured cap."""


class DatumMismatch(BasicFnError):
    """Operands built over different based root data."""


class NonPositiveGrading(BasicFnError):
    """Geometric expansion requires a weight of strictly positive grading."""


class NotStronglyConvex(BasicFnError):
    """A weight multiset admits 0 as a convex combination.

    The offending combination (weight, rational coefficient) pairs are
    stored in ``witness``.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PartitionCapExceeded(BasicFnError):
    """Partition-function query lies beyond the configured size cap."""


class NotAntiDominant(BasicFnError):
    """A weight expected to be anti-dominant is not."""


class NotWInvariant(BasicFnError):
    """A character table is not constant on Weyl orbits."""


class NegativeMultiplicity(BasicFnError):
    """Leading-term stripping produced a negative multiplicity."""


class PsiNotCertified(BasicFnError):
    """Weight multiset lacks a strict positivity certificate."""


class NotSaturated(BasicFnError):
    """Weight list is not closed under Bruhat descent within a det layer."""


class DegenerateParameter(BasicFnError):
    """Satake parameter lies on a root hyperplane; re-randomize and retry."""


class IrrationalHalfPower(BasicFnError):
    """A required power of q_F is not rational for the supplied data."""


class NotSimplyConnected(BasicFnError):
    """Input datum is not simply connected (coroots do not span the lattice)."""


class XiNotAntiDominant(BasicFnError):
    """The extension coweight must be anti-dominant."""

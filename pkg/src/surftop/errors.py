"""Domain error hierarchy.

Every rejection the library can make carries a stable machine-readable
name (the ``name`` class attribute), so front ends can map failures to
diagnostics without parsing message text.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for expected, named rejections."""

    name = "DomainError"


class DegenerateFormError(DomainError):
    """The form has determinant 0 and cannot be classified."""

    name = "DegenerateForm"


class NotUnimodularError(DomainError):
    """The form's determinant is not +1 or -1."""

    name = "NotUnimodular"


class DefiniteNotClassifiedError(DomainError):
    """Definite form in abstract-lattice mode: refused by design.

    Definite unimodular lattices (E8 and friends) are not determined by
    rank/signature/parity, so no answer is licensed without the
    smooth-realizability hypothesis.
    """

    name = "DefiniteNotClassified"


class InconsistentEvenSignatureError(DomainError):
    """Even unimodular invariants with signature not divisible by 8.

    No such form exists; the input data is corrupted.
    """

    name = "InconsistentEvenSignature"


class DefiniteEvenUnrealizableError(DomainError):
    """Even definite form under the smooth four-manifold hypothesis.

    A smoothly realizable definite form is odd diagonal, so an even
    definite input cannot come from a smooth simply-connected 4-manifold.
    """

    name = "DefiniteEvenUnrealizable"


class InvalidSurfaceError(DomainError):
    """Surface data violating an integrality or positivity constraint."""

    name = "InvalidSurface"


class NotPrimeError(DomainError):
    """Field characteristic is not prime."""

    name = "NotPrime"


class UnsupportedDegreeError(DomainError):
    """Field extension degree outside the supported range 1..3."""

    name = "UnsupportedDegree"


class ZeroFormError(DomainError):
    """Hypersurface form vanishes identically mod p."""

    name = "ZeroForm"


class InvalidInputError(DomainError):
    """Malformed input file or object (bad JSON, wrong schema, asymmetry)."""

    name = "InvalidInput"

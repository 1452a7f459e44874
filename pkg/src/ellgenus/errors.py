"""Exception taxonomy for the engine.

Every error raised on a documented failure path derives from EllgenusError
so callers can catch engine failures without masking programming errors.
"""


class EllgenusError(Exception):
    pass


class DivisionByZero(EllgenusError, ZeroDivisionError):
    """Division by the zero scalar or zero rational function."""


class BadExponent(EllgenusError, ValueError):
    """Exponent outside the supported lattice (q: 24ths, y: halves)."""


class MixedRing(EllgenusError, TypeError):
    """Operation on series over different coefficient rings."""


class NonInvertibleLeadingTerm(EllgenusError):
    """Series inversion needs a single invertible leading monomial."""


class NonNilpotentArgument(EllgenusError):
    """exp of a jet whose z^0 part is nonzero."""


class DivergentPoint(EllgenusError):
    """Numeric evaluation requested at |q| >= 1."""


class BadWeight(EllgenusError, ValueError):
    """Eisenstein series of odd or nonpositive weight."""


class SamplePointOutOfDomain(EllgenusError):
    """Transformation-law sample point leaves the safe evaluation domain."""


class InsufficientCoefficients(EllgenusError):
    """Not enough Fourier coefficients to pin down a modular-form fit."""


class UnsupportedGroup(EllgenusError):
    """Direct fitting requested over a group with no implemented basis."""


class OddOddProduct(EllgenusError):
    """Product of two odd (sigma-carrying) classes; the calculus is linear
    in the odd factor and such a product signals a bug."""


class UnpairedRoots(EllgenusError):
    """Root multiset does not decompose into +/- pairs as required."""


class OddRankSpinBundle(EllgenusError):
    """Spinor character of a bundle whose roots do not pair up."""


class NonTruncatingParameter(EllgenusError):
    """Symmetric-power series with a parameter that has no positive q-order."""


class MissingBundle(EllgenusError):
    """Genus family requested on a model lacking a required bundle."""


class MissingTransgressionComponent(EllgenusError):
    """Transgression data does not cover a power sum the expression needs."""


class BadTransgression(EllgenusError, ValueError):
    """Transgression data violates its structural constraints."""


class PathMismatch(EllgenusError):
    """Bundle-path and theta-path genus disagree: a hard internal invariant."""


class UnsplitTangent(EllgenusError):
    """Meromorphic genus in odd dimensions needs the split tangent structure."""


class HypothesisNotMet(EllgenusError):
    """Theorem case invoked on a model that fails its hypothesis."""


class ModelValidationError(EllgenusError, ValueError):
    """Model file fails schema or structural validation."""

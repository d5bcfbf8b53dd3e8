"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for all package errors."""


class ParseError(ToricError):
    """Malformed input file, polynomial string, or order string."""


class InvalidFan(ToricError):
    """Fan data violates a structural requirement."""


class NotAGrading(ToricError):
    """User-supplied degree rows do not annihilate the ray pairing."""


class NotSurjective(ToricError):
    """User-supplied degree rows do not map onto the full free degree group."""


class ZeroPolynomial(ToricError):
    """The zero polynomial has no degree."""


class NotHomogeneous(ToricError):
    """Polynomial mixes degrees; carries a witness pair of exponents."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonSquare(ToricError):
    """Determinant of a non-square matrix."""


class NoIntegralLift(ToricError):
    """A chart monomial has no nonnegative integral homogenization."""


class NonUniqueLift(ToricError):
    """Chart homogenization is underdetermined."""


class Unbounded(ToricError):
    """Polyhedron is unbounded; enumeration refused."""


class DegenerateVolume(ToricError):
    """Polytope is not full-dimensional."""


class NotAmple(ToricError):
    """Divisor or class fails the ampleness test."""


class DecompositionFailed(ToricError):
    """A term is divisible neither by a cone variable nor by the cone's complement monomial."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class WrongDegree(ToricError):
    """Numerator degree differs from the critical degree."""


class CodimNotOne(ToricError):
    """Degree-critical quotient has dimension above one."""


class HypothesesFailed(ToricError):
    """System violates a residue hypothesis (membership or base locus)."""


class AllReduceToZero(ToricError):
    """Every critical-degree monomial lies in the ideal; quotient is zero."""


class DegreeMismatch(ToricError):
    """Degrees of supplied polynomials are inconsistent with the construction."""


class NotZeroDimensional(ToricError):
    """Chart system has positive-dimensional zero locus."""


class NotShapePosition(ToricError):
    """Lex basis not triangular after the allowed coordinate changes."""


class NonSimpleZero(ToricError):
    """A zero has multiplicity or a singular Jacobian."""


class ZeroOnPolarLocus(ToricError):
    """A zero of the partial system lies on the divisor of the omitted polynomial."""


class NotTorusZero(ToricError):
    """A zero has a vanishing coordinate; outside the dense torus."""


class InfiniteIntersection(ToricError):
    """Partial intersection of the divisors is not finite."""

"""Exception hierarchy shared by all nilbij modules.

Every library-raised error derives from :class:`NilbijError` so callers
(and the CLI) can distinguish bad input from genuine bugs, which surface
as plain ``AssertionError`` from internal consistency checks.
"""


class NilbijError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(NilbijError):
    """A JSON payload does not match the expected schema."""


class FieldMismatch(NilbijError):
    """Operands belong to different finite fields."""


class DivisionByZero(NilbijError, ZeroDivisionError):
    """Multiplicative inverse of the additive identity was requested."""


class DimensionMismatch(NilbijError):
    """Matrix or vector dimensions are incompatible."""


class NonSquare(DimensionMismatch):
    """A square matrix was required."""


class NotInvertible(NilbijError):
    """A matrix that must be invertible is singular."""


class NotInSubspace(NilbijError):
    """A vector lies outside the subspace it was resolved against."""


class NotBasis(NilbijError):
    """Vectors fail to form an ordered basis of their subspace."""


class NotComplement(NilbijError):
    """Two subspaces are not complementary in the ambient space."""


class NotInvariant(NilbijError):
    """An operator does not preserve the subspace it must preserve."""


class NotAutomorphism(NilbijError):
    """A map that must be invertible on its subspace is singular."""


class NotNilpotent(NilbijError):
    """An operator that must be nilpotent is not."""


class NotCanonical(SchemaError):
    """A serialized subspace basis is not in reduced row echelon form."""


class InvalidVertex(NilbijError):
    """A vertex index is outside the tree's vertex range."""


class BudgetExceeded(NilbijError):
    """An exhaustive enumeration would exceed the configured budget."""

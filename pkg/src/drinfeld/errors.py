"""Exception types shared across the library."""


class AlgebraError(Exception):
    """Base class for all library-specific errors."""


class ContextError(AlgebraError):
    """Operands belong to different towers / fields / orders."""


class RankError(AlgebraError):
    """Generators do not span a full-rank lattice."""


class NotSublattice(AlgebraError):
    """Index requested for a pair of lattices without inclusion."""


class EmptyIdeal(AlgebraError):
    """The zero ideal was passed where a nonzero one is required."""


class NonCommutativeEndomorphisms(AlgebraError):
    """The endomorphism ring is not commutative (rank of the Frobenius
    field is smaller than the rank of the module)."""


class InseparableExtension(AlgebraError):
    """The trace form degenerates, so the trace-dual is undefined."""


class TooLarge(AlgebraError):
    """A brute-force enumeration would exceed the desk-scale guard."""


class CensusViolation(AlgebraError):
    """A census-wide assertion failed; the result set is invalid."""


class InternalError(AlgebraError):
    """An invariant the implementation relies on was violated."""

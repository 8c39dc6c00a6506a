"""Exception hierarchy for drgforge.

Input-validation errors (bad parameters, malformed connection sets) map to
CLI exit code 2; InternalInconsistency maps to exit code 1 and should never
fire on a released build.
"""


class DrgforgeError(Exception):
    pass


class ValidationError(DrgforgeError):
    """Base for all user-input validation failures (CLI exit 2)."""


class InvalidParameter(ValidationError):
    pass


class MixedGroups(ValidationError):
    pass


class ModulusMismatch(ValidationError):
    pass


class NotADivisor(ValidationError):
    pass


class NotAUnit(ValidationError):
    pass


class IdentityInSet(ValidationError):
    pass


class NotInverseClosed(ValidationError):
    pass


class BadClosure(ValidationError):
    pass


class ZeroInR(BadClosure):
    pass


class Disconnected(ValidationError):
    pass


class NotRegular(ValidationError):
    pass


class NotBipartite(ValidationError):
    pass


class NotAntipodal(ValidationError):
    pass


class InvalidArray(ValidationError):
    pass


class NotASubset(ValidationError):
    pass


class NotASubgroupChain(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class UnsupportedN(ValidationError):
    pass


class StructuralViolation(ValidationError):
    """A Hadamard-pair structural constraint failed; .constraint names it."""

    def __init__(self, constraint: str, message: str = ""):
        self.constraint = constraint
        super().__init__(message or constraint)


class InternalInconsistency(DrgforgeError):
    """Two independent code paths disagreed (CLI exit 1)."""

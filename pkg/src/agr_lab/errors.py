"""Exception hierarchy shared by every agr-lab module."""


class AgrError(Exception):
    """Base class for all toolkit errors."""


class InputError(AgrError):
    """Invalid user input; the CLI maps these to exit code 1."""


class NotNumerical(InputError):
    pass


class NotMember(InputError):
    pass


class MixedBase(InputError):
    pass


class NotContained(InputError):
    pass


class NotIntegral(InputError):
    pass


class NoStabilization(AgrError):
    pass


class EmptyComplex(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class GhostVertex(InputError):
    pass


class NotPrime(InputError):
    pass


class InconsistencyError(AgrError):
    """Two independent computations disagreed; the CLI exits with code 2."""

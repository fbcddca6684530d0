"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed graph input: bad vertex, self-loop, bad graph6 payload."""


class SizeLimitError(ValueError):
    """An exact search was asked to run beyond its desk-scale limit."""


class ParameterError(ValueError):
    """Parameters outside the domain where a construction is defined."""


class ContractError(RuntimeError):
    """A structure guaranteed by a proof could not be produced.

    Raised by the repair transforms when their preconditions are violated or
    when an object the argument promises (a swap tile, an injection) is
    missing. Either way it indicates a bug or misuse, never a normal answer.
    """

"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for every error raised deliberately by this package."""


class SpecParseError(EngineError):
    """A textual description (group, character, flag, expression, config) is malformed."""


class PreconditionError(EngineError):
    """An operation was invoked outside its domain of definition."""


class MismatchError(PreconditionError):
    """Operands live over different ambient contexts (group, flag, shift, or mode)."""

"""Exception hierarchy shared by every module of the package."""


class RoughIdealsError(ValueError):
    """Base class; ``code`` is a short stable identifier used by the CLI."""

    code = "E100"


class UnknownElementError(RoughIdealsError, KeyError):
    code = "E101"

    def __str__(self):
        return self.args[0] if self.args else "unknown element"


class InvalidStructureError(RoughIdealsError):
    """A value violates an invariant of its type (bad ideal, bad clan, ...)."""

    code = "E102"


class GuardExceededError(RoughIdealsError):
    """An exhaustive enumeration was asked to run past its size guard."""

    code = "E103"


class NotSupremalError(RoughIdealsError):
    code = "E104"


class PropernessError(RoughIdealsError):
    """A closure computation produced the whole carrier, which is never an ideal."""

    code = "E105"


class UndefinedApproximationError(RoughIdealsError):
    code = "E106"


class SchemaError(RoughIdealsError):
    code = "E107"


class MissingFamilyError(SchemaError):
    """An operator needs a named set or family that the document does not provide."""

    code = "E108"


class UsageError(RoughIdealsError):
    """Command-line flags that are unknown or inconsistent with the chosen operator."""

    code = "E109"

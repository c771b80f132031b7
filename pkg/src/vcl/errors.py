"""Exception hierarchy shared by every module."""


class VCLError(Exception):
    """Base class for all errors raised by the library."""


class ParseError(VCLError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class SortError(VCLError):
    """An atom pairs a variable with a value outside its domain."""


class UnknownNameError(VCLError):
    """An agent, variable, state or value name is not declared."""


class ModeError(VCLError):
    """A formula's atom language does not match the model's labeling mode."""


class ModelError(VCLError):
    def __init__(self, violations):
        self.violations = list(violations)
        head = "; ".join(self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            head += f"; ... ({more} more)"
        super().__init__(f"invalid model: {head}")


class IncoherentModelError(VCLError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"propositional model is not coherent ({len(report.witnesses)} violations)")


class ProfileError(VCLError):
    """Joint profiles that cannot be combined or do not fit the model."""


class ResourceError(VCLError):
    """A computation would exceed a configured size bound."""

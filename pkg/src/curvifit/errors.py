"""Exception hierarchy.

Validation problems (bad input, violated preconditions) derive from
``ValidationError``; failures of the numerics themselves derive from
``NumericalError``. The CLI maps the two families onto exit codes 2 and 3.
"""


class CurvifitError(Exception):
    pass


class ValidationError(CurvifitError, ValueError):
    pass


class NumericalError(CurvifitError, ArithmeticError):
    pass


class DomainError(ValidationError):
    pass


class SolvabilityError(ValidationError):
    """Fewer data points than polynomial unknowns."""


class SeamError(ValidationError):
    pass


class UsageError(ValidationError):
    pass


class DegenerateSystemError(NumericalError):
    pass


class SingularMappingError(NumericalError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class SolverError(NumericalError):
    pass

"""Exception hierarchy shared by every module of the package."""


class FamalgError(Exception):
    """Base class for all errors raised by famalg."""


class IncompatibleContext(FamalgError):
    """Operands live over different fields or different ambient free algebras."""


class ParseError(FamalgError):
    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if text is not None and pos is not None:
            message = f"{message} at column {pos + 1} in {text!r}"
        super().__init__(message)


class PresentationError(FamalgError):
    """Malformed presentation: duplicate or unknown generator names."""


class ValidationError(FamalgError):
    """A finite-rank algebra, Hopf datum or module map failed validation."""


class AssociativityViolation(ValidationError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"associativity fails on basis triple {triple}")


class UnitViolation(ValidationError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"unit law fails on basis element {index}")


class DegreeOutOfRange(FamalgError):
    """Input degree exceeds the truncation degree of an incomplete Groebner basis."""


class BudgetExceeded(FamalgError):
    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"search needs {required} candidates, budget is {budget}")


class ConstructionError(FamalgError):
    """Preconditions of a universal construction are not met."""

"""Exception types raised across the package."""


class SymbreakError(Exception):
    """Base class for every error raised by symbreak."""


class InvalidEdge(SymbreakError, ValueError):
    pass


class OutOfRange(SymbreakError, ValueError):
    pass


class DuplicateEdge(SymbreakError, ValueError):
    pass


class EmptyUnion(SymbreakError, ValueError):
    pass


class ParseError(SymbreakError, ValueError):
    pass


class Unsupported(SymbreakError, ValueError):
    pass


class DegreeError(SymbreakError, ValueError):
    pass


class GroupTooLarge(SymbreakError):
    """Closure of a generating set grew past the element cap."""

    def __init__(self, cap: int):
        super().__init__(f"group closure exceeded cap of {cap} elements")
        self.cap = cap


class SearchBudgetExceeded(SymbreakError):
    """A coloring enumeration ran out of its candidate budget."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} candidates exceeded")
        self.budget = budget


class NoSymmetry(SymbreakError, ValueError):
    pass


class FormulaInapplicable(SymbreakError, ValueError):
    pass


class InvalidParams(SymbreakError, ValueError):
    pass


class NotSymmetric(SymbreakError, ValueError):
    pass


class InvalidConnectionSet(SymbreakError, ValueError):
    pass


class NotApplicable(SymbreakError, ValueError):
    pass


class InvalidComponent(SymbreakError, ValueError):
    pass


class TooLarge(SymbreakError, ValueError):
    pass

"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`GJError`;
the CLI reports the class name on stderr and exits with status 1.
"""


class GJError(Exception):
    """Base class for all library errors."""


# exact arithmetic
class NonExactDivision(GJError, ArithmeticError):
    pass


class ZeroDenominator(GJError, ZeroDivisionError):
    pass


class SingularSystem(GJError, ArithmeticError):
    pass


class PoleAtZero(GJError, ArithmeticError):
    pass


class NonInvertibleConstantTerm(GJError, ArithmeticError):
    pass


# words and bad sets
class NotAPrefix(GJError, ValueError):
    pass


class NotReduced(GJError, ValueError):
    """A non-reduced bad set was passed where occurrence counts would be wrong."""


class SymbolicAlphabet(GJError, ValueError):
    """The operation needs the individual letters of a concrete alphabet."""


# penney
class DegenerateInstance(GJError, ValueError):
    pass


class NoValidCandidate(GJError, ValueError):
    pass


# oracle / engines
class BudgetExceeded(GJError, RuntimeError):
    pass


class NotInvariant(GJError, ValueError):
    pass


class NoRootInUnitInterval(GJError, ValueError):
    pass


class ZeroCount(GJError, ZeroDivisionError):
    pass

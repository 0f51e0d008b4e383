"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`LeavittError`
so callers (the CLI in particular) can separate them from programming errors.
"""


class LeavittError(Exception):
    pass


# coefficient rings
class RingMismatch(LeavittError):
    pass


class NoSuchHom(LeavittError):
    pass


# graphs
class ParseError(LeavittError):
    pass


class UndeclaredVertex(ParseError):
    pass


class DuplicateName(ParseError):
    pass


class UnknownName(LeavittError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownVertex(UnknownName):
    pass


class UnknownIdentifier(UnknownName):
    pass


# algebra
class GraphMismatch(LeavittError):
    pass


class NonComposablePair(LeavittError):
    pass


class NotRealPolynomial(LeavittError):
    pass


class ZeroElement(LeavittError):
    pass


class BadCoefficient(LeavittError):
    pass


# witnesses
class ConditionLViolated(LeavittError):
    pass


class NotDegreeZero(LeavittError):
    pass


class DegreeZeroInput(LeavittError):
    pass


class InternalContradiction(LeavittError):
    """A certified identity failed to re-verify. Indicates an engine bug."""


# ideals
class NotHereditary(LeavittError):
    pass


class NotSaturated(LeavittError):
    pass


# oracles
class IncompleteFamily(LeavittError):
    pass


class NotACycleGraph(LeavittError):
    pass


class NotAcyclic(LeavittError):
    pass


class NonFieldCoefficients(LeavittError):
    pass

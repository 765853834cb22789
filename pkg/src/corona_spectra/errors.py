"""Exception hierarchy. The CLI reports the class name as the error tag."""

from __future__ import annotations


class CoronaError(Exception):
    """Base class for every computation error raised by the library."""


class OutOfRange(CoronaError):
    pass


class LoopEdge(CoronaError):
    pass


class MalformedGraph6(CoronaError):
    pass


class BadFamilyParams(CoronaError):
    pass


class EmptyGraph(CoronaError):
    pass


class NonSquare(CoronaError):
    pass


class NonSymmetric(CoronaError):
    pass


class ZeroDenominator(CoronaError):
    pass


class ZeroPolynomial(CoronaError):
    pass


class ComplexRoots(CoronaError):
    pass


class DegenerateLeadingCoefficient(CoronaError):
    pass


class NotRegular(CoronaError):
    pass


class Disconnected(CoronaError):
    pass


class RoundingGuardViolated(CoronaError):
    pass


class HypothesisViolated(CoronaError):
    """A precondition of the equienergetic construction failed.

    ``hypothesis`` names the failed condition and ``details`` carries the
    measured values that decided it.
    """

    def __init__(self, hypothesis: str, details: dict | None = None):
        self.hypothesis = hypothesis
        self.details = dict(details or {})
        msg = hypothesis
        if self.details:
            msg += ": " + ", ".join(f"{k}={v}" for k, v in self.details.items())
        super().__init__(msg)


class ConclusionFailed(CoronaError):
    """A constructed object failed its post-construction re-check."""

"""Exception hierarchy shared by all spslab modules."""

from __future__ import annotations


class SpslabError(Exception):
    """Base class for every error raised by spslab."""


# lattice
class LatticeError(SpslabError):
    pass


class EmptyLattice(LatticeError):
    pass


class CycleError(LatticeError):
    def __init__(self, a, b):
        super().__init__(f"antisymmetry violated: {a!r} <= {b!r} <= {a!r}")
        self.witness = (a, b)


class NotALattice(LatticeError):
    def __init__(self, a, b, missing: str):
        super().__init__(f"{a!r} and {b!r} have no {missing}")
        self.witness = (a, b)
        self.missing = missing


class UnknownElement(LatticeError, KeyError):
    def __str__(self):
        return f"unknown lattice element {self.args[0]!r}"


# closure spaces
class ClosureSpaceError(SpslabError):
    pass


class MissingEmptySet(ClosureSpaceError):
    def __init__(self):
        super().__init__("the empty set is not in the closed family")


class NotIntersectionClosed(ClosureSpaceError):
    def __init__(self, a, b):
        super().__init__(f"intersection of {sorted(a)!r} and {sorted(b)!r} is not closed")
        self.witness = (a, b)


class UnknownPoint(ClosureSpaceError, KeyError):
    def __str__(self):
        return f"unknown point {self.args[0]!r}"


class EmptySubspace(ClosureSpaceError):
    pass


class EmptyUniverse(ClosureSpaceError):
    pass


# state property systems
class SPSError(SpslabError):
    pass


class EmptyStates(SPSError):
    pass


class UnknownState(SPSError, KeyError):
    def __str__(self):
        return f"unknown state {self.args[0]!r}"


class AxiomViolation(SPSError):
    """Raised by build_sps; ``violations`` holds the full report."""

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else None
        super().__init__(f"{len(self.violations)} axiom violation(s); first: {first}")


class BottomActual(AxiomViolation):
    pass


class NotMeetClosed(AxiomViolation):
    pass


class OrderAxiomForward(AxiomViolation):
    pass


class OrderAxiomBackward(AxiomViolation):
    pass


# classical / decomposition
class NotClassical(SPSError):
    pass


class NoSuchProperty(SPSError):
    pass


class SkeletonAxiomViolation(SPSError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(f"skeleton fails SPS validation: {self.violations}")


class DecompositionError(SPSError):
    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class TooLarge(SpslabError):
    pass


# documents
class DocumentError(SpslabError):
    pass


class DocumentSyntaxError(DocumentError):
    pass


class ValidationError(DocumentError):
    def __init__(self, message: str, cause: Exception | None = None):
        super().__init__(message)
        self.cause = cause

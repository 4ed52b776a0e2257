"""Exception hierarchy shared by every layer."""


class RingConesError(Exception):
    pass


class ParseError(RingConesError, ValueError):
    pass


class InvalidSpec(RingConesError, ValueError):
    pass


class SizeExceeded(RingConesError):
    pass


class NotAMorphism(RingConesError, ValueError):
    pass


class NotComposable(RingConesError, ValueError):
    pass


class ShapeMismatch(RingConesError, ValueError):
    pass


class NotASubobject(RingConesError, ValueError):
    pass


class CriterionMismatch(RingConesError):
    """Brute-force and ideal-theoretic answers for a morphism predicate disagree."""

    def __init__(self, predicate, morphism, brute, criterion):
        self.predicate = predicate
        self.morphism = morphism
        self.brute = brute
        self.criterion = criterion
        super().__init__(
            f"{predicate} of {morphism}: cancellation says {brute}, "
            f"Green criterion says {criterion}"
        )


class NoNormalFactorization(RingConesError):
    pass


class DomainMismatch(RingConesError, ValueError):
    pass


class NoUniqueMax(RingConesError):
    pass


class NoRetraction(RingConesError):
    pass


class NoJoin(RingConesError):
    pass


class NotProper(RingConesError, ValueError):
    pass


class RRViolation(RingConesError):
    def __init__(self, report):
        self.report = report
        failed = [c.claim for c in report.failures()]
        super().__init__(f"RR conditions fail: {', '.join(failed)}")


class SkippedNotNormal(RingConesError):
    pass

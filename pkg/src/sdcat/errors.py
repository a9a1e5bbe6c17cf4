"""Exception types shared across the package."""


class SdcatError(Exception):
    pass


class NotAGroupoid(SdcatError):
    def __init__(self, morphism: int):
        super().__init__(f"morphism {morphism} has no two-sided inverse")
        self.morphism = morphism


class NotLoopFree(SdcatError):
    pass


class TruncationTooSmall(SdcatError):
    pass


class TruncationMismatch(SdcatError):
    pass


class NotASubdivisionShape(SdcatError):
    pass


class HypothesisViolated(SdcatError):
    pass


class NotAnIsomorphism(SdcatError):
    pass


class BourbakiViolated(SdcatError):
    pass


class VarianceInconsistent(SdcatError):
    pass


class ReconstructionFailed(SdcatError):
    pass


class SearchBudgetExceeded(SdcatError):
    """Raised when the node budget runs out; ``result`` holds what was found."""

    def __init__(self, result):
        super().__init__(f"search budget exhausted after {len(result.functors)} results")
        self.result = result

"""Exceptions raised by the graphic_sequences package.

Every error is a ValueError so that callers catching bad input the usual way keep working.
"""


class NegativeDegree(ValueError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"negative degree {value} at position {index}")


class DegreeOutOfRange(ValueError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"degree {value} at position {index} does not fit in 64 bits")


class NotCanonical(ValueError):
    """Raised when a DegreeSequence is built from entries that are not sorted nonincreasing."""


class EmptySequence(ValueError):
    def __init__(self):
        super().__init__("statistics are undefined for the empty sequence")


class DegreeExceedsOrder(ValueError):
    def __init__(self, alpha1: int, n: int):
        self.alpha1 = alpha1
        self.n = n
        super().__init__(f"largest degree {alpha1} exceeds n - 1 = {n - 1}")


class RegularSequence(ValueError):
    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"statistics describe a regular sequence (alpha1 = alphan = {degree})")


class InfeasibleStats(ValueError):
    """Raised when (alpha1, alphan, n, s) cannot describe any sequence the operation accepts."""


class DegenerateDenominator(ValueError):
    """Raised when n * alpha1 == s or s == n * alphan, so the sum-aware bound is undefined."""


class ParameterTooSmall(ValueError):
    def __init__(self, name: str, value: int, minimum: int):
        self.name = name
        self.value = value
        self.minimum = minimum
        super().__init__(f"{name} must be at least {minimum}, got {value}")


class OracleDisagreement(ValueError):
    def __init__(self, sequence: tuple, verdicts: dict):
        self.sequence = tuple(sequence)
        self.verdicts = dict(verdicts)
        super().__init__(f"verdicts disagree on {list(self.sequence)}: {self.verdicts}")

    def __reduce__(self):
        # keep the exception picklable across ProcessPoolExecutor workers
        return (OracleDisagreement, (self.sequence, self.verdicts))

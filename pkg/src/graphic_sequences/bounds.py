"""Sufficient conditions for graphicality and the short-circuiting decision pipeline.

Every condition here is phrased in the statistics (alpha1, alphan, n, s) of a zero-stripped sequence and is evaluated
with exact integer arithmetic: fractions are cleared by cross-multiplying with denominators known to be positive.

The pipeline ``classify`` runs the constant-time checks cheapest first and only falls back to the Erdős–Gallai
inequalities when none of them settles the question:

    strip zeros -> empty -> parity -> alpha1 < n -> near-regular -> ZZ bound -> sum-aware bound -> Erdős–Gallai
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .eg import EgVerdict, eg_reduced
from .errors import DegenerateDenominator
from .seq_core import DegreeSequence, SequenceStats, stats, strip_zeros


class Outcome(str, Enum):
    GRAPHIC = "Graphic"
    INCONCLUSIVE = "Inconclusive"
    NOT_APPLICABLE = "NotApplicable"
    NON_GRAPHIC = "NonGraphic"  # only reported by the screening stages


class Reason(str, Enum):
    ODD_SUM = "OddSum"
    ZERO_MIN_DEGREE = "ZeroMinDegree"
    DEGREE_RANGE = "DegreeRange"
    REGULAR_DENOMINATOR = "RegularDenominator"


class Stage(str, Enum):
    EMPTY = "EmptyCheck"
    PARITY = "ParityCheck"
    DEGREE_RANGE = "DegreeRangeCheck"
    NEAR_REGULAR = "NearRegular"
    ZZ_BOUND = "ZZBound"
    CZ_BOUND = "CZBound"
    ERDOS_GALLAI = "ErdosGallai"


class Verdict(str, Enum):
    GRAPHIC = "graphic"
    NON_GRAPHIC = "non-graphic"


@dataclass(frozen=True)
class BoundVerdict:
    outcome: Outcome
    reason: Optional[Reason] = None

    def __post_init__(self):
        assert (self.outcome == Outcome.NOT_APPLICABLE) == (
            self.reason is not None
        ), f"a reason is given exactly when the outcome is NotApplicable, got {self.outcome} / {self.reason}"

    def to_dict(self) -> dict:
        record = {"outcome": self.outcome.value}
        if self.reason is not None:
            record["reason"] = self.reason.value
        return record

    def __str__(self) -> str:
        if self.reason is not None:
            return f"{self.outcome.value}({self.reason.value})"
        return self.outcome.value


GRAPHIC = BoundVerdict(Outcome.GRAPHIC)
INCONCLUSIVE = BoundVerdict(Outcome.INCONCLUSIVE)
NON_GRAPHIC = BoundVerdict(Outcome.NON_GRAPHIC)


def _not_applicable(reason: Reason) -> BoundVerdict:
    return BoundVerdict(Outcome.NOT_APPLICABLE, reason)


@dataclass(frozen=True)
class BoundComparison:
    """Cross-multiplied form of the sum-aware bound.

    With ``u = n*alpha1 - s > 0`` and ``v = s - n*alphan > 0`` the bound
    ``(alpha1 - alphan) * ((n - alpha1 - 1)/u + alphan/v) >= 1`` is equivalent to
    ``(alpha1 - alphan) * ((n - alpha1 - 1)*v + alphan*u) >= u*v``.
    """

    lhs_cross: int
    rhs_cross: int

    @property
    def satisfied(self) -> bool:
        return self.lhs_cross >= self.rhs_cross

    @property
    def is_equality(self) -> bool:
        return self.lhs_cross == self.rhs_cross

    @property
    def margin(self) -> int:
        return self.lhs_cross - self.rhs_cross


def bound_comparison(stats: SequenceStats) -> BoundComparison:
    """Evaluate both sides of the cross-multiplied sum-aware bound.

    Parameters
    ----------
    stats : SequenceStats
        The statistics (alpha1, alphan, n, s).

    Returns
    -------
    BoundComparison
        The exact integer cross-products.

    Raises
    ------
    DegenerateDenominator
        If ``n*alpha1 == s`` or ``s == n*alphan`` (only possible for regular sequences).
    """
    alpha1, alphan, n, s = stats.as_tuple()
    above = n * alpha1 - s
    below = s - n * alphan
    if above <= 0 or below <= 0:
        raise DegenerateDenominator(
            f"the bound is undefined for regular sequences (n*alpha1 - s = {above}, s - n*alphan = {below})"
        )
    lhs_cross = (alpha1 - alphan) * ((n - alpha1 - 1) * below + alphan * above)
    rhs_cross = above * below
    return BoundComparison(lhs_cross=lhs_cross, rhs_cross=rhs_cross)


def near_regular_check(stats: SequenceStats) -> BoundVerdict:
    """An even-sum sequence whose largest and smallest degrees differ by at most one is graphic."""
    if stats.s % 2 == 1:
        return _not_applicable(Reason.ODD_SUM)
    if stats.alpha1 - stats.alphan <= 1:
        return GRAPHIC
    return INCONCLUSIVE


def zz_check(stats: SequenceStats) -> BoundVerdict:
    """Length bound for positive sequences: graphic when ``4*alphan*n >= (alpha1 + alphan + 1)**2``.

    Parameters
    ----------
    stats : SequenceStats
        The statistics (alpha1, alphan, n, s).

    Returns
    -------
    BoundVerdict
        NotApplicable(OddSum) or NotApplicable(ZeroMinDegree) when the hypotheses fail, otherwise Graphic or
        Inconclusive.
    """
    alpha1, alphan, n, s = stats.as_tuple()
    if s % 2 == 1:
        return _not_applicable(Reason.ODD_SUM)
    if alphan < 1:
        return _not_applicable(Reason.ZERO_MIN_DEGREE)
    if 4 * alphan * n >= (alpha1 + alphan + 1) ** 2:
        return GRAPHIC
    return INCONCLUSIVE


def _cz_applicability(stats: SequenceStats) -> Optional[BoundVerdict]:
    alpha1, alphan, n, s = stats.as_tuple()
    if s % 2 == 1:
        return _not_applicable(Reason.ODD_SUM)
    # the hypothesis alpha1 <= n - 1 cannot be dropped: (8, 6, 8, 50) satisfies the inequality but is not graphic
    if alpha1 > n - 1:
        return _not_applicable(Reason.DEGREE_RANGE)
    if n * alpha1 == s or s == n * alphan:
        return _not_applicable(Reason.REGULAR_DENOMINATOR)
    return None


def cz_check(stats: SequenceStats) -> BoundVerdict:
    """Sum-aware sufficient condition, evaluated through ``bound_comparison``.

    Parameters
    ----------
    stats : SequenceStats
        The statistics (alpha1, alphan, n, s) of a zero-stripped sequence.

    Returns
    -------
    BoundVerdict
        NotApplicable(OddSum), NotApplicable(DegreeRange) when alpha1 > n - 1, NotApplicable(RegularDenominator) when
        a denominator vanishes; otherwise Graphic iff the cross-multiplied inequality holds, else Inconclusive.
    """
    not_applicable = _cz_applicability(stats)
    if not_applicable is not None:
        return not_applicable
    if bound_comparison(stats).satisfied:
        return GRAPHIC
    return INCONCLUSIVE


def reordered_sides(stats: SequenceStats) -> tuple[int, int]:
    """Both sides of the reordered bound after multiplying through by ``4*(alpha1 - alphan)**2``.

    Returns
    -------
    tuple[int, int]
        ``(lhs, rhs)`` with ``lhs = ((1 + alpha1 + alphan)**2 - 4*n*alphan) * (alpha1 - alphan)**2`` and
        ``rhs = (2*s - n*(n - 1) + (n - alphan - 1)*(n - alphan) - alpha1*(alpha1 + 1))**2``.
    """
    alpha1, alphan, n, s = stats.as_tuple()
    gap_squared = (alpha1 - alphan) ** 2
    lhs = ((1 + alpha1 + alphan) ** 2 - 4 * n * alphan) * gap_squared
    rhs = (2 * s - n * (n - 1) + (n - alphan - 1) * (n - alphan) - alpha1 * (alpha1 + 1)) ** 2
    return lhs, rhs


def cz_reordered_check(stats: SequenceStats) -> BoundVerdict:
    """The same bound in its reordered form; agrees with ``cz_check`` wherever both apply."""
    not_applicable = _cz_applicability(stats)
    if not_applicable is not None:
        return not_applicable
    lhs, rhs = reordered_sides(stats)
    if lhs <= rhs:
        return GRAPHIC
    return INCONCLUSIVE


StageResult = Union[BoundVerdict, EgVerdict]


@dataclass(frozen=True)
class PipelineTrace:
    """Record of one ``classify`` run.

    Every stage before ``deciding_stage`` reported Inconclusive or NotApplicable; the last entry of
    ``stage_results`` belongs to the deciding stage.
    """

    verdict: Verdict
    deciding_stage: Stage
    stage_results: tuple[tuple[Stage, StageResult], ...] = field(default_factory=tuple)
    stripped_zeros: int = 0

    @property
    def graphic(self) -> bool:
        return self.verdict == Verdict.GRAPHIC

    def to_dict(self) -> dict:
        stage_records = []
        for stage, result in self.stage_results:
            stage_records.append({"stage": stage.value, **result.to_dict()})
        return {
            "verdict": self.verdict.value,
            "deciding_stage": self.deciding_stage.value,
            "stripped_zeros": self.stripped_zeros,
            "stage_results": stage_records,
        }

    def summary(self) -> str:
        """Compact one-line rendering, e.g. ``ParityCheck:Inconclusive,...,CZBound:Graphic``."""
        parts = []
        for stage, result in self.stage_results:
            if isinstance(result, EgVerdict):
                if result.graphic:
                    rendered = "graphic"
                elif isinstance(result.failure_witness, int):
                    rendered = f"non-graphic(k={result.failure_witness})"
                else:
                    rendered = f"non-graphic({result.failure_witness})"
            else:
                rendered = str(result)
            parts.append(f"{stage.value}:{rendered}")
        return ",".join(parts)


def classify(seq: DegreeSequence) -> PipelineTrace:
    """Decide graphicality, trying the cheap sufficient conditions before the Erdős–Gallai inequalities.

    Parameters
    ----------
    seq : DegreeSequence
        A canonical sequence, zeros allowed.

    Returns
    -------
    PipelineTrace
        A definitive verdict together with the stage that settled it and every stage result on the way.
    """
    stripped = strip_zeros(seq)
    stripped_zeros = len(seq) - len(stripped)
    results = []

    def decide(stage: Stage, result: StageResult, verdict: Verdict) -> PipelineTrace:
        results.append((stage, result))
        return PipelineTrace(
            verdict=verdict, deciding_stage=stage, stage_results=tuple(results), stripped_zeros=stripped_zeros
        )

    if len(stripped) == 0:
        return decide(Stage.EMPTY, GRAPHIC, Verdict.GRAPHIC)
    results.append((Stage.EMPTY, INCONCLUSIVE))

    sequence_stats = stats(stripped)
    if sequence_stats.s % 2 == 1:
        return decide(Stage.PARITY, NON_GRAPHIC, Verdict.NON_GRAPHIC)
    results.append((Stage.PARITY, INCONCLUSIVE))

    if sequence_stats.alpha1 >= sequence_stats.n:
        return decide(Stage.DEGREE_RANGE, NON_GRAPHIC, Verdict.NON_GRAPHIC)
    results.append((Stage.DEGREE_RANGE, INCONCLUSIVE))

    sufficient_conditions = (
        (Stage.NEAR_REGULAR, near_regular_check),
        (Stage.ZZ_BOUND, zz_check),
        (Stage.CZ_BOUND, cz_check),
    )
    for stage, check in sufficient_conditions:
        result = check(sequence_stats)
        if result.outcome == Outcome.GRAPHIC:
            return decide(stage, result, Verdict.GRAPHIC)
        results.append((stage, result))

    eg_verdict = eg_reduced(stripped)
    return decide(Stage.ERDOS_GALLAI, eg_verdict, Verdict.GRAPHIC if eg_verdict.graphic else Verdict.NON_GRAPHIC)

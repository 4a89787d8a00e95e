import pytest

from graphic_sequences import (
    DegenerateDenominator,
    Outcome,
    Reason,
    SequenceStats,
    Stage,
    Verdict,
    bound_comparison,
    canonicalize,
    classify,
    cz_check,
    cz_reordered_check,
    eg_full,
    enumerate_sequences,
    near_regular_check,
    reordered_sides,
    stats,
    strip_zeros,
    threshold_majorant,
    zz_check,
)

from .conftest import all_feasible_stats, stats_of_length


def make_stats(alpha1, alphan, n, s) -> SequenceStats:
    return SequenceStats(alpha1=alpha1, alphan=alphan, n=n, s=s)


def test_cz_equality_case():
    comparison = bound_comparison(make_stats(4, 2, 5, 14))
    assert (comparison.lhs_cross, comparison.rhs_cross) == (24, 24)
    assert comparison.is_equality
    assert cz_check(make_stats(4, 2, 5, 14)).outcome == Outcome.GRAPHIC


def test_cz_inconclusive():
    comparison = bound_comparison(make_stats(4, 1, 5, 14))
    assert (comparison.lhs_cross, comparison.rhs_cross) == (18, 54)
    assert comparison.margin == -36
    assert cz_check(make_stats(4, 1, 5, 14)).outcome == Outcome.INCONCLUSIVE


@pytest.mark.parametrize(
    "statistics, reason",
    [
        ((8, 6, 8, 50), Reason.DEGREE_RANGE),
        ((4, 2, 5, 13), Reason.ODD_SUM),
        ((3, 3, 4, 12), Reason.REGULAR_DENOMINATOR),
    ],
)
def test_cz_not_applicable(statistics, reason):
    for check in (cz_check, cz_reordered_check):
        verdict = check(make_stats(*statistics))
        assert verdict.outcome == Outcome.NOT_APPLICABLE
        assert verdict.reason == reason


def test_degree_range_hypothesis_is_needed():
    # the inequality holds but the majorant is not graphic
    statistics = make_stats(8, 6, 8, 50)
    assert bound_comparison(statistics).satisfied
    assert not eg_full(threshold_majorant(statistics)).graphic


def test_bound_comparison_rejects_regular_stats():
    with pytest.raises(DegenerateDenominator):
        bound_comparison(make_stats(3, 3, 4, 12))


def test_reordered_sides():
    assert reordered_sides(make_stats(4, 2, 5, 14)) == (36, 36)
    assert reordered_sides(make_stats(3, 2, 4, 10)) == (4, 4)
    assert cz_reordered_check(make_stats(3, 2, 4, 10)).outcome == Outcome.GRAPHIC


@pytest.mark.parametrize("n_max", [12])
def test_reordered_form_agrees_with_cross_multiplied_form(n_max):
    for statistics in all_feasible_stats(n_max):
        sequence_stats = make_stats(*statistics)
        assert cz_check(sequence_stats) == cz_reordered_check(sequence_stats), statistics


@pytest.mark.parametrize(
    "statistics, outcome",
    [
        ((3, 2, 5, 12), Outcome.GRAPHIC),
        ((3, 1, 4, 8), Outcome.INCONCLUSIVE),
    ],
)
def test_zz_check(statistics, outcome):
    assert zz_check(make_stats(*statistics)).outcome == outcome


def test_zz_not_applicable():
    assert zz_check(make_stats(2, 0, 3, 4)).reason == Reason.ZERO_MIN_DEGREE
    assert zz_check(make_stats(3, 1, 4, 7)).reason == Reason.ODD_SUM


@pytest.mark.parametrize(
    "statistics, outcome",
    [
        ((2, 2, 3, 6), Outcome.GRAPHIC),
        ((3, 2, 4, 10), Outcome.GRAPHIC),
        ((4, 2, 5, 14), Outcome.INCONCLUSIVE),
    ],
)
def test_near_regular_check(statistics, outcome):
    assert near_regular_check(make_stats(*statistics)).outcome == outcome


def test_near_regular_not_applicable():
    verdict = near_regular_check(make_stats(2, 1, 3, 5))
    assert verdict.outcome == Outcome.NOT_APPLICABLE
    assert str(verdict) == "NotApplicable(OddSum)"


def test_sufficient_conditions_only_accept_graphic_majorants():
    for statistics in all_feasible_stats(14):
        sequence_stats = make_stats(*statistics)
        if any(check(sequence_stats).outcome == Outcome.GRAPHIC for check in (zz_check, cz_check)):
            assert eg_full(threshold_majorant(sequence_stats)).graphic, statistics


def test_length_bound_implies_sum_aware_bound():
    for statistics in all_feasible_stats(14):
        sequence_stats = make_stats(*statistics)
        cz_verdict = cz_check(sequence_stats)
        if zz_check(sequence_stats).outcome == Outcome.GRAPHIC and cz_verdict.outcome != Outcome.NOT_APPLICABLE:
            assert cz_verdict.outcome == Outcome.GRAPHIC, statistics


def test_sum_aware_bound_is_invariant_under_complement():
    for alpha1, alphan, n, s in all_feasible_stats(12):
        complement_stats = make_stats(n - 1 - alphan, n - 1 - alpha1, n, n * (n - 1) - s)
        assert bound_comparison(make_stats(alpha1, alphan, n, s)).margin == bound_comparison(complement_stats).margin


@pytest.mark.parametrize(
    "degrees, verdict, stage",
    [
        ([4, 4, 2, 2, 2], Verdict.GRAPHIC, Stage.CZ_BOUND),
        ([5, 3, 2, 2, 2], Verdict.NON_GRAPHIC, Stage.DEGREE_RANGE),
        ([4, 4, 3, 2, 1], Verdict.NON_GRAPHIC, Stage.ERDOS_GALLAI),
        ([3, 2, 1, 0], Verdict.NON_GRAPHIC, Stage.DEGREE_RANGE),
        ([1, 1, 1], Verdict.NON_GRAPHIC, Stage.PARITY),
        ([2, 2, 2], Verdict.GRAPHIC, Stage.NEAR_REGULAR),
        ([3, 3, 2, 2, 2, 2], Verdict.GRAPHIC, Stage.NEAR_REGULAR),
        ([4, 4, 2, 2, 1, 1], Verdict.GRAPHIC, Stage.ERDOS_GALLAI),
        ([], Verdict.GRAPHIC, Stage.EMPTY),
        ([0, 0], Verdict.GRAPHIC, Stage.EMPTY),
    ],
)
def test_classify(degrees, verdict, stage):
    trace = classify(canonicalize(degrees))
    assert trace.verdict == verdict
    assert trace.deciding_stage == stage
    assert trace.stage_results[-1][0] == stage


def test_classify_trace_summary():
    assert classify(canonicalize([4, 4, 2, 2, 2])).summary() == (
        "EmptyCheck:Inconclusive,ParityCheck:Inconclusive,DegreeRangeCheck:Inconclusive,"
        "NearRegular:Inconclusive,ZZBound:Inconclusive,CZBound:Graphic"
    )
    assert classify(canonicalize([4, 4, 3, 2, 1])).summary().endswith("ErdosGallai:non-graphic(k=2)")


def test_classify_strips_zeros():
    trace = classify(canonicalize([3, 2, 1, 0]))
    assert trace.stripped_zeros == 1
    record = trace.to_dict()
    assert record["verdict"] == "non-graphic"
    assert record["stage_results"][-1] == {"stage": "DegreeRangeCheck", "outcome": "NonGraphic"}


def test_classify_zz_stage():
    # (4, 2, 7, 16) has a gap of 2 but satisfies the length bound
    trace = classify(canonicalize([4, 2, 2, 2, 2, 2, 2]))
    assert trace.deciding_stage == Stage.ZZ_BOUND
    assert trace.graphic


@pytest.mark.slow
@pytest.mark.parametrize("n", range(2, 41))
def test_bound_identities_over_the_full_tuple_space(n):
    for statistics in stats_of_length(n, attainable=False):
        alpha1, alphan, _, s = statistics
        if alphan < 1 or s % 2 == 1:
            continue
        sequence_stats = make_stats(*statistics)
        cz_verdict = cz_check(sequence_stats)
        assert cz_verdict == cz_reordered_check(sequence_stats), statistics
        complement_stats = make_stats(n - 1 - alphan, n - 1 - alpha1, n, n * (n - 1) - s)
        assert bound_comparison(sequence_stats).margin == bound_comparison(complement_stats).margin, statistics
        if zz_check(sequence_stats).outcome == Outcome.GRAPHIC:
            assert cz_verdict.outcome == Outcome.GRAPHIC, statistics


def test_degree_range_precondition_case():
    seq = canonicalize([8, 6, 6, 6, 6, 6, 6, 6])
    assert cz_check(stats(seq)) == cz_check(make_stats(8, 6, 8, 50))
    assert cz_check(stats(seq)).reason == Reason.DEGREE_RANGE
    trace = classify(seq)
    assert not trace.graphic
    assert trace.deciding_stage == Stage.DEGREE_RANGE


@pytest.mark.parametrize("n", range(1, 8))
def test_classify_ignores_isolated_vertices(n):
    for seq in enumerate_sequences(n, n - 1):
        with_zeros, without_zeros = classify(seq), classify(strip_zeros(seq))
        assert with_zeros.verdict == without_zeros.verdict
        assert with_zeros.deciding_stage == without_zeros.deciding_stage


def test_cz_bound_is_not_necessary_for_a_graphic_majorant():
    statistics = make_stats(3, 1, 5, 8)
    comparison = bound_comparison(statistics)
    assert (comparison.lhs_cross, comparison.rhs_cross) == (20, 21)
    assert cz_check(statistics).outcome == Outcome.INCONCLUSIVE
    assert threshold_majorant(statistics).degrees == (3, 2, 1, 1, 1)
    assert eg_full(threshold_majorant(statistics)).graphic

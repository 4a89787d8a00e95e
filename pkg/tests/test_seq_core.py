import pytest

from graphic_sequences import (
    DegreeExceedsOrder,
    DegreeOutOfRange,
    DegreeSequence,
    Direction,
    EmptySequence,
    InfeasibleStats,
    NegativeDegree,
    NotCanonical,
    RegularSequence,
    SequenceStats,
    canonicalize,
    complement,
    eg_full,
    enumerate_sequences,
    majorizes,
    prefix_sums,
    random_with_stats,
    stats,
    strip_zeros,
    threshold_majorant,
)

from .conftest import all_sequences, sequence_id


def test_canonicalize_sorts_nonincreasing():
    assert canonicalize([1, 3, 0, 2]).degrees == (3, 2, 1, 0)
    assert canonicalize([]).degrees == ()


def test_canonicalize_reports_position_of_negative_degree():
    with pytest.raises(NegativeDegree) as excinfo:
        canonicalize([2, -1, 3])
    assert excinfo.value.index == 1
    assert excinfo.value.value == -1


def test_canonicalize_rejects_degrees_beyond_64_bits():
    with pytest.raises(DegreeOutOfRange):
        canonicalize([2**63])
    assert canonicalize([2**63 - 1])[0] == 2**63 - 1


def test_degree_sequence_requires_nonincreasing_order():
    with pytest.raises(NotCanonical):
        DegreeSequence((1, 2))


def test_negative_degree_is_a_value_error():
    with pytest.raises(ValueError):
        DegreeSequence((2, -1))


def test_strip_zeros():
    assert strip_zeros(canonicalize([3, 1, 0, 0])).degrees == (3, 1)
    assert strip_zeros(canonicalize([0, 0])).degrees == ()
    assert strip_zeros(DegreeSequence(())).degrees == ()


def test_stats():
    assert stats(canonicalize([4, 4, 2, 2, 2])).as_tuple() == (4, 2, 5, 14)
    with pytest.raises(EmptySequence):
        stats(DegreeSequence(()))


@pytest.mark.parametrize(
    "alpha1, alphan, n, s",
    [(3, 1, 0, 0), (1, 2, 3, 4), (3, 1, 4, 3), (3, 1, 4, 13), (3, -1, 4, 4)],
)
def test_infeasible_stats(alpha1, alphan, n, s):
    with pytest.raises(InfeasibleStats):
        SequenceStats(alpha1=alpha1, alphan=alphan, n=n, s=s)


def test_complement():
    assert complement(canonicalize([4, 4, 2, 2, 2])).degrees == (2, 2, 2, 0, 0)
    assert complement(DegreeSequence(())).degrees == ()
    with pytest.raises(DegreeExceedsOrder):
        complement(canonicalize([5, 1]))


@pytest.mark.parametrize("seq", all_sequences(6), ids=sequence_id)
def test_complement_is_an_involution(seq):
    assert complement(complement(seq)) == seq


def test_prefix_sums():
    assert prefix_sums(canonicalize([3, 2, 1])) == [3, 5, 6]
    assert prefix_sums(DegreeSequence(())) == []


@pytest.mark.parametrize(
    "a, b, direction",
    [
        ([3, 1], [2, 2], Direction.MAJORIZES),
        ([2, 2], [3, 1], Direction.MAJORIZED_BY),
        ([2, 2], [2, 2], Direction.EQUAL),
        ([3, 1, 1, 1], [2, 2, 2, 0], Direction.INCOMPARABLE),
        ([2, 2], [2, 1, 1], Direction.INCOMPARABLE),
        ([2, 2], [2, 1], Direction.INCOMPARABLE),
    ],
)
def test_majorizes(a, b, direction):
    result = majorizes(canonicalize(a), canonicalize(b))
    assert result.direction == direction
    assert result.comparable == (direction != Direction.INCOMPARABLE)


@pytest.mark.parametrize(
    "statistics, expected",
    [
        ((4, 2, 5, 14), (4, 4, 2, 2, 2)),
        ((3, 1, 4, 8), (3, 3, 1, 1)),
        ((3, 1, 4, 9), (3, 3, 2, 1)),
        ((3, 1, 4, 12), (3, 3, 3, 3)),
        ((5, 0, 3, 7), (5, 2, 0)),
    ],
)
def test_threshold_majorant(statistics, expected):
    alpha1, alphan, n, s = statistics
    majorant = threshold_majorant(SequenceStats(alpha1=alpha1, alphan=alphan, n=n, s=s))
    assert majorant.degrees == expected
    assert majorant.sum == s


def test_threshold_majorant_rejects_regular_and_single_entry_stats():
    with pytest.raises(RegularSequence):
        threshold_majorant(SequenceStats(alpha1=2, alphan=2, n=3, s=6))
    with pytest.raises(InfeasibleStats):
        threshold_majorant(SequenceStats(alpha1=3, alphan=1, n=1, s=2))


@pytest.mark.parametrize("seed", range(20))
def test_threshold_majorant_majorizes_every_sequence_with_the_same_stats(seed):
    sequence_stats = SequenceStats(alpha1=7, alphan=2, n=9, s=36)
    majorant = threshold_majorant(sequence_stats)
    sample = random_with_stats(sequence_stats, seed=seed)
    assert majorizes(majorant, sample).direction in (Direction.MAJORIZES, Direction.EQUAL)


@pytest.mark.parametrize("n", range(1, 7))
def test_majorization_is_a_partial_order_on_each_class(n):
    sequences = list(enumerate_sequences(n, n - 1))
    by_sum = {}
    for seq in sequences:
        by_sum.setdefault(seq.sum, []).append(seq)
    dominates = {Direction.MAJORIZES, Direction.EQUAL}
    for members in by_sum.values():
        for a in members:
            assert majorizes(a, a).direction == Direction.EQUAL
            for b in members:
                a_over_b = majorizes(a, b).direction in dominates
                b_over_a = majorizes(b, a).direction in dominates
                if a_over_b and b_over_a:
                    assert a == b
                for c in members:
                    if a_over_b and majorizes(b, c).direction in dominates:
                        assert majorizes(a, c).direction in dominates


@pytest.mark.parametrize("n", range(1, 8))
def test_sequences_majorized_by_a_graphic_sequence_are_graphic(n):
    by_sum = {}
    for seq in enumerate_sequences(n, n - 1):
        by_sum.setdefault(seq.sum, []).append((seq, eg_full(seq).graphic))
    for members in by_sum.values():
        for a, a_graphic in members:
            if not a_graphic:
                continue
            for b, b_graphic in members:
                if majorizes(a, b).direction == Direction.MAJORIZES:
                    assert b_graphic, (a.to_list(), b.to_list())


def test_strip_zeros_returns_the_same_sequence_without_zeros():
    seq = canonicalize([3, 2, 2, 1])
    assert strip_zeros(seq) is seq


def test_from_canonical_matches_validated_constructor():
    seq = DegreeSequence.from_canonical((3, 2, 1, 0))
    assert seq == DegreeSequence((3, 2, 1, 0))
    assert seq.sum == 6
    assert strip_zeros(seq) == DegreeSequence((3, 2, 1))

import pytest

from graphic_sequences import DegreeSequence, canonicalize, enumerate_sequences


@pytest.fixture
def sharp_base() -> DegreeSequence:
    """Equality case of the sum-aware bound for alpha1 = 4."""
    return canonicalize([4, 4, 2, 2, 2])


def all_sequences(n_max: int, *, include_empty: bool = True) -> list[DegreeSequence]:
    """Every canonical sequence of length at most n_max with entries at most n - 1."""
    sequences = [DegreeSequence(())] if include_empty else []
    for n in range(1, n_max + 1):
        sequences.extend(enumerate_sequences(n, n - 1))
    return sequences


def stats_of_length(n: int, *, attainable: bool = True) -> list[tuple[int, int, int, int]]:
    """Every non-regular (alpha1, alphan, n, s) with alpha1 <= n - 1.

    With ``attainable`` the sum leaves room for both extremes to occur, otherwise only n*alphan < s < n*alpha1.
    """
    tuples = []
    for alpha1 in range(1, n):
        for alphan in range(alpha1):
            slack = alpha1 - alphan if attainable else 1
            tuples.extend((alpha1, alphan, n, s) for s in range(n * alphan + slack, n * alpha1 - slack + 1))
    return tuples


def all_feasible_stats(n_max: int) -> list[tuple[int, int, int, int]]:
    return [statistics for n in range(2, n_max + 1) for statistics in stats_of_length(n)]


def sequence_id(seq: DegreeSequence) -> str:
    return "-".join(str(degree) for degree in seq) or "empty"

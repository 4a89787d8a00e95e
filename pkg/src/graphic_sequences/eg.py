"""Erdős–Gallai characterization of graphic sequences.

For a nonincreasing sequence with even sum, the sequence is graphic iff for every k in [1, n]

    sum(alpha[:k]) <= k*(k-1) + sum(min(k, alpha_i) for i > k)

``eg_full`` evaluates all n inequalities at once; ``eg_reduced`` evaluates them only at the indices where the
sequence drops (up to the cutoff) plus the Durfee number, which is enough to decide graphicality.
"""
from dataclasses import dataclass
from typing import Literal, Optional, Union

import numpy as np

from .seq_core import DegreeSequence

PARITY_FAILURE = "ParityFailure"

# above this magnitude k*(k-1) and the prefix sums are evaluated on Python ints instead of int64
_INT64_SAFE_MAGNITUDE = 2**62


@dataclass(frozen=True)
class EgVerdict:
    """Outcome of an Erdős–Gallai test.

    ``failure_witness`` is the first violated index k (1-based) among ``checked_indices``, or ``"ParityFailure"`` when
    the degree sum is odd, or None when the sequence is graphic.
    """

    graphic: bool
    failure_witness: Union[int, Literal["ParityFailure"], None] = None
    checked_indices: tuple[int, ...] = ()

    def __post_init__(self):
        assert not (self.graphic and self.failure_witness is not None), "a graphic verdict cannot carry a witness"

    def to_dict(self) -> dict:
        return {
            "graphic": self.graphic,
            "failure_witness": self.failure_witness,
            "checked_indices": list(self.checked_indices),
        }


@dataclass(frozen=True)
class IndexSet:
    indices: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices


def _as_array(seq: DegreeSequence) -> np.ndarray:
    n = len(seq)
    alpha1 = seq[0] if n > 0 else 0
    if n * (n + alpha1) < _INT64_SAFE_MAGNITUDE:
        return np.asarray(seq.degrees, dtype=np.int64)
    return np.asarray(seq.degrees, dtype=object)


def _eg_margins(degrees: np.ndarray, ks: np.ndarray) -> np.ndarray:
    """Right-hand side minus left-hand side of the EG inequality at each k in ``ks``.

    The min-term is split at the crossover c(k) = #{i : alpha_i >= k}: positions k+1..c(k) contribute k each and
    positions after max(k, c(k)) contribute their own degree, read off the prefix sums.
    """
    n = len(degrees)
    prefix = np.zeros(n + 1, dtype=degrees.dtype)
    prefix[1:] = np.cumsum(degrees)
    values = ks.astype(degrees.dtype)
    at_least_k = n - np.searchsorted(degrees[::-1], values, side="left")
    tail_start = np.maximum(ks, at_least_k)
    capped = values * np.maximum(at_least_k - ks, 0)
    rhs = values * (values - 1) + capped + (prefix[n] - prefix[tail_start])
    lhs = prefix[ks]
    return rhs - lhs


def _first_violation(degrees: np.ndarray, indices: list[int]) -> EgVerdict:
    ks = np.asarray(indices, dtype=np.int64)
    margins = _eg_margins(degrees, ks)
    violated = np.flatnonzero(margins < 0)
    if len(violated) == 0:
        return EgVerdict(graphic=True, checked_indices=tuple(indices))
    return EgVerdict(graphic=False, failure_witness=int(ks[violated[0]]), checked_indices=tuple(indices))


def eg_inequality(seq: DegreeSequence, k: int) -> tuple[int, int]:
    """Evaluate both sides of the EG inequality at a single index k directly from the definition.

    Parameters
    ----------
    seq : DegreeSequence
        The sequence to evaluate.
    k : int
        The 1-based index, 1 <= k <= n.

    Returns
    -------
    tuple[int, int]
        ``(lhs, rhs)``; the inequality holds iff ``lhs <= rhs``.
    """
    n = len(seq)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    lhs = sum(seq[i] for i in range(k))
    rhs = k * (k - 1) + sum(min(k, seq[i]) for i in range(k, n))
    return lhs, rhs


def eg_full(seq: DegreeSequence) -> EgVerdict:
    """Test every Erdős–Gallai inequality.

    Parameters
    ----------
    seq : DegreeSequence
        A canonical sequence. Sequences with alpha1 >= n are answered correctly (they fail at k = 1) although the
        pipeline screens them out before reaching this point.

    Returns
    -------
    EgVerdict
        Graphic iff the sum is even and all n inequalities hold; otherwise the witness is the parity tag or the first
        violated index.
    """
    if seq.sum % 2 == 1:
        return EgVerdict(graphic=False, failure_witness=PARITY_FAILURE)
    n = len(seq)
    if n == 0:
        return EgVerdict(graphic=True)
    return _first_violation(_as_array(seq), list(range(1, n + 1)))


def durfee_number(seq: DegreeSequence) -> int:
    """Largest k with alpha_k >= k, or 0 when there is none."""
    count = 0
    for k, degree in enumerate(seq, start=1):
        if degree < k:
            break
        count = k
    return count


def reduction_indices(seq: DegreeSequence) -> IndexSet:
    """Indices at which the Erdős–Gallai inequalities still need checking.

    The set contains every drop index i (alpha_i > alpha_{i+1}) up to the cutoff m = max{k : alpha_k >= k - 1},
    plus the Durfee number max{k : alpha_k >= k}. Past the Durfee number the EG slack is nondecreasing and inside a
    run of equal degrees below it the slack is concave, so the minimum over all k is attained in this set.

    Parameters
    ----------
    seq : DegreeSequence
        A canonical sequence.

    Returns
    -------
    IndexSet
        Sorted 1-based indices; never empty for nonempty input.
    """
    if len(seq) == 0:
        return IndexSet()
    return _reduction_indices(_as_array(seq))


def _reduction_indices(degrees: np.ndarray) -> IndexSet:
    # alpha_k - k is strictly decreasing, so both conditions hold on a prefix and counting finds its end
    positions = np.arange(1, len(degrees) + 1)
    durfee = int(np.count_nonzero(degrees >= positions))
    cutoff = int(np.count_nonzero(degrees >= positions - 1))
    drops = np.flatnonzero(degrees[:-1] > degrees[1:]) + 1
    indices = np.union1d(drops[drops <= cutoff], [max(1, durfee)])
    return IndexSet(tuple(int(index) for index in indices))


def eg_reduced(seq: DegreeSequence, indices: Optional[IndexSet] = None) -> EgVerdict:
    """Erdős–Gallai test restricted to ``reduction_indices``; same verdict as ``eg_full``.

    Parameters
    ----------
    seq : DegreeSequence
        A canonical sequence.
    indices : IndexSet, optional
        Precomputed reduction indices, by default computed from ``seq``.

    Returns
    -------
    EgVerdict
        The verdict with ``checked_indices`` listing the evaluated indices.
    """
    if seq.sum % 2 == 1:
        return EgVerdict(graphic=False, failure_witness=PARITY_FAILURE)
    if len(seq) == 0:
        return EgVerdict(graphic=True)
    degrees = _as_array(seq)
    if indices is None:
        indices = _reduction_indices(degrees)
    return _first_violation(degrees, list(indices.indices))

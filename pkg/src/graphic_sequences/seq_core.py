"""Canonical degree sequences and the order-theoretic operations on them.

A degree sequence is stored nonincreasing, so alpha1 is always the first entry and alphan the last. The sum-aware
bound only depends on the four statistics (alpha1, alphan, n, s); the threshold majorant built from them is the
sequence that majorizes every other sequence sharing those statistics.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import accumulate
from typing import Iterable, Iterator, Union, overload

from .errors import (
    DegreeExceedsOrder,
    DegreeOutOfRange,
    EmptySequence,
    InfeasibleStats,
    NegativeDegree,
    NotCanonical,
    RegularSequence,
)

MAX_DEGREE = 2**63 - 1


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing list of nonnegative integer degrees; the empty sequence is allowed."""

    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        degrees = tuple(int(degree) for degree in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        for index, degree in enumerate(degrees):
            if degree < 0:
                raise NegativeDegree(index=index, value=degree)
        for index in range(len(degrees) - 1):
            if degrees[index] < degrees[index + 1]:
                raise NotCanonical(
                    f"degrees must be nonincreasing, found {degrees[index]} < {degrees[index + 1]} at position {index}"
                )

    @property
    def n(self) -> int:
        return len(self.degrees)

    @classmethod
    def from_canonical(cls, degrees: tuple[int, ...]) -> "DegreeSequence":
        """Wrap a tuple of ints already known to be nonincreasing and nonnegative, skipping validation."""
        seq = object.__new__(cls)
        object.__setattr__(seq, "degrees", degrees)
        return seq

    @cached_property
    def sum(self) -> int:
        return sum(self.degrees)

    def to_list(self) -> list[int]:
        return list(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    @overload
    def __getitem__(self, index: int) -> int:
        ...

    @overload
    def __getitem__(self, index: slice) -> tuple[int, ...]:
        ...

    def __getitem__(self, index: Union[int, slice]):
        return self.degrees[index]

    def __str__(self) -> str:
        return " ".join(str(degree) for degree in self.degrees)


@dataclass(frozen=True)
class SequenceStats:
    """The four statistics (alpha1, alphan, n, s) every sufficient condition is phrased in."""

    alpha1: int
    alphan: int
    n: int
    s: int

    def __post_init__(self):
        if self.n < 1:
            raise InfeasibleStats(f"n must be positive, got {self.n}")
        if not 0 <= self.alphan <= self.alpha1:
            raise InfeasibleStats(f"need 0 <= alphan <= alpha1, got alphan={self.alphan}, alpha1={self.alpha1}")
        if not self.n * self.alphan <= self.s <= self.n * self.alpha1:
            raise InfeasibleStats(
                f"need n*alphan <= s <= n*alpha1, got s={self.s} outside "
                f"[{self.n * self.alphan}, {self.n * self.alpha1}]"
            )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.alpha1, self.alphan, self.n, self.s)


class Direction(str, Enum):
    MAJORIZES = "majorizes"
    MAJORIZED_BY = "majorized-by"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class MajorizationResult:
    comparable: bool
    direction: Direction


def canonicalize(raw: Iterable[int]) -> DegreeSequence:
    """Sort a raw list of degrees into a canonical DegreeSequence.

    Parameters
    ----------
    raw : Iterable[int]
        The degrees in any order.

    Returns
    -------
    DegreeSequence
        The same multiset sorted nonincreasing.

    Raises
    ------
    NegativeDegree
        If any entry is negative; the index refers to the position in ``raw``.
    DegreeOutOfRange
        If any entry does not fit in a signed 64-bit integer.
    """
    degrees = [int(degree) for degree in raw]
    for index, degree in enumerate(degrees):
        if degree < 0:
            raise NegativeDegree(index=index, value=degree)
        if degree > MAX_DEGREE:
            raise DegreeOutOfRange(index=index, value=degree)
    return DegreeSequence.from_canonical(tuple(sorted(degrees, reverse=True)))


def strip_zeros(seq: DegreeSequence) -> DegreeSequence:
    """Remove the trailing zeros (isolated vertices), which never change graphicality."""
    end = len(seq)
    if end == 0 or seq[end - 1] > 0:
        return seq
    while end > 0 and seq[end - 1] == 0:
        end -= 1
    return DegreeSequence.from_canonical(seq[:end])


def stats(seq: DegreeSequence) -> SequenceStats:
    if len(seq) == 0:
        raise EmptySequence()
    return SequenceStats(alpha1=seq[0], alphan=seq[-1], n=len(seq), s=seq.sum)


def complement(seq: DegreeSequence) -> DegreeSequence:
    """Degree sequence of the complement graph, ``(n - alphan - 1, ..., n - alpha1 - 1)``.

    Raises
    ------
    DegreeExceedsOrder
        If alpha1 > n - 1, in which case no complement exists.
    """
    n = len(seq)
    if n == 0:
        return seq
    if seq[0] > n - 1:
        raise DegreeExceedsOrder(alpha1=seq[0], n=n)
    return DegreeSequence.from_canonical(tuple(n - 1 - degree for degree in reversed(seq.degrees)))


def prefix_sums(seq: DegreeSequence) -> list[int]:
    return list(accumulate(seq.degrees))


def majorizes(a: DegreeSequence, b: DegreeSequence) -> MajorizationResult:
    """Compare two sequences in the majorization order.

    Sequences of different length or different sum are reported as incomparable instead of raising.

    Parameters
    ----------
    a : DegreeSequence
    b : DegreeSequence

    Returns
    -------
    MajorizationResult
        ``majorizes`` when every prefix sum of ``a`` is at least the matching prefix sum of ``b``,
        ``majorized-by`` for the reverse, ``equal`` when both hold.
    """
    if len(a) != len(b) or a.sum != b.sum:
        return MajorizationResult(comparable=False, direction=Direction.INCOMPARABLE)
    a_ge_b, b_ge_a = True, True
    for prefix_a, prefix_b in zip(prefix_sums(a), prefix_sums(b)):
        if prefix_a < prefix_b:
            a_ge_b = False
        elif prefix_a > prefix_b:
            b_ge_a = False
    if a_ge_b and b_ge_a:
        return MajorizationResult(comparable=True, direction=Direction.EQUAL)
    if a_ge_b:
        return MajorizationResult(comparable=True, direction=Direction.MAJORIZES)
    if b_ge_a:
        return MajorizationResult(comparable=True, direction=Direction.MAJORIZED_BY)
    return MajorizationResult(comparable=False, direction=Direction.INCOMPARABLE)


def threshold_majorant(stats: SequenceStats) -> DegreeSequence:
    """Build the sequence of p copies of alpha1, one middle value, and alphan for the rest.

    ``p = (s - n*alphan) // (alpha1 - alphan)`` and the middle value is ``alphan`` plus the remainder, which makes the
    decomposition ``s = p*alpha1 + middle + (n - p - 1)*alphan`` unique. When ``s = n*alpha1`` the alpha1 block takes
    ``n - 1`` entries and the middle value is alpha1 itself.

    Parameters
    ----------
    stats : SequenceStats
        The statistics (alpha1, alphan, n, s); alpha1 must exceed alphan and n must be at least 2.

    Returns
    -------
    DegreeSequence
        The threshold majorant, which majorizes every canonical sequence with entries in [alphan, alpha1], length n
        and sum s.

    Raises
    ------
    RegularSequence
        If alpha1 == alphan.
    InfeasibleStats
        If n < 2.
    """
    alpha1, alphan, n, s = stats.as_tuple()
    if alpha1 == alphan:
        raise RegularSequence(degree=alpha1)
    if n < 2:
        raise InfeasibleStats(f"the threshold majorant needs n >= 2, got n={n}")
    p, remainder = divmod(s - n * alphan, alpha1 - alphan)
    middle = alphan + remainder
    if p >= n:
        p, middle = n - 1, alpha1
    degrees = (alpha1,) * p + (middle,) + (alphan,) * (n - p - 1)
    assert sum(degrees) == s, f"threshold majorant {degrees} does not sum to {s}"
    return DegreeSequence(degrees)

"""Sequence generators: random members of a statistics class, the sharpness family, and mixed random corpora."""
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import InfeasibleStats, ParameterTooSmall
from .seq_core import DegreeSequence, SequenceStats, canonicalize, threshold_majorant


class Perturbation(str, Enum):
    INCREASE_MAX = "IncreaseMax"
    DECREASE_LENGTH = "DecreaseLength"
    DECREASE_MIN = "DecreaseMin"
    INCREASE_SUM = "IncreaseSum"


@dataclass(frozen=True)
class SharpnessInstance:
    """A sequence meeting the sum-aware bound with equality and four single-parameter perturbations of it.

    The base has alphan = 2, n = alpha1 + 1 and s = 4*alpha1 - 2. Each perturbation moves exactly one of those
    parameters past the bound and admits a non-graphic sequence.
    """

    alpha1: int
    base: DegreeSequence
    perturbations: dict = field(default_factory=dict)

    def labeled(self) -> list[tuple[str, DegreeSequence]]:
        return [("base", self.base)] + [(label.value, seq) for label, seq in self.perturbations.items()]


def random_with_stats(stats: SequenceStats, seed: int) -> DegreeSequence:
    """Draw a random canonical sequence with exactly the given statistics.

    The first entry is pinned to alpha1 and the last to alphan so both extremes are attained. The middle entries
    start at alphan and the remaining sum is spread over them in random bounded increments.

    Parameters
    ----------
    stats : SequenceStats
        The target (alpha1, alphan, n, s).
    seed : int
        Seed for ``numpy.random.default_rng``; the same (stats, seed) always gives the same sequence.

    Returns
    -------
    DegreeSequence
        A sequence with entries in [alphan, alpha1], length n and sum s.

    Raises
    ------
    InfeasibleStats
        If alpha1 == alphan, n < 2, or s leaves no room for both extremes to be attained.
    """
    alpha1, alphan, n, s = stats.as_tuple()
    gap = alpha1 - alphan
    if gap <= 0:
        raise InfeasibleStats(f"random_with_stats needs alpha1 > alphan, got alpha1 = alphan = {alpha1}")
    if n < 2:
        raise InfeasibleStats(f"random_with_stats needs n >= 2, got n={n}")
    if not n * alphan + gap <= s <= n * alpha1 - gap:
        raise InfeasibleStats(
            f"s={s} must lie in [{n * alphan + gap}, {n * alpha1 - gap}] for both extremes to be attained"
        )
    rng = np.random.default_rng(seed)
    middle = [alphan] * (n - 2)
    residual = s - n * alphan - gap
    while residual > 0:
        open_slots = [index for index, degree in enumerate(middle) if degree < alpha1]
        index = open_slots[int(rng.integers(len(open_slots)))]
        increment = int(rng.integers(1, min(alpha1 - middle[index], residual) + 1))
        middle[index] += increment
        residual -= increment
    return canonicalize([alpha1, *middle, alphan])


def sharpness_family(alpha1: int) -> SharpnessInstance:
    """Build the equality case of the sum-aware bound for a given alpha1 and its four perturbations.

    Parameters
    ----------
    alpha1 : int
        The largest degree, at least 3.

    Returns
    -------
    SharpnessInstance
        base = threshold majorant of (alpha1, 2, alpha1 + 1, 4*alpha1 - 2) and the perturbations
        IncreaseMax (alpha1 + 1, alpha1 - 1, 2 x (alpha1 - 1)), DecreaseLength (alpha1, alpha1, 4, 2 x (alpha1 - 3)),
        DecreaseMin (alpha1, alpha1, 3, 2 x (alpha1 - 3), 1) and IncreaseSum (alpha1, alpha1, 4, 2 x (alpha1 - 2)),
        each sorted into canonical order.

    Raises
    ------
    ParameterTooSmall
        If alpha1 < 3.
    """
    if alpha1 < 3:
        raise ParameterTooSmall(name="alpha1", value=alpha1, minimum=3)
    base = threshold_majorant(SequenceStats(alpha1=alpha1, alphan=2, n=alpha1 + 1, s=4 * alpha1 - 2))
    perturbations = {
        Perturbation.INCREASE_MAX: canonicalize([alpha1 + 1, alpha1 - 1] + [2] * (alpha1 - 1)),
        Perturbation.DECREASE_LENGTH: canonicalize([alpha1, alpha1, 4] + [2] * (alpha1 - 3)),
        Perturbation.DECREASE_MIN: canonicalize([alpha1, alpha1, 3] + [2] * (alpha1 - 3) + [1]),
        Perturbation.INCREASE_SUM: canonicalize([alpha1, alpha1, 4] + [2] * (alpha1 - 2)),
    }
    return SharpnessInstance(alpha1=alpha1, base=base, perturbations=perturbations)


def random_degree_sequence(n: int, max_degree: int, seed: int) -> DegreeSequence:
    """Uniform random degrees in [0, max_degree]; one positive entry is decremented if needed to make the sum even."""
    rng = np.random.default_rng(seed)
    degrees = rng.integers(0, max_degree + 1, size=n)
    if degrees.sum() % 2 == 1:
        degrees[int(np.flatnonzero(degrees)[0])] -= 1
    return canonicalize(degrees.tolist())


def _regular(n: int, rng: np.random.Generator) -> DegreeSequence:
    degree = int(rng.integers(0, n))
    if degree * n % 2 == 1:
        degree -= 1
    return DegreeSequence((degree,) * n)


def _near_regular(n: int, rng: np.random.Generator) -> DegreeSequence:
    low = int(rng.integers(0, n - 1))
    degrees = np.full(n, low)
    degrees[: int(rng.integers(0, n + 1))] += 1
    if degrees.sum() % 2 == 1:
        degrees[0] -= 1
    return canonicalize(degrees.tolist())


def _dense(n: int, rng: np.random.Generator) -> DegreeSequence:
    # large minimum degree relative to the spread lands in the length-bound region
    low = int(rng.integers(n // 4, n // 2))
    high = int(rng.integers(low, min(n - 1, 2 * low) + 1))
    degrees = rng.integers(low, high + 1, size=n)
    if degrees.sum() % 2 == 1:
        degrees[int(np.argmax(degrees))] -= 1
    return canonicalize(degrees.tolist())


def _threshold(n: int, rng: np.random.Generator) -> DegreeSequence:
    alphan = int(rng.integers(1, n // 2))
    alpha1 = int(rng.integers(alphan + 1, n))
    s = int(rng.integers(n * alphan, n * alpha1 + 1))
    s -= s % 2
    if s < n * alphan:
        # smallest even sum in range; n*alphan + 1 <= n*alpha1 since alpha1 > alphan
        s = n * alphan + (n * alphan) % 2
    return threshold_majorant(SequenceStats(alpha1=alpha1, alphan=alphan, n=n, s=s))


def mixed_corpus(*, count: int, n: int, seed: int) -> list[DegreeSequence]:
    """Random corpus cycling through uniform, regular, near-regular, dense and threshold-majorant generators.

    Parameters
    ----------
    count : int
        Number of sequences.
    n : int
        Length of every sequence, at least 4.
    seed : int
        Seed for ``numpy.random.default_rng``.

    Returns
    -------
    list[DegreeSequence]
        ``count`` canonical sequences of length n.
    """
    if n < 4:
        raise ParameterTooSmall(name="n", value=n, minimum=4)
    rng = np.random.default_rng(seed)
    corpus = []
    for index in range(count):
        kind = index % 5
        if kind == 0:
            corpus.append(random_degree_sequence(n, n - 1, seed=int(rng.integers(2**32))))
        elif kind == 1:
            corpus.append(_regular(n, rng))
        elif kind == 2:
            corpus.append(_near_regular(n, rng))
        elif kind == 3:
            corpus.append(_dense(n, rng))
        else:
            corpus.append(_threshold(n, rng))
    return corpus

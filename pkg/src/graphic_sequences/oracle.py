"""Independent ground truth: constructive Havel–Hakimi realization and exhaustive enumeration.

Nothing in this module reuses the Erdős–Gallai or bound code it is used to validate.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator, Optional

from tqdm import tqdm

from .bounds import Outcome, classify
from .eg import eg_full, eg_reduced
from .errors import OracleDisagreement
from .seq_core import DegreeSequence


@dataclass(frozen=True)
class Realization:
    """A simple graph on vertices 0..n-1; vertex i realizes the i-th entry of the input sequence."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def degrees(self) -> list[int]:
        degrees = [0] * self.n
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return degrees


def havel_hakimi(seq: DegreeSequence) -> Optional[Realization]:
    """Realize a degree sequence or show that none exists.

    Each round the vertex with the largest residual degree d is joined to the d vertices with the next largest
    residual degrees. Residual degrees are re-sorted every round by bucketing on the degree value.

    Parameters
    ----------
    seq : DegreeSequence
        A canonical sequence.

    Returns
    -------
    Realization or None
        A realization whose vertex i has degree ``seq[i]``, or None if the sequence is not graphic.
    """
    n = len(seq)
    if sum(seq) % 2 == 1:
        return None
    residual = list(seq)
    edges = []
    active = [vertex for vertex in range(n) if residual[vertex] > 0]
    while active:
        buckets = [[] for _ in range(max(residual[vertex] for vertex in active) + 1)]
        for vertex in active:
            buckets[residual[vertex]].append(vertex)
        ordered = [vertex for bucket in reversed(buckets) for vertex in bucket]
        hub, others = ordered[0], ordered[1:]
        demand = residual[hub]
        if demand > len(others):
            return None
        residual[hub] = 0
        for vertex in others[:demand]:
            residual[vertex] -= 1
            edges.append((min(hub, vertex), max(hub, vertex)))
        active = [vertex for vertex in others if residual[vertex] > 0]
    return Realization(n=n, edges=tuple(sorted(edges)))


def verify_realization(seq: DegreeSequence, realization: Realization) -> bool:
    """Check that ``realization`` is a simple graph whose vertex degrees equal ``seq`` position by position."""
    if realization.n != len(seq):
        return False
    if len(set(realization.edges)) != len(realization.edges):
        return False
    for u, v in realization.edges:
        if not 0 <= u < v < realization.n:
            return False
    return realization.degrees() == list(seq)


def enumerate_sequences(n: int, max_degree: int, leading: Optional[int] = None) -> Iterator[DegreeSequence]:
    """Yield every nonincreasing sequence of length n over [0, max_degree] in lexicographically decreasing order.

    Parameters
    ----------
    n : int
        The sequence length.
    max_degree : int
        The largest allowed entry.
    leading : int, optional
        Only yield sequences whose first entry is ``leading``; used to split the enumeration between workers.
    """
    if n < 0 or max_degree < 0:
        raise ValueError(f"n and max_degree must be nonnegative, got n={n}, max_degree={max_degree}")
    if leading is None:
        for degrees in combinations_with_replacement(range(max_degree, -1, -1), n):
            yield DegreeSequence(degrees)
        return
    if n == 0 or not 0 <= leading <= max_degree:
        return
    for rest in combinations_with_replacement(range(leading, -1, -1), n - 1):
        yield DegreeSequence((leading,) + rest)


@dataclass
class CrossCheckReport:
    """Tallies of an exhaustive cross-check; ``merge`` is commutative so worker reports can arrive in any order."""

    sequences: int = 0
    graphic: int = 0
    per_length: Counter = field(default_factory=Counter)
    deciding_stage_counts: Counter = field(default_factory=Counter)
    stage_graphic_counts: Counter = field(default_factory=Counter)

    def merge(self, other: "CrossCheckReport") -> "CrossCheckReport":
        return CrossCheckReport(
            sequences=self.sequences + other.sequences,
            graphic=self.graphic + other.graphic,
            per_length=self.per_length + other.per_length,
            deciding_stage_counts=self.deciding_stage_counts + other.deciding_stage_counts,
            stage_graphic_counts=self.stage_graphic_counts + other.stage_graphic_counts,
        )

    def to_dict(self) -> dict:
        return {
            "sequences": self.sequences,
            "graphic": self.graphic,
            "graphic_per_length": {str(n): self.per_length[n] for n in sorted(self.per_length)},
            "deciding_stage_counts": dict(sorted(self.deciding_stage_counts.items())),
            "stage_graphic_counts": dict(sorted(self.stage_graphic_counts.items())),
        }


def check_sequence(seq: DegreeSequence, report: CrossCheckReport) -> None:
    """Cross-check one sequence and add it to ``report``.

    Raises
    ------
    OracleDisagreement
        If any verdict differs from the Havel–Hakimi oracle, if a returned realization is wrong, or if a stage claims
        Graphic for a sequence the oracle cannot realize.
    """
    realization = havel_hakimi(seq)
    oracle_graphic = realization is not None
    full = eg_full(seq)
    reduced = eg_reduced(seq)
    trace = classify(seq)
    verdicts = {
        "havel_hakimi": oracle_graphic,
        "eg_full": full.graphic,
        "eg_reduced": reduced.graphic,
        "classify": trace.graphic,
    }
    if not full.graphic == reduced.graphic == trace.graphic == oracle_graphic:
        raise OracleDisagreement(seq.degrees, verdicts)
    if realization is not None and not verify_realization(seq, realization):
        raise OracleDisagreement(seq.degrees, {**verdicts, "realization": "invalid"})
    for stage, result in trace.stage_results:
        if getattr(result, "outcome", None) == Outcome.GRAPHIC:
            if not oracle_graphic:
                raise OracleDisagreement(seq.degrees, {**verdicts, stage.value: "Graphic"})
            report.stage_graphic_counts[stage.value] += 1
    report.sequences += 1
    report.graphic += oracle_graphic
    report.per_length[len(seq)] += oracle_graphic
    report.deciding_stage_counts[trace.deciding_stage.value] += 1


def cross_check_partition(n: int, leading: Optional[int] = None) -> CrossCheckReport:
    """Cross-check every sequence of length n with entries at most n - 1, optionally with a fixed first entry."""
    report = CrossCheckReport()
    for seq in enumerate_sequences(n, max(n - 1, 0), leading=leading):
        check_sequence(seq, report)
    return report


def cross_check(
    *,
    n_max: int,
    max_workers: int = 1,
    n_max_limit: int = 10,
    verbose: bool = False,
) -> CrossCheckReport:
    """Exhaustively compare every decision procedure against the Havel–Hakimi oracle.

    Parameters
    ----------
    n_max : int
        Check every canonical sequence of length 0..n_max with entries at most n - 1.
    max_workers : int, optional
        Number of worker processes, by default 1 (run inline). Work is split by length and leading entry.
    n_max_limit : int, optional
        The largest n_max accepted, by default 10.
    verbose : bool, optional
        Whether to show a progress bar, by default False

    Returns
    -------
    CrossCheckReport
        Counts of sequences, graphic sequences, and per-stage decisions.

    Raises
    ------
    ValueError
        If n_max is negative or above n_max_limit.
    OracleDisagreement
        On the first sequence where two procedures disagree.
    """
    if not 0 <= n_max <= n_max_limit:
        raise ValueError(f"n_max must lie in [0, {n_max_limit}], got {n_max}")
    partitions = [(0, None)] + [(n, leading) for n in range(1, n_max + 1) for leading in range(n)]
    report = CrossCheckReport()
    if max_workers == 1:
        for n, leading in tqdm(partitions, desc="Cross-checking", disable=not verbose):
            report = report.merge(cross_check_partition(n, leading))
        return report

    futures = []
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        for n, leading in partitions:
            futures.append(executor.submit(cross_check_partition, n, leading))
        for future in tqdm(as_completed(futures), total=len(futures), desc="Cross-checking", disable=not verbose):
            report = report.merge(future.result())
    return report

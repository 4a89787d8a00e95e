"""Batch command-line front end.

Subcommands::

    check [--format tsv|json] [--trace] [--max-workers W] [FILE]
    gen sharpness --alpha1 A
    gen random --stats a1,an,n,s [--count K] [--seed V]
    gen mixed --n N [--count K] [--seed V]
    bench [--repeat R] [--json-output PATH] FILE
    oracle cross-check --n-max N [--max-workers W]

Input files hold one sequence per line, integers separated by commas and/or whitespace. Blank lines and lines
starting with '#' are ignored. Exit codes: 0 success, 1 internal invariant violation, 2 input or parameter error.
"""
import argparse
import json
import re
import sys
import time
import traceback
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Optional, TextIO, Union

import pandas as pd
from neuroconv.utils import dict_deep_update, load_dict_from_file
from tqdm import tqdm

from .bounds import Stage, classify
from .eg import eg_full
from .errors import OracleDisagreement
from .gen import mixed_corpus, random_with_stats, sharpness_family
from .oracle import cross_check
from .seq_core import DegreeSequence, SequenceStats, canonicalize

EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_INPUT_ERROR = 2

DEFAULT_CONFIG_PATH = Path(__file__).parent / "graphic_sequences_config.yaml"

_SEPARATORS = re.compile(r"[,\s]+")


def load_config(config_path: Optional[Union[str, Path]] = None) -> dict:
    """Load the packaged defaults and merge an optional user file on top.

    Parameters
    ----------
    config_path : Union[str, Path], optional
        Path to a .yaml/.yml/.json file laid out like ``graphic_sequences_config.yaml``.

    Returns
    -------
    dict
        The merged configuration.
    """
    config = load_dict_from_file(DEFAULT_CONFIG_PATH)
    if config_path is not None:
        config = dict_deep_update(config, load_dict_from_file(Path(config_path)))
    return config


@dataclass(frozen=True)
class InputRecord:
    """One non-comment input line; ``parsed`` is set iff the line is a valid integer list."""

    line_number: int
    raw: str
    parsed: Optional[list[int]] = None
    error: Optional[str] = None


def parse_line(line_number: int, raw: str) -> InputRecord:
    tokens = [token for token in _SEPARATORS.split(raw.strip()) if token]
    parsed = []
    for token in tokens:
        try:
            parsed.append(int(token))
        except ValueError:
            return InputRecord(line_number=line_number, raw=raw, error=f"line {line_number}: invalid integer '{token}'")
    return InputRecord(line_number=line_number, raw=raw, parsed=parsed)


def read_input_records(lines: Iterable[str]) -> Iterator[InputRecord]:
    """Parse input lines, skipping blank lines and '#' comments; line numbers count every physical line."""
    for line_number, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped == "" or stripped.startswith("#"):
            continue
        yield parse_line(line_number, raw.rstrip("\n"))


def classify_record(record: InputRecord) -> dict:
    """Classify one record; input errors (bad tokens, negative degrees) come back as an ``error`` entry."""
    if record.error is not None:
        return {"line": record.line_number, "error": record.error}
    try:
        seq = canonicalize(record.parsed)
    except ValueError as e:
        return {"line": record.line_number, "error": f"line {record.line_number}: {e}"}
    trace = classify(seq)
    return {
        "line": record.line_number,
        "verdict": trace.verdict.value,
        "deciding_stage": trace.deciding_stage.value,
        "trace": trace.to_dict(),
        "summary": trace.summary(),
    }


def classify_chunk(records: list[InputRecord]) -> list[dict]:
    return [classify_record(record) for record in records]


def format_result(result: dict, *, output_format: str, trace: bool) -> str:
    if output_format == "json":
        record = {"line": result["line"], "verdict": result["verdict"], "deciding_stage": result["deciding_stage"]}
        if trace:
            record["trace"] = result["trace"]
        return json.dumps(record)
    columns = [result["verdict"], result["deciding_stage"]]
    if trace:
        columns.append(result["summary"])
    return "\t".join(columns)


def _chunks(records: Iterable[InputRecord], chunk_size: int) -> Iterator[list[InputRecord]]:
    chunk = []
    for record in records:
        chunk.append(record)
        if len(chunk) == chunk_size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def _iter_results(records: Iterable[InputRecord], *, max_workers: int, chunk_size: int) -> Iterator[dict]:
    """Classify records, in parallel when max_workers > 1, yielding results in input order."""
    if max_workers == 1:
        for record in records:
            yield classify_record(record)
        return

    # at most 2 * max_workers chunks are in flight or waiting on an earlier chunk
    window = 2 * max_workers
    chunks = enumerate(_chunks(records, chunk_size))
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        future_to_index, finished, next_index = {}, {}, 0
        for index, chunk in islice(chunks, window):
            future_to_index[executor.submit(classify_chunk, chunk)] = index
        while future_to_index:
            done, _ = wait(future_to_index, return_when=FIRST_COMPLETED)
            for future in done:
                finished[future_to_index.pop(future)] = future.result()
            while next_index in finished:
                yield from finished.pop(next_index)
                next_index += 1
            for index, chunk in islice(chunks, window - len(future_to_index) - len(finished)):
                future_to_index[executor.submit(classify_chunk, chunk)] = index


def run_check(
    lines: Iterable[str],
    *,
    output_format: str = "tsv",
    trace: bool = False,
    max_workers: int = 1,
    chunk_size: int = 2000,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Classify every sequence in ``lines`` and write one record per valid line.

    Parameters
    ----------
    lines : Iterable[str]
        The input lines.
    output_format : str, optional
        "tsv" or "json", by default "tsv"
    trace : bool, optional
        Whether to include the full pipeline trace, by default False
    max_workers : int, optional
        Number of worker processes, by default 1
    chunk_size : int, optional
        Lines per worker task, by default 2000
    out, err : TextIO, optional
        Output and diagnostic streams, by default standard output and standard error.

    Returns
    -------
    int
        EXIT_OK if every line parsed, EXIT_INPUT_ERROR otherwise.
    """
    if output_format not in ("tsv", "json"):
        raise ValueError(f"format must be 'tsv' or 'json', got {output_format!r}")
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    exit_code = EXIT_OK
    records = read_input_records(lines)
    for result in _iter_results(records, max_workers=max_workers, chunk_size=chunk_size):
        if "error" in result:
            print(result["error"], file=err)
            exit_code = EXIT_INPUT_ERROR
            continue
        print(format_result(result, output_format=output_format, trace=trace), file=out)
    return exit_code


@dataclass
class BenchReport:
    """Timing comparison of ``classify`` against running the Erdős–Gallai test alone.

    ``stage_counts`` and ``stage_fractions`` count each sequence once; ``stage_classify_ns`` accumulates the classify
    time of the sequences decided at each stage over all repeats.
    """

    total: int = 0
    repeat: int = 1
    stage_counts: dict = field(default_factory=dict)
    stage_fractions: dict = field(default_factory=dict)
    stage_classify_ns: dict = field(default_factory=dict)
    mean_classify_ns: float = 0.0
    mean_baseline_ns: float = 0.0
    agreement: bool = True
    disagreements: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "repeat": self.repeat,
            "stage_counts": self.stage_counts,
            "stage_fractions": self.stage_fractions,
            "stage_classify_ns": self.stage_classify_ns,
            "mean_classify_ns": self.mean_classify_ns,
            "mean_baseline_ns": self.mean_baseline_ns,
            "agreement": self.agreement,
            "disagreements": self.disagreements,
        }

    def format_text(self) -> str:
        lines = [f"sequences: {self.total} (x{self.repeat} repeats)"]
        for stage in Stage:
            if stage.value in self.stage_counts:
                lines.append(
                    f"  {stage.value:<17} {self.stage_counts[stage.value]:>9} "
                    f"{100 * self.stage_fractions[stage.value]:6.2f}%  {self.stage_classify_ns[stage.value]:>14} ns"
                )
        lines.append(f"mean classify time: {self.mean_classify_ns:.0f} ns")
        lines.append(f"mean Erdős–Gallai-only time: {self.mean_baseline_ns:.0f} ns")
        lines.append(f"verdict agreement: {'100%' if self.agreement else 'FAILED'}")
        return "\n".join(lines)


def run_bench(sequences: list[DegreeSequence], *, repeat: int = 1, verbose: bool = False) -> BenchReport:
    """Time ``classify`` and the ``eg_full`` baseline over a corpus.

    Parameters
    ----------
    sequences : list[DegreeSequence]
        The corpus.
    repeat : int, optional
        Number of passes over the corpus, by default 1
    verbose : bool, optional
        Whether to show a progress bar, by default False

    Returns
    -------
    BenchReport
        Per-stage decision counts, fractions and cumulative timings, mean times per path, and the agreement flag.
    """
    if repeat < 1:
        raise ValueError(f"repeat must be positive, got {repeat}")
    rows = []
    for repetition in tqdm(range(repeat), desc="Benchmarking", disable=not verbose):
        for index, seq in enumerate(sequences):
            start = time.perf_counter_ns()
            trace = classify(seq)
            middle = time.perf_counter_ns()
            baseline = eg_full(seq)
            end = time.perf_counter_ns()
            rows.append(
                dict(
                    repetition=repetition,
                    index=index,
                    deciding_stage=trace.deciding_stage.value,
                    classify_ns=middle - start,
                    baseline_ns=end - middle,
                    agree=trace.graphic == baseline.graphic,
                )
            )
    report = BenchReport(total=len(sequences), repeat=repeat)
    if not rows:
        return report

    df = pd.DataFrame(rows)
    first_pass = df[df["repetition"] == 0]
    report.stage_counts = {stage: int(count) for stage, count in first_pass["deciding_stage"].value_counts().items()}
    report.stage_fractions = {stage: count / report.total for stage, count in report.stage_counts.items()}
    report.stage_classify_ns = {
        stage: int(total_ns) for stage, total_ns in df.groupby("deciding_stage")["classify_ns"].sum().items()
    }
    report.mean_classify_ns = float(df["classify_ns"].mean())
    report.mean_baseline_ns = float(df["baseline_ns"].mean())
    report.agreement = bool(df["agree"].all())
    disagreeing = sorted(set(first_pass.loc[~first_pass["agree"], "index"]))
    report.disagreements = [sequences[index].to_list() for index in disagreeing]
    assert sum(report.stage_counts.values()) == report.total, "every sequence is decided at exactly one stage"
    return report


def _parse_stats(text: str) -> SequenceStats:
    values = [int(token) for token in _SEPARATORS.split(text.strip()) if token]
    if len(values) != 4:
        raise ValueError(f"--stats expects four integers a1,an,n,s, got {text!r}")
    alpha1, alphan, n, s = values
    return SequenceStats(alpha1=alpha1, alphan=alphan, n=n, s=s)


def _open_lines(file: Optional[str]) -> Iterable[str]:
    if file is None or file == "-":
        return sys.stdin
    return Path(file).open("r")


def cmd_check(args: argparse.Namespace, config: dict) -> int:
    output_format = args.format or config["Check"]["format"]
    max_workers = args.max_workers or config["Check"]["max_workers"]
    try:
        lines = _open_lines(args.file)
    except OSError as e:
        print(f"error: cannot read {args.file}: {e.strerror}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        return run_check(
            lines,
            output_format=output_format,
            trace=args.trace,
            max_workers=max_workers,
            chunk_size=config["Check"]["chunk_size"],
        )
    finally:
        if lines is not sys.stdin:
            lines.close()


def cmd_gen(args: argparse.Namespace, config: dict) -> int:
    count = getattr(args, "count", None)
    count = count if count is not None else config["Gen"]["count"]
    seed = getattr(args, "seed", None)
    seed = seed if seed is not None else config["Gen"]["seed"]
    try:
        if args.generator == "sharpness":
            for label, seq in sharpness_family(args.alpha1).labeled():
                print(f"{label}: {seq}")
        elif args.generator == "random":
            stats = _parse_stats(args.stats)
            for offset in range(count):
                print(random_with_stats(stats, seed=seed + offset))
        else:
            for seq in mixed_corpus(count=count, n=args.n, seed=seed):
                print(seq)
    except ValueError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, config: dict) -> int:
    repeat = args.repeat or config["Bench"]["repeat"]
    exit_code = EXIT_OK
    sequences = []
    try:
        f = Path(args.file).open("r")
    except OSError as e:
        print(f"error: cannot read {args.file}: {e.strerror}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    with f:
        for record in read_input_records(f):
            try:
                if record.error is not None:
                    raise ValueError(record.error)
                sequences.append(canonicalize(record.parsed))
            except ValueError as e:
                message = str(e) if record.error is not None else f"line {record.line_number}: {e}"
                print(message, file=sys.stderr)
                exit_code = EXIT_INPUT_ERROR
    report = run_bench(sequences, repeat=repeat, verbose=args.verbose)
    print(report.format_text())
    if args.json_output is not None:
        with Path(args.json_output).open("w") as f:
            json.dump(report.to_dict(), f, indent=2)
    if not report.agreement:
        for degrees in report.disagreements:
            print(f"disagreement with the Erdős–Gallai baseline on {degrees}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    return exit_code


def cmd_oracle(args: argparse.Namespace, config: dict) -> int:
    max_workers = args.max_workers or config["Oracle"]["max_workers"]
    try:
        report = cross_check(
            n_max=args.n_max,
            max_workers=max_workers,
            n_max_limit=config["Oracle"]["n_max_limit"],
            verbose=args.verbose,
        )
    except OracleDisagreement as e:
        print(f"oracle disagreement on {list(e.sequence)}: {e.verdicts}", file=sys.stderr)
        print(traceback.format_exc(), file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    summary = report.to_dict()
    print(f"sequences: {summary['sequences']}")
    print(f"graphic: {summary['graphic']}")
    print("disagreements: 0")
    for n, graphic in summary["graphic_per_length"].items():
        print(f"  n={n}: {graphic} graphic")
    for stage, count in summary["deciding_stage_counts"].items():
        print(f"  decided at {stage}: {count}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphic-sequences", description="Degree-sequence graphicality toolkit.")
    parser.add_argument("--config", default=None, help="YAML/JSON file overriding the packaged defaults.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", help="Classify sequences, one per line.")
    check.add_argument("--format", choices=["tsv", "json"], default=None)
    check.add_argument("--trace", action="store_true", help="Include the full pipeline trace.")
    check.add_argument("--max-workers", type=int, default=None)
    check.add_argument("file", nargs="?", default=None, help="Input file; standard input when omitted or '-'.")
    check.set_defaults(handler=cmd_check)

    gen = subparsers.add_parser("gen", help="Generate sequences.")
    generators = gen.add_subparsers(dest="generator", required=True)
    sharpness = generators.add_parser("sharpness", help="Equality case of the bound and its perturbations.")
    sharpness.add_argument("--alpha1", type=int, required=True)
    random_parser = generators.add_parser("random", help="Random sequences with fixed (a1, an, n, s).")
    random_parser.add_argument("--stats", required=True, help="a1,an,n,s")
    mixed = generators.add_parser("mixed", help="Mixed random corpus of length-n sequences.")
    mixed.add_argument("--n", type=int, required=True)
    for generator in (random_parser, mixed):
        generator.add_argument("--count", type=int, default=None)
        generator.add_argument("--seed", type=int, default=None)
    gen.set_defaults(handler=cmd_gen)

    bench = subparsers.add_parser("bench", help="Compare the pipeline against the Erdős–Gallai test alone.")
    bench.add_argument("--repeat", type=int, default=None)
    bench.add_argument("--json-output", default=None, help="Also write the report as JSON to this path.")
    bench.add_argument("--verbose", action="store_true")
    bench.add_argument("file")
    bench.set_defaults(handler=cmd_bench)

    oracle = subparsers.add_parser("oracle", help="Validate against the Havel–Hakimi oracle.")
    oracle_commands = oracle.add_subparsers(dest="oracle_command", required=True)
    cross = oracle_commands.add_parser("cross-check", help="Exhaustive comparison for all lengths up to N.")
    cross.add_argument("--n-max", type=int, required=True)
    cross.add_argument("--max-workers", type=int, default=None)
    cross.add_argument("--verbose", action="store_true")
    oracle.set_defaults(handler=cmd_oracle)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    return args.handler(args, config)


if __name__ == "__main__":
    sys.exit(main())

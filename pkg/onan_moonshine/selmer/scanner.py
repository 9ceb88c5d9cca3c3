"""
Discriminant Scanner

Runs the Selmer criterion over every admissible D in a range, optionally
across worker processes, and keeps the verdicts in a JSON-lines or CSV
file so an interrupted scan can pick up where it stopped.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Set
import json
import logging

import pandas as pd

from .criterion import SelmerOptions, SelmerVerdict, admissible, selmer_criterion

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 10

# record fields stored as decimal strings
TEXT_COLUMNS = ("c3a_series", "c3a_traces", "l_value", "l_tail")


@dataclass
class ScanConfig:
    """
    Configuration for a scan.

    Attributes:
        D_min: Most negative discriminant
        D_max: Least negative discriminant (< 0)
        options: Options passed to every verdict
        num_workers: Worker processes (1 runs in-process)
        output_file: JSON-lines (.jsonl/.json) or CSV file; None keeps results in memory
        resume: Skip discriminants already present in output_file
    """
    D_min: int
    D_max: int = -1
    options: SelmerOptions = field(default_factory=SelmerOptions)
    num_workers: int = 1
    output_file: Optional[Path] = None
    resume: bool = True

    def __post_init__(self):
        if self.D_max >= 0:
            raise ValueError(f"D_max must be negative, got {self.D_max}")
        if self.output_file is not None:
            self.output_file = Path(self.output_file)

    def __repr__(self) -> str:
        return (
            f"ScanConfig(range=[{self.D_min}, {self.D_max}], "
            f"workers={self.num_workers}, output={self.output_file})"
        )


def admissible_range(D_min: int, D_max: int) -> List[int]:
    """Admissible D in [D_min, D_max], ordered by |D|."""
    return [D for D in range(D_max, D_min - 1, -1) if D != 0 and admissible(D)]


def _verdict_for(D: int, opts: SelmerOptions) -> SelmerVerdict:
    return selmer_criterion(D, opts)


def scan(D_min: int, D_max: int, opts: Optional[SelmerOptions] = None) -> List[SelmerVerdict]:
    """
    Verdicts for every admissible D in [D_min, D_max], in-process.

    Example:
        >>> [v.D for v in scan(-70, -1)]
        [-8, -23, -47, -68]
    """
    return run_scan(ScanConfig(D_min, D_max, opts or SelmerOptions()))


def run_scan(config: ScanConfig) -> List[SelmerVerdict]:
    """
    Run a configured scan, resuming from and appending to its output file.

    Each verdict is appended to the output file as soon as it is computed,
    so an interrupted scan keeps everything that finished. Stored verdicts
    are reused only when they were computed with the same options. The file
    is rewritten in |D| order once the range is complete.

    Returns:
        All verdicts for the range (loaded and new), ordered by |D|
    """
    if config.D_min > config.D_max:
        return []
    targets = admissible_range(config.D_min, config.D_max)
    path = config.output_file

    stored: Dict[int, SelmerVerdict] = {}
    if path is not None and path.exists():
        for verdict in load_results(path):
            # later lines supersede earlier ones
            stored[verdict.D] = verdict

    done: Dict[int, SelmerVerdict] = {}
    if config.resume:
        wanted = config.options.to_dict()
        for D in targets:
            verdict = stored.get(D)
            if verdict is None:
                continue
            if verdict.options != wanted:
                logger.warning("D=%d: stored verdict was computed with %s; recomputing", D, verdict.options)
                continue
            done[D] = verdict
        logger.info("Resuming: %d of %d discriminants already done", len(done), len(targets))

    pending = [D for D in targets if D not in done]
    logger.info("Scanning %d admissible discriminants in [%d, %d]", len(pending), config.D_min, config.D_max)

    fresh: Dict[int, SelmerVerdict] = {}

    def record(verdict: SelmerVerdict) -> None:
        fresh[verdict.D] = verdict
        if path is not None:
            append_result(verdict, path)
        if len(fresh) % PROGRESS_EVERY == 0:
            logger.info("Processed %d/%d discriminants", len(fresh), len(pending))

    if config.num_workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=config.num_workers) as pool:
            futures = [pool.submit(_verdict_for, D, config.options) for D in pending]
            try:
                for future in as_completed(futures):
                    record(future.result())
            except BaseException:
                pool.shutdown(wait=False, cancel_futures=True)
                raise
    else:
        for D in pending:
            record(_verdict_for(D, config.options))

    done.update(fresh)
    if path is not None:
        stored.update(fresh)
        save_results(sorted(stored.values(), key=lambda v: abs(v.D)), path)
    return [done[D] for D in targets]


def _is_csv(path: Path) -> bool:
    return path.suffix.lower() == ".csv"


def _has_content(path: Path) -> bool:
    return path.exists() and path.stat().st_size > 0


def _write_records(records: List[Dict[str, Any]], path: Path, mode: str, as_csv: bool) -> None:
    if as_csv:
        header = mode == "w" or not _has_content(path)
        pd.DataFrame(records).to_csv(path, mode=mode, header=header, index=False)
    else:
        with open(path, mode) as f:
            for record in records:
                f.write(json.dumps(record) + "\n")


def append_result(verdict: SelmerVerdict, path: Path) -> None:
    """Append one verdict to a results file, creating it if needed."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    _write_records([verdict.to_dict()], path, "a", _is_csv(path))


def save_results(verdicts: List[SelmerVerdict], path: Path) -> None:
    """
    Write verdicts as JSON lines, or as CSV when the suffix is .csv.

    The file is written next to the target and moved into place, so an
    interruption leaves the previous contents intact.

    Args:
        verdicts: Verdicts to store
        path: Output file; parent directories are created
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    staging = path.with_name(path.name + ".tmp")
    if verdicts:
        _write_records([v.to_dict() for v in verdicts], staging, "w", _is_csv(path))
    else:
        staging.write_text("")
    staging.replace(path)
    logger.info("Saved %d verdicts to %s", len(verdicts), path)


def load_results(path: Path) -> List[SelmerVerdict]:
    """Read verdicts written by save_results or append_result, in file order."""
    path = Path(path)
    if not _has_content(path):
        return []
    if _is_csv(path):
        df = pd.read_csv(path, dtype={column: str for column in TEXT_COLUMNS}, float_precision="round_trip")
    else:
        # no dtype inference: C3A and L-values are decimal strings
        df = pd.read_json(path, orient="records", lines=True, dtype=False, precise_float=True)
    if df.empty:
        return []
    df = df.astype(object).where(pd.notna(df), None)
    return [SelmerVerdict.from_dict(record) for record in df.to_dict(orient="records")]


def load_completed(path: Path) -> Set[int]:
    """Discriminants already present in a results file (empty if it does not exist)."""
    path = Path(path)
    if not path.exists():
        return set()
    return {v.D for v in load_results(path)}

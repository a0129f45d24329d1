"""All-pairs alignment of a CDS family into a normalized similarity matrix."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Sequence

from .aligner import AlignResult, align
from .baselines import needle_aa, needle_nt
from .criteria import CriteriaReport, compute_criteria
from .fasta import FastaRecord, write_alignment
from .model import SCALE, AlignParams, CdsError, format_deci, validate_cds

log = logging.getLogger(__name__)

METHODS = ("fse", "fse0", "needlenuc", "needleprot")
THREADS_ENV = "FSE_ALIGN_THREADS"


def aligner_for(method: str, params: AlignParams):
    """Callable ``(a, b) -> AlignResult`` for a method name."""
    if method == "fse":
        return lambda a, b: align(a, b, params)
    if method == "fse0":
        zero = params.replace(fs_extend_cost=0)
        return lambda a, b: align(a, b, zero)
    if method == "needlenuc":
        return lambda a, b: needle_nt(a, b)
    if method == "needleprot":
        return lambda a, b: needle_aa(a, b)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


@dataclass(frozen=True)
class PairReport:
    id_a: str
    id_b: str
    score: int
    length: int
    criteria: CriteriaReport

    @property
    def normalized(self) -> float:
        return self.score / (SCALE * self.length)

    HEADER = ("id_a", "id_b", "score", "normalized_score", "length",
              *CriteriaReport.header())

    def row(self) -> list[str]:
        return [self.id_a, self.id_b, format_deci(self.score),
                f"{self.normalized:.4f}", str(self.length),
                *map(str, self.criteria.values())]


@dataclass
class SimilarityMatrix:
    ids: list[str]
    values: list[list[float]]

    def to_tsv(self) -> str:
        lines = ["\t".join(["id", *self.ids])]
        for name, row in zip(self.ids, self.values):
            lines.append("\t".join([name, *(f"{v:.4f}" for v in row)]))
        return "\n".join(lines) + "\n"


@dataclass
class BatchResult:
    matrix: SimilarityMatrix
    pairs: list[PairReport]
    skipped: list[tuple[str, str]]

    def pairs_tsv(self) -> str:
        lines = ["\t".join(PairReport.HEADER)]
        lines.extend("\t".join(p.row()) for p in self.pairs)
        return "\n".join(lines) + "\n"


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1"))
    if threads < 1:
        raise ValueError("thread count must be at least 1")
    return threads


def validate_records(records: Sequence[FastaRecord]):
    """Valid ``(id, Cds)`` pairs and ``(id, reason)`` for the skipped ones."""
    good, skipped = [], []
    for rec in records:
        try:
            good.append((rec.id, validate_cds(rec.sequence)))
        except CdsError as err:
            log.warning("skipping %s: %s", rec.id, err)
            skipped.append((rec.id, str(err)))
    return good, skipped


def run_batch(records: Sequence[FastaRecord], params: AlignParams, method: str = "fse",
              threads: int | None = None, pair_dir=None) -> BatchResult:
    """Align every unordered pair once, plus each sequence with itself for the
    diagonal.  Output order does not depend on the thread count."""
    run = aligner_for(method, params)
    cds, skipped = validate_records(records)
    if len(cds) < 2:
        raise ValueError(f"need at least 2 valid sequences, found {len(cds)}")
    jobs = [(x, x) for x in range(len(cds))] + list(combinations(range(len(cds)), 2))

    def work(job) -> AlignResult:
        x, y = job
        return run(cds[x][1], cds[y][1])

    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as pool:
        results = list(pool.map(work, jobs))

    if pair_dir is not None:
        Path(pair_dir).mkdir(parents=True, exist_ok=True)
    ids = [name for name, _ in cds]
    values = [[0.0] * len(ids) for _ in ids]
    pairs = []
    for (x, y), res in zip(jobs, results):
        report = PairReport(ids[x], ids[y], res.score, len(res.alignment),
                            compute_criteria(res.alignment, res.partition))
        values[x][y] = values[y][x] = report.normalized
        if x != y:
            pairs.append(report)
            if pair_dir is not None:
                write_alignment(Path(pair_dir) / f"{ids[x]}__{ids[y]}.fa",
                                res.alignment, ids[x], ids[y])
    return BatchResult(SimilarityMatrix(ids, values), pairs, skipped)


def write_reports(result: BatchResult, out_dir, figure: bool = True) -> dict[str, Path]:
    """Write ``matrix.tsv``, ``pairs.tsv`` and (optionally) ``matrix.png``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {"matrix": out / "matrix.tsv", "pairs": out / "pairs.tsv"}
    paths["matrix"].write_text(result.matrix.to_tsv())
    paths["pairs"].write_text(result.pairs_tsv())
    if figure:
        from .plotting import plot_similarity
        paths["figure"] = plot_similarity(result.matrix, out / "matrix.png")
    return paths

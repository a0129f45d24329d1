"""FASTA input and two-record aligned-FASTA pairs."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .classify import PairwiseAlignment


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateId(ValueError):
    def __init__(self, record_id: str):
        super().__init__(f"duplicate record id {record_id!r}")
        self.id = record_id


@dataclass(frozen=True)
class FastaRecord:
    id: str
    description: str
    sequence: str


def parse_fasta(lines: Iterable[str]) -> list[FastaRecord]:
    records = []
    seen = set()
    header = None
    chunks: list[str] = []

    def flush():
        if header is not None:
            records.append(FastaRecord(header[0], header[1], "".join(chunks)))

    for number, line in enumerate(lines, 1):
        line = line.rstrip("\r\n").strip()
        if not line:
            continue
        if line.startswith(">"):
            flush()
            parts = line[1:].split(None, 1)
            if not parts:
                raise ParseError(number, "header without an id")
            if parts[0] in seen:
                raise DuplicateId(parts[0])
            seen.add(parts[0])
            header = (parts[0], parts[1] if len(parts) > 1 else "")
            chunks = []
        elif header is None:
            raise ParseError(number, "sequence data before the first header")
        else:
            chunks.append(line)
    flush()
    return records


def read_fasta(path) -> list[FastaRecord]:
    # newline="" keeps "\r" so CRLF files are handled by the parser itself
    with open(path, newline="") as handle:
        return parse_fasta(handle)


def format_alignment(aln: PairwiseAlignment, id_a: str = "A", id_b: str = "B",
                     width: int = 60) -> str:
    out = []
    for name, row in ((id_a, aln.row_a), (id_b, aln.row_b)):
        out.append(f">{name}")
        out.extend(row[k:k + width] for k in range(0, len(row), width))
    return "\n".join(out) + "\n"


def write_alignment(target, aln: PairwiseAlignment, id_a: str = "A",
                    id_b: str = "B") -> None:
    text = format_alignment(aln, id_a, id_b)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text)
    else:
        target.write(text)


def read_alignment(path) -> tuple[tuple[str, str], PairwiseAlignment]:
    records = read_fasta(path)
    if len(records) != 2:
        raise ParseError(1, f"expected 2 aligned records, found {len(records)}")
    a, b = records
    return (a.id, b.id), PairwiseAlignment(a.sequence.upper(), b.sequence.upper())


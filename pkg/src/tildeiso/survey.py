"""Batch classification of every word of one length, with TSV and JSON Lines output."""

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

from .isometry import classify
from .words import all_words

_INT_COLUMNS = {"length", "max_len", "runtime_ms"}


@dataclass(frozen=True)
class SurveyRow:
    word: str
    length: int
    ham_status: str
    tilde_status: str
    witness_kind: str = None
    witness_pair: tuple = None
    overlap_digest: str = ""
    max_len: int = 0
    runtime_ms: int = 0

    @classmethod
    def from_report(cls, report, runtime_ms=0):
        pair = report.witness_pair
        return cls(
            word=str(report.f),
            length=len(report.f),
            ham_status=report.ham_status,
            tilde_status=report.tilde_label,
            witness_kind=report.witness_kind,
            witness_pair=None if pair is None else tuple(str(w) for w in pair),
            overlap_digest=report.overlap_digest(),
            max_len=report.max_len,
            runtime_ms=runtime_ms,
        )

    def to_json(self):
        data = asdict(self)
        if self.witness_pair is not None:
            data["witness_pair"] = list(self.witness_pair)
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, line):
        data = json.loads(line)
        if data["witness_pair"] is not None:
            data["witness_pair"] = tuple(data["witness_pair"])
        return cls(**data)

    def to_tsv_cells(self):
        cells = []
        for name in COLUMNS:
            value = getattr(self, name)
            if value is None:
                value = ""
            elif name == "witness_pair":
                value = ",".join(value)
            cells.append(str(value))
        return cells

    @classmethod
    def from_tsv_cells(cls, cells):
        data = dict(zip(COLUMNS, cells))
        for name in _INT_COLUMNS:
            data[name] = int(data[name])
        data["witness_kind"] = data["witness_kind"] or None
        data["witness_pair"] = tuple(data["witness_pair"].split(",")) if data["witness_pair"] else None
        return cls(**data)


COLUMNS = tuple(f.name for f in fields(SurveyRow))


def survey_word(word, max_len=None, timing=True):
    start = time.perf_counter()
    report = classify(word, max_len)
    elapsed = int((time.perf_counter() - start) * 1000) if timing else 0
    return SurveyRow.from_report(report, elapsed)


def _survey_star(args):
    return survey_word(*args)


def run_survey(length, max_len=None, jobs=1, timing=True):
    """One :class:`SurveyRow` per binary word of ``length``, in lexicographic word order."""
    words = [str(w) for w in all_words(length)]
    tasks = [(w, max_len, timing) for w in words]
    if jobs <= 1:
        return [survey_word(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order whatever the completion order
        return list(pool.map(_survey_star, tasks))


def rows_to_tsv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.to_tsv_cells())
    return buf.getvalue()


def rows_from_tsv(text):
    reader = csv.reader(io.StringIO(text), delimiter="\t")
    header = next(reader)
    if tuple(header) != COLUMNS:
        raise ValueError(f"unexpected TSV header {header}")
    return [SurveyRow.from_tsv_cells(cells) for cells in reader]


def rows_to_jsonl(rows):
    return "".join(row.to_json() + "\n" for row in rows)


def rows_from_jsonl(text):
    return [SurveyRow.from_json(line) for line in text.splitlines() if line.strip()]


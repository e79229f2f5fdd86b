"""Run records and their CSV / newline-delimited JSON forms."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, fields
from typing import Iterable, TextIO

from .engine import DEFAULT_RETRIES, InvalidForm, TestOutcome, Verdict, build_params, lucasian_test

CSV_COLUMNS = ("D", "l", "bits", "p", "result", "seconds")
TIMING_FIELDS = ("elapsed_seconds",)


@dataclass
class RunRecord:
    D: int
    m: int
    p: int
    l: int
    N: int
    bit_size: int
    verdict: str
    certificate_j: int | None = None
    witness: str | None = None
    factor: int | None = None
    bases_tried: int = 0
    elapsed_seconds: float = 0.0
    seed: int = 0
    k: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "RunRecord":
        data = json.loads(line)
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown RunRecord keys: {sorted(unknown)}")
        return cls(**data)

    def without_timing(self) -> dict:
        d = asdict(self)
        for key in TIMING_FIELDS:
            d.pop(key)
        return d

    def csv_row(self) -> tuple:
        return (self.D, self.l, self.bit_size, self.p, self.verdict, f"{self.elapsed_seconds:.5f}")

    def describe(self) -> str:
        head = f"N = {self.m}*{self.p}^{self.l} - 1 ({self.bit_size} bits), D = {self.D}: {self.verdict}"
        extra = []
        if self.certificate_j is not None:
            extra.append(f"j = {self.certificate_j}")
        if self.witness:
            extra.append(f"witness = {self.witness}")
        if self.factor is not None:
            extra.append(f"factor = {self.factor}")
        extra.append(f"bases = {self.bases_tried}")
        extra.append(f"seed = {self.seed}")
        extra.append(f"{self.elapsed_seconds:.5f} s")
        return head + " [" + ", ".join(extra) + "]"


def record_from_outcome(
    D: int, m: int, p: int, l: int, outcome: TestOutcome, elapsed: float, seed: int, k: int | None
) -> RunRecord:
    N = m * p**l - 1
    return RunRecord(
        D=D,
        m=m,
        p=p,
        l=l,
        N=N,
        bit_size=N.bit_length(),
        verdict=outcome.verdict.value,
        certificate_j=outcome.certificate_j,
        witness=outcome.witness.value if outcome.witness else None,
        factor=outcome.factor,
        bases_tried=outcome.bases_tried,
        elapsed_seconds=elapsed,
        seed=seed,
        k=k,
    )


def run_one(
    D: int, m: int, p: int, l: int, *, seed: int = 0, retries: int = DEFAULT_RETRIES, k: int | None = None
) -> RunRecord:
    """Build the parameters, run the certificate search and time it."""
    start = time.perf_counter()
    try:
        params = build_params(D, m, p, l)
    except InvalidForm as exc:
        outcome = TestOutcome(Verdict.NOT_APPLICABLE, str(exc))
    else:
        outcome = lucasian_test(params, seed=seed, retries=retries)
    return record_from_outcome(D, m, p, l, outcome, time.perf_counter() - start, seed, k)


def write_csv(records: Iterable[RunRecord], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.csv_row())


def write_jsonl(records: Iterable[RunRecord], out: TextIO) -> None:
    for rec in records:
        out.write(rec.to_json() + "\n")


def read_jsonl(text: str | TextIO) -> list[RunRecord]:
    stream = io.StringIO(text) if isinstance(text, str) else text
    return [RunRecord.from_json(line) for line in stream if line.strip()]

# src/cli/report.py
import csv
import io
import json
import logging
import math
import sys
from dataclasses import asdict, dataclass, field

from common.errors import UsageError

LOGGER = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
CHECK_COLUMNS = ("check_id", "anchor", "measured", "expected", "tolerance", "passed")


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    measured: float
    expected: float
    tolerance: float
    passed: bool
    details: dict = field(default_factory=dict)

    def to_record(self):
        return asdict(self)

    @classmethod
    def from_record(cls, record):
        return cls(record["check_id"], record["anchor"], record["measured"], record["expected"],
                   record["tolerance"], bool(record["passed"]), record.get("details", {}))


@dataclass
class PaperReport:
    records: list = field(default_factory=list)

    @property
    def verdict(self):
        return PASS if all(r.passed for r in self.records) else FAIL

    @property
    def failed(self):
        return [r.check_id for r in self.records if not r.passed]

    def add(self, record):
        LOGGER.info("%-22s %s measured=%r expected=%r", record.check_id, PASS if record.passed else FAIL,
                    record.measured, record.expected)
        self.records.append(record)

    def to_record(self):
        return {"verdict": self.verdict, "records": [r.to_record() for r in self.records]}

    @classmethod
    def from_record(cls, record):
        return cls([CheckRecord.from_record(r) for r in record["records"]])


# --- Codecs ---

def _finite(value):
    """JSON has no inf/nan; encode them as strings."""
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {key: _finite(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(item) for item in value]
    return value


def to_json(record):
    return json.dumps(_finite(record), ensure_ascii=False, indent=2) + "\n"


def to_csv(rows, columns=None):
    rows = list(rows)
    columns = list(columns or (rows[0].keys() if rows else ()))
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(row.get(key)) for key in columns})
    return buffer.getvalue()


def _cell(value):
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(_finite(value))
    if isinstance(value, float):
        return repr(value)
    return value


def report_csv(report):
    return to_csv((r.to_record() for r in report.records), CHECK_COLUMNS)


def parse_json(text):
    return json.loads(text)


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class ReportWriter:
    """UTF-8 sink for one command's output; ``path`` None means stdout."""

    def __init__(self, path=None):
        self.path = path
        self.fh = None
        self._owned = False

    def open(self):
        if self.path in (None, "-"):
            self.fh = sys.stdout
            return self
        try:
            self.fh = open(self.path, "w", encoding="utf-8", newline="")
        except OSError as exc:
            raise UsageError(f"cannot open output {self.path!r}: {exc}") from exc
        self._owned = True
        return self

    def write(self, text):
        if self.fh is None:
            self.open()
        self.fh.write(text if text.endswith("\n") else text + "\n")

    def close(self):
        try:
            if self.fh is not None:
                self.fh.flush()
                if self._owned:
                    self.fh.close()
        finally:
            self.fh = None
            self._owned = False

    def __enter__(self):
        return self.open()

    def __exit__(self, *exc):
        self.close()

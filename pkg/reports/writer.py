"""Deterministic JSON / CSV output to a file or standard output."""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from identities.report import CheckReport
from simplex.operator import ConvergenceRow

CONVERGENCE_HEADER = ("function", "k", "n", "grid_step", "sup_error")


class ReportWriter:
    """Serializes payloads and writes them to ``path``, or to ``stream`` when no path is set.

    The same payload always produces the same bytes: key order is kept, floats
    use ``repr`` and CSV rows end in a bare newline.
    """

    def __init__(self, path: Path | None = None, stream: TextIO | None = None) -> None:
        self._path = path
        self._stream = stream

    # -- payloads ----------------------------------------------------------

    @staticmethod
    def check_payload(results: dict[str, list[CheckReport]]) -> dict[str, list[dict]]:
        """{"thm1": [records...], ...}; suites with no failures map to []."""
        return {
            suite: [record for report in reports for record in report.to_records()]
            for suite, reports in results.items()
        }

    @staticmethod
    def convergence_records(rows: Iterable[ConvergenceRow]) -> list[dict]:
        return [
            {
                "function": row.function,
                "k": row.k,
                "n": row.n,
                "grid_step": str(row.grid_step),
                "sup_error": row.sup_error,
            }
            for row in rows
        ]

    # -- write -------------------------------------------------------------

    def write_json(self, payload: object) -> None:
        self._emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")

    def write_csv(self, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
        buffer = io.StringIO()
        out = csv.writer(buffer, lineterminator="\n")
        out.writerow(header)
        for row in rows:
            out.writerow([_cell(value) for value in row])
        self._emit(buffer.getvalue())

    def write_convergence(self, rows: Iterable[ConvergenceRow], fmt: str = "csv") -> None:
        records = self.convergence_records(rows)
        if fmt == "json":
            self.write_json(records)
        else:
            rows_out = ([r[h] for h in CONVERGENCE_HEADER] for r in records)
            self.write_csv(CONVERGENCE_HEADER, rows_out)

    # -- internal ----------------------------------------------------------

    def _emit(self, text: str) -> None:
        if self._path is None:
            stream = self._stream or sys.stdout
            stream.write(text)
            stream.flush()
            return
        self._path.parent.mkdir(parents=True, exist_ok=True)
        self._path.write_text(text, encoding="utf-8")


def _cell(value: object) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)

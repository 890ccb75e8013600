"""Result documents and their CSV/JSON renderings.

Floats are written with Python's shortest round-trip repr and booleans as
true/false, so repeated runs produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, TextIO

from vcausal import __version__
from vcausal.errors import OutputError


@dataclass(frozen=True)
class ExperimentResult:
    """Rows (one per report, block or point) plus a summary of the whole run."""

    experiment: str
    seed: int
    columns: tuple[str, ...]
    rows: list[dict[str, Any]]
    summary: dict[str, Any] = field(default_factory=dict)

    def document(self) -> dict[str, Any]:
        """JSON-ready document; non-finite floats become None."""
        return {
            "version": __version__,
            "experiment": self.experiment,
            "seed": self.seed,
            "summary": {key: _finite(value) for key, value in self.summary.items()},
            "rows": [{name: _finite(row[name]) for name in self.columns} for row in self.rows],
        }


def _finite(value: Any) -> Any:
    if isinstance(value, dict):
        return {key: _finite(item) for key, item in value.items()}
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if not math.isfinite(value):
            return ""
        return repr(value)
    return str(value)


def render_csv(result: ExperimentResult) -> str:
    buffer = io.StringIO()
    buffer.write(f"# vcausal {__version__}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([format_value(row[name]) for name in result.columns])
    return buffer.getvalue()


def render_json(result: ExperimentResult) -> str:
    return json.dumps(result.document(), indent=2, allow_nan=False) + "\n"


RENDERERS = {"csv": render_csv, "json": render_json}


def render(result: ExperimentResult, fmt: str) -> str:
    try:
        return RENDERERS[fmt](result)
    except KeyError:
        raise OutputError(f"Unknown output format: {fmt}. Use csv or json.") from None


def emit(result: ExperimentResult, fmt: str, path: Optional[str], stream: TextIO) -> None:
    """Write the rendered result to path, or to stream when path is None or '-'."""
    text = render(result, fmt)
    if path is None or path == "-":
        stream.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write results to {path}: {exc.strerror or exc}") from exc


def rows_from(items: Sequence[Any]) -> list[dict[str, Any]]:
    return [item.as_row() for item in items]


def scaled(row: Mapping[str, Any], factors: Mapping[str, float]) -> dict[str, Any]:
    """Copy of row with the named numeric columns multiplied by their factor."""
    return {k: (v * factors[k] if k in factors else v) for k, v in row.items()}

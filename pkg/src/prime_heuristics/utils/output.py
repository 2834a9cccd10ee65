"""Byte-stable CSV, JSON and text writers for report sections."""

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal

from ..models import DensityComparison, DependencyTrendRow

OutputFormat = Literal["csv", "json", "text"]
Cell = int | float | str | bool | None

COMPARISON_COLUMNS = ("x", "empirical", "predicted", "ratio", "constant", "truncation")
TREND_COLUMNS = ("x", "dependency_ratio", "abs_error")


@dataclass(frozen=True)
class ReportSection:
    """Titled table with metadata lines shown in text mode."""

    title: str
    columns: tuple[str, ...]
    records: list[tuple[Cell, ...]]
    metadata: list[tuple[str, Cell]] = field(default_factory=list)


def comparison_section(
    title: str,
    rows: Sequence[DensityComparison],
    metadata: list[tuple[str, Cell]] | None = None,
) -> ReportSection:
    """Build a section from density comparison rows."""
    records: list[tuple[Cell, ...]] = [
        (
            row.x,
            row.empirical_count,
            row.predicted_count,
            row.ratio,
            row.constant_used,
            row.truncation_limit,
        )
        for row in rows
    ]
    return ReportSection(title, COMPARISON_COLUMNS, records, metadata or [])


def trend_section(
    title: str,
    rows: Sequence[DependencyTrendRow],
    metadata: list[tuple[str, Cell]] | None = None,
) -> ReportSection:
    """Build a section from dependency trend rows."""
    records: list[tuple[Cell, ...]] = [
        (row.x, row.dependency_ratio, row.abs_error) for row in rows
    ]
    return ReportSection(title, TREND_COLUMNS, records, metadata or [])


def format_cell(value: Cell) -> str:
    """Format one cell; floats use repr so output is reproducible."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(sections: Sequence[ReportSection]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for section in sections:
        if len(sections) > 1:
            buffer.write(f"# {section.title}\n")
        writer.writerow(section.columns)
        writer.writerows([format_cell(v) for v in record] for record in section.records)
    return buffer.getvalue()


def _section_objects(section: ReportSection) -> list[dict[str, Cell]]:
    return [dict(zip(section.columns, record, strict=True)) for record in section.records]


def render_json(sections: Sequence[ReportSection]) -> str:
    payload: object
    if len(sections) == 1:
        payload = _section_objects(sections[0])
    else:
        payload = {
            section.title: {
                "metadata": dict(section.metadata),
                "rows": _section_objects(section),
            }
            for section in sections
        }
    return json.dumps(payload, indent=2) + "\n"


def render_text(sections: Sequence[ReportSection]) -> str:
    lines: list[str] = []
    for section in sections:
        if lines:
            lines.append("")
        lines.append(f"== {section.title} ==")
        lines.extend(f"{key}: {format_cell(value)}" for key, value in section.metadata)

        table = [list(section.columns)]
        table += [
            [format_cell(v) if v is not None else "undefined" for v in record]
            for record in section.records
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(section.columns))]
        for row in table:
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths, strict=True)))
    return "\n".join(lines) + "\n"


def render(sections: Sequence[ReportSection], output_format: OutputFormat) -> str:
    """Render sections in the requested format.

    Args:
        sections: report sections in output order
        output_format: "csv", "json" or "text"

    Returns:
        Report text ending in a newline, identical for identical inputs
    """
    if output_format == "csv":
        return render_csv(sections)
    if output_format == "json":
        return render_json(sections)
    return render_text(sections)

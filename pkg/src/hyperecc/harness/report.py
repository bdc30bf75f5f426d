"""Report tables rendered as TSV (default) or aligned text."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from hyperecc.models import HalfInt

Cell = str | int | float | bool | None


def format_cell(value: Cell | HalfInt) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


class ReportTable(BaseModel):
    title: str = ""
    columns: list[str]
    rows: list[list[str]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _rows_match_columns(self) -> ReportTable:
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise ValueError(f"row {i} has {len(row)} cells, expected {len(self.columns)}")
        return self

    def add_row(self, *values: Cell | HalfInt) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} cells, got {len(values)}")
        self.rows.append([format_cell(v) for v in values])

    def extend(self, other: ReportTable) -> None:
        if other.columns != self.columns:
            raise ValueError("column mismatch")
        self.rows.extend(other.rows)

    def column(self, name: str) -> list[str]:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def to_tsv(self) -> str:
        lines = ["\t".join(self.columns), *("\t".join(row) for row in self.rows)]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        widths = [len(c) for c in self.columns]
        for row in self.rows:
            widths = [max(w, len(cell)) for w, cell in zip(widths, row, strict=True)]

        def fmt(cells: list[str]) -> str:
            return "  ".join(cell.rjust(w) for cell, w in zip(cells, widths, strict=True)).rstrip()

        lines = [self.title] if self.title else []
        lines.append(fmt(self.columns))
        lines.append("  ".join("-" * w for w in widths))
        lines.extend(fmt(row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def render(self, pretty: bool = False) -> str:
        return self.to_text() if pretty else self.to_tsv()

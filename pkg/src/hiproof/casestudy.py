"""Case-study intake and compactness audit reports.

Input is a small table of real houses (CSV or JSON) with the columns

    name, W, L, H, alpha_deg

one row per house, pitch in degrees. Each house is audited against four
optimization scenarios: the best possible envelope for its volume, for its
footprint ratio, for its slenderness, and for its floor area and wall
height. The audit keeps full-precision ratios taken from the dimensions as
given; rounding only ever happens in table presentation.

Reports render as an aligned text table (grouped per scenario), as JSON
(full precision, stable key order, round-trips through parse_report_json
byte for byte) or as flat CSV.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Iterable, TextIO

from .errors import DomainError, ParseError
from .geometry import (
    AspectRatios,
    EnvelopeQuantities,
    HouseParams,
    check_dimension,
    envelope_of,
    ratios_of,
)
from .optimize import (
    OptimalDesign,
    optimize_fixed_floor,
    optimize_fixed_k,
    optimize_fixed_r,
    optimize_fixed_volume,
)
from .serialize import design_to_dict, dumps_pretty, format_fixed

__all__ = [
    "CaseStudyRecord",
    "AuditRow",
    "AUDIT_SCENARIOS",
    "CSV_COLUMNS",
    "parse_records",
    "audit",
    "audit_records",
    "render_report",
    "parse_report_json",
]

CSV_COLUMNS = ("name", "W", "L", "H", "alpha_deg")

AUDIT_SCENARIOS = ("fixed-volume", "fixed-r", "fixed-k", "fixed-floor")

# record field -> input column, for error messages
_COLUMN_OF_FIELD = {
    "name": "name",
    "width": "W",
    "length": "L",
    "height": "H",
    "alpha": "alpha_deg",
}


@dataclass(frozen=True)
class CaseStudyRecord:
    """One real house as drafted or built. Pitch stays in degrees here."""

    name: str
    width: float
    length: float
    height: float
    alpha_deg: float

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name.strip():
            raise DomainError("name", "must be a non-empty string")
        object.__setattr__(self, "name", self.name.strip())
        object.__setattr__(self, "width", check_dimension("width", self.width))
        object.__setattr__(self, "length", check_dimension("length", self.length))
        object.__setattr__(self, "height", check_dimension("height", self.height))
        # delegate the range check to the params constructor
        params = HouseParams.from_degrees(self.width, self.length, self.height, self.alpha_deg)
        object.__setattr__(self, "alpha_deg", float(self.alpha_deg))
        object.__setattr__(self, "_params", params)

    def params(self) -> HouseParams:
        """The record as validated radian-based house parameters."""
        return self._params


@dataclass(frozen=True)
class AuditRow:
    """One house judged against one scenario's optimal envelope."""

    house: str
    scenario: str
    record: CaseStudyRecord
    envelope: EnvelopeQuantities
    ratios: AspectRatios
    optimal: OptimalDesign
    ratio: float
    surplus: float


# ---------------------------------------------------------------------------
# parsing


def _record_from_strings(values: dict[str, str], line: int) -> CaseStudyRecord:
    numbers: dict[str, float] = {}
    for column in ("W", "L", "H", "alpha_deg"):
        raw = values[column].strip()
        try:
            numbers[column] = float(raw)
        except ValueError:
            raise ParseError(f"not a number: {raw!r}", line=line, column=column) from None
    try:
        return CaseStudyRecord(
            name=values["name"],
            width=numbers["W"],
            length=numbers["L"],
            height=numbers["H"],
            alpha_deg=numbers["alpha_deg"],
        )
    except DomainError as err:
        column = _COLUMN_OF_FIELD.get(err.field, err.field)
        raise ParseError(err.message, line=line, column=column) from None


def _parse_csv(text: str) -> list[CaseStudyRecord]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input, expected a header row", line=1) from None
    header = [cell.strip() for cell in header]
    if header != list(CSV_COLUMNS):
        raise ParseError(
            f"header must be exactly {','.join(CSV_COLUMNS)}, got {','.join(header)}", line=1
        )
    records = []
    for line_no, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue  # ignore blank lines
        if len(row) != len(CSV_COLUMNS):
            raise ParseError(
                f"expected {len(CSV_COLUMNS)} fields, got {len(row)}", line=line_no
            )
        values = dict(zip(CSV_COLUMNS, row))
        records.append(_record_from_strings(values, line_no))
    # A header with no data rows is a valid, empty data set.
    return records


def _parse_json_records(text: str) -> list[CaseStudyRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", line=err.lineno) from None
    if not isinstance(data, list):
        raise ParseError("expected a JSON array of house objects")
    records = []
    for index, item in enumerate(data, start=1):
        if not isinstance(item, dict):
            raise ParseError(f"record {index}: expected an object")
        missing = [c for c in CSV_COLUMNS if c not in item]
        if missing:
            raise ParseError(f"record {index}: missing key(s) {', '.join(missing)}")
        for column in ("W", "L", "H", "alpha_deg"):
            value = item[column]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParseError(f"record {index}: not a number", column=column)
        try:
            records.append(
                CaseStudyRecord(
                    name=item["name"] if isinstance(item["name"], str) else "",
                    width=item["W"],
                    length=item["L"],
                    height=item["H"],
                    alpha_deg=item["alpha_deg"],
                )
            )
        except DomainError as err:
            column = _COLUMN_OF_FIELD.get(err.field, err.field)
            raise ParseError(f"record {index}: {err.message}", column=column) from None
    return records


def parse_records(source: str | TextIO, fmt: str = "csv") -> list[CaseStudyRecord]:
    """Read house records from text or a stream.

    Args:
        source: CSV or JSON content, or an open text stream with it.
        fmt: "csv" (header name,W,L,H,alpha_deg) or "json" (array of
            objects with the same keys).

    Raises:
        ParseError: malformed input, with line number and column when known.
    """
    text = source.read() if hasattr(source, "read") else source
    if fmt == "csv":
        return _parse_csv(text)
    if fmt == "json":
        return _parse_json_records(text)
    raise ParseError(f"unknown input format {fmt!r}, expected 'csv' or 'json'")


# ---------------------------------------------------------------------------
# auditing


def audit(record: CaseStudyRecord) -> list[AuditRow]:
    """Judge one house against all four applicable scenarios.

    The scenario constraints are taken from the house itself at full
    precision: its volume, its ratio L/W, its slenderness H/W, and its
    floor area with its wall height. Each row's ratio S / S_min is 1.0
    when the house already is the optimum; it can never drop below 1
    beyond rounding noise.
    """
    p = record.params()
    env = envelope_of(p)
    shape = ratios_of(p)
    designs = {
        "fixed-volume": optimize_fixed_volume(env.volume, p.alpha),
        "fixed-r": optimize_fixed_r(env.volume, p.alpha, shape.r),
        "fixed-k": optimize_fixed_k(env.volume, p.alpha, shape.k),
        "fixed-floor": optimize_fixed_floor(env.floor_area, p.height, p.alpha),
    }
    rows = []
    for scenario in AUDIT_SCENARIOS:
        design = designs[scenario]
        rows.append(
            AuditRow(
                house=record.name,
                scenario=scenario,
                record=record,
                envelope=env,
                ratios=shape,
                optimal=design,
                ratio=env.surface / design.s_min,
                surplus=env.surface - design.s_min,
            )
        )
    return rows


def audit_records(records: Iterable[CaseStudyRecord]) -> list[AuditRow]:
    """Audit many records; rows come out grouped per house, scenario-ordered."""
    rows: list[AuditRow] = []
    for record in records:
        rows.extend(audit(record))
    return rows


# ---------------------------------------------------------------------------
# rendering

_CONSTRAINT_HEADER = {
    "fixed-volume": "V",
    "fixed-r": "r",
    "fixed-k": "k",
    "fixed-floor": "F",
}

_SCENARIO_CAPTION = {
    "fixed-volume": "smallest envelope for the same volume and pitch",
    "fixed-r": "smallest envelope keeping the footprint ratio L/W",
    "fixed-k": "smallest envelope keeping the slenderness H/W",
    "fixed-floor": "smallest envelope for the same floor area and wall height",
}


def _constraint_value(row: AuditRow) -> float:
    scenario = row.scenario
    if scenario == "fixed-volume":
        return row.envelope.volume
    if scenario == "fixed-r":
        return row.ratios.r
    if scenario == "fixed-k":
        return row.ratios.k
    if scenario == "fixed-floor":
        return row.envelope.floor_area
    raise ValueError(f"unknown audit scenario {scenario!r}")


def _render_table(rows: list[AuditRow], precision: int) -> str:
    by_scenario: dict[str, list[AuditRow]] = {}
    for row in rows:
        by_scenario.setdefault(row.scenario, []).append(row)

    blocks = []
    for scenario, group in by_scenario.items():
        caption = _SCENARIO_CAPTION.get(scenario, scenario)
        header = [
            "house", "W", "L", "H", "alpha",
            _CONSTRAINT_HEADER.get(scenario, "c"), "S",
            "W_min", "L_min", "H_min", "S_min", "S/S_min", "S-S_min",
        ]
        table = [header]
        for row in group:
            rec, opt = row.record, row.optimal
            cells = [row.house] + [
                format_fixed(v, precision)
                for v in (
                    rec.width, rec.length, rec.height, rec.alpha_deg,
                    _constraint_value(row), row.envelope.surface,
                    opt.w_min, opt.l_min, opt.h_min, opt.s_min,
                    row.ratio, row.surplus,
                )
            ]
            table.append(cells)
        widths = [max(len(line[i]) for line in table) for i in range(len(header))]
        lines = [f"{scenario}: {caption}"]
        for line_no, cells in enumerate(table):
            padded = [cells[0].ljust(widths[0])] + [
                c.rjust(widths[i]) for i, c in enumerate(cells) if i > 0
            ]
            lines.append("  ".join(padded).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _row_to_dict(row: AuditRow) -> dict[str, Any]:
    rec = row.record
    return {
        "house": row.house,
        "scenario": row.scenario,
        "real": {
            "width": rec.width,
            "length": rec.length,
            "height": rec.height,
            "alpha_deg": rec.alpha_deg,
            "volume": row.envelope.volume,
            "surface": row.envelope.surface,
            "r": row.ratios.r,
            "k": row.ratios.k,
            "floor_area": row.envelope.floor_area,
        },
        "optimal": design_to_dict(row.optimal),
        "ratio": row.ratio,
        "surplus": row.surplus,
    }


def _render_csv(rows: list[AuditRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["house", "scenario", "W", "L", "H", "alpha_deg", "constraint",
         "S", "W_min", "L_min", "H_min", "S_min", "ratio", "surplus"]
    )
    for row in rows:
        rec, opt = row.record, row.optimal
        writer.writerow(
            [rec.name, row.scenario]
            + [repr(v) for v in (
                rec.width, rec.length, rec.height, rec.alpha_deg,
                _constraint_value(row), row.envelope.surface,
                opt.w_min, opt.l_min, opt.h_min, opt.s_min,
                row.ratio, row.surplus,
            )]
        )
    return out.getvalue()


def render_report(rows: list[AuditRow], fmt: str = "table", precision: int = 2) -> str:
    """Render audit rows.

    Args:
        rows: audit rows, any mix of houses and scenarios.
        fmt: "table" (aligned text, one block per scenario, values rounded
            to `precision` decimals), "json" (full precision, stable key
            order) or "csv" (flat, full precision).
    """
    if not rows:
        raise DomainError("rows", "nothing to render")
    if fmt == "table":
        return _render_table(rows, precision)
    if fmt == "json":
        return dumps_pretty([_row_to_dict(row) for row in rows])
    if fmt == "csv":
        return _render_csv(rows)
    raise DomainError("format", f"unknown report format {fmt!r}")


def parse_report_json(text: str) -> list[AuditRow]:
    """Inverse of render_report(..., "json"); round-trips byte for byte."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", line=err.lineno) from None
    if not isinstance(data, list):
        raise ParseError("expected a JSON array of audit rows")
    rows = []
    for index, item in enumerate(data, start=1):
        try:
            real = item["real"]
            record = CaseStudyRecord(
                name=item["house"],
                width=real["width"],
                length=real["length"],
                height=real["height"],
                alpha_deg=real["alpha_deg"],
            )
            optimal_data = dict(item["optimal"])
            if optimal_data.pop("kkt", None) is not None:
                raise ParseError(f"record {index}: audit rows cannot carry kkt data")
            optimal = OptimalDesign(**optimal_data)
            rows.append(
                AuditRow(
                    house=record.name,
                    scenario=item["scenario"],
                    record=record,
                    envelope=EnvelopeQuantities(
                        volume=real["volume"],
                        surface=real["surface"],
                        floor_area=real["floor_area"],
                    ),
                    ratios=AspectRatios(r=real["r"], k=real["k"]),
                    optimal=optimal,
                    ratio=item["ratio"],
                    surplus=item["surplus"],
                )
            )
        except (KeyError, TypeError) as err:
            raise ParseError(f"record {index}: malformed audit row ({err})") from None
        except DomainError as err:
            raise ParseError(f"record {index}: {err.message}", column=err.field) from None
    return rows

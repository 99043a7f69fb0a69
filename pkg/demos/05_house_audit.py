"""
Auditing a portfolio of houses from a CSV file
==============================================

The audit reads measured houses, solves all four comparable scenarios
for each one, and reports how much envelope every house wastes relative
to each optimum.  The same report is available as JSON and CSV for
machine consumption.
"""

from pathlib import Path

from hiproof.casestudy import audit_records, parse_records, render_report

cases = Path(__file__).resolve().parent.parent / "cases" / "paper_houses.csv"

rows = audit_records(parse_records(cases.read_text()))
print(render_report(rows, fmt="table"))

# the worst offender, by wasted envelope area
worst = max(rows, key=lambda row: row.surplus)
print(
    f"largest surplus: {worst.house} under the {worst.scenario} comparison,"
    f" {worst.surplus:.1f} m^2 above its optimum."
)

"""Acceptance gate: every published claim, one test and one printed verdict each.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS/FAIL line
per criterion; a plain pytest run still enforces all of them through the
assertions.
"""

import functools
import http.client
import json
import math
import subprocess
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from pytest import approx

from hiproof.casestudy import AUDIT_SCENARIOS, audit_records, parse_records
from hiproof.geometry import HouseParams, compactness, gamma, volume
from hiproof.optimize import (
    h_crit,
    optimize_fixed_floor,
    optimize_fixed_k,
    optimize_fixed_r,
    optimize_fixed_volume,
    optimize_height_range,
)
from hiproof.oracle import GridSpec, contour_grid
from hiproof.serialize import contour_to_dict, design_to_dict, dumps_compact
from hiproof.service import build_server
from hiproof.verify import verify_all

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"
CASES = ROOT / "cases" / "paper_houses.csv"

DEG30 = math.radians(30.0)


def criterion(label):
    """Print one PASS/FAIL line for the wrapped acceptance check."""

    def wrap(func):
        @functools.wraps(func)
        def run(*args, **kwargs):
            try:
                func(*args, **kwargs)
            except BaseException:
                print(f"FAIL  {label}")
                raise
            print(f"PASS  {label}")

        return run

    return wrap


@criterion("scenario 1: free optimum for V=400 m^3 at 30 deg, under 1 ms")
def test_scenario1_worked_example():
    d = optimize_fixed_volume(400.0, DEG30)
    assert d.s_min == approx(271.23, abs=0.01)
    assert d.w_min == approx(8.85, abs=0.01)
    assert d.l_min == approx(8.85, abs=0.01)
    assert d.h_min == approx(5.11, abs=0.01)
    assert d.k_min == approx(0.58, abs=0.005)
    start = time.perf_counter()
    for _ in range(200):
        optimize_fixed_volume(400.0, DEG30)
    per_call = (time.perf_counter() - start) / 200.0
    assert per_call < 1e-3


@criterion("scenario 2: pinned footprint ratio r=1.5 for V=400 m^3 at 30 deg")
def test_scenario2_worked_example():
    d = optimize_fixed_r(400.0, DEG30, 1.5)
    assert d.k_min == approx(0.69, abs=0.005)
    assert d.s_min == approx(274.94, abs=0.05)
    assert d.w_min == approx(7.27, abs=0.01)
    assert d.l_min == approx(10.91, abs=0.01)
    assert d.h_min == approx(5.04, abs=0.01)


@criterion("scenario 3: pinned slenderness k=0.5 for V=400 m^3 at 30 deg")
def test_scenario3_worked_example():
    d = optimize_fixed_k(400.0, DEG30, 0.5)
    assert d.r_min == approx(0.93, abs=0.005)
    assert d.s_min == approx(271.70, abs=0.05)
    assert d.w_min == approx(9.52, abs=0.01)
    assert d.l_min == approx(8.83, abs=0.01)
    assert d.h_min == approx(4.76, abs=0.01)


@criterion("scenario 4: square plan for F=100 m^2, H=3 m at 30 deg")
def test_scenario4_worked_example():
    d = optimize_fixed_floor(100.0, 3.0, DEG30)
    assert d.w_min == 10.0
    assert d.l_min == 10.0
    assert d.s_min == approx(235.47, abs=0.01)


@criterion("scenario 5: boxed height, both published cases plus multiplier signs")
def test_scenario5_both_cases():
    upper = optimize_height_range(400.0, DEG30, 3.0, 4.0)
    assert upper.w_min == approx(10.0, abs=0.01)
    assert upper.h_min == approx(4.0, abs=0.01)
    assert upper.s_min == approx(275.47, abs=0.01)
    assert upper.kkt.active == "upper"

    interior = optimize_height_range(400.0, DEG30, 5.0, 6.0)
    assert interior.w_min == approx(8.85, abs=0.01)
    assert interior.h_min == approx(5.11, abs=0.01)
    assert interior.kkt.active == "interior"

    lower = optimize_height_range(400.0, DEG30, 6.0, 8.0)
    assert lower.kkt.active == "lower"

    for d in (upper, interior, lower):
        assert d.kkt.mu1 >= 0.0
        assert d.kkt.mu2 >= 0.0


# published audit rows: (house, scenario, S_min, ratio, surplus)
PUBLISHED_ROWS = [
    ("House A", "fixed-volume", 903.6, 1.10, 90.6),
    ("House A", "fixed-r", 964.0, 1.03, 30.2),
    ("House A", "fixed-k", 905.6, 1.10, 88.6),
    ("House A", "fixed-floor", 944.1, 1.05, 50.1),
    ("House B", "fixed-volume", 276.9, 1.15, 42.6),
    ("House B", "fixed-r", 284.2, 1.12, 35.2),
    ("House B", "fixed-k", 289.7, 1.10, 29.7),
    ("House B", "fixed-floor", 314.2, 1.02, 5.2),
    ("House C", "fixed-volume", 585.7, 1.00, 0.08),
    ("House C", "fixed-r", 585.7, 1.00, 0.08),
    ("House C", "fixed-k", 585.7, 1.00, 0.02),
    ("House C", "fixed-floor", 585.7, 1.00, 0.0),
]


@criterion("audit regression: houses A/B/C reproduce all published table rows")
def test_audit_tables_regression():
    rows = {
        (r.house, r.scenario): r
        for r in audit_records(parse_records(CASES.read_text()))
    }
    assert len(rows) == 12
    for house, scenario, s_min, ratio, surplus in PUBLISHED_ROWS:
        row = rows[(house, scenario)]
        assert row.optimal.s_min == approx(s_min, rel=0.002), (house, scenario)
        assert row.ratio == approx(ratio, abs=0.01), (house, scenario)
        assert row.surplus == approx(surplus, abs=1.0), (house, scenario)
    for scenario in AUDIT_SCENARIOS:
        assert rows[("House C", scenario)].ratio == approx(1.00, abs=0.005)


@criterion("oracle equivalence: 200 seeded specs per scenario agree with grids")
def test_oracle_equivalence():
    start = time.perf_counter()
    checks = verify_all(samples=200, seed=7)
    elapsed = time.perf_counter() - start
    assert [c.scenario for c in checks] == [
        "fixed-volume", "fixed-r", "fixed-k", "fixed-floor", "height-range",
    ]
    for c in checks:
        assert c.samples == 200
        assert c.dominance_ok, c.scenario
        assert c.within_bound, c.scenario
        assert c.converges, c.scenario
    assert elapsed < 60.0


@criterion("property invariants: scaling, stationarity, reductions, monotonicity")
def test_property_invariants():
    # compactness is scale invariant to 1e-9 across two decades
    p = HouseParams.from_degrees(9.5, 16.7, 2.6, 30.0)
    base = compactness(p, optimize_fixed_volume(volume(p), p.alpha).s_min).ratio
    for lam in (0.1, 1.0, 10.0):
        q = HouseParams(9.5 * lam, 16.7 * lam, 2.6 * lam, p.alpha)
        scaled = compactness(q, optimize_fixed_volume(volume(q), q.alpha).s_min).ratio
        assert scaled == approx(base, rel=1e-9)

    # finite-difference stationarity at every scenario 1-3 optimum
    step = 1e-5
    for deg in (15.0, 30.0, 45.0, 60.0, 75.0):
        alpha = math.radians(deg)
        d1 = optimize_fixed_volume(400.0, alpha)
        for df in (
            (gamma(d1.r_min + step, d1.k_min, alpha) - gamma(d1.r_min - step, d1.k_min, alpha)),
            (gamma(d1.r_min, d1.k_min + step, alpha) - gamma(d1.r_min, d1.k_min - step, alpha)),
        ):
            assert abs(df / (2.0 * step)) < 1e-6
        d2 = optimize_fixed_r(400.0, alpha, 1.5)
        df = gamma(1.5, d2.k_min + step, alpha) - gamma(1.5, d2.k_min - step, alpha)
        assert abs(df / (2.0 * step)) < 1e-6
        d3 = optimize_fixed_k(400.0, alpha, 0.5)
        df = gamma(d3.r_min + step, 0.5, alpha) - gamma(d3.r_min - step, 0.5, alpha)
        assert abs(df / (2.0 * step)) < 1e-6

    # reduction chain ties all scenarios together at the free optimum
    free = optimize_fixed_volume(400.0, DEG30)
    assert optimize_fixed_r(400.0, DEG30, 1.0).s_min == approx(free.s_min, rel=1e-12)
    k_star = 1.0 / (2.0 * math.cos(DEG30))
    assert optimize_fixed_k(400.0, DEG30, k_star).s_min == approx(free.s_min, rel=1e-12)
    hc = h_crit(400.0, DEG30)
    boxed = optimize_height_range(400.0, DEG30, 0.5 * hc, 1.5 * hc)
    assert boxed.s_min == approx(free.s_min, rel=1e-12)

    # steeper pitch: narrower plan, taller walls, larger envelope
    designs = [optimize_fixed_volume(400.0, math.radians(d)) for d in range(10, 81, 5)]
    assert all(a.w_min > b.w_min for a, b in zip(designs, designs[1:]))
    assert all(a.h_min < b.h_min for a, b in zip(designs, designs[1:]))
    assert all(a.s_min < b.s_min for a, b in zip(designs, designs[1:]))

    # constraint-cost curves dip exactly at the free optimum shape
    rs = [0.25 + 0.05 * i for i in range(56)]
    s_of_r = [optimize_fixed_r(400.0, DEG30, r).s_min for r in rs]
    assert abs(rs[s_of_r.index(min(s_of_r))] - 1.0) <= 0.05 + 1e-12
    ks = [0.2 + 0.025 * i for i in range(53)]
    s_of_k = [optimize_fixed_k(400.0, DEG30, k).s_min for k in ks]
    assert abs(ks[s_of_k.index(min(s_of_k))] - k_star) <= 0.025 + 1e-12


def _run_cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "hiproof.cli", *argv],
        capture_output=True, text=True, input=stdin, cwd=ROOT,
    )


@criterion("CLI determinism: byte-identical reruns and golden transcripts")
def test_cli_determinism_and_goldens():
    args = ("optimize", "--scenario", "fixed-volume", "--volume", "400",
            "--alpha-deg", "30", "--output-format", "json")
    first, second = _run_cli(*args), _run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout

    transcripts = [
        (("--help",), "help_main.txt"),
        (("optimize", "--help"), "help_optimize.txt"),
        (("optimize", "--scenario", "fixed-volume", "--volume", "400",
          "--alpha-deg", "30"), "optimize_fixed_volume_table.txt"),
        (("optimize", "--scenario", "fixed-volume", "--volume", "400",
          "--alpha-deg", "30", "--output-format", "json"), "optimize_fixed_volume.json"),
        (("optimize", "--scenario", "height-range", "--volume", "400",
          "--alpha-deg", "30", "--hmin", "3", "--hmax", "4"),
         "optimize_height_range_table.txt"),
        (("score", "--width", "9.5", "--length", "16.7", "--height", "2.6",
          "--alpha-deg", "30"), "score_house_b_table.txt"),
        (("audit", str(CASES)), "audit_houses_table.txt"),
    ]
    for argv, name in transcripts:
        res = _run_cli(*argv)
        assert res.returncode == 0, argv
        assert res.stdout == (GOLDEN / name).read_text(), name


@criterion("service parity: responses equal library bytes under 100 parallel calls")
def test_service_parity_under_load():
    srv = build_server(port=0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    port = srv.server_address[1]
    try:
        optimize_doc = dumps_compact(
            {"scenario": "fixed-volume", "params": {"volume": 400, "alpha_deg": 30}}
        ).encode()
        optimize_expected = dumps_compact(
            design_to_dict(optimize_fixed_volume(400.0, DEG30))
        ).encode()
        grid = GridSpec(r_range=(0.5, 2.0), k_range=(0.3, 1.0), n_r=9, n_k=7)
        contour_expected = dumps_compact(
            contour_to_dict(contour_grid(400.0, DEG30, grid))
        ).encode()
        contour_query = (
            "/api/v1/contour?volume=400&alpha_deg=30&nr=9&nk=7&rlo=0.5&rhi=2&klo=0.3&khi=1"
        )

        def call(i):
            conn = http.client.HTTPConnection("127.0.0.1", port, timeout=15)
            try:
                if i % 2 == 0:
                    conn.request("POST", "/api/v1/optimize", body=optimize_doc,
                                 headers={"Content-Type": "application/json"})
                    expected = optimize_expected
                else:
                    conn.request("GET", contour_query)
                    expected = contour_expected
                res = conn.getresponse()
                return res.status == 200 and res.read() == expected
            finally:
                conn.close()

        with ThreadPoolExecutor(max_workers=100) as pool:
            outcomes = list(pool.map(call, range(100)))
        assert all(outcomes)

        # single-call parity for the remaining endpoint
        conn = http.client.HTTPConnection("127.0.0.1", port, timeout=15)
        body = dumps_compact(
            {"width": 9.5, "length": 16.7, "height": 2.6, "alpha_deg": 30}
        ).encode()
        conn.request("POST", "/api/v1/score", body=body,
                     headers={"Content-Type": "application/json"})
        res = conn.getresponse()
        payload = json.loads(res.read())
        conn.close()
        p = HouseParams.from_degrees(9.5, 16.7, 2.6, 30.0)
        report = compactness(p, optimize_fixed_volume(volume(p), p.alpha).s_min)
        assert payload["ratio"] == report.ratio
        assert payload["surplus"] == report.surplus
    finally:
        srv.shutdown()
        srv.server_close()

"""Stateless JSON-over-HTTP facade over the optimizer library.

Four routes under a versioned prefix:

    GET  /healthz              liveness probe, constant "ok"
    POST /api/v1/optimize      body {"scenario": ..., "params": {...}} -> design
    POST /api/v1/score         body {width, length, height, alpha_deg} -> report
    GET  /api/v1/contour       query volume, alpha_deg, nr, nk, rlo, rhi, klo, khi

Angles cross this boundary in degrees. Success bodies are produced by the
same serializer the library exposes, so a response and the corresponding
library call are byte-identical after JSON canonicalization. Failures
return {"code", "message", "field"} where code belongs to the closed set
documented in docs/API.md and field names the offending input when known.

Handlers are pure over the request plus immutable server configuration;
there is no session state, so the threaded server needs no locks.
"""

from __future__ import annotations

import json
import math
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import __version__
from .errors import DomainError
from .geometry import HouseParams, compactness, volume
from .optimize import (
    FixedFloorArea,
    FixedFootprintRatio,
    FixedSlenderness,
    FixedVolume,
    HeightRange,
    optimize_fixed_volume,
    solve,
)
from .oracle import GridSpec, contour_grid
from .serialize import (
    compactness_to_dict,
    contour_to_dict,
    design_to_dict,
    dumps_compact,
)

__all__ = ["MAX_BODY_BYTES", "MAX_GRID_AXIS", "build_server"]

MAX_BODY_BYTES = 64 * 1024
# ~2 MB of JSON at full double precision
MAX_GRID_AXIS = 501

_PARAMS_BY_SCENARIO = {
    "fixed-volume": ("volume", "alpha_deg"),
    "fixed-r": ("volume", "alpha_deg", "r"),
    "fixed-k": ("volume", "alpha_deg", "k"),
    "fixed-floor": ("floor_area", "height", "alpha_deg"),
    "height-range": ("volume", "alpha_deg", "hmin", "hmax"),
}

_RANGE_FIELDS = frozenset(
    {"hmin", "hmax", "height_range", "r_range", "k_range", "w_range",
     "n_r", "n_k", "nr", "nk", "rlo", "rhi", "klo", "khi"}
)
_NAMED_FIELDS = frozenset(
    {"width", "length", "height", "alpha", "volume", "r", "k", "floor_area"}
)


def _code_for_field(field: str | None) -> str:
    if field in _RANGE_FIELDS:
        return "invalid_range"
    if field in _NAMED_FIELDS:
        return f"invalid_{field}"
    return "invalid_input"


class ApiError(Exception):
    """One failed request: HTTP status plus the JSON error body."""

    def __init__(self, status: int, code: str, message: str, field: str | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.field = field

    @classmethod
    def from_domain(cls, err: DomainError) -> "ApiError":
        return cls(400, _code_for_field(err.field), err.message, err.field)

    def body(self) -> bytes:
        doc = {"code": self.code, "message": self.message, "field": self.field}
        return dumps_compact(doc).encode("utf-8")


def _require_number(params: dict, key: str) -> float:
    # alpha errors should read "alpha" even though the wire name carries units
    field = "alpha" if key == "alpha_deg" else key
    if key not in params:
        raise ApiError(400, _code_for_field(field), f"missing parameter '{key}'", field)
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ApiError(400, _code_for_field(field), f"parameter '{key}' must be a number", field)
    return float(value)


def _build_spec(scenario: str, params: dict):
    allowed = _PARAMS_BY_SCENARIO[scenario]
    for key in params:
        if key not in allowed:
            raise ApiError(
                400, "invalid_input",
                f"parameter '{key}' is not used by scenario '{scenario}'", str(key),
            )
    values = {key: _require_number(params, key) for key in allowed}
    alpha = math.radians(values["alpha_deg"])
    if scenario == "fixed-volume":
        return FixedVolume(values["volume"], alpha)
    if scenario == "fixed-r":
        return FixedFootprintRatio(values["volume"], alpha, values["r"])
    if scenario == "fixed-k":
        return FixedSlenderness(values["volume"], alpha, values["k"])
    if scenario == "fixed-floor":
        return FixedFloorArea(values["floor_area"], values["height"], alpha)
    return HeightRange(values["volume"], alpha, values["hmin"], values["hmax"])


def _query_float(query: dict, key: str, default: float | None = None) -> float:
    if key not in query:
        if default is None:
            raise ApiError(400, _code_for_field(key), f"missing query parameter '{key}'", key)
        return default
    raw = query[key][-1]
    try:
        value = float(raw)
    except ValueError:
        raise ApiError(
            400, _code_for_field(key), f"query parameter '{key}' must be a number", key
        ) from None
    if not math.isfinite(value):
        raise ApiError(400, _code_for_field(key), f"query parameter '{key}' must be finite", key)
    return value


def _query_int(query: dict, key: str, default: int) -> int:
    if key not in query:
        return default
    raw = query[key][-1]
    try:
        return int(raw)
    except ValueError:
        raise ApiError(
            400, "invalid_range", f"query parameter '{key}' must be an integer", key
        ) from None


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = "hiproof/" + __version__
    sys_version = ""

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        pass

    # -- plumbing ----------------------------------------------------------

    def _respond(self, status: int, body: bytes, content_type: str = "application/json",
                 extra: dict[str, str] | None = None) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", self.server.cors_origin)
        for name, value in (extra or {}).items():
            self.send_header(name, value)
        self.end_headers()
        if body:
            self.wfile.write(body)

    def _respond_error(self, err: ApiError) -> None:
        self._respond(err.status, err.body())

    def _read_json_body(self) -> dict:
        length_header = self.headers.get("Content-Length")
        if length_header is None:
            raise ApiError(411, "length_required", "Content-Length header is required")
        try:
            length = int(length_header)
        except ValueError:
            raise ApiError(400, "invalid_json", "malformed Content-Length header") from None
        if length < 0:
            raise ApiError(400, "invalid_json", "malformed Content-Length header")
        if length > MAX_BODY_BYTES:
            raise ApiError(
                413, "body_too_large", f"request body exceeds {MAX_BODY_BYTES} bytes"
            )
        raw = self.rfile.read(length)
        try:
            doc = json.loads(raw)
        except (json.JSONDecodeError, UnicodeDecodeError):
            raise ApiError(400, "invalid_json", "request body is not valid JSON") from None
        if not isinstance(doc, dict):
            raise ApiError(400, "invalid_json", "request body must be a JSON object")
        return doc

    # -- routes ------------------------------------------------------------

    def do_GET(self):
        url = urlparse(self.path)
        try:
            if url.path == "/healthz":
                self._respond(200, b"ok", content_type="text/plain; charset=utf-8")
            elif url.path == "/api/v1/contour":
                self._handle_contour(url.query)
            elif url.path in ("/api/v1/optimize", "/api/v1/score"):
                raise ApiError(405, "method_not_allowed", "use POST for this endpoint")
            else:
                raise ApiError(404, "not_found", f"no route for {url.path}")
        except ApiError as err:
            extra = {"Allow": "POST, OPTIONS"} if err.status == 405 else None
            self._respond(err.status, err.body(), extra=extra)

    def do_POST(self):
        url = urlparse(self.path)
        try:
            if url.path == "/api/v1/optimize":
                self._handle_optimize(self._read_json_body())
            elif url.path == "/api/v1/score":
                self._handle_score(self._read_json_body())
            elif url.path in ("/healthz", "/api/v1/contour"):
                raise ApiError(405, "method_not_allowed", "use GET for this endpoint")
            else:
                raise ApiError(404, "not_found", f"no route for {url.path}")
        except ApiError as err:
            extra = {"Allow": "GET, OPTIONS"} if err.status == 405 else None
            self._respond(err.status, err.body(), extra=extra)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", self.server.cors_origin)
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Max-Age", "86400")
        self.send_header("Content-Length", "0")
        self.end_headers()

    # -- handlers ----------------------------------------------------------

    def _handle_optimize(self, doc: dict) -> None:
        scenario = doc.get("scenario")
        if scenario not in _PARAMS_BY_SCENARIO:
            raise ApiError(
                400, "invalid_scenario",
                "scenario must be one of " + ", ".join(sorted(_PARAMS_BY_SCENARIO)),
                "scenario",
            )
        params = doc.get("params")
        if not isinstance(params, dict):
            raise ApiError(400, "invalid_input", "'params' must be a JSON object", "params")
        extra_keys = set(doc) - {"scenario", "params"}
        if extra_keys:
            key = sorted(extra_keys)[0]
            raise ApiError(400, "invalid_input", f"unexpected key '{key}'", key)
        try:
            design = solve(_build_spec(scenario, params))
        except DomainError as err:
            raise ApiError.from_domain(err) from None
        self._respond(200, dumps_compact(design_to_dict(design)).encode("utf-8"))

    def _handle_score(self, doc: dict) -> None:
        for key in doc:
            if key not in ("width", "length", "height", "alpha_deg"):
                raise ApiError(400, "invalid_input", f"unexpected key '{key}'", str(key))
        values = {key: _require_number(doc, key) for key in ("width", "length", "height", "alpha_deg")}
        try:
            p = HouseParams.from_degrees(
                values["width"], values["length"], values["height"], values["alpha_deg"]
            )
            best = optimize_fixed_volume(volume(p), p.alpha)
            report = compactness(p, best.s_min)
        except DomainError as err:
            raise ApiError.from_domain(err) from None
        self._respond(200, dumps_compact(compactness_to_dict(report)).encode("utf-8"))

    def _handle_contour(self, raw_query: str) -> None:
        query = parse_qs(raw_query, keep_blank_values=True)
        vol = _query_float(query, "volume")
        alpha_deg = _query_float(query, "alpha_deg")
        n_r = _query_int(query, "nr", 201)
        n_k = _query_int(query, "nk", 201)
        if n_r > MAX_GRID_AXIS or n_k > MAX_GRID_AXIS:
            raise ApiError(
                422, "grid_too_large",
                f"grid axes are capped at {MAX_GRID_AXIS} samples",
                "nr" if n_r > MAX_GRID_AXIS else "nk",
            )
        r_range = (_query_float(query, "rlo", 0.2), _query_float(query, "rhi", 5.0))
        k_range = (_query_float(query, "klo", 0.1), _query_float(query, "khi", 3.0))
        try:
            grid = GridSpec(r_range=r_range, k_range=k_range, n_r=n_r, n_k=n_k)
            result = contour_grid(vol, math.radians(alpha_deg), grid)
        except DomainError as err:
            raise ApiError.from_domain(err) from None
        self._respond(200, dumps_compact(contour_to_dict(result)).encode("utf-8"))


class _Server(ThreadingHTTPServer):
    daemon_threads = True
    allow_reuse_address = True
    # default listen backlog of 5 drops connections under a parallel burst
    request_queue_size = 128

    def __init__(self, address, handler, cors_origin: str):
        self.cors_origin = cors_origin
        super().__init__(address, handler)


def build_server(host: str = "127.0.0.1", port: int = 8080, cors_origin: str = "*") -> _Server:
    """Create a ready-to-serve HTTP server; port 0 picks a free port.

    The caller owns the lifecycle: call serve_forever() (or handle_request)
    and server_close() when done.
    """
    return _Server((host, port), _Handler, cors_origin)

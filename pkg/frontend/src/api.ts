// HTTP client for the optimization service. All envelope math happens
// server-side; this module only moves JSON and enforces two UI-side
// policies: latest-wins optimize requests and cached contour fetches.

import {
  ApiErrorBody,
  CompactnessReport,
  ContourResponse,
  HouseInput,
  OptimalDesign,
  ScenarioSpec,
} from "./types.js";

export class ServiceError extends Error {
  readonly status: number;
  readonly body: ApiErrorBody;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.body = body;
  }
}

// Resolved by a newer submission overtaking this one.
export const STALE = Symbol("stale");

export interface ContourWindow {
  nr: number;
  nk: number;
}

export const DEFAULT_GRID: ContourWindow = { nr: 201, nk: 201 };
export const DEGRADED_GRID: ContourWindow = { nr: 101, nk: 101 };

// A contour fetch slower than this switches later fetches to the
// degraded grid size.
export const SLOW_CONTOUR_MS = 3000;

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function parseError(res: Response): Promise<ServiceError> {
  let body: ApiErrorBody;
  try {
    body = (await res.json()) as ApiErrorBody;
  } catch {
    body = { code: "bad_response", message: `HTTP ${res.status}`, field: null };
  }
  return new ServiceError(res.status, body);
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;
  private readonly now: () => number;
  private contourCache = new Map<string, ContourResponse>();
  private optimizeToken = 0;
  private optimizeAbort: AbortController | null = null;
  private degraded = false;

  constructor(base = "", fetchFn?: FetchLike, now?: () => number) {
    this.base = base;
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
    this.now = now ?? (() => Date.now());
  }

  async healthz(): Promise<boolean> {
    try {
      const res = await this.fetchFn(this.base + "/healthz");
      return res.ok;
    } catch {
      return false;
    }
  }

  // Solve one scenario. Only the newest in-flight call settles with a
  // design; any older call still pending resolves to STALE instead.
  async optimize(spec: ScenarioSpec): Promise<OptimalDesign | typeof STALE> {
    const token = ++this.optimizeToken;
    this.optimizeAbort?.abort();
    const abort = new AbortController();
    this.optimizeAbort = abort;

    let res: Response;
    try {
      res = await this.fetchFn(this.base + "/api/v1/optimize", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(spec),
        signal: abort.signal,
      });
    } catch (err) {
      if (token !== this.optimizeToken) return STALE;
      throw err;
    }
    if (token !== this.optimizeToken) return STALE;
    if (!res.ok) throw await parseError(res);
    return (await res.json()) as OptimalDesign;
  }

  async score(house: HouseInput): Promise<CompactnessReport> {
    const res = await this.fetchFn(this.base + "/api/v1/score", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(house),
    });
    if (!res.ok) throw await parseError(res);
    return (await res.json()) as CompactnessReport;
  }

  // Fetch the surface matrix for (volume, alpha). Responses are cached
  // by the full request key; a slow fetch drops later requests to the
  // degraded grid size.
  async contour(
    volume: number,
    alphaDeg: number,
    grid?: ContourWindow,
  ): Promise<ContourResponse> {
    const size = grid ?? (this.degraded ? DEGRADED_GRID : DEFAULT_GRID);
    const query =
      `volume=${volume}&alpha_deg=${alphaDeg}&nr=${size.nr}&nk=${size.nk}`;
    const cached = this.contourCache.get(query);
    if (cached) return cached;

    const started = this.now();
    const res = await this.fetchFn(this.base + "/api/v1/contour?" + query);
    if (!res.ok) throw await parseError(res);
    const data = (await res.json()) as ContourResponse;
    if (this.now() - started > SLOW_CONTOUR_MS) this.degraded = true;
    this.contourCache.set(query, data);
    return data;
  }
}

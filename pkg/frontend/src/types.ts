// Wire types for the hiproof HTTP API. Angles are degrees on the wire
// and throughout the UI.

export type Scenario =
  | "fixed-volume"
  | "fixed-r"
  | "fixed-k"
  | "fixed-floor"
  | "height-range";

export const SCENARIOS: Scenario[] = [
  "fixed-volume",
  "fixed-r",
  "fixed-k",
  "fixed-floor",
  "height-range",
];

// Parameter fields each scenario sends, in form display order.
export const PARAM_FIELDS: Record<Scenario, string[]> = {
  "fixed-volume": ["volume", "alpha_deg"],
  "fixed-r": ["volume", "alpha_deg", "r"],
  "fixed-k": ["volume", "alpha_deg", "k"],
  "fixed-floor": ["floor_area", "height", "alpha_deg"],
  "height-range": ["volume", "alpha_deg", "hmin", "hmax"],
};

export interface ScenarioSpec {
  scenario: Scenario;
  params: Record<string, number>;
}

export interface KktInfo {
  h_crit: number;
  active: "lower" | "interior" | "upper";
  mu1: number;
  mu2: number;
}

export interface OptimalDesign {
  w_min: number;
  l_min: number;
  h_min: number;
  s_min: number;
  r_min: number;
  k_min: number;
  v: number;
  kkt?: KktInfo;
}

export interface CompactnessReport {
  surface: number;
  min_surface: number;
  ratio: number;
  surplus: number;
}

export interface ContourResponse {
  r_axis: number[];
  k_axis: number[];
  // k-major: surface[j][i] belongs to (r_axis[i], k_axis[j])
  surface: number[][];
  min: { r: number; k: number; s: number };
}

export interface ApiErrorBody {
  code: string;
  message: string;
  field: string | null;
}

export interface HouseInput {
  width: number;
  length: number;
  height: number;
  alpha_deg: number;
}

// One saved analysis result; `result` is the unmodified service response.
export interface DesignSnapshot {
  label: string;
  spec: ScenarioSpec;
  result: OptimalDesign;
  score?: CompactnessReport;
  created_at: string;
}

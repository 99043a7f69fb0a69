// Inline form validation mirroring the service's rules: positive finite
// quantities, roof pitch strictly inside (0, 90) degrees, hmin < hmax.
// The server remains the authority; this only catches what it would
// reject anyway, before a request is made.

import { PARAM_FIELDS, Scenario, ScenarioSpec } from "./types.js";

export const FIELD_LABELS: Record<string, string> = {
  volume: "volume (m³)",
  alpha_deg: "roof pitch (°)",
  r: "footprint ratio L/W",
  k: "slenderness H/W",
  floor_area: "floor area (m²)",
  height: "wall height (m)",
  hmin: "min wall height (m)",
  hmax: "max wall height (m)",
  width: "width (m)",
  length: "length (m)",
};

// Empty string means the field is valid.
export function fieldError(field: string, raw: string): string {
  if (raw.trim() === "") return "required";
  const value = Number(raw);
  if (!Number.isFinite(value)) return "must be a number";
  if (field === "alpha_deg") {
    if (value <= 0 || value >= 90) return "pitch must be strictly between 0 and 90";
    return "";
  }
  if (value <= 0) return "must be positive";
  return "";
}

export interface ValidationResult {
  errors: Record<string, string>;
  spec?: ScenarioSpec;
}

// Validate a whole form; `raw` maps field name to the input's string value.
export function validateSpec(
  scenario: Scenario,
  raw: Record<string, string>,
): ValidationResult {
  const errors: Record<string, string> = {};
  const params: Record<string, number> = {};
  for (const field of PARAM_FIELDS[scenario]) {
    const err = fieldError(field, raw[field] ?? "");
    if (err) errors[field] = err;
    else params[field] = Number(raw[field]);
  }
  if (
    scenario === "height-range" &&
    !("hmin" in errors) &&
    !("hmax" in errors) &&
    params.hmin >= params.hmax
  ) {
    errors.hmax = "hmin < hmax required";
  }
  if (Object.keys(errors).length > 0) return { errors };
  return { errors, spec: { scenario, params } };
}

// Same rules for the score form's four measurements.
export function validateHouse(raw: Record<string, string>): {
  errors: Record<string, string>;
  house?: { width: number; length: number; height: number; alpha_deg: number };
} {
  const errors: Record<string, string> = {};
  const values: Record<string, number> = {};
  for (const field of ["width", "length", "height", "alpha_deg"]) {
    const err = fieldError(field, raw[field] ?? "");
    if (err) errors[field] = err;
    else values[field] = Number(raw[field]);
  }
  if (Object.keys(errors).length > 0) return { errors };
  return {
    errors,
    house: {
      width: values.width,
      length: values.length,
      height: values.height,
      alpha_deg: values.alpha_deg,
    },
  };
}

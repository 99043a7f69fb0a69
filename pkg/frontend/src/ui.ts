// DOM assembly and wiring. The layout follows a two-panel flow: pick a
// scenario and constraints on the left, read the optimal design on the
// right, explore the surface landscape below, and compare saved
// snapshots at the bottom.

import { ApiClient, STALE, ServiceError } from "./api.js";
import { HeatmapView, PickedCell } from "./heatmap.js";
import { SnapshotStore, SortKey } from "./tray.js";
import {
  DesignSnapshot,
  OptimalDesign,
  PARAM_FIELDS,
  SCENARIOS,
  Scenario,
  ScenarioSpec,
} from "./types.js";
import { FIELD_LABELS, fieldError, validateHouse, validateSpec } from "./validate.js";

const fmt2 = (x: number): string => x.toFixed(2);

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

interface LastResult {
  spec: ScenarioSpec;
  design: OptimalDesign;
}

export interface App {
  heatmap: HeatmapView;
}

export function buildApp(
  root: HTMLElement,
  api: ApiClient,
  store: SnapshotStore,
): App {
  root.textContent = "";
  root.classList.add("app");

  // -- header ---------------------------------------------------------

  const header = el("header");
  header.append(el("h1", "", "hiproof design explorer"));
  const health = el("span", "health", "checking service…");
  header.append(health);
  root.append(header);
  void api.healthz().then((ok) => {
    health.textContent = ok ? "service online" : "service unreachable";
    health.classList.toggle("health-down", !ok);
  });

  // -- scenario form ----------------------------------------------------

  const formCard = el("section", "panel form-panel");
  formCard.append(el("h2", "", "Scenario"));
  const scenarioSelect = el("select");
  scenarioSelect.id = "scenario";
  for (const s of SCENARIOS) {
    const opt = el("option", "", s);
    opt.value = s;
    scenarioSelect.append(opt);
  }
  formCard.append(scenarioSelect);
  const paramsBox = el("div", "params");
  formCard.append(paramsBox);
  const solveBtn = el("button", "", "Solve");
  solveBtn.id = "solve";
  solveBtn.disabled = true;
  formCard.append(solveBtn);

  // raw input strings survive scenario switches, so volume and pitch
  // carry over when the heatmap swaps the form to fixed-r or fixed-k
  const rawValues: Record<string, string> = {};
  let scenario: Scenario = "fixed-volume";

  function renderParams(): void {
    paramsBox.textContent = "";
    for (const field of PARAM_FIELDS[scenario]) {
      const row = el("label", "field");
      row.append(el("span", "", FIELD_LABELS[field] ?? field));
      const input = el("input");
      input.name = field;
      input.type = "text";
      input.inputMode = "decimal";
      input.value = rawValues[field] ?? "";
      const msg = el("small", "field-error");
      input.addEventListener("input", () => {
        rawValues[field] = input.value;
        revalidate();
      });
      row.append(input, msg);
      paramsBox.append(row);
    }
    revalidate();
  }

  function revalidate(): ScenarioSpec | undefined {
    const result = validateSpec(scenario, rawValues);
    for (const row of paramsBox.querySelectorAll("label.field")) {
      const input = row.querySelector("input")!;
      const msg = row.querySelector("small")!;
      const touched = (rawValues[input.name] ?? "") !== "";
      const err = result.errors[input.name] ?? "";
      msg.textContent = touched || err !== "required" ? err : "";
      row.classList.toggle("invalid", msg.textContent !== "");
    }
    solveBtn.disabled = result.spec === undefined;
    return result.spec;
  }

  scenarioSelect.addEventListener("change", () => {
    scenario = scenarioSelect.value as Scenario;
    renderParams();
  });

  // -- results panel ----------------------------------------------------

  const results = el("section", "panel results-panel");
  results.append(el("h2", "", "Optimal design"));

  const banner = el("div", "banner");
  banner.hidden = true;
  const bannerText = el("span");
  const bannerClose = el("button", "banner-close", "×");
  bannerClose.addEventListener("click", () => {
    banner.hidden = true;
  });
  banner.append(bannerText, bannerClose);
  results.append(banner);

  const cards = el("div", "cards");
  const cardValues: Record<string, HTMLElement> = {};
  for (const [key, label] of [
    ["w_min", "W_min (m)"],
    ["l_min", "L_min (m)"],
    ["h_min", "H_min (m)"],
    ["s_min", "S_min (m²)"],
  ] as const) {
    const card = el("div", "card");
    const value = el("div", "card-value", "–");
    value.dataset.card = key;
    card.append(value, el("div", "card-label", label));
    cards.append(card);
    cardValues[key] = value;
  }
  results.append(cards);

  const badge = el("div", "kkt-badge");
  badge.hidden = true;
  results.append(badge);

  const saveRow = el("div", "save-row");
  const labelInput = el("input", "snap-label-input");
  labelInput.placeholder = "snapshot label";
  const saveBtn = el("button", "", "Save to tray");
  saveBtn.id = "save";
  saveBtn.disabled = true;
  saveRow.append(labelInput, saveBtn);
  results.append(saveRow);

  let lastResult: LastResult | null = null;

  function showBanner(message: string): void {
    bannerText.textContent = message;
    banner.hidden = false;
  }

  function renderResult(design: OptimalDesign): void {
    for (const key of ["w_min", "l_min", "h_min", "s_min"] as const) {
      cardValues[key].textContent = fmt2(design[key]);
    }
    if (design.kkt) {
      badge.hidden = false;
      badge.textContent =
        design.kkt.active === "interior"
          ? "interior optimum"
          : `${design.kkt.active} bound active`;
      badge.dataset.active = design.kkt.active;
    } else {
      badge.hidden = true;
    }
  }

  solveBtn.addEventListener("click", () => {
    const spec = revalidate();
    if (!spec) return;
    banner.hidden = true;
    void api
      .optimize(spec)
      .then((design) => {
        if (design === STALE) return;
        lastResult = { spec, design };
        saveBtn.disabled = false;
        renderResult(design);
        refreshContour(design.v, spec.params.alpha_deg);
      })
      .catch((err: unknown) => {
        showBanner(
          err instanceof ServiceError
            ? `${err.body.code}: ${err.body.message}` +
              (err.body.field ? ` (${err.body.field})` : "")
            : "service request failed",
        );
      });
  });

  // -- score form -------------------------------------------------------

  const scoreCard = el("section", "panel score-panel");
  scoreCard.append(el("h2", "", "Rate an existing house"));
  const scoreValues: Record<string, string> = {};
  const scoreBox = el("div", "params");
  for (const field of ["width", "length", "height", "alpha_deg"]) {
    const row = el("label", "field");
    row.append(el("span", "", FIELD_LABELS[field] ?? field));
    const input = el("input");
    input.name = field;
    input.type = "text";
    input.inputMode = "decimal";
    const msg = el("small", "field-error");
    input.addEventListener("input", () => {
      scoreValues[field] = input.value;
      const err = fieldError(field, input.value);
      msg.textContent = err;
      scoreBtn.disabled = !validateHouse(scoreValues).house;
    });
    row.append(input, msg);
    scoreBox.append(row);
  }
  scoreCard.append(scoreBox);
  const scoreBtn = el("button", "", "Score");
  scoreBtn.id = "score";
  scoreBtn.disabled = true;
  scoreCard.append(scoreBtn);

  const gauge = el("div", "gauge");
  gauge.hidden = true;
  const gaugeValue = el("div", "gauge-value");
  const gaugeNote = el("div", "gauge-note");
  gauge.append(gaugeValue, gaugeNote);
  scoreCard.append(gauge);

  scoreBtn.addEventListener("click", () => {
    const { house } = validateHouse(scoreValues);
    if (!house) return;
    void api
      .score(house)
      .then((report) => {
        gauge.hidden = false;
        gauge.classList.remove("band-green", "band-amber", "band-red");
        const band =
          report.ratio <= 1.02 ? "band-green" : report.ratio <= 1.1 ? "band-amber" : "band-red";
        gauge.classList.add(band);
        gaugeValue.textContent = fmt2(report.ratio);
        gaugeNote.textContent =
          `S ${fmt2(report.surface)} m², optimum ${fmt2(report.min_surface)} m²,` +
          ` surplus ${fmt2(report.surplus)} m²`;
      })
      .catch((err: unknown) => {
        showBanner(err instanceof ServiceError ? err.body.message : "scoring failed");
      });
  });

  // -- contour ----------------------------------------------------------

  const contourCard = el("section", "panel contour-panel");
  contourCard.append(el("h2", "", "Surface landscape"));
  const controls = el("div", "contour-controls");
  controls.append(el("span", "", "click fills:"));
  const fillChoices: HTMLInputElement[] = [];
  for (const mode of ["r", "k"]) {
    const label = el("label", "fill-choice");
    const radio = el("input");
    radio.type = "radio";
    radio.name = "fill-mode";
    radio.value = mode;
    radio.checked = mode === "r";
    fillChoices.push(radio);
    label.append(radio, document.createTextNode(mode));
    controls.append(label);
  }
  contourCard.append(controls);
  const contourStatus = el("div", "contour-status");
  contourStatus.hidden = true;
  contourCard.append(contourStatus);
  const heatmapBox = el("div");
  contourCard.append(heatmapBox);
  const heatmap = new HeatmapView(heatmapBox);

  function refreshContour(volume: number, alphaDeg: number): void {
    contourStatus.hidden = true;
    void api
      .contour(volume, alphaDeg)
      .then((data) => heatmap.render(data))
      .catch((err: unknown) => {
        contourStatus.hidden = false;
        contourStatus.textContent =
          "contour unavailable" +
          (err instanceof ServiceError ? `: ${err.body.message}` : "");
      });
  }

  heatmap.onPick = (cell: PickedCell) => {
    const mode = fillChoices.find((radio) => radio.checked)?.value ?? "r";
    scenario = mode === "r" ? "fixed-r" : "fixed-k";
    scenarioSelect.value = scenario;
    rawValues[mode] = String(mode === "r" ? cell.r : cell.k);
    renderParams();
  };

  // -- comparison tray ---------------------------------------------------

  const trayCard = el("section", "panel tray-panel");
  trayCard.append(el("h2", "", "Comparison tray"));
  const quotaNote = el("div", "quota-note", "browser storage is full; snapshots are not being saved");
  quotaNote.hidden = true;
  trayCard.append(quotaNote);
  const table = el("table", "tray");
  const thead = el("thead");
  const headRow = el("tr");
  const columns: Array<[string, SortKey | null]> = [
    ["label", null],
    ["scenario", null],
    ["W", "w_min"],
    ["L", "l_min"],
    ["H", "h_min"],
    ["S_min", "s_min"],
    ["ratio", "ratio"],
    ["saved", null],
    ["", null],
  ];
  const sortState: { key: SortKey | null; descending: boolean } = {
    key: null,
    descending: false,
  };
  for (const [title, key] of columns) {
    const th = el("th", "", title);
    if (key) {
      th.classList.add("sortable");
      th.dataset.key = key;
      th.addEventListener("click", () => {
        sortState.descending = sortState.key === key ? !sortState.descending : false;
        sortState.key = key;
        store.sortBy(key, sortState.descending);
        renderTray();
      });
    }
    headRow.append(th);
  }
  thead.append(headRow);
  const tbody = el("tbody");
  table.append(thead, tbody);
  trayCard.append(table);

  function renderTray(): void {
    tbody.textContent = "";
    const snapshots = store.all();
    quotaNote.hidden = !store.quotaWarning;
    if (snapshots.length === 0) {
      const row = el("tr", "tray-empty");
      const cell = el("td", "", "nothing saved yet; solve a scenario and press Save to compare designs");
      cell.colSpan = columns.length;
      row.append(cell);
      tbody.append(row);
      return;
    }
    snapshots.forEach((snap, index) => {
      const row = el("tr", "tray-row");
      const labelCell = el("td", "snap-label");
      const labelSpan = el("span", "", snap.label);
      labelCell.append(labelSpan);
      row.append(labelCell);
      row.append(el("td", "", snap.spec.scenario));
      row.append(el("td", "snap-w", fmt2(snap.result.w_min)));
      row.append(el("td", "snap-l", fmt2(snap.result.l_min)));
      row.append(el("td", "snap-h", fmt2(snap.result.h_min)));
      row.append(el("td", "snap-smin", fmt2(snap.result.s_min)));
      row.append(el("td", "snap-ratio", snap.score ? fmt2(snap.score.ratio) : "–"));
      row.append(el("td", "", snap.created_at.slice(0, 19).replace("T", " ")));
      const actions = el("td", "snap-actions");
      const renameBtn = el("button", "rename", "rename");
      renameBtn.addEventListener("click", () => {
        const input = el("input", "rename-input");
        input.value = snap.label;
        const commit = () => {
          store.rename(index, input.value || snap.label);
          renderTray();
        };
        input.addEventListener("keydown", (e) => {
          if (e.key === "Enter") commit();
        });
        input.addEventListener("blur", commit);
        labelCell.textContent = "";
        labelCell.append(input);
        input.focus();
      });
      const deleteBtn = el("button", "delete", "delete");
      deleteBtn.addEventListener("click", () => {
        store.remove(index);
        renderTray();
      });
      actions.append(renameBtn, deleteBtn);
      row.append(actions);
      tbody.append(row);
    });
  }

  saveBtn.addEventListener("click", () => {
    if (!lastResult) return;
    const snapshot: DesignSnapshot = {
      label: labelInput.value.trim() || lastResult.spec.scenario,
      spec: lastResult.spec,
      result: lastResult.design,
      created_at: new Date().toISOString(),
    };
    store.add(snapshot);
    labelInput.value = "";
    renderTray();
  });

  root.append(formCard, results, scoreCard, contourCard, trayCard);
  renderParams();
  renderTray();

  return { heatmap };
}

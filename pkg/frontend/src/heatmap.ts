// Canvas heatmap of external surface over the (r, k) shape plane.
// Every number shown (tooltip, marker label) is read back from the
// fetched matrix; nothing is recomputed client-side.

import { ContourResponse } from "./types.js";

export interface PickedCell {
  i: number;
  j: number;
  r: number;
  k: number;
  s: number;
}

function nearestIndex(axis: number[], target: number): number {
  let best = 0;
  for (let i = 1; i < axis.length; i++) {
    if (Math.abs(axis[i] - target) < Math.abs(axis[best] - target)) best = i;
  }
  return best;
}

export class HeatmapView {
  readonly root: HTMLElement;
  private canvas: HTMLCanvasElement;
  private marker: HTMLElement;
  private tooltip: HTMLElement;
  private data: ContourResponse | null = null;
  onPick: ((cell: PickedCell) => void) | null = null;

  constructor(container: HTMLElement) {
    this.root = container;
    this.root.classList.add("heatmap");
    this.canvas = document.createElement("canvas");
    this.canvas.className = "heatmap-canvas";
    this.marker = document.createElement("div");
    this.marker.className = "heatmap-marker";
    this.marker.hidden = true;
    this.tooltip = document.createElement("div");
    this.tooltip.className = "heatmap-tooltip";
    this.tooltip.hidden = true;
    this.root.append(this.canvas, this.marker, this.tooltip);

    this.canvas.addEventListener("mousemove", (e) => this.handleMove(e));
    this.canvas.addEventListener("mouseleave", () => {
      this.tooltip.hidden = true;
    });
    this.canvas.addEventListener("click", (e) => {
      const cell = this.cellFromEvent(e);
      if (cell && this.onPick) this.onPick(cell);
    });
  }

  render(data: ContourResponse): void {
    this.data = data;
    const nr = data.r_axis.length;
    const nk = data.k_axis.length;
    // one device pixel per cell; CSS scales the canvas up
    this.canvas.width = nr;
    this.canvas.height = nk;
    this.paint(data, nr, nk);

    const i = nearestIndex(data.r_axis, data.min.r);
    const j = nearestIndex(data.k_axis, data.min.k);
    this.marker.hidden = false;
    this.marker.style.left = `${((i + 0.5) / nr) * 100}%`;
    this.marker.style.top = `${((nk - 1 - j + 0.5) / nk) * 100}%`;
    this.marker.dataset.r = String(data.min.r);
    this.marker.dataset.k = String(data.min.k);
    this.marker.textContent = `≈${data.min.s.toFixed(1)}`;
  }

  // Painting is cosmetic; environments without a 2d context (tests)
  // still get marker, tooltip and click behavior.
  private paint(data: ContourResponse, nr: number, nk: number): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    let lo = Infinity;
    let hi = -Infinity;
    for (const row of data.surface) {
      for (const s of row) {
        if (s < lo) lo = s;
        if (s > hi) hi = s;
      }
    }
    const span = hi > lo ? hi - lo : 1;
    for (let j = 0; j < nk; j++) {
      for (let i = 0; i < nr; i++) {
        const t = (data.surface[j][i] - lo) / span;
        ctx.fillStyle = `hsl(${240 - 240 * t}, 72%, ${60 - 25 * t}%)`;
        // row 0 of the matrix is the lowest k, drawn at the bottom
        ctx.fillRect(i, nk - 1 - j, 1, 1);
      }
    }
  }

  // Map a fraction of the drawing area (0..1 from top-left) to a cell.
  pickCell(fx: number, fy: number): PickedCell | null {
    if (!this.data) return null;
    const nr = this.data.r_axis.length;
    const nk = this.data.k_axis.length;
    const i = Math.min(nr - 1, Math.max(0, Math.floor(fx * nr)));
    const jTop = Math.min(nk - 1, Math.max(0, Math.floor(fy * nk)));
    const j = nk - 1 - jTop;
    return {
      i,
      j,
      r: this.data.r_axis[i],
      k: this.data.k_axis[j],
      s: this.data.surface[j][i],
    };
  }

  private cellFromEvent(e: MouseEvent): PickedCell | null {
    const rect = this.canvas.getBoundingClientRect();
    if (rect.width <= 0 || rect.height <= 0) return null;
    return this.pickCell(
      (e.clientX - rect.left) / rect.width,
      (e.clientY - rect.top) / rect.height,
    );
  }

  private handleMove(e: MouseEvent): void {
    const cell = this.cellFromEvent(e);
    if (!cell) return;
    this.tooltip.hidden = false;
    this.tooltip.style.left = `${e.clientX - this.root.getBoundingClientRect().left + 12}px`;
    this.tooltip.style.top = `${e.clientY - this.root.getBoundingClientRect().top + 12}px`;
    this.tooltip.textContent =
      `r ${cell.r.toFixed(3)}  k ${cell.k.toFixed(3)}  S ${cell.s.toFixed(2)} m²`;
    this.tooltip.dataset.s = String(cell.s);
  }
}

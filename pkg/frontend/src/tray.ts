// Comparison tray state: saved design snapshots, persisted in browser
// storage only. The service never sees these.

import { DesignSnapshot } from "./types.js";

export const STORAGE_KEY = "hiproof.snapshots";

export type SortKey = "s_min" | "ratio" | "w_min" | "l_min" | "h_min" | "created";

export class SnapshotStore {
  private snapshots: DesignSnapshot[] = [];
  private storage: Storage | null;
  // Set when the last persist failed (storage full or unavailable).
  quotaWarning = false;

  constructor(storage?: Storage | null) {
    this.storage = storage === undefined ? defaultStorage() : storage;
    this.load();
  }

  private load(): void {
    if (!this.storage) return;
    try {
      const raw = this.storage.getItem(STORAGE_KEY);
      if (raw) this.snapshots = JSON.parse(raw) as DesignSnapshot[];
    } catch {
      this.snapshots = [];
    }
  }

  private persist(): void {
    if (!this.storage) return;
    try {
      this.storage.setItem(STORAGE_KEY, JSON.stringify(this.snapshots));
      this.quotaWarning = false;
    } catch {
      this.quotaWarning = true;
    }
  }

  all(): readonly DesignSnapshot[] {
    return this.snapshots;
  }

  add(snapshot: DesignSnapshot): void {
    this.snapshots.push(snapshot);
    this.persist();
  }

  remove(index: number): void {
    this.snapshots.splice(index, 1);
    this.persist();
  }

  rename(index: number, label: string): void {
    const snap = this.snapshots[index];
    if (snap) {
      snap.label = label;
      this.persist();
    }
  }

  // Stable sort so equal keys keep their insertion order.
  sortBy(key: SortKey, descending = false): void {
    const dir = descending ? -1 : 1;
    this.snapshots = this.snapshots
      .map((snap, i) => ({ snap, i }))
      .sort((a, b) => {
        const d = value(a.snap, key) - value(b.snap, key);
        return d !== 0 ? dir * d : a.i - b.i;
      })
      .map((entry) => entry.snap);
    this.persist();
  }
}

function value(snap: DesignSnapshot, key: SortKey): number {
  if (key === "created") return Date.parse(snap.created_at);
  if (key === "ratio") return snap.score?.ratio ?? Number.POSITIVE_INFINITY;
  return snap.result[key];
}

function defaultStorage(): Storage | null {
  try {
    return globalThis.localStorage ?? null;
  } catch {
    return null;
  }
}

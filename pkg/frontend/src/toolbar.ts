/** Toolbar: dataset selector, row/column ordering controls, clustering
 * parameters, and the diverging color legend. Every change issues a new view
 * request; nothing is reordered locally.
 */

import type { CensusViewRequest, DatasetManifest } from "./api";
import { diverging, css } from "./color";

export interface ToolbarCallbacks {
  onDataset(datasetId: string): void;
  onCensusRequest(req: CensusViewRequest): void;
  onMotifSelect(label: string | null): void;
}

const ROW_STATS = ["none", "mean", "min", "max", "variance", "std", "median"] as const;

const COLUMN_CHOICES: [string, string][] = [
  ["byClusterThenTime", "cluster, then time"],
  ["byTime", "time"],
  ["edgeCount", "edge count"],
  ["avgClustering", "avg clustering"],
  ["nodeCount", "node count"],
];

export class Toolbar {
  readonly root: HTMLElement;
  private datasetSelect: HTMLSelectElement;
  private rowSelect: HTMLSelectElement;
  private colSelect: HTMLSelectElement;
  private epsInput: HTMLInputElement;
  private minSizeInput: HTMLInputElement;
  private motifSelect: HTMLSelectElement;

  constructor(parent: HTMLElement, private callbacks: ToolbarCallbacks) {
    this.root = document.createElement("header");
    this.root.className = "toolbar";

    this.datasetSelect = this.addSelect("dataset", []);
    this.datasetSelect.addEventListener("change", () => {
      callbacks.onDataset(this.datasetSelect.value);
    });

    this.colSelect = this.addSelect(
      "columns",
      COLUMN_CHOICES.map(([v, t]) => [v, t]),
    );
    this.rowSelect = this.addSelect(
      "rows",
      ROW_STATS.map((s) => [s, s]),
    );
    this.epsInput = this.addNumber("epsTime", 10, 0);
    this.minSizeInput = this.addNumber("minClusterSize", 5, 2);
    this.motifSelect = this.addSelect("highlight motif", [["", "none"]]);
    this.motifSelect.addEventListener("change", () => {
      callbacks.onMotifSelect(this.motifSelect.value || null);
    });

    for (const el of [this.colSelect, this.rowSelect, this.epsInput, this.minSizeInput]) {
      el.addEventListener("change", () => this.emitRequest());
    }

    this.root.appendChild(this.legend());
    parent.appendChild(this.root);
  }

  private addSelect(label: string, options: [string, string][]): HTMLSelectElement {
    const wrap = document.createElement("label");
    wrap.textContent = label + " ";
    const select = document.createElement("select");
    for (const [value, text] of options) {
      const opt = document.createElement("option");
      opt.value = value;
      opt.textContent = text;
      select.appendChild(opt);
    }
    wrap.appendChild(select);
    this.root.appendChild(wrap);
    return select;
  }

  private addNumber(label: string, value: number, min: number): HTMLInputElement {
    const wrap = document.createElement("label");
    wrap.textContent = label + " ";
    const input = document.createElement("input");
    input.type = "number";
    input.value = String(value);
    input.min = String(min);
    input.step = "1";
    wrap.appendChild(input);
    this.root.appendChild(wrap);
    return input;
  }

  /** Diverging legend: a small strip of swatches from -1 to +1. */
  private legend(): HTMLElement {
    const wrap = document.createElement("div");
    wrap.className = "legend";
    const lo = document.createElement("span");
    lo.textContent = "-1";
    wrap.appendChild(lo);
    for (let i = 0; i <= 16; i++) {
      const swatch = document.createElement("span");
      swatch.className = "swatch";
      swatch.style.backgroundColor = css(diverging(-1 + i / 8));
      wrap.appendChild(swatch);
    }
    const hi = document.createElement("span");
    hi.textContent = "+1";
    wrap.appendChild(hi);
    return wrap;
  }

  setDatasets(manifests: DatasetManifest[], selected: string | null): void {
    this.datasetSelect.textContent = "";
    for (const m of manifests) {
      const opt = document.createElement("option");
      opt.value = m.datasetId;
      opt.textContent = m.datasetId;
      this.datasetSelect.appendChild(opt);
    }
    if (selected) this.datasetSelect.value = selected;
  }

  setMotifs(labels: string[], selected: string | null): void {
    this.motifSelect.textContent = "";
    const none = document.createElement("option");
    none.value = "";
    none.textContent = "none";
    this.motifSelect.appendChild(none);
    for (const label of labels) {
      const opt = document.createElement("option");
      opt.value = label;
      opt.textContent = label;
      this.motifSelect.appendChild(opt);
    }
    this.motifSelect.value = selected ?? "";
  }

  /** Reflect restored state in the controls. */
  setRequest(req: CensusViewRequest): void {
    if (req.strategy === "byNetworkMetric") {
      this.colSelect.value = req.metric ?? "edgeCount";
    } else {
      this.colSelect.value = req.strategy;
    }
    this.rowSelect.value = req.statistic ?? "none";
    this.epsInput.value = String(req.epsTime ?? 10);
    this.minSizeInput.value = String(req.minClusterSize ?? 5);
  }

  private emitRequest(): void {
    const col = this.colSelect.value;
    const statistic = this.rowSelect.value === "none"
      ? null
      : (this.rowSelect.value as CensusViewRequest["statistic"]);
    const req: CensusViewRequest =
      col === "byTime" || col === "byClusterThenTime"
        ? {
            strategy: col,
            statistic,
            epsTime: Number(this.epsInput.value),
            minClusterSize: Number(this.minSizeInput.value),
          }
        : {
            strategy: "byNetworkMetric",
            metric: col as "edgeCount" | "avgClustering" | "nodeCount",
            statistic,
          };
    this.callbacks.onCensusRequest(req);
  }
}

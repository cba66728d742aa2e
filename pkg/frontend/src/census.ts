/** Network-level census view: the 13 x T significance-profile matrix as a
 * pixel grid with diverging colors, cluster gaps, and collapsible clusters.
 *
 * Clicking a column opens that snapshot in the node-level strip and in the
 * network view; clicking a collapsed cluster's placeholder unfolds it;
 * clicking a visible column of a foldable cluster while holding Alt folds it.
 * Mouseover shows the motif label and the exact profile value.
 */

import type { CensusPayload, ViewStatePayload } from "./api";
import { css } from "./color";
import { CELL, censusRenderList, COLLAPSE_LIMIT, type MatrixRenderList } from "./renderlist";
import type { Painter, PainterFactory } from "./painter";
import { Tooltip } from "./tooltip";

export interface CensusCallbacks {
  onColumnClick(snapshot: number): void;
  onUnfold(clusterId: number): void;
  onFold(clusterId: number): void;
  onCellBrush(cells: [number, number][]): void;
  onMotifSelect(label: string | null): void;
}

export class CensusView {
  readonly root: HTMLElement;
  private canvas: HTMLCanvasElement;
  private painter: Painter;
  private tooltip: Tooltip;
  private list: MatrixRenderList | null = null;
  private payload: CensusPayload | null = null;

  constructor(
    parent: HTMLElement,
    private callbacks: CensusCallbacks,
    painterFactory: PainterFactory,
  ) {
    this.root = document.createElement("section");
    this.root.className = "census-view panel";
    const heading = document.createElement("h2");
    heading.textContent = "Census";
    this.root.appendChild(heading);
    this.canvas = document.createElement("canvas");
    this.canvas.className = "matrix-canvas";
    this.root.appendChild(this.canvas);
    this.tooltip = new Tooltip(this.root);
    this.painter = painterFactory(this.canvas);
    parent.appendChild(this.root);

    this.canvas.addEventListener("click", (ev) => this.onClick(ev));
    this.canvas.addEventListener("mousemove", (ev) => this.onMove(ev));
    this.canvas.addEventListener("mouseleave", () => this.tooltip.hide());
  }

  private brushedCells: [number, number][] = [];

  render(
    payload: CensusPayload,
    view: ViewStatePayload,
    collapsedClusters: number[],
    brushedCells: [number, number][],
  ): MatrixRenderList {
    this.payload = payload;
    this.brushedCells = brushedCells;
    const list = censusRenderList(payload, view, collapsedClusters, brushedCells);
    this.list = list;
    this.paint(list);
    return list;
  }

  private paint(list: MatrixRenderList): void {
    const p = this.painter;
    p.clear(list.width, list.height);
    for (const cell of list.cells) {
      p.rect(cell.x, cell.y, cell.size, cell.size, css(cell.color));
      if (cell.brushed) {
        p.strokeRect(cell.x, cell.y, cell.size, cell.size, "#ff8800");
      }
    }
    for (const box of list.placeholders) {
      p.hatchRect(box.x, box.y, box.width, box.height);
      p.text(box.x + box.width / 2, box.y + box.height + 10, box.label, "center");
    }
    for (const label of list.rowLabels) {
      p.text(label.x, label.y, label.text, "right");
    }
    for (const col of list.columns) {
      p.text(col.x + 1, list.height - 10, col.label, "left");
    }
  }

  private locate(ev: MouseEvent): { x: number; y: number } {
    const bounds = this.canvas.getBoundingClientRect();
    return { x: ev.clientX - bounds.left, y: ev.clientY - bounds.top };
  }

  private onClick(ev: MouseEvent): void {
    if (!this.list || !this.payload) return;
    const { x, y } = this.locate(ev);
    for (const box of this.list.placeholders) {
      if (x >= box.x && x < box.x + box.width && y >= box.y && y < box.y + box.height) {
        this.callbacks.onUnfold(box.clusterId);
        return;
      }
    }
    if (ev.shiftKey || ev.ctrlKey) {
      for (const cell of this.list.cells) {
        if (
          x >= cell.x &&
          x < cell.x + cell.size &&
          y >= cell.y &&
          y < cell.y + cell.size
        ) {
          if (ev.shiftKey) {
            // motif selection: fade non-participants in the network view
            this.callbacks.onMotifSelect(this.payload.motifs[cell.row]);
          } else {
            const key = `${cell.row}:${cell.col}`;
            const kept = this.brushedCells.filter(([r, c]) => `${r}:${c}` !== key);
            if (kept.length === this.brushedCells.length) {
              kept.push([cell.row, cell.col]);
            }
            this.callbacks.onCellBrush(kept);
          }
          return;
        }
      }
      return;
    }
    for (const col of this.list.columns) {
      if (x >= col.x && x < col.x + CELL) {
        if (ev.altKey && col.cluster !== null && col.cluster !== -1) {
          this.callbacks.onFold(col.cluster);
        } else {
          this.callbacks.onColumnClick(col.col);
        }
        return;
      }
    }
  }

  private onMove(ev: MouseEvent): void {
    if (!this.list || !this.payload) return;
    const { x, y } = this.locate(ev);
    for (const cell of this.list.cells) {
      if (
        x >= cell.x &&
        x < cell.x + cell.size &&
        y >= cell.y &&
        y < cell.y + cell.size
      ) {
        this.tooltip.show(ev.clientX, ev.clientY, [
          `${this.payload.motifs[cell.row]} @ t=${this.payload.times[cell.col]}`,
          `sp = ${cell.value.toFixed(6)}`,
        ]);
        return;
      }
    }
    this.tooltip.hide();
  }

  /** Cluster ids that are large enough to fold at all. */
  foldableClusters(view: ViewStatePayload): number[] {
    const labels = view.clusters?.labels ?? [];
    const sizes = new Map<number, number>();
    for (const c of labels) sizes.set(c, (sizes.get(c) ?? 0) + 1);
    return [...sizes.entries()]
      .filter(([c, n]) => c !== -1 && n > COLLAPSE_LIMIT)
      .map(([c]) => c);
  }
}

/** Node-level view: one snapshot's graphlet degree vectors as a grayscale
 * grid, one column per node. Drag across columns to brush nodes; brushed
 * nodes highlight in the network view. Several views sit side by side in a
 * scrollable strip, each with its own sort controls.
 */

import type { GdvPayload, ViewStatePayload } from "./api";
import { css } from "./color";
import { CELL, gdvRenderList, type MatrixRenderList } from "./renderlist";
import type { Painter, PainterFactory } from "./painter";
import { Tooltip } from "./tooltip";

export interface NodeViewCallbacks {
  onBrush(snapshot: number, nodeIds: string[]): void;
  onSortChange(
    snapshot: number,
    strategy: "byClusterThenTime" | "byNodeMetric",
    metric: "pagerank" | "degreeCentrality",
  ): void;
  onZoom(snapshot: number, k: number): void;
  onClose(snapshot: number): void;
}

export class NodeLevelView {
  readonly root: HTMLElement;
  private canvas: HTMLCanvasElement;
  private painter: Painter;
  private tooltip: Tooltip;
  private list: MatrixRenderList | null = null;
  private payload: GdvPayload | null = null;
  private dragStart: number | null = null;

  constructor(
    parent: HTMLElement,
    readonly snapshot: number,
    private callbacks: NodeViewCallbacks,
    painterFactory: PainterFactory,
  ) {
    this.root = document.createElement("section");
    this.root.className = "node-view panel";

    const bar = document.createElement("div");
    bar.className = "view-bar";
    const heading = document.createElement("h2");
    heading.textContent = `Snapshot ${snapshot}`;
    bar.appendChild(heading);

    const sort = document.createElement("select");
    sort.className = "gdv-sort";
    for (const [value, text] of [
      ["byClusterThenTime", "cluster"],
      ["pagerank", "pagerank"],
      ["degreeCentrality", "degree centrality"],
    ]) {
      const opt = document.createElement("option");
      opt.value = value;
      opt.textContent = text;
      sort.appendChild(opt);
    }
    sort.addEventListener("change", () => {
      if (sort.value === "byClusterThenTime") {
        callbacks.onSortChange(snapshot, "byClusterThenTime", "pagerank");
      } else {
        callbacks.onSortChange(
          snapshot,
          "byNodeMetric",
          sort.value as "pagerank" | "degreeCentrality",
        );
      }
    });
    bar.appendChild(sort);

    const close = document.createElement("button");
    close.textContent = "x";
    close.title = "close view";
    close.addEventListener("click", () => callbacks.onClose(snapshot));
    bar.appendChild(close);
    this.root.appendChild(bar);

    this.canvas = document.createElement("canvas");
    this.canvas.className = "matrix-canvas";
    this.root.appendChild(this.canvas);
    this.tooltip = new Tooltip(this.root);
    this.painter = painterFactory(this.canvas);
    parent.appendChild(this.root);

    this.canvas.addEventListener("mousedown", (ev) => {
      this.dragStart = this.locate(ev).x;
    });
    this.canvas.addEventListener("mouseup", (ev) => this.onBrushEnd(ev));
    this.canvas.addEventListener("mousemove", (ev) => this.onMove(ev));
    this.canvas.addEventListener("mouseleave", () => this.tooltip.hide());
    this.canvas.addEventListener(
      "wheel",
      (ev) => {
        ev.preventDefault();
        const factor = ev.deltaY < 0 ? 1.25 : 1 / 1.25;
        this.zoom = Math.max(0.5, Math.min(4, this.zoom * factor));
        callbacks.onZoom(snapshot, this.zoom);
      },
      { passive: false },
    );
  }

  private zoom = 1;

  /** Independent zoom per view: the transform scales the cell size. */
  render(
    payload: GdvPayload,
    view: ViewStatePayload,
    brushedNodes: string[],
    zoom: number = 1,
  ): MatrixRenderList {
    this.payload = payload;
    this.zoom = zoom;
    const list = gdvRenderList(payload, view, brushedNodes, CELL * zoom);
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

  /** Columns whose x-extent intersects [lo, hi]. */
  columnsInRange(lo: number, hi: number): string[] {
    if (!this.list || !this.payload) return [];
    const width = CELL * this.zoom;
    const ids: string[] = [];
    for (const col of this.list.columns) {
      if (col.x + width > lo && col.x <= hi) ids.push(this.payload.nodes[col.col]);
    }
    return ids;
  }

  private onBrushEnd(ev: MouseEvent): void {
    if (this.dragStart === null) return;
    const { x } = this.locate(ev);
    const lo = Math.min(this.dragStart, x);
    const hi = Math.max(this.dragStart, x);
    this.dragStart = null;
    this.callbacks.onBrush(this.snapshot, this.columnsInRange(lo, hi));
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
          `node ${this.payload.nodes[cell.col]}, orbit ${this.payload.orbits[cell.row]}`,
          `count = ${cell.value}`,
        ]);
        return;
      }
    }
    this.tooltip.hide();
  }
}

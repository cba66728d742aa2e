/** Network view: node-link diagram at server-computed layout positions.
 *
 * Positions come from one layout over the union of all snapshots, so nodes
 * stay put when the user steps through time. Pan/zoom is a client transform
 * on top and is preserved across snapshot switches. Communities, when the
 * server includes them, draw as convex hulls behind the nodes. Clicking a
 * node toggles it in the shared brush, so selections made here show up in
 * the node-level views too.
 */

import type { GraphPayload } from "./api";
import {
  networkRenderList,
  type NetworkHighlight,
  type NetworkRenderList,
} from "./renderlist";
import type { Painter, PainterFactory } from "./painter";
import type { Transform } from "./state";
import { Tooltip } from "./tooltip";

const COMMUNITY_COLORS = [
  "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
  "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
];

export interface NetworkCallbacks {
  onTransform(transform: Transform): void;
  onCommunityFocus(community: number | null): void;
  /** Click on a node (not a drag): toggle it in the shared brush. */
  onNodeToggle(id: string): void;
}

export class NetworkView {
  readonly root: HTMLElement;
  private canvas: HTMLCanvasElement;
  private painter: Painter;
  private tooltip: Tooltip;
  private list: NetworkRenderList | null = null;
  private transform: Transform = { k: 1, x: 0, y: 0 };
  private dragFrom: { x: number; y: number } | null = null;
  private dragged = false;

  readonly width = 640;
  readonly height = 480;

  constructor(
    parent: HTMLElement,
    private callbacks: NetworkCallbacks,
    painterFactory: PainterFactory,
  ) {
    this.root = document.createElement("section");
    this.root.className = "network-view panel";
    const heading = document.createElement("h2");
    heading.textContent = "Network";
    this.root.appendChild(heading);
    this.canvas = document.createElement("canvas");
    this.canvas.className = "network-canvas";
    this.root.appendChild(this.canvas);
    this.tooltip = new Tooltip(this.root);
    this.painter = painterFactory(this.canvas);
    parent.appendChild(this.root);

    this.canvas.addEventListener("wheel", (ev) => this.onWheel(ev), { passive: false });
    this.canvas.addEventListener("mousedown", (ev) => {
      this.dragFrom = { x: ev.clientX, y: ev.clientY };
      this.dragged = false;
    });
    this.canvas.addEventListener("mouseup", (ev) => {
      this.dragFrom = null;
      if (!this.dragged) {
        const node = this.hit(ev);
        if (node) this.callbacks.onNodeToggle(node.id);
      }
    });
    this.canvas.addEventListener("mousemove", (ev) => this.onMove(ev));
    this.canvas.addEventListener("mouseleave", () => {
      this.dragFrom = null;
      this.tooltip.hide();
    });
    this.canvas.addEventListener("dblclick", (ev) => this.onDblClick(ev));
  }

  render(
    graph: GraphPayload,
    highlight: NetworkHighlight,
    transform: Transform,
    communityFocus: number | null,
  ): NetworkRenderList {
    this.transform = transform;
    const list = networkRenderList(
      graph,
      highlight,
      transform,
      this.width,
      this.height,
      communityFocus,
    );
    this.list = list;
    this.paint(list);
    return list;
  }

  private paint(list: NetworkRenderList): void {
    const p = this.painter;
    p.clear(list.width, list.height);
    for (const hull of list.hulls) {
      const color = COMMUNITY_COLORS[hull.community % COMMUNITY_COLORS.length];
      p.polygon(hull.points, color + "55", hull.focused ? "#333333" : color);
    }
    for (const edge of list.edges) {
      p.line(edge.x1, edge.y1, edge.x2, edge.y2, edge.faded ? "#eeeeee" : "#bbbbbb", 1);
    }
    for (const node of list.nodes) {
      const fill = node.faded
        ? "#f0f0f0"
        : node.community !== null
          ? COMMUNITY_COLORS[node.community % COMMUNITY_COLORS.length]
          : "#5588bb";
      p.circle(node.x, node.y, node.r, fill, node.highlighted ? "#ff8800" : null);
    }
  }

  private onWheel(ev: WheelEvent): void {
    ev.preventDefault();
    const factor = ev.deltaY < 0 ? 1.15 : 1 / 1.15;
    const k = Math.max(0.2, Math.min(8, this.transform.k * factor));
    // keep the point under the cursor fixed while zooming
    const bounds = this.canvas.getBoundingClientRect();
    const px = ev.clientX - bounds.left;
    const py = ev.clientY - bounds.top;
    const x = px - ((px - this.transform.x) * k) / this.transform.k;
    const y = py - ((py - this.transform.y) * k) / this.transform.k;
    this.callbacks.onTransform({ k, x, y });
  }

  private onMove(ev: MouseEvent): void {
    if (this.dragFrom) {
      const dx = ev.clientX - this.dragFrom.x;
      const dy = ev.clientY - this.dragFrom.y;
      if (dx !== 0 || dy !== 0) this.dragged = true;
      this.dragFrom = { x: ev.clientX, y: ev.clientY };
      this.callbacks.onTransform({
        k: this.transform.k,
        x: this.transform.x + dx,
        y: this.transform.y + dy,
      });
      return;
    }
    const node = this.hit(ev);
    if (node) {
      this.tooltip.show(ev.clientX, ev.clientY, [
        `node ${node.id}`,
        `pagerank = ${node.pagerank.toFixed(4)}`,
        `degree centrality = ${node.degreeCentrality.toFixed(4)}`,
        ...(node.community !== null ? [`community ${node.community}`] : []),
      ]);
    } else {
      this.tooltip.hide();
    }
  }

  private onDblClick(ev: MouseEvent): void {
    const node = this.hit(ev);
    this.callbacks.onCommunityFocus(node?.community ?? null);
  }

  private hit(ev: MouseEvent) {
    if (!this.list) return null;
    const bounds = this.canvas.getBoundingClientRect();
    const x = ev.clientX - bounds.left;
    const y = ev.clientY - bounds.top;
    // topmost node wins
    for (let i = this.list.nodes.length - 1; i >= 0; i--) {
      const n = this.list.nodes[i];
      const dx = x - n.x;
      const dy = y - n.y;
      if (dx * dx + dy * dy <= n.r * n.r) return n;
    }
    return null;
  }
}

/** Pure view models for the three pixel/graph views.
 *
 * Components paint exactly what these functions return; tests assert on the
 * returned lists instead of on canvas pixels. All ordering comes from
 * server-computed view states: this layer only applies permutations and
 * display bookkeeping (cluster gaps, collapse previews, highlights).
 */

import type {
  CensusPayload,
  GdvPayload,
  GraphPayload,
  ViewStatePayload,
} from "./api";
import { diverging, grayscale, type Rgb } from "./color";
import type { Transform } from "./state";

export const CELL = 12; // base cell size, CSS pixels
export const GAP_CELLS = 2; // blank cells between clusters
export const PAD_LEFT = 72; // room for row labels
export const PAD_TOP = 12;
export const COLLAPSE_LIMIT = 6; // clusters up to this size never collapse
export const COLLAPSE_HEAD = 3; // visible members at each end when collapsed

export interface MatrixCell {
  x: number;
  y: number;
  size: number;
  row: number; // original row index
  col: number; // original column index
  value: number; // exact server value, shown in tooltips
  color: Rgb;
  brushed: boolean;
}

export interface PlaceholderBox {
  x: number;
  y: number;
  width: number;
  height: number;
  clusterId: number;
  hidden: number;
  label: string;
}

export interface ColumnSlot {
  x: number;
  col: number; // original column index
  label: string;
  cluster: number | null;
}

export interface TextLabel {
  x: number;
  y: number;
  text: string;
}

export interface MatrixRenderList {
  cells: MatrixCell[];
  placeholders: PlaceholderBox[];
  columns: ColumnSlot[];
  rowLabels: TextLabel[];
  width: number;
  height: number;
}

type Slot =
  | { kind: "column"; col: number; cluster: number | null }
  | { kind: "placeholder"; clusterId: number; hidden: number };

/** Expand a column permutation into display slots: gaps between clusters,
 * collapsed clusters reduced to their first and last members plus a counted
 * placeholder. Clusters with COLLAPSE_LIMIT or fewer members never collapse. */
function buildSlots(
  view: ViewStatePayload,
  collapsedClusters: number[],
): { slots: Slot[]; gapsAfter: Set<number> } {
  const labels = view.clusters?.labels ?? null;
  const collapsed = new Set(collapsedClusters);
  const slots: Slot[] = [];
  const gapsAfter = new Set<number>();

  if (labels === null) {
    for (const col of view.colPermutation) {
      slots.push({ kind: "column", col, cluster: null });
    }
    return { slots, gapsAfter };
  }

  const sizeOf = new Map<number, number>();
  for (const c of labels) sizeOf.set(c, (sizeOf.get(c) ?? 0) + 1);

  let prev: number | undefined;
  let withinCluster = 0;
  for (const col of view.colPermutation) {
    const cluster = labels[col];
    if (prev !== undefined && cluster !== prev && slots.length > 0) {
      gapsAfter.add(slots.length - 1);
      withinCluster = 0;
    }
    const size = sizeOf.get(cluster) ?? 0;
    const folded =
      cluster !== -1 && collapsed.has(cluster) && size > COLLAPSE_LIMIT;
    if (folded) {
      const tailStart = size - COLLAPSE_HEAD;
      if (withinCluster < COLLAPSE_HEAD || withinCluster >= tailStart) {
        slots.push({ kind: "column", col, cluster });
      }
      if (withinCluster === COLLAPSE_HEAD - 1) {
        slots.push({
          kind: "placeholder",
          clusterId: cluster,
          hidden: size - 2 * COLLAPSE_HEAD,
        });
      }
    } else {
      slots.push({ kind: "column", col, cluster });
    }
    prev = cluster;
    withinCluster += 1;
  }
  return { slots, gapsAfter };
}

function slotPositions(slots: Slot[], gapsAfter: Set<number>, cell: number): number[] {
  const xs: number[] = [];
  let x = PAD_LEFT;
  for (let i = 0; i < slots.length; i++) {
    xs.push(x);
    x += cell;
    if (gapsAfter.has(i)) x += GAP_CELLS * cell;
  }
  return xs;
}

function brushKey(row: number, col: number): string {
  return `${row}:${col}`;
}

/** Census view model: diverging colors over significance profiles. */
export function censusRenderList(
  payload: CensusPayload,
  view: ViewStatePayload,
  collapsedClusters: number[],
  brushedCells: [number, number][],
  cell: number = CELL,
): MatrixRenderList {
  const nRows = payload.motifs.length;
  const nCols = payload.times.length;
  const value = (r: number, c: number) => payload.values[r * nCols + c];
  const brushed = new Set(brushedCells.map(([r, c]) => brushKey(r, c)));

  const { slots, gapsAfter } = buildSlots(view, collapsedClusters);
  const xs = slotPositions(slots, gapsAfter, cell);

  const cells: MatrixCell[] = [];
  const placeholders: PlaceholderBox[] = [];
  const columns: ColumnSlot[] = [];
  for (let i = 0; i < slots.length; i++) {
    const slot = slots[i];
    if (slot.kind === "placeholder") {
      placeholders.push({
        x: xs[i],
        y: PAD_TOP,
        width: cell,
        height: nRows * cell,
        clusterId: slot.clusterId,
        hidden: slot.hidden,
        label: String(slot.hidden),
      });
      continue;
    }
    columns.push({
      x: xs[i],
      col: slot.col,
      label: String(payload.times[slot.col]),
      cluster: slot.cluster,
    });
    for (let dr = 0; dr < nRows; dr++) {
      const row = view.rowPermutation[dr];
      const v = value(row, slot.col);
      cells.push({
        x: xs[i],
        y: PAD_TOP + dr * cell,
        size: cell,
        row,
        col: slot.col,
        value: v,
        color: diverging(v),
        brushed: brushed.has(brushKey(row, slot.col)),
      });
    }
  }

  const rowLabels: TextLabel[] = view.rowPermutation.map((row, dr) => ({
    x: PAD_LEFT - 6,
    y: PAD_TOP + dr * cell + cell / 2,
    text: payload.motifs[row],
  }));

  const width = xs.length > 0 ? xs[xs.length - 1] + cell + 16 : PAD_LEFT + 16;
  return {
    cells,
    placeholders,
    columns,
    rowLabels,
    width,
    height: PAD_TOP + nRows * cell + 28,
  };
}

/** Node-level view model: grayscale over graphlet degree vectors, columns are
 * nodes. Values are scaled per orbit row for display; tooltips keep the raw
 * value. */
export function gdvRenderList(
  payload: GdvPayload,
  view: ViewStatePayload,
  brushedNodes: string[],
  cell: number = CELL,
): MatrixRenderList {
  const nRows = payload.orbits.length;
  const nCols = payload.nodes.length;
  const value = (r: number, c: number) => payload.values[r * nCols + c];
  const brushed = new Set(brushedNodes);

  const rowMax: number[] = [];
  for (let r = 0; r < nRows; r++) {
    let m = 0;
    for (let c = 0; c < nCols; c++) m = Math.max(m, value(r, c));
    rowMax.push(m);
  }

  const { slots, gapsAfter } = buildSlots(view, []);
  const xs = slotPositions(slots, gapsAfter, cell);

  const cells: MatrixCell[] = [];
  const columns: ColumnSlot[] = [];
  for (let i = 0; i < slots.length; i++) {
    const slot = slots[i];
    if (slot.kind === "placeholder") continue;
    const nodeId = payload.nodes[slot.col];
    columns.push({ x: xs[i], col: slot.col, label: nodeId, cluster: slot.cluster });
    for (let dr = 0; dr < nRows; dr++) {
      const row = view.rowPermutation[dr];
      const v = value(row, slot.col);
      const scaled = rowMax[row] > 0 ? v / rowMax[row] : 0;
      cells.push({
        x: xs[i],
        y: PAD_TOP + dr * cell,
        size: cell,
        row,
        col: slot.col,
        value: v,
        color: grayscale(scaled),
        brushed: brushed.has(nodeId),
      });
    }
  }

  const rowLabels: TextLabel[] = view.rowPermutation.map((row, dr) => ({
    x: PAD_LEFT - 6,
    y: PAD_TOP + dr * cell + cell / 2,
    text: `o${payload.orbits[row]}`,
  }));

  const width = xs.length > 0 ? xs[xs.length - 1] + cell + 16 : PAD_LEFT + 16;
  return {
    cells,
    placeholders: [],
    columns,
    rowLabels,
    width,
    height: PAD_TOP + nRows * cell + 28,
  };
}

export interface NetworkNode {
  id: string;
  x: number;
  y: number;
  r: number;
  community: number | null;
  highlighted: boolean;
  faded: boolean;
  pagerank: number;
  degreeCentrality: number;
}

export interface NetworkEdge {
  source: string;
  target: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  faded: boolean;
}

export interface CommunityHull {
  community: number;
  points: [number, number][];
  focused: boolean;
}

export interface NetworkRenderList {
  nodes: NetworkNode[];
  edges: NetworkEdge[];
  hulls: CommunityHull[];
  width: number;
  height: number;
}

/** Andrew's monotone chain; returns hull vertices counterclockwise. */
export function convexHull(points: [number, number][]): [number, number][] {
  if (points.length < 3) return points.slice();
  const pts = points.slice().sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  const cross = (o: number[], a: number[], b: number[]) =>
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  const lower: [number, number][] = [];
  for (const p of pts) {
    while (lower.length >= 2 && cross(lower[lower.length - 2], lower[lower.length - 1], p) <= 0) {
      lower.pop();
    }
    lower.push(p);
  }
  const upper: [number, number][] = [];
  for (const p of pts.slice().reverse()) {
    while (upper.length >= 2 && cross(upper[upper.length - 2], upper[upper.length - 1], p) <= 0) {
      upper.pop();
    }
    upper.push(p);
  }
  lower.pop();
  upper.pop();
  return lower.concat(upper);
}

export interface NetworkHighlight {
  /** Node ids to emphasize (from brushes in other views). */
  nodes: Set<string>;
  /** When set, nodes outside this set fade (motif-instance filtering). */
  motifParticipants: Set<string> | null;
}

/** Network view model: server layout positions fitted to the viewport, then
 * the user transform applied on top so pan/zoom survives snapshot switches. */
export function networkRenderList(
  graph: GraphPayload,
  highlight: NetworkHighlight,
  transform: Transform,
  width: number,
  height: number,
  communityFocus: number | null = null,
): NetworkRenderList {
  const placed = graph.nodes.filter((n) => graph.layout[n.id] !== undefined);
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const n of placed) {
    const [lx, ly] = graph.layout[n.id];
    minX = Math.min(minX, lx);
    maxX = Math.max(maxX, lx);
    minY = Math.min(minY, ly);
    maxY = Math.max(maxY, ly);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const margin = 24;
  const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);

  const project = (lx: number, ly: number): [number, number] => {
    const px = margin + (lx - minX) * scale;
    const py = margin + (ly - minY) * scale;
    return [px * transform.k + transform.x, py * transform.k + transform.y];
  };

  const pos = new Map<string, [number, number]>();
  for (const n of placed) {
    const [lx, ly] = graph.layout[n.id];
    pos.set(n.id, project(lx, ly));
  }

  const fadeFor = (id: string): boolean =>
    highlight.motifParticipants !== null && !highlight.motifParticipants.has(id);

  const nodes: NetworkNode[] = placed.map((n) => {
    const [x, y] = pos.get(n.id)!;
    return {
      id: n.id,
      x,
      y,
      r: (4 + 40 * n.pagerank) * transform.k,
      community: n.community ?? null,
      highlighted: highlight.nodes.has(n.id),
      faded: fadeFor(n.id),
      pagerank: n.pagerank,
      degreeCentrality: n.degreeCentrality,
    };
  });

  const edges: NetworkEdge[] = [];
  for (const [s, t] of graph.edges) {
    const a = pos.get(s);
    const b = pos.get(t);
    if (!a || !b) continue;
    edges.push({
      source: s,
      target: t,
      x1: a[0],
      y1: a[1],
      x2: b[0],
      y2: b[1],
      faded: fadeFor(s) || fadeFor(t),
    });
  }

  const hulls: CommunityHull[] = [];
  if (graph.communities) {
    const members = new Map<number, [number, number][]>();
    for (const n of placed) {
      if (n.community === undefined) continue;
      const list = members.get(n.community) ?? [];
      list.push(pos.get(n.id)!);
      members.set(n.community, list);
    }
    for (const [community, points] of [...members.entries()].sort((a, b) => a[0] - b[0])) {
      hulls.push({
        community,
        points: convexHull(points),
        focused: communityFocus === community,
      });
    }
  }

  return { nodes, edges, hulls, width, height };
}

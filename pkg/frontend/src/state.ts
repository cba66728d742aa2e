/** Serializable explorer state and its URL-fragment encoding.
 *
 * Everything a session shows is a function of this state plus server
 * responses: the state stores what the user asked for (dataset, view
 * requests, open views, brushes, transforms), never server-derived data.
 * Restoring a fragment replays the same requests and therefore reproduces
 * the same views.
 */

import type { CensusViewRequest, GdvViewRequest } from "./api";

export interface Transform {
  k: number; // zoom factor
  x: number; // pan offset, CSS pixels
  y: number;
}

export const IDENTITY_TRANSFORM: Transform = { k: 1, x: 0, y: 0 };

export interface NodeViewConfig {
  snapshot: number;
  maxSize: number; // 4 or 5
  request: GdvViewRequest;
  transform: Transform;
}

export interface BrushState {
  /** Census cells as [row, column] pairs in original (unpermuted) indices. */
  censusCells: [number, number][];
  /** Node ids brushed in node-level views; highlighted in the network view. */
  nodes: string[];
  /** Motif label whose instances are highlighted in the network view. */
  motif: string | null;
}

export interface ExplorerState {
  dataset: string | null;
  censusRequest: CensusViewRequest;
  /** Cluster ids the user folded up in the census view. */
  collapsedClusters: number[];
  nodeViews: NodeViewConfig[];
  network: { snapshot: number; communityFocus: number | null };
  brush: BrushState;
  censusTransform: Transform;
  networkTransform: Transform;
}

export const DEFAULT_CENSUS_REQUEST: CensusViewRequest = {
  strategy: "byClusterThenTime",
  statistic: null,
  epsTime: 10,
  minClusterSize: 5,
};

export function initialState(): ExplorerState {
  return {
    dataset: null,
    censusRequest: { ...DEFAULT_CENSUS_REQUEST },
    collapsedClusters: [],
    nodeViews: [],
    network: { snapshot: 0, communityFocus: null },
    brush: { censusCells: [], nodes: [], motif: null },
    censusTransform: { ...IDENTITY_TRANSFORM },
    networkTransform: { ...IDENTITY_TRANSFORM },
  };
}

export function encodeState(state: ExplorerState): string {
  return "#" + encodeURIComponent(JSON.stringify(state));
}

/** Inverse of encodeState; malformed fragments fall back to the initial
 * state rather than throwing, so stale links still load the app. */
export function decodeState(fragment: string): ExplorerState {
  const raw = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  if (!raw) return initialState();
  try {
    const obj = JSON.parse(decodeURIComponent(raw));
    return normalize(obj);
  } catch {
    return initialState();
  }
}

function asTransform(t: unknown): Transform {
  const o = (t ?? {}) as Partial<Transform>;
  return {
    k: typeof o.k === "number" && o.k > 0 ? o.k : 1,
    x: typeof o.x === "number" ? o.x : 0,
    y: typeof o.y === "number" ? o.y : 0,
  };
}

/** Coerce parsed JSON into a well-formed state, dropping unknown fields. */
function normalize(obj: Record<string, unknown>): ExplorerState {
  const base = initialState();
  const brush = (obj.brush ?? {}) as Partial<BrushState>;
  const network = (obj.network ?? {}) as { snapshot?: number; communityFocus?: number | null };
  const views = Array.isArray(obj.nodeViews) ? obj.nodeViews : [];
  return {
    dataset: typeof obj.dataset === "string" ? obj.dataset : base.dataset,
    censusRequest: {
      ...base.censusRequest,
      ...((obj.censusRequest ?? {}) as CensusViewRequest),
    },
    collapsedClusters: Array.isArray(obj.collapsedClusters)
      ? obj.collapsedClusters.filter((c): c is number => Number.isInteger(c))
      : [],
    nodeViews: views
      .filter((v): v is Record<string, unknown> => typeof v === "object" && v !== null)
      .map((v) => {
        const request = (v.request ?? {}) as Partial<GdvViewRequest>;
        return {
          snapshot: Number(v.snapshot) || 0,
          maxSize: v.maxSize === 5 ? 5 : 4,
          request: {
            ...request,
            strategy: request.strategy === "byNodeMetric" ? "byNodeMetric" : "byClusterThenTime",
          } as GdvViewRequest,
          transform: asTransform(v.transform),
        };
      }),
    network: {
      snapshot: Number.isInteger(network.snapshot) ? (network.snapshot as number) : 0,
      communityFocus: Number.isInteger(network.communityFocus)
        ? (network.communityFocus as number)
        : null,
    },
    brush: {
      censusCells: Array.isArray(brush.censusCells)
        ? brush.censusCells
            .filter((c): c is [number, number] => Array.isArray(c) && c.length === 2)
            .map((c) => [Number(c[0]), Number(c[1])] as [number, number])
        : [],
      nodes: Array.isArray(brush.nodes) ? brush.nodes.map(String) : [],
      motif: typeof brush.motif === "string" ? brush.motif : null,
    },
    censusTransform: asTransform(obj.censusTransform),
    networkTransform: asTransform(obj.networkTransform),
  };
}

/** Enforce state invariants against loaded data: views must point at real
 * snapshots and brushes at ids present in the current payloads. */
export function validateAgainstData(
  state: ExplorerState,
  snapshotCount: number,
  knownNodes: Set<string>,
  motifLabels: string[],
): ExplorerState {
  const inRange = (t: number) => t >= 0 && t < snapshotCount;
  return {
    ...state,
    nodeViews: state.nodeViews.filter((v) => inRange(v.snapshot)),
    network: {
      ...state.network,
      snapshot: inRange(state.network.snapshot) ? state.network.snapshot : 0,
    },
    brush: {
      censusCells: state.brush.censusCells.filter(
        ([r, c]) => r >= 0 && r < motifLabels.length && c >= 0 && c < snapshotCount,
      ),
      nodes: state.brush.nodes.filter((id) => knownNodes.has(id)),
      motif:
        state.brush.motif !== null && motifLabels.includes(state.brush.motif)
          ? state.brush.motif
          : null,
    },
  };
}

/** Explorer application: owns the state, talks to the API, and keeps the
 * four components (toolbar, census view, node-level strip, network view) in
 * sync.
 *
 * State changes funnel through apply(): update the state, cancel in-flight
 * requests, fetch whatever the new state needs, re-render every view, and
 * mirror the state into the URL fragment. Brushes link the views: columns
 * brushed in a node-level view highlight the same nodes in the network view,
 * and a selected motif fades non-participating network nodes.
 */

import {
  type ApiClient,
  type CensusPayload,
  type CensusViewRequest,
  type DatasetManifest,
  type GdvPayload,
  type GraphPayload,
  type ViewStatePayload,
} from "./api";
import { CensusView } from "./census";
import { NetworkView } from "./network";
import { NodeLevelView } from "./nodeview";
import type { PainterFactory } from "./painter";
import type { MatrixRenderList, NetworkRenderList } from "./renderlist";
import {
  decodeState,
  encodeState,
  initialState,
  validateAgainstData,
  type ExplorerState,
  IDENTITY_TRANSFORM,
} from "./state";
import { Toolbar } from "./toolbar";

export interface RenderedViews {
  census: MatrixRenderList | null;
  nodeViews: Map<number, MatrixRenderList>;
  network: NetworkRenderList | null;
}

interface SnapshotData {
  gdv: GdvPayload;
  view: ViewStatePayload;
}

export class ExplorerApp {
  state: ExplorerState = initialState();

  private toolbar: Toolbar;
  private censusView: CensusView;
  private networkView: NetworkView;
  private strip: HTMLElement;
  private nodeViews = new Map<number, NodeLevelView>();

  private manifests: DatasetManifest[] = [];
  private census: CensusPayload | null = null;
  private censusViewState: ViewStatePayload | null = null;
  private snapshotData = new Map<string, SnapshotData>();
  private graph: GraphPayload | null = null;
  private motifParticipants: Set<string> | null = null;

  private rendered: RenderedViews = {
    census: null,
    nodeViews: new Map(),
    network: null,
  };
  private inflight: AbortController | null = null;
  private generation = 0;

  constructor(
    root: HTMLElement,
    private api: ApiClient,
    painterFactory: PainterFactory,
  ) {
    this.toolbar = new Toolbar(root, {
      onDataset: (id) => void this.selectDataset(id),
      onCensusRequest: (req) => void this.setCensusRequest(req),
      onMotifSelect: (label) => void this.setMotif(label),
    });

    const main = document.createElement("main");
    root.appendChild(main);

    this.censusView = new CensusView(
      main,
      {
        onColumnClick: (t) => void this.openSnapshot(t),
        onUnfold: (c) => void this.unfoldCluster(c),
        onFold: (c) => void this.foldCluster(c),
        onCellBrush: (cells) =>
          void this.apply((s) => ({ ...s, brush: { ...s.brush, censusCells: cells } })),
        onMotifSelect: (label) => void this.setMotif(label),
      },
      painterFactory,
    );

    this.strip = document.createElement("div");
    this.strip.className = "node-view-strip";
    main.appendChild(this.strip);

    this.networkView = new NetworkView(
      main,
      {
        onTransform: (t) =>
          void this.apply((s) => ({ ...s, networkTransform: t })),
        onCommunityFocus: (c) =>
          void this.apply((s) => ({ ...s, network: { ...s.network, communityFocus: c } })),
        onNodeToggle: (id) => void this.toggleNode(id),
      },
      painterFactory,
    );

    this.painterFactory = painterFactory;
  }

  private painterFactory: PainterFactory;

  /** Load the dataset list, restore state from the fragment, and render. */
  async start(fragment: string = ""): Promise<void> {
    this.manifests = await this.api.datasets();
    const restored = decodeState(fragment);
    if (restored.dataset === null && this.manifests.length > 0) {
      restored.dataset = this.manifests[0].datasetId;
    }
    await this.apply(() => restored);
  }

  fragment(): string {
    return encodeState(this.state);
  }

  renderedViews(): RenderedViews {
    return this.rendered;
  }

  /** Apply a state change: fetch what the new state needs, then render. A
   * newer apply cancels this one (single logical mutation at a time). */
  async apply(mutate: (s: ExplorerState) => ExplorerState): Promise<void> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const gen = ++this.generation;

    let next = mutate(this.state);
    const signal = controller.signal;

    if (next.dataset === null) {
      this.state = next;
      return;
    }

    const dataset = next.dataset;
    const datasetChanged = dataset !== this.state.dataset;
    if (datasetChanged) {
      this.census = null;
      this.snapshotData.clear();
      this.graph = null;
      this.motifParticipants = null;
    }

    if (this.census === null) {
      this.census = await this.api.census(dataset, signal);
    }
    const census = this.census;
    const snapshotCount = census.times.length;

    this.censusViewState = await this.api.censusView(
      dataset,
      next.censusRequest,
      signal,
    );

    // graph payload drives node-id validation for brushes
    const inRange = next.network.snapshot >= 0 && next.network.snapshot < snapshotCount;
    const networkSnapshot = inRange ? next.network.snapshot : 0;
    this.graph = await this.api.graph(dataset, networkSnapshot, signal);
    const knownNodes = new Set(this.graph.nodes.map((n) => n.id));
    next = validateAgainstData(next, snapshotCount, knownNodes, census.motifs);

    for (const view of next.nodeViews) {
      const key = `${dataset}:${view.snapshot}:${view.maxSize}:${JSON.stringify(view.request)}`;
      if (!this.snapshotData.has(key)) {
        const gdv = await this.api.gdv(dataset, view.snapshot, view.maxSize, signal);
        const vs = await this.api.gdvView(
          dataset,
          view.snapshot,
          view.maxSize,
          view.request,
          signal,
        );
        this.snapshotData.set(key, { gdv, view: vs });
      }
    }

    if (next.brush.motif !== null) {
      const payload = await this.api.motifNodes(
        dataset,
        networkSnapshot,
        next.brush.motif,
        signal,
      );
      this.motifParticipants = payload.available ? new Set(payload.nodes) : null;
    } else {
      this.motifParticipants = null;
    }

    if (gen !== this.generation) return; // superseded while fetching
    this.state = next;
    this.render();
    this.syncFragment();
  }

  private manifestFor(datasetId: string): DatasetManifest | undefined {
    return this.manifests.find((m) => m.datasetId === datasetId);
  }

  private render(): void {
    const state = this.state;
    this.toolbar.setDatasets(this.manifests, state.dataset);
    this.toolbar.setRequest(state.censusRequest);

    const rendered: RenderedViews = {
      census: null,
      nodeViews: new Map(),
      network: null,
    };

    if (this.census && this.censusViewState) {
      this.toolbar.setMotifs(this.census.motifs, state.brush.motif);
      rendered.census = this.censusView.render(
        this.census,
        this.censusViewState,
        state.collapsedClusters,
        state.brush.censusCells,
      );
    }

    const wanted = new Set(state.nodeViews.map((v) => v.snapshot));
    for (const [snapshot, view] of this.nodeViews) {
      if (!wanted.has(snapshot)) {
        view.root.remove();
        this.nodeViews.delete(snapshot);
      }
    }
    for (const config of state.nodeViews) {
      const key = `${state.dataset}:${config.snapshot}:${config.maxSize}:${JSON.stringify(config.request)}`;
      const data = this.snapshotData.get(key);
      if (!data) continue;
      let view = this.nodeViews.get(config.snapshot);
      if (!view) {
        view = new NodeLevelView(
          this.strip,
          config.snapshot,
          {
            onBrush: (_t, ids) =>
              void this.apply((s) => ({ ...s, brush: { ...s.brush, nodes: ids } })),
            onSortChange: (t, strategy, metric) => void this.sortNodeView(t, strategy, metric),
            onZoom: (t, k) => void this.zoomNodeView(t, k),
            onClose: (t) => void this.closeSnapshot(t),
          },
          this.painterFactory,
        );
        this.nodeViews.set(config.snapshot, view);
      }
      rendered.nodeViews.set(
        config.snapshot,
        view.render(data.gdv, data.view, state.brush.nodes, config.transform.k),
      );
    }

    if (this.graph) {
      rendered.network = this.networkView.render(
        this.graph,
        { nodes: new Set(state.brush.nodes), motifParticipants: this.motifParticipants },
        state.networkTransform,
        state.network.communityFocus,
      );
    }

    this.rendered = rendered;
  }

  private syncFragment(): void {
    if (typeof window !== "undefined" && window.history?.replaceState) {
      window.history.replaceState(null, "", this.fragment());
    }
  }

  // --- interactions -------------------------------------------------------

  selectDataset(datasetId: string): Promise<void> {
    // switching dataset resets every view to its defaults
    const fresh = initialState();
    fresh.dataset = datasetId;
    return this.apply(() => fresh);
  }

  setCensusRequest(req: CensusViewRequest): Promise<void> {
    return this.apply((s) => ({ ...s, censusRequest: req, collapsedClusters: [] }));
  }

  /** Census column click: open the snapshot as a node-level view and focus
   * the network view on it. */
  openSnapshot(t: number): Promise<void> {
    return this.apply((s) => {
      const open = s.nodeViews.some((v) => v.snapshot === t);
      const maxSize = this.manifestFor(s.dataset ?? "")?.maxGraphletSize ?? 4;
      return {
        ...s,
        nodeViews: open
          ? s.nodeViews
          : [
              ...s.nodeViews,
              {
                snapshot: t,
                maxSize,
                request: { strategy: "byClusterThenTime", minClusterSize: 5 },
                transform: { ...IDENTITY_TRANSFORM },
              },
            ],
        network: { ...s.network, snapshot: t },
      };
    });
  }

  closeSnapshot(t: number): Promise<void> {
    return this.apply((s) => ({
      ...s,
      nodeViews: s.nodeViews.filter((v) => v.snapshot !== t),
    }));
  }

  sortNodeView(
    t: number,
    strategy: "byClusterThenTime" | "byNodeMetric",
    metric: "pagerank" | "degreeCentrality",
  ): Promise<void> {
    return this.apply((s) => ({
      ...s,
      nodeViews: s.nodeViews.map((v) =>
        v.snapshot === t
          ? {
              ...v,
              request:
                strategy === "byNodeMetric"
                  ? { strategy, metric }
                  : { strategy, minClusterSize: 5 },
            }
          : v,
      ),
    }));
  }

  zoomNodeView(t: number, k: number): Promise<void> {
    return this.apply((s) => ({
      ...s,
      nodeViews: s.nodeViews.map((v) =>
        v.snapshot === t ? { ...v, transform: { ...v.transform, k } } : v,
      ),
    }));
  }

  unfoldCluster(clusterId: number): Promise<void> {
    return this.apply((s) => ({
      ...s,
      collapsedClusters: s.collapsedClusters.filter((c) => c !== clusterId),
    }));
  }

  foldCluster(clusterId: number): Promise<void> {
    return this.apply((s) => ({
      ...s,
      collapsedClusters: s.collapsedClusters.includes(clusterId)
        ? s.collapsedClusters
        : [...s.collapsedClusters, clusterId],
    }));
  }

  setMotif(label: string | null): Promise<void> {
    return this.apply((s) => ({ ...s, brush: { ...s.brush, motif: label } }));
  }

  brushNodes(ids: string[]): Promise<void> {
    return this.apply((s) => ({ ...s, brush: { ...s.brush, nodes: ids } }));
  }

  toggleNode(id: string): Promise<void> {
    return this.apply((s) => ({
      ...s,
      brush: {
        ...s.brush,
        nodes: s.brush.nodes.includes(id)
          ? s.brush.nodes.filter((n) => n !== id)
          : [...s.brush.nodes, id],
      },
    }));
  }
}

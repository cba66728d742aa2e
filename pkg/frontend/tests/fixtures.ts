/** Fixture-backed ApiClient. Payloads in fixtures.json are verbatim responses
 * captured from the real server over a 20-snapshot dataset whose census view
 * clusters into two 10-member groups. Unknown requests throw so tests notice
 * missing fixtures instead of silently rendering nothing.
 */

import type {
  ApiClient,
  CensusPayload,
  CensusViewRequest,
  DatasetManifest,
  GdvPayload,
  GdvViewRequest,
  GraphPayload,
  MotifNodesPayload,
  SnapshotMetrics,
  ViewStatePayload,
} from "../src/api";
import raw from "./fixtures.json";

const fixtures = raw as unknown as Record<string, unknown>;

function pick<T>(key: string): T {
  const value = fixtures[key];
  if (value === undefined) throw new Error(`no fixture for ${key}`);
  return value as T;
}

export class FixtureApiClient implements ApiClient {
  /** Request log, for asserting what the app asked for. */
  calls: string[] = [];

  private note(call: string): void {
    this.calls.push(call);
  }

  private checkDataset(dataset: string): void {
    if (dataset !== "fix") throw new Error(`no fixture dataset ${dataset}`);
  }

  async datasets(): Promise<DatasetManifest[]> {
    this.note("datasets");
    return pick("datasets");
  }

  async census(dataset: string): Promise<CensusPayload> {
    this.checkDataset(dataset);
    this.note(`census:${dataset}`);
    return pick("census");
  }

  async censusView(dataset: string, req: CensusViewRequest): Promise<ViewStatePayload> {
    this.checkDataset(dataset);
    this.note(`censusView:${JSON.stringify(req)}`);
    if (req.strategy === "byClusterThenTime" && (req.epsTime ?? 10) === 10) {
      return pick("censusViewDefault");
    }
    if (req.strategy === "byTime" && req.statistic === "variance") {
      return pick("censusViewByTime");
    }
    if (req.strategy === "byNetworkMetric" && (req.metric ?? "edgeCount") === "edgeCount") {
      return pick("censusViewByEdges");
    }
    throw new Error(`no fixture for census view ${JSON.stringify(req)}`);
  }

  async gdv(dataset: string, t: number, maxSize: number): Promise<GdvPayload> {
    this.checkDataset(dataset);
    this.note(`gdv:${t}:${maxSize}`);
    if (maxSize !== 4) throw new Error(`no fixture for maxSize ${maxSize}`);
    return pick(`gdv${t}`);
  }

  async gdvView(
    dataset: string,
    t: number,
    maxSize: number,
    req: GdvViewRequest,
  ): Promise<ViewStatePayload> {
    this.checkDataset(dataset);
    this.note(`gdvView:${t}:${maxSize}:${JSON.stringify(req)}`);
    if (req.strategy === "byClusterThenTime") return pick(`gdvView${t}Cluster`);
    if (req.metric === "pagerank") return pick(`gdvView${t}Pagerank`);
    if (req.metric === "degreeCentrality") return pick(`gdvView${t}Degree`);
    throw new Error(`no fixture for gdv view ${JSON.stringify(req)}`);
  }

  async graph(dataset: string, t: number): Promise<GraphPayload> {
    this.checkDataset(dataset);
    this.note(`graph:${t}`);
    return pick(`graph${t}`);
  }

  async metrics(dataset: string, t: number): Promise<SnapshotMetrics> {
    this.checkDataset(dataset);
    this.note(`metrics:${t}`);
    return pick(`metrics${t}`);
  }

  async motifNodes(dataset: string, t: number, label: string): Promise<MotifNodesPayload> {
    this.checkDataset(dataset);
    this.note(`motifNodes:${t}:${label}`);
    return pick(`motif${label}_${t}`);
  }
}

export const censusFixture = pick<CensusPayload>("census");
export const censusViewFixture = pick<ViewStatePayload>("censusViewDefault");
export const gdvFixture = pick<GdvPayload>("gdv0");
export const gdvViewClusterFixture = pick<ViewStatePayload>("gdvView0Cluster");
export const gdvViewPagerankFixture = pick<ViewStatePayload>("gdvView0Pagerank");
export const graphFixture = pick<GraphPayload>("graph0");
export const graph5Fixture = pick<GraphPayload>("graph5");
export const motif030TFixture = pick<MotifNodesPayload>("motif030T_0");

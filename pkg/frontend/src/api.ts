/** Typed client for the motifscope HTTP/JSON API.
 *
 * The UI never computes analytics: permutations, cluster labels, and matrix
 * values all come from these endpoints. Components consume the `ApiClient`
 * interface so tests can substitute fixture-backed implementations.
 */

export interface DatasetManifest {
  datasetId: string;
  source: string;
  delimiter: string;
  binWidth: number;
  nullCount: number;
  seed: number;
  maxGraphletSize: number;
  version: number;
  rng: string;
}

export interface CensusPayload {
  motifs: string[];
  times: number[];
  values: number[]; // row-major, motifs x times
  nullCount: number;
  seed: number;
  rng: string;
}

export interface ClusterAssignmentPayload {
  labels: number[]; // per original column; -1 is noise
  clusterOrder: number[];
  parameters: Record<string, number>;
}

export interface ViewStatePayload {
  rowPermutation: number[]; // display position -> original index
  colPermutation: number[];
  clusters: ClusterAssignmentPayload | null;
  collapsed: number[];
}

export interface CensusViewRequest {
  strategy: "byTime" | "byClusterThenTime" | "byNetworkMetric";
  statistic?: "mean" | "min" | "max" | "variance" | "std" | "median" | null;
  epsTime?: number;
  minClusterSize?: number;
  metric?: "edgeCount" | "avgClustering" | "nodeCount" | null;
}

export interface GdvPayload {
  orbits: number[];
  nodes: string[];
  values: number[]; // row-major, orbits x nodes
  maxGraphletSize: number;
}

export interface GdvViewRequest {
  strategy: "byClusterThenTime" | "byNodeMetric";
  statistic?: "mean" | "min" | "max" | "variance" | "std" | "median" | null;
  minClusterSize?: number;
  metric?: "pagerank" | "degreeCentrality";
}

export interface GraphNode {
  id: string;
  pagerank: number;
  degreeCentrality: number;
  community?: number;
}

export interface GraphPayload {
  snapshot: number;
  interval: [number, number];
  nodes: GraphNode[];
  edges: [string, string][];
  layout: Record<string, [number, number]>;
  communities?: { count: number; modularity: number };
}

export interface SnapshotMetrics {
  snapshot: number;
  nodeCount: number;
  edgeCount: number;
  avgClustering: number;
}

export interface MotifNodesPayload {
  label: string;
  available: boolean;
  nodes: string[];
  instanceCount: number;
  detail?: string;
}

export interface JobTicket {
  job: string;
  status: "running" | "done" | "error";
  detail?: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public error: string,
    public detail: string,
  ) {
    super(`${error}: ${detail}`);
  }
}

export interface ApiClient {
  datasets(signal?: AbortSignal): Promise<DatasetManifest[]>;
  census(dataset: string, signal?: AbortSignal): Promise<CensusPayload>;
  censusView(
    dataset: string,
    req: CensusViewRequest,
    signal?: AbortSignal,
  ): Promise<ViewStatePayload>;
  gdv(
    dataset: string,
    t: number,
    maxSize: number,
    signal?: AbortSignal,
  ): Promise<GdvPayload>;
  gdvView(
    dataset: string,
    t: number,
    maxSize: number,
    req: GdvViewRequest,
    signal?: AbortSignal,
  ): Promise<ViewStatePayload>;
  graph(dataset: string, t: number, signal?: AbortSignal): Promise<GraphPayload>;
  metrics(dataset: string, t: number, signal?: AbortSignal): Promise<SnapshotMetrics>;
  motifNodes(
    dataset: string,
    t: number,
    label: string,
    signal?: AbortSignal,
  ): Promise<MotifNodesPayload>;
}

const POLL_MS = 500;

/** Fetch-backed client. Responses with a 202 job ticket are polled until the
 * job finishes, then the original request is replayed. */
export class HttpApiClient implements ApiClient {
  constructor(private base: string = "") {}

  private async request<T>(
    path: string,
    init: RequestInit = {},
    signal?: AbortSignal,
  ): Promise<T> {
    for (;;) {
      const res = await fetch(this.base + path, { ...init, signal });
      const body = await res.json();
      if (res.status === 202) {
        await this.waitForJob((body as JobTicket).job, signal);
        continue;
      }
      if (!res.ok) {
        throw new ApiError(res.status, body.error ?? "error", body.detail ?? "");
      }
      return body as T;
    }
  }

  private async waitForJob(jobId: string, signal?: AbortSignal): Promise<void> {
    for (;;) {
      const res = await fetch(`${this.base}/api/jobs/${jobId}`, { signal });
      const body = (await res.json()) as JobTicket;
      if (body.status === "done") return;
      if (body.status === "error") {
        throw new ApiError(500, "job failed", body.detail ?? jobId);
      }
      await new Promise((resolve) => setTimeout(resolve, POLL_MS));
      if (signal?.aborted) throw new DOMException("aborted", "AbortError");
    }
  }

  private post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    return this.request<T>(
      path,
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      },
      signal,
    );
  }

  datasets(signal?: AbortSignal): Promise<DatasetManifest[]> {
    return this.request("/api/datasets", {}, signal);
  }

  census(dataset: string, signal?: AbortSignal): Promise<CensusPayload> {
    return this.request(`/api/datasets/${dataset}/census`, {}, signal);
  }

  censusView(
    dataset: string,
    req: CensusViewRequest,
    signal?: AbortSignal,
  ): Promise<ViewStatePayload> {
    return this.post(`/api/datasets/${dataset}/census/view`, req, signal);
  }

  gdv(
    dataset: string,
    t: number,
    maxSize: number,
    signal?: AbortSignal,
  ): Promise<GdvPayload> {
    return this.request(
      `/api/datasets/${dataset}/snapshots/${t}/gdv?maxSize=${maxSize}`,
      {},
      signal,
    );
  }

  gdvView(
    dataset: string,
    t: number,
    maxSize: number,
    req: GdvViewRequest,
    signal?: AbortSignal,
  ): Promise<ViewStatePayload> {
    return this.post(
      `/api/datasets/${dataset}/snapshots/${t}/gdv/view?maxSize=${maxSize}`,
      req,
      signal,
    );
  }

  graph(dataset: string, t: number, signal?: AbortSignal): Promise<GraphPayload> {
    return this.request(`/api/datasets/${dataset}/snapshots/${t}/graph`, {}, signal);
  }

  metrics(dataset: string, t: number, signal?: AbortSignal): Promise<SnapshotMetrics> {
    return this.request(`/api/datasets/${dataset}/snapshots/${t}/metrics`, {}, signal);
  }

  motifNodes(
    dataset: string,
    t: number,
    label: string,
    signal?: AbortSignal,
  ): Promise<MotifNodesPayload> {
    return this.request(
      `/api/datasets/${dataset}/snapshots/${t}/motifs/${label}/nodes`,
      {},
      signal,
    );
  }
}

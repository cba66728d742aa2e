/** Serializing the explorer state into the URL fragment and restoring it in a
 * fresh app must reproduce the same rendered views: same render lists and the
 * same paint calls, down to the byte. Both apps talk to fixture payloads. */

import { describe, expect, it } from "vitest";

import { ExplorerApp } from "../src/app";
import { RecordingPainter } from "../src/painter";
import type { PainterFactory } from "../src/painter";
import { FixtureApiClient, gdvFixture, graph5Fixture } from "./fixtures";

function trackedFactory(): { painters: RecordingPainter[]; factory: PainterFactory } {
  const painters: RecordingPainter[] = [];
  const factory: PainterFactory = () => {
    const p = new RecordingPainter();
    painters.push(p);
    return p;
  };
  return { painters, factory };
}

/** Ops since the painter's last clear: the content currently on screen. */
function lastPaint(p: RecordingPainter): string {
  const ops = p.calls.map((c) => c.op);
  const start = ops.lastIndexOf("clear");
  return JSON.stringify(p.calls.slice(Math.max(start, 0)));
}

function freshRoot(): HTMLElement {
  const root = document.createElement("div");
  document.body.appendChild(root);
  return root;
}

async function buildRichApp(): Promise<{ app: ExplorerApp; painters: RecordingPainter[] }> {
  const { painters, factory } = trackedFactory();
  const app = new ExplorerApp(freshRoot(), new FixtureApiClient(), factory);
  await app.start("");
  await app.openSnapshot(0);
  await app.openSnapshot(5);
  await app.foldCluster(0);
  await app.sortNodeView(0, "byNodeMetric", "pagerank");
  await app.zoomNodeView(5, 1.5);
  const inBoth = new Set(graph5Fixture.nodes.map((n) => n.id));
  const ids = gdvFixture.nodes.filter((id) => inBoth.has(id)).slice(0, 3);
  await app.brushNodes(ids);
  await app.setMotif("030T");
  await app.apply((s) => ({ ...s, networkTransform: { k: 2, x: 10, y: -5 } }));
  return { app, painters };
}

describe("explorer state round-trip", () => {
  it("restoring the fragment reproduces identical rendered views", async () => {
    document.body.innerHTML = "";
    const a = await buildRichApp();
    const fragment = a.app.fragment();
    const viewsA = a.app.renderedViews();

    // sanity: the state under test is not trivial
    expect(viewsA.nodeViews.size).toBe(2);
    expect(viewsA.census!.placeholders).toHaveLength(1);
    expect(viewsA.network!.nodes.some((n) => n.highlighted)).toBe(true);

    const b = trackedFactory();
    const appB = new ExplorerApp(freshRoot(), new FixtureApiClient(), b.factory);
    await appB.start(fragment);
    const viewsB = appB.renderedViews();

    expect(viewsB.census).toEqual(viewsA.census);
    expect(viewsB.nodeViews).toEqual(viewsA.nodeViews);
    expect(viewsB.network).toEqual(viewsA.network);

    // identical paint calls per canvas: census, network, then node views in
    // state order
    expect(b.painters).toHaveLength(a.painters.length);
    for (let i = 0; i < a.painters.length; i++) {
      expect(lastPaint(b.painters[i])).toBe(lastPaint(a.painters[i]));
    }
  });

  it("the fragment is a fixed point under restore", async () => {
    document.body.innerHTML = "";
    const a = await buildRichApp();
    const fragment = a.app.fragment();

    const appB = new ExplorerApp(freshRoot(), new FixtureApiClient(), trackedFactory().factory);
    await appB.start(fragment);

    expect(appB.fragment()).toBe(fragment);
    expect(appB.state).toEqual(a.app.state);
  });

  it("restores collapse state: folded cluster stays folded with its placeholder", async () => {
    document.body.innerHTML = "";
    const a = await buildRichApp();

    const appB = new ExplorerApp(freshRoot(), new FixtureApiClient(), trackedFactory().factory);
    await appB.start(a.app.fragment());

    const census = appB.renderedViews().census!;
    expect(appB.state.collapsedClusters).toEqual([0]);
    expect(census.placeholders).toHaveLength(1);
    expect(census.placeholders[0].label).toBe("4");
    expect(census.columns.filter((c) => c.cluster === 0)).toHaveLength(6);
  });

  it("restores per-view sort and zoom", async () => {
    document.body.innerHTML = "";
    const a = await buildRichApp();

    const appB = new ExplorerApp(freshRoot(), new FixtureApiClient(), trackedFactory().factory);
    await appB.start(a.app.fragment());

    const views = appB.state.nodeViews;
    expect(views.find((v) => v.snapshot === 0)!.request).toEqual({
      strategy: "byNodeMetric",
      metric: "pagerank",
    });
    expect(views.find((v) => v.snapshot === 5)!.transform.k).toBe(1.5);
    // zoom scales the painted cells
    const cells = appB.renderedViews().nodeViews.get(5)!.cells;
    expect(cells[0].size).toBe(18);
  });

  it("a default app round-trips too", async () => {
    document.body.innerHTML = "";
    const a = new ExplorerApp(freshRoot(), new FixtureApiClient(), trackedFactory().factory);
    await a.start("");
    const fragment = a.fragment();

    const b = new ExplorerApp(freshRoot(), new FixtureApiClient(), trackedFactory().factory);
    await b.start(fragment);

    expect(b.renderedViews()).toEqual(a.renderedViews());
    expect(b.fragment()).toBe(fragment);
  });
});

/** Linked brushing: a drag across k node columns in a node-level view must
 * highlight exactly those k node ids in the network view, and nothing else.
 * The app is driven through real DOM events against fixture API payloads. */

import { beforeEach, describe, expect, it } from "vitest";

import { ExplorerApp } from "../src/app";
import { RecordingPainter } from "../src/painter";
import { CELL, PAD_TOP } from "../src/renderlist";
import { FixtureApiClient, gdvFixture } from "./fixtures";

// Event handlers fire apply() without awaiting; drain the microtask chain.
async function flush(): Promise<void> {
  for (let i = 0; i < 4; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

function mouse(type: string, x: number, y = 40): MouseEvent {
  // jsdom reports a zero bounding rect, so client coords are canvas-local
  return new MouseEvent(type, { clientX: x, clientY: y, bubbles: true });
}

describe("linked brushing", () => {
  let app: ExplorerApp;
  let api: FixtureApiClient;
  let root: HTMLElement;

  beforeEach(async () => {
    document.body.innerHTML = "";
    root = document.createElement("div");
    document.body.appendChild(root);
    api = new FixtureApiClient();
    app = new ExplorerApp(root, api, () => new RecordingPainter());
    await app.start("");
    await app.openSnapshot(0);
  });

  function nodeCanvas(): HTMLCanvasElement {
    return root.querySelector(".node-view-strip canvas")!;
  }

  function highlightedIds(): string[] {
    return app
      .renderedViews()
      .network!.nodes.filter((n) => n.highlighted)
      .map((n) => n.id)
      .sort();
  }

  it("brushing 3 columns highlights exactly those 3 node ids", async () => {
    const list = app.renderedViews().nodeViews.get(0)!;
    const cols = list.columns;
    const expected = [2, 3, 4].map((i) => gdvFixture.nodes[cols[i].col]);

    nodeCanvas().dispatchEvent(mouse("mousedown", cols[2].x + 1));
    nodeCanvas().dispatchEvent(mouse("mouseup", cols[4].x + 1));
    await flush();

    expect(app.state.brush.nodes).toHaveLength(3);
    expect(highlightedIds()).toEqual([...expected].sort());
    // the node view marks the same columns
    const brushedCols = new Set(
      app
        .renderedViews()
        .nodeViews.get(0)!
        .cells.filter((c) => c.brushed)
        .map((c) => c.col),
    );
    expect(brushedCols).toEqual(new Set([2, 3, 4].map((i) => cols[i].col)));
  });

  it("brushing a single column highlights exactly one node", async () => {
    const cols = app.renderedViews().nodeViews.get(0)!.columns;
    nodeCanvas().dispatchEvent(mouse("mousedown", cols[7].x + 2));
    nodeCanvas().dispatchEvent(mouse("mouseup", cols[7].x + 3));
    await flush();

    expect(highlightedIds()).toEqual([gdvFixture.nodes[cols[7].col]]);
  });

  it("brushing an empty region clears the highlights", async () => {
    await app.brushNodes([gdvFixture.nodes[0], gdvFixture.nodes[1]]);
    expect(highlightedIds()).toHaveLength(2);

    nodeCanvas().dispatchEvent(mouse("mousedown", 0));
    nodeCanvas().dispatchEvent(mouse("mouseup", 4));
    await flush();

    expect(app.state.brush.nodes).toEqual([]);
    expect(highlightedIds()).toEqual([]);
  });

  it("programmatic brushes drop ids the current graph does not know", async () => {
    await app.brushNodes(["bogus", gdvFixture.nodes[5]]);
    expect(app.state.brush.nodes).toEqual([gdvFixture.nodes[5]]);
    expect(highlightedIds()).toEqual([gdvFixture.nodes[5]]);
  });

  it("census cell brushes do not leak into network highlights", async () => {
    await app.apply((s) => ({
      ...s,
      brush: { ...s.brush, censusCells: [[0, 0], [1, 1]] },
    }));
    expect(highlightedIds()).toEqual([]);
    const censusBrushed = app
      .renderedViews()
      .census!.cells.filter((c) => c.brushed);
    expect(censusBrushed).toHaveLength(2);
  });

  it("clicking a census column opens that snapshot as a node-level view", async () => {
    const census = app.renderedViews().census!;
    const target = census.columns.find((c) => c.col === 5)!;
    const canvas = root.querySelector(".census-view canvas")!;
    canvas.dispatchEvent(mouse("click", target.x + 1, PAD_TOP + 1));
    await flush();

    expect(app.state.nodeViews.map((v) => v.snapshot)).toEqual([0, 5]);
    expect(app.state.network.snapshot).toBe(5);
    expect(app.renderedViews().nodeViews.has(5)).toBe(true);
    expect(api.calls).toContain("graph:5");
  });

  it("clicking a network node toggles it into the shared brush", async () => {
    const netCanvas = root.querySelector<HTMLCanvasElement>(".network-canvas")!;
    // the last node paints on top, so a click at its center always hits it
    const nodes = app.renderedViews().network!.nodes;
    const target = nodes[nodes.length - 1];

    netCanvas.dispatchEvent(mouse("mousedown", target.x, target.y));
    netCanvas.dispatchEvent(mouse("mouseup", target.x, target.y));
    await flush();

    expect(app.state.brush.nodes).toEqual([target.id]);
    expect(highlightedIds()).toEqual([target.id]);
    // symmetric linking: the node-level view marks the same node's column
    const col = gdvFixture.nodes.indexOf(target.id);
    const brushedCols = new Set(
      app
        .renderedViews()
        .nodeViews.get(0)!
        .cells.filter((c) => c.brushed)
        .map((c) => c.col),
    );
    expect(brushedCols).toEqual(new Set([col]));

    netCanvas.dispatchEvent(mouse("mousedown", target.x, target.y));
    netCanvas.dispatchEvent(mouse("mouseup", target.x, target.y));
    await flush();
    expect(app.state.brush.nodes).toEqual([]);
  });

  it("dragging the network pans without brushing", async () => {
    const netCanvas = root.querySelector<HTMLCanvasElement>(".network-canvas")!;
    const nodes = app.renderedViews().network!.nodes;
    const target = nodes[nodes.length - 1];

    netCanvas.dispatchEvent(mouse("mousedown", target.x, target.y));
    netCanvas.dispatchEvent(mouse("mousemove", target.x + 20, target.y));
    netCanvas.dispatchEvent(mouse("mouseup", target.x + 20, target.y));
    await flush();

    expect(app.state.brush.nodes).toEqual([]);
    expect(app.state.networkTransform.x).toBe(20);
  });

  it("zoomed views still brush the right columns", async () => {
    await app.zoomNodeView(0, 2);
    const list = app.renderedViews().nodeViews.get(0)!;
    const cols = list.columns;
    expect(cols[1].x - cols[0].x).toBeGreaterThanOrEqual(2 * CELL);

    nodeCanvas().dispatchEvent(mouse("mousedown", cols[0].x + 1));
    nodeCanvas().dispatchEvent(mouse("mouseup", cols[1].x + 1));
    await flush();

    expect(highlightedIds()).toEqual(
      [gdvFixture.nodes[cols[0].col], gdvFixture.nodes[cols[1].col]].sort(),
    );
  });
});

describe("motif participation fading", () => {
  let app: ExplorerApp;

  beforeEach(async () => {
    document.body.innerHTML = "";
    const root = document.createElement("div");
    document.body.appendChild(root);
    app = new ExplorerApp(root, new FixtureApiClient(), () => new RecordingPainter());
    await app.start("");
  });

  it("selecting a motif with participants fades nobody in the fixture", async () => {
    await app.setMotif("030T");
    const net = app.renderedViews().network!;
    // every node participates in some 030T instance at t=0
    expect(net.nodes.every((n) => !n.faded)).toBe(true);
  });

  it("selecting a motif with no instances fades every node", async () => {
    await app.setMotif("201");
    const net = app.renderedViews().network!;
    expect(net.nodes.every((n) => n.faded)).toBe(true);
    expect(net.edges.every((e) => e.faded)).toBe(true);
  });

  it("clearing the motif restores everyone", async () => {
    await app.setMotif("201");
    await app.setMotif(null);
    const net = app.renderedViews().network!;
    expect(net.nodes.every((n) => !n.faded)).toBe(true);
  });
});

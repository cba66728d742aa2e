import { HttpApiClient } from "./api";
import { ExplorerApp } from "./app";
import { CanvasPainter } from "./painter";
import "./style.css";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

const app = new ExplorerApp(root, new HttpApiClient(), (canvas) => new CanvasPainter(canvas));

app.start(window.location.hash).catch((err) => {
  const note = document.createElement("p");
  note.className = "load-error";
  note.textContent = `failed to load: ${err instanceof Error ? err.message : err}`;
  root.appendChild(note);
});

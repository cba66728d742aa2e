/** Painting abstraction over canvas 2d so component tests can substitute a
 * recording painter (jsdom has no real canvas context). Views draw through
 * this interface only. */

export interface Painter {
  clear(width: number, height: number): void;
  rect(x: number, y: number, w: number, h: number, fill: string): void;
  strokeRect(x: number, y: number, w: number, h: number, stroke: string): void;
  hatchRect(x: number, y: number, w: number, h: number): void;
  text(
    x: number,
    y: number,
    text: string,
    align: "left" | "right" | "center",
  ): void;
  line(x1: number, y1: number, x2: number, y2: number, stroke: string, width: number): void;
  circle(x: number, y: number, r: number, fill: string, stroke: string | null): void;
  polygon(points: [number, number][], fill: string, stroke: string): void;
}

export type PainterFactory = (canvas: HTMLCanvasElement) => Painter;

export class CanvasPainter implements Painter {
  private ctx: CanvasRenderingContext2D;

  constructor(private canvas: HTMLCanvasElement) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
  }

  clear(width: number, height: number): void {
    const dpr = window.devicePixelRatio || 1;
    this.canvas.width = width * dpr;
    this.canvas.height = height * dpr;
    this.canvas.style.width = `${width}px`;
    this.canvas.style.height = `${height}px`;
    this.ctx.setTransform(dpr, 0, 0, dpr, 0, 0);
    this.ctx.clearRect(0, 0, width, height);
    this.ctx.font = "10px sans-serif";
    this.ctx.textBaseline = "middle";
  }

  rect(x: number, y: number, w: number, h: number, fill: string): void {
    this.ctx.fillStyle = fill;
    this.ctx.fillRect(x, y, w, h);
  }

  strokeRect(x: number, y: number, w: number, h: number, stroke: string): void {
    this.ctx.strokeStyle = stroke;
    this.ctx.lineWidth = 1.5;
    this.ctx.strokeRect(x + 0.5, y + 0.5, w - 1, h - 1);
  }

  hatchRect(x: number, y: number, w: number, h: number): void {
    this.ctx.save();
    this.ctx.fillStyle = "#ffffff";
    this.ctx.fillRect(x, y, w, h);
    this.ctx.strokeStyle = "#999999";
    this.ctx.lineWidth = 1;
    this.ctx.beginPath();
    for (let d = -h; d < w; d += 5) {
      this.ctx.moveTo(x + d, y + h);
      this.ctx.lineTo(x + d + h, y);
    }
    this.ctx.rect(x, y, w, h);
    this.ctx.clip();
    this.ctx.stroke();
    this.ctx.restore();
    this.ctx.strokeStyle = "#666666";
    this.ctx.strokeRect(x + 0.5, y + 0.5, w - 1, h - 1);
  }

  text(x: number, y: number, text: string, align: "left" | "right" | "center"): void {
    this.ctx.fillStyle = "#333333";
    this.ctx.textAlign = align;
    this.ctx.fillText(text, x, y);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, width: number): void {
    this.ctx.strokeStyle = stroke;
    this.ctx.lineWidth = width;
    this.ctx.beginPath();
    this.ctx.moveTo(x1, y1);
    this.ctx.lineTo(x2, y2);
    this.ctx.stroke();
  }

  circle(x: number, y: number, r: number, fill: string, stroke: string | null): void {
    this.ctx.fillStyle = fill;
    this.ctx.beginPath();
    this.ctx.arc(x, y, r, 0, 2 * Math.PI);
    this.ctx.fill();
    if (stroke) {
      this.ctx.strokeStyle = stroke;
      this.ctx.lineWidth = 1.5;
      this.ctx.stroke();
    }
  }

  polygon(points: [number, number][], fill: string, stroke: string): void {
    if (points.length === 0) return;
    this.ctx.beginPath();
    this.ctx.moveTo(points[0][0], points[0][1]);
    for (const [px, py] of points.slice(1)) this.ctx.lineTo(px, py);
    this.ctx.closePath();
    this.ctx.fillStyle = fill;
    this.ctx.fill();
    this.ctx.strokeStyle = stroke;
    this.ctx.lineWidth = 1;
    this.ctx.stroke();
  }
}

/** Test double: records every call. */
export class RecordingPainter implements Painter {
  public calls: { op: string; args: unknown[] }[] = [];

  private record(op: string, ...args: unknown[]): void {
    this.calls.push({ op, args });
  }

  clear(width: number, height: number): void {
    this.record("clear", width, height);
  }
  rect(x: number, y: number, w: number, h: number, fill: string): void {
    this.record("rect", x, y, w, h, fill);
  }
  strokeRect(x: number, y: number, w: number, h: number, stroke: string): void {
    this.record("strokeRect", x, y, w, h, stroke);
  }
  hatchRect(x: number, y: number, w: number, h: number): void {
    this.record("hatchRect", x, y, w, h);
  }
  text(x: number, y: number, text: string, align: string): void {
    this.record("text", x, y, text, align);
  }
  line(x1: number, y1: number, x2: number, y2: number, stroke: string, width: number): void {
    this.record("line", x1, y1, x2, y2, stroke, width);
  }
  circle(x: number, y: number, r: number, fill: string, stroke: string | null): void {
    this.record("circle", x, y, r, fill, stroke);
  }
  polygon(points: [number, number][], fill: string, stroke: string): void {
    this.record("polygon", points, fill, stroke);
  }
}

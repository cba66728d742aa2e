/** Color scales matching the server-side renderer byte for byte.
 *
 * Diverging anchors: -1 -> #67001F, 0 -> #F7F7F7, +1 -> #053061.
 * Rounding is half-up, same as the SVG/PNG exporter, so a cell painted here
 * equals the corresponding cell in a server-rendered image.
 */

export type Rgb = [number, number, number];

const NEG: Rgb = [0x67, 0x00, 0x1f];
const MID: Rgb = [0xf7, 0xf7, 0xf7];
const POS: Rgb = [0x05, 0x30, 0x61];

function halfUp(x: number): number {
  return Math.floor(x + 0.5);
}

function lerp(a: Rgb, b: Rgb, t: number): Rgb {
  return [
    halfUp(a[0] + (b[0] - a[0]) * t),
    halfUp(a[1] + (b[1] - a[1]) * t),
    halfUp(a[2] + (b[2] - a[2]) * t),
  ];
}

/** value in [-1, 1], clamped. */
export function diverging(value: number): Rgb {
  const v = Math.max(-1, Math.min(1, value));
  return v < 0 ? lerp(MID, NEG, -v) : lerp(MID, POS, v);
}

/** value in [0, 1], clamped; 0 -> white, 1 -> black. */
export function grayscale(value: number): Rgb {
  const v = Math.max(0, Math.min(1, value));
  const g = halfUp(255 * (1 - v));
  return [g, g, g];
}

export function css([r, g, b]: Rgb): string {
  return `rgb(${r},${g},${b})`;
}

export function hex([r, g, b]: Rgb): string {
  const h = (x: number) => x.toString(16).padStart(2, "0");
  return `#${h(r)}${h(g)}${h(b)}`;
}

"""Pixel-matrix geometry, color mapping, and static SVG/PNG export.

A view model is a pure function of (matrix, view state, scale, cell size):
cells keep their original (row, col) identity and only move on screen, so
reordering changes geometry but never the color attached to a cell.

Color anchor table (single source of truth, also shown in legends):

    diverging  -1.0 -> #67001F   0.0 -> #F7F7F7   +1.0 -> #053061
    grayscale  domain lo -> #FFFFFF, domain hi -> #000000, linear in RGB
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .reorder import ViewState, collapse

RGB = tuple[int, int, int]

DIVERGING_ANCHORS: tuple[tuple[float, RGB], ...] = (
    (-1.0, (0x67, 0x00, 0x1F)),
    (0.0, (0xF7, 0xF7, 0xF7)),
    (1.0, (0x05, 0x30, 0x61)),
)


@dataclass(frozen=True)
class ColorScale:
    kind: str  # "diverging" | "grayscale"
    domain: tuple[float, float]
    anchors: tuple[tuple[float, RGB], ...]


def diverging_scale() -> ColorScale:
    return ColorScale("diverging", (-1.0, 1.0), DIVERGING_ANCHORS)


def grayscale_scale(domain: tuple[float, float] = (0.0, 1.0)) -> ColorScale:
    lo, hi = domain
    return ColorScale(
        "grayscale", domain, ((lo, (0xFF, 0xFF, 0xFF)), (hi, (0x00, 0x00, 0x00)))
    )


def color_of(scale: ColorScale, value: float) -> RGB:
    """Piecewise-linear interpolation between anchors, per RGB channel,
    rounded half-up; values outside the domain clamp to the ends."""
    lo, hi = scale.domain
    v = min(max(value, lo), hi)
    anchors = scale.anchors
    if v <= anchors[0][0]:
        return anchors[0][1]
    for (p0, c0), (p1, c1) in zip(anchors, anchors[1:]):
        if v <= p1:
            if p1 == p0:
                return c1
            f = (v - p0) / (p1 - p0)
            return tuple(
                int(math.floor(c0[ch] + (c1[ch] - c0[ch]) * f + 0.5)) for ch in range(3)
            )
    return anchors[-1][1]


def _hex(color: RGB) -> str:
    return "#{:02X}{:02X}{:02X}".format(*color)


@dataclass(frozen=True)
class PixelViewModel:
    """Screen geometry for one matrix view. Rect keys are original matrix
    indices; values are (x, y, w, h) in pixels."""

    cell_rects: dict[tuple[int, int], tuple[int, int, int, int]]
    cell_colors: dict[tuple[int, int], RGB]
    row_labels: tuple[tuple[int, int, str], ...]  # (x, y-baseline, text)
    col_labels: tuple[tuple[int, int, str], ...]
    placeholders: tuple[tuple[int, int, int, int, int], ...]  # x, y, w, h, hidden
    width: int
    height: int
    cell_size: int
    scale: ColorScale

    @property
    def grid_width(self) -> int:
        return self._grid_w

    def __post_init__(self):
        xs = [x + w for x, _, w, _ in self.cell_rects.values()]
        xs += [x + w for x, _, w, _, _ in self.placeholders]
        x0 = [x for x, _, _, _ in self.cell_rects.values()]
        x0 += [x for x, _, _, _, _ in self.placeholders]
        object.__setattr__(self, "_grid_w", (max(xs) - min(x0)) if xs else 0)


PAD_LEFT = 72
PAD_TOP = 12
PAD_RIGHT = 16
COL_LABEL_H = 20
LEGEND_H = 44
PAD_BOTTOM = 8
MAX_COL_LABELS = 32


def _display_columns(state: ViewState) -> tuple[list[tuple[str, int, int]], set[int]]:
    """Flatten the column permutation into display slots.

    Returns (slots, gap-after-display-positions); a slot is ("cell", col, 0)
    or ("placeholder", cluster_id, hidden_count). Collapsed clusters show
    their first and last three members around one placeholder; a two-cell
    gap follows every cluster boundary.
    """
    labels = state.clusters.labels if state.clusters is not None else None
    slots: list[tuple[str, int, int]] = []
    gaps: set[int] = set()
    collapsed_layouts = {}
    if state.clusters is not None:
        for cid in state.collapsed:
            lay = collapse(state, cid)
            if lay.hidden_count > 0:
                collapsed_layouts[cid] = lay
    hidden: set[int] = set()
    placeholder_after: dict[int, tuple[int, int]] = {}
    for cid, lay in collapsed_layouts.items():
        members = [c for c in state.col_permutation if labels[c] == cid]
        for m in members[3:-3]:
            hidden.add(m)
        placeholder_after[lay.visible[2]] = (cid, lay.hidden_count)

    prev_label: int | None = None
    first = True
    for col in state.col_permutation:
        if col in hidden:
            continue
        lab = labels[col] if labels is not None else None
        if not first and labels is not None and lab != prev_label:
            gaps.add(len(slots) - 1)
        slots.append(("cell", col, 0))
        if col in placeholder_after:
            cid, count = placeholder_after[col]
            slots.append(("placeholder", cid, count))
        prev_label = lab
        first = False
    return slots, gaps


def build_view_model(matrix, state: ViewState, scale: ColorScale, cell_size: int,
                     row_labels: tuple[str, ...] | None = None,
                     col_labels: tuple[str, ...] | None = None,
                     normalize: str | None = None) -> PixelViewModel:
    """Lay out a (rows x cols) matrix under a view state.

    ``normalize`` may be "per-row" or "global": values are divided by the
    row (or matrix) maximum before color mapping, for count matrices whose
    rows span different magnitudes. None maps raw values through the scale.
    """
    v = np.asarray(matrix, dtype=np.float64)
    if v.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    rows, cols = v.shape
    if sorted(state.row_permutation) != list(range(rows)) or sorted(
        state.col_permutation
    ) != list(range(cols)):
        raise ValueError("view state does not match matrix dimensions")
    if normalize not in (None, "per-row", "global"):
        raise ValueError("normalize must be None, 'per-row' or 'global'")

    shown = v
    if normalize == "per-row":
        peak = np.abs(v).max(axis=1, keepdims=True)
        shown = np.divide(v, peak, out=np.zeros_like(v), where=peak > 0)
    elif normalize == "global":
        peak = np.abs(v).max()
        shown = v / peak if peak > 0 else np.zeros_like(v)

    cs = int(cell_size)
    slots, gaps = _display_columns(state)
    xs: list[int] = []
    x = PAD_LEFT
    for i, _ in enumerate(slots):
        xs.append(x)
        x += cs
        if i in gaps:
            x += 2 * cs
    grid_h = rows * cs

    rects: dict[tuple[int, int], tuple[int, int, int, int]] = {}
    colors: dict[tuple[int, int], RGB] = {}
    placeholders: list[tuple[int, int, int, int, int]] = []
    for slot_i, (kind, ident, count) in enumerate(slots):
        if kind == "placeholder":
            placeholders.append((xs[slot_i], PAD_TOP, cs, grid_h, count))
            continue
        for disp_r, r in enumerate(state.row_permutation):
            rects[(r, ident)] = (xs[slot_i], PAD_TOP + disp_r * cs, cs, cs)
            colors[(r, ident)] = color_of(scale, float(shown[r, ident]))

    row_names = row_labels if row_labels is not None else tuple(str(r) for r in range(rows))
    col_names = col_labels if col_labels is not None else tuple(str(c) for c in range(cols))
    row_texts = tuple(
        (PAD_LEFT - 6, PAD_TOP + disp_r * cs + (cs * 3) // 4, row_names[r])
        for disp_r, r in enumerate(state.row_permutation)
    )
    stride = max(1, math.ceil(len([s for s in slots if s[0] == "cell"]) / MAX_COL_LABELS))
    col_texts = []
    cell_counter = 0
    for slot_i, (kind, ident, _) in enumerate(slots):
        if kind != "cell":
            continue
        if cell_counter % stride == 0:
            col_texts.append(
                (xs[slot_i] + cs // 2, PAD_TOP + grid_h + 14, col_names[ident])
            )
        cell_counter += 1

    width = (xs[-1] + cs if xs else PAD_LEFT) + PAD_RIGHT
    height = PAD_TOP + grid_h + COL_LABEL_H + LEGEND_H + PAD_BOTTOM
    return PixelViewModel(
        rects, colors, row_texts, tuple(col_texts), tuple(placeholders),
        width, height, cs, scale,
    )


def _legend_svg(vm: PixelViewModel, y: int) -> list[str]:
    parts = [
        f'<text x="{PAD_LEFT}" y="{y + 12}" font-size="11" fill="#333333">'
        f"{vm.scale.kind} scale, domain [{vm.scale.domain[0]:g}, {vm.scale.domain[1]:g}]</text>"
    ]
    x = PAD_LEFT
    for pos, color in vm.scale.anchors:
        parts.append(
            f'<rect x="{x}" y="{y + 18}" width="14" height="14" fill="{_hex(color)}" stroke="#333333"/>'
        )
        parts.append(
            f'<text x="{x + 18}" y="{y + 29}" font-size="11" fill="#333333">{pos:g} {_hex(color)}</text>'
        )
        x += 110
    return parts


def export_svg(vm: PixelViewModel, path: str | Path) -> None:
    """Standalone SVG 1.1; byte-identical for identical view models."""
    if not vm.cell_rects:
        raise ValueError("nothing to render")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{vm.width}" '
        f'height="{vm.height}" font-family="sans-serif">',
        "<defs>",
        '<pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)">'
        '<rect width="6" height="6" fill="#BDBDBD"/>'
        '<line x1="0" y1="0" x2="0" y2="6" stroke="#8A8A8A" stroke-width="2"/>'
        "</pattern>",
        "</defs>",
        f'<rect x="0" y="0" width="{vm.width}" height="{vm.height}" fill="#FFFFFF"/>',
    ]
    for key in sorted(vm.cell_rects):
        x, y, w, h = vm.cell_rects[key]
        lines.append(
            f'<rect x="{x}" y="{y}" width="{w}" height="{h}" fill="{_hex(vm.cell_colors[key])}"/>'
        )
    for x, y, w, h, count in vm.placeholders:
        lines.append(f'<rect x="{x}" y="{y}" width="{w}" height="{h}" fill="url(#hatch)"/>')
        lines.append(
            f'<text x="{x + w // 2}" y="{y + h // 2 + 4}" font-size="10" '
            f'text-anchor="middle" fill="#333333">{count}</text>'
        )
    for x, y, text in vm.row_labels:
        lines.append(
            f'<text x="{x}" y="{y}" font-size="10" text-anchor="end" fill="#333333">{text}</text>'
        )
    for x, y, text in vm.col_labels:
        lines.append(
            f'<text x="{x}" y="{y}" font-size="10" text-anchor="middle" fill="#333333">{text}</text>'
        )
    legend_y = vm.height - LEGEND_H - PAD_BOTTOM
    lines.extend(_legend_svg(vm, legend_y))
    lines.append("</svg>")
    data = "\n".join(lines).encode("utf-8")
    Path(path).write_bytes(data)


def export_png(vm: PixelViewModel, path: str | Path, factor: int = 1) -> None:
    """Rasterize the same geometry with an integer scale factor."""
    from PIL import Image, ImageDraw

    if not vm.cell_rects:
        raise ValueError("nothing to render")
    f = int(factor)
    img = Image.new("RGB", (vm.width * f, vm.height * f), (255, 255, 255))
    draw = ImageDraw.Draw(img)
    for key in sorted(vm.cell_rects):
        x, y, w, h = (c * f for c in vm.cell_rects[key])
        draw.rectangle((x, y, x + w - 1, y + h - 1), fill=vm.cell_colors[key])
    for x, y, w, h, count in vm.placeholders:
        x, y, w, h = x * f, y * f, w * f, h * f
        draw.rectangle((x, y, x + w - 1, y + h - 1), fill=(189, 189, 189))
        for off in range(0, w + h, 6 * f):
            draw.line((x + off, y, x, y + off), fill=(138, 138, 138), width=f)
        draw.text((x + w // 2, y + h // 2), str(count), fill=(51, 51, 51), anchor="mm")
    for x, y, text in vm.row_labels:
        draw.text((x * f, y * f), text, fill=(51, 51, 51), anchor="rs")
    for x, y, text in vm.col_labels:
        draw.text((x * f, y * f), text, fill=(51, 51, 51), anchor="ms")
    img.save(path, format="PNG")

"""Self-contained SVG renderings of a sweep summary document."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .errors import MissingSeries

PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
           "#e377c2", "#7f7f7f"]

W, H = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 60, 170, 40, 50


def _model_entry(summary: dict, model):
    models = summary.get("models") or {}
    if not models:
        raise MissingSeries("summary holds no model series")
    key = model if model is not None else next(iter(models))
    key = str(getattr(key, "value", key)).upper()
    if key not in models:
        raise MissingSeries(f"model {key} not in summary")
    return key, models[key]


def _axes(title, x0, x1, y0, y1, xlabel, ylabel):
    pw, ph = W - LEFT - RIGHT, H - TOP - BOTTOM
    parts = [
        f'<text x="{W / 2:.1f}" y="22" text-anchor="middle" font-size="15">{escape(title)}</text>',
        f'<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="#333"/>',
    ]
    for k in range(6):
        fx = k / 5
        xv = x0 + fx * (x1 - x0)
        yv = y0 + fx * (y1 - y0)
        px = LEFT + fx * pw
        py = TOP + ph - fx * ph
        parts.append(f'<text x="{px:.1f}" y="{TOP + ph + 16}" text-anchor="middle" '
                     f'font-size="10">{xv:.2f}</text>')
        parts.append(f'<text x="{LEFT - 6}" y="{py + 3:.1f}" text-anchor="end" '
                     f'font-size="10">{yv:.2f}</text>')
    parts.append(f'<text x="{LEFT + pw / 2:.1f}" y="{H - 12}" text-anchor="middle" '
                 f'font-size="12">{escape(xlabel)}</text>')
    parts.append(f'<text x="16" y="{TOP + ph / 2:.1f}" text-anchor="middle" font-size="12" '
                 f'transform="rotate(-90 16 {TOP + ph / 2:.1f})">{escape(ylabel)}</text>')
    return parts


def _mapper(x0, x1, y0, y1):
    pw, ph = W - LEFT - RIGHT, H - TOP - BOTTOM

    def to_px(x, y):
        fx = (x - x0) / (x1 - x0) if x1 > x0 else 0.5
        fy = (y - y0) / (y1 - y0) if y1 > y0 else 0.5
        return LEFT + fx * pw, TOP + ph - fy * ph
    return to_px


def _legend(names):
    parts = []
    for i, name in enumerate(names):
        y = TOP + 14 + 18 * i
        x = W - RIGHT + 14
        parts.append(f'<line x1="{x}" y1="{y}" x2="{x + 22}" y2="{y}" '
                     f'stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="2"/>')
        parts.append(f'<text x="{x + 28}" y="{y + 4}" font-size="11">{escape(name)}</text>')
    return parts


def _document(width, height, body):
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">\n'
            f'<rect width="{width}" height="{height}" fill="white"/>\n'
            + "\n".join(body) + "\n</svg>\n")


def _render_histogram(summary, model):
    key, entry = _model_entry(summary, model)
    series = entry.get("histogram")
    if not series:
        raise MissingSeries(f"no histogram series for {key}")
    lo, hi = summary.get("histogram", {}).get("range", [0.5, 1.0])
    bins = summary.get("histogram", {}).get("bins", len(next(iter(series.values()))))
    width = (hi - lo) / bins
    ymax = max(d for pts in series.values() for _, d in pts) or 1.0
    to_px = _mapper(lo, hi, 0.0, ymax)
    body = _axes(f"{key}: distribution of r_b", lo, hi, 0.0, ymax, "r_b", "density")
    for i, (name, pts) in enumerate(series.items()):
        path = []
        for c, d in pts:
            xa, ya = to_px(c - width / 2, d)
            xb, _ = to_px(c + width / 2, d)
            path.append(f"{'M' if not path else 'L'}{xa:.2f},{ya:.2f} L{xb:.2f},{ya:.2f}")
        body.append(f'<path d="{" ".join(path)}" fill="none" '
                    f'stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="1.5"/>')
    body.extend(_legend(list(series)))
    return _document(W, H, body)


def _render_ecdf(summary, model):
    key, entry = _model_entry(summary, model)
    series = entry.get("ecdf")
    if not series:
        raise MissingSeries(f"no ecdf series for {key}")
    xs = [x for pts in series.values() for x, _ in pts]
    x0, x1 = min(xs), max(xs)
    if x1 - x0 < 1e-9:
        x0, x1 = x0 - 0.05, x1 + 0.05
    to_px = _mapper(x0, x1, 0.0, 1.0)
    body = _axes(f"{key}: empirical CDF of r_b", x0, x1, 0.0, 1.0, "r_b", "F(r_b)")
    for i, (name, pts) in enumerate(series.items()):
        px, py = to_px(x0, 0.0)
        path = [f"M{px:.2f},{py:.2f}"]
        for x, f in pts:
            sx, _ = to_px(x, 0.0)
            _, sy = to_px(x, f)
            path.append(f"H{sx:.2f} V{sy:.2f}")
        ex, _ = to_px(x1, 1.0)
        path.append(f"H{ex:.2f}")
        body.append(f'<path d="{" ".join(path)}" fill="none" '
                    f'stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="1.5"/>')
    body.extend(_legend(list(series)))
    return _document(W, H, body)


def _shade(value, high):
    value = min(max(value, 0.0), 1.0)
    lo = (247, 251, 255)
    return "#%02x%02x%02x" % tuple(round(a + (b - a) * value) for a, b in zip(lo, high))


def _grid(names, matrix, x_off, title, high):
    cell = 46
    top = 70
    parts = [f'<text x="{x_off + cell * len(names) / 2:.1f}" y="{top - 40}" '
             f'text-anchor="middle" font-size="13">{escape(title)}</text>']
    for j, name in enumerate(names):
        cx = x_off + cell * j + cell / 2
        parts.append(f'<text x="{cx:.1f}" y="{top - 6}" text-anchor="start" font-size="9" '
                     f'transform="rotate(-35 {cx:.1f} {top - 6})">{escape(name)}</text>')
    for i, row in enumerate(matrix):
        y = top + cell * i
        for j, v in enumerate(row):
            x = x_off + cell * j
            parts.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                         f'fill="{_shade(v, high)}" stroke="#999"/>')
            colour = "white" if v > 0.6 else "black"
            parts.append(f'<text x="{x + cell / 2}" y="{y + cell / 2 + 4}" text-anchor="middle" '
                         f'font-size="10" fill="{colour}">{v:.3f}</text>')
    return parts


def _render_heatmap(summary, model):
    key, entry = _model_entry(summary, model)
    if "superiority" not in entry or "similarity" not in entry:
        raise MissingSeries(f"no comparison matrices for {key}")
    names = entry["methods"]
    cell = 46
    label_w = 110
    span = cell * len(names)
    body = []
    for i, name in enumerate(names):
        y = 70 + cell * i + cell / 2 + 4
        body.append(f'<text x="{label_w - 6}" y="{y}" text-anchor="end" '
                    f'font-size="10">{escape(name)}</text>')
    body += _grid(names, entry["superiority"], label_w, f"{key}: fraction r_b(row) > r_b(col)",
                  (8, 48, 107))
    body += _grid(names, entry["similarity"], label_w + span + 40,
                  f"{key}: fraction r_b(row) = r_b(col)", (103, 0, 13))
    return _document(label_w + 2 * span + 60, 70 + span + 20, body)


def render_svg(summary: dict, kind: str, model=None) -> str:
    """Render ``kind`` in {histogram, ecdf, heatmap} for one model of the summary."""
    renderers = {"histogram": _render_histogram, "ecdf": _render_ecdf,
                 "heatmap": _render_heatmap}
    if kind not in renderers:
        raise ValueError(f"unknown plot kind {kind!r}")
    return renderers[kind](summary, model)

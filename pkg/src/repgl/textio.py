"""Text and JSON formats for bipartitions, and diagram rendering.

Bipartitions are written ``[3,3,1|2]``; the empty partition is an empty
list, so the unit is ``[|]``.  The JSON form is
``{"black": [3, 3, 1], "white": [2]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from html import escape

from .bipartition import Bipartition, BipartitionMultiset, Partition
from .diagrams import CapDiagram, WeightDiagram
from .errors import ParseError

__all__ = [
    "parse_bipartition",
    "format_bipartition",
    "bipartition_to_json",
    "RenderSpec",
    "render",
    "diagram_to_json",
    "format_multiset",
    "multiset_to_json",
]


def format_bipartition(lam: Bipartition) -> str:
    return str(lam)


def bipartition_to_json(lam: Bipartition) -> dict:
    return {"black": list(lam.black.parts), "white": list(lam.white.parts)}


def _check_parts(parts: list[int], positions: list[int]) -> Partition:
    for p, pos in zip(parts, positions):
        if p < 0:
            raise ParseError("negative part", pos)
    for k in range(1, len(parts)):
        if parts[k] > parts[k - 1]:
            raise ParseError("parts must be weakly decreasing", positions[k])
    return Partition(tuple(parts))


def _parse_json(text: str) -> Bipartition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(data, dict) or set(data) != {"black", "white"}:
        raise ParseError('JSON form needs exactly the keys "black" and "white"', 0)
    parts = []
    for key in ("black", "white"):
        value = data[key]
        if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
            raise ParseError(f'"{key}" must be a list of integers', 0)
        parts.append(_check_parts(value, [0] * len(value)))
    return Bipartition(*parts)


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``[a,b,...|c,d,...]`` or the JSON object form.

    >>> parse_bipartition("[3,3,1|2]")
    Bipartition((3, 3, 1), (2,))
    >>> parse_bipartition("[|]")
    Bipartition((), ())
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if stripped.startswith("{"):
        return _parse_json(text)
    if not stripped.startswith("["):
        raise ParseError("expected '['", offset)
    if not stripped.endswith("]"):
        raise ParseError("expected ']' at end", offset + len(stripped) - 1)
    body = stripped[1:-1]
    if "|" not in body:
        raise ParseError("expected '|' between the black and white parts", offset + len(stripped) - 1)
    if body.count("|") > 1:
        raise ParseError("more than one '|'", offset + 1 + body.index("|", body.index("|") + 1))
    sides = []
    start = offset + 1
    for chunk in body.split("|"):
        parts, positions = [], []
        if chunk.strip() not in ("", "∅"):
            pos = start
            for item in chunk.split(","):
                lead = len(item) - len(item.lstrip())
                token = item.strip()
                try:
                    parts.append(int(token))
                except ValueError:
                    raise ParseError(f"expected an integer, got {token!r}", pos + lead) from None
                positions.append(pos + lead)
                pos += len(item) + 1
        sides.append(_check_parts(parts, positions))
        start += len(chunk) + 1
    return Bipartition(*sides)


def format_multiset(ms: BipartitionMultiset) -> str:
    """One summand per line, ``multiplicity × [..|..]``, largest first."""
    return "\n".join(f"{mult} × {lam}" for lam, mult in ms.sorted_items())


def multiset_to_json(ms: BipartitionMultiset) -> dict[str, int]:
    return {str(lam): mult for lam, mult in ms.sorted_items()}


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    window: tuple[int, int] | None = None

    def __post_init__(self):
        if self.format not in ("ascii", "svg", "json"):
            raise ValueError(f"unknown render format {self.format!r}")


def _split(diagram) -> tuple[WeightDiagram, tuple[tuple[int, int], ...] | None]:
    if isinstance(diagram, CapDiagram):
        return diagram.base, diagram.caps
    return diagram, None


def _window(wd: WeightDiagram, spec: RenderSpec, default: tuple[int, int]) -> tuple[int, int]:
    if spec.window is None:
        return default
    lo, hi = spec.window
    if lo > hi:
        raise ValueError(f"empty window override {spec.window}")
    if wd.lo <= wd.hi and (lo > wd.lo or hi < wd.hi):
        raise ValueError(f"window override {spec.window} does not contain the diagram window ({wd.lo}, {wd.hi})")
    return lo, hi


def diagram_to_json(diagram, spec: RenderSpec = RenderSpec("json")) -> dict:
    wd, caps = _split(diagram)
    lo, hi = _window(wd, spec, (wd.lo, wd.hi))
    out = {"lo": lo, "hi": hi, "delta": wd.delta, "labels": [wd.label(v).value for v in range(lo, hi + 1)]}
    if caps is not None:
        out["caps"] = [list(c) for c in caps]
    return out


def _depths(caps) -> dict[tuple[int, int], int]:
    depth = {}
    for cap in sorted(caps, key=lambda c: c[1] - c[0]):
        inner = [depth[c] for c in depth if cap[0] < c[0] and c[1] < cap[1]]
        depth[cap] = 1 + max(inner, default=0)
    return depth


def _render_ascii(wd: WeightDiagram, caps, lo: int, hi: int) -> str:
    vertices = range(lo, hi + 1)
    width = max(len(str(v)) for v in vertices)
    left, right = "^… ", " …v"

    def col(v):
        return len(left) + (v - lo) * (width + 1) + width - 1

    symbols = left + " ".join(wd.label(v).value.rjust(width) for v in vertices) + right
    ruler = " " * len(left) + " ".join(str(v).rjust(width) for v in vertices)
    lines = []
    if caps:
        depth = _depths(caps)
        for level in range(max(depth.values()), 0, -1):
            row = [" "] * len(symbols)
            for (i, j), d in depth.items():
                if d == level:
                    row[col(i)] = "["
                    for k in range(col(i) + 1, col(j)):
                        row[k] = "-"
                    row[col(j)] = "]"
            lines.append("".join(row).rstrip())
    lines += [symbols, ruler]
    return "\n".join(lines) + "\n"


def _render_svg(wd: WeightDiagram, caps, lo: int, hi: int) -> str:
    step, pad = 40, 30
    count = hi - lo + 1
    reach = max((j - i for i, j in caps or ()), default=0)
    top = pad + step * reach // 2
    base = top + 20
    width = 2 * pad + step * max(count - 1, 0)
    height = base + 40

    def x(v):
        return pad + (v - lo) * step

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<line x1="{x(lo) - pad // 2}" y1="{base}" x2="{x(hi) + pad // 2}" y2="{base}" stroke="black"/>',
    ]
    for v in range(lo, hi + 1):
        parts.append(f'<text x="{x(v)}" y="{base + 5}" text-anchor="middle" font-family="monospace" font-size="16">{escape(wd.label(v).value)}</text>')
        weight = ' font-weight="bold"' if v == 0 else ""
        parts.append(f'<text x="{x(v)}" y="{base + 30}" text-anchor="middle" font-family="monospace" font-size="11"{weight}>{v}</text>')
    for i, j in caps or ():
        r = (x(j) - x(i)) / 2
        parts.append(f'<path d="M {x(i)} {base - 12} A {r:g} {r:g} 0 0 1 {x(j)} {base - 12}" fill="none" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(diagram, spec: RenderSpec = RenderSpec()) -> str:
    """Render a weight or cap diagram as ASCII art, SVG, or JSON text."""
    wd, caps = _split(diagram)
    if spec.format == "json":
        return json.dumps(diagram_to_json(diagram, spec), ensure_ascii=False) + "\n"
    default = (min(wd.lo, 0), max(wd.hi, 1))
    lo, hi = _window(wd, spec, default)
    if spec.format == "ascii":
        return _render_ascii(wd, caps, lo, hi)
    return _render_svg(wd, caps, lo, hi)

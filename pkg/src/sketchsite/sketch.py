"""Vector sketch model, validation, and SVG serialization.

The sketch is the user's layout intent: an ordered list of drawing primitives
on a fixed-size canvas. Coordinates are top-left origin, y-down, matching both
SVG and browser canvas conventions, so no transform is needed at the UI
boundary. Serialization clips geometry to the canvas and is byte-deterministic
for equal inputs.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Any
from xml.sax.saxutils import escape

from .errors import ValidationFailed

MIN_CANVAS = 64
MAX_CANVAS = 4096

ELEMENT_KINDS = ("freehand-stroke", "rectangle", "ellipse", "line", "text-label")

# Point-count requirement per element kind; freehand strokes need at least 2.
_EXACT_POINTS = {"rectangle": 2, "ellipse": 2, "line": 2, "text-label": 1}

TEXT_FONT_SIZE = 16
DEFAULT_STROKE_WIDTH = 3


@dataclass(frozen=True)
class SketchElement:
    """One drawing primitive: stroke, shape, line, or text label."""

    kind: str
    points: tuple[tuple[float, float], ...]
    stroke_width: float = DEFAULT_STROKE_WIDTH
    label_text: str | None = None

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "SketchElement":
        points = tuple((float(x), float(y)) for x, y in raw.get("points", ()))
        return cls(
            kind=raw.get("kind", ""),
            points=points,
            stroke_width=float(raw.get("stroke_width", DEFAULT_STROKE_WIDTH)),
            label_text=raw.get("label_text"),
        )

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": self.kind,
            "points": [[x, y] for x, y in self.points],
            "stroke_width": self.stroke_width,
        }
        if self.label_text is not None:
            out["label_text"] = self.label_text
        return out


@dataclass(frozen=True)
class SketchDocument:
    """A canvas of given pixel dimensions plus an ordered element list."""

    width: int
    height: int
    elements: tuple[SketchElement, ...] = field(default_factory=tuple)

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "SketchDocument":
        return cls(
            width=int(raw["width"]),
            height=int(raw["height"]),
            elements=tuple(SketchElement.from_dict(e) for e in raw.get("elements", ())),
        )

    @classmethod
    def from_json(cls, text: str) -> "SketchDocument":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict[str, Any]:
        return {
            "width": self.width,
            "height": self.height,
            "elements": [e.to_dict() for e in self.elements],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_sketch; violations are data, not exceptions."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_sketch(doc: SketchDocument, allow_empty_sketch: bool = False) -> ValidationReport:
    """Check every document invariant; never mutates or raises.

    Returns a report listing each violation: bad canvas dimensions, malformed
    elements, or an empty sketch without opt-in.
    """
    violations: list[str] = []
    for name, value in (("width", doc.width), ("height", doc.height)):
        if not isinstance(value, int) or not (MIN_CANVAS <= value <= MAX_CANVAS):
            violations.append(f"{name} must be an integer in [{MIN_CANVAS}, {MAX_CANVAS}], got {value!r}")

    if not doc.elements and not allow_empty_sketch:
        violations.append("empty sketch (submit with allow_empty_sketch=true to permit)")

    for i, el in enumerate(doc.elements):
        where = f"element {i}"
        if el.kind not in ELEMENT_KINDS:
            violations.append(f"{where}: unknown kind {el.kind!r}")
            continue
        expected = _EXACT_POINTS.get(el.kind)
        if expected is not None and len(el.points) != expected:
            violations.append(f"{where}: {el.kind} requires exactly {expected} point(s), got {len(el.points)}")
        elif el.kind == "freehand-stroke" and len(el.points) < 2:
            violations.append(f"{where}: freehand-stroke requires at least 2 points, got {len(el.points)}")
        if el.kind == "text-label" and not (el.label_text or "").strip():
            violations.append(f"{where}: text-label requires nonempty label_text")
        if el.stroke_width <= 0:
            violations.append(f"{where}: stroke_width must be positive, got {el.stroke_width}")
    return ValidationReport(tuple(violations))


def require_valid(doc: SketchDocument, allow_empty_sketch: bool = False) -> None:
    """Raise ValidationFailed if the document breaks any invariant."""
    report = validate_sketch(doc, allow_empty_sketch)
    if not report.ok:
        raise ValidationFailed({"sketch": "; ".join(report.violations)})


def _fmt(value: float) -> str:
    # Stable minimal numeric form: ints without a decimal point, floats
    # rounded to 2 places with trailing zeros stripped.
    rounded = round(float(value), 2)
    if rounded == int(rounded):
        return str(int(rounded))
    return f"{rounded:.2f}".rstrip("0").rstrip(".")


def serialize_svg(doc: SketchDocument) -> str:
    """Serialize a validated sketch to a standalone SVG document.

    Emits elements in document order with black strokes on a white background.
    Coordinates are clamped to the canvas so no emitted coordinate lies outside
    [0, width] x [0, height]. Output is byte-deterministic for equal inputs.
    """

    def clamp(p: tuple[float, float]) -> tuple[float, float]:
        x, y = p
        return (min(max(x, 0.0), float(doc.width)), min(max(y, 0.0), float(doc.height)))

    w, h = doc.width, doc.height
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="#ffffff"/>',
    ]
    for el in doc.elements:
        pts = [clamp(p) for p in el.points]
        sw = _fmt(el.stroke_width)
        stroke = f'fill="none" stroke="#000000" stroke-width="{sw}"'
        if el.kind == "rectangle":
            (x1, y1), (x2, y2) = pts
            x, y = min(x1, x2), min(y1, y2)
            rw, rh = abs(x2 - x1), abs(y2 - y1)
            lines.append(f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(rw)}" height="{_fmt(rh)}" {stroke}/>')
        elif el.kind == "ellipse":
            (x1, y1), (x2, y2) = pts
            cx, cy = (x1 + x2) / 2, (y1 + y2) / 2
            rx, ry = abs(x2 - x1) / 2, abs(y2 - y1) / 2
            lines.append(f'<ellipse cx="{_fmt(cx)}" cy="{_fmt(cy)}" rx="{_fmt(rx)}" ry="{_fmt(ry)}" {stroke}/>')
        elif el.kind == "line":
            (x1, y1), (x2, y2) = pts
            lines.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="#000000" stroke-width="{sw}"/>'
            )
        elif el.kind == "freehand-stroke":
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            lines.append(
                f'<polyline points="{coords}" {stroke} stroke-linecap="round" stroke-linejoin="round"/>'
            )
        elif el.kind == "text-label":
            (x, y) = pts[0]
            text = escape(el.label_text or "")
            lines.append(
                f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="sans-serif" '
                f'font-size="{TEXT_FONT_SIZE}" fill="#000000">{text}</text>'
            )
        else:  # pragma: no cover - guarded by validate_sketch
            raise ValidationFailed({"sketch": f"unknown element kind {el.kind!r}"})
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def check_svg_wellformed(svg_text: str) -> tuple[int, int]:
    """Well-formedness check for raw SVG submissions.

    Returns the parsed (width, height). Raises ValidationFailed when the text
    is not parseable XML, the root is not <svg>, or pixel dimensions cannot be
    determined from width/height attributes or the viewBox.
    """
    try:
        root = ET.fromstring(svg_text)
    except ET.ParseError as exc:
        raise ValidationFailed({"svg": f"not well-formed XML: {exc}"}) from exc
    tag = root.tag.rsplit("}", 1)[-1]
    if tag != "svg":
        raise ValidationFailed({"svg": f"root element is <{tag}>, expected <svg>"})
    dims = _svg_dimensions(root)
    if dims is None:
        raise ValidationFailed({"svg": "missing usable width/height or viewBox"})
    return dims


def _svg_dimensions(root: ET.Element) -> tuple[int, int] | None:
    def parse_px(value: str | None) -> float | None:
        if not value:
            return None
        value = value.strip().removesuffix("px")
        try:
            return float(value)
        except ValueError:
            return None

    w = parse_px(root.get("width"))
    h = parse_px(root.get("height"))
    if w is None or h is None:
        viewbox = (root.get("viewBox") or "").replace(",", " ").split()
        if len(viewbox) == 4:
            try:
                w = w if w is not None else float(viewbox[2])
                h = h if h is not None else float(viewbox[3])
            except ValueError:
                return None
    if w is None or h is None or w <= 0 or h <= 0:
        return None
    return int(round(w)), int(round(h))

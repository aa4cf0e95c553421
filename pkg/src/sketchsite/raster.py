"""Deterministic JPG rasterization for the sketch SVG subset.

Renders with Pillow's ImageDraw rather than an external SVG engine so the
output bytes are a pure function of (svg text, quality, pinned Pillow
version). Only the primitives emitted by serialize_svg are supported; raw SVG
submissions using anything else fail with RasterizationError. The active
configuration is exported for the job manifest so determinism claims stay
auditable.
"""

from __future__ import annotations

import hashlib
import io
import xml.etree.ElementTree as ET
from dataclasses import dataclass

import PIL
from PIL import Image, ImageDraw, ImageFont

from .errors import DimensionOverflowError, RasterizationError
from .sketch import _svg_dimensions

DEFAULT_JPG_QUALITY = 85
MAX_PIXELS = 16_000_000  # 16 megapixels

RASTERIZER_CONFIG = {
    "engine": "pillow-imagedraw-subset",
    "pillow_version": PIL.__version__,
    "font": "pillow-builtin-16px",
}

# Metadata-ish tags that are safe to skip when rasterizing raw SVG uploads.
_IGNORED_TAGS = {"title", "desc", "metadata"}
_SUPPORTED_TAGS = {"rect", "ellipse", "circle", "line", "polyline", "text"}


@dataclass(frozen=True)
class RasterImage:
    """An encoded JPG plus its dimensions and a stable digest of the bytes."""

    width: int
    height: int
    format: str
    data: bytes
    content_hash: str

    @classmethod
    def from_jpg_bytes(cls, data: bytes) -> "RasterImage":
        with Image.open(io.BytesIO(data)) as img:
            width, height = img.size
        return cls(width, height, "jpg", data, hashlib.sha256(data).hexdigest())


def rasterize(svg_text: str, quality: int = DEFAULT_JPG_QUALITY) -> RasterImage:
    """Render SVG text to a JPG at its native pixel dimensions.

    Raises RasterizationError for malformed or unsupported SVG and
    DimensionOverflowError when the pixel area exceeds 16 megapixels.
    """
    if not (1 <= quality <= 100):
        raise ValueError(f"quality must be in 1..100, got {quality}")
    try:
        root = ET.fromstring(svg_text)
    except ET.ParseError as exc:
        raise RasterizationError(f"malformed SVG: {exc}") from exc
    if root.tag.rsplit("}", 1)[-1] != "svg":
        raise RasterizationError("root element is not <svg>")
    dims = _svg_dimensions(root)
    if dims is None:
        raise RasterizationError("SVG has no usable width/height or viewBox")
    width, height = dims
    if width * height > MAX_PIXELS:
        raise DimensionOverflowError(f"raster area {width}x{height} exceeds {MAX_PIXELS} pixels")

    img = Image.new("RGB", (width, height), "#ffffff")
    draw = ImageDraw.Draw(img)
    for node in root:
        _draw_node(draw, node)

    buf = io.BytesIO()
    img.save(buf, format="JPEG", quality=quality)
    data = buf.getvalue()
    return RasterImage(width, height, "jpg", data, hashlib.sha256(data).hexdigest())


def _float(node: ET.Element, attr: str, default: float | None = None) -> float:
    raw = node.get(attr)
    if raw is None:
        if default is None:
            raise RasterizationError(f"<{_tag(node)}> missing required attribute {attr!r}")
        return default
    try:
        return float(raw.strip().removesuffix("px"))
    except ValueError as exc:
        raise RasterizationError(f"<{_tag(node)}> has non-numeric {attr}={raw!r}") from exc


def _tag(node: ET.Element) -> str:
    return node.tag.rsplit("}", 1)[-1]


def _stroke_width(node: ET.Element) -> int:
    return max(1, int(round(_float(node, "stroke-width", 1.0))))


def _color(value: str | None, default: str | None) -> str | None:
    if value is None:
        return default
    value = value.strip()
    if value in ("", "none", "transparent"):
        return None
    return value


def _draw_node(draw: ImageDraw.ImageDraw, node: ET.Element) -> None:
    tag = _tag(node)
    if tag in _IGNORED_TAGS:
        return
    if tag not in _SUPPORTED_TAGS:
        raise RasterizationError(f"unsupported SVG element <{tag}> (subset renderer)")

    stroke = _color(node.get("stroke"), None)
    fill = _color(node.get("fill"), "#000000" if tag != "text" else None)
    width = _stroke_width(node)

    if tag == "rect":
        x, y = _float(node, "x", 0.0), _float(node, "y", 0.0)
        w, h = _float(node, "width"), _float(node, "height")
        box = (x, y, x + w, y + h)
        draw.rectangle(box, fill=fill, outline=stroke, width=width)
    elif tag in ("ellipse", "circle"):
        cx, cy = _float(node, "cx", 0.0), _float(node, "cy", 0.0)
        if tag == "circle":
            rx = ry = _float(node, "r")
        else:
            rx, ry = _float(node, "rx"), _float(node, "ry")
        box = (cx - rx, cy - ry, cx + rx, cy + ry)
        draw.ellipse(box, fill=fill, outline=stroke, width=width)
    elif tag == "line":
        pts = [
            (_float(node, "x1", 0.0), _float(node, "y1", 0.0)),
            (_float(node, "x2", 0.0), _float(node, "y2", 0.0)),
        ]
        draw.line(pts, fill=stroke or "#000000", width=width)
    elif tag == "polyline":
        pts = _parse_points(node)
        if len(pts) >= 2:
            draw.line(pts, fill=stroke or "#000000", width=width, joint="curve")
        elif pts:
            draw.point(pts, fill=stroke or "#000000")
    elif tag == "text":
        x, y = _float(node, "x", 0.0), _float(node, "y", 0.0)
        size = int(round(_float(node, "font-size", 16.0)))
        font = ImageFont.load_default(size=size)
        # SVG text y is the baseline; anchor "ls" matches that convention.
        draw.text((x, y), "".join(node.itertext()), font=font, fill=fill or "#000000", anchor="ls")


def _parse_points(node: ET.Element) -> list[tuple[float, float]]:
    raw = (node.get("points") or "").replace(",", " ").split()
    if len(raw) % 2 != 0:
        raise RasterizationError("<polyline> has an odd number of coordinates")
    try:
        coords = [float(v) for v in raw]
    except ValueError as exc:
        raise RasterizationError(f"<polyline> has non-numeric points: {exc}") from exc
    return list(zip(coords[0::2], coords[1::2]))

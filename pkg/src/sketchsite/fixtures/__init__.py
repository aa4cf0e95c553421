"""Deterministic demo environment: sketch, catalog, and mock seed corpus.

The mock LLM corpus is keyed by request fingerprints, which depend on the
rasterized sketch bytes and every intermediate text, so the corpus is derived
at build time by dry-running the pipeline's request builders against the
authored response texts in texts.py. That keeps the fixtures self-consistent
under any pinned rasterizer version without committing binary blobs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..codegen import (
    RefinementSuggestions,
    WebsiteVersion,
    build_code_request,
    build_suggestions_request,
    merge_theme,
)
from ..gateway import ModelRequest, corpus_filename
from ..images import ImageClient, ImageProviderConfig, ResolvedPrd, resolve, size_to_query, substitute
from ..prd import ProductRequirementsDocument, ThemePrompt, build_prd_request
from ..raster import RasterImage, rasterize
from ..sketch import SketchDocument, SketchElement, serialize_svg
from . import texts

DEMO_THEME = texts.DEMO_THEME
DEMO_ITERATIONS = 4


def demo_sketch_document() -> SketchDocument:
    """The bundled layout sketch: header, hero, portrait, gallery row, footer."""
    return SketchDocument(
        width=800,
        height=600,
        elements=(
            SketchElement("rectangle", ((20, 20), (780, 70)), stroke_width=2),
            SketchElement("text-label", ((40, 55),), label_text="logo"),
            SketchElement("line", ((600, 30), (760, 30)), stroke_width=2),
            SketchElement("rectangle", ((20, 90), (780, 280)), stroke_width=3),
            SketchElement("text-label", ((330, 190),), label_text="hero photo"),
            SketchElement("ellipse", ((40, 300), (160, 420)), stroke_width=2),
            SketchElement("text-label", ((200, 360),), label_text="about text"),
            SketchElement("rectangle", ((20, 440), (260, 560)), stroke_width=2),
            SketchElement("rectangle", ((280, 440), (520, 560)), stroke_width=2),
            SketchElement("rectangle", ((540, 440), (780, 560)), stroke_width=2),
            SketchElement("text-label", ((350, 505),), label_text="gallery"),
            SketchElement(
                "freehand-stroke",
                ((20, 580), (120, 572), (240, 586), (400, 574), (560, 584), (780, 578)),
                stroke_width=2,
            ),
        ),
    )


@dataclass(frozen=True)
class DemoEnvironment:
    """Everything a mock-provider pipeline run needs, plus expected values."""

    corpus_dir: Path
    catalog_path: Path
    sketch_json_path: Path
    sketch_svg_path: Path
    theme: str
    iterations: int
    sketch_raster: RasterImage
    prd_text: str
    resolved_prd: ResolvedPrd
    expected_html: tuple[str, ...]
    expected_suggestions: tuple[str, ...]


def build_demo_environment(dest: Path, iterations: int = DEMO_ITERATIONS) -> DemoEnvironment:
    """Materialize the demo fixtures under `dest` and return their description."""
    if not (0 <= iterations <= DEMO_ITERATIONS):
        raise ValueError(f"demo corpus covers 0..{DEMO_ITERATIONS} iterations, got {iterations}")
    dest = Path(dest)
    corpus_dir = dest / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)

    doc = demo_sketch_document()
    svg = serialize_svg(doc)
    raster = rasterize(svg)
    theme = ThemePrompt(DEMO_THEME)

    sketch_json_path = dest / "sketch.json"
    sketch_json_path.write_text(doc.to_json(), encoding="utf-8")
    sketch_svg_path = dest / "sketch.svg"
    sketch_svg_path.write_text(svg, encoding="utf-8")

    catalog_path = dest / "catalog.json"
    catalog_path.write_text(json.dumps(texts.IMAGE_CATALOG, indent=2), encoding="utf-8")

    def record(req: ModelRequest, response_text: str) -> None:
        (corpus_dir / corpus_filename(req)).write_text(response_text, encoding="utf-8")

    # Writing stage.
    record(build_prd_request(raster, theme), texts.PRD_RESPONSE)
    prd = ProductRequirementsDocument.from_text(texts.PRD_RESPONSE, source_request_hash="fixture")

    # Resolution of the authored PRD against the catalog.
    client = ImageClient(ImageProviderConfig.mock(catalog_path))
    resolved_images = resolve([size_to_query(d) for d in prd.descriptors], client)
    resolved = substitute(prd, list(zip(prd.descriptors, resolved_images)))
    image_urls = {img.query_term: img.url for img in resolved_images}

    # Coding stage: version 0 then iterations of analyze -> merge -> refine.
    expected_html: list[str] = []
    expected_suggestions: list[str] = []
    v_html = texts.website_html(0, image_urls)
    record(build_code_request(resolved, theme.text, "initial_code"), texts.code_response(0, v_html))
    expected_html.append(_fence_interior(texts.code_response(0, v_html)))

    for i in range(1, iterations + 1):
        parent = WebsiteVersion.create(i - 1, expected_html[i - 1], None if i == 1 else f"s{i - 1}")
        suggestion_text = texts.SUGGESTIONS[i - 1]
        record(build_suggestions_request(parent, theme), suggestion_text)
        expected_suggestions.append(suggestion_text)

        enhanced = merge_theme(theme, RefinementSuggestions(suggestion_text, i - 1))
        response = texts.code_response(i, texts.website_html(i, image_urls))
        record(build_code_request(resolved, enhanced.text, "refine_code"), response)
        expected_html.append(_fence_interior(response))

    return DemoEnvironment(
        corpus_dir=corpus_dir,
        catalog_path=catalog_path,
        sketch_json_path=sketch_json_path,
        sketch_svg_path=sketch_svg_path,
        theme=DEMO_THEME,
        iterations=iterations,
        sketch_raster=raster,
        prd_text=texts.PRD_RESPONSE,
        resolved_prd=resolved,
        expected_html=tuple(expected_html),
        expected_suggestions=tuple(expected_suggestions),
    )


def _fence_interior(response_text: str) -> str:
    from ..gateway import extract_html_document

    return extract_html_document(response_text)

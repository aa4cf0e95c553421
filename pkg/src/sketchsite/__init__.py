"""Sketch + theme prompt -> multi-version website pipeline.

The pipeline runs three stages: sketching (validate, SVG, JPG raster),
writing (PRD generation with image placeholder resolution), and coding
(initial website plus an iterative refinement loop producing navigable
versions). All model and image providers sit behind deterministic mock
implementations so the whole pipeline can run offline and reproducibly.
"""

__version__ = "0.1.0"

from .codegen import (
    EnhancedTheme,
    LoopResult,
    RefinementSuggestions,
    WebsiteVersion,
    analyze,
    generate_initial,
    merge_theme,
    refine_once,
    run_refinement_loop,
)
from .descriptors import ImageDescriptor, parse_image_descriptors
from .gateway import (
    ImagePart,
    LlmClient,
    ModelRequest,
    ModelResponse,
    ProviderConfig,
    TextPart,
    extract_html_document,
    request_fingerprint,
)
from .images import (
    ImageClient,
    ImageProviderConfig,
    ImageQuery,
    ResolvedImage,
    ResolvedPrd,
    resolve,
    size_to_query,
    substitute,
)
from .prd import ProductRequirementsDocument, ThemePrompt, build_prd_request, generate_prd
from .raster import RasterImage, rasterize
from .sketch import (
    SketchDocument,
    SketchElement,
    ValidationReport,
    serialize_svg,
    validate_sketch,
)

__all__ = [
    "EnhancedTheme",
    "ImageClient",
    "ImageDescriptor",
    "ImagePart",
    "ImageProviderConfig",
    "ImageQuery",
    "LlmClient",
    "LoopResult",
    "ModelRequest",
    "ModelResponse",
    "ProductRequirementsDocument",
    "ProviderConfig",
    "RasterImage",
    "RefinementSuggestions",
    "ResolvedImage",
    "ResolvedPrd",
    "SketchDocument",
    "SketchElement",
    "TextPart",
    "ThemePrompt",
    "ValidationReport",
    "WebsiteVersion",
    "analyze",
    "build_prd_request",
    "extract_html_document",
    "generate_initial",
    "generate_prd",
    "merge_theme",
    "parse_image_descriptors",
    "rasterize",
    "refine_once",
    "request_fingerprint",
    "resolve",
    "run_refinement_loop",
    "serialize_svg",
    "size_to_query",
    "substitute",
    "validate_sketch",
]

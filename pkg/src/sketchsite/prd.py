"""Writing stage: (sketch raster, theme) -> Product Requirements Document."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import prompts
from .descriptors import ImageDescriptor, parse_image_descriptors
from .errors import ValidationFailed
from .gateway import (
    ImagePart,
    LlmClient,
    ModelRequest,
    TEMPERATURE_BY_TAG,
    TextPart,
    request_fingerprint,
)
from .raster import RasterImage

THEME_MAX_LEN = 2000


@dataclass(frozen=True)
class ThemePrompt:
    """The user's website theme/intent, 1..2000 characters."""

    text: str

    def validate(self) -> None:
        if not self.text.strip():
            raise ValidationFailed({"theme": "must be nonempty"})
        if len(self.text) > THEME_MAX_LEN:
            raise ValidationFailed({"theme": f"must be at most {THEME_MAX_LEN} characters, got {len(self.text)}"})


@dataclass(frozen=True)
class ProductRequirementsDocument:
    """The generated blueprint plus its parsed placeholder view.

    ``descriptors`` is derived: it always equals
    parse_image_descriptors(text) and can be recomputed at any time.
    """

    text: str
    descriptors: tuple[ImageDescriptor, ...]
    source_request_hash: str

    @classmethod
    def from_text(cls, text: str, source_request_hash: str) -> "ProductRequirementsDocument":
        return cls(
            text=text,
            descriptors=tuple(parse_image_descriptors(text)),
            source_request_hash=source_request_hash,
        )


def build_prd_request(sketch: RasterImage, theme: ThemePrompt) -> ModelRequest:
    """Build the prd-tagged request: sketch image first, then the theme text."""
    theme.validate()
    return ModelRequest(
        system_text=prompts.PRD_SYSTEM,
        user_parts=(ImagePart(sketch), TextPart(prompts.prd_user_text(theme.text))),
        request_tag="prd",
        temperature=TEMPERATURE_BY_TAG["prd"],
    )


def generate_prd(
    sketch: RasterImage,
    theme: ThemePrompt,
    client: LlmClient,
    warn: Callable[[str], None] | None = None,
) -> ProductRequirementsDocument:
    """Run the writing stage.

    A PRD with zero image descriptors is valid; it produces a warning (an
    imageless website is legitimate), never an error. Gateway errors
    propagate unchanged.
    """
    req = build_prd_request(sketch, theme)
    resp = client.complete(req)
    prd = ProductRequirementsDocument.from_text(resp.text, request_fingerprint(req))
    if not prd.descriptors and warn is not None:
        warn("PRD contains no [term(size)] image descriptors; page will have no stock imagery")
    return prd

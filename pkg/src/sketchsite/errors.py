"""Exception hierarchy shared across the pipeline."""

from __future__ import annotations


class SketchsiteError(Exception):
    """Base class for all errors raised by this package."""


class ValidationFailed(SketchsiteError):
    """Submitted inputs violate a documented invariant.

    ``fields`` maps the offending field name to a human-readable message.
    """

    def __init__(self, fields: dict[str, str]):
        self.fields = dict(fields)
        detail = "; ".join(f"{name}: {msg}" for name, msg in self.fields.items())
        super().__init__(detail)


class SerializationError(SketchsiteError):
    """Internal failure while encoding a sketch as SVG."""


class RasterizationError(SketchsiteError):
    """The SVG could not be rendered (malformed or outside the supported subset)."""


class DimensionOverflowError(RasterizationError):
    """Raster area exceeds the configured pixel budget."""


class ProviderConfigError(SketchsiteError):
    """Provider configuration is incomplete or its key env var is unset."""


class ProviderUnreachable(SketchsiteError):
    """Transport-level failure talking to an external provider after retries."""


class ProviderRejected(SketchsiteError):
    """The provider rejected the request (4xx semantics, e.g. bad API key)."""


class MockCorpusMiss(SketchsiteError):
    """The deterministic mock provider has no fixture for this request."""

    def __init__(self, path: str):
        self.path = path
        super().__init__(f"no mock fixture at {path}")


class NoCodeFound(SketchsiteError):
    """Model output contained no extractable HTML document."""


class ResolutionMismatch(SketchsiteError):
    """Image resolutions do not line up with the PRD's descriptors."""


class CapacityExceeded(SketchsiteError):
    """The pending-job queue is full."""


class JobNotFound(SketchsiteError):
    """Unknown job id or version index."""


class StageFailure(SketchsiteError):
    """A pipeline stage failed; carries the stage name for terminal-state mapping."""

    def __init__(self, stage: str, cause: Exception | str):
        self.stage = stage
        self.cause = cause
        super().__init__(f"{stage}: {cause}")

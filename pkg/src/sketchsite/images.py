"""Resolving image placeholders to concrete URLs and substituting them.

The provider is a Pexels-compatible search API; a mock provider backed by a
local JSON catalog enables fully offline runs. Image resolution is
decoration: outages degrade to deterministic placeholder URLs with a warning
instead of failing a multi-minute pipeline run. Only an authentication
rejection fails the stage.
"""

from __future__ import annotations

import json
import os
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Literal
from urllib.parse import quote

import httpx

from .descriptors import ImageDescriptor, parse_image_descriptors
from .errors import ProviderConfigError, ProviderRejected, ResolutionMismatch
from .prd import ProductRequirementsDocument

ENV_IMAGE_API_KEY = "FD_IMAGE_API_KEY"
ENV_IMAGE_API_BASE = "FD_IMAGE_API_BASE"
DEFAULT_API_BASE = "https://api.pexels.com"

# Minimum pixel dimensions per size bucket: 4:3-ish for small/medium and
# 16:9 for large, matching common stock-photo aspect ratios.
SIZE_MINIMUMS = {
    "small": (400, 300),
    "medium": (800, 600),
    "large": (1600, 900),
}

# Client-side etiquette against the live API's free tier.
RATE_LIMIT_INTERVAL_S = 0.350

SEARCH_PER_PAGE = 15


@dataclass(frozen=True)
class ImageQuery:
    term: str
    min_width: int
    min_height: int


@dataclass(frozen=True)
class ResolvedImage:
    url: str
    width: int
    height: int
    source: Literal["api", "cache", "fallback"]
    query_term: str

    def to_dict(self) -> dict:
        return {
            "url": self.url,
            "width": self.width,
            "height": self.height,
            "source": self.source,
            "query_term": self.query_term,
        }


@dataclass(frozen=True)
class ResolvedPrd:
    """PRD text with every placeholder replaced by a markdown image reference."""

    text: str
    resolutions: tuple[tuple[ImageDescriptor, ResolvedImage], ...]


@dataclass(frozen=True)
class ImageProviderConfig:
    kind: Literal["live", "mock"]
    catalog_path: str | Path | None = None
    api_base: str = DEFAULT_API_BASE
    api_key_ref: str = ENV_IMAGE_API_KEY

    def validate(self) -> None:
        if self.kind == "mock":
            if not self.catalog_path:
                raise ProviderConfigError("mock image provider requires catalog_path")
        elif self.kind == "live":
            if not os.environ.get(self.api_key_ref or ""):
                raise ProviderConfigError(f"environment variable {self.api_key_ref} is not set")
        else:
            raise ProviderConfigError(f"unknown image provider kind {self.kind!r}")

    @classmethod
    def mock(cls, catalog_path: str | Path) -> "ImageProviderConfig":
        return cls(kind="mock", catalog_path=catalog_path)

    @classmethod
    def live_from_env(cls) -> "ImageProviderConfig":
        return cls(kind="live", api_base=os.environ.get(ENV_IMAGE_API_BASE, DEFAULT_API_BASE))


def size_to_query(d: ImageDescriptor) -> ImageQuery:
    """Map a descriptor to a search query via the size-bucket minimums."""
    min_w, min_h = SIZE_MINIMUMS[d.size]
    return ImageQuery(term=d.term, min_width=min_w, min_height=min_h)


def fallback_url(min_width: int, min_height: int) -> str:
    """Deterministic placeholder: an inline SVG data URI, one per size bucket.

    Fully percent-encoded so the URL contains no spaces or parentheses and
    stays safe inside a markdown image reference.
    """
    svg = (
        f"<svg xmlns='http://www.w3.org/2000/svg' width='{min_width}' height='{min_height}'>"
        f"<rect width='{min_width}' height='{min_height}' fill='#d4d4d8'/>"
        f"<text x='50%' y='50%' text-anchor='middle' fill='#52525b' "
        f"font-family='sans-serif' font-size='24'>{min_width}x{min_height}</text></svg>"
    )
    return "data:image/svg+xml," + quote(svg, safe="")


class _RateLimiter:
    """Token-bucket-of-one: at most one request per interval, process-wide."""

    def __init__(self, interval_s: float):
        self.interval_s = interval_s
        self._lock = threading.Lock()
        self._next_allowed = 0.0

    def wait(self) -> None:
        with self._lock:
            now = time.monotonic()
            delay = self._next_allowed - now
            self._next_allowed = max(now, self._next_allowed) + self.interval_s
        if delay > 0:
            time.sleep(delay)


_live_rate_limiter = _RateLimiter(RATE_LIMIT_INTERVAL_S)


class ImageClient:
    """Search client for one provider configuration.

    ``lookup_count`` counts provider hits (catalog reads or HTTP searches),
    which is what memoization-soundness checks compare against.
    """

    def __init__(self, cfg: ImageProviderConfig, transport: httpx.BaseTransport | None = None):
        cfg.validate()
        self.cfg = cfg
        self.lookup_count = 0
        self._transport = transport
        self._catalog: dict[str, list[dict]] | None = None

    @property
    def provider_id(self) -> str:
        return "mock-catalog" if self.cfg.kind == "mock" else f"pexels-compatible:{self.cfg.api_base}"

    def search(self, query: ImageQuery) -> list[dict]:
        """Return candidate images as [{url, width, height}, ...], best-first."""
        self.lookup_count += 1
        if self.cfg.kind == "mock":
            return self._search_catalog(query)
        return self._search_live(query)

    def _search_catalog(self, query: ImageQuery) -> list[dict]:
        if self._catalog is None:
            raw = json.loads(Path(self.cfg.catalog_path).read_text(encoding="utf-8"))
            self._catalog = {str(term).strip().lower(): entries for term, entries in raw.items()}
        return list(self._catalog.get(query.term.strip().lower(), []))

    def _search_live(self, query: ImageQuery) -> list[dict]:
        api_key = os.environ.get(self.cfg.api_key_ref or "")
        if not api_key:
            raise ProviderConfigError(f"environment variable {self.cfg.api_key_ref} is not set")
        _live_rate_limiter.wait()
        url = self.cfg.api_base.rstrip("/") + "/v1/search"
        with httpx.Client(transport=self._transport, timeout=30.0) as client:
            resp = client.get(
                url,
                params={"query": query.term, "per_page": SEARCH_PER_PAGE},
                headers={"Authorization": api_key},
            )
        if resp.status_code in (401, 403):
            raise ProviderRejected(f"image provider rejected the API key ({resp.status_code})")
        resp.raise_for_status()
        photos = resp.json().get("photos", [])
        results = []
        for photo in photos:
            src = photo.get("src", {})
            image_url = src.get("original") or src.get("large") or photo.get("url")
            if image_url and photo.get("width") and photo.get("height"):
                results.append({"url": image_url, "width": int(photo["width"]), "height": int(photo["height"])})
        return results


def _select(candidates: list[dict], query: ImageQuery) -> ResolvedImage | None:
    """First candidate meeting the minimums, else the largest by area."""
    for c in candidates:
        if c["width"] >= query.min_width and c["height"] >= query.min_height:
            return ResolvedImage(c["url"], c["width"], c["height"], "api", query.term)
    if candidates:
        best = max(candidates, key=lambda c: c["width"] * c["height"])
        return ResolvedImage(best["url"], best["width"], best["height"], "api", query.term)
    return None


def resolve(
    queries: list[ImageQuery],
    client: ImageClient,
    warn: Callable[[str], None] | None = None,
) -> list[ResolvedImage]:
    """Resolve queries to images, positionally aligned with the input.

    Duplicate (term, size-bucket) pairs hit the provider once; repeats are
    served from the per-job memo with source="cache". Transport failures and
    non-auth rejections degrade to the fallback placeholder with a warning;
    only an authentication rejection propagates.
    """
    memo: dict[tuple[str, int, int], ResolvedImage] = {}
    out: list[ResolvedImage] = []
    for query in queries:
        key = (query.term, query.min_width, query.min_height)
        if key in memo:
            hit = memo[key]
            out.append(ResolvedImage(hit.url, hit.width, hit.height, "cache", hit.query_term))
            continue
        try:
            chosen = _select(client.search(query), query)
        except ProviderRejected:
            raise
        except (httpx.HTTPError, OSError, ValueError) as exc:
            if warn is not None:
                warn(f"image provider unavailable for {query.term!r}; using placeholder ({exc})")
            chosen = None
        if chosen is None:
            if warn is not None and client.cfg.kind == "mock":
                warn(f"no catalog entry for {query.term!r}; using placeholder")
            chosen = ResolvedImage(
                fallback_url(query.min_width, query.min_height),
                query.min_width,
                query.min_height,
                "fallback",
                query.term,
            )
        memo[key] = chosen
        out.append(chosen)
    return out


def substitute(
    prd: ProductRequirementsDocument,
    resolutions: list[tuple[ImageDescriptor, ResolvedImage]],
) -> ResolvedPrd:
    """Replace each descriptor token with a markdown image reference.

    Resolutions must cover exactly prd.descriptors in order. Substitution
    runs right-to-left so earlier spans stay valid; all non-descriptor bytes
    are preserved exactly.
    """
    if len(resolutions) != len(prd.descriptors):
        raise ResolutionMismatch(
            f"{len(prd.descriptors)} descriptors but {len(resolutions)} resolutions"
        )
    for (given, _), expected in zip(resolutions, prd.descriptors):
        if given.span != expected.span or given.term != expected.term or given.size != expected.size:
            raise ResolutionMismatch(f"resolution for {given.token()} does not match descriptor at {expected.span}")

    text = prd.text
    for descriptor, image in reversed(resolutions):
        start, end = descriptor.span
        text = text[:start] + f"![{descriptor.term}]({image.url})" + text[end:]

    survivors = parse_image_descriptors(text)
    if survivors:  # cannot happen with the documented grammar; guard anyway
        raise ResolutionMismatch(f"{len(survivors)} descriptor tokens survived substitution")
    return ResolvedPrd(text=text, resolutions=tuple(resolutions))

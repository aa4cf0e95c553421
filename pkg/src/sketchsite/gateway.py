"""Model-agnostic completion gateway.

One client class fronts both provider kinds: a live messages-style HTTP
provider and a deterministic mock that replays fixture files. The mock is the
foundation of every golden-pipeline test: identical requests always yield
byte-identical text. Response hygiene (HTML extraction from chatty model
output) also lives here so every caller shares one set of rules.
"""

from __future__ import annotations

import base64
import hashlib
import os
import re
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Literal

import httpx

from .errors import (
    MockCorpusMiss,
    NoCodeFound,
    ProviderConfigError,
    ProviderRejected,
    ProviderUnreachable,
)
from .raster import RasterImage

RequestTag = Literal["prd", "initial_code", "suggestions", "refine_code"]
REQUEST_TAGS = ("prd", "initial_code", "suggestions", "refine_code")

# Temperature defaults: creative text runs warmer than code regeneration.
TEMPERATURE_BY_TAG = {"prd": 0.7, "suggestions": 0.7, "initial_code": 0.2, "refine_code": 0.2}

DEFAULT_MAX_OUTPUT_TOKENS = 8192
DEFAULT_MAX_INFLIGHT = 4

RETRY_WAITS = (1.0, 2.0, 4.0)

ENV_API_KEY = "FD_LLM_API_KEY"
ENV_MODEL = "FD_LLM_MODEL"
ENV_ENDPOINT = "FD_LLM_ENDPOINT"

# Appended on the single retry after a no-code-found extraction failure.
STRICT_HTML_INSTRUCTION = "Respond with a single complete HTML document in one fenced code block."


@dataclass(frozen=True)
class TextPart:
    text: str


@dataclass(frozen=True)
class ImagePart:
    image: RasterImage


@dataclass(frozen=True)
class ModelRequest:
    """A completion request; request_tag names the template that produced it."""

    system_text: str
    user_parts: tuple[TextPart | ImagePart, ...]
    request_tag: RequestTag
    max_output_tokens: int = DEFAULT_MAX_OUTPUT_TOKENS
    temperature: float = 0.7

    def __post_init__(self) -> None:
        if not self.user_parts:
            raise ValueError("request needs at least one user part")
        images = sum(1 for p in self.user_parts if isinstance(p, ImagePart))
        if images > 1:
            raise ValueError(f"at most one image part per request, got {images}")
        if self.request_tag not in REQUEST_TAGS:
            raise ValueError(f"unknown request_tag {self.request_tag!r}")
        if self.max_output_tokens <= 0:
            raise ValueError("max_output_tokens must be positive")
        if not (0.0 <= self.temperature <= 2.0):
            raise ValueError(f"temperature must be in [0, 2], got {self.temperature}")

    def user_text(self) -> str:
        return "".join(p.text for p in self.user_parts if isinstance(p, TextPart))


@dataclass(frozen=True)
class ModelResponse:
    text: str
    provider_id: str
    latency_ms: int
    truncated: bool = False


@dataclass(frozen=True)
class ProviderConfig:
    """Selects and parameterizes a provider.

    live: endpoint + model_name + api_key_ref (an env var NAME, not a secret).
    mock: seed_corpus, a directory of `<request_tag>-<hash>.txt` fixture files.
    family picks the wire adapter for live providers.
    """

    kind: Literal["live", "mock"]
    endpoint: str | None = None
    model_name: str | None = None
    api_key_ref: str = ENV_API_KEY
    seed_corpus: str | Path | None = None
    family: Literal["anthropic", "openai"] = "anthropic"

    def validate(self) -> None:
        if self.kind == "live":
            missing = [
                name
                for name, value in (("endpoint", self.endpoint), ("model_name", self.model_name), ("api_key_ref", self.api_key_ref))
                if not value
            ]
            if missing:
                raise ProviderConfigError(f"live provider config missing {', '.join(missing)}")
        elif self.kind == "mock":
            if not self.seed_corpus:
                raise ProviderConfigError("mock provider config requires seed_corpus")
        else:
            raise ProviderConfigError(f"unknown provider kind {self.kind!r}")

    @classmethod
    def mock(cls, seed_corpus: str | Path) -> "ProviderConfig":
        return cls(kind="mock", seed_corpus=seed_corpus)

    @classmethod
    def live_from_env(cls, endpoint: str, model_name: str) -> "ProviderConfig":
        return cls(
            kind="live",
            endpoint=os.environ.get(ENV_ENDPOINT, endpoint),
            model_name=os.environ.get(ENV_MODEL, model_name),
        )


def request_fingerprint(req: ModelRequest) -> str:
    """Stable digest of the request's user content.

    Hashes the concatenated user texts plus any image part's content hash;
    the system text is template-owned and deliberately excluded so fixture
    corpora survive prompt-wording tweaks only when user content is equal.
    """
    h = hashlib.sha256()
    for part in req.user_parts:
        if isinstance(part, TextPart):
            h.update(part.text.encode("utf-8"))
        else:
            h.update(part.image.content_hash.encode("ascii"))
    return h.hexdigest()[:16]


def corpus_filename(req: ModelRequest) -> str:
    return f"{req.request_tag}-{request_fingerprint(req)}.txt"


class LlmClient:
    """Thread-safe completion client for one provider configuration.

    A per-client semaphore (default 4) bounds in-flight live requests; the
    limit is a constructor argument, not a hidden constant. Mock completions
    are pure file lookups and bypass the limiter.
    """

    def __init__(
        self,
        cfg: ProviderConfig,
        max_inflight: int = DEFAULT_MAX_INFLIGHT,
        transport: httpx.BaseTransport | None = None,
        sleeper: Callable[[float], None] = time.sleep,
    ):
        cfg.validate()
        self.cfg = cfg
        self._limiter = threading.Semaphore(max_inflight)
        self._transport = transport
        self._sleep = sleeper

    @property
    def provider_id(self) -> str:
        if self.cfg.kind == "mock":
            return "mock"
        return f"{self.cfg.family}:{self.cfg.model_name}"

    def complete(self, req: ModelRequest) -> ModelResponse:
        if self.cfg.kind == "mock":
            return self._complete_mock(req)
        return self._complete_live(req)

    def _complete_mock(self, req: ModelRequest) -> ModelResponse:
        start = time.monotonic()
        path = Path(self.cfg.seed_corpus) / corpus_filename(req)
        if not path.is_file():
            raise MockCorpusMiss(str(path))
        text = path.read_text(encoding="utf-8")
        if not text:
            raise MockCorpusMiss(str(path))
        latency = int((time.monotonic() - start) * 1000)
        return ModelResponse(text=text, provider_id="mock", latency_ms=latency)

    def _complete_live(self, req: ModelRequest) -> ModelResponse:
        api_key = os.environ.get(self.cfg.api_key_ref or "")
        if not api_key:
            raise ProviderConfigError(f"environment variable {self.cfg.api_key_ref} is not set")
        url, headers, payload = _wire_request(self.cfg, api_key, req)

        start = time.monotonic()
        last_error: Exception | None = None
        with self._limiter:
            for attempt in range(1 + len(RETRY_WAITS)):
                if attempt:
                    self._sleep(RETRY_WAITS[attempt - 1])
                try:
                    with httpx.Client(transport=self._transport, timeout=120.0) as client:
                        resp = client.post(url, headers=headers, json=payload)
                except httpx.HTTPError as exc:
                    last_error = exc
                    continue
                if resp.status_code >= 500:
                    last_error = ProviderUnreachable(f"provider returned {resp.status_code}")
                    continue
                if resp.status_code >= 400:
                    raise ProviderRejected(f"provider returned {resp.status_code}: {resp.text[:500]}")
                text, truncated = _wire_response(self.cfg, resp.json())
                latency = int((time.monotonic() - start) * 1000)
                return ModelResponse(
                    text=text,
                    provider_id=self.provider_id,
                    latency_ms=latency,
                    truncated=truncated,
                )
        raise ProviderUnreachable(f"provider unreachable after {1 + len(RETRY_WAITS)} attempts: {last_error}")


def _wire_request(cfg: ProviderConfig, api_key: str, req: ModelRequest) -> tuple[str, dict, dict]:
    """Build (url, headers, json payload) for the configured provider family."""
    content = []
    for part in req.user_parts:
        if isinstance(part, TextPart):
            entry: dict = {"type": "text", "text": part.text}
        elif cfg.family == "anthropic":
            entry = {
                "type": "image",
                "source": {
                    "type": "base64",
                    "media_type": "image/jpeg",
                    "data": base64.b64encode(part.image.data).decode("ascii"),
                },
            }
        else:
            b64 = base64.b64encode(part.image.data).decode("ascii")
            entry = {"type": "image_url", "image_url": {"url": f"data:image/jpeg;base64,{b64}"}}
        content.append(entry)

    if cfg.family == "anthropic":
        url = cfg.endpoint.rstrip("/") + "/v1/messages"
        headers = {"x-api-key": api_key, "anthropic-version": "2023-06-01"}
        payload = {
            "model": cfg.model_name,
            "system": req.system_text,
            "messages": [{"role": "user", "content": content}],
            "max_tokens": req.max_output_tokens,
            "temperature": req.temperature,
        }
    else:
        url = cfg.endpoint.rstrip("/") + "/v1/chat/completions"
        headers = {"Authorization": f"Bearer {api_key}"}
        payload = {
            "model": cfg.model_name,
            "messages": [
                {"role": "system", "content": req.system_text},
                {"role": "user", "content": content},
            ],
            "max_tokens": req.max_output_tokens,
            "temperature": req.temperature,
        }
    return url, headers, payload


def _wire_response(cfg: ProviderConfig, body: dict) -> tuple[str, bool]:
    try:
        if cfg.family == "anthropic":
            text = "".join(b.get("text", "") for b in body["content"] if b.get("type") == "text")
            truncated = body.get("stop_reason") == "max_tokens"
        else:
            choice = body["choices"][0]
            text = choice["message"]["content"]
            truncated = choice.get("finish_reason") == "length"
    except (KeyError, IndexError, TypeError) as exc:
        raise ProviderRejected(f"unparseable provider response: {exc}") from exc
    if not text:
        raise ProviderRejected("provider returned an empty completion")
    return text, truncated


_FENCE_RE = re.compile(
    r"^```[ \t]*([A-Za-z0-9_+-]*)[ \t]*\r?\n(.*?)^```[ \t]*$",
    re.DOTALL | re.MULTILINE,
)


def _marker_offset(text: str) -> int | None:
    markers = [idx for idx in (text.find("<!DOCTYPE"), text.find("<html")) if idx != -1]
    return min(markers) if markers else None


def extract_html_document(text: str) -> str:
    """Pull one HTML document out of chatty model output.

    Rules, in order: the longest html-labeled fenced block; else the longest
    fenced block of any label; else the substring from the first <!DOCTYPE or
    <html marker to the end; else NoCodeFound. Fence interiors are trimmed to
    their document marker when one is present, which makes extraction
    idempotent. Never returns an empty string.
    """
    blocks = [(m.group(1).lower(), m.group(2)) for m in _FENCE_RE.finditer(text)]
    html_blocks = [body for label, body in blocks if label == "html" and body.strip()]
    any_blocks = [body for _, body in blocks if body.strip()]
    chosen = None
    if html_blocks:
        chosen = max(html_blocks, key=len)
    elif any_blocks:
        chosen = max(any_blocks, key=len)
    if chosen is not None:
        offset = _marker_offset(chosen)
        return chosen[offset:] if offset is not None else chosen
    offset = _marker_offset(text)
    if offset is not None:
        return text[offset:]
    raise NoCodeFound("no fenced code block or HTML document marker in model output")

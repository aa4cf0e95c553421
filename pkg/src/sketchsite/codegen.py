"""Coding stage: initial website generation plus the iterative refinement loop.

Each iteration analyzes the latest version, merges the resulting suggestions
with the ORIGINAL theme (never the previous merged theme, so prompts cannot
drift or grow without bound), and regenerates the whole page from the fixed
resolved PRD. A mid-loop failure keeps everything generated so far and marks
the run partial; only a failure to produce version 0 is fatal.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable

from . import prompts
from .errors import NoCodeFound
from .gateway import (
    LlmClient,
    ModelRequest,
    STRICT_HTML_INSTRUCTION,
    TEMPERATURE_BY_TAG,
    TextPart,
    extract_html_document,
)
from .images import ResolvedPrd
from .prd import ThemePrompt

MAX_ITERATIONS = 16


@dataclass(frozen=True)
class WebsiteVersion:
    """One generated website plus lineage back to the suggestion that shaped it."""

    index: int
    html: str
    parent_index: int | None
    suggestion_ref: str | None
    created_at: str
    content_hash: str

    @classmethod
    def create(cls, index: int, html: str, suggestion_ref: str | None) -> "WebsiteVersion":
        return cls(
            index=index,
            html=html,
            parent_index=None if index == 0 else index - 1,
            suggestion_ref=suggestion_ref,
            created_at=datetime.now(timezone.utc).isoformat(),
            content_hash=hashlib.sha256(html.encode("utf-8")).hexdigest(),
        )


@dataclass(frozen=True)
class RefinementSuggestions:
    text: str
    derived_from_index: int


@dataclass(frozen=True)
class EnhancedTheme:
    """Original theme plus the current iteration's improvement list.

    Always contains the original theme verbatim as a prefix.
    """

    text: str


@dataclass
class LoopResult:
    versions: list[WebsiteVersion]
    suggestions: list[RefinementSuggestions]
    partial: bool = False
    failure: str | None = None


def build_code_request(prd: ResolvedPrd, theme_text: str, tag: str) -> ModelRequest:
    system = prompts.INITIAL_CODE_SYSTEM if tag == "initial_code" else prompts.REFINE_CODE_SYSTEM
    return ModelRequest(
        system_text=system,
        user_parts=(TextPart(prompts.code_user_text(prd.text, theme_text)),),
        request_tag=tag,
        temperature=TEMPERATURE_BY_TAG[tag],
    )


def build_suggestions_request(version: WebsiteVersion, theme: ThemePrompt) -> ModelRequest:
    return ModelRequest(
        system_text=prompts.SUGGESTIONS_SYSTEM,
        user_parts=(TextPart(prompts.suggestions_user_text(version.html, theme.text)),),
        request_tag="suggestions",
        temperature=TEMPERATURE_BY_TAG["suggestions"],
    )


def _with_strict_instruction(req: ModelRequest) -> ModelRequest:
    """The single no-code-found retry: same request plus a stricter instruction."""
    parts = list(req.user_parts)
    for i in range(len(parts) - 1, -1, -1):
        if isinstance(parts[i], TextPart):
            parts[i] = TextPart(parts[i].text + "\n\n" + STRICT_HTML_INSTRUCTION)
            break
    else:
        parts.append(TextPart(STRICT_HTML_INSTRUCTION))
    return ModelRequest(
        system_text=req.system_text,
        user_parts=tuple(parts),
        request_tag=req.request_tag,
        max_output_tokens=req.max_output_tokens,
        temperature=req.temperature,
    )


def _complete_html(client: LlmClient, req: ModelRequest) -> str:
    """Run a code request and extract its HTML, retrying once on no-code-found.

    The returned text must survive re-extraction unchanged (it is already a
    bare document); output that does not is treated as no code found.
    """

    def attempt(r: ModelRequest) -> str:
        html = extract_html_document(client.complete(r).text)
        if extract_html_document(html) != html:
            raise NoCodeFound("extracted text is not a bare HTML document")
        return html

    try:
        return attempt(req)
    except NoCodeFound:
        return attempt(_with_strict_instruction(req))


def generate_initial(prd: ResolvedPrd, theme: ThemePrompt, client: LlmClient) -> WebsiteVersion:
    """Produce version 0 from the resolved PRD and the original theme."""
    html = _complete_html(client, build_code_request(prd, theme.text, "initial_code"))
    return WebsiteVersion.create(0, html, suggestion_ref=None)


def analyze(version: WebsiteVersion, theme: ThemePrompt, client: LlmClient) -> RefinementSuggestions:
    """Ask the model for an improvement list for an existing version."""
    resp = client.complete(build_suggestions_request(version, theme))
    return RefinementSuggestions(text=resp.text, derived_from_index=version.index)


def merge_theme(theme: ThemePrompt, suggestions: RefinementSuggestions) -> EnhancedTheme:
    """Deterministic concatenation: theme, blank line, fixed heading, suggestions."""
    return EnhancedTheme(text=f"{theme.text}\n\n{prompts.MERGE_HEADING}\n{suggestions.text}")


def refine_once(
    prd: ResolvedPrd,
    enhanced: EnhancedTheme,
    parent: WebsiteVersion,
    client: LlmClient,
) -> WebsiteVersion:
    """Regenerate the page from the fixed PRD and an enhanced theme."""
    html = _complete_html(client, build_code_request(prd, enhanced.text, "refine_code"))
    return WebsiteVersion.create(parent.index + 1, html, suggestion_ref=f"s{parent.index + 1}")


def run_refinement_loop(
    prd: ResolvedPrd,
    theme: ThemePrompt,
    n: int,
    client: LlmClient,
    on_version: Callable[[WebsiteVersion, RefinementSuggestions | None], None] | None = None,
    cumulative: bool = False,
) -> LoopResult:
    """Generate version 0, then run n analyze -> merge -> regenerate passes.

    on_version fires after each version (with the suggestions that produced
    it) so the caller can persist and announce it before the next iteration
    starts. cumulative=True merges against the previous enhanced theme
    instead of the original, for experimentation only.

    Raises if version 0 cannot be produced; any later failure returns the
    versions completed so far with partial=True.
    """
    if not (0 <= n <= MAX_ITERATIONS):
        raise ValueError(f"iterations must be in 0..{MAX_ITERATIONS}, got {n}")
    theme.validate()

    initial = generate_initial(prd, theme, client)
    if on_version is not None:
        on_version(initial, None)
    result = LoopResult(versions=[initial], suggestions=[])

    merge_base = theme
    for _ in range(n):
        parent = result.versions[-1]
        try:
            suggestion = analyze(parent, theme, client)
            enhanced = merge_theme(merge_base, suggestion)
            child = refine_once(prd, enhanced, parent, client)
            if on_version is not None:
                on_version(child, suggestion)
        except Exception as exc:
            result.partial = True
            result.failure = f"refinement after version {parent.index} failed: {exc}"
            break
        result.suggestions.append(suggestion)
        result.versions.append(child)
        if cumulative:
            merge_base = ThemePrompt(enhanced.text)
    return result

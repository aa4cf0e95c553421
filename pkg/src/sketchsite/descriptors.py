"""Parsing of `[term(size)]` image placeholders embedded in generated text.

The grammar is deliberately regular: term is 1..64 characters of letters,
digits, spaces, and hyphens (never brackets or parentheses), and size is one
of small/medium/large, case-insensitive on input and normalized to lowercase.
Anything bracketed that does not match, such as markdown links, is left alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

SIZES = ("small", "medium", "large")

TERM_MAX_LEN = 64

_DESCRIPTOR_RE = re.compile(
    r"\[([A-Za-z0-9 \-]{1,64})\((small|medium|large)\)\]",
    re.IGNORECASE,
)


@dataclass(frozen=True)
class ImageDescriptor:
    """A parsed placeholder token plus the span it occupies in the source text.

    Slicing the source at ``span`` reproduces the full token exactly, which is
    what makes in-place substitution safe.
    """

    term: str
    size: str
    span: tuple[int, int]

    def token(self) -> str:
        return f"[{self.term}({self.size})]"


def parse_image_descriptors(text: str) -> list[ImageDescriptor]:
    """Single left-to-right scan for placeholder tokens.

    Returns descriptors ordered by span start with non-overlapping spans.
    Never raises: unparseable bracket text is simply not a descriptor.
    """
    found: list[ImageDescriptor] = []
    for m in _DESCRIPTOR_RE.finditer(text):
        found.append(
            ImageDescriptor(term=m.group(1), size=m.group(2).lower(), span=m.span())
        )
    return found

"""Prompt templates for every model-facing stage.

Single source of truth for "what prompts run". Each builder in prd.py and
codegen.py renders exactly one of these; request_tag on the resulting request
records which one.
"""

from __future__ import annotations

PRD_SECTIONS = ("Overview", "Layout", "Sections", "Visual Style", "Imagery", "Functionality")

PRD_SYSTEM = """\
You are a senior product designer turning a rough layout sketch and a short
theme statement into a Product Requirements Document for a single-page
website.

Write the PRD in markdown with exactly these level-2 sections, in this order:
## Overview, ## Layout, ## Sections, ## Visual Style, ## Imagery,
## Functionality.

Ground the Layout section in the attached sketch image: describe the regions
the user drew and what belongs in each. Keep the document concrete enough
that a developer could build the page from it without seeing the sketch.

Every photograph or illustration the page needs must be marked inline where
it belongs as [term(size)], where term is a short stock-photo search phrase
(letters, digits, spaces, hyphens only) and size is one of small, medium, or
large. Example: [school(large)]. Do not use that bracket syntax for anything
else.
"""

PRD_USER_PREFIX = "Website theme: "

INITIAL_CODE_SYSTEM = """\
You are an expert frontend developer. Build a complete, production-quality
single-page website from the Product Requirements Document and theme below.

Requirements:
- Respond with ONE complete HTML document inside a single fenced code block
  labeled html.
- The document must be fully self-contained: all CSS and JavaScript inline,
  no build step, no external scripts or stylesheets. Image URLs given in the
  PRD may be referenced directly.
- Follow the PRD's layout and sections faithfully; use the theme for tone,
  copy, and visual direction.
- Use semantic HTML, a responsive layout, and polished typography.
"""

SUGGESTIONS_SYSTEM = """\
You are a meticulous design and code reviewer. You are given the HTML of a
generated website and the theme it was built for.

Write a numbered list of specific, high-impact improvements: visual design,
layout, content richness, interactivity, accessibility, and code flaws. Each
item must be concrete enough to act on. Do not rewrite the code; output only
the critique and improvement list.
"""

REFINE_CODE_SYSTEM = """\
You are an expert frontend developer revising a website. Rebuild the page
from the Product Requirements Document and the enhanced theme below; the
enhanced theme includes improvement instructions that must all be applied.

Requirements:
- Respond with ONE complete HTML document inside a single fenced code block
  labeled html.
- The document must be fully self-contained: all CSS and JavaScript inline.
- Regenerate the whole page; do not describe changes or output fragments.
"""

# Fixed heading used when merging suggestions into the original theme.
MERGE_HEADING = "Apply these improvements:"


def prd_user_text(theme_text: str) -> str:
    return PRD_USER_PREFIX + theme_text


def code_user_text(prd_text: str, theme_text: str) -> str:
    return f"Product Requirements Document:\n\n{prd_text}\n\nWebsite theme: {theme_text}"


def suggestions_user_text(html: str, theme_text: str) -> str:
    return f"Website theme: {theme_text}\n\nCurrent website HTML:\n\n{html}"

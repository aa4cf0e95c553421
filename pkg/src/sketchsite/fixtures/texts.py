"""Authored fixture texts for the deterministic demo environment.

These are the canned provider responses the mock corpus replays: one PRD,
five website versions, and four suggestion lists, written for the bundled
demo sketch and theme. Version HTML documents are kept small but realistic
so previews and thumbnails have something worth rendering.
"""

DEMO_THEME = "Personal portfolio for a wildlife photographer"

REFUSAL_TEXT = "I cannot help with that."

PRD_RESPONSE = """\
## Overview
A single-page portfolio for a wildlife photographer. The page should feel
calm and nature-forward, letting large photographs carry the design while
short copy establishes credibility and invites contact.

## Layout
The sketch shows a slim header band across the top with the logo at the left,
a full-width hero region beneath it, a three-cell gallery row in the middle of
the page, and a narrow footer band. A round portrait sits left of the hero
text. Preserve this vertical order: header, hero, gallery, about, contact,
footer.

## Sections
1. Header: logo text and anchor navigation. [View the gallery](#gallery)
   should scroll smoothly.
2. Hero: name, one-line positioning statement, and a large banner photograph
   [savanna lion(large)] with a call-to-action button.
3. About: two short paragraphs alongside a portrait
   [wildlife photographer portrait(medium)].
4. Gallery: a responsive grid of recent work, including [forest bird(small)]
   and [mountain landscape(small)].
5. Contact: a simple mailto form with social links.

## Visual Style
Warm neutral palette (sand, moss, charcoal), generous whitespace, serif
display type for headings with a humanist sans for body text. Rounded 8px
corners on cards and buttons; subtle drop shadows only.

## Imagery
Photography must dominate. Use the banner image edge to edge, keep gallery
thumbnails uniform, and repeat the bird motif near the footer
[forest bird(small)] as a quiet signature.

## Functionality
Sticky header with anchor navigation, hover zoom on gallery items, a
lightbox-free click-through to full images, and a contact form that opens the
visitor's mail client. No build step; everything inline in one HTML file.
"""

SUGGESTIONS = [
    """\
1. Add a sticky header with a translucent background so navigation stays
   reachable while scrolling.
2. Give the hero banner a dark gradient overlay and move the call-to-action
   onto it for contrast.
3. Use CSS grid for the gallery with a hover scale transition instead of the
   current static row.
4. Add alt text to every image and visible focus outlines for keyboard users.
5. Introduce an about section divider with more vertical rhythm between
   sections.
""",
    """\
1. The gallery tiles should share a fixed aspect ratio; crop with
   object-fit: cover to stop layout shift.
2. Add a testimonials strip with two short client quotes above the contact
   section.
3. Animate the hero heading with a one-time fade-up on load; keep it under
   400ms.
4. Move social links into the footer and give the contact form inline
   validation states.
5. Preload the banner image and set explicit width/height attributes to
   avoid reflow.
""",
    """\
1. Add a services band (prints, licensing, expeditions) as three compact
   cards between gallery and testimonials.
2. Tighten the palette: one accent color for buttons and links only.
3. Add a back-to-top control that appears after scrolling past the hero.
4. Increase body line-height to 1.6 and cap text measure at 68 characters.
5. Add JSON-LD person markup in a script tag for basic SEO.
""",
    """\
1. Add a dark-mode media query that swaps the background and text palette.
2. Lazy-load gallery images with loading="lazy" and decoding="async".
3. Give the contact section a short availability note and response-time
   promise.
4. Add skip-to-content link as the first focusable element.
5. Round out the footer with a copyright line and a small bird glyph echoing
   the gallery motif.
""",
]

_PAGE_TEMPLATE = """\
<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>Mara Ellison — Wildlife Photographer</title>
<style>
  :root {{ --ink: #1f2a24; --sand: #f4efe7; --moss: #5c7a5a; --accent: #b4833e; }}
  * {{ box-sizing: border-box; margin: 0; }}
  body {{ font-family: Georgia, serif; color: var(--ink); background: var(--sand); line-height: 1.6; }}
  header {{ {header_css} }}
  nav a {{ color: var(--ink); margin-left: 1rem; text-decoration: none; }}
  .hero {{ position: relative; }}
  .hero img {{ width: 100%; height: 420px; object-fit: cover; display: block; }}
  .hero-copy {{ {hero_css} }}
  .btn {{ background: var(--accent); color: #fff; border: 0; padding: .7rem 1.2rem; border-radius: 8px; }}
  section {{ padding: 3rem 8vw; }}
  .gallery {{ display: {gallery_display}; gap: 1rem; }}
  .gallery img {{ width: 100%; height: 200px; object-fit: cover; border-radius: 8px; {gallery_extra} }}
  .about {{ display: flex; gap: 2rem; align-items: center; }}
  .about img {{ width: 220px; border-radius: 50%; }}
  footer {{ padding: 2rem 8vw; background: var(--ink); color: var(--sand); }}
  {extra_css}
</style>
</head>
<body>
<header>
  <strong>Mara Ellison</strong>
  <nav><a href="#gallery">Gallery</a><a href="#about">About</a><a href="#contact">Contact</a></nav>
</header>
<div class="hero">
  <img src="{banner_url}" alt="Savanna lion at golden hour" width="1600" height="420">
  <div class="hero-copy">
    <h1>Wild places, patient eyes.</h1>
    <p>Field photography from five continents.</p>
    <button class="btn" onclick="document.getElementById('gallery').scrollIntoView({{behavior:'smooth'}})">See the work</button>
  </div>
</div>
<section class="about" id="about">
  <img src="{portrait_url}" alt="Portrait of the photographer">
  <div>
    <h2>About</h2>
    <p>Fifteen years tracking light and behaviour, from the Mara to the boreal edge.</p>
    <p>Prints, licensing, and guided expeditions are available on request.</p>
  </div>
</section>
<section id="gallery">
  <h2>Recent work</h2>
  <div class="gallery">
    <img src="{bird_url}" alt="Forest bird on a branch" loading="lazy">
    <img src="{mountain_url}" alt="Mountain landscape at dawn" loading="lazy">
    <img src="{banner_url}" alt="Savanna lion resting" loading="lazy">
  </div>
</section>
{extra_sections}
<section id="contact">
  <h2>Contact</h2>
  <form action="mailto:hello@example.com" method="post" enctype="text/plain">
    <input name="name" placeholder="Your name" aria-label="Your name">
    <input name="email" placeholder="Email" aria-label="Email">
    <button class="btn" type="submit">Say hello</button>
  </form>
</section>
<footer>
  <p>&copy; Mara Ellison. Photographed in the field, coded in one file.</p>
  <img src="{bird_url}" alt="" width="48" height="32" style="object-fit:cover;border-radius:4px;">
</footer>
{extra_script}
</body>
</html>
"""

_VARIANTS = [
    {
        "header_css": "display: flex; justify-content: space-between; padding: 1rem 8vw; background: var(--sand);",
        "hero_css": "padding: 1.5rem 8vw; background: rgba(244,239,231,.92);",
        "gallery_display": "flex",
        "gallery_extra": "",
        "extra_css": "",
        "extra_sections": "",
        "extra_script": "",
    },
    {
        "header_css": "display: flex; justify-content: space-between; padding: 1rem 8vw; position: sticky; top: 0; background: rgba(244,239,231,.85); backdrop-filter: blur(6px); z-index: 10;",
        "hero_css": "position: absolute; inset: auto 0 0 0; padding: 2rem 8vw; color: #fff; background: linear-gradient(transparent, rgba(0,0,0,.65));",
        "gallery_display": "grid; grid-template-columns: repeat(3, 1fr)",
        "gallery_extra": "transition: transform .25s;",
        "extra_css": ".gallery img:hover { transform: scale(1.04); } img:focus-visible, a:focus-visible, button:focus-visible { outline: 3px solid var(--accent); }",
        "extra_sections": "",
        "extra_script": "",
    },
    {
        "header_css": "display: flex; justify-content: space-between; padding: 1rem 8vw; position: sticky; top: 0; background: rgba(244,239,231,.85); backdrop-filter: blur(6px); z-index: 10;",
        "hero_css": "position: absolute; inset: auto 0 0 0; padding: 2rem 8vw; color: #fff; background: linear-gradient(transparent, rgba(0,0,0,.65)); animation: rise .4s ease-out;",
        "gallery_display": "grid; grid-template-columns: repeat(3, 1fr)",
        "gallery_extra": "aspect-ratio: 4 / 3; transition: transform .25s;",
        "extra_css": "@keyframes rise { from { opacity: 0; transform: translateY(12px); } } .quotes { display: flex; gap: 2rem; } .quotes blockquote { font-style: italic; border-left: 3px solid var(--moss); padding-left: 1rem; }",
        "extra_sections": """<section class="quotes">
  <blockquote>"Mara's patience shows in every frame." — Field & Frame</blockquote>
  <blockquote>"The licensing process was effortless." — Atlas Editorial</blockquote>
</section>""",
        "extra_script": "",
    },
    {
        "header_css": "display: flex; justify-content: space-between; padding: 1rem 8vw; position: sticky; top: 0; background: rgba(244,239,231,.85); backdrop-filter: blur(6px); z-index: 10;",
        "hero_css": "position: absolute; inset: auto 0 0 0; padding: 2rem 8vw; color: #fff; background: linear-gradient(transparent, rgba(0,0,0,.65)); animation: rise .4s ease-out;",
        "gallery_display": "grid; grid-template-columns: repeat(3, 1fr)",
        "gallery_extra": "aspect-ratio: 4 / 3; transition: transform .25s;",
        "extra_css": "@keyframes rise { from { opacity: 0; transform: translateY(12px); } } .quotes { display: flex; gap: 2rem; } .quotes blockquote { font-style: italic; border-left: 3px solid var(--moss); padding-left: 1rem; } .services { display: grid; grid-template-columns: repeat(3, 1fr); gap: 1rem; } .services div { background: #fff; border-radius: 8px; padding: 1.2rem; box-shadow: 0 1px 4px rgba(0,0,0,.08); } #top-btn { position: fixed; right: 1rem; bottom: 1rem; display: none; } body { line-height: 1.6; } p { max-width: 68ch; }",
        "extra_sections": """<section class="services">
  <div><h3>Prints</h3><p>Archival prints in three sizes.</p></div>
  <div><h3>Licensing</h3><p>Editorial and commercial usage.</p></div>
  <div><h3>Expeditions</h3><p>Small-group field workshops.</p></div>
</section>
<section class="quotes">
  <blockquote>"Mara's patience shows in every frame." — Field & Frame</blockquote>
  <blockquote>"The licensing process was effortless." — Atlas Editorial</blockquote>
</section>""",
        "extra_script": """<button id="top-btn" class="btn" onclick="scrollTo({top:0,behavior:'smooth'})">Top</button>
<script>
addEventListener('scroll', () => {
  document.getElementById('top-btn').style.display = scrollY > 500 ? 'block' : 'none';
});
</script>
<script type="application/ld+json">{"@context":"https://schema.org","@type":"Person","name":"Mara Ellison","jobTitle":"Wildlife Photographer"}</script>""",
    },
    {
        "header_css": "display: flex; justify-content: space-between; padding: 1rem 8vw; position: sticky; top: 0; background: rgba(244,239,231,.85); backdrop-filter: blur(6px); z-index: 10;",
        "hero_css": "position: absolute; inset: auto 0 0 0; padding: 2rem 8vw; color: #fff; background: linear-gradient(transparent, rgba(0,0,0,.65)); animation: rise .4s ease-out;",
        "gallery_display": "grid; grid-template-columns: repeat(3, 1fr)",
        "gallery_extra": "aspect-ratio: 4 / 3; transition: transform .25s;",
        "extra_css": "@keyframes rise { from { opacity: 0; transform: translateY(12px); } } .quotes { display: flex; gap: 2rem; } .quotes blockquote { font-style: italic; border-left: 3px solid var(--moss); padding-left: 1rem; } .services { display: grid; grid-template-columns: repeat(3, 1fr); gap: 1rem; } .services div { background: #fff; border-radius: 8px; padding: 1.2rem; box-shadow: 0 1px 4px rgba(0,0,0,.08); } #top-btn { position: fixed; right: 1rem; bottom: 1rem; display: none; } p { max-width: 68ch; } .skip { position: absolute; left: -999px; } .skip:focus { left: 1rem; top: 1rem; background: #fff; padding: .5rem; } @media (prefers-color-scheme: dark) { :root { --sand: #16201b; --ink: #e8e4da; } body { background: var(--sand); color: var(--ink); } .services div { background: #22302a; } }",
        "extra_sections": """<section class="services">
  <div><h3>Prints</h3><p>Archival prints in three sizes.</p></div>
  <div><h3>Licensing</h3><p>Editorial and commercial usage.</p></div>
  <div><h3>Expeditions</h3><p>Small-group field workshops.</p></div>
</section>
<section class="quotes">
  <blockquote>"Mara's patience shows in every frame." — Field & Frame</blockquote>
  <blockquote>"The licensing process was effortless." — Atlas Editorial</blockquote>
</section>""",
        "extra_script": """<button id="top-btn" class="btn" onclick="scrollTo({top:0,behavior:'smooth'})">Top</button>
<script>
addEventListener('scroll', () => {
  document.getElementById('top-btn').style.display = scrollY > 500 ? 'block' : 'none';
});
for (const img of document.querySelectorAll('.gallery img')) {
  img.setAttribute('decoding', 'async');
}
</script>
<script type="application/ld+json">{"@context":"https://schema.org","@type":"Person","name":"Mara Ellison","jobTitle":"Wildlife Photographer"}</script>""",
    },
]

_CODE_PREAMBLES = [
    "Here is the initial website built from the PRD and theme:",
    "I've applied the improvements. Updated website:",
    "All suggested changes are in. New version:",
    "Refined again per the improvement list:",
    "Final polish applied. Here is the regenerated page:",
]


def website_html(index: int, image_urls: dict[str, str]) -> str:
    """Render authored website version `index` with the resolved image URLs."""
    variant = _VARIANTS[index]
    return _PAGE_TEMPLATE.format(
        banner_url=image_urls["savanna lion"],
        portrait_url=image_urls["wildlife photographer portrait"],
        bird_url=image_urls["forest bird"],
        mountain_url=image_urls["mountain landscape"],
        **variant,
    )


def code_response(index: int, html: str) -> str:
    """Wrap a version document the way a chatty model would."""
    return f"{_CODE_PREAMBLES[index]}\n\n```html\n{html}```\n\nLet me know if you want further changes.\n"


IMAGE_CATALOG = {
    "savanna lion": [
        {"url": "https://images.example/savanna-lion-1200.jpg", "width": 1200, "height": 675},
        {"url": "https://images.example/savanna-lion-2560.jpg", "width": 2560, "height": 1440},
    ],
    "wildlife photographer portrait": [
        {"url": "https://images.example/photographer-portrait-1000.jpg", "width": 1000, "height": 1500},
    ],
    "forest bird": [
        {"url": "https://images.example/forest-bird-800.jpg", "width": 800, "height": 533},
    ],
    "mountain landscape": [
        {"url": "https://images.example/mountain-landscape-380.jpg", "width": 380, "height": 285},
    ],
}

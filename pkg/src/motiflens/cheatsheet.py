"""Printable cheat sheet export: one self-contained html page per
visualization, listing every card with icons, texts, and variations but
without the per-instance data facts or related-instance previews."""

from __future__ import annotations

from html import escape

from .geometry import VIZ_KINDS
from .icons import icon_svg
from .repository import Repository, default_repository

_STYLE = """
body { font-family: 'Segoe UI', system-ui, sans-serif; margin: 24px; color: #1a1a1a; }
h1 { font-size: 22px; border-bottom: 2px solid #1a1a1a; padding-bottom: 6px; }
.card { display: grid; grid-template-columns: 112px 1fr; gap: 8px 16px;
        border: 1px solid #ccc; border-radius: 10px; padding: 14px; margin: 14px 0;
        page-break-inside: avoid; }
.card h2 { margin: 0 0 4px; font-size: 16px; }
.card .vname { color: #2c7fb8; }
.icons { display: flex; flex-direction: column; gap: 8px; }
.variations { display: flex; gap: 12px; margin-top: 6px; }
.variations figure { margin: 0; width: 120px; font-size: 11px; color: #444; }
.variations svg { width: 64px; height: 64px; }
p { margin: 4px 0; font-size: 13px; }
.section-label { font-size: 11px; text-transform: uppercase; letter-spacing: 0.05em;
                 color: #888; margin-top: 8px; }
"""


def export_cheatsheet(viz: str, repository: Repository | None = None) -> str:
    """Render the cheat sheet document for one visualization."""
    if viz not in VIZ_KINDS:
        raise ValueError(f"unknown visualization {viz!r}")
    repo = repository if repository is not None else default_repository()
    cards = repo.cards_for(viz)
    blocks = []
    for card in cards:
        variations = "".join(
            f"<figure>{icon_svg(icon, 64)}<figcaption>{escape(text)}</figcaption></figure>"
            for icon, text in zip(card.variation_icons, card.variation_texts))
        blocks.append(f"""
<div class="card">
  <div class="icons">{icon_svg(card.network_icon, 96)}{icon_svg(card.visual_icon, 96)}</div>
  <div>
    <h2>{escape(card.motif.value.replace('-', ' ').title())} &mdash;
        <span class="vname">{escape(card.visual_pattern_name)}</span></h2>
    <div class="section-label">Network pattern</div>
    <p>{escape(card.network_text)}</p>
    <div class="section-label">How it looks here</div>
    <p>{escape(card.visual_text)}</p>
    <div class="section-label">Variations</div>
    <div class="variations">{variations}</div>
  </div>
</div>""")
    title = f"Pattern cheat sheet: {viz}"
    return (f"<!DOCTYPE html><html><head><meta charset=\"utf-8\">"
            f"<title>{escape(title)}</title><style>{_STYLE}</style></head>"
            f"<body><h1>{escape(title)}</h1>{''.join(blocks)}</body></html>")

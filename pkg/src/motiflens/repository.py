"""The explanation card repository.

Cards live in a json data file (``data/cards.json``; override with the
``PATTERN_REPO`` environment variable) so the wording and the visual
vocabulary can be swapped without touching code. Each card pairs one
motif kind with one visualization: a visualization-independent
description of the network pattern, the visualization-specific visual
pattern (name, icon, text), and exactly three visual variations that
look different but mean the same network pattern.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import UnknownPair
from .geometry import TIME_ARCS, VIZ_KINDS
from .motifs import TEMPORAL_KINDS, TOPOLOGICAL_KINDS, MotifKind

PATTERN_REPO_ENV = "PATTERN_REPO"


@dataclass(frozen=True)
class ExplanationCard:
    motif: MotifKind
    viz: str
    network_icon: str
    network_text: str
    facts_template: str
    visual_pattern_name: str
    visual_icon: str
    visual_text: str
    variation_icons: tuple[str, str, str]
    variation_texts: tuple[str, str, str]

    def to_dict(self) -> dict:
        return {
            "motif": self.motif.value,
            "viz": self.viz,
            "network_icon": self.network_icon,
            "network_text": self.network_text,
            "facts_template": self.facts_template,
            "visual_pattern_name": self.visual_pattern_name,
            "visual_icon": self.visual_icon,
            "visual_text": self.visual_text,
            "variation_icons": list(self.variation_icons),
            "variation_texts": list(self.variation_texts),
        }


def _card_from_dict(rec: dict) -> ExplanationCard:
    try:
        motif = MotifKind(rec["motif"])
        if rec["viz"] not in VIZ_KINDS:
            raise ValueError(f"unknown viz {rec['viz']!r}")
        icons = tuple(rec["variation_icons"])
        texts = tuple(rec["variation_texts"])
        if len(icons) != 3 or len(texts) != 3:
            raise ValueError("a card needs exactly 3 variations")
        return ExplanationCard(
            motif=motif, viz=rec["viz"],
            network_icon=rec["network_icon"], network_text=rec["network_text"],
            facts_template=rec["facts_template"],
            visual_pattern_name=rec["visual_pattern_name"],
            visual_icon=rec["visual_icon"], visual_text=rec["visual_text"],
            variation_icons=icons, variation_texts=texts,
        )
    except KeyError as e:
        raise ValueError(f"card record missing field {e.args[0]!r}") from None


class Repository:
    """Validated, immutable card collection."""

    def __init__(self, cards: list[ExplanationCard]):
        by_pair: dict[tuple[MotifKind, str], ExplanationCard] = {}
        for card in cards:
            pair = (card.motif, card.viz)
            if pair in by_pair:
                raise ValueError(f"duplicate card for {pair}")
            by_pair[pair] = card
        for motif in TOPOLOGICAL_KINDS:
            for viz in VIZ_KINDS:
                if (motif, viz) not in by_pair:
                    raise ValueError(f"missing card for ({motif.value}, {viz})")
        for motif in TEMPORAL_KINDS:
            if (motif, TIME_ARCS) not in by_pair:
                raise ValueError(f"missing card for ({motif.value}, {TIME_ARCS})")
            for viz in VIZ_KINDS:
                if viz != TIME_ARCS and (motif, viz) in by_pair:
                    raise ValueError(f"temporal motif {motif.value} cannot have a {viz} card")
        self._by_pair = by_pair

    @classmethod
    def load(cls, path: str | Path | None = None) -> "Repository":
        if path is None:
            path = os.environ.get(PATTERN_REPO_ENV)
        if path is not None:
            raw = Path(path).read_text(encoding="utf-8")
        else:
            raw = resources.files("motiflens.data").joinpath("cards.json").read_text("utf-8")
        records = json.loads(raw)
        return cls([_card_from_dict(rec) for rec in records])

    def card(self, motif: MotifKind, viz: str) -> ExplanationCard:
        try:
            return self._by_pair[(motif, viz)]
        except KeyError:
            raise UnknownPair(f"no card for ({motif.value}, {viz})") from None

    def cards_for(self, viz: str) -> list[ExplanationCard]:
        kinds = list(MotifKind)
        return [c for (_, v), c in sorted(self._by_pair.items(),
                                          key=lambda kv: (kinds.index(kv[0][0]), kv[0][1]))
                if v == viz]

    def all_cards(self) -> list[ExplanationCard]:
        kinds = list(MotifKind)
        return [self._by_pair[k] for k in
                sorted(self._by_pair, key=lambda kv: (kinds.index(kv[0]), kv[1]))]

    def __len__(self) -> int:
        return len(self._by_pair)


_default: Repository | None = None


def default_repository() -> Repository:
    """Process-wide repository, honoring PATTERN_REPO at first use."""
    global _default
    if _default is None:
        _default = Repository.load()
    return _default


def get_card(motif: MotifKind, viz: str) -> ExplanationCard:
    return default_repository().card(motif, viz)

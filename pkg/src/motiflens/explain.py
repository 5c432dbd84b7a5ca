"""Selector and explainer pop-up content generation.

Maps a mining result to one of three cases: no instances means the
selected visual pattern is probably an artifact of layout or encoding,
one instance is a clean one-to-one reading, and several instances mean
the visual pattern is a confuser with multiple candidate explanations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Network
from .motifs import (KIND_NAMES, MiningResult, MotifKind, PatternInstance,
                     mine)

ARTIFACT_MESSAGE = ("No network patterns were found here. The selected visual "
                    "pattern is most likely an artifact of the layout or the "
                    "visual encoding.")


class MappingCase(Enum):
    ARTIFACT = "artifact"
    ONE_TO_ONE = "one-to-one"
    CONFUSER = "confuser"


def classify_mapping(result: MiningResult) -> MappingCase:
    n = len(result.instances)
    if n == 0:
        return MappingCase.ARTIFACT
    if n == 1:
        return MappingCase.ONE_TO_ONE
    return MappingCase.CONFUSER


@dataclass(frozen=True)
class SelectorSummary:
    total: int
    per_kind: tuple[tuple[MotifKind, int], ...]
    message: str

    def to_dict(self) -> dict:
        return {"total": self.total,
                "per_kind": [[k.value, c] for k, c in self.per_kind],
                "message": self.message}


def _kind_phrase(kind: MotifKind, count: int) -> str:
    singular, plural = KIND_NAMES[kind]
    return f"{count} {singular if count == 1 else plural}"


def _join_phrases(phrases: list[str]) -> str:
    if len(phrases) == 1:
        return phrases[0]
    if len(phrases) == 2:
        return f"{phrases[0]} and {phrases[1]}"
    return ", ".join(phrases[:-1]) + f", and {phrases[-1]}"


def selector_summary(result: MiningResult) -> SelectorSummary:
    """Pop-up headline for a selection, e.g. the 4-pattern case renders as
    "Your selection has 4 network patterns, including 2 cliques and
    2 strong links."
    """
    per_kind = sorted(result.counts.items(),
                      key=lambda kv: (-kv[1], KIND_NAMES[kv[0]][0]))
    total = sum(result.counts.values())
    if total == 0:
        return SelectorSummary(0, (), ARTIFACT_MESSAGE)
    noun = "network pattern" if total == 1 else "network patterns"
    listed = _join_phrases([_kind_phrase(k, c) for k, c in per_kind])
    message = f"Your selection has {total} {noun}, including {listed}."
    return SelectorSummary(total, tuple(per_kind), message)


def data_facts(inst: PatternInstance, net: Network) -> dict:
    """Pop-up facts: size, density, and network-wide weight ranking."""
    for nid in inst.elements.node_ids:
        net.node(nid)
    links = [net.link(lid) for lid in inst.elements.link_ids]
    facts = dict(inst.facts)
    if links:
        top = max(l.weight for l in links)
        distinct = sorted({l.weight for l in net.links}, reverse=True)
        facts["top_weight_rank"] = distinct.index(top) + 1
        facts["top_weight_tied"] = sum(1 for l in net.links if l.weight == top) > 1
    else:
        facts["top_weight_rank"] = None
        facts["top_weight_tied"] = False
    return facts


def format_facts(template: str, facts: dict) -> str:
    """Instantiate a card's facts template from a data_facts record."""
    rank = facts.get("top_weight_rank")
    rank_text = "unranked" if rank is None else (
        f"{rank} (tied)" if facts.get("top_weight_tied") else str(rank))
    return template.format(nodes=facts["nodes"], links=facts["links"],
                           density=round(facts["density"], 3), rank=rank_text)


def related_instances(kind: MotifKind, net: Network,
                      exclude: PatternInstance | None = None,
                      mining: MiningResult | None = None) -> list[PatternInstance]:
    """Other instances of the same kind, largest first.

    ``mining`` short-circuits the whole-network mining pass when the
    caller already holds a cached top-down result.
    """
    result = mining if mining is not None else mine(net)
    exclude_key = exclude.salience_key if exclude is not None else None
    out = [i for i in result.instances
           if i.kind is kind and i.salience_key != exclude_key]
    return sorted(out, key=lambda i: (-len(i.elements.node_ids), i.salience_key))

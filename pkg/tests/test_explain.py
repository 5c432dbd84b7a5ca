import json

import pytest

from motiflens.errors import UnknownElement, UnknownPair
from motiflens.explain import (ARTIFACT_MESSAGE, MappingCase, classify_mapping,
                               data_facts, format_facts, related_instances,
                               selector_summary)
from motiflens.graph import elements
from motiflens.motifs import (MiningResult, MotifKind, PatternInstance,
                              detect_cliques, detect_fans, detect_link_motifs,
                              mine)
from motiflens.repository import Repository, default_repository

from .conftest import complete_net, net_from_links


def fake_result(counts: dict[MotifKind, int]) -> MiningResult:
    instances = []
    for kind, count in counts.items():
        for i in range(count):
            instances.append(PatternInstance(kind, elements([f"x{i}"]), {},
                                             f"{kind.value}:{i:012d}"))
    return MiningResult(tuple(instances), dict(counts))


class TestClassifyMapping:
    @pytest.mark.parametrize("count,expected", [
        (0, MappingCase.ARTIFACT), (1, MappingCase.ONE_TO_ONE),
        *[(n, MappingCase.CONFUSER) for n in range(2, 11)],
    ])
    def test_counts_map_to_cases(self, count, expected):
        assert classify_mapping(fake_result({MotifKind.HUB: count} if count else {})) \
            is expected


class TestSelectorSummary:
    def test_paper_sentence(self):
        summary = selector_summary(fake_result({MotifKind.CLIQUE: 2,
                                                MotifKind.STRONG_LINK: 2}))
        assert summary.message == ("Your selection has 4 network patterns, "
                                   "including 2 cliques and 2 strong links.")
        assert summary.total == 4

    def test_artifact_message(self):
        summary = selector_summary(fake_result({}))
        assert "is most likely an artifact" in summary.message
        assert summary.message == ARTIFACT_MESSAGE
        assert summary.total == 0

    def test_singular(self):
        summary = selector_summary(fake_result({MotifKind.HUB: 1}))
        assert summary.message == ("Your selection has 1 network pattern, "
                                   "including 1 hub.")

    def test_three_kinds_listed(self):
        summary = selector_summary(fake_result({MotifKind.HUB: 3, MotifKind.FAN: 2,
                                                MotifKind.CHAIN: 1}))
        assert summary.message == ("Your selection has 6 network patterns, "
                                   "including 3 hubs, 2 fans, and 1 chain.")

    def test_order_count_desc_then_name(self):
        summary = selector_summary(fake_result({MotifKind.STRONG_LINK: 2,
                                                MotifKind.CLIQUE: 2,
                                                MotifKind.BRIDGE_NODE: 5}))
        assert [k for k, _ in summary.per_kind] == \
            [MotifKind.BRIDGE_NODE, MotifKind.CLIQUE, MotifKind.STRONG_LINK]

    @pytest.mark.parametrize("n", range(11))
    def test_grammar_agreement(self, n):
        summary = selector_summary(fake_result({MotifKind.CLUSTER: n} if n else {}))
        if n == 0:
            assert summary.message == ARTIFACT_MESSAGE
        elif n == 1:
            assert "1 network pattern," in summary.message
            assert "1 cluster." in summary.message
        else:
            assert f"{n} network patterns," in summary.message
            assert f"{n} clusters." in summary.message

    def test_total_is_sum_of_per_kind(self):
        summary = selector_summary(fake_result({MotifKind.FAN: 2, MotifKind.HUB: 3}))
        assert summary.total == sum(c for _, c in summary.per_kind)


class TestDataFacts:
    def test_k5_clique_facts(self, k5):
        inst = detect_cliques(k5)[0]
        facts = data_facts(inst, k5)
        assert facts["nodes"] == 5
        assert facts["links"] == 10
        assert facts["density"] == 1.0
        assert facts["top_weight_rank"] == 1 and facts["top_weight_tied"]

    def test_strong_link_rank_one(self):
        pairs = [(f"a{i}", f"b{i}") for i in range(20)] + \
            [("x", "y", {"weight": 10.0})]
        net = net_from_links(pairs)
        inst = [i for i in detect_link_motifs(net)
                if i.kind is MotifKind.STRONG_LINK][0]
        facts = data_facts(inst, net)
        assert facts["top_weight_rank"] == 1 and not facts["top_weight_tied"]

    def test_fan_density(self):
        net = net_from_links([("c", "l1"), ("c", "l2"), ("c", "l3")])
        inst = detect_fans(net)[0]
        facts = data_facts(inst, net)
        assert (facts["nodes"], facts["links"], facts["density"]) == (4, 3, 0.5)

    def test_unknown_element(self, k5):
        inst = detect_cliques(k5)[0]
        stray = PatternInstance(inst.kind, elements(["ghost"]), inst.facts, "x")
        with pytest.raises(UnknownElement):
            data_facts(stray, k5)

    def test_format_facts(self, k5):
        inst = detect_cliques(k5)[0]
        card = default_repository().card(MotifKind.CLIQUE, "matrix")
        text = format_facts(card.facts_template, data_facts(inst, k5))
        assert "5" in text and "10" in text


class TestRelatedInstances:
    def three_fans(self):
        pairs = []
        for c, k in (("c1", 3), ("c2", 4), ("c3", 5)):
            pairs += [(c, f"{c}l{i}") for i in range(k)]
        pairs += [("c1", "c2"), ("c2", "c3")]
        return net_from_links(pairs)

    def test_excludes_the_selected_instance(self):
        net = self.three_fans()
        fans = [i for i in mine(net).instances if i.kind is MotifKind.FAN]
        assert len(fans) == 3
        related = related_instances(MotifKind.FAN, net, exclude=fans[0])
        assert len(related) == 2
        assert fans[0].salience_key not in {i.salience_key for i in related}

    def test_sole_instance_has_no_relatives(self, k5):
        inst = detect_cliques(k5)[0]
        assert related_instances(MotifKind.CLIQUE, k5, exclude=inst) == []

    def test_exclusion_of_other_kind_is_noop(self):
        net = self.three_fans()
        hubs_dont_matter = PatternInstance(MotifKind.HUB, elements(["c1"]), {}, "zz")
        related = related_instances(MotifKind.FAN, net, exclude=hubs_dont_matter)
        assert len(related) == 3

    def test_ordered_by_size_descending(self):
        net = self.three_fans()
        related = related_instances(MotifKind.FAN, net)
        sizes = [len(i.elements.node_ids) for i in related]
        assert sizes == sorted(sizes, reverse=True)


class TestRepository:
    def test_thirty_five_cards(self):
        repo = default_repository()
        assert len(repo) == 35

    def test_every_topological_kind_has_three_cards(self):
        repo = default_repository()
        for kind in MotifKind:
            vizzes = [v for v in ("node-link", "matrix", "time-arcs")
                      if (kind, v) in repo._by_pair]
            assert len(vizzes) == (1 if kind.temporal else 3)

    def test_fan_matrix_is_free_bar(self):
        card = default_repository().card(MotifKind.FAN, "matrix")
        assert card.visual_pattern_name == "Free Bar"

    def test_fan_text_defines_degree_one_leaves(self):
        for viz in ("node-link", "matrix", "time-arcs"):
            card = default_repository().card(MotifKind.FAN, viz)
            assert "a node connects to several other nodes of degree 1" \
                in card.network_text

    def test_temporal_card_for_wrong_viz_raises(self):
        with pytest.raises(UnknownPair):
            default_repository().card(MotifKind.RECIPROCAL_LINK, "matrix")

    def test_exactly_three_variations(self):
        for card in default_repository().all_cards():
            assert len(card.variation_icons) == 3
            assert len(card.variation_texts) == 3

    def test_env_override(self, tmp_path, monkeypatch):
        cards = [c.to_dict() for c in default_repository().all_cards()]
        cards_path = tmp_path / "cards.json"
        cards_path.write_text(json.dumps(cards))
        monkeypatch.setenv("PATTERN_REPO", str(cards_path))
        assert len(Repository.load()) == 35

    def test_missing_card_rejected(self):
        cards = default_repository().all_cards()
        with pytest.raises(ValueError):
            Repository(cards[:-1])


class TestCheatsheet:
    def test_entry_counts(self):
        from motiflens.cheatsheet import export_cheatsheet
        counts = {}
        for viz in ("node-link", "matrix", "time-arcs"):
            html = export_cheatsheet(viz)
            counts[viz] = html.count('<div class="card">')
        assert counts == {"node-link": 11, "matrix": 11, "time-arcs": 13}

    def test_partition_covers_every_card_once(self):
        from motiflens.cheatsheet import export_cheatsheet
        total = sum(export_cheatsheet(v).count('<div class="card">')
                    for v in ("node-link", "matrix", "time-arcs"))
        assert total == 35

    def test_facts_and_related_omitted(self):
        from motiflens.cheatsheet import export_cheatsheet
        html = export_cheatsheet("matrix")
        assert "related" not in html.lower()
        assert "{nodes}" not in html

    def test_icons_render_for_every_key(self):
        from motiflens.icons import icon_svg
        for card in default_repository().all_cards():
            for key in (card.network_icon, card.visual_icon, *card.variation_icons):
                svg = icon_svg(key)
                assert svg.startswith("<svg") and svg.endswith("</svg>")


def test_complete_net_helper():
    assert len(complete_net(6).links) == 15

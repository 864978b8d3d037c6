import json

import pytest

from contracta import campaign
from contracta.canon import canonical_form
from contracta.contraction import classify
from contracta.generation import brute_force_3connected
from contracta.graph import complete, complete_minus_edge, octahedron, wheel
from contracta.graph6 import parse_graph6

# derived with the operational contraction test over the brute-force oracle
# (n <= 7) and frozen; the n = 8 members come from the exhaustive run
ZERO_UP_TO_8 = ["Es\\o", "Es\\w", "Et\\w", "E{Sw", "F]`Hw", "Fqoxw", "GsXPGs", "G{O_ww", "G{O_w{"]
ONE_UP_TO_8 = ["Eqlw", "Fqdhw", "F{OXw", "GdOn?{"]


@pytest.fixture(scope="module")
def report8():
    return campaign.lemma_audit(8)


def oracle_exceptions(n):
    zero, one = set(), set()
    for g in brute_force_3connected(n):
        c = classify(g, check=True)
        key = canonical_form(g).bytes.decode()
        if c.contractible_count == 0 and not ({"complete", "wheel"} & set(c.tags)):
            zero.add(key)
        if c.contractible_count == 1 and "complete-minus-edge" not in c.tags:
            one.add(key)
    return zero, one


def test_exceptions_match_operational_oracle_up_to_7():
    zero, one = set(), set()
    for n in range(4, 8):
        z, o = oracle_exceptions(n)
        zero |= z
        one |= o
    report = campaign.verify_theorems(7)
    assert set(report["theorems"]["zero-contractible"]["exceptional"]) == zero
    assert set(report["theorems"]["exactly-one-contractible"]["exceptional"]) == one
    assert zero == {g for g in ZERO_UP_TO_8 if parse_graph6(g).n <= 7}
    assert one == {g for g in ONE_UP_TO_8 if parse_graph6(g).n <= 7}


def test_report_n8(report8):
    assert report8["schema"] == "contracta/1"
    assert report8["status"] == "PASS"
    assert report8["countsByOrder"] == {"4": 1, "5": 3, "6": 17, "7": 136, "8": 2388}
    assert report8["graphsProcessed"] == 1 + 3 + 17 + 136 + 2388
    th = report8["theorems"]
    assert th["zero-contractible"]["exceptional"] == ZERO_UP_TO_8
    assert th["exactly-one-contractible"]["exceptional"] == ONE_UP_TO_8
    assert th["contractible-bound"]["maxByOrder"] == {"4": 0, "5": 1, "6": 3, "7": 7, "8": 12}


def test_octahedron_is_extremal_at_6(report8):
    extremal = report8["theorems"]["contractible-bound"]["extremalByOrder"]["6"]
    assert canonical_form(octahedron()).bytes.decode() in extremal


def test_audit_checks_all_exercised(report8):
    for name in campaign.AUDIT_CHECKS:
        entry = report8["audit"][name]
        assert entry["status"] == "PASS", name
        assert entry["instances"] > 0, name
        assert entry["failures"] == 0


def test_named_exception_limits(report8):
    for name, limits in campaign.NAMED_EXCEPTIONS.items():
        hits = report8["audit"][name]["exceptionsHit"]
        for kind, limit in limits.items():
            assert len(hits[kind]) <= limit


def test_families():
    from contracta.generation import Leaf
    from contracta.connectivity import three_cut_masks

    def leaf(g):
        return Leaf(g.n, g.adj, tuple(sorted(three_cut_masks(g.adj, g.n))))

    assert campaign.family_of(leaf(complete(6))) == "complete"
    assert campaign.family_of(leaf(complete_minus_edge(6))) == "complete-minus-edge"
    assert campaign.family_of(leaf(wheel(8))) == "wheel"
    assert campaign.family_of(leaf(octahedron())) is None
    assert campaign.contractible_count(leaf(wheel(8))) == 0


def test_thread_count_does_not_change_report():
    one = campaign.build_report(campaign.run_campaign(7, 7, threads=1), 7, 7)
    two = campaign.build_report(campaign.run_campaign(7, 7, threads=2), 7, 7)
    assert json.dumps(one, sort_keys=True) == json.dumps(two, sort_keys=True)


def test_order_limits():
    with pytest.raises(campaign.CampaignError):
        campaign.verify_theorems(5)
    with pytest.raises(campaign.CampaignError):
        campaign.run_campaign(13)


def test_catalog_files(tmp_path):
    zero, one = campaign.derive_catalogs(7)
    paths = campaign.write_catalogs(str(tmp_path), zero, one)
    text = open(paths[0]).read()
    assert campaign.read_catalog(text) == [g for g in ZERO_UP_TO_8 if parse_graph6(g).n <= 7]
    # annotations precede every entry
    lines = text.splitlines()
    for i, line in enumerate(lines):
        if not line.startswith("#"):
            assert lines[i - 1].startswith("#")
    keys = [(e.n, e.g6) for e in zero]
    assert keys == sorted(keys)


def test_describe_mentions_shapes():
    notes = campaign.describe(wheel(5))
    assert notes[0].startswith("n=5 edges=8 kappa=3 contractible=0")
    assert any("fans SW4+SW4" in line for line in notes)

import json

from squarestable.codec import decode_graph6, encode_graph6
from squarestable.families import GraphFamily
from squarestable.graphs import disjoint_union, is_cycle_of_length
from squarestable.harness import (ALL_CLAIMS, CLAIMS, CONTROL_FAMILIES, Claim,
                                  _applies_connected_ke, _applies_girth6,
                                  _applies_pendant_pm, _applies_tree,
                                  _applies_unique_pm, _scan,
                                  reverify_counterexample, run_claim,
                                  run_negative_controls)
from squarestable.invariants import DEFAULT_BUDGET, SolverBudget, gamma, ind_dom
from squarestable.named_graphs import (GALLERY, c4_with_two_pendants, comb,
                                       complete, cycle, double_star,
                                       fused_triangles, path, paw, star)

SMALL = [GraphFamily.exhaustive(n) for n in range(1, 5)]


# -- hypothesis filters, unit-tested on their own ------------------------------

def test_tree_filter():
    assert _applies_tree(path(5), DEFAULT_BUDGET)
    assert not _applies_tree(cycle(5), DEFAULT_BUDGET)
    assert not _applies_tree(path(1), DEFAULT_BUDGET)
    assert not _applies_tree(disjoint_union(path(2), path(2)), DEFAULT_BUDGET)


def test_girth6_filter_exclusions():
    assert _applies_girth6(path(4), DEFAULT_BUDGET)
    assert _applies_girth6(cycle(6), DEFAULT_BUDGET)
    assert _applies_girth6(cycle(8), DEFAULT_BUDGET)
    assert not _applies_girth6(cycle(7), DEFAULT_BUDGET)      # excluded cycle
    assert not _applies_girth6(complete(1), DEFAULT_BUDGET)   # excluded K1
    assert not _applies_girth6(cycle(5), DEFAULT_BUDGET)      # girth below 6
    assert not _applies_girth6(paw(), DEFAULT_BUDGET)


def test_connected_ke_filter():
    assert _applies_connected_ke(path(2), DEFAULT_BUDGET)
    assert _applies_connected_ke(paw(), DEFAULT_BUDGET)
    assert not _applies_connected_ke(cycle(5), DEFAULT_BUDGET)
    assert not _applies_connected_ke(complete(1), DEFAULT_BUDGET)


def test_pendant_pm_filter():
    assert _applies_pendant_pm(comb(3), DEFAULT_BUDGET)
    assert _applies_pendant_pm(path(2), DEFAULT_BUDGET)
    assert not _applies_pendant_pm(path(6), DEFAULT_BUDGET)


def test_unique_pm_filter():
    assert _applies_unique_pm(path(6), DEFAULT_BUDGET)
    assert _applies_unique_pm(paw(), DEFAULT_BUDGET)
    assert not _applies_unique_pm(cycle(4), DEFAULT_BUDGET)  # two matchings
    assert not _applies_unique_pm(path(5), DEFAULT_BUDGET)   # odd order


# -- engine behaviour ----------------------------------------------------------

def test_all_claims_pass_small_exhaustive():
    for name in CLAIMS:
        verdict = run_claim(name, SMALL)
        assert verdict.passed, (name, verdict.counterexample)
        assert verdict.skipped == 0 and verdict.complete


def test_verdict_counts_hypothesis_filtering():
    verdict = run_claim("tree-well-covered-equivalences", GraphFamily.exhaustive(4))
    assert verdict.graphs_seen == 64
    # labeled trees on 4 vertices: 16 of the 64 graphs
    assert verdict.graphs_checked == 16


def test_determinism_identical_runs():
    fams = [GraphFamily.gnp(7, 0.4, 40, seed=5), GraphFamily.exhaustive(4)]
    for name in ("inequality-chain", "vwc-pendant-characterization"):
        a = run_claim(name, fams).to_json()
        b = run_claim(name, fams).to_json()
        assert a == b


def test_jobs_do_not_change_the_verdict():
    fams = [GraphFamily.exhaustive(5)]
    for name in ("square-stable-equivalences", "control-well-covered-implies-square-stable"):
        solo = run_claim(name, fams, jobs=1).to_json()
        multi = run_claim(name, fams, jobs=2).to_json()
        assert solo == multi


def test_planted_mutation_is_caught():
    # flip one inequality of the chain; the harness must refute it
    def applies(g, budget):
        return g.n >= 1

    def violation(g, budget):
        iv = ind_dom(g, budget)[0]
        gm = gamma(g, budget)[0]
        if iv <= gm:
            return None
        return {"values": {"ind_dom": iv, "gamma": gm}}

    mutated = Claim("mutated-chain", "planted", applies, violation)
    witness = double_star(3, 3)
    seen, checked, skipped, best = _scan(mutated, [witness], DEFAULT_BUDGET)
    assert best is not None
    assert best[0] == encode_graph6(witness)


def test_budget_exhaustion_records_skips_not_failures():
    verdict = run_claim("inequality-chain", GraphFamily.graph6_lines(
        [encode_graph6(cycle(9)), encode_graph6(path(3))], label="unit"),
        budget=SolverBudget(max_nodes=20, max_seconds=60.0))
    assert verdict.passed
    assert verdict.skipped == 1
    assert verdict.graphs_checked == 1
    assert not verdict.complete


def test_counterexample_is_lexicographically_least():
    bad = [cycle(4), c4_with_two_pendants()]  # both refute the control claim
    lines = sorted(encode_graph6(g) for g in bad)
    verdict = run_claim("control-well-covered-implies-square-stable",
                        GraphFamily.graph6_lines(lines[::-1], label="unit"))
    assert not verdict.passed
    assert verdict.counterexample["graph6"] == lines[0]


def test_counterexample_reverifies_from_graph6():
    verdict = run_claim("control-unique-perfect-matching-implies-square-stable",
                        [GraphFamily.exhaustive(4)])
    assert not verdict.passed
    assert reverify_counterexample(verdict.theorem_id, verdict.counterexample)


def test_negative_controls_all_refute():
    verdicts = run_negative_controls()
    assert len(verdicts) == len(CONTROL_FAMILIES)
    for v in verdicts:
        assert v.kind == "control"
        assert v.passed, v.theorem_id
        assert v.counterexample is not None


def test_control_counterexamples_match_expected_shapes():
    by_name = {v.theorem_id: v for v in run_negative_controls()}
    wc_cex = decode_graph6(
        by_name["control-well-covered-implies-square-stable"].counterexample["graph6"])
    assert is_cycle_of_length(wc_cex, 4)
    pm_cex = decode_graph6(
        by_name["control-unique-perfect-matching-implies-square-stable"]
        .counterexample["graph6"])
    assert pm_cex.n == 4 and len(pm_cex.edges) == 4  # a labeled paw


def test_control_claims_flag_the_named_fixtures():
    unique_pm = ALL_CLAIMS["control-unique-perfect-matching-implies-square-stable"]
    for g in (path(6), paw()):
        assert unique_pm.applies(g, DEFAULT_BUDGET)
        assert unique_pm.violation(g, DEFAULT_BUDGET) is not None
    unique_omega = ALL_CLAIMS["control-unique-square-maximum-implies-square-stable"]
    assert unique_omega.applies(fused_triangles(), DEFAULT_BUDGET)
    assert unique_omega.violation(fused_triangles(), DEFAULT_BUDGET) is not None
    ke_pendants = ALL_CLAIMS["control-ke-pendant-count-implies-square-stable"]
    assert ke_pendants.applies(path(3), DEFAULT_BUDGET)
    assert ke_pendants.violation(path(3), DEFAULT_BUDGET) is not None


def test_chain_values_on_star():
    claim = ALL_CLAIMS["inequality-chain"]
    assert claim.violation(star(5), DEFAULT_BUDGET) is None
    # the chain instantiates to 1 <= 1 <= 1 <= 1 <= 5 <= 5
    from squarestable.graphs import square
    from squarestable.invariants import alpha, theta

    g = star(5)
    sq = square(g)
    values = (alpha(sq)[0], theta(sq)[0], gamma(g)[0], ind_dom(g)[0],
              alpha(g)[0], theta(g)[0])
    assert values == (1, 1, 1, 1, 5, 5)


def test_gallery_passes_every_applicable_claim():
    lines = [encode_graph6(g) for g in GALLERY.values()]
    fam = GraphFamily.graph6_lines(lines, label="gallery")
    for name in CLAIMS:
        verdict = run_claim(name, fam)
        assert verdict.passed, (name, verdict.counterexample)


def test_verdict_json_shape():
    verdict = run_claim("inequality-chain", GraphFamily.exhaustive(3))
    record = json.loads(verdict.to_json())
    assert list(record) == ["theorem", "kind", "family", "graphs_seen",
                            "graphs_checked", "skipped", "complete", "passed",
                            "counterexample"]
    assert record["family"] == "exhaustive:3"
    assert record["kind"] == "theorem"

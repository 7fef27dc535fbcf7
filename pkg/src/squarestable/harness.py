"""Machine-checking of the square-stability claims over graph families.

Every claim is registered with a hypothesis filter and a violation evaluator
that recomputes each side of the claim from defining formulas, never from
another claim, so an error in one equivalence cannot mask another.  A verdict
reports how many graphs were seen, how many satisfied the hypotheses, how
many were skipped because a solver ran out of budget (a skip is never a
refutation), and the lexicographically least graph6 counterexample if any
violation was found.

Negative controls deliberately check false claims; a control passes only when
its claim is refuted by a concrete, re-verifiable counterexample.  A control
that comes back green is a harness failure.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .codec import decode_graph6, encode_graph6
from .families import GraphFamily, generate
from .graphs import (Graph, distances, girth_at_least, is_connected,
                     is_cycle_of_length, is_tree, pendant_edges, square)
from .invariants import (DEFAULT_BUDGET, BudgetExhausted, SolverBudget, alpha,
                         count_perfect_matchings, core_set, gamma, ind_dom,
                         mu, omega_family, simplexes, simplicial_vertices, theta)
from .recognizers import (has_pendant_perfect_matching, is_simplicial_graph,
                          is_well_covered)


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one claim checked over one family."""

    theorem_id: str
    family: str
    graphs_seen: int
    graphs_checked: int
    skipped: int
    passed: bool
    counterexample: dict | None
    kind: str = "theorem"

    @property
    def complete(self) -> bool:
        return self.skipped == 0

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "kind": self.kind,
            "family": self.family,
            "graphs_seen": self.graphs_seen,
            "graphs_checked": self.graphs_checked,
            "skipped": self.skipped,
            "complete": self.complete,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=False)


@dataclass(frozen=True)
class Claim:
    name: str
    description: str
    applies: Callable[[Graph, SolverBudget], bool]
    violation: Callable[[Graph, SolverBudget], dict | None]


# ---------------------------------------------------------------------------
# shared condition helpers (definition-level, no recognizer shortcuts)


def _alpha(g, budget):
    return alpha(g, budget)[0]


def _theta(g, budget):
    return theta(g, budget)[0]


def _wc(g, budget):
    return is_well_covered(g, budget)[0]


def _ke(g, budget):
    return _alpha(g, budget) + mu(g)[0] == g.n


def _ss(g, budget):
    return _alpha(g, budget) == _alpha(square(g), budget)


def _vwc(g, budget):
    return (all(g.degree(v) > 0 for v in range(g.n))
            and g.n == 2 * _alpha(g, budget)
            and _wc(g, budget))


def _has_perfect_matching(g):
    return 2 * mu(g)[0] == g.n


def _distance3_omega_member_exists(g, budget) -> bool:
    """Literal reading: some maximum stable set is pairwise at distance >= 3."""
    d = distances(g)
    for s in omega_family(g, budget):
        ok = True
        for u, v in combinations(sorted(s), 2):
            if d[u][v] is not None and d[u][v] < 3:
                ok = False
                break
        if ok:
            return True
    return False


def _simplex_cover_counts(g, budget) -> list[int]:
    counts = [0] * g.n
    for s in simplexes(g, budget):
        for v in s:
            counts[v] += 1
    return counts


def _expected_square_omega(g, matching) -> list[frozenset[int]]:
    """Maximum stable sets of the square forced by a pendant perfect matching:
    one pendant endpoint per matched edge, the choice being free only on
    two-vertex components where both endpoints are pendant."""
    per_edge = []
    for u, v in sorted(matching):
        ends = [w for w in (u, v) if g.degree(w) == 1]
        per_edge.append(ends)
    return sorted((frozenset(pick) for pick in product(*per_edge)), key=sorted)


def _equal_or_table(conditions: dict[str, bool], values: dict | None = None) -> dict | None:
    if len(set(conditions.values())) <= 1:
        return None
    out = {"conditions": conditions}
    if values:
        out["values"] = values
    return out


# ---------------------------------------------------------------------------
# claim evaluators


def _applies_nonempty(g, budget):
    return g.n >= 1


def _violation_chain(g, budget):
    sq = square(g)
    vals = {
        "alpha_square": _alpha(sq, budget),
        "theta_square": _theta(sq, budget),
        "gamma": gamma(g, budget)[0],
        "ind_dom": ind_dom(g, budget)[0],
        "alpha": _alpha(g, budget),
        "theta": _theta(g, budget),
    }
    chain = [vals["alpha_square"], vals["theta_square"], vals["gamma"],
             vals["ind_dom"], vals["alpha"], vals["theta"]]
    if all(a <= b for a, b in zip(chain, chain[1:])):
        return None
    return {"values": vals}


def _applies_connected(g, budget):
    return g.n >= 1 and is_connected(g)


def _violation_equivalences(g, budget):
    sq = square(g)
    a = _alpha(g, budget)
    a2 = _alpha(sq, budget)
    t = _theta(g, budget)
    t2 = _theta(sq, budget)
    gam = gamma(g, budget)[0]
    ind = ind_dom(g, budget)[0]
    conditions = {
        "unique_simplex_cover": all(c == 1 for c in _simplex_cover_counts(g, budget)),
        "alpha_square_equal": a == a2,
        "theta_square_equal": t == t2,
        "all_six_invariants_equal": a2 == t2 == gam == ind == a == t,
        "simplicial_and_well_covered": is_simplicial_graph(g) and _wc(g, budget),
        "distance3_maximum_stable_set": _distance3_omega_member_exists(g, budget),
    }
    return _equal_or_table(conditions, {
        "alpha": a, "alpha_square": a2, "theta": t, "theta_square": t2,
        "gamma": gam, "ind_dom": ind})


def _applies_connected_square_stable(g, budget):
    return g.n >= 1 and is_connected(g) and _ss(g, budget)


def _violation_simplicial_correspondence(g, budget):
    sq = square(g)
    omega_sq = omega_family(sq, budget)
    union = frozenset().union(*omega_sq) if omega_sq else frozenset()
    simp = simplicial_vertices(g)
    core_sq = core_set(sq, budget)
    lone = set()
    for s in simplexes(g, budget):
        owners = s & simp
        if len(owners) == 1:
            lone |= owners
    conditions = {
        "square_omega_union_is_simp": union == simp,
        "square_core_is_lone_simplicial": core_sq == frozenset(lone),
    }
    if all(conditions.values()):
        return None
    return {"conditions": conditions, "values": {
        "square_omega_union": sorted(union),
        "simplicial_vertices": sorted(simp),
        "square_core": sorted(core_sq),
        "lone_simplicial": sorted(lone)}}


def _applies_pendant_pm(g, budget):
    return g.n >= 1 and has_pendant_perfect_matching(g) is not None


def _violation_pendant_matching(g, budget):
    m = has_pendant_perfect_matching(g)
    assert m is not None
    expected = _expected_square_omega(g, m)
    got = omega_family(square(g), budget)
    conditions = {
        "square_stable": _ss(g, budget),
        "square_omega_is_pendant_selections": got == expected,
    }
    if all(conditions.values()):
        return None
    return {"conditions": conditions, "values": {
        "square_omega": [sorted(s) for s in got],
        "expected": [sorted(s) for s in expected]}}


def _applies_connected_ke(g, budget):
    return g.n >= 2 and is_connected(g) and _ke(g, budget)


def _violation_ke_characterization(g, budget):
    a = _alpha(g, budget)
    conditions = {
        "square_stable": _ss(g, budget),
        "pendant_perfect_matching": has_pendant_perfect_matching(g) is not None,
        "vwc_with_alpha_pendants": (_vwc(g, budget)
                                    and len(pendant_edges(g)) == a),
    }
    return _equal_or_table(conditions, {
        "alpha": a, "pendant_edges": len(pendant_edges(g))})


def _applies_tree(g, budget):
    return g.n >= 2 and is_tree(g)


def _violation_tree_equivalences(g, budget):
    conditions = {
        "well_covered": _wc(g, budget),
        "very_well_covered": _vwc(g, budget),
        "pendant_perfect_matching": has_pendant_perfect_matching(g) is not None,
        "square_stable": _ss(g, budget),
    }
    return _equal_or_table(conditions)


def _applies_connected_ss_n2(g, budget):
    return g.n >= 2 and is_connected(g) and _ss(g, budget)


def _violation_alpha_le_mu(g, budget):
    a = _alpha(g, budget)
    m = mu(g)[0]
    if a <= m:
        return None
    return {"values": {"alpha": a, "mu": m}}


def _applies_square_ke(g, budget):
    return g.n >= 2 and is_connected(g) and _ke(square(g), budget)


def _violation_square_ke(g, budget):
    conditions = {
        "square_stable": _ss(g, budget),
        "ke_with_perfect_matching": _ke(g, budget) and _has_perfect_matching(g),
    }
    return _equal_or_table(conditions, {
        "alpha": _alpha(g, budget), "mu": mu(g)[0], "order": g.n})


def _applies_vwc_characterization(g, budget):
    return (g.n >= 2 and is_connected(g)) or (g.n >= 1 and _ss(g, budget))


def _violation_vwc_characterization(g, budget):
    details: dict = {"conditions": {}, "values": {}}
    bad = False
    if g.n >= 2 and is_connected(g):
        left = _ss(g, budget) and _vwc(g, budget)
        right = (_ke(g, budget) and _has_perfect_matching(g)
                 and len(pendant_edges(g)) == _alpha(g, budget))
        details["conditions"]["square_stable_and_vwc"] = left
        details["conditions"]["ke_pm_alpha_pendants"] = right
        bad = bad or left != right
    if _ss(g, budget):
        ke_g = _ke(g, budget)
        ke_sq = _ke(square(g), budget)
        details["conditions"]["ke_base"] = ke_g
        details["conditions"]["ke_square"] = ke_sq
        bad = bad or ke_g != ke_sq
    return details if bad else None


def _applies_girth6(g, budget):
    return (g.n >= 2 and is_connected(g) and girth_at_least(g, 6)
            and not is_cycle_of_length(g, 7))


def _violation_girth6(g, budget):
    a = _alpha(g, budget)
    conditions = {
        "well_covered": _wc(g, budget),
        "pendant_perfect_matching": has_pendant_perfect_matching(g) is not None,
        "very_well_covered": _vwc(g, budget),
        "ke_alpha_pendants_empty_core": (_ke(g, budget)
                                         and len(pendant_edges(g)) == a
                                         and not core_set(g, budget)),
        "ke_and_square_stable": _ke(g, budget) and _ss(g, budget),
    }
    return _equal_or_table(conditions, {
        "alpha": a, "pendant_edges": len(pendant_edges(g)),
        "core": sorted(core_set(g, budget))})


def _is_complete_graph(g):
    return len(g.edges) == g.n * (g.n - 1) // 2


def _applies_vwc_basics(g, budget):
    if g.n < 2:
        return False
    if all(g.degree(v) > 0 for v in range(g.n)):
        return True
    if is_connected(g) and _ke(g, budget):
        return True
    return not _is_complete_graph(g) and _wc(g, budget)


def _violation_vwc_basics(g, budget):
    conditions: dict = {}
    values: dict = {}
    bad = False
    if g.n >= 2 and all(g.degree(v) > 0 for v in range(g.n)):
        left = _vwc(g, budget)
        right = _wc(g, budget) and _ke(g, budget)
        conditions["vwc_equals_wc_and_ke"] = left == right
        bad = bad or left != right
    if g.n >= 2 and is_connected(g) and _ke(g, budget):
        eq = _wc(g, budget) == _vwc(g, budget)
        conditions["connected_ke_wc_equals_vwc"] = eq
        bad = bad or not eq
    if g.n >= 2 and not _is_complete_graph(g) and _wc(g, budget):
        from .graphs import delete_closed_neighborhood

        a = _alpha(g, budget)
        all_good = True
        for v in range(g.n):
            h, _ = delete_closed_neighborhood(g, v)
            if h.n < 1 or not _wc(h, budget) or _alpha(h, budget) != a - 1:
                all_good = False
                values["failing_vertex"] = v
                break
        conditions["neighborhood_deletion_preserves"] = all_good
        bad = bad or not all_good
    if not bad:
        return None
    out = {"conditions": conditions}
    if values:
        out["values"] = values
    return out


def _applies_disconnected(g, budget):
    return g.n >= 1 and not is_connected(g)


def _violation_componentwise(g, budget):
    from .graphs import components

    whole = _ss(g, budget)
    parts = all(_ss(comp, budget) for comp, _ in components(g))
    if whole == parts:
        return None
    return {"conditions": {"whole_square_stable": whole,
                           "all_components_square_stable": parts}}


# ---------------------------------------------------------------------------
# negative-control evaluators (claims that are deliberately false)


def _applies_well_covered_only(g, budget):
    return g.n >= 1 and _wc(g, budget)


def _applies_unique_pm(g, budget):
    return g.n >= 1 and count_perfect_matchings(g, limit=2) == 1


def _applies_unique_square_omega(g, budget):
    return g.n >= 1 and len(omega_family(square(g), budget)) == 1


def _applies_ke_alpha_pendants(g, budget):
    return (g.n >= 2 and is_connected(g) and _ke(g, budget)
            and len(pendant_edges(g)) == _alpha(g, budget))


def _violation_not_square_stable(g, budget):
    if _ss(g, budget):
        return None
    return {"conditions": {"square_stable": False}}


def _violation_not_ss_and_vwc(g, budget):
    if _ss(g, budget) and _vwc(g, budget):
        return None
    return {"conditions": {"square_stable": _ss(g, budget),
                           "very_well_covered": _vwc(g, budget)}}


# ---------------------------------------------------------------------------
# registry


CLAIMS: dict[str, Claim] = {c.name: c for c in [
    Claim("inequality-chain",
          "alpha(G^2) <= theta(G^2) <= gamma(G) <= i(G) <= alpha(G) <= theta(G)",
          _applies_nonempty, _violation_chain),
    Claim("square-stable-equivalences",
          "six equivalent descriptions of connected square-stable graphs",
          _applies_connected, _violation_equivalences),
    Claim("square-simplicial-correspondence",
          "in the square of a square-stable graph, Omega covers exactly the "
          "simplicial vertices and the core keeps exactly the lone ones",
          _applies_connected_square_stable, _violation_simplicial_correspondence),
    Claim("pendant-matching-implies-square-stable",
          "a pendant perfect matching forces square stability and pins down "
          "the maximum stable sets of the square",
          _applies_pendant_pm, _violation_pendant_matching),
    Claim("ke-square-stable-characterization",
          "for connected Konig-Egervary graphs: square stability == pendant "
          "perfect matching == very well covered with alpha pendant edges",
          _applies_connected_ke, _violation_ke_characterization),
    Claim("tree-well-covered-equivalences",
          "for trees: well covered == very well covered == pendant perfect "
          "matching == square-stable",
          _applies_tree, _violation_tree_equivalences),
    Claim("square-stable-alpha-le-mu",
          "connected square-stable graphs satisfy alpha <= mu",
          _applies_connected_ss_n2, _violation_alpha_le_mu),
    Claim("square-ke-perfect-matching",
          "when the square is Konig-Egervary: square-stable == Konig-Egervary "
          "with a perfect matching",
          _applies_square_ke, _violation_square_ke),
    Claim("vwc-pendant-characterization",
          "square-stable and very well covered == Konig-Egervary with a "
          "perfect matching and alpha pendant edges; square stability makes "
          "the Konig-Egervary property agree between G and its square",
          _applies_vwc_characterization, _violation_vwc_characterization),
    Claim("girth6-well-covered-equivalences",
          "five equivalent descriptions for connected graphs of girth >= 6 "
          "other than the 7-cycle and the single vertex",
          _applies_girth6, _violation_girth6),
    Claim("very-well-covered-basics",
          "very well covered == well covered Konig-Egervary (no isolated "
          "vertices); for connected Konig-Egervary graphs well covered == "
          "very well covered; closed-neighborhood deletion keeps well "
          "covered and drops alpha by one",
          _applies_vwc_basics, _violation_vwc_basics),
    Claim("componentwise-square-stability",
          "a disconnected graph is square-stable exactly when every "
          "component is",
          _applies_disconnected, _violation_componentwise),
]}


CONTROL_CLAIMS: dict[str, Claim] = {c.name: c for c in [
    Claim("control-well-covered-implies-square-stable",
          "planted-false: well covered would force square stability",
          _applies_well_covered_only, _violation_not_square_stable),
    Claim("control-unique-perfect-matching-implies-square-stable",
          "planted-false: a unique perfect matching would force square stability",
          _applies_unique_pm, _violation_not_square_stable),
    Claim("control-unique-square-maximum-implies-square-stable",
          "planted-false: a unique maximum stable set in the square would "
          "force square stability",
          _applies_unique_square_omega, _violation_not_square_stable),
    Claim("control-ke-pendant-count-implies-square-stable",
          "planted-false: Konig-Egervary with alpha pendant edges would force "
          "square stability and very-well-coveredness (drops the perfect "
          "matching requirement)",
          _applies_ke_alpha_pendants, _violation_not_ss_and_vwc),
]}

ALL_CLAIMS: dict[str, Claim] = {**CLAIMS, **CONTROL_CLAIMS}

#: Exhaustive search spaces in which each control must find its refutation.
CONTROL_FAMILIES: dict[str, tuple[GraphFamily, ...]] = {
    "control-well-covered-implies-square-stable":
        tuple(GraphFamily.exhaustive(n) for n in range(1, 5)),
    "control-unique-perfect-matching-implies-square-stable":
        tuple(GraphFamily.exhaustive(n) for n in range(1, 7)),
    "control-unique-square-maximum-implies-square-stable":
        tuple(GraphFamily.exhaustive(n) for n in range(1, 7)),
    "control-ke-pendant-count-implies-square-stable":
        tuple(GraphFamily.exhaustive(n) for n in range(1, 5)),
}


# ---------------------------------------------------------------------------
# engine


def _families_tuple(family: GraphFamily | Sequence[GraphFamily]) -> tuple[GraphFamily, ...]:
    if isinstance(family, GraphFamily):
        return (family,)
    return tuple(family)


def _scan(claim: Claim, graphs: Iterable[Graph], budget: SolverBudget):
    seen = checked = skipped = 0
    best: tuple[str, dict] | None = None
    for g in graphs:
        seen += 1
        try:
            if not claim.applies(g, budget):
                continue
            details = claim.violation(g, budget)
        except BudgetExhausted:
            skipped += 1
            continue
        checked += 1
        if details is not None:
            s = encode_graph6(g)
            if best is None or s < best[0]:
                best = (s, details)
    return seen, checked, skipped, best


def _scan_encoded(args: tuple[str, tuple[str, ...], SolverBudget]):
    name, lines, budget = args
    claim = ALL_CLAIMS[name]
    return _scan(claim, (decode_graph6(s) for s in lines), budget)


def run_claim(
    name: str,
    family: GraphFamily | Sequence[GraphFamily],
    budget: SolverBudget = DEFAULT_BUDGET,
    jobs: int = 1,
) -> TheoremVerdict:
    """Check one registered claim over a family and aggregate the verdict."""
    claim = ALL_CLAIMS[name]
    fams = _families_tuple(family)
    seen = checked = skipped = 0
    best: tuple[str, dict] | None = None
    if jobs <= 1:
        for fam in fams:
            s, c, k, b = _scan(claim, generate(fam), budget)
            seen += s
            checked += c
            skipped += k
            if b is not None and (best is None or b[0] < best[0]):
                best = b
    else:
        batches: list[tuple[str, tuple[str, ...], SolverBudget]] = []
        for fam in fams:
            bucket: list[str] = []
            for g in generate(fam):
                bucket.append(encode_graph6(g))
                if len(bucket) >= 2048:
                    batches.append((name, tuple(bucket), budget))
                    bucket = []
            if bucket:
                batches.append((name, tuple(bucket), budget))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for s, c, k, b in pool.map(_scan_encoded, batches):
                seen += s
                checked += c
                skipped += k
                if b is not None and (best is None or b[0] < best[0]):
                    best = b
    counterexample = None
    if best is not None:
        counterexample = {"graph6": best[0], **best[1]}
    return TheoremVerdict(
        theorem_id=name,
        family=" + ".join(f.describe() for f in fams),
        graphs_seen=seen,
        graphs_checked=checked,
        skipped=skipped,
        passed=best is None,
        counterexample=counterexample,
        kind="control" if name in CONTROL_CLAIMS else "theorem",
    )


def reverify_counterexample(name: str, counterexample: dict,
                            budget: SolverBudget = DEFAULT_BUDGET) -> bool:
    """Re-run a claim on a reported counterexample straight from its graph6."""
    claim = ALL_CLAIMS[name]
    g = decode_graph6(counterexample["graph6"])
    return claim.applies(g, budget) and claim.violation(g, budget) is not None


def run_negative_controls(
    budget: SolverBudget = DEFAULT_BUDGET, jobs: int = 1,
    names: Sequence[str] | None = None,
) -> list[TheoremVerdict]:
    """Run the planted-false claims; each must be refuted and re-verified.

    The returned verdicts invert the usual meaning of ``passed``: a control
    passes when its claim fails with a counterexample that re-verifies.
    """
    out = []
    for name, fams in CONTROL_FAMILIES.items():
        if names is not None and name not in names:
            continue
        verdict = run_claim(name, fams, budget, jobs)
        refuted = (not verdict.passed
                   and verdict.counterexample is not None
                   and reverify_counterexample(name, verdict.counterexample, budget))
        out.append(TheoremVerdict(
            theorem_id=name,
            family=verdict.family,
            graphs_seen=verdict.graphs_seen,
            graphs_checked=verdict.graphs_checked,
            skipped=verdict.skipped,
            passed=refuted,
            counterexample=verdict.counterexample,
            kind="control",
        ))
    return out


# ---------------------------------------------------------------------------
# one thin wrapper per checked statement


def check_inequality_chain(family, budget=DEFAULT_BUDGET, jobs=1) -> TheoremVerdict:
    return run_claim("inequality-chain", family, budget, jobs)


def check_square_stable_equivalences(family, budget=DEFAULT_BUDGET, jobs=1) -> TheoremVerdict:
    return run_claim("square-stable-equivalences", family, budget, jobs)


def check_square_simplicial_correspondence(family, budget=DEFAULT_BUDGET,
                                           jobs=1) -> TheoremVerdict:
    return run_claim("square-simplicial-correspondence", family, budget, jobs)


def check_pendant_matching_square_stability(family, budget=DEFAULT_BUDGET,
                                            jobs=1) -> TheoremVerdict:
    return run_claim("pendant-matching-implies-square-stable", family, budget, jobs)


def check_ke_square_stable_characterization(family, budget=DEFAULT_BUDGET,
                                            jobs=1) -> TheoremVerdict:
    return run_claim("ke-square-stable-characterization", family, budget, jobs)


def check_tree_well_covered_equivalences(family, budget=DEFAULT_BUDGET,
                                         jobs=1) -> TheoremVerdict:
    return run_claim("tree-well-covered-equivalences", family, budget, jobs)


def check_square_stable_matching_bound(family, budget=DEFAULT_BUDGET,
                                       jobs=1) -> TheoremVerdict:
    return run_claim("square-stable-alpha-le-mu", family, budget, jobs)


def check_square_ke_perfect_matching(family, budget=DEFAULT_BUDGET,
                                     jobs=1) -> TheoremVerdict:
    return run_claim("square-ke-perfect-matching", family, budget, jobs)


def check_vwc_pendant_characterization(family, budget=DEFAULT_BUDGET,
                                       jobs=1) -> TheoremVerdict:
    return run_claim("vwc-pendant-characterization", family, budget, jobs)


def check_girth6_well_covered_equivalences(family, budget=DEFAULT_BUDGET,
                                           jobs=1) -> TheoremVerdict:
    return run_claim("girth6-well-covered-equivalences", family, budget, jobs)


def check_very_well_covered_basics(family, budget=DEFAULT_BUDGET,
                                   jobs=1) -> TheoremVerdict:
    return run_claim("very-well-covered-basics", family, budget, jobs)


def check_componentwise_square_stability(family, budget=DEFAULT_BUDGET,
                                         jobs=1) -> TheoremVerdict:
    return run_claim("componentwise-square-stability", family, budget, jobs)

"""Claim registry and verification harness.

Every structural claim relating a finite space to its disjointness graphs
is registered under a stable id together with a one-line mathematical
statement, a tier and a checker.  Guaranteed-tier claims are asserted over
discrete spaces, where the ring-of-functions model is faithful; explore
mode records verdicts for every claim over arbitrary finite topologies
without ever failing the run, because several statements provably need
separation hypotheses and their divergences are findings, not defects.

Reports serialize to JSON Lines (schema ``veritas/1``) and are
byte-stable: fixed key order, deterministic claim/space ordering, no
timestamps.
"""

from __future__ import annotations

import fnmatch
import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import graphcore as gc
from .graphcore import DEGENERATE, INF, UGraph
from .idealgraph import (
    HomWitness,
    build_ag_discrete,
    build_dg,
    distance_classifier,
    ecc_classifier,
    girth_predictor,
    is_vertex,
    leaf_classifier,
    orthogonality_test,
    radius_predictor,
    triangulated_predictor,
    twin_expansion,
)
from .topo import (
    PointSet,
    SpaceClass,
    Topology,
    canonical_form,
    canonical_topologies,
    cellularity,
    classify,
    clopen_count,
    closure_mask,
    interior_mask,
    is_dense,
    weight,
    _component_labels,
)

SCHEMA = "veritas/1"
DEFAULT_HOM_TRIALS = 200
HOM_PROBE_KEY = "twin:probe:k2x2"

PASS = "pass"
FAIL = "fail"
DEGEN = "degenerate"
NA = "not-applicable"

_SENTINEL_TYPE = type(INF)


def _jsonable(x):
    if isinstance(x, _SENTINEL_TYPE):
        return x.name
    if isinstance(x, PointSet):
        return x.render()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class ClaimResult:
    verdict: str
    expected: object = None
    computed: object = None
    witness: dict | None = None


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    tier: str  # "guaranteed" | "explore"
    scope: str  # "space" | "trial"
    applies: Callable[[Topology, SpaceClass], bool] | None = None
    check: Callable | None = None  # space: (ws, t, cls) -> ClaimResult
    check_trial: Callable | None = None  # trial: (HomWitness) -> ClaimResult
    find: str = "fail"  # what a search over spaces looks for


@dataclass(frozen=True)
class TheoremReport:
    claim: str
    space: str
    verdict: str
    expected: object
    computed: object
    witness: dict | None
    mode: str  # "assert" | "explore"

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "mode": self.mode,
            "claim": self.claim,
            "space": self.space,
            "verdict": self.verdict,
            "expected": self.expected,
            "computed": self.computed,
            "witness": self.witness,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


class Workspace:
    """Shared memo for the model graphs and their invariant tables."""

    def __init__(self):
        self._ag: dict[int, UGraph] = {}
        self._ag_inv: dict[int, gc.InvariantReport] = {}
        self._ag_gi: dict[int, dict] = {}
        self._dg: dict[Topology, UGraph] = {}
        self._dg_inv: dict[Topology, gc.InvariantReport] = {}

    def ag(self, m: int) -> UGraph:
        if m not in self._ag:
            self._ag[m] = build_ag_discrete(m)
        return self._ag[m]

    def ag_inv(self, m: int) -> gc.InvariantReport:
        if m not in self._ag_inv:
            self._ag_inv[m] = gc.compute_invariants(self.ag(m))
        return self._ag_inv[m]

    def ag_gi(self, m: int) -> dict:
        """gi values for every unordered non-leaf vertex pair of the
        discrete model, keyed by (label, label)."""
        if m not in self._ag_gi:
            g = self.ag(m)
            nonleaf = [u for u in g.labels if gc.degree(g, u) != 1]
            table = {}
            for a, b in itertools.combinations(nonleaf, 2):
                table[(a, b)] = gc.gi(g, a, b, cap=8)
            self._ag_gi[m] = table
        return self._ag_gi[m]

    def dg(self, t: Topology) -> UGraph:
        if t not in self._dg:
            self._dg[t] = build_dg(t)
        return self._dg[t]

    def dg_inv(self, t: Topology) -> gc.InvariantReport:
        if t not in self._dg_inv:
            self._dg_inv[t] = gc.compute_invariants(self.dg(t))
        return self._dg_inv[t]


def _applies_all(t: Topology, cls: SpaceClass) -> bool:
    return True


def _applies_discrete(t: Topology, cls: SpaceClass) -> bool:
    return cls.is_discrete


def _applies_multipoint(t: Topology, cls: SpaceClass) -> bool:
    # the ring-side vertex notions are vacuous on a one-point space
    return t.n >= 2


def _iff(lhs: bool, rhs: bool, witness: dict | None = None) -> ClaimResult:
    if lhs == rhs:
        return ClaimResult(PASS, expected=lhs, computed=rhs)
    return ClaimResult(FAIL, expected=lhs, computed=rhs, witness=witness or {})


def _eq(expected, computed, witness: dict | None = None) -> ClaimResult:
    if expected == computed:
        return ClaimResult(PASS, expected=expected, computed=computed)
    return ClaimResult(FAIL, expected=expected, computed=computed, witness=witness or {})


def _graph_witness(t: Topology, g: UGraph, **extra) -> dict:
    w = {"topology": t.to_text(), "edges": [[a.render(), b.render()] for a, b in g.edges()]}
    w.update(extra)
    return w


def _subsets(t: Topology) -> range:
    return range(1 << t.n)


def _component_masks(t: Topology) -> list[int]:
    labels = _component_labels(t)
    masks = [0] * (max(labels) + 1)
    for x, c in enumerate(labels):
        masks[c] |= 1 << x
    return masks


def _component_unions(t: Topology) -> list[int]:
    comps = _component_masks(t)
    out = set()
    for bits in range(1 << len(comps)):
        m = 0
        for i in range(len(comps)):
            if bits >> i & 1:
                m |= comps[i]
        out.add(m)
    return sorted(out)


# --------------------------------------------------------------------------
# Operator-level checkers (identities of the open-set calculus; these hold
# for every finite topology).
# --------------------------------------------------------------------------


def _i_mask(t: Topology, u: int) -> int:
    return interior_mask(t, t._full & ~u)


def _c_lem_order(ws, t, cls):
    full = t._full
    for u in _subsets(t):
        iu = _i_mask(t, u)
        if (iu == 0) != (closure_mask(t, u) == full):
            return ClaimResult(FAIL, witness={"topology": t.to_text(), "u": f"{u:#x}"})
        if (iu == full) != (u == 0):
            return ClaimResult(FAIL, witness={"topology": t.to_text(), "u": f"{u:#x}"})
        if iu != _i_mask(t, closure_mask(t, u)):
            return ClaimResult(FAIL, witness={"topology": t.to_text(), "u": f"{u:#x}"})
        for v in _subsets(t):
            if u & ~v == 0 and _i_mask(t, v) & ~iu:
                return ClaimResult(
                    FAIL, witness={"topology": t.to_text(), "u": f"{u:#x}", "v": f"{v:#x}"}
                )
    return ClaimResult(PASS, computed={"subsets_checked": 1 << t.n})


def _c_prop_generated(ws, t, cls):
    cu = _component_unions(t)
    for a in cu:
        for b in cu:
            span = 0
            for c in cu:
                if c & ~(a | b) == 0:
                    span |= c
            if span != a | b:
                return ClaimResult(
                    FAIL,
                    witness={"topology": t.to_text(), "a": f"{a:#x}", "b": f"{b:#x}"},
                )
    return ClaimResult(PASS, computed={"cozero_pairs_checked": len(cu) ** 2})


def _c_prop_cap_cup(ws, t, cls):
    comps = _component_masks(t)
    m = len(comps)
    for u in _subsets(t):
        iu = _i_mask(t, u)
        for v in _subsets(t):
            iv = _i_mask(t, v)
            if _i_mask(t, u | v) != iu & iv:
                return ClaimResult(
                    FAIL, witness={"topology": t.to_text(), "u": f"{u:#x}", "v": f"{v:#x}"}
                )
            if (iu | iv) & ~_i_mask(t, u & v):
                return ClaimResult(
                    FAIL, witness={"topology": t.to_text(), "u": f"{u:#x}", "v": f"{v:#x}"}
                )
    # support model: sums map to unions, pairwise intersections to
    # intersections, on the component lattice
    for s in range(1 << m):
        for r in range(1 << m):
            qs = sum(comps[i] for i in range(m) if s >> i & 1)
            qr = sum(comps[i] for i in range(m) if r >> i & 1)
            qsum = sum(comps[i] for i in range(m) if (s | r) >> i & 1)
            qcap = sum(comps[i] for i in range(m) if (s & r) >> i & 1)
            if qsum != qs | qr or qcap != qs & qr:
                return ClaimResult(FAIL, witness={"topology": t.to_text()})
    return ClaimResult(PASS, computed={"subset_pairs_checked": (1 << t.n) ** 2})


def _c_strict_cup(ws, t, cls):
    for u in _subsets(t):
        for v in range(u, 1 << t.n):
            lhs = _i_mask(t, u & v)
            rhs = _i_mask(t, u) | _i_mask(t, v)
            if rhs & ~lhs == 0 and lhs != rhs:
                return ClaimResult(
                    PASS,
                    expected="strict inclusion",
                    computed={
                        "i_of_intersection": PointSet(t.n, lhs),
                        "union_of_i": PointSet(t.n, rhs),
                    },
                    witness={
                        "topology": t.to_text(),
                        "u": PointSet(t.n, u),
                        "v": PointSet(t.n, v),
                        "i_of_intersection": PointSet(t.n, lhs),
                        "union_of_i": PointSet(t.n, rhs),
                    },
                )
    return ClaimResult(NA, computed="no strict pair on this space")


def _c_strict_cap(ws, t, cls):
    cozeros = [m for m in _component_unions(t) if m]
    for a, b in itertools.combinations(cozeros, 2):
        if a & b:
            return ClaimResult(
                PASS,
                expected="strict inclusion",
                computed={"cozero_union_of_intersection": PointSet(t.n, 0),
                          "intersection_of_cozero_unions": PointSet(t.n, a & b)},
                witness={
                    "topology": t.to_text(),
                    "cozero_u": PointSet(t.n, a),
                    "cozero_v": PointSet(t.n, b),
                    "cozero_union_of_intersection": PointSet(t.n, 0),
                    "intersection_of_cozero_unions": PointSet(t.n, a & b),
                    "ideal_level_strict": False,
                },
            )
    return ClaimResult(NA, computed="no overlapping distinct cozero sets")


def _c_prop_o_and_i(ws, t, cls):
    for g in t.opens:
        a1 = _i_mask(t, g)
        a3 = _i_mask(t, _i_mask(t, a1))
        if a1 != a3:
            return ClaimResult(
                FAIL,
                expected=PointSet(t.n, a1),
                computed=PointSet(t.n, a3),
                witness={"topology": t.to_text(), "g": PointSet(t.n, g)},
            )
    return ClaimResult(PASS, computed={"opens_checked": len(t.opens)})


def _c_thm_ij_zero(ws, t, cls):
    full = t._full
    opens = t.opens
    for g in opens:
        ag = _i_mask(t, g)
        clg = closure_mask(t, g)
        for h in opens:
            ah = _i_mask(t, h)
            clh = closure_mask(t, h)
            checks = (
                ((g & ah == 0) == (g & ~clh == 0)),
                ((ag & ah == 0) == (closure_mask(t, g | h) == full)),
                ((clg == clh) == (ag == ah)),
            )
            if not all(checks):
                return ClaimResult(
                    FAIL,
                    witness={"topology": t.to_text(), "g": f"{g:#x}", "h": f"{h:#x}"},
                )
        for u in _subsets(t):
            if (g & _i_mask(t, u) == 0) != (g & ~closure_mask(t, u) == 0):
                return ClaimResult(
                    FAIL,
                    witness={"topology": t.to_text(), "g": f"{g:#x}", "u": f"{u:#x}"},
                )
    # support model: products of support ideals vanish iff supports are
    # disjoint iff the attached open sets are disjoint
    comps = _component_masks(t)
    m = len(comps)
    for s in range(1 << m):
        qs = sum(comps[i] for i in range(m) if s >> i & 1)
        for r in range(1 << m):
            qr = sum(comps[i] for i in range(m) if r >> i & 1)
            if (s & r == 0) != (qs & qr == 0):
                return ClaimResult(FAIL, witness={"topology": t.to_text()})
    return ClaimResult(PASS, computed={"open_pairs_checked": len(opens) ** 2})


def _c_cor_i_product_zero(ws, t, cls):
    for u in _subsets(t):
        iu = _i_mask(t, u)
        for v in _subsets(t):
            lhs = iu & _i_mask(t, v) == 0
            rhs = closure_mask(t, u | v) == t._full
            if lhs != rhs:
                return ClaimResult(
                    FAIL,
                    expected=rhs,
                    computed=lhs,
                    witness={"topology": t.to_text(), "u": f"{u:#x}", "v": f"{v:#x}"},
                )
    return ClaimResult(PASS, computed={"subset_pairs_checked": (1 << t.n) ** 2})


def _c_lem_o_onto(ws, t, cls):
    comps = _component_masks(t)
    for g in t.opens:
        for c in comps:
            if g & c not in (0, c):
                return ClaimResult(
                    FAIL,
                    expected="every open is a union of weak components",
                    computed=f"open {g:#x} splits component {c:#x}",
                    witness={"topology": t.to_text(), "open": PointSet(t.n, g)},
                )
    return ClaimResult(PASS, computed={"opens_checked": len(t.opens)})


def _c_cor_element_ag_a(ws, t, cls):
    for g in t.opens:
        if g == 0:
            continue
        lhs = is_vertex(t, PointSet(t.n, g))
        rhs = closure_mask(t, g) != t._full
        if lhs != rhs:
            return ClaimResult(
                FAIL, expected=rhs, computed=lhs,
                witness={"topology": t.to_text(), "g": PointSet(t.n, g)},
            )
    return ClaimResult(PASS, computed={"opens_checked": len(t.opens)})


def _element_ag_b_truth(t: Topology, u: int) -> bool:
    return closure_mask(t, u) != t._full and interior_mask(t, closure_mask(t, u)) != 0


def _c_cor_element_ag_b_literal(ws, t, cls):
    for u in _subsets(t):
        literal = interior_mask(t, closure_mask(t, u)) != 0
        repaired = _element_ag_b_truth(t, u)
        if literal != repaired:
            return ClaimResult(
                FAIL,
                expected=repaired,
                computed=literal,
                witness={
                    "topology": t.to_text(),
                    "u": PointSet(t.n, u),
                    "u_dense": is_dense(t, PointSet(t.n, u)),
                    "literal_predicate": literal,
                    "repaired_predicate": repaired,
                },
            )
    return ClaimResult(PASS, computed={"subsets_checked": 1 << t.n})


def _c_cor_element_ag_b_repaired(ws, t, cls):
    for u in _subsets(t):
        iu = _i_mask(t, u)
        vertexhood = iu != 0 and closure_mask(t, iu) != t._full
        if _element_ag_b_truth(t, u) != vertexhood:
            return ClaimResult(
                FAIL, witness={"topology": t.to_text(), "u": PointSet(t.n, u)}
            )
    return ClaimResult(PASS, computed={"subsets_checked": 1 << t.n})


def _c_cor_orthogonal(ws, t, cls):
    g = ws.dg(t)
    if g.vertex_count < 2:
        return ClaimResult(DEGEN, computed="graph has fewer than two vertices")
    for a, b in itertools.combinations(g.labels, 2):
        lhs = gc.orthogonal(g, a, b)
        rhs = orthogonality_test(t, a, b)
        if lhs != rhs:
            return ClaimResult(
                FAIL, expected=rhs, computed=lhs,
                witness=_graph_witness(t, g, a=a, b=b),
            )
    return ClaimResult(PASS, computed={"pairs_checked": g.vertex_count * (g.vertex_count - 1) // 2})


# --------------------------------------------------------------------------
# Ring-model checkers over the annihilating-ideal graph.  These apply to
# discrete spaces, where the ring of functions sees every point.
# --------------------------------------------------------------------------


def _ag_guard(ws, t):
    if t.n < 2:
        return None
    return ws.ag_inv(t.n)


def _c_prop_size2_diam(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _iff(t.n == 2, inv.diameter == 1, {"topology": t.to_text(), "diameter": _jsonable(inv.diameter)})


def _c_prop_size2_clique(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _iff(t.n == 2, inv.clique_number == 2, {"topology": t.to_text(), "clique": inv.clique_number})


def _c_prop_size2_bipartite(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    two_part = inv.is_bipartite and inv.vertex_count >= 2
    return _iff(t.n == 2, two_part, {"topology": t.to_text(), "bipartite": inv.is_bipartite})


def _c_prop_size2_complete_bipartite(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _iff(t.n == 2, inv.is_complete_bipartite, {"topology": t.to_text()})


def _c_prop_diam3(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _iff(t.n >= 3, inv.diameter == 3, {"topology": t.to_text(), "diameter": _jsonable(inv.diameter)})


def _c_prop_chi_clique(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _eq(inv.clique_number, inv.chromatic_number, {"topology": t.to_text()})


def _c_prop_finite(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    expected = (1 << t.n) - 2
    ok = (
        inv.vertex_count == expected
        and isinstance(inv.clique_number, int)
        and isinstance(inv.chromatic_number, int)
        and isinstance(inv.dominating_number, int)
    )
    return _eq(
        {"vertex_count": expected, "all_finite": True},
        {"vertex_count": inv.vertex_count, "all_finite": ok},
        {"topology": t.to_text()},
    )


def _c_lem_distance(ws, t, cls):
    if t.n < 2:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    g = ws.ag(t.n)
    dmat = gc.distance_matrix(g)
    for i, a in enumerate(g.labels):
        for j in range(i + 1, g.vertex_count):
            b = g.labels[j]
            predicted = distance_classifier(t, a, b)
            actual = dmat[i][j]
            if predicted != actual:
                return ClaimResult(
                    FAIL, expected=predicted, computed=actual,
                    witness=_graph_witness(t, g, a=a, b=b),
                )
    return ClaimResult(PASS, computed={"pairs_checked": g.vertex_count * (g.vertex_count - 1) // 2})


def _c_prop_ecc(ws, t, cls):
    if t.n < 2:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    g = ws.ag(t.n)
    inv = ws.ag_inv(t.n)
    for v in g.labels:
        predicted = ecc_classifier(t, v)
        actual = inv.eccentricity[v]
        if predicted != actual:
            return ClaimResult(
                FAIL, expected=predicted, computed=_jsonable(actual),
                witness=_graph_witness(t, g, vertex=v),
            )
    return ClaimResult(PASS, computed={"vertices_checked": g.vertex_count})


def _c_cor_star(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _iff(t.n == 2, inv.is_star, {"topology": t.to_text()})


def _c_thm_radius(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    predicted = radius_predictor(t.n, cls.has_isolated_point)
    return _eq(predicted, _jsonable(inv.radius), {"topology": t.to_text()})


def _c_prop_leaf(ws, t, cls):
    if t.n < 2:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    g = ws.ag(t.n)
    for v in g.labels:
        predicted = leaf_classifier(t, v)
        actual = gc.degree(g, v) == 1
        if predicted != actual:
            return ClaimResult(
                FAIL, expected=predicted, computed=actual,
                witness=_graph_witness(t, g, vertex=v),
            )
    return ClaimResult(PASS, computed={"vertices_checked": g.vertex_count})


def _gi_cases(ws, t):
    """Classified non-leaf vertex pairs with their measured gi values."""
    g = ws.ag(t.n)
    table = ws.ag_gi(t.n)
    full = t._full
    rows = []
    for (a, b), measured in table.items():
        disjoint = a.mask & b.mask == 0
        union_cl = closure_mask(t, a.mask | b.mask)
        eq_cl = closure_mask(t, a.mask) == closure_mask(t, b.mask)
        outside = (full & ~union_cl).bit_count()
        rows.append((a, b, disjoint, union_cl == full, eq_cl, outside, measured))
    return rows


def _gi_part_check(ws, t, selector, expected_value, iff_direction):
    if t.n < 2:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    rows = _gi_cases(ws, t)
    checked = 0
    for a, b, disjoint, dense, eq_cl, outside, measured in rows:
        in_case = selector(disjoint, dense, eq_cl, outside)
        if in_case:
            checked += 1
            if measured != expected_value:
                return ClaimResult(
                    FAIL, expected=expected_value, computed=_jsonable(measured),
                    witness=_graph_witness(t, ws.ag(t.n), a=a, b=b),
                )
        elif iff_direction and measured == expected_value:
            return ClaimResult(
                FAIL,
                expected=f"gi={expected_value} only inside the case",
                computed=_jsonable(measured),
                witness=_graph_witness(t, ws.ag(t.n), a=a, b=b),
            )
    if checked == 0:
        return ClaimResult(NA, computed="no non-leaf pair matches the case")
    return ClaimResult(PASS, computed={"pairs_in_case": checked})


def _c_lem_gi_a(ws, t, cls):
    return _gi_part_check(ws, t, lambda dj, dn, eq, out: dj and not dn, 3, True)


def _c_lem_gi_b(ws, t, cls):
    return _gi_part_check(ws, t, lambda dj, dn, eq, out: dj and dn, 4, False)


def _c_lem_gi_c(ws, t, cls):
    return _gi_part_check(ws, t, lambda dj, dn, eq, out: not dj and eq, 4, False)


def _c_lem_gi_d(ws, t, cls):
    return _gi_part_check(ws, t, lambda dj, dn, eq, out: not dj and not eq and out >= 2, 4, False)


def _c_lem_gi_e(ws, t, cls):
    return _gi_part_check(ws, t, lambda dj, dn, eq, out: not dj and not eq and out == 1, 5, True)


def _c_lem_gi_dense_overlap(ws, t, cls):
    return _gi_part_check(ws, t, lambda dj, dn, eq, out: not dj and not eq and out == 0, 6, True)


def _c_thm_girth(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _eq(_jsonable(girth_predictor(t.n)), _jsonable(inv.girth), {"topology": t.to_text()})


def _c_thm_triangulated(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    g = ws.ag(t.n)
    isolated = cls.has_isolated_point
    leaf_exists = any(gc.degree(g, v) == 1 for v in g.labels)
    not_tri = not inv.is_triangulated
    predicted_tri = triangulated_predictor(t)
    if isolated == leaf_exists == not_tri and predicted_tri == inv.is_triangulated:
        return ClaimResult(PASS, computed={
            "has_isolated_point": isolated,
            "has_leaf": leaf_exists,
            "is_triangulated": inv.is_triangulated,
        })
    return ClaimResult(
        FAIL,
        expected="isolated point iff leaf iff not triangulated",
        computed={
            "has_isolated_point": isolated,
            "has_leaf": leaf_exists,
            "is_triangulated": inv.is_triangulated,
        },
        witness=_graph_witness(t, g),
    )


def _dt_two_point_exception(ws, t):
    """On the two-point space the graph is a single edge and one vertex
    dominates it, so the dominating number is 1, below the cellularity of
    2; the domination claims hold from three points on."""
    inv = ws.ag_inv(t.n)
    return ClaimResult(NA, computed={
        "note": "two-point exception: a single vertex dominates the edge",
        "dominating_number": inv.dominating_number,
        "cellularity": cellularity(t),
        "weight": weight(t),
    })


def _c_thm_dt_bounds(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    if t.n == 2:
        return _dt_two_point_exception(ws, t)
    c, w = cellularity(t), weight(t)
    dt = inv.dominating_number
    if c <= dt <= w:
        return ClaimResult(PASS, computed={"cellularity": c, "dominating_number": dt, "weight": w})
    return ClaimResult(
        FAIL,
        expected="cellularity <= dominating number <= weight",
        computed={"cellularity": c, "dominating_number": dt, "weight": w},
        witness=_graph_witness(t, ws.ag(t.n)),
    )


def _c_cor_dt_discrete(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    if t.n == 2:
        return _dt_two_point_exception(ws, t)
    return _eq(t.n, inv.dominating_number, {"topology": t.to_text()})


def _c_thm_dt_finite(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    if t.n == 2:
        return _dt_two_point_exception(ws, t)
    if isinstance(inv.dominating_number, int) and inv.dominating_number == t.n:
        return ClaimResult(PASS, computed={"dominating_number": inv.dominating_number})
    return ClaimResult(
        FAIL,
        expected={"finite": True, "dominating_number": t.n},
        computed={"dominating_number": _jsonable(inv.dominating_number)},
        witness=_graph_witness(t, ws.ag(t.n)),
    )


def _c_thm_chi_clique_c(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    c = cellularity(t)
    if inv.chromatic_number == inv.clique_number == c:
        return ClaimResult(PASS, computed={"chromatic": inv.chromatic_number, "clique": inv.clique_number, "cellularity": c})
    return ClaimResult(
        FAIL,
        expected="chromatic = clique = cellularity",
        computed={"chromatic": inv.chromatic_number, "clique": inv.clique_number, "cellularity": c},
        witness=_graph_witness(t, ws.ag(t.n)),
    )


def _c_thm_ag_complemented(ws, t, cls):
    inv = _ag_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    return _eq(True, inv.is_complemented, _graph_witness(t, ws.ag(t.n)))


# --------------------------------------------------------------------------
# Disjoint-open-set graph checkers (intrinsic, any finite topology).
# --------------------------------------------------------------------------


def _dg_guard(ws, t):
    inv = ws.dg_inv(t)
    if inv.vertex_count == 0:
        return None
    return inv


def _c_dg_eq_ag(ws, t, cls):
    if t.n < 2:
        return ClaimResult(DEGEN, computed="no vertices on a one-point space")
    dg = ws.dg(t)
    ag = ws.ag(t.n)
    same = dg.labels == ag.labels and set(dg.edges()) == set(ag.edges())
    return _eq(
        True,
        same,
        _graph_witness(t, dg, ag_edges=[[a.render(), b.render()] for a, b in ag.edges()]),
    )


def _c_dg_thm_a(ws, t, cls):
    inv = _dg_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="empty graph: no qualifying open sets")
    predicted = 1 if t.n == 2 else 3
    return _eq(predicted, _jsonable(inv.diameter), _graph_witness(t, ws.dg(t)))


def _c_dg_thm_b(ws, t, cls):
    inv = _dg_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="empty graph: no qualifying open sets")
    return _iff(t.n == 2, inv.is_star, _graph_witness(t, ws.dg(t)))


def _c_dg_thm_c(ws, t, cls):
    inv = _dg_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="empty graph: no qualifying open sets")
    predicted = radius_predictor(t.n, cls.has_isolated_point)
    return _eq(predicted, _jsonable(inv.radius), _graph_witness(t, ws.dg(t)))


def _c_dg_thm_d(ws, t, cls):
    if t.n <= 2:
        return ClaimResult(NA, computed="stated for spaces with more than two points")
    inv = _dg_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="empty graph: no qualifying open sets")
    return _eq(3, _jsonable(inv.girth), _graph_witness(t, ws.dg(t)))


def _c_dg_thm_e(ws, t, cls):
    inv = _dg_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="empty graph: no qualifying open sets")
    c = cellularity(t)
    if inv.chromatic_number == inv.clique_number == c:
        return ClaimResult(PASS, computed={"chromatic": inv.chromatic_number, "clique": inv.clique_number, "cellularity": c})
    return ClaimResult(
        FAIL,
        expected="chromatic = clique = cellularity",
        computed={"chromatic": inv.chromatic_number, "clique": inv.clique_number, "cellularity": c},
        witness=_graph_witness(t, ws.dg(t)),
    )


def _c_dg_thm_g(ws, t, cls):
    inv = _dg_guard(ws, t)
    if inv is None:
        return ClaimResult(DEGEN, computed="empty graph: no qualifying open sets")
    return _eq(True, inv.is_complemented, _graph_witness(t, ws.dg(t)))


def _c_model_reflection(ws, t, cls):
    m = cls.component_count
    return _eq(1 << m, clopen_count(t), {"topology": t.to_text(), "components": m})


# --------------------------------------------------------------------------
# Vertex-collapse (graph surjection) checkers over twin-expansion trials.
# --------------------------------------------------------------------------


def _dist_le(a, b) -> bool:
    if b is INF:
        return True
    if a is INF:
        return False
    return a <= b


def _hom_values(w: HomWitness) -> dict:
    cached = getattr(w, "_values_cache", None)
    if cached is not None:
        return cached
    src, tgt = w.source, w.target
    vals = {
        "source": {
            "diameter": gc.diameter(src),
            "radius": gc.radius(src),
            "girth": gc.girth(src),
            "dominating_number": gc.dominating_number(src),
            "clique_number": gc.clique_number(src),
            "chromatic_number": gc.chromatic_number(src),
            "is_complemented": gc.is_complemented(src),
        },
        "target": {
            "diameter": gc.diameter(tgt),
            "radius": gc.radius(tgt),
            "girth": gc.girth(tgt),
            "dominating_number": gc.dominating_number(tgt),
            "clique_number": gc.clique_number(tgt),
            "chromatic_number": gc.chromatic_number(tgt),
            "is_complemented": gc.is_complemented(tgt),
        },
    }
    w._values_cache = vals
    return vals


def _hom_witness_dict(w: HomWitness, vals: dict, key: str) -> dict:
    return {
        "source_edges": [[str(a), str(b)] for a, b in w.source.edges()],
        "target_edges": [[str(a), str(b)] for a, b in w.target.edges()],
        "values": {
            "source": _jsonable(vals["source"][key]),
            "target": _jsonable(vals["target"][key]),
        },
    }


def _hom_eq_part(key: str):
    def check(w: HomWitness) -> ClaimResult:
        vals = _hom_values(w)
        s, t = vals["source"][key], vals["target"][key]
        if s is DEGENERATE or t is DEGENERATE:
            return ClaimResult(DEGEN, computed="graph too small for this invariant")
        if s == t:
            return ClaimResult(PASS, expected=_jsonable(t), computed=_jsonable(s))
        return ClaimResult(FAIL, expected=_jsonable(t), computed=_jsonable(s),
                           witness=_hom_witness_dict(w, vals, key))

    return check


def _hom_le_part(key: str):
    def check(w: HomWitness) -> ClaimResult:
        vals = _hom_values(w)
        s, t = vals["source"][key], vals["target"][key]
        if s is DEGENERATE or t is DEGENERATE:
            return ClaimResult(DEGEN, computed="graph too small for this invariant")
        if _dist_le(t, s):
            return ClaimResult(PASS, expected=f"target <= source", computed={"source": _jsonable(s), "target": _jsonable(t)})
        return ClaimResult(
            FAIL,
            expected="target <= source",
            computed={"source": _jsonable(s), "target": _jsonable(t)},
            witness=_hom_witness_dict(w, vals, key),
        )

    return check


def check_hom_lemma(w: HomWitness) -> dict[str, ClaimResult]:
    """Per-part verdicts of the vertex-collapse comparison for one witness."""
    w.validate()
    return {part: _HOM_CHECKS[part](w) for part in sorted(_HOM_CHECKS)}


_HOM_CHECKS = {
    "a": _hom_eq_part("diameter"),
    "b": _hom_eq_part("radius"),
    "c": _hom_le_part("girth"),
    "d": _hom_le_part("dominating_number"),
    "e": _hom_eq_part("clique_number"),
    "f": _hom_eq_part("chromatic_number"),
    "g": _hom_eq_part("is_complemented"),
}


# --------------------------------------------------------------------------
# Registry
# --------------------------------------------------------------------------


def _space_claim(cid, statement, tier, check, applies=_applies_all, find="fail"):
    return Claim(id=cid, statement=statement, tier=tier, scope="space",
                 applies=applies, check=check, find=find)


def _trial_claim(cid, statement, tier, part):
    return Claim(id=cid, statement=statement, tier=tier, scope="trial",
                 check_trial=_HOM_CHECKS[part])


def _build_registry() -> dict[str, Claim]:
    claims = [
        # operator calculus, valid on every finite topology
        _space_claim(
            "lem.order",
            "The set-to-open operator U -> interior(X minus U) is antitone, is empty exactly on dense sets, is the whole space only on the empty set, and is unchanged by closing its argument.",
            "guaranteed", _c_lem_order),
        _space_claim(
            "prop.generated",
            "The open set attached to a family of functions equals the open set attached to the ideal the family generates (cozero unions are span-invariant).",
            "guaranteed", _c_prop_generated),
        _space_claim(
            "prop.cap_cup",
            "Sums of ideals map to unions of opens and vanishing ideals turn unions into intersections; the two remaining inclusion laws hold, with equality not required.",
            "guaranteed", _c_prop_cap_cup),
        _space_claim(
            "prop.I.cup.e.strict",
            "Witness search: subsets U, V whose intersection's vanishing ideal is strictly larger than the sum of the two vanishing ideals (interior(X minus (U and V)) strictly contains the union of the two interiors).",
            "explore", _c_strict_cup, find="witness"),
        _space_claim(
            "prop.O.cap.b.strict",
            "Witness search: two distinct nonzero functions with overlapping cozero sets; intersecting them as mere sets loses the overlap, so the cozero union of the intersection is strictly smaller. For ideals of a finite ring the corresponding inclusion is an equality.",
            "explore", _c_strict_cap, find="witness"),
        _space_claim(
            "prop.o_and_i",
            "The annihilator operator on open sets is idempotent after one application: applying it three times equals applying it once.",
            "guaranteed", _c_prop_o_and_i),
        _space_claim(
            "thm.ij_zero",
            "Products and containments of ideals translate to open-set conditions: zero products mean disjoint opens; annihilator products vanish exactly when the union of opens is dense; equal closures mean equal annihilators; vanishing-ideal products vanish exactly on closure containment.",
            "guaranteed", _c_thm_ij_zero),
        _space_claim(
            "cor.i_product_zero",
            "Two vanishing ideals multiply to zero exactly when the union of their defining sets is dense (their attached opens are disjoint iff the union is dense).",
            "guaranteed", _c_cor_i_product_zero),
        _space_claim(
            "lem.o_onto",
            "Every open set is the cozero union of some ideal; in the finite model the attainable cozero unions are exactly the unions of weak components, so this holds iff every open set is such a union (true on discrete spaces).",
            "guaranteed", _c_lem_o_onto),
        _space_claim(
            "cor.elementAG.a",
            "A nonempty open set is a graph vertex exactly when its closure is not the whole space.",
            "guaranteed", _c_cor_element_ag_a),
        _space_claim(
            "cor.elementAG.b.literal",
            "Literal vertexhood test for the ideal vanishing on U: interior(closure(U)) nonempty. Diverges from the repaired test exactly on dense U with somewhere-dense closure; divergences are recorded, not repaired silently.",
            "explore", _c_cor_element_ag_b_literal, applies=_applies_multipoint),
        _space_claim(
            "cor.elementAG.b.repaired",
            "Repaired vertexhood test: closure(U) proper and interior(closure(U)) nonempty; equivalent to the attached open set being nonempty with non-dense closure.",
            "guaranteed", _c_cor_element_ag_b_repaired),
        _space_claim(
            "cor.orthogonal",
            "Two vertices are orthogonal (adjacent with no common neighbor) exactly when their open sets are disjoint with dense union.",
            "guaranteed", _c_cor_orthogonal),
        # ring model over the discrete reflection
        _space_claim(
            "prop.size2.diam",
            "The space has exactly two points iff the ideal graph has diameter 1.",
            "guaranteed", _c_prop_size2_diam, applies=_applies_discrete),
        _space_claim(
            "prop.size2.clique",
            "The space has exactly two points iff the clique number is 2.",
            "guaranteed", _c_prop_size2_clique, applies=_applies_discrete),
        _space_claim(
            "prop.size2.bipartite",
            "The space has exactly two points iff the ideal graph is bipartite with two nonempty parts.",
            "guaranteed", _c_prop_size2_bipartite, applies=_applies_discrete),
        _space_claim(
            "prop.size2.complete_bipartite",
            "The space has exactly two points iff the ideal graph is complete bipartite with two nonempty parts.",
            "guaranteed", _c_prop_size2_complete_bipartite, applies=_applies_discrete),
        _space_claim(
            "prop.diam3",
            "The space has at least three points iff the ideal graph has diameter 3.",
            "guaranteed", _c_prop_diam3, applies=_applies_discrete),
        _space_claim(
            "prop.chi_clique",
            "Chromatic number equals clique number for the ideal graph.",
            "guaranteed", _c_prop_chi_clique, applies=_applies_discrete),
        _space_claim(
            "prop.finite",
            "A finite space yields a finite graph with one vertex per nonzero proper ideal (2^n - 2 of them) and finite degree, clique and chromatic data.",
            "guaranteed", _c_prop_finite, applies=_applies_discrete),
        _space_claim(
            "lem.distance",
            "Distance trichotomy: disjoint opens are at distance 1; overlapping opens with non-dense union at distance 2; overlapping opens with dense union at distance 3.",
            "guaranteed", _c_lem_distance, applies=_applies_discrete),
        _space_claim(
            "prop.ecc",
            "Eccentricity is 3 unless a vertex's open set is a singleton; singletons have eccentricity 2 on spaces with more than two points and 1 on the two-point space.",
            "guaranteed", _c_prop_ecc, applies=_applies_discrete),
        _space_claim(
            "cor.star",
            "The space has exactly two points iff the ideal graph is a star.",
            "guaranteed", _c_cor_star, applies=_applies_discrete),
        _space_claim(
            "thm.radius",
            "Radius is 1 on the two-point space, 2 when the space is larger and has an isolated point, and 3 otherwise.",
            "guaranteed", _c_thm_radius, applies=_applies_discrete),
        _space_claim(
            "prop.leaf",
            "A vertex is a leaf exactly when the complement of the closure of its open set is a singleton.",
            "guaranteed", _c_prop_leaf, applies=_applies_discrete),
        _space_claim(
            "lem.gi.a",
            "For non-leaf vertices: shortest common cycle length 3 iff the opens are disjoint and their union is not dense.",
            "guaranteed", _c_lem_gi_a, applies=_applies_discrete),
        _space_claim(
            "lem.gi.b",
            "Disjoint opens with dense union give shortest common cycle length 4.",
            "guaranteed", _c_lem_gi_b, applies=_applies_discrete),
        _space_claim(
            "lem.gi.c",
            "Overlapping opens with equal closures give shortest common cycle length 4 (vacuous on discrete spaces, where equal closures force equal vertices).",
            "guaranteed", _c_lem_gi_c, applies=_applies_discrete),
        _space_claim(
            "lem.gi.d",
            "Overlapping opens with distinct closures and at least two points outside the closure of the union give shortest common cycle length 4.",
            "guaranteed", _c_lem_gi_d, applies=_applies_discrete),
        _space_claim(
            "lem.gi.e",
            "Shortest common cycle length 5 iff the opens overlap, their closures differ, and exactly one point lies outside the closure of the union.",
            "guaranteed", _c_lem_gi_e, applies=_applies_discrete),
        _space_claim(
            "lem.gi.dense_overlap",
            "Overlapping non-leaf vertices with distinct closures and dense union have no common neighbor; on a discrete space the shortest common cycle is two length-3 paths, length 6. This case is outside the 3/4/5 split.",
            "guaranteed", _c_lem_gi_dense_overlap, applies=_applies_discrete),
        _space_claim(
            "thm.girth",
            "Girth is 3 once the space has more than two points; the two-point space's graph is acyclic.",
            "guaranteed", _c_thm_girth, applies=_applies_discrete),
        _space_claim(
            "thm.triangulated",
            "The space has an isolated point iff the ideal graph has a leaf iff it is not triangulated.",
            "guaranteed", _c_thm_triangulated, applies=_applies_discrete),
        _space_claim(
            "thm.dt.bounds",
            "Cellularity of the space <= dominating number of the ideal graph <= weight of the space. Holds from three points on; the two-point space is a genuine exception (one vertex dominates the single edge, below cellularity 2) and is recorded as such.",
            "guaranteed", _c_thm_dt_bounds, applies=_applies_discrete),
        _space_claim(
            "cor.dt.discrete",
            "On a discrete space with at least three points the dominating number equals the number of points; on two points it is 1, not 2, and the exception is recorded.",
            "guaranteed", _c_cor_dt_discrete, applies=_applies_discrete),
        _space_claim(
            "thm.dt.finite",
            "The dominating number is finite exactly for finite spaces, where it equals the number of points (from three points on; the two-point exception is recorded).",
            "guaranteed", _c_thm_dt_finite, applies=_applies_discrete),
        _space_claim(
            "thm.chi.clique.c",
            "Chromatic number = clique number = cellularity of the space.",
            "guaranteed", _c_thm_chi_clique_c, applies=_applies_discrete),
        _space_claim(
            "thm.ag.complemented",
            "The ideal graph is complemented: every vertex has an orthogonal partner.",
            "guaranteed", _c_thm_ag_complemented, applies=_applies_discrete),
        # disjoint-open-set graph, intrinsic to the topology
        _space_claim(
            "dg.eq.ag",
            "On a discrete space the disjoint-open-set graph coincides label-for-label with the ideal graph.",
            "guaranteed", _c_dg_eq_ag, applies=_applies_discrete),
        _space_claim(
            "dg.thm.a",
            "Diameter of the disjoint-open-set graph: 1 on the two-point space, else 3.",
            "guaranteed", _c_dg_thm_a),
        _space_claim(
            "dg.thm.b",
            "The space has exactly two points iff the disjoint-open-set graph is a star.",
            "guaranteed", _c_dg_thm_b),
        _space_claim(
            "dg.thm.c",
            "Radius of the disjoint-open-set graph follows the same three cases as the ideal graph (1 / 2 with isolated point / 3 without).",
            "guaranteed", _c_dg_thm_c),
        _space_claim(
            "dg.thm.d",
            "Girth of the disjoint-open-set graph is 3 once the space has more than two points.",
            "guaranteed", _c_dg_thm_d),
        _space_claim(
            "dg.thm.e",
            "Chromatic number = clique number = cellularity for the disjoint-open-set graph.",
            "guaranteed", _c_dg_thm_e),
        _space_claim(
            "dg.thm.g",
            "The disjoint-open-set graph is complemented.",
            "guaranteed", _c_dg_thm_g),
        _space_claim(
            "model.reflection",
            "The number of continuous two-valued functions is 2 to the number of weak components; collapsing components to points yields a discrete space carrying the whole function ring.",
            "guaranteed", _c_model_reflection),
        # vertex-collapse comparisons over twin-expansion trials
        _trial_claim(
            "lem.hom.a",
            "Vertex collapses that reflect, preserve and never contract edges keep the diameter unchanged (fails under twin expansion: twins sit at distance two over a collapsed distance zero).",
            "explore", "a"),
        _trial_claim(
            "lem.hom.b",
            "Such collapses keep the radius unchanged (fails under twin expansion for the same reason as the diameter).",
            "explore", "b"),
        _trial_claim(
            "lem.hom.c",
            "girth(collapsed) <= girth(original) (fails under twin expansion: two twins of an edge form a 4-cycle that collapses onto an acyclic graph).",
            "explore", "c"),
        _trial_claim(
            "lem.hom.d",
            "Dominating number does not grow under collapse: dt(collapsed) <= dt(original).",
            "guaranteed", "d"),
        _trial_claim(
            "lem.hom.e",
            "Clique number is preserved by collapse.",
            "guaranteed", "e"),
        _trial_claim(
            "lem.hom.f",
            "Chromatic number is preserved by collapse.",
            "guaranteed", "f"),
        _trial_claim(
            "lem.hom.g",
            "The original graph is complemented iff the collapsed graph is.",
            "explore", "g"),
    ]
    out: dict[str, Claim] = {}
    for c in claims:
        if c.id in out:
            raise AssertionError(f"duplicate claim id {c.id}")
        out[c.id] = c
    return out


_REGISTRY: dict[str, Claim] | None = None


def registry() -> dict[str, Claim]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


def claims_matching(patterns: Sequence[str] | None) -> list[Claim]:
    reg = registry()
    if not patterns:
        return list(reg.values())
    out = []
    for c in reg.values():
        if any(fnmatch.fnmatchcase(c.id, p) for p in patterns):
            out.append(c)
    if not out:
        raise KeyError(f"no claim matches {patterns!r}")
    return out


def registry_document() -> str:
    """Markdown listing of every claim; kept in sync with docs/claims.md."""
    lines = [
        "# Claim registry",
        "",
        "Stable identifiers for every structural claim the harness checks.",
        "Guaranteed-tier claims are asserted over discrete spaces (and over",
        "seeded collapse trials for the trial-scoped ones); explore mode",
        "records verdicts for all claims over arbitrary finite topologies.",
        "",
    ]
    for c in sorted(registry().values(), key=lambda c: c.id):
        lines.append(f"- `{c.id}` ({c.tier}, {c.scope}): {c.statement}")
    lines.append("")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# Suite runners
# --------------------------------------------------------------------------


def evaluate_space_claim(claim: Claim, t: Topology, ws: Workspace | None = None,
                         mode: str = "explore") -> TheoremReport | None:
    """One (claim, space) cell; None when the claim does not apply."""
    if claim.scope != "space":
        raise ValueError(f"claim {claim.id} is not space-scoped")
    ws = ws or Workspace()
    cls = classify(t)
    if not claim.applies(t, cls):
        return None
    res = claim.check(ws, t, cls)
    return TheoremReport(
        claim=claim.id,
        space=canonical_form(t),
        verdict=res.verdict,
        expected=_jsonable(res.expected),
        computed=_jsonable(res.computed),
        witness=_jsonable(res.witness) if res.witness is not None else None,
        mode=mode,
    )


def run_space_suite(claims: Sequence[Claim], spaces: Iterable[Topology],
                    mode: str, parallelism: int = 1,
                    ws: Workspace | None = None) -> list[TheoremReport]:
    space_claims = [c for c in claims if c.scope == "space"]
    spaces = list(spaces)
    if parallelism > 1 and len(spaces) > 1:
        ids = [c.id for c in space_claims]
        tasks = [(mode, ids, t.to_text()) for t in spaces]
        reports: list[TheoremReport] = []
        with ProcessPoolExecutor(max_workers=parallelism) as ex:
            for chunk in ex.map(_space_worker, tasks, chunksize=8):
                reports.extend(TheoremReport(**d) for d in chunk)
    else:
        ws = ws or Workspace()
        reports = []
        for t in spaces:
            for claim in space_claims:
                rep = evaluate_space_claim(claim, t, ws, mode)
                if rep is not None:
                    reports.append(rep)
    reports.sort(key=lambda r: (r.mode, r.claim, r.space))
    return reports


def _space_worker(args) -> list[dict]:
    mode, ids, text = args
    t = Topology.from_text(text)
    ws = Workspace()
    reg = registry()
    out = []
    for cid in ids:
        rep = evaluate_space_claim(reg[cid], t, ws, mode)
        if rep is not None:
            out.append(rep.__dict__)
    return out


def _make_trial_witness(rng: random.Random) -> HomWitness:
    nb = rng.randint(2, 8)
    edges = [(i, j) for i in range(nb) for j in range(i + 1, nb) if rng.random() < 0.5]
    base = UGraph(list(range(nb)), edges)
    mult = [rng.randint(1, 3) for _ in range(nb)]
    return twin_expansion(base, mult)


def run_hom_suite(claims: Sequence[Claim], trials: int, seed: int,
                  mode: str) -> list[TheoremReport]:
    """Seeded twin-expansion trials; the fixed probe (an edge expanded by
    two twins on each side, collapsing a 4-cycle onto a single edge) runs
    first so the findings always include it."""
    trial_claims = [c for c in claims if c.scope == "trial"]
    if not trial_claims:
        return []
    witnesses: list[tuple[str, HomWitness]] = [
        (HOM_PROBE_KEY, twin_expansion(UGraph([0, 1], [(0, 1)]), [2, 2]))
    ]
    rng = random.Random(seed)
    for i in range(trials):
        witnesses.append((f"twin:{seed}:{i:04d}", _make_trial_witness(rng)))
    reports = []
    for key, w in witnesses:
        for claim in trial_claims:
            res = claim.check_trial(w)
            reports.append(TheoremReport(
                claim=claim.id,
                space=key,
                verdict=res.verdict,
                expected=_jsonable(res.expected),
                computed=_jsonable(res.computed),
                witness=_jsonable(res.witness) if res.witness is not None else None,
                mode=mode,
            ))
    reports.sort(key=lambda r: (r.mode, r.claim, r.space))
    return reports


def run_suite(
    suite: str = "guaranteed",
    n_lo: int | None = None,
    n_hi: int | None = None,
    claim_patterns: Sequence[str] | None = None,
    hom_trials: int = DEFAULT_HOM_TRIALS,
    seed: int = 0,
    parallelism: int = 1,
) -> tuple[list[TheoremReport], bool]:
    """Run a verification suite; returns (reports, ok).

    ``ok`` is False exactly when some assert-mode (guaranteed-tier) cell
    failed.  Explore mode records and never fails.
    """
    if suite not in ("guaranteed", "explore", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    selected = claims_matching(claim_patterns)
    reports: list[TheoremReport] = []
    if suite in ("guaranteed", "all"):
        lo = max(n_lo or 2, 1)
        hi = n_hi or 5
        guaranteed = [c for c in selected if c.tier == "guaranteed"]
        spaces = [Topology.discrete(k) for k in range(lo, hi + 1)]
        reports.extend(run_space_suite(guaranteed, spaces, "assert", parallelism))
        reports.extend(run_hom_suite(guaranteed, hom_trials, seed, "assert"))
    if suite in ("explore", "all"):
        lo = max(n_lo or 2, 1)
        hi = n_hi or 4
        spaces = []
        for k in range(lo, hi + 1):
            spaces.extend(canonical_topologies(k))
        reports.extend(run_space_suite(selected, spaces, "explore", parallelism))
        explore_trials = [c for c in selected if c.scope == "trial" and c.tier == "explore"]
        reports.extend(run_hom_suite(explore_trials, hom_trials, seed, "explore"))
    reports.sort(key=lambda r: (r.mode, r.claim, r.space))
    ok = not any(r.mode == "assert" and r.verdict == FAIL for r in reports)
    return reports, ok


def search_counterexample(claim_id: str, max_n: int = 4) -> TheoremReport | None:
    """Scan canonical topologies in deterministic order; return the first
    failure (or, for witness-search claims, the first witness) or None."""
    claim = registry()[claim_id]
    if claim.scope != "space":
        raise ValueError(f"claim {claim_id} is trial-scoped; search runs over spaces")
    ws = Workspace()
    for n in range(1, max_n + 1):
        for t in canonical_topologies(n):
            rep = evaluate_space_claim(claim, t, ws, "explore")
            if rep is None:
                continue
            if claim.find == "witness":
                if rep.verdict == PASS and rep.witness:
                    return rep
            elif rep.verdict == FAIL:
                return rep
    return None


def check_reflected_guaranteed(t: Topology, ws: Workspace | None = None) -> list[TheoremReport]:
    """Run every guaranteed space claim against the discrete reflection of
    t, i.e. against the space the ring of functions actually sees."""
    ws = ws or Workspace()
    m = classify(t).component_count
    if m < 2:
        return []
    disc = Topology.discrete(m)
    guaranteed = [c for c in registry().values()
                  if c.scope == "space" and c.tier == "guaranteed"]
    return run_space_suite(guaranteed, [disc], "assert", ws=ws)


def summarize(reports: Sequence[TheoremReport]) -> str:
    """Plain-text verdict table, one row per claim within each mode."""
    by_mode: dict[str, dict[str, dict[str, int]]] = {}
    for r in reports:
        by_mode.setdefault(r.mode, {}).setdefault(r.claim, {}).setdefault(r.verdict, 0)
        by_mode[r.mode][r.claim][r.verdict] += 1
    lines = []
    for mode in sorted(by_mode):
        lines.append(f"== {mode} ==")
        lines.append(f"{'claim':<32} {'pass':>6} {'fail':>6} {'degen':>6} {'n/a':>6}")
        for claim in sorted(by_mode[mode]):
            counts = by_mode[mode][claim]
            lines.append(
                f"{claim:<32} {counts.get(PASS, 0):>6} {counts.get(FAIL, 0):>6} "
                f"{counts.get(DEGEN, 0):>6} {counts.get(NA, 0):>6}"
            )
    total_fail = sum(1 for r in reports if r.verdict == FAIL)
    assert_fail = sum(1 for r in reports if r.verdict == FAIL and r.mode == "assert")
    lines.append(f"total reports: {len(reports)}; failures: {total_fail} "
                 f"(asserted: {assert_fail})")
    return "\n".join(lines)

"""Comparison of enumerated orbits with the (u, v, rank) shadow on simply-laced instances."""

from collections import defaultdict
from dataclasses import dataclass, field

from ..metric import distance_of
from ..parabolics import induction_datum
from ..shadow import ShadowNode, minimal_nodes, raise_node
from .engine import run_orbitlab


@dataclass
class ShadowCrosscheck:
    minimal_as_products: dict = field(default_factory=dict)
    minimal_match: bool = False
    minimal_missing: list = field(default_factory=list)
    minimal_extra: list = field(default_factory=list)
    rank_identity_failures: list = field(default_factory=list)
    dense_rank_failures: list = field(default_factory=list)
    n_edges: int = 0
    n_edges_by_type: dict = field(default_factory=dict)
    collisions: list = field(default_factory=list)
    shadow_agree: int = 0
    shadow_disagree: list = field(default_factory=list)
    shadow_undetermined: int = 0

    @property
    def n_N(self):
        return self.n_edges_by_type.get("N", 0)

    @property
    def passed(self):
        """Checks (1)-(3); collisions and shadow disagreements are reported only."""
        return (all(self.minimal_as_products.values()) and self.minimal_match
                and not self.rank_identity_failures and not self.dense_rank_failures and self.n_N == 0)

    def lines(self):
        bad_prod = [k for k, ok in self.minimal_as_products.items() if not ok]
        return [
            f"minimal orbits that are products of Schubert cells: "
            f"{len(self.minimal_as_products) - len(bad_prod)}/{len(self.minimal_as_products)}",
            f"minimal (gorbit, u, v) match the shadow minimal nodes: {self.minimal_match}",
            f"rank + d(Phi) = rk(G-orbit) failures: {len(self.rank_identity_failures)}",
            f"dense-orbit rank failures: {len(self.dense_rank_failures)}",
            f"edges: {self.n_edges} {dict(sorted(self.n_edges_by_type.items()))}",
            f"Phi-collisions (distinct orbits with equal gorbit, u, v, rank): {len(self.collisions)}",
            f"shadow raisings: {self.shadow_agree} agree, {len(self.shadow_disagree)} disagree, "
            f"{self.shadow_undetermined} undetermined",
        ]


def _key(O):
    return (O.gorbit, O.u, O.v)


def crosscheck_shadow(lab, P1=None, P2=None, budget=None):
    """Run checks (1)-(4) on an OrbitLabResult (or on spec, P1, P2 after enumerating)."""
    if P1 is not None:
        lab = run_orbitlab(lab, P1, P2) if budget is None else run_orbitlab(lab, P1, P2, budget)
    P1, P2 = lab.P1, lab.P2
    R = P1.system
    if not R.simply_laced:
        raise ValueError(f"shadow cross-check needs a simply-laced type, got {R.name}")
    rep = ShadowCrosscheck()
    targets = {e.target.name for e in lab.edges}
    minimal = [O for O in lab.orbits if O.name not in targets]

    # (1) minimal orbits fill Omega_u x Omega_v and match the shadow's minimal nodes
    for O in minimal:
        rep.minimal_as_products[O.name] = all(
            c == q ** (O.u.length + O.v.length) for q, c in O.counts.items())
    shadow_min = set()
    rk = {}
    for w in lab.double_cosets:
        for n in minimal_nodes(P1, P2, w):
            shadow_min.add((n.gorbit, n.u, n.v))
        rk[w] = induction_datum(P1, P2, w).orbit_rank
    engine_min = {_key(O) for O in minimal}
    rep.minimal_match = engine_min == shadow_min and len(engine_min) == len(minimal)
    rep.minimal_missing = sorted(_fmt(k) for k in shadow_min - engine_min)
    rep.minimal_extra = sorted(_fmt(k) for k in engine_min - shadow_min)

    # (2) rank identity, and the dense orbit of each G-orbit carries its rank
    top = defaultdict(int)
    for O in lab.orbits:
        d = int(distance_of(O.u, O.v))
        if O.rank + d != rk[O.gorbit]:
            rep.rank_identity_failures.append((O.name, O.rank, d, rk[O.gorbit]))
        top[O.gorbit] = max(top[O.gorbit], O.rank)
    for w, r in rk.items():
        if top[w] != r:
            rep.dense_rank_failures.append((w.word_str(), top[w], r))

    # (3) edge types
    rep.n_edges = len(lab.edges)
    for e in lab.edges:
        rep.n_edges_by_type[e.etype] = rep.n_edges_by_type.get(e.etype, 0) + 1

    # (4) collisions of the shadow invariant
    groups = defaultdict(list)
    for O in lab.orbits:
        groups[_key(O) + (O.rank,)].append(O.name)
    rep.collisions = sorted(names for names in groups.values() if len(names) > 1)

    # shadow raisings against the enumerated ones
    for O in lab.orbits:
        node = ShadowNode(O.gorbit, O.u, O.v, O.rank)
        for i in range(R.rank):
            pred = raise_node(node, i)
            got = lab.edge(O.name, i)
            if pred is None:
                rep.shadow_undetermined += 1
                continue
            if pred.target == node:
                same = got is None
            else:
                t = pred.target
                same = got is not None and got.etype == pred.predicted_type and \
                    (got.target.u, got.target.v, got.target.rank) == (t.u, t.v, t.rank)
            if same:
                rep.shadow_agree += 1
            else:
                rep.shadow_disagree.append((O.name, i + 1))
    return rep


def _fmt(k):
    w, u, v = k
    return f"{w.word_str()}:{u.element.word_str()}|{v.element.word_str()}"

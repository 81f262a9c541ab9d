"""The (u, v, rank) shadow of the weak order on B-orbits of G/P1 x G/P2.

Nodes are Schubert-cell pairs inside one G-orbit together with a rank.  The
automaton starts from the minimal nodes given by the Levi reduction and raises
along simple roots using only the pairings a = (gamma, u varpi_1) and
b = (gamma, v varpi_2).  It never claims to be the full orbit graph.
"""

from dataclasses import dataclass, field

from .metric import MetricError, WeightPair, distance
from .parabolics import double_cosets, induction_datum, is_cominuscule, levi_weight_paths
from .weyl import WeylElement, act, coset_rep_of_weight, longest_element


@dataclass(frozen=True)
class ShadowNode:
    gorbit: WeylElement
    u: object
    v: object
    rank: int

    def key(self):
        return (self.u.length + self.v.length, self.u.word, self.v.word, self.rank)

    def label(self):
        return f"{self.u.element.word_str()}|{self.v.element.word_str()}|r{self.rank}"


@dataclass(frozen=True)
class ShadowEdge:
    source: ShadowNode
    target: ShadowNode
    gamma: int
    predicted_type: str


@dataclass
class ShadowGraph:
    gorbit: WeylElement
    orbit_rank: int
    nodes: list
    edges: list
    undetermined: list = field(default_factory=list)

    @property
    def top(self):
        return max(self.nodes, key=lambda n: n.key())


def _check(P1, P2):
    R = P1.system
    if not R.simply_laced:
        raise MetricError(f"{R.name} is not simply laced")
    if not (is_cominuscule(P1) and is_cominuscule(P2)):
        raise MetricError("shadow needs cominuscule parabolics")


def dense_coset(P1, P2):
    """Double-coset representative of the dense G-orbit (the one containing w0)."""
    w0 = longest_element(P1.system)
    reps = double_cosets(P1, P2)
    mu = act(w0, P2.weight)
    for w in reps:
        if act(w, P2.weight) == mu or _same_double_coset(P1, P2, w, w0):
            return w
    raise AssertionError("no double coset contains w0")


def _same_double_coset(P1, P2, w, x):
    R = P1.system
    target = act(x, P2.weight).coords
    seen = {act(w, P2.weight).coords}
    frontier = list(seen)
    while frontier:
        nxt = []
        for mu in frontier:
            for j in P1.levi_nodes:
                nu = R.simple_reflect_weight(j, mu)
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return target in seen


def minimal_nodes(P1, P2, w):
    _check(P1, P2)
    D = induction_datum(P1, P2, w)
    wmu = act(w, P2.weight)
    nodes = set()
    for uL in levi_weight_paths(D):
        u = coset_rep_of_weight(act(uL, P1.weight), P1)
        v = coset_rep_of_weight(act(uL, wmu), P2)
        nodes.add(ShadowNode(w, u, v, 0))
    return sorted(nodes, key=ShadowNode.key)


def raise_node(n, gamma):
    """ShadowEdge for raising n along the simple root gamma (0-based), or None if undetermined."""
    u, v = n.u, n.v
    R = u.parabolic.system
    sg = tuple(int(i == gamma) for i in range(R.rank))
    lam1 = act(u.element, u.parabolic.weight).coords
    lam2 = act(v.element, v.parabolic.weight).coords
    a = R.pair(lam1, sg)
    b = R.pair(lam2, sg)
    if a <= 0 and b <= 0:
        return None
    u2 = coset_rep_of_weight(R.simple_reflect_weight(gamma, lam1), u.parabolic) if a == 1 else u
    v2 = coset_rep_of_weight(R.simple_reflect_weight(gamma, lam2), v.parabolic) if b == 1 else v
    if a * b < 0:
        return ShadowEdge(n, ShadowNode(n.gorbit, u2, v2, n.rank + 1), gamma, "T")
    return ShadowEdge(n, ShadowNode(n.gorbit, u2, v2, n.rank), gamma, "U")


def d_of(n):
    return int(distance(WeightPair(n.u.weight(), n.v.weight(), n.u.parabolic, n.v.parabolic)))


def shadow_graph(P1, P2, w):
    _check(P1, P2)
    D = induction_datum(P1, P2, w)
    rk = D.orbit_rank
    start = minimal_nodes(P1, P2, w)
    nodes = set(start)
    edges, undetermined = [], []
    frontier = list(start)
    R = P1.system
    while frontier:
        nxt = []
        for n in sorted(frontier, key=ShadowNode.key):
            for g in range(R.rank):
                e = raise_node(n, g)
                if e is None:
                    undetermined.append((n, g))
                    continue
                if e.target == n:
                    continue
                edges.append(e)
                if e.target not in nodes:
                    nodes.add(e.target)
                    nxt.append(e.target)
        frontier = nxt
    nodes = sorted(nodes, key=ShadowNode.key)
    edges.sort(key=lambda e: (e.source.key(), e.gamma))

    d = {n: d_of(n) for n in nodes}
    for n in nodes:
        if n.rank + d[n] != rk:
            raise AssertionError(f"rank identity fails at {n.label()}: {n.rank} + {d[n]} != {rk}")
    for e in edges:
        s, t = e.source, e.target
        grow = (t.u.length + t.v.length) - (s.u.length + s.v.length)
        if grow not in (1, 2) or (e.predicted_type == "T" and grow != 1):
            raise AssertionError(f"edge {s.label()} -> {t.label()} changes l(u)+l(v) by {grow}")
        if t.rank - s.rank not in (0, 1):
            raise AssertionError("rank jumps by more than one")
        if (e.predicted_type == "T") != (d[s] - d[t] == 1):
            raise AssertionError("T edges are exactly the edges where d drops by one")
        if d[s] - d[t] > t.rank - s.rank:
            raise AssertionError("distance drop exceeds rank gain")
    return ShadowGraph(w, rk, nodes, edges, undetermined)


def all_shadow_graphs(P1, P2):
    return [shadow_graph(P1, P2, w) for w in double_cosets(P1, P2)]

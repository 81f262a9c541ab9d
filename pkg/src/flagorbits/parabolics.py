"""Maximal parabolics, opposite pairs and the reduction of a G-orbit to a Levi.

A cocharacter chi of a maximal parabolic pairs with a root beta (simple-root
coordinates) as the coefficient of the marked node.  For w in W the
cocharacter w(chi) pairs with beta as chi(w^{-1} beta).
"""

from dataclasses import dataclass, field

from .roots import RootSystemError
from .weyl import WeylElement, coset_rep_of_weight, longest_element, weight_orbit


class InductionError(AssertionError):
    """A structural identity of the Levi reduction fails; `root` names the witness."""

    def __init__(self, message, root=None):
        super().__init__(message)
        self.root = root


@dataclass(frozen=True, eq=False)
class ParabolicDatum:
    system: object
    node: int

    def __post_init__(self):
        if not 0 <= self.node < self.system.rank:
            raise RootSystemError(f"node {self.node + 1} out of range for {self.system.name}")

    @classmethod
    def of(cls, R, node1):
        """Parabolic for the 1-based Bourbaki node `node1`."""
        return cls(R, node1 - 1)

    def __eq__(self, other):
        return isinstance(other, ParabolicDatum) and self.system is other.system and self.node == other.node

    def __hash__(self):
        return hash((id(self.system), self.node))

    @property
    def weight(self):
        return self.system.fundamental_weight(self.node)

    @property
    def levi_nodes(self):
        return tuple(i for i in range(self.system.rank) if i != self.node)

    def chi(self, b):
        return b[self.node]

    def __repr__(self):
        return f"P{self.node + 1}({self.system.name})"


def is_cominuscule(P):
    R = P.system
    return all(abs(b[P.node]) <= 1 for b in R.positive_coords)


def _w0_pairing(P, w0=None):
    """<w0(chi_P), alpha_j> for every simple root alpha_j."""
    R = P.system
    w0 = w0 or longest_element(R)
    return [P.chi(w0.act_root(tuple(int(i == j) for i in range(R.rank)))) for j in range(R.rank)]


def is_opposite_pair(P1, P2):
    if P1.system is not P2.system:
        raise RootSystemError("parabolics from different systems")
    vals = _w0_pairing(P1)
    return all(v == -int(j == P2.node) for j, v in enumerate(vals))


def double_cosets(P1, P2):
    """Minimal representatives of W_{P1}\\W/W_{P2}, sorted by (length, word).

    The double cosets are the W_{P1}-orbits on W.varpi_{P2}; each orbit holds a
    unique weight dominant for the Levi of P1, and the minimal element of W^{P2}
    sending varpi_{P2} there is the minimal element of the double coset.
    """
    R = P1.system
    levi1 = P1.levi_nodes
    reps = []
    for mu in weight_orbit(R, P2.weight.coords):
        if all(mu[j] >= 0 for j in levi1):
            reps.append(coset_rep_of_weight(mu, P2).element)
    reps.sort(key=lambda w: (w.length, w.word))
    return reps


def longest_in_levi(R, nodes):
    """Longest element of the standard parabolic subgroup W_L as an element of W(R)."""
    t_simple = [tuple(int(i == j) for i in range(R.rank)) for j in range(R.rank)]
    w = WeylElement.identity(R)
    while True:
        asc = [j for j in nodes if any(c > 0 for c in w.act_root(t_simple[j]))]
        if not asc:
            return w
        w = w * WeylElement.simple(R, asc[0])


@dataclass
class InductionDatum:
    w: WeylElement
    chi_R: tuple
    R_nodes: tuple
    levi: object
    Q1: object
    Q2: object
    w0_levi: WeylElement
    component: tuple = ()
    orbit_rank: object = None
    checks: dict = field(default_factory=dict)

    @property
    def dense(self):
        return all(c == 0 for c in self.chi_R)


def chi_R_pairing(P1, P2, w, b, w_inv=None):
    w_inv = w_inv or w.inverse()
    return P1.chi(b) + P2.chi(w_inv.act_root(b))


def prop_triv_violations(P1, P2, w):
    """Roots with <chi_R, alpha> > 0 and <w(chi_{P2}), alpha> < 0."""
    R = P1.system
    wi = w.inverse()
    bad = []
    for b in R.all_coords:
        c2 = P2.chi(wi.act_root(b))
        if P1.chi(b) + c2 > 0 and c2 < 0:
            bad.append(b)
    return bad


def induction_datum(P1, P2, w):
    R = P1.system
    if P2.system is not R or w.system is not R:
        raise RootSystemError("mixed root systems")
    bad = prop_triv_violations(P1, P2, w)
    if bad:
        raise InductionError(f"root {bad[0]} has <chi_R,a> > 0 and <w chi_P2,a> < 0", bad[0])
    if not (is_cominuscule(P1) and is_cominuscule(P2)):
        raise InductionError("induction datum needs cominuscule parabolics")
    wi = w.inverse()
    simple = [tuple(int(i == j) for i in range(R.rank)) for j in range(R.rank)]
    chi_R = tuple(chi_R_pairing(P1, P2, w, s, wi) for s in simple)
    if any(c < 0 for c in chi_R):
        raise InductionError(f"chi_R = {chi_R} is not dominant for w = {w.word_str()}")
    nodes = tuple(j for j, c in enumerate(chi_R) if c == 0)
    checks = {}

    # every root of P1 and of P2^w lies in R
    for b in R.all_coords:
        if P1.chi(b) >= 0 and P2.chi(wi.act_root(b)) >= 0 and chi_R_pairing(P1, P2, w, b, wi) < 0:
            raise InductionError(f"root {b} of P1 and P2^w is not in R", b)
    checks["contains_P1_cap_P2w"] = True

    levi_roots = [b for b in R.all_coords if chi_R_pairing(P1, P2, w, b, wi) == 0]
    for b in levi_roots:
        if P1.chi(b) + P2.chi(wi.act_root(b)) != 0:
            raise InductionError("restriction identity fails", b)
    checks["restriction_identity"] = True
    checks["prop_triv_iii"] = True

    L = R.levi(nodes)
    w0L = longest_in_levi(R, nodes)

    # Q1 = P1 cap L; Q2 = (P2^w cap L) conjugated by the longest element of W_L
    q1_vals = [P1.chi(simple[j]) for j in nodes]
    q2_vals = [P2.chi(wi.act_root(w0L.act_root(simple[j]))) for j in nodes]
    for vals in (q1_vals, q2_vals):
        if any(v not in (0, 1) for v in vals) or sum(vals) > 1:
            raise InductionError(f"Levi parabolic cocharacter {vals} is not a maximal parabolic")
    Q1 = _levi_parabolic(L, q1_vals)
    Q2 = _levi_parabolic(L, q2_vals)
    if (Q1 is None) != (Q2 is None):
        raise InductionError("exactly one of Q1, Q2 is trivial")

    # (Q1, Q2) opposite in L: w0^L(chi_Q1) = -chi_Q2 on the simple roots of L
    for k, j in enumerate(nodes):
        if P1.chi(w0L.act_root(simple[j])) != -q2_vals[k]:
            raise InductionError("(Q1, Q2) is not an opposite pair in the Levi", simple[j])
    checks["levi_opposite"] = True

    component = ()
    if Q1 is not None:
        component = next(c for c in R.components(nodes) if P1.node in c)
    datum = InductionDatum(w=w, chi_R=chi_R, R_nodes=nodes, levi=L, Q1=Q1, Q2=Q2,
                           w0_levi=w0L, component=component, checks=checks)
    if R.simply_laced:
        datum.orbit_rank = levi_orbit_rank(datum, R)
    return datum


def _levi_parabolic(L, vals):
    if 1 not in vals:
        return None
    return ParabolicDatum(L, vals.index(1))


def levi_orbit_rank(datum, R):
    """Rank of the G-orbit: the dense-orbit rank of (Q1, Q2) in the component through node 1 of P1."""
    if datum.Q1 is None:
        return 0
    from .metric import dense_orbit_rank

    comp = datum.component
    C = R.levi(comp)
    cpos = {g: k for k, g in enumerate(comp)}
    q1 = cpos[datum.levi.embedding[datum.Q1.node]]
    q2 = cpos[datum.levi.embedding[datum.Q2.node]]
    return dense_orbit_rank(ParabolicDatum(C, q1), ParabolicDatum(C, q2))


def levi_weight_paths(datum):
    """Elements u_L of W_L^{Q1} as elements of W(R), sorted by (length, word).

    When Q1 marks no node the Levi flag variety is a point and only e occurs.
    """
    L = datum.levi
    R = datum.w.system
    if datum.Q1 is None:
        return [WeylElement.identity(R)]
    out = []
    for mu in weight_orbit(L, datum.Q1.weight.coords):
        u = coset_rep_of_weight(mu, datum.Q1).element
        word = tuple(L.embedding[i] for i in u.word)
        out.append(WeylElement.from_word(R, word))
    out.sort(key=lambda x: (x.length, x.word))
    return out


__all__ = [
    "ParabolicDatum", "InductionDatum", "InductionError", "is_cominuscule", "is_opposite_pair",
    "double_cosets", "induction_datum", "prop_triv_violations", "longest_in_levi",
    "levi_weight_paths",
]

"""Distance between minuscule weights, orthogonal-root sequences and the cascade.

Everything here needs a simply-laced system and cominuscule parabolics; the
constructors refuse anything else.
"""

from dataclasses import dataclass
from fractions import Fraction

from .parabolics import ParabolicDatum, is_cominuscule, is_opposite_pair
from .roots import Root, RootSystemError, Weight
from .weyl import act, coset_rep_of_weight, longest_coset_rep


class MetricError(ValueError):
    pass


def _require(P1, P2):
    R = P1.system
    if P2.system is not R:
        raise RootSystemError("parabolics from different systems")
    if not R.simply_laced:
        raise MetricError(f"{R.name} is not simply laced")
    if not (is_cominuscule(P1) and is_cominuscule(P2)):
        raise MetricError("both parabolics must be cominuscule")


@dataclass(frozen=True)
class WeightPair:
    lam1: Weight
    lam2: Weight
    P1: ParabolicDatum
    P2: ParabolicDatum

    def __post_init__(self):
        _require(self.P1, self.P2)
        for lam, P in ((self.lam1, self.P1), (self.lam2, self.P2)):
            if lam.system is not P.system:
                raise RootSystemError("weight and parabolic from different systems")
            coset_rep_of_weight(lam, P)  # raises unless lam is in W.varpi_P

    @property
    def system(self):
        return self.P1.system


def _d(R, P1, P2, l1, l2):
    return R.weight_inner(P1.weight.coords, P2.weight.coords) - R.weight_inner(l1, l2)


def distance(p):
    R = p.system
    d = Fraction(_d(R, p.P1, p.P2, p.lam1.coords, p.lam2.coords))
    if d.denominator != 1:
        raise AssertionError(f"non-integral distance {d}")
    if d < 0:
        raise AssertionError(f"negative distance {d}")
    return d


def distance_of(u, v):
    """d(u(varpi_1), v(varpi_2)) for coset representatives u, v."""
    return distance(WeightPair(u.weight(), v.weight(), u.parabolic, v.parabolic))


def sign_violating_roots(R, lam1, lam2):
    """Positive roots alpha with (lam1, alpha)(lam2, alpha) < 0."""
    return [b for b, x, y in zip(R.positive_coords, R.positive_pairings(lam1), R.positive_pairings(lam2))
            if x * y < 0]


def greedy_sequence(p):
    """(gamma_1, ..., gamma_d) with mu_i = s_{gamma_{i+1}} ... s_{gamma_d}(lam2).

    Built from lam2 downward: at each step reflect by the least sign-violating
    positive root (lexicographic order of simple-root coordinates).  The last
    root chosen is gamma_1.
    """
    R = p.system
    d = int(distance(p))
    lam1, mu = p.lam1.coords, p.lam2.coords
    picked = []
    while True:
        bad = sign_violating_roots(R, lam1, mu)
        if not bad:
            break
        g = min(bad)
        picked.append(g)
        mu = R.reflect_weight(g, mu)
        if len(picked) > d:
            raise AssertionError("greedy sequence longer than the distance")
    if len(picked) != d:
        raise AssertionError(f"greedy sequence has length {len(picked)}, distance is {d}")
    seq = picked[::-1]
    # mu_i = s_{gamma_{i+1}} ... s_{gamma_d}(lam2) has d(lam1, mu_i) = i
    mu = p.lam2.coords
    for i in range(d, 0, -1):
        if _d(R, p.P1, p.P2, lam1, mu) != i:
            raise AssertionError("mu-sequence does not descend by one")
        mu = R.reflect_weight(seq[i - 1], mu)
    if _d(R, p.P1, p.P2, lam1, mu) != 0:
        raise AssertionError("mu_0 is not in the chamber of lam1")
    return [Root(g, R) for g in seq]


def orthogonal_sign_sequence(p):
    """A mutually orthogonal family of sign-violating roots of size d."""
    R = p.system
    chosen = []
    for b in sorted(sign_violating_roots(R, p.lam1.coords, p.lam2.coords)):
        if all(R.root_inner(b, c) == 0 for c in chosen):
            chosen.append(b)
    return [Root(b, R) for b in chosen]


def max_orthogonal_sequence(p):
    """Largest family of mutually orthogonal roots gamma with (lam1,gamma)(lam2,gamma) < 0.

    Exhaustive branch and bound over cliques of the orthogonality graph.
    """
    R = p.system
    cand = sign_violating_roots(R, p.lam1.coords, p.lam2.coords)
    n = len(cand)
    orth = [{j for j in range(n) if j != i and R.root_inner(cand[i], cand[j]) == 0} for i in range(n)]
    best = 0

    def grow(size, pool):
        nonlocal best
        best = max(best, size)
        for i in sorted(pool):
            if size + len(pool) <= best:
                return
            pool = pool - {i}
            grow(size + 1, pool & orth[i])

    grow(0, set(range(n)))
    return best


def step_identity_holds(p):
    """d(lam1, s_alpha lam2) = d(lam1, lam2) - 1 for every sign-violating alpha."""
    R = p.system
    d0 = _d(R, p.P1, p.P2, p.lam1.coords, p.lam2.coords)
    for b in sign_violating_roots(R, p.lam1.coords, p.lam2.coords):
        mu = R.reflect_weight(b, p.lam2.coords)
        if _d(R, p.P1, p.P2, p.lam1.coords, mu) != d0 - 1:
            return False
    return True


# -- cascade ---------------------------------------------------------------


@dataclass(frozen=True)
class CascadeLevel:
    index: int
    theta: Root
    roots: frozenset
    u_theta_nontrivial: object = None

    def removed(self, next_roots):
        return self.roots - next_roots


def _root_components(R, roots):
    roots = sorted(roots)
    left = set(roots)
    comps = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            a = stack.pop()
            for b in list(left):
                if b not in comp and R.root_inner(a, b) != 0:
                    comp.add(b)
                    stack.append(b)
        left -= comp
        comps.append(frozenset(comp))
    return comps


def _dominates(a, b):
    return all(x >= y for x, y in zip(a, b))


def cascade(R, P2=None, check=True):
    """Cascade of orthogonal highest roots.

    For a reducible R_i the level takes the component whose highest root is
    largest by (height, coordinates).  With P2 given, each level records whether
    R_i minus R_{i+1} contains a root of U_{P2}.
    """
    current = frozenset(R.all_coords)
    levels = []
    betas_by_level = []
    while current:
        comps = _root_components(R, current)
        tops = []
        for c in comps:
            pos = [b for b in c if any(x > 0 for x in b)]
            top = max(pos, key=lambda r: (sum(r), r))
            if not all(_dominates(top, b) for b in pos):
                raise AssertionError(f"component has no dominating root at level {len(levels) + 1}")
            tops.append((top, c))
        theta, comp = max(tops, key=lambda tc: (sum(tc[0]), tc[0]))
        nxt = frozenset(b for b in current if R.root_inner(b, theta) == 0)
        removed = current - nxt
        flag = None
        if P2 is not None:
            flag = any(P2.chi(b) == 1 for b in removed)
        levels.append(CascadeLevel(len(levels) + 1, Root(theta, R), current, flag))
        if check:
            betas_by_level.append(_check_level(R, theta, comp, current, removed, P2))
        current = nxt
    if check:
        for i, a in enumerate(levels):
            for b in levels[i + 1:]:
                if R.root_inner(a.theta.coords, b.theta.coords) != 0:
                    raise AssertionError("cascade roots are not orthogonal")
        if R.simply_laced and P2 is not None:
            _check_betas_across_levels(betas_by_level)
    return levels


def _check_level(R, theta, comp, current, removed, P2):
    """Structural identities of one cascade level; returns the U_{P2} decompositions."""
    pos_current = [b for b in current if any(x > 0 for x in b)]
    pos_set = set(pos_current)
    # positive roots of R_i outside R_{i+1} are theta and the theta - beta, beta > 0 in R_i
    expected = {theta} | {a for a in pos_current
                         if tuple(t - x for t, x in zip(theta, a)) in pos_set}
    got = {b for b in removed if any(x > 0 for x in b)}
    if got != expected:
        raise AssertionError(f"level characterization of R_i minus R_(i+1) fails at theta={theta}")
    # a positive root of the ambient system below theta lies in the component of theta
    for b in R.positive_coords:
        below = _dominates(theta, b)
        if below != (b in comp):
            raise AssertionError(f"root {b} violates the dominance criterion at theta={theta}")
    decomps = []
    if R.simply_laced:
        for a in pos_current:
            beta = tuple(t - x for t, x in zip(theta, a))
            if beta in pos_set:
                if R.root_inner(theta, a) != 1 or R.root_inner(theta, beta) != 1:
                    raise AssertionError("(theta, alpha) = (theta, beta) = 1 fails")
                if P2 is not None and P2.chi(a) == 1:
                    decomps.append((a, beta))
        # the root groups U_{-beta} of one level commute: beta + beta' is never a root
        for i, (a1, b1) in enumerate(decomps):
            for a2, b2 in decomps[i + 1:]:
                if R.root_inner(b1, b2) < 0:
                    raise AssertionError("two betas of one level sum to a root")
    return decomps


def _check_betas_across_levels(betas_by_level):
    seen = {}
    for i, decomps in enumerate(betas_by_level):
        for _, beta in decomps:
            j = seen.get(beta)
            if j is not None and j != i:
                raise AssertionError(f"beta {beta} occurs at levels {j + 1} and {i + 1}")
            seen[beta] = i


def dense_orbit_rank(P1, P2):
    """Number of cascade levels meeting U_{P2}; equals d(varpi_1, w_{P2} varpi_2)."""
    _require(P1, P2)
    if not is_opposite_pair(P1, P2):
        raise MetricError("dense_orbit_rank needs an opposite pair")
    R = P1.system
    s = sum(1 for lev in cascade(R, P2) if lev.u_theta_nontrivial)
    wp2 = longest_coset_rep(P2)
    d = distance(WeightPair(P1.weight, act(wp2, P2.weight), P1, P2))
    if d != s:
        raise AssertionError(f"cascade count {s} differs from d(1, w_P2) = {d}")
    return s


def level_beta_products(R, P2):
    """Per level, the multiset of (beta, beta') over pairs of U_{P2} decompositions."""
    out = []
    for lev in cascade(R, None, check=False):
        th = lev.theta.coords
        pos = {b for b in lev.roots if any(x > 0 for x in b)}
        dec = sorted(a for a in pos if P2.chi(a) == 1 and tuple(t - x for t, x in zip(th, a)) in pos)
        betas = [tuple(t - x for t, x in zip(th, a)) for a in dec]
        out.append([R.root_inner(b1, b2) for i, b1 in enumerate(betas) for b2 in betas[i + 1:]])
    return out

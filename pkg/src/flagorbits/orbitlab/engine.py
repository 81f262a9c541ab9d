"""Exact B(F_q)-orbits on G/P1 x G/P2 for GL_n and Sp_2n over prime fields.

The second projection is B-equivariant onto G/P2, whose B-orbits are the
Schubert cells.  Each cell holds one T-fixed point y, so the B-orbits over the
cell of y are the B_y-orbits on the fibre G/P1 x {y}.  Orbits are therefore
computed fibre by fibre, as connected components of the action graph of the
generators of B_y on G/P1(F_q).

Two labels are kept for every point: the B(F_q)-class (plain components) and
the geometric orbit (classes glued along quadratic torus twists, see
`MatrixGroup.twist_vectors`).  Dimensions and ranks come from the Lie algebra of
the stabiliser and must agree with the point counts q^(dim-rank) (q-1)^rank.
"""

from collections import Counter
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from ..parabolics import ParabolicDatum, double_cosets
from ..roots import Root, build_root_system
from ..weyl import act, coset_rep_of_weight
from .groups import GroupSpec, MatrixGroup, flag_count
from .linalg import encode, jump_set, rank, residual, rref_batch

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    pass


class OrbitLabError(AssertionError):
    pass


# -- points ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FlagPoint:
    """A pair of subspaces (V1, V2) given by RREF basis matrices over F_q."""

    spec: GroupSpec
    q: int
    nodes: tuple
    V1: np.ndarray
    V2: np.ndarray

    def key(self):
        return tuple(int(x) for x in self.V1.ravel()) + tuple(int(x) for x in self.V2.ravel())

    def __eq__(self, other):
        return isinstance(other, FlagPoint) and self.q == other.q and self.key() == other.key()

    def __hash__(self):
        return hash((self.q, self.key()))

    def tolist(self):
        return [self.V1.tolist(), self.V2.tolist()]


def schubert_cell_of(G, P, V):
    """Minimal coset representative of the Schubert cell containing the subspace V."""
    idx = [j - 1 for j in jump_set(V, G.F)]
    return coset_rep_of_weight(G.weight_of_indices(idx), P)


def phi_of(rep):
    """(u, v): the Schubert cells of the two projections of a FlagPoint."""
    G = MatrixGroup(rep.spec, rep.q)
    R = G.rs
    P1, P2 = (ParabolicDatum(R, k) for k in rep.nodes)
    return schubert_cell_of(G, P1, rep.V1), schubert_cell_of(G, P2, rep.V2)


def span_point(spec, q, nodes, spans):
    """FlagPoint from two lists of vectors given as {1-based index: coefficient} dicts or index lists."""
    from .linalg import PrimeField, span_rref

    F = PrimeField(q)
    N = spec.N
    mats = []
    for vecs in spans:
        rows = []
        for v in vecs:
            row = np.zeros(N, dtype=np.int64)
            items = v.items() if isinstance(v, dict) else ((j, 1) for j in v)
            for j, c in items:
                row[j - 1] = c % q
            rows.append(row)
        mats.append(span_rref(rows, F))
    return FlagPoint(spec, q, tuple(nodes), mats[0], mats[1])


# -- varieties ---------------------------------------------------------------


class Variety:
    """F_q-points of G/P for a maximal parabolic: sorted RREF matrices of the subspaces."""

    def __init__(self, G, node):
        self.G = G
        self.node = node
        self.k = node + 1
        F = G.F
        start = np.eye(G.N, dtype=np.int64)[: self.k][None]
        found = [start]
        known = np.sort(encode(start, F))
        frontier = start
        gens = G.all_root_elements()
        while len(frontier):
            imgs = np.concatenate([rref_batch(frontier @ g.T, F) for g in gens])
            codes, first = np.unique(encode(imgs, F), return_index=True)
            new = ~np.isin(codes, known)
            frontier = imgs[first[new]]
            known = np.sort(np.concatenate([known, codes[new]]))
            found.append(frontier)
        pts = np.concatenate(found)
        codes = encode(pts, F)
        order = np.argsort(codes)
        self.points = pts[order]
        self.codes = codes[order]
        expected = flag_count(G.spec, node, G.p)
        if len(self.points) != expected:
            raise OrbitLabError(f"G/P{node + 1} has {len(self.points)} points over F_{G.p}, expected {expected}")
        self.cell = None

    def __len__(self):
        return len(self.points)

    def index(self, M):
        F = self.G.F
        c = encode(rref_batch(M, F), F)
        i = np.minimum(np.searchsorted(self.codes, c), len(self.codes) - 1)
        if (self.codes[i] != c).any():
            raise OrbitLabError("subspace outside the variety")
        return i

    def fixed_points(self):
        """Indices of the T-fixed points (coordinate subspaces), in code order."""
        P = self.points
        unit = ((P == 0) | (P == 1)).all(axis=(1, 2)) & ((P == 1).sum(axis=2) == 1).all(axis=1)
        return np.nonzero(unit)[0]

    def support(self, i):
        return tuple(int(j) for j in np.nonzero(self.points[i])[1])

    def schubert_cells(self):
        """Partition into U-orbits of the T-fixed points, keeping a U-path to each point."""
        if self.cell is not None:
            return
        G = self.G
        ugens = [G.x(b) for b in G.positive]
        self._uinv = [G.x(b, -1) for b in G.positive]
        n = len(self.points)
        cell = np.full(n, -1)
        parent = np.full(n, -1)
        via = np.full(n, -1)
        self.fixed = self.fixed_points()
        for c, f in enumerate(self.fixed):
            cell[f] = c
            frontier = np.array([f])
            while len(frontier):
                nxt = []
                for gi, g in enumerate(ugens):
                    img = self.index(self.points[frontier] @ g.T)
                    if ((cell[img] != -1) & (cell[img] != c)).any():
                        raise OrbitLabError("U-orbits of two T-fixed points meet")
                    fresh = cell[img] == -1
                    tgt, first = np.unique(img[fresh], return_index=True)
                    cell[tgt] = c
                    parent[tgt] = frontier[fresh][first]
                    via[tgt] = gi
                    nxt.append(tgt)
                frontier = np.concatenate(nxt)
        if (cell < 0).any():
            raise OrbitLabError("Schubert cells do not cover the variety")
        self.cell, self.parent, self.via = cell, parent, via
        sizes = np.bincount(cell, minlength=len(self.fixed))
        self.cell_dims = []
        for s in sizes:
            d = round(np.log(s) / np.log(G.p)) if s > 1 else 0
            if G.p ** d != s:
                raise OrbitLabError(f"Schubert cell of size {s} is not a power of {G.p}")
            self.cell_dims.append(d)
        eye = np.eye(G.N, dtype=np.int64)
        self._memo = {int(f): eye for f in self.fixed}

    def transport(self, i):
        """h in U(F_q) moving point i to the T-fixed point of its cell."""
        p = self.G.p
        chain = []
        i = int(i)
        while i not in self._memo:
            chain.append(i)
            i = int(self.parent[i])
        h = self._memo[i]
        for j in reversed(chain):
            h = (h @ self._uinv[self.via[j]]) % p
            self._memo[j] = h
        return h


def _components(n, maps):
    if maps:
        rows = np.concatenate([m[0] for m in maps])
        cols = np.concatenate([m[1] for m in maps])
    else:
        rows = cols = np.zeros(0, dtype=np.int64)
    A = sp.coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, lab = connected_components(A, directed=True, connection="weak")
    # renumber by least member so labels do not depend on the solver
    _, first, inv = np.unique(lab, return_index=True, return_inverse=True)
    order = np.argsort(np.argsort(first))
    return order[inv]


# -- Lie algebra -------------------------------------------------------------


def lie_dims(G, mats):
    """(dim, rank) of the B-orbit of a tuple of RREF subspaces from the Lie algebra of its stabiliser."""
    basis, n_nil, n_tor = G.borel_lie_basis()
    F = G.F
    M = np.array([np.concatenate([residual(V @ X.T, V, F).ravel() for V in mats]) for X in basis])
    stab = len(basis) - rank(M, F)
    stab_u = n_nil - rank(M[:n_nil], F)
    return len(basis) - stab, n_tor - (stab - stab_u)


def fit_count(c, q):
    """(a, b) with c = q^a (q-1)^b; b is None when q = 2; None when c has another factor."""
    a = 0
    while c % q == 0:
        c //= q
        a += 1
    if q == 2:
        return (a, None) if c == 1 else None
    b = 0
    while c % (q - 1) == 0 and c > 1:
        c //= q - 1
        b += 1
    return (a, b) if c == 1 else None


# -- one field ---------------------------------------------------------------


@dataclass
class _Edge:
    witness: frozenset
    target: int
    etype: str
    sizes: tuple = None
    route2: str = None


class FieldRun:
    """Orbits, dimensions and raisings over a single prime field."""

    def __init__(self, spec, q, P1, P2):
        G = self.G = MatrixGroup(spec, q)
        self.q = q
        self.P1, self.P2 = P1, P2
        p = q
        self.X1 = Variety(G, P1.node)
        self.X2 = self.X1 if P2.node == P1.node else Variety(G, P2.node)
        X1, X2 = self.X1, self.X2
        X2.schubert_cells()
        bgens = G.borel_generators()
        n_unip = len(G.positive)
        n1 = len(X1)
        ar = np.arange(n1)
        perms = [X1.index(X1.points @ g.T) for g in bgens]
        twists = [self._twist_map(kk) for kk in G.twist_vectors]

        self.cls_lab, self.geo_lab, self.unip_gens = [], [], []
        self.cls_off, self.geo_off = [], []
        orb_y, orb_rep, orb_size, orb_classes = [], [], [], []
        ncls = 0
        for c, f in enumerate(X2.fixed):
            Y = X2.points[f]
            stab = [gi for gi, g in enumerate(bgens) if X2.index((Y @ g.T % p)[None])[0] == f]
            self.unip_gens.append([gi for gi in stab if gi < n_unip])
            maps = [(ar, perms[gi]) for gi in stab]
            cls = _components(n1, maps)
            geo = _components(n1, maps + twists) if twists else cls
            self.cls_off.append(ncls)
            self.geo_off.append(len(orb_y))
            ncls += int(cls.max()) + 1
            self.cls_lab.append(cls)
            self.geo_lab.append(geo)
            ng = int(geo.max()) + 1
            first = np.full(ng, n1)
            np.minimum.at(first, geo, ar)
            sizes = np.bincount(geo, minlength=ng)
            per = np.zeros(ng, dtype=np.int64)
            for g_, c_ in set(zip(geo.tolist(), cls.tolist())):
                per[g_] += 1
            for j in range(ng):
                orb_y.append(c)
                orb_rep.append(int(first[j]))
                orb_size.append(int(sizes[j]) * q ** X2.cell_dims[c])
                orb_classes.append(int(per[j]))
        self.n_classes = ncls
        self.orb_y, self.orb_rep, self.orb_size, self.orb_classes = orb_y, orb_rep, orb_size, orb_classes
        n = len(orb_y)
        total = sum(orb_size)
        if total != len(X1) * len(X2):
            raise OrbitLabError(f"orbit sizes sum to {total}, expected {len(X1) * len(X2)}")
        self.reps = [(X1.points[orb_rep[o]], X2.points[X2.fixed[orb_y[o]]]) for o in range(n)]
        self.dims, self.ranks = [], []
        for o in range(n):
            d, r = lie_dims(G, self.reps[o])
            a = d - r
            expected = q ** a * (q - 1) ** r
            if orb_size[o] != expected:
                raise OrbitLabError(
                    f"orbit of size {orb_size[o]} over F_{q} does not match q^{a}(q-1)^{r} from its stabiliser")
            self.dims.append(d)
            self.ranks.append(r)
        R = G.rs
        self.v = [coset_rep_of_weight(G.weight_of_indices(X2.support(f)), P2) for f in X2.fixed]
        for c, f in enumerate(X2.fixed):
            if self.v[c].length != X2.cell_dims[c]:
                raise OrbitLabError("Schubert cell dimension differs from the length of its coset representative")
        self.phi = [(schubert_cell_of(G, P1, self.reps[o][0]), self.v[orb_y[o]]) for o in range(n)]
        self._assign_gorbits(R)
        self.edges = {}
        for o in range(n):
            for i in range(R.rank):
                self.edges[(o, i)] = self._raise(o, i)
        self.names = self._name_orbits()

    # -- helpers -----------------------------------------------------------

    def _twist_map(self, kk):
        """Partial map of G/P1(F_q) induced by the quadratic torus twist with exponents kk."""
        G, X1 = self.G, self.X1
        p, c = G.p, G.F.nonsquare
        P = X1.points
        piv = np.argmax(P != 0, axis=2)
        diff = kk[None, None, :] - kk[piv][:, :, None]
        ok = ~(((diff % 2) != 0) & (P != 0)).any(axis=(1, 2))
        e = diff // 2
        fac = np.where(e > 0, c, np.where(e < 0, int(G.F.inv[c]), 1)) ** np.abs(e)
        Q = (P[ok] * fac[ok]) % p
        src = np.nonzero(ok)[0]
        return src, X1.index(Q)

    def ginvariant(self, A, Y):
        F = self.G.F
        meet = A.shape[0] + Y.shape[0] - rank(np.vstack([A, Y]), F)
        if self.G.kind == "gl":
            return (meet,)
        return (meet, rank(A @ self.G.J @ Y.T % self.q, F))

    def _assign_gorbits(self, R):
        X1, X2, G = self.X1, self.X2, self.G
        E = np.eye(G.N, dtype=np.int64)[: X1.k]
        by_weight = {G.weight_of_indices(X2.support(f)): f for f in X2.fixed}
        table = {}
        self.double_cosets = double_cosets(self.P1, self.P2)
        for w in self.double_cosets:
            mu = tuple(int(c) for c in act(w, self.P2.weight).coords)
            inv = self.ginvariant(E, X2.points[by_weight[mu]])
            if inv in table:
                raise OrbitLabError("two double cosets share a G-orbit invariant")
            table[inv] = w
        self.gorbit = []
        for A, Y in self.reps:
            inv = self.ginvariant(A, Y)
            if inv not in table:
                raise OrbitLabError(f"G-orbit invariant {inv} matches no double coset")
            self.gorbit.append(table[inv])
        if len(set(self.gorbit)) != len(self.double_cosets):
            raise OrbitLabError("number of G-orbits differs from the number of double cosets")

    def canonical(self, V1, V2):
        """(geometric orbit ids, class ids) of the points (V1[j], V2[j])."""
        p = self.q
        i2 = self.X2.index(V2)
        moved = np.stack([V1[j] @ self.X2.transport(i2[j]).T % p for j in range(len(i2))])
        i1 = self.X1.index(moved)
        cells = self.X2.cell[i2]
        gid = [self.geo_off[c] + int(self.geo_lab[c][x]) for c, x in zip(cells, i1)]
        cid = [self.cls_off[c] + int(self.cls_lab[c][x]) for c, x in zip(cells, i1)]
        return gid, cid

    def _orbit_of_translates(self, rep, mats):
        A, Y = rep
        V1 = np.stack([A @ m.T % self.q for m in mats])
        V2 = np.stack([Y @ m.T % self.q for m in mats])
        return self.canonical(V1, V2)

    def _raise(self, o, i):
        G, q = self.G, self.q
        beta = tuple(int(j == i) for j in range(G.rs.rank))
        s = G.simple_lift(i)
        mats = [s @ G.x(beta, t) % q for t in range(q)]
        gid, _ = self._orbit_of_translates(self.reps[o], mats)
        witness = frozenset(gid) | {o}
        dims = {x: self.dims[x] for x in witness}
        top = max(dims.values())
        dense = [x for x in witness if dims[x] == top]
        if len(dense) != 1:
            raise OrbitLabError(f"P_alpha_{i + 1} O has no dense B-orbit")
        if dense == [o]:
            return None
        if top != self.dims[o] + 1:
            raise OrbitLabError(f"raising along alpha_{i + 1} does not add one dimension")
        t = dense[0]
        dr = self.ranks[t] - self.ranks[o]
        if len(witness) == 2 and dr == 0:
            etype = "U"
        elif len(witness) == 2 and dr == 1:
            etype = "N"
        elif len(witness) == 3 and dr == 1:
            (other,) = witness - {o, t}
            if self.dims[other] != self.dims[o] or self.ranks[other] != self.ranks[o]:
                raise OrbitLabError("three-orbit raising whose third orbit differs from the source")
            etype = "T"
        else:
            raise OrbitLabError(f"raising with {len(witness)} orbits and rank change {dr}")
        edge = _Edge(witness, t, etype)
        if len(witness) == 2 and q > 2:
            edge.sizes = self.stabiliser_orbit_sizes(t, i)
            edge.route2 = "U" if any(z % q == 0 for z in edge.sizes) else "N"
            if edge.route2 != etype:
                raise OrbitLabError(
                    f"alpha_{i + 1} raising: counts give {etype}, stabiliser image gives {edge.route2}")
        return edge

    def stabiliser_orbit_sizes(self, o, i):
        """Orbit sizes of Stab(x) on P_gamma/B(F_q) = P^1(F_q), x the representative of o.

        The coset p B corresponds to the B(F_q)-class of p^{-1} x, so the sizes
        are the multiplicities of classes among those q + 1 points.
        """
        G, q = self.G, self.q
        beta = tuple(int(j == i) for j in range(G.rs.rank))
        sinv = G.inverse(G.simple_lift(i))
        mats = [np.eye(G.N, dtype=np.int64)] + [sinv @ G.x(beta, -t) % q for t in range(q)]
        _, cid = self._orbit_of_translates(self.reps[o], mats)
        return tuple(sorted(Counter(cid).values()))

    def _name_orbits(self):
        """Minimal orbits are named u|v; every other orbit by its least raising path from one."""
        n = len(self.reps)
        targets = {e.target for e in self.edges.values() if e}
        name = {}
        for o in range(n):
            if o not in targets:
                u, v = self.phi[o]
                nm = f"{u.element.word_str()}|{v.element.word_str()}"
                if nm in name.values():
                    raise OrbitLabError(f"two minimal orbits share the cells {nm}")
                name[o] = nm
        level = sorted(name, key=name.get)
        r = self.G.rs.rank
        while level:
            nxt = []
            for o in level:
                for i in range(r):
                    e = self.edges[(o, i)]
                    if e and e.target not in name:
                        name[e.target] = f"{name[o]}^{i + 1}"
                        nxt.append(e.target)
            level = sorted(nxt, key=name.get)
        if len(name) != n:
            raise OrbitLabError("some orbit is not reachable from a minimal orbit")
        return name

    def u_orbit_codims(self):
        """Per orbit, dim minus the largest U(F_q)-orbit dimension inside it."""
        q = self.q
        n1 = len(self.X1)
        ar = np.arange(n1)
        perms = {}
        best = {}
        for c, f in enumerate(self.X2.fixed):
            maps = []
            for gi in self.unip_gens[c]:
                if gi not in perms:
                    g = self.G.x(self.G.positive[gi])
                    perms[gi] = self.X1.index(self.X1.points @ g.T)
                maps.append((ar, perms[gi]))
            lab = _components(n1, maps)
            size = np.bincount(lab)
            geo = self.geo_lab[c]
            for x in range(n1):
                o = self.geo_off[c] + int(geo[x])
                best[o] = max(best.get(o, 0), int(size[lab[x]]))
        out = {}
        for o, s in best.items():
            e = self.X2.cell_dims[self.orb_y[o]]
            a = round(np.log(s) / np.log(q)) if s > 1 else 0
            if q ** a != s:
                raise OrbitLabError("U-orbit size is not a power of q")
            out[o] = self.dims[o] - (a + e)
        return out


# -- cross-field assembly ----------------------------------------------------


@dataclass(eq=False)
class OrbitRecord:
    name: str
    gorbit: object
    phi: tuple
    dim: int
    rank: int
    counts: dict
    reps: dict
    classes: dict = field(default_factory=dict)
    lab: object = field(default=None, repr=False)

    @property
    def rep(self):
        """Representative over the smallest tested field."""
        return self.reps[min(self.reps)]

    @property
    def u(self):
        return self.phi[0]

    @property
    def v(self):
        return self.phi[1]


@dataclass(eq=False)
class EdgeRecord:
    source: OrbitRecord
    target: OrbitRecord
    gamma: Root
    etype: str
    witness: list
    stabiliser_sizes: dict = field(default_factory=dict)
    route2: dict = field(default_factory=dict)


@dataclass(eq=False)
class OrbitLabResult:
    spec: GroupSpec
    P1: ParabolicDatum
    P2: ParabolicDatum
    orbits: list
    edges: list
    double_cosets: list
    points: dict
    classes: dict
    runs: dict = field(default_factory=dict, repr=False)

    def orbit(self, name):
        return self._by_name[name]

    def edge(self, name, i):
        return self._edges.get((name, i))

    @property
    def splitting(self):
        """Fields where some geometric orbit has several B(F_q)-classes."""
        return {q: n for q, n in self.classes.items() if n != len(self.orbits)}


def _parabolic(R, P):
    if isinstance(P, ParabolicDatum):
        if P.system is not R:
            return ParabolicDatum(R, P.node)
        return P
    return ParabolicDatum.of(R, int(P))


def work_estimate(spec, P1, P2, q=None):
    """Points visited by the fibred enumeration at the largest field."""
    q = max(spec.q) if q is None else q
    R = build_root_system(spec.cartan)
    P1, P2 = _parabolic(R, P1), _parabolic(R, P2)
    from ..weyl import weight_orbit

    cells = len(weight_orbit(R, P2.weight.coords))
    return flag_count(spec, P1.node, q) * cells + flag_count(spec, P2.node, q)


def run_orbitlab(spec, P1, P2, budget=DEFAULT_BUDGET):
    """Enumerate B-orbits at every field of spec.q and assemble field-independent records."""
    R = build_root_system(spec.cartan)
    P1, P2 = _parabolic(R, P1), _parabolic(R, P2)
    if not any(q > 2 for q in spec.q):
        raise ValueError("at least one odd q is needed to fit ranks from point counts")
    work = work_estimate(spec, P1, P2)
    if work > budget:
        raise BudgetExceeded(
            f"{spec.cartan} nodes ({P1.node + 1},{P2.node + 1}) at q={max(spec.q)} needs about "
            f"{work} fibre points, over the budget of {budget}")
    runs = {q: FieldRun(spec, q, P1, P2) for q in sorted(spec.q)}
    base_q = min(runs)
    base = runs[base_q]
    names = sorted(base.names.values())
    lookup = {}
    for q, run in runs.items():
        inv = {nm: o for o, nm in run.names.items()}
        if sorted(inv) != names:
            raise OrbitLabError(f"orbits over F_{q} differ from those over F_{base_q}")
        lookup[q] = inv

    records = {}
    for nm in names:
        first = None
        counts, reps, classes = {}, {}, {}
        for q, run in runs.items():
            o = lookup[q][nm]
            key = (run.gorbit[o], run.phi[o], run.dims[o], run.ranks[o])
            if first is None:
                first = key
            elif key != first:
                raise OrbitLabError(f"orbit {nm} has field-dependent data")
            counts[q] = run.orb_size[o]
            classes[q] = run.orb_classes[o]
            reps[q] = FlagPoint(spec, q, (P1.node, P2.node), *run.reps[o])
        w, phi, d, r = first
        for q, c in counts.items():
            fit = fit_count(c, q)
            if fit is None or fit[0] != d - r or (fit[1] is not None and fit[1] != r):
                raise OrbitLabError(f"count {c} of orbit {nm} over F_{q} does not fit dim {d}, rank {r}")
        records[nm] = OrbitRecord(nm, w, phi, d, r, counts, reps, classes)

    edges = []
    edge_map = {}
    for nm in names:
        for i in range(R.rank):
            seen = None
            sizes, route2 = {}, {}
            for q, run in runs.items():
                e = run.edges[(lookup[q][nm], i)]
                if e is None:
                    key = None
                else:
                    key = (e.etype, run.names[e.target], frozenset(run.names[x] for x in e.witness))
                    if e.route2 is not None:
                        sizes[q], route2[q] = e.sizes, e.route2
                if seen is None and q == base_q:
                    seen = key
                elif key != seen:
                    raise OrbitLabError(f"raising {nm} along alpha_{i + 1} depends on the field")
            if seen is None:
                continue
            etype, tgt, wit = seen
            rec = EdgeRecord(records[nm], records[tgt], Root(tuple(int(j == i) for j in range(R.rank)), R),
                             etype, [records[x] for x in sorted(wit)], sizes, route2)
            edges.append(rec)
            edge_map[(nm, i)] = rec

    orbits = sorted(records.values(), key=lambda o: (o.dim, o.name))
    result = OrbitLabResult(
        spec, P1, P2, orbits, edges, base.double_cosets,
        points={q: len(run.X1) * len(run.X2) for q, run in runs.items()},
        classes={q: run.n_classes for q, run in runs.items()},
        runs=runs,
    )
    result._by_name = records
    result._edges = edge_map
    for o in orbits:
        o.lab = result
    return result


def enumerate_b_orbits(spec, P1, P2, budget=DEFAULT_BUDGET):
    return run_orbitlab(spec, P1, P2, budget).orbits


def classify_edge(O, gamma):
    """EdgeRecord for raising O along a simple root, or None when P_gamma O = O."""
    i = gamma if isinstance(gamma, int) else next(j for j, c in enumerate(gamma.coords) if c)
    if not isinstance(gamma, int) and sum(gamma.coords) != 1:
        raise ValueError("gamma must be a simple root")
    return O.lab.edge(O.name, i)

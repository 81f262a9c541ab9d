"""The Sp_6 configuration on LG(3,6) x LG(3,6) whose subgraph has an N edge next to U edges."""

from dataclasses import dataclass, field

import numpy as np

from ..roots import build_root_system
from .engine import (
    DEFAULT_BUDGET, BudgetExceeded, FieldRun, OrbitLabError, classify_edge, run_orbitlab, span_point,
    work_estimate,
)
from .groups import GroupSpec, MatrixGroup
from .linalg import PrimeField, jump_set

LAGRANGIAN = ((4,), (5,), (6,))
SPANS = {
    "x0": ((1,), (2, 4), (3, 5)),
    "x1": ((2,), (1, 4), (3, 6)),
    "x2": ((1,), (3, 4), (2, 5)),
    "x": ((3,), (1, 5), (2, 6)),
}
EXPECTED_DIMS = {"x0": 8, "x1": 9, "x2": 9, "x": 10}
EXPECTED_EDGES = (("x0", 1, "U", "x1"), ("x0", 2, "N", "x2"), ("x1", 2, "U", "x"))


def sqrt2(q):
    """Square root of 2 mod q: the one that is itself a square, else the smaller one."""
    F = PrimeField(q)
    roots = F.sqrt(2)
    if not roots:
        raise ValueError(f"2 is not a square mod {q}")
    squares = [r for r in roots if F.is_square(r)]
    return (squares or roots)[0]


def transfer_matrices(q):
    """p1 in P_alpha1 and p2, p in P_alpha2, over F_q (2 must be a square)."""
    a = pow(sqrt2(q), -1, q)
    p1 = np.eye(6, dtype=np.int64)[:, [1, 0, 2, 3, 5, 4]]
    p = np.eye(6, dtype=np.int64)[:, [0, 2, 1, 4, 3, 5]]
    p2 = np.zeros((6, 6), dtype=np.int64)
    p2[0, 0] = p2[5, 5] = 1
    p2[1, 1] = p2[1, 2] = p2[2, 1] = a
    p2[2, 2] = -a
    p2[3, 3] = -a
    p2[3, 4] = p2[4, 3] = p2[4, 4] = a
    return {"p1": p1 % q, "p2": p2 % q, "p": p % q}


def in_minimal_parabolic(G, g, i):
    """g lies in P_alpha_i: it stabilises E_j for every j other than i and N - i (1-based)."""
    N, q = G.N, G.p
    for j in range(1, N):
        if j in (i, N - i):
            continue
        if (g[j:, :j] % q).any():
            return False
    return True


def point(spec, q, name):
    return span_point(spec, q, (2, 2), (SPANS[name], LAGRANGIAN))


def _apply(g, x, q):
    from .linalg import span_rref

    F = PrimeField(q)
    return span_rref(x.V1 @ g.T % q, F), span_rref(x.V2 @ g.T % q, F)


def _same(pair, x):
    return np.array_equal(pair[0], x.V1) and np.array_equal(pair[1], x.V2)


@dataclass
class CounterexampleReport:
    checks: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    names: dict = field(default_factory=dict)
    cells: dict = field(default_factory=dict)
    edges: list = field(default_factory=list)
    identities: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(self.checks.values())

    def lines(self):
        out = []
        for nm in SPANS:
            out.append(f"O[{nm}] = {self.names.get(nm)}  dim {self.dims.get(nm)}  counts {self.counts.get(nm)}")
        for src, i, et, dst, r2 in self.edges:
            out.append(f"{src} --{et}@alpha_{i}--> {dst}   stabiliser route {r2}")
        for k, ok in self.checks.items():
            out.append(f"[{'PASS' if ok else 'FAIL'}] {k}")
        out.extend(self.notes)
        return out


def counterexample_sp6(qs=(3, 5), identity_qs=(7, 17), budget=DEFAULT_BUDGET):
    spec = GroupSpec("sp", 3, tuple(qs))
    lab = run_orbitlab(spec, 3, 3, budget)
    rep = CounterexampleReport()

    # orbit of each named point, consistently over every field
    for nm in SPANS:
        seen = set()
        for q, run in lab.runs.items():
            x = point(spec, q, nm)
            gid, _ = run.canonical(x.V1[None], x.V2[None])
            seen.add(run.names[gid[0]])
        if len(seen) != 1:
            raise OrbitLabError(f"{nm} lands in different orbits over different fields")
        rep.names[nm] = seen.pop()
    orbit = {nm: lab.orbit(o) for nm, o in rep.names.items()}
    for nm, O in orbit.items():
        rep.dims[nm] = O.dim
        rep.counts[nm] = dict(O.counts)
    rep.checks["dims (8, 9, 9, 10) from point counts"] = all(
        rep.dims[nm] == d for nm, d in EXPECTED_DIMS.items())

    # Schubert cells of the first components separate O1 and O2
    for nm, O in orbit.items():
        rep.cells[nm] = tuple(j for j in jump_set(point(spec, min(qs), nm).V1, PrimeField(min(qs))))
    rep.checks["O1 != O2 by their Schubert cells"] = orbit["x1"].phi != orbit["x2"].phi
    R = build_root_system("C3")
    for src, i, et, dst in EXPECTED_EDGES:
        e = classify_edge(orbit[src], R.simple_root(i - 1))
        got = (e.etype, e.target.name) if e else (None, None)
        r2 = dict(e.route2) if e else {}
        rep.edges.append((src, i, got[0], dst if got[1] == orbit[dst].name else got[1], r2))
        rep.checks[f"{src} -> {dst} along alpha_{i} is {et} (point counts)"] = got == (et, orbit[dst].name)
        rep.checks[f"{src} -> {dst} along alpha_{i} is {et} (stabiliser image)"] = bool(r2) and all(
            t == et for t in r2.values())

    for q in identity_qs:
        rep.identities[q] = _identities(q, rep, budget)
    return rep


def _identities(q, rep, budget):
    spec = GroupSpec("sp", 3, (q,))
    G = MatrixGroup(spec, q)
    mats = transfer_matrices(q)
    J = G.J
    res = {}
    for nm, g in mats.items():
        res[f"{nm} symplectic"] = not ((g.T @ J @ g - J) % q).any()
    res["p1 in P_alpha1"] = in_minimal_parabolic(G, mats["p1"], 1)
    res["p2 in P_alpha2"] = in_minimal_parabolic(G, mats["p2"], 2)
    res["p in P_alpha2"] = in_minimal_parabolic(G, mats["p"], 2)
    x = {nm: point(spec, q, nm) for nm in SPANS}
    res["p1 x0 = x1"] = _same(_apply(mats["p1"], x["x0"], q), x["x1"])
    res["p x1 = x"] = _same(_apply(mats["p"], x["x1"], q), x["x"])
    img = _apply(mats["p2"], x["x0"], q)
    res["p2 x0 = x2"] = _same(img, x["x2"])
    # p2 x0 = <e1, e2+e5, e3-e4> x W; x2 has e3+e4.  They differ by diag(1,1,i,-i,1,1), i^2 = -1.
    F = PrimeField(q)
    if F.sqrt(-1):
        i = F.sqrt(-1)[0]
        t = np.diag([1, 1, i, (-i) % q, 1, 1]).astype(np.int64)
        res["t p2 x0 = x2 for a torus element t of Sp_6(F_q)"] = _same(_apply(t @ mats["p2"] % q, x["x0"], q), x["x2"])
    else:
        from ..parabolics import ParabolicDatum

        R = build_root_system("C3")
        P = ParabolicDatum(R, 2)
        if work_estimate(spec, P, P) > budget:
            raise BudgetExceeded(f"checking the p2 identity at q={q} needs an enumeration over the budget")
        run = FieldRun(spec, q, P, P)
        gid, cid = run.canonical(np.stack([img[0], x["x2"].V1]), np.stack([img[1], x["x2"].V2]))
        res["p2 x0 in the geometric B-orbit of x2"] = gid[0] == gid[1]
        rep.notes.append(f"q={q}: p2 x0 and x2 lie in {'one' if cid[0] == cid[1] else 'two'} B(F_q)-class(es) "
                         f"of one geometric orbit; -1 is not a square mod {q}")
    for k, ok in res.items():
        rep.checks[f"q={q}: {k}"] = ok
    return res

"""Acceptance criteria, one PASS/FAIL line each (also repeated in the terminal summary)."""

import itertools
import time

import numpy as np

from flagorbits.metric import (
    WeightPair, dense_orbit_rank, distance, distance_of, greedy_sequence, max_orthogonal_sequence,
    sign_violating_roots, step_identity_holds,
)
from flagorbits.orbitlab import GroupSpec, fit_count, run_orbitlab
from flagorbits.orbitlab.counterexample import EXPECTED_DIMS, EXPECTED_EDGES
from flagorbits.orbitlab.crosscheck import crosscheck_shadow
from flagorbits.parabolics import (
    ParabolicDatum, double_cosets, induction_datum, is_cominuscule, is_opposite_pair, levi_weight_paths,
    prop_triv_violations,
)
from flagorbits.roots import build_root_system
from flagorbits.weyl import act, coset_rep, longest_coset_rep, weight_orbit
from oracles import borel_class_sizes, gaussian, subset_weight, typeA_distance

RESULTS = []


def record(n, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


def _cominuscule(R):
    return [ParabolicDatum(R, i) for i in range(R.rank) if is_cominuscule(ParabolicDatum(R, i))]


def test_criterion_1_distance_soundness():
    t0 = time.time()
    types = ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"]
    pairs = bad = 0
    for name in types:
        R = build_root_system(name)
        for P1, P2 in itertools.product(_cominuscule(R), repeat=2):
            O1, O2 = weight_orbit(R, P1.weight.coords), weight_orbit(R, P2.weight.coords)
            oracle = {}
            if name[0] == "A":
                n = R.rank
                k, l = P1.node + 1, P2.node + 1
                sub1 = {subset_weight(n, set(I)): I for I in itertools.combinations(range(n + 1), k)}
                sub2 = {subset_weight(n, set(J)): J for J in itertools.combinations(range(n + 1), l)}
                bad += set(sub1) != {tuple(int(c) for c in m) for m in O1}
                bad += set(sub2) != {tuple(int(c) for c in m) for m in O2}
                for a, b in itertools.product(sub1, sub2):
                    oracle[(a, b)] = typeA_distance(n, k, l, sub1[a], sub2[b])
            for l1, l2 in itertools.product(O1, O2):
                p = WeightPair(R.weight(l1), R.weight(l2), P1, P2)
                d = distance(p)
                ok = len(greedy_sequence(p)) == d == max_orthogonal_sequence(p)
                ok &= (d == 0) == (not sign_violating_roots(R, l1, l2))
                ok &= step_identity_holds(p)
                if oracle:
                    ok &= oracle[(tuple(int(c) for c in l1), tuple(int(c) for c in l2))] == d
                pairs += 1
                bad += not ok
    dt = time.time() - t0
    ok = record(1, "distance = greedy length = orthogonal-root oracle, d = 0 iff no sign-violating root, "
                   "step identity", bad == 0 and dt < 120, f"{pairs} weight pairs, {bad} mismatches, {dt:.1f}s")
    assert ok


def test_criterion_2_cascade_rank_identity():
    t0 = time.time()
    checked = bad = 0
    for name in ["A1", "A2", "A3", "A4", "A5", "D4", "D5"]:
        R = build_root_system(name)
        inv = np.linalg.inv(np.array(R.cartan_matrix, dtype=float))
        for P1, P2 in itertools.product(_cominuscule(R), repeat=2):
            if not is_opposite_pair(P1, P2):
                continue
            s = dense_orbit_rank(P1, P2)
            d = distance(WeightPair(P1.weight, act(longest_coset_rep(P2), P2.weight), P1, P2))
            gram = round(inv[P1.node, P2.node] + inv[P1.node, P1.node])
            checked += 1
            bad += not (s == d == gram)
    dt = time.time() - t0
    ok = record(2, "dense_orbit_rank = d(varpi_1, w_P2 varpi_2) on opposite pairs", bad == 0 and dt < 30,
                f"{checked} opposite pairs, {bad} mismatches, {dt:.1f}s")
    assert ok


GROUND_TRUTH = [("A1", 1, 1), ("A2", 1, 1), ("A3", 2, 1), ("A3", 2, 2)]


def test_criterion_3_simply_laced_ground_truth():
    t0 = time.time()
    qs = (2, 3, 5)
    fails = []
    summary = []
    for name, k, l in GROUND_TRUTH:
        spec = GroupSpec.for_type(name, qs)
        lab = run_orbitlab(spec, k, l)
        tag = f"{name}({k},{l})"
        # (a) counts equal across q, fits, totals, and the brute-force class sizes
        if len({len(run.names) for run in lab.runs.values()}) != 1:
            fails.append(f"{tag}: orbit counts differ across q")
        for q in qs:
            total = sum(O.counts[q] for O in lab.orbits)
            if total != gaussian(spec.n, k, q) * gaussian(spec.n, l, q):
                fails.append(f"{tag}: q={q} total {total}")
            for O in lab.orbits:
                fit = fit_count(O.counts[q], q)
                if fit is None or fit[0] != O.dim - O.rank or (fit[1] is not None and fit[1] != O.rank):
                    fails.append(f"{tag}: {O.name} count {O.counts[q]} at q={q}")
            if sorted(O.counts[q] for O in lab.orbits) != sorted(borel_class_sizes("gl", spec.n, k, l, q)):
                fails.append(f"{tag}: orbit sizes at q={q} differ from brute force")
        cc = crosscheck_shadow(lab)
        # (b) no N edges
        if cc.n_N:
            fails.append(f"{tag}: {cc.n_N} N edges")
        # (c) minimal orbits are Schubert-cell products matching the shadow's minimal nodes
        if not (all(cc.minimal_as_products.values()) and cc.minimal_match):
            fails.append(f"{tag}: minimal orbits {cc.minimal_missing} {cc.minimal_extra}")
        # (d) rank + d(Phi) = rank of the G-orbit
        if cc.rank_identity_failures or cc.dense_rank_failures:
            fails.append(f"{tag}: rank identity {cc.rank_identity_failures[:3]}")
        for O in lab.orbits:
            D = induction_datum(lab.P1, lab.P2, O.gorbit)
            if O.rank + distance_of(O.u, O.v) != D.orbit_rank:
                fails.append(f"{tag}: {O.name} rank identity")
        # (e) every edge adds one dimension
        for e in lab.edges:
            if e.target.dim != e.source.dim + 1:
                fails.append(f"{tag}: edge {e.source.name} -> {e.target.name}")
        summary.append(f"{tag} {len(lab.orbits)} orbits/{len(lab.edges)} edges")
    dt = time.time() - t0
    ok = record(3, "B(F_q)-orbit ground truth at q = 2, 3, 5: counts, fits, no N edges, minimal orbits, "
                   "rank identity, dim+1", not fails and dt < 900,
                f"{'; '.join(summary)}; {len(fails)} failures{': ' + fails[0] if fails else ''}; {dt:.1f}s")
    assert ok


def test_criterion_4_sp6_counterexample(sp6_report):
    rep = sp6_report
    failing = [k for k, v in rep.checks.items() if not v]
    edges = ", ".join(f"{s}->{d} {t}@{i}" for s, i, t, d in EXPECTED_EDGES)
    detail = (f"dims {tuple(rep.dims[nm] for nm in EXPECTED_DIMS)}, edges {edges}; "
              f"{len(rep.checks) - len(failing)}/{len(rep.checks)} checks pass, {rep.elapsed:.1f}s")
    if failing:
        detail += "; failing: " + ", ".join(failing)
    ok = record(4, "Sp6 dims, edge types by both routes, transfer-matrix identities at q = 7, 17",
                rep.passed and rep.elapsed < 600, detail)
    assert ok


# quadric Q^6 (node 1) and the two spinor families (nodes 3, 4)
D4_GEOMETRY = {(1, 1): 3, (1, 3): 2, (1, 4): 2, (3, 1): 2, (4, 1): 2, (3, 3): 3, (4, 4): 3, (3, 4): 2, (4, 3): 2}


def test_criterion_5_structural_invariants():
    t0 = time.time()
    n_pairs = n_cosets = 0
    fails = []
    instances = [f"A{n}" for n in range(1, 6)] + ["D4", "C3"]
    for name in instances:
        R = build_root_system(name)
        for P1, P2 in itertools.product(_cominuscule(R), repeat=2):
            n_pairs += 1
            reps = double_cosets(P1, P2)
            dense = 0
            for w in reps:
                n_cosets += 1
                D = induction_datum(P1, P2, w)
                if prop_triv_violations(P1, P2, w) or any(c < 0 for c in D.chi_R) or not all(D.checks.values()):
                    fails.append(f"{name}({P1.node + 1},{P2.node + 1}) {w.word_str()}")
                paths = levi_weight_paths(D)
                if len({coset_rep(u, P1) for u in paths}) != len(paths):
                    fails.append(f"{name} {w.word_str()}: repeated Levi paths")
                dense += D.dense
            if dense > 1:
                fails.append(f"{name}({P1.node + 1},{P2.node + 1}): {dense} dense G-orbits")
    t_comb = time.time() - t0

    # D4 has no matrix model: its counts are the possible dim(V1 cap V2) of isotropic subspaces
    R = build_root_system("D4")
    for (k, l), c in D4_GEOMETRY.items():
        if len(double_cosets(ParabolicDatum.of(R, k), ParabolicDatum.of(R, l))) != c:
            fails.append(f"D4({k},{l}): G-orbit count")

    # G-orbit counts from the enumeration: distinct G-invariants of the orbit representatives
    runs = 0
    for name in instances:
        if name[0] not in "AC":
            continue
        R = build_root_system(name)
        qs = (2, 3) if name[0] == "A" else (3, 5)
        for P1, P2 in itertools.product(_cominuscule(R), repeat=2):
            lab = run_orbitlab(GroupSpec.for_type(name, qs), P1.node + 1, P2.node + 1)
            for q, run in lab.runs.items():
                runs += 1
                seen = {run.ginvariant(A, Y) for A, Y in run.reps}
                if len(seen) != len(double_cosets(P1, P2)) or len(set(run.gorbit)) != len(seen):
                    fails.append(f"{name}({P1.node + 1},{P2.node + 1}) q={q}: {len(seen)} G-orbits")
    dt = time.time() - t0
    ok = record(5, "induction-datum invariants on every double coset; G-orbit counts match the enumeration",
                not fails and t_comb < 60,
                f"{n_pairs} pairs, {n_cosets} double cosets, {runs} field runs, {len(fails)} failures, "
                f"combinatorial part {t_comb:.1f}s, total {dt:.1f}s")
    assert ok

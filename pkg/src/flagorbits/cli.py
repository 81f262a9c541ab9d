"""Command-line driver.

Every option may also come from a flat key = value manifest (--manifest);
command-line flags win.  Exit codes: 0 all checks pass, 1 verification
failure, 2 usage or configuration error, 3 budget refusal.
"""

import argparse
import sys
from pathlib import Path

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

MANIFEST_KEYS = ("type", "p1", "p2", "gorbit", "q", "budget", "json", "dot", "emit", "pair")


class UsageError(Exception):
    pass


def read_manifest(path):
    """Flat key = value file; '#' starts a comment."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read manifest {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in MANIFEST_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def _config(args):
    cfg = read_manifest(args.manifest) if getattr(args, "manifest", None) else {}
    for k in MANIFEST_KEYS:
        v = getattr(args, k, None)
        if v is not None:
            cfg[k] = v
    return cfg


def _int(cfg, key, default=None):
    v = cfg.get(key, default)
    if v is None:
        raise UsageError(f"missing --{key}")
    try:
        return int(v)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"--{key} must be an integer, got {v!r}") from exc


def _system(cfg):
    from .roots import RootSystemError, build_root_system

    t = cfg.get("type")
    if not t:
        raise UsageError("missing --type")
    try:
        return build_root_system(str(t).upper())
    except (RootSystemError, ValueError, KeyError) as exc:
        raise UsageError(f"invalid type {t!r}: {exc}") from exc


def _parabolics(cfg, R):
    from .parabolics import ParabolicDatum

    out = []
    for key in ("p1", "p2"):
        k = _int(cfg, key)
        if not 1 <= k <= R.rank:
            raise UsageError(f"--{key} {k} is not a node of {R.name}")
        out.append(ParabolicDatum.of(R, k))
    return out


def _qlist(cfg):
    raw = cfg.get("q")
    if not raw:
        raise UsageError("orbitlab commands need a nonempty --q list")
    try:
        qs = tuple(int(x) for x in str(raw).split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad --q list {raw!r}") from exc
    if not qs:
        raise UsageError("orbitlab commands need a nonempty --q list")
    return qs


def _select_gorbits(cfg, P1, P2):
    from .parabolics import double_cosets
    from .shadow import dense_coset

    sel = str(cfg.get("gorbit", "all"))
    reps = double_cosets(P1, P2)
    if sel == "all":
        return reps
    if sel == "dense":
        return [dense_coset(P1, P2)]
    try:
        k = int(sel)
    except ValueError as exc:
        raise UsageError(f"--gorbit must be all, dense or an index, got {sel!r}") from exc
    if not 0 <= k < len(reps):
        raise UsageError(f"--gorbit index {k} out of range (0..{len(reps) - 1})")
    return [reps[k]]


def _emit(cfg, doc, dot_doc=None):
    from .graphio import to_dot, to_json

    wrote = False
    formats = set(str(cfg.get("emit", "json,dot")).split(","))
    if cfg.get("json") and "json" in formats:
        Path(cfg["json"]).write_text(to_json(doc))
        wrote = True
    if cfg.get("dot") and "dot" in formats:
        Path(cfg["dot"]).write_text(to_dot(dot_doc or doc))
        wrote = True
    return wrote


# -- commands ----------------------------------------------------------------


def cmd_rootsys(cfg):
    from .parabolics import ParabolicDatum, is_cominuscule
    from .roots import format_root, highest_root
    from .weyl import weight_orbit

    R = _system(cfg)
    print(f"type {R.name}  rank {R.rank}  positive roots {len(R.positive_coords)}")
    print(f"highest root {format_root(highest_root(R).coords)}  simply laced {R.simply_laced}")
    print("cartan matrix")
    for row in R.cartan_matrix:
        print("  " + " ".join(f"{int(x):2d}" for x in row))
    for k in range(R.rank):
        P = ParabolicDatum(R, k)
        if is_cominuscule(P):
            print(f"node {k + 1}: cominuscule, |W^P| = {len(weight_orbit(R, P.weight.coords))}")
    return EXIT_OK


def _pair_weights(token, P):
    from .roots import Weight
    from .weyl import WeylElement, act, longest_element

    R = P.system
    token = token.strip()
    if token == "dominant":
        return P.weight
    if token == "lowest":
        return act(longest_element(R), P.weight)
    if token.isdigit():
        w = WeylElement.from_word(R, tuple(int(c) - 1 for c in token))
        return act(w, P.weight)
    try:
        coords = tuple(int(c) for c in token.split(":"))
    except ValueError as exc:
        raise UsageError(f"bad weight {token!r}: use dominant, lowest, a word like 213 or coords a:b:c") from exc
    return Weight(coords, R)


def cmd_distance(cfg):
    from .metric import (MetricError, WeightPair, distance, greedy_sequence, max_orthogonal_sequence,
                         sign_violating_roots, step_identity_holds)
    from .roots import format_root
    from .weyl import weight_orbit

    R = _system(cfg)
    P1, P2 = _parabolics(cfg, R)
    spec = str(cfg.get("pair", "all"))
    try:
        if spec == "all":
            pairs = [(a, b) for a in weight_orbit(R, P1.weight.coords) for b in weight_orbit(R, P2.weight.coords)]
            pairs = [WeightPair(R.weight(a), R.weight(b), P1, P2) for a, b in pairs]
        else:
            parts = spec.split(",")
            if len(parts) != 2:
                raise UsageError("--pair takes two comma-separated weights or 'all'")
            pairs = [WeightPair(_pair_weights(parts[0], P1), _pair_weights(parts[1], P2), P1, P2)]
    except MetricError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    bad = 0
    for p in pairs:
        d = int(distance(p))
        seq = greedy_sequence(p)
        oracle = max_orthogonal_sequence(p)
        zero_ok = (d == 0) == (not sign_violating_roots(R, p.lam1.coords, p.lam2.coords))
        ok = len(seq) == d == oracle and zero_ok and step_identity_holds(p)
        bad += not ok
        if len(pairs) == 1:
            print(f"d = {d}")
            print("greedy " + (" ".join(format_root(g.coords) for g in seq) or "(empty)"))
            print(f"oracle {oracle}")
    if len(pairs) > 1:
        print(f"{R.name} nodes ({P1.node + 1},{P2.node + 1}): {len(pairs)} pairs, {bad} mismatches")
    return EXIT_OK if bad == 0 else EXIT_FAIL


def cmd_cascade(cfg):
    from .metric import MetricError, cascade, dense_orbit_rank
    from .parabolics import ParabolicDatum, is_opposite_pair
    from .roots import format_root

    R = _system(cfg)
    P2 = ParabolicDatum.of(R, _int(cfg, "p2")) if cfg.get("p2") else None
    for lev in cascade(R, P2):
        flag = "" if lev.u_theta_nontrivial is None else f"  meets U_P2: {lev.u_theta_nontrivial}"
        print(f"theta_{lev.index} = {format_root(lev.theta.coords)}  |R_{lev.index}| = {len(lev.roots)}{flag}")
    if cfg.get("p1") and P2 is not None:
        P1 = ParabolicDatum.of(R, _int(cfg, "p1"))
        if is_opposite_pair(P1, P2):
            try:
                print(f"dense orbit rank {dense_orbit_rank(P1, P2)}")
            except MetricError as exc:
                raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_shadow(cfg):
    from .graphio import shadow_document, to_json
    from .metric import MetricError
    from .shadow import shadow_graph

    R = _system(cfg)
    P1, P2 = _parabolics(cfg, R)
    try:
        graphs = [shadow_graph(P1, P2, w) for w in _select_gorbits(cfg, P1, P2)]
    except MetricError as exc:
        raise UsageError(str(exc)) from exc
    doc = shadow_document(P1, P2, graphs)
    if not _emit(cfg, doc):
        sys.stdout.write(to_json(doc))
    else:
        for g in graphs:
            print(f"G-orbit {g.gorbit.word_str()}: {len(g.nodes)} nodes, {len(g.edges)} edges, "
                  f"top rank {g.top.rank}")
    return EXIT_OK


def _run_lab(cfg):
    from .orbitlab import DEFAULT_BUDGET, GroupSpec, run_orbitlab

    R = _system(cfg)
    P1, P2 = _parabolics(cfg, R)
    qs = _qlist(cfg)
    try:
        spec = GroupSpec.for_type(R.name, qs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    budget = _int(cfg, "budget", DEFAULT_BUDGET)
    return run_orbitlab(spec, P1, P2, budget)


def _lab_summary(lab):
    lines = [f"{lab.P1.system.name} nodes ({lab.P1.node + 1},{lab.P2.node + 1}) q={sorted(lab.spec.q)}: "
             f"{len(lab.orbits)} B-orbits in {len(lab.double_cosets)} G-orbits, {len(lab.edges)} raisings"]
    types = {}
    for e in lab.edges:
        types[e.etype] = types.get(e.etype, 0) + 1
    lines.append("edge types " + " ".join(f"{k}={types.get(k, 0)}" for k in "UNT"))
    for q in sorted(lab.spec.q):
        lines.append(f"q={q}: {lab.points[q]} points, {lab.classes[q]} B(F_q)-classes")
    return lines


def cmd_orbitlab(cfg):
    from .graphio import orbitlab_document, to_dot
    from .orbitlab.report import report_json

    lab = _run_lab(cfg)
    print("\n".join(_lab_summary(lab)))
    formats = set(str(cfg.get("emit", "json,dot")).split(","))
    if cfg.get("json") and "json" in formats:
        Path(cfg["json"]).write_text(report_json(lab))
    if cfg.get("dot") and "dot" in formats:
        P1, P2 = lab.P1, lab.P2
        Path(cfg["dot"]).write_text(to_dot(orbitlab_document(lab, _select_gorbits(cfg, P1, P2))))
    return EXIT_OK


def cmd_verify(cfg):
    from .orbitlab.crosscheck import crosscheck_shadow
    from .parabolics import InductionError, induction_datum, is_cominuscule

    lab = _run_lab(cfg)
    lines = _lab_summary(lab)
    ok = True
    P1, P2 = lab.P1, lab.P2
    R = P1.system
    lines.append(f"G-orbit count {len(lab.double_cosets)} = double cosets: "
                 f"{len({O.gorbit for O in lab.orbits}) == len(lab.double_cosets)}")
    if is_cominuscule(P1) and is_cominuscule(P2):
        try:
            for w in lab.double_cosets:
                induction_datum(P1, P2, w)
            lines.append("induction data: all double cosets pass")
        except InductionError as exc:
            ok = False
            lines.append(f"induction data: FAIL {exc}")
    dims_ok = all(e.target.dim == e.source.dim + 1 for e in lab.edges)
    ok &= dims_ok
    lines.append(f"every raising adds one dimension: {dims_ok}")
    if R.simply_laced:
        cc = crosscheck_shadow(lab)
        lines.extend(cc.lines())
        ok &= cc.passed
    else:
        n_N = sum(e.etype == "N" for e in lab.edges)
        lines.append(f"{R.name} is not simply laced: {n_N} N edges (expected possible, not a failure)")
    lines.append("PASS" if ok else "FAIL")
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_counterexample(cfg, which="sp6"):
    from .orbitlab.counterexample import counterexample_sp6

    if which != "sp6":
        raise UsageError(f"unknown counterexample {which!r}; only sp6 is available")
    rep = counterexample_sp6()
    print("\n".join(rep.lines()))
    print("PASS" if rep.passed else "FAIL")
    return EXIT_OK if rep.passed else EXIT_FAIL


COMMANDS = {
    "rootsys": cmd_rootsys,
    "distance": cmd_distance,
    "cascade": cmd_cascade,
    "shadow": cmd_shadow,
    "orbitlab": cmd_orbitlab,
    "verify": cmd_verify,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="flagorbits", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, nodes=True):
        p.add_argument("--manifest", help="flat key = value file; flags override it")
        p.add_argument("--type", help="Cartan type, e.g. A3, D4, E6, C3")
        if nodes:
            p.add_argument("--p1", help="marked node of P1 (1-based Bourbaki)")
            p.add_argument("--p2", help="marked node of P2 (1-based Bourbaki)")
        return p

    common(sub.add_parser("rootsys", help="root system summary"), nodes=False)
    p = common(sub.add_parser("distance", help="distances, greedy sequences and the orthogonal-root oracle"))
    p.add_argument("--pair", help="'all' or two weights: dominant, lowest, a Weyl word like 213, or a:b:c")
    p = common(sub.add_parser("cascade", help="cascade of orthogonal highest roots"))
    for name in ("shadow", "orbitlab", "verify"):
        p = common(sub.add_parser(name))
        p.add_argument("--gorbit", help="all, dense, or an index into the double cosets")
        p.add_argument("--json", help="output path for JSON")
        p.add_argument("--dot", help="output path for DOT")
        p.add_argument("--emit", help="comma list of formats to write: json,dot")
        if name != "shadow":
            p.add_argument("--q", help="comma list of primes")
            p.add_argument("--budget", help="fibred point budget")
    p = sub.add_parser("counterexample", help="the Sp6 counterexample")
    p.add_argument("which", nargs="?", default="sp6")
    return ap


def main(argv=None):
    from .orbitlab import BudgetExceeded, OrbitLabError

    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "counterexample":
            return cmd_counterexample({}, args.which)
        return COMMANDS[args.command](_config(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OrbitLabError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

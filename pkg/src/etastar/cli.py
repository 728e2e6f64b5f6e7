"""Command-line interface: ``etastar <command> <file|-> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .corpus import BUILTINS, CorpusEntry
from .errors import SemigroupError
from .etastar import all_roots, eta_star, eta_star_bruteforce, g_eta_star
from .formats import builtin_entry, emit_cayley, load
from .green import FactorKind, compute_green, is_semisimple, principal_series
from .pseudovarieties import (PSEUDOVARIETIES, audit_member, containment_report, is_block_group,
                              is_clifford, is_completely_regular, is_inverse_semigroup, membership)
from .rees import component_partition, incidence_graph, is_cs_diagonal, rees_coordinates
from .representation import default_class_names, factor_representation, upper_nonnilpotent_graph
from .semigroup import FiniteSemigroup


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, ensure_ascii=False, indent=2) + "\n")


def _classes(S: FiniteSemigroup, classes) -> list[list[str]]:
    return [[S.label(x) for x in c] for c in classes]


def series_report(S: FiniteSemigroup, series=None) -> list[dict]:
    series = series or principal_series(S)
    return [{"size": f.size, "kind": f.kind.value, "elements": [S.label(x) for x in f.jclass]}
            for f in series.factors]


def analyze_report(entry: CorpusEntry) -> dict:
    S = entry.semigroup
    green = compute_green(S)
    series = principal_series(S, green)
    eta = eta_star(S)
    roots = all_roots(S, series, eta.congruence)
    return {
        "name": entry.name,
        "order": S.order,
        "has_zero": S.zero is not None,
        "green": {"r": green.R.class_count, "l": green.L.class_count,
                  "j": green.J.class_count, "h": green.H.class_count},
        "series": [{"size": f.size, "kind": f.kind.value} for f in series.factors],
        "eta_star": {"class_count": eta.class_count, "quotient_order": eta.quotient.order},
        "roots": [r.as_dict() for r in roots if r is not None],
        "memberships": {w: membership(S, w).verdict for w in PSEUDOVARIETIES},
        "structure": {"inverse": is_inverse_semigroup(S), "block_group": is_block_group(S),
                      "completely_regular": is_completely_regular(S, green),
                      "clifford": is_clifford(S), "semisimple": is_semisimple(S, series)},
    }


def _cmd_validate(entry, args, out):
    S = entry.semigroup
    _dump({"name": entry.name, "order": S.order, "valid": True}, out)


def _analyze_path(path: str) -> dict:
    return analyze_report(load(path))


def _batch(fn, items: list, jobs: int) -> list:
    """Map ``fn`` over ``items``, in worker processes when more than one job is allowed."""
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(min(jobs, len(items))) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _cmd_analyze(args, out, stdin=None):
    if len(args.files) == 1:
        _dump(analyze_report(load(args.files[0], stdin)), out)
        return
    if "-" in args.files:
        raise ValueError("standard input can only be analyzed on its own")
    _dump(_batch(_analyze_path, list(args.files), args.jobs), out)


def _cmd_eta_star(entry, args, out):
    S = entry.semigroup
    res = eta_star(S)
    if args.json:
        _dump({"name": entry.name, "class_count": res.class_count,
               "classes": _classes(S, res.congruence.classes),
               "quotient_order": res.quotient.order,
               "quotient_table": [list(r) for r in res.quotient.table]}, out)
        return
    out.write(f"class_count {res.class_count}\n")
    for c in res.congruence.classes:
        out.write("class " + " ".join(S.label(x) for x in c) + "\n")
    out.write(f"quotient_order {res.quotient.order}\n")
    for row in res.quotient.table:
        out.write(" ".join(map(str, row)) + "\n")


def _cmd_series(entry, args, out):
    _dump({"name": entry.name, "series": series_report(entry.semigroup)}, out)


def _cmd_roots(entry, args, out):
    S = entry.semigroup
    series = principal_series(S)
    roots = all_roots(S, series)
    _dump({"name": entry.name,
           "roots": [{"factor": p, "kind": f.kind.value} if roots[p] is None else roots[p].as_dict()
                     for p, f in enumerate(series.factors)]}, out)


def _cmd_rees(entry, args, out):
    S = entry.semigroup
    series = principal_series(S)
    factors = []
    for p, f in enumerate(series.factors):
        if f.kind is FactorKind.NULL:
            continue
        rs = rees_coordinates(f)
        item = {"factor": p, "kind": f.kind.value, "group_order": rs.group.order,
                "cols": rs.n, "rows": rs.m, "P": [list(row) for row in rs.P],
                "cs_diagonal": is_cs_diagonal(rs)}
        if item["cs_diagonal"]:
            item["n_eta"] = component_partition(rs).n_eta
            item["g_eta_order"] = g_eta_star(rs).group.order
        factors.append(item)
    _dump({"name": entry.name, "factors": factors}, out)


def _cmd_check(entry, args, out):
    S = entry.semigroup
    names = PSEUDOVARIETIES if args.pseudovariety.upper() == "ALL" else [args.pseudovariety]
    _dump({"name": entry.name,
           "memberships": {n.upper(): membership(S, n).as_dict(S) for n in names}}, out)


def _pick_factor(S: FiniteSemigroup, series, factor: Optional[int]) -> int:
    if factor is not None:
        if not 0 <= factor < len(series.factors):
            raise SemigroupError(f"factor index {factor} out of range 0..{len(series.factors) - 1}")
        return factor
    for p, f in enumerate(series.factors):
        if f.kind is not FactorKind.NULL and f.size > 1:
            return p
    raise SemigroupError("no non-null factor with more than one element")


def _cmd_graph(entry, args, out):
    S = entry.semigroup
    if args.kind == "nonnilpotent":
        g = upper_nonnilpotent_graph(S)
        if args.dot:
            out.write(g.to_dot(S, entry.name or "nonnilpotent"))
        else:
            _dump({"name": entry.name, "edges": [[S.label(a), S.label(b)] for a, b in g.edge_list()]}, out)
        return
    if entry.rees is not None and args.factor is None:
        rs = entry.rees
    else:
        series = principal_series(S)
        rs = rees_coordinates(series.factors[_pick_factor(S, series, args.factor)])
    ig = incidence_graph(rs)
    if args.dot:
        out.write(ig.to_dot(entry.name or "incidence"))
    else:
        _dump({"name": entry.name, "cols": ig.n, "rows": ig.m,
               "edges": [[i + 1, j + 1] for i, j in sorted(ig.edges)],
               "components": [{"cols": [i + 1 for i in c], "rows": [j + 1 for j in r]}
                              for c, r in ig.components()]}, out)


def _cmd_gamma(entry, args, out):
    S = entry.semigroup
    series = principal_series(S)
    p = _pick_factor(S, series, args.factor)
    names = default_class_names(S, series, p)
    rep = factor_representation(S, series, p, names)
    _dump({"name": entry.name, "factor": p,
           "gamma": {S.label(x): rep.notation(x) for x in sorted(rep.images)}}, out)


def _cmd_oracle(entry, args, out):
    S = entry.semigroup
    fast = eta_star(S).congruence
    slow = eta_star_bruteforce(S, cap=args.cap)
    verdict = "match" if fast == slow else "mismatch"
    _dump({"name": entry.name, "order": S.order, "result": verdict,
           "class_count": fast.class_count}, out)
    return 0 if verdict == "match" else 1


def _audit_path(path: str):
    entry = load(path)
    return (entry.name, *audit_member(entry.name, entry.semigroup))


def _cmd_audit(args, out):
    files = sorted(os.path.join(args.directory, f) for f in os.listdir(args.directory)
                   if os.path.isfile(os.path.join(args.directory, f)))
    report = containment_report(_batch(_audit_path, files, args.jobs))
    _dump({"directory": args.directory, **report.as_dict()}, out)
    return 1 if report.violations else 0


def _cmd_example(args, out):
    out.write(emit_cayley(builtin_entry(args.name).semigroup))


FILE_COMMANDS = {
    "validate": _cmd_validate, "eta-star": _cmd_eta_star,
    "series": _cmd_series, "roots": _cmd_roots, "rees": _cmd_rees, "check": _cmd_check,
    "graph": _cmd_graph, "gamma": _cmd_gamma, "oracle": _cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="etastar",
                                 description="Nilpotent quotients and structure of finite semigroups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def file_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="Cayley or Rees file, or - for standard input")
        return sp

    file_cmd("validate", "parse and check associativity")
    sp = sub.add_parser("analyze", help="full JSON report; several files are analyzed in parallel")
    sp.add_argument("files", nargs="+", help="Cayley or Rees files, or - for standard input")
    sp.add_argument("--jobs", type=int, default=0, help="worker processes (default: CPU count)")
    file_cmd("eta-star", "classes and quotient table").add_argument("--json", action="store_true")
    file_cmd("series", "principal series and factor kinds")
    file_cmd("roots", "eta*-root of every non-null principal factor")
    file_cmd("rees", "Rees coordinates of every non-null principal factor")
    sp = file_cmd("check", "pseudovariety membership")
    sp.add_argument("--pseudovariety", required=True,
                    choices=[*PSEUDOVARIETIES, *(p.lower() for p in PSEUDOVARIETIES), "ALL", "all"])
    sp = file_cmd("graph", "incidence or non-nilpotent graph")
    sp.add_argument("--kind", choices=["incidence", "nonnilpotent"], default="incidence")
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
    sp.add_argument("--factor", type=int, help="principal factor for the incidence graph")
    sp = file_cmd("gamma", "orbit notation of the representation over a factor")
    sp.add_argument("--factor", type=int)
    sp = file_cmd("oracle", "compare eta* with the partition-enumeration oracle")
    sp.add_argument("--cap", type=int, default=8, help="largest order to enumerate")
    sp = sub.add_parser("audit", help="containment audit over a directory of files")
    sp.add_argument("directory")
    sp.add_argument("--jobs", type=int, default=0, help="worker processes (default: CPU count)")
    sp = sub.add_parser("example", help="write a builtin as a Cayley file")
    sp.add_argument("name", choices=sorted(BUILTINS))
    return ap


def main(argv: Optional[Sequence[str]] = None, stdout=None, stdin=None) -> int:
    """Run one command; argparse exits with status 2 on usage errors."""
    out = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "audit":
            if not os.path.isdir(args.directory):
                sys.stderr.write(f"etastar: {args.directory}: not a directory\n")
                return 2
            return _cmd_audit(args, out)
        if args.command == "example":
            _cmd_example(args, out)
            return 0
        if args.command == "analyze":
            _cmd_analyze(args, out, stdin)
            return 0
        entry = load(args.file, stdin)
        return FILE_COMMANDS[args.command](entry, args, out) or 0
    except FileNotFoundError as exc:
        sys.stderr.write(f"etastar: {exc.filename}: no such file\n")
        return 2
    except (SemigroupError, ValueError, KeyError) as exc:
        sys.stderr.write(f"etastar: {exc}\n")
        return 1


def cli_main(argv: Optional[Sequence[str]] = None, stdout=None, stdin=None) -> int:
    """Like ``main`` but returns argparse's exit status instead of raising SystemExit."""
    try:
        return main(argv, stdout, stdin)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


def run() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    run()

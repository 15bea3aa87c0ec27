"""Command-line front end.

Verdicts go to stdout, diagnostics to stderr.  Exit codes: 0 on success (or
``yes``/``valid`` with ``--exit-status``), 1 for ``no``/``invalid`` and 2 for
``unknown`` under ``--exit-status``, 64 for usage errors, 65 for unreadable or
malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .dichotomy import NO, UNKNOWN, YES, classify, solve
from .oracle import (
    DEFAULT_MAX_N,
    OracleLimitError,
    exact_minor,
    exact_minor_dp,
    exact_minor_rooted,
    exact_minor_rooted_dp,
)
from .reductions.cnf import CnfError, parse_dimacs, to_exact3
from .reductions.ippc import (
    IppcInstance,
    ippc_pad,
    ippc_to_trees,
    ippc_witness_embedding,
    pad_solution,
    satx_to_ippc,
)
from .reductions.isc import (
    IscInstance,
    _cover,
    isc_to_trees,
    isc_witness_embedding,
    sat3_to_isc,
)
from .selftest import run_selftest
from .tree import TreeError, verify_embedding
from .treeio import dump_witness, load_tree, parse_witness, save_tree

EX_USAGE = 64
EX_DATAERR = 65
VERDICT_STATUS = {YES: 0, NO: 1, UNKNOWN: 2}


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None


def _load_pair(args):
    try:
        T, _ = load_tree(args.host)
        P, _ = load_tree(args.pattern)
    except OSError as exc:
        raise DataError(f"cannot read {exc.filename}: {exc.strerror}") from None
    return T, P


def _emit_pair(stem: str, T, P, labels: dict, witness=None) -> None:
    save_tree(f"{stem}.T.tree", T, comment="host")
    save_tree(f"{stem}.P.tree", P, comment="pattern")
    Path(f"{stem}.labels.json").write_text(json.dumps(labels, indent=1) + "\n")
    if witness is not None:
        Path(f"{stem}.witness.json").write_text(dump_witness(witness) + "\n")
    print(f"{stem}: host {T.n} vertices, pattern {P.n} vertices")


def cmd_classify(args) -> int:
    T, P = _load_pair(args)
    print(json.dumps(classify(T, P).to_dict()))
    return 0


def cmd_solve(args) -> int:
    T, P = _load_pair(args)
    answer, report = solve(T, P, allow_exact=args.allow_exact, max_exact_n=args.max_exact_n)
    print(answer)
    if args.json:
        print(json.dumps(report.to_dict()))
    return VERDICT_STATUS[answer] if args.exit_status else 0


def cmd_oracle(args) -> int:
    T, P = _load_pair(args)
    if (args.root_host is None) != (args.root_pattern is None):
        raise UsageError("--root-host and --root-pattern go together")
    use_dp = args.method == "dp" or (args.method == "auto" and T.n > args.max_n)
    try:
        if args.root_host is None:
            found = exact_minor_dp(T, P) if use_dp else exact_minor(T, P, max_n=args.max_n)
        else:
            if not (0 <= args.root_host < T.n and 0 <= args.root_pattern < P.n):
                raise DataError("root out of range")
            if use_dp:
                found = exact_minor_rooted_dp(T, args.root_host, P, args.root_pattern)
            else:
                found = exact_minor_rooted(T, args.root_host, P, args.root_pattern, max_n=args.max_n)
    except OracleLimitError as exc:
        raise DataError(str(exc)) from None
    answer = YES if found else NO
    print(answer)
    return VERDICT_STATUS[answer] if args.exit_status else 0


def cmd_verify(args) -> int:
    T, P = _load_pair(args)
    try:
        f = parse_witness(_read(args.witness))
        ok = verify_embedding(T, P, f)
    except ValueError as exc:
        print(f"witness rejected: {exc}", file=sys.stderr)
        ok = False
    print("valid" if ok else "invalid")
    return (0 if ok else 1) if args.exit_status else 0


def _load_cnf(path):
    return parse_dimacs(_read(path))


def cmd_gen_isc(args) -> int:
    cnf = _load_cnf(args.cnf)
    if args.exact3:
        cnf = to_exact3(cnf)
    inst = sat3_to_isc(cnf)
    Path(args.output).write_text(inst.to_json() + "\n")
    print(f"{args.output}: universe {inst.n}, {inst.m} sets, k={inst.k}")
    return 0


def cmd_gen_ippc(args) -> int:
    inst = satx_to_ippc(_load_cnf(args.cnf))
    Path(args.output).write_text(inst.to_json() + "\n")
    print(f"{args.output}: {inst.size} elements, |X|={len(inst.X)}, |Y|={len(inst.Y)}, |Z|={len(inst.Z)}")
    return 0


def cmd_gen_trees_diam(args) -> int:
    inst = IscInstance.from_json(_read(args.isc))
    base = args.scale
    T, P, labels = isc_to_trees(inst, base)
    witness = None
    if args.witness:
        sol = json.loads(_read(args.witness))
        selection = tuple(sol["selection"])
        if "allocation" in sol:
            allocation = {(i, e): t for i, e, t in sol["allocation"]}
        else:
            allocation = _cover(inst, selection)
            if allocation is None:
                raise DataError("selection admits no inclusive surjection")
        witness = isc_witness_embedding(inst, selection, allocation, base)
    _emit_pair(args.output, T, P, labels, witness)
    return 0


def cmd_gen_trees_pw(args) -> int:
    inst = IppcInstance.from_json(_read(args.ippc))
    T, P, labels = ippc_to_trees(inst, pad=True)
    witness = None
    if args.witness:
        sol = json.loads(_read(args.witness))
        padded = ippc_pad(inst)
        f, g = pad_solution(padded, sol["f"], [tuple(s) for s in sol["g"]])
        witness = ippc_witness_embedding(padded, f, g)
    _emit_pair(args.output, T, P, labels, witness)
    return 0


def cmd_selftest(args) -> int:
    if not 1 <= args.max_n <= 7:
        raise UsageError("--max-n must be between 1 and 7")
    results = run_selftest(args.max_n)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.passed} passed, {r.failed} failed")
    return 0 if all(r.ok for r in results) else 1


def _pair_args(p) -> None:
    p.add_argument("--host", required=True, help="host tree file (.tree)")
    p.add_argument("--pattern", required=True, help="pattern tree file (.tree)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treeminor", description="Tree minor containment tools.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("classify", help="report the structural regime of a pair as JSON")
    _pair_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="decide containment through the dispatcher")
    _pair_args(p)
    p.add_argument("--allow-exact", action="store_true", help="run the exact oracle on hard pairs")
    p.add_argument("--max-exact-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--exit-status", action="store_true", help="exit 0/1/2 for yes/no/unknown")
    p.add_argument("--json", action="store_true", help="also print the report as JSON")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exact answer by exhaustive search")
    _pair_args(p)
    p.add_argument("--root-host", type=int)
    p.add_argument("--root-pattern", type=int)
    p.add_argument("--method", choices=("auto", "contract", "dp"), default="auto")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="size cap for contraction search")
    p.add_argument("--exit-status", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a witness embedding")
    _pair_args(p)
    p.add_argument("--witness", required=True, help='JSON {"map": [...]}')
    p.add_argument("--exit-status", action="store_true", help="exit 1 when invalid")
    p.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="generate reduction instances and tree pairs")
    gsub = gen.add_subparsers(dest="kind", metavar="kind", parser_class=_Parser)
    gsub.required = True

    g = gsub.add_parser("isc", help="3-CNF to inclusive set cover")
    g.add_argument("--cnf", required=True)
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--exact3", action="store_true", help="widen short clauses to three literals first")
    g.set_defaults(func=cmd_gen_isc)

    g = gsub.add_parser("trees-diam", help="set cover instance to a diameter-(6, 4) tree pair")
    g.add_argument("--isc", required=True)
    g.add_argument("-o", "--output", required=True, metavar="STEM")
    g.add_argument("--witness", help='solution JSON {"selection": [...], "allocation": [[set, elem, target], ...]}')
    g.add_argument(
        "--scale", type=int, default=None,
        help="replace n in the padding sizes; exploratory only, voids the equivalence",
    )
    g.set_defaults(func=cmd_gen_trees_diam)

    g = gsub.add_parser("ippc", help="restricted CNF to inclusive poset pair cover")
    g.add_argument("--cnf", required=True)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gen_ippc)

    g = gsub.add_parser("trees-pw", help="poset pair cover instance to a pathwidth-2 tree pair")
    g.add_argument("--ippc", required=True)
    g.add_argument("-o", "--output", required=True, metavar="STEM")
    g.add_argument("--witness", help='solution JSON {"f": [...], "g": [[x, side], ...]}')
    g.set_defaults(func=cmd_gen_trees_pw)

    p = sub.add_parser("selftest", help="oracle-equivalence sweep over small trees")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
            return args.func(args)
    except UsageError as exc:
        print(f"treeminor: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (DataError, TreeError, CnfError, KeyError, TypeError, ValueError) as exc:
        print(f"treeminor: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EX_DATAERR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line interface: ``regmatch {compute,construct,verify,oracle,decompose}``.

Exit status: 0 for a positive verdict (pass / exists / found), 1 for a
negative one (fail / not-exist), 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import certify, constructions
from .formats import Graph6Error, parse_graph6, to_dot, to_graph6
from .formulas import rex_matching, rsat_matching
from .graph import Graph, GraphError
from .matching import decompose, verify_witness
from .oracle import MAX_ORDER, oracle_rex, oracle_rsat

OK, NEGATIVE, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args: argparse.Namespace, report: dict, text: str) -> None:
    if args.json:
        print(json.dumps(report, sort_keys=True))
    elif text:
        print(text)


def _report(args: argparse.Namespace, inputs: dict, status: int, result: object) -> dict:
    return {"command": args.command, "inputs": inputs, "status": status, "result": result}


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _read_graphs(path: str) -> list[Graph]:
    try:
        data = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    lines = [line for line in data.splitlines() if line.strip()]
    if not lines:
        raise InputError(f"no graph6 records in {path}")
    try:
        return [parse_graph6(line) for line in lines]
    except Graph6Error as exc:
        raise InputError(f"graph6 parse error: {exc}") from None


# -- subcommands ----------------------------------------------------------------

def cmd_compute(args: argparse.Namespace) -> int:
    inputs = {"kind": args.kind, "n": args.n, "m": args.m}
    try:
        ans = rsat_matching(args.n, args.m) if args.kind == "rsat" else rex_matching(args.n, args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    status = OK if ans.exists else NEGATIVE
    if ans.exists:
        text = f"{args.kind}({args.n},{args.m}): edges={ans.edges} degree={ans.degree}"
    else:
        text = f"{args.kind}({args.n},{args.m}): not-exist reason={ans.reason.value}"
    _emit(args, _report(args, inputs, status, ans.as_dict()), text)
    return status


_BUILDERS = {
    "rsat": (constructions.rsat_extremal, certify.certify_rsat_extremal),
    "rex-cycles": (constructions.rex_extremal_cycles, certify.certify_rex_extremal),
    "rex-cliques": (constructions.rex_extremal_clique_form, certify.certify_rex_extremal),
}


def _format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g).decode() + "\n"
    if fmt == "dot":
        return to_dot(g)
    return json.dumps(_graph_json(g), sort_keys=True) + "\n"


def cmd_construct(args: argparse.Namespace) -> int:
    inputs = {"kind": args.kind, "n": args.n, "m": args.m, "format": args.format, "out": args.out}
    if args.kind == "rsat":
        ans = rsat_matching(args.n, args.m) if args.n >= 1 and args.m >= 1 else None
        if ans is None:
            raise InputError("need n >= 1 and m >= 1")
        if not ans.exists:
            _emit(args, _report(args, inputs, NEGATIVE, ans.as_dict()),
                  f"rsat({args.n},{args.m}): not-exist reason={ans.reason.value}")
            return NEGATIVE
    build, check = _BUILDERS[args.kind]
    try:
        if args.kind == "rex-cycles" and args.partition:
            parts = [int(x) for x in args.partition.split(",")]
            inputs["partition"] = parts
            g = build(args.n, args.m, parts)
        else:
            g = build(args.n, args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    cert = check(g, args.n, args.m)
    if not cert.passed:
        raise RuntimeError(f"constructed graph failed certification:\n{cert.to_text()}")
    payload = _format_graph(g, args.format)
    result = {"graph6": to_graph6(g).decode(), "n": g.n, "edges": g.num_edges,
              "degree": cert.degree, "certificate": cert.as_dict()}
    if args.out == "-":
        if args.json:
            result["graph"] = payload
        else:
            sys.stdout.write(payload)
    else:
        with open(args.out, "w") as fh:
            fh.write(payload)
    text = "" if args.out == "-" else (
        f"wrote {args.kind}({args.n},{args.m}) to {args.out}: "
        f"edges={g.num_edges} degree={cert.degree} verdict={cert.verdict}")
    _emit(args, _report(args, inputs, OK, result), text)
    return OK


def _certify(g: Graph, m: int, mode: str) -> certify.Certificate:
    if mode == "free":
        return certify.certify_free(g, m)
    if mode == "saturated":
        return certify.certify_saturated(g, m)
    if mode == "rsat-extremal":
        return certify.certify_rsat_extremal(g, g.n, m)
    try:
        return certify.certify_rex_extremal(g, g.n, m)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_verify(args: argparse.Namespace) -> int:
    inputs = {"input": args.input, "m": args.m, "mode": args.mode}
    if args.m < 0:
        raise InputError("m must be non-negative")
    graphs = _read_graphs(args.input)
    certs = [_certify(g, args.m, args.mode) for g in graphs]
    status = OK if all(c.passed for c in certs) else NEGATIVE
    result = [dict(c.as_dict(), graph6=to_graph6(g).decode()) for c, g in zip(certs, graphs)]
    text = "\n\n".join(c.to_text() for c in certs)
    _emit(args, _report(args, inputs, status, result if len(result) > 1 else result[0]), text)
    return status


def cmd_oracle(args: argparse.Namespace) -> int:
    inputs = {"kind": args.kind, "n": args.n, "m": args.m,
              "budget_seconds": args.budget_seconds, "emit_witness": args.emit_witness}
    if args.n > MAX_ORDER:
        raise InputError(f"oracle is capped at n = {MAX_ORDER}")
    run = oracle_rsat if args.kind == "rsat" else oracle_rex
    try:
        out = run(args.n, args.m, budget=args.budget_seconds, prune=not args.no_prune)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    status = OK if out.found else NEGATIVE
    result = out.as_dict()
    if not args.emit_witness:
        result.pop("witness_graph6")
    answer = f"answer={out.edges} degree={out.degree}" if out.found else out.status
    lines = [f"{args.kind}({args.n},{args.m}): {answer} "
             f"exhaustive={str(out.exhaustive).lower()} examined={out.examined} "
             f"pruned={out.pruned} elapsed={out.elapsed:.3f}s"]
    for r, scan in sorted(out.per_degree.items()):
        lines.append(f"  degree {r}: examined={scan.examined} hits={scan.hits} "
                     f"pruned={scan.pruned} complete={str(scan.complete).lower()}")
    if args.emit_witness and out.witness is not None:
        lines.append(f"witness={to_graph6(out.witness).decode()}")
    _emit(args, _report(args, inputs, status, result), "\n".join(lines))
    return status


def _fmt_set(vs) -> str:
    return "{" + ",".join(str(v) for v in sorted(vs)) + "}"


def cmd_decompose(args: argparse.Namespace) -> int:
    inputs = {"input": args.input}
    graphs = _read_graphs(args.input)
    results, blocks = [], []
    for g in graphs:
        ge = decompose(g)
        res = {"n": g.n, "nu": ge.nu, "D": sorted(ge.D), "A": sorted(ge.A), "C": sorted(ge.C)}
        lines = [f"n={g.n} nu={ge.nu}", f"D={_fmt_set(ge.D)}", f"A={_fmt_set(ge.A)}",
                 f"C={_fmt_set(ge.C)}"]
        if ge.S is None:
            res["witness"] = None
            res["note"] = "perfect matching present; no witness set"
            lines.append("note: perfect matching present; no witness set")
        else:
            rep = verify_witness(g, ge.S)
            res["witness"] = {
                "S": sorted(ge.S), "s": rep.s, "q": rep.q, "orders": rep.orders,
                "components": rep.components,
                "all_factor_critical": rep.all_factor_critical,
                "matching_identity": rep.matching_identity,
                "order_identity": rep.order_identity,
                "component_count_residual": rep.component_count_residual,
            }
            half = sum(d - 1 for d in rep.orders) // 2
            mark = lambda ok: "ok" if ok else "FAIL"  # noqa: E731
            lines += [
                f"S={_fmt_set(ge.S)} s={rep.s} q={rep.q} d={rep.orders}",
                f"factor-critical components: {mark(rep.all_factor_critical)}",
                f"nu = s + sum((d_i-1)/2): {rep.s}+{half}={rep.s + half} vs nu={rep.nu} "
                f"{mark(rep.matching_identity)}",
                f"n = s + sum(d_i): {rep.s}+{sum(rep.orders)}={rep.s + sum(rep.orders)} "
                f"vs n={g.n} {mark(rep.order_identity)}",
                f"q - (n - 2nu + s) = {rep.component_count_residual}",
            ]
        results.append(res)
        blocks.append("\n".join(lines))
    _emit(args, _report(args, inputs, OK, results if len(results) > 1 else results[0]),
          "\n\n".join(blocks))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regmatch",
        description="Regular saturation and regular Turan numbers of matchings.")
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    def nm(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="graph order")
        p.add_argument("--m", type=int, required=True, help="forbid a matching of size m+1")

    p = sub.add_parser("compute", help="evaluate the closed form")
    p.add_argument("kind", choices=["rsat", "rex"])
    nm(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="build and certify an extremal graph")
    p.add_argument("kind", choices=sorted(_BUILDERS))
    nm(p)
    p.add_argument("--format", choices=["graph6", "dot", "json"], default="graph6")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--partition", help="comma-separated odd part sizes (rex-cycles only)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify graph6 input")
    p.add_argument("input", help="graph6 file, '-' for stdin")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=["free", "saturated", "rsat-extremal", "rex-extremal"],
                   required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search over regular graphs (n <= 10)")
    p.add_argument("kind", choices=["rsat", "rex"])
    nm(p)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--emit-witness", action="store_true")
    p.add_argument("--no-prune", action="store_true",
                   help="test every labelled graph instead of cutting matched subtrees")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("decompose", help="Gallai-Edmonds partition and witness set")
    p.add_argument("input", help="graph6 file, '-' for stdin")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        # GraphError is a ValueError; so is a bad REGMATCH_THREADS value
        if args.json:
            print(json.dumps(_report(args, {}, USAGE, {"error": str(exc)}), sort_keys=True))
        print(f"regmatch: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes are uniform across subcommands: 0 the property/query holds
(or the command simply succeeded), 1 it fails or a counterexample was
found, 2 the input or usage was bad.  ``--format json`` prints exactly
the same verdict as the default text rendering.

Input formats
-------------
Algebra JSON: ``{"elements": ["0","a","a'","1"], "leq": [[...0/1...]]}``
or ``{"hasse": [[i, j], ...]}`` (reflexive-transitive closure applied),
optionally with ``"neg": [...]``; indices refer to positions in
``elements``.

Subordination JSON: ``{"algebra": <algebra JSON or file path>,
"prec": [[i, j], ...]}``.

Norm files: one ``body |~ head`` per line, ``#`` starts a comment,
blank lines ignored.  Formulas use atoms ``[a-z][a-z0-9]*``, constants
``T F``, connectives ``~ & | ->`` with precedence ``~ > & > | > ->``
(``->`` associates right) and parentheses.

Modal inequalities use the same atoms and constants, operators
``~ <> []`` binding tightest, then ``&``, then ``|``; one ``<=``
separates the sides.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import iologic, slanted
from .completion import dm_completion
from .duality import (
    RelCondition,
    build_space_jirr,
    build_space_primefilters,
    check_relational,
)
from .errors import SubnormError
from .order import lattice_to_json, poset_from_json
from .harness import (
    GenConfig,
    exit_code_for,
    replay_counterexample,
    run_suite,
)
from .harness.catalog import CHECKS_BY_NAME
from .subordination import (
    Property,
    ProtoSubAlg,
    check_property,
    classify,
    close,
    close_i,
    subalg_from_json,
    subalg_to_json,
)


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_subalg(args) -> ProtoSubAlg:
    if args.input:
        obj = _load_json(args.input)
        return subalg_from_json(obj, base_dir=os.path.dirname(os.path.abspath(args.input)))
    if not args.algebra:
        raise SubnormError("need --input or --algebra (+ --prec)")
    alg_obj = _load_json(args.algebra)
    pairs = []
    if args.prec:
        prec_obj = _load_json(args.prec)
        if isinstance(prec_obj, dict):
            prec_obj = prec_obj.get("prec", [])
        pairs = [tuple(p) for p in prec_obj]
    return subalg_from_json({"algebra": alg_obj, "prec": pairs})


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _parse_props(text: str) -> list[Property]:
    out = []
    for part in text.split(","):
        name = part.strip().upper()
        if not name:
            continue
        try:
            out.append(Property[name])
        except KeyError:
            raise SubnormError(f"unknown property {name!r}; known: "
                               + ", ".join(p.name for p in Property)) from None
    return out


def _cmd_check(args) -> int:
    S = _load_subalg(args)
    if args.props:
        props = _parse_props(args.props)
    else:
        props = []
    results = {}
    all_hold = True
    lines = []
    for prop in props:
        holds, witness = check_property(S, prop)
        all_hold &= holds
        results[prop.name] = {"holds": holds,
                              "witness": list(witness) if witness is not None else None}
        lines.append(f"{prop.name}: {'holds' if holds else 'fails'}"
                     + (f" (witness {witness})" if witness else ""))
    payload = {"results": results, "holds": all_hold}
    if args.classify or not props:
        names = sorted(classify(S))
        payload["classes"] = names
        lines.append("classes: " + (", ".join(names) if names else "(none)"))
    _emit(args, payload, lines)
    return 0 if all_hold else 1


def _cmd_close(args) -> int:
    S = _load_subalg(args)
    before = set(S.prec.pairs())
    if args.system:
        closed = close_i(S, args.system)
    elif args.rules:
        closed = close(S, _parse_props(args.rules))
    else:
        raise SubnormError("need --system 1..4 or --rules LIST")
    payload = subalg_to_json(closed)
    payload["added"] = len(set(closed.prec.pairs()) - before)
    _emit(args, payload,
          ["closed prec: " + " ".join(map(str, closed.prec.pairs())),
           f"added {payload['added']} pairs"])
    return 0


def _parse_query(text: str) -> tuple:
    norm = iologic.parse_norm(text)
    return norm.body, norm.head


def _cmd_derive(args) -> int:
    N = iologic.NormativeSystem.parse(open(args.norms, encoding="utf-8").read())
    query = _parse_query(args.query)
    holds = iologic.derive(N, args.system, query)
    _emit(args, {"holds": holds, "system": args.system, "query": args.query},
          [f"{args.query}: {'derivable' if holds else 'not derivable'} in system {args.system}"])
    return 0 if holds else 1


def _cmd_out(args) -> int:
    N = iologic.NormativeSystem.parse(open(args.norms, encoding="utf-8").read())
    gamma = [iologic.parse_formula(part) for part in args.gamma.split(",") if part.strip()]
    head = iologic.parse_formula(args.head)
    fn = iologic.modal_output if args.modal else iologic.out
    holds = fn(N, args.system, gamma, head)
    payload = {"holds": holds, "system": args.system, "modal": bool(args.modal),
               "gamma": [g.strip() for g in args.gamma.split(",") if g.strip()],
               "head": args.head}
    _emit(args, payload,
          [f"{args.head} is {'in' if holds else 'not in'} the"
           f"{' aggregative' if args.modal else ''} output of system {args.system}"])
    return 0 if holds else 1


def _cmd_slanted(args) -> int:
    S = _load_subalg(args)
    sa = slanted.build_slanted(S)
    ineq = slanted.parse_inequality(args.ineq)
    ok, witness = slanted.valid(sa, ineq, neg_mode=args.neg_mode)
    labels = None
    if witness is not None:
        labels = {k: S.poset.label(v) for k, v in witness.items()}
    payload = {"valid": ok, "witness": witness, "witness_labels": labels}
    _emit(args, payload,
          [f"{ineq}: {'valid' if ok else 'invalid'}"
           + (f" (witness {labels})" if labels else "")])
    return 0 if ok else 1


def _cmd_completion(args) -> int:
    obj = _load_json(args.poset)
    p, _neg = poset_from_json(obj)
    c = dm_completion(p)
    payload = lattice_to_json(c.delta)
    payload["embed"] = list(c.embed)
    _emit(args, payload,
          [f"completion has {c.delta.n} elements",
           "embed: " + " ".join(map(str, c.embed))])
    return 0


_REL_CONDS = {
    "reflexive": RelCondition.REFLEXIVE,
    "transitive": RelCondition.TRANSITIVE,
    "dense": RelCondition.DENSE,
    "ct": RelCondition.CT_REL,
    "s9fwd": RelCondition.S9_FWD_REL,
    "s9bwd": RelCondition.S9_BWD_REL,
    "sl1": RelCondition.SL1_REL,
    "sl2": RelCondition.SL2_REL,
    "proper": RelCondition.PROPER_REL,
}


def _cmd_dual(args) -> int:
    S = _load_subalg(args)
    builder = (build_space_primefilters if args.construction == "primefilters"
               else build_space_jirr)
    sp = builder(S)
    payload = sp.to_json()
    lines = [f"points: {', '.join(sp.labels)}",
             "R: " + " ".join(map(str, sp.rel_pairs()))]
    ok = True
    if args.check:
        results = {}
        for part in args.check.split(","):
            key = part.strip().lower()
            if not key:
                continue
            if key not in _REL_CONDS:
                raise SubnormError(f"unknown condition {key!r}; known: "
                                   + ", ".join(sorted(_REL_CONDS)))
            holds, witness = check_relational(sp, _REL_CONDS[key])
            ok &= holds
            results[key] = {"holds": holds,
                            "witness": list(witness) if witness is not None else None}
            lines.append(f"{key}: {'holds' if holds else 'fails'}"
                         + (f" (witness {witness})" if witness else ""))
        payload["checks"] = results
    _emit(args, payload, lines)
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    if args.replay:
        verdict = replay_counterexample(_load_json(args.replay))
        _emit(args, verdict, [f"{verdict['check']}: {verdict['status']}"])
        return 0 if verdict["status"] == "pass" else 1
    carriers = None
    if args.carriers:
        carriers = tuple(c.strip() for c in args.carriers.split(",") if c.strip())
    base = GenConfig()
    cfg = GenConfig(
        carriers=carriers or base.carriers,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        max_n=args.max_n,
    )
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        for name in checks:
            if name not in CHECKS_BY_NAME:
                raise SubnormError(f"unknown check {name!r}")
    report = run_suite(cfg, check_names=checks)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    summary = report["summary"]
    lines = [f"instances: {summary['instances']}",
             f"checks: {summary['checks_run']}",
             f"counterexamples: {summary['counterexamples']}"]
    for name, st in report["checks"].items():
        verdict = "pass" if not st["counterexample_count"] else "FAIL"
        if st["tested"] == 0:
            verdict = "NO COVERAGE"
        lines.append(f"  {name}: {verdict} ({st['tested']} tested, {st['skips']} skipped)")
    if summary["coverage_gaps"]:
        lines.append("coverage gaps: " + ", ".join(summary["coverage_gaps"]))
    _emit(args, report, lines)
    return exit_code_for(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subnorm",
        description="Finite-model engine for conditional-norm reasoning "
                    "over ordered algebras with a subordination relation.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output rendering (identical verdicts)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_opts(p):
        p.add_argument("--input", help="subordination JSON file")
        p.add_argument("--algebra", help="algebra JSON file")
        p.add_argument("--prec", help="JSON file with relation pairs")

    p = sub.add_parser("check", help="evaluate relation properties")
    add_input_opts(p)
    p.add_argument("--props", help="comma-separated property names (SI,WO,...)")
    p.add_argument("--classify", action="store_true",
                   help="also report the named classes that hold")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("close", help="close the relation under Horn rules")
    add_input_opts(p)
    p.add_argument("--rules", help="comma-separated rule names (TOP,SI,WO,...)")
    p.add_argument("--system", type=int, choices=(1, 2, 3, 4),
                   help="standard rule system")
    p.set_defaults(fn=_cmd_close)

    p = sub.add_parser("derive", help="norm derivability in a closure system")
    p.add_argument("--system", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--norms", required=True, help="norm file")
    p.add_argument("--query", required=True, help='query norm "body |~ head"')
    p.set_defaults(fn=_cmd_derive)

    p = sub.add_parser("out", help="output-operator membership")
    p.add_argument("--system", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--norms", required=True)
    p.add_argument("--gamma", required=True, help='comma-separated input formulas')
    p.add_argument("--head", required=True, help="candidate output formula")
    p.add_argument("--modal", action="store_true",
                   help="aggregative variant: meet the whole input first")
    p.set_defaults(fn=_cmd_out)

    p = sub.add_parser("slanted", help="modal-inequality validity")
    add_input_opts(p)
    p.add_argument("--ineq", required=True, help='inequality "<>p <= p"')
    p.add_argument("--neg-mode", choices=("sigma", "pi"), default="sigma",
                   help="which lifting interprets ~ inside terms")
    p.set_defaults(fn=_cmd_slanted)

    p = sub.add_parser("completion", help="canonical completion of a poset")
    p.add_argument("--poset", required=True, help="poset/algebra JSON file")
    p.set_defaults(fn=_cmd_completion)

    p = sub.add_parser("dual", help="dual relational space")
    add_input_opts(p)
    p.add_argument("--construction", choices=("jirr", "primefilters"),
                   default="jirr")
    p.add_argument("--check", help="comma-separated relational conditions "
                                   "(reflexive,transitive,dense,ct,s9fwd,"
                                   "s9bwd,sl1,sl2,proper)")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--corpus", default="default",
                   help="corpus name (only 'default' is built in)")
    p.add_argument("--carriers", help="override corpus carriers (comma-separated)")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--max-n", type=int, default=4,
                   help="largest carrier enumerated exhaustively")
    p.add_argument("--samples", type=int, default=120)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--checks", help="run only these checks (comma-separated)")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--replay", help="re-evaluate a stored counterexample JSON")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "corpus", "default") != "default":
        print(f"unknown corpus {args.corpus!r}", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except SubnormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Commands: theta-table, thetas, present, rewrite, eval, verify, man.
Text output is deterministic; JSON output carries a "schema" tag and
validates against the documents under schemas/.  Exit status: 0 success,
1 verification failure, 2 parse error, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys

from .errors import PreconditionError, SpecParseError
from .exprs import GRAMMAR_DOC, ExprContext, as_fraction, describe_value, eval_expression
from .flags import Flag, aug, coaug, parse_flag
from .groups import parse_character, parse_group
from .symalg import presentation, to_b_generators, to_c_generators
from .verify import default_config, load_config, run_suite

_ASSIGN_RE = re.compile(r"^e\[(?P<char>[^\]]*)\]$")


def _resolve_context(args):
    group = parse_group(args.group)
    if args.flag and args.truncate is not None:
        raise SpecParseError("pass either --flag or --truncate, not both")
    if args.flag:
        flag = parse_flag(group, args.flag)
    else:
        n = args.truncate if args.truncate is not None else group.order
        if n < 1:
            raise SpecParseError("--truncate must be at least 1")
        flag = Flag.cyclic(group, n)
    return group, flag


def _load_assignment(path: str, flag: Flag) -> dict:
    """Assignment file: lines "e[(r1,...)] = <coefficient expression>"."""
    ctx = ExprContext(flag, -2, "MUP")
    asg: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise SpecParseError(f"cannot read assignment file: {exc}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, sep, rhs = line.partition("=")
        if not sep:
            raise SpecParseError(f"{path}:{lineno}: expected 'e[(...)] = value'")
        m = _ASSIGN_RE.match(lhs.strip())
        if not m:
            raise SpecParseError(f"{path}:{lineno}: left side must be an Euler symbol e[(...)]")
        gamma = parse_character(flag.group, m.group("char"))
        if gamma.is_trivial:
            raise SpecParseError(f"{path}:{lineno}: the trivial character has no Euler symbol")
        outcome = eval_expression(rhs.strip(), ctx)
        if outcome["kind"] != "value" or outcome["value"].kind != "coeff":
            raise SpecParseError(
                f"{path}:{lineno}: the assigned value must be a coefficient polynomial"
            )
        asg[gamma] = outcome["value"].payload
    return asg


def _maybe_assignment(args, flag: Flag) -> dict | None:
    if getattr(args, "specialize", None):
        return _load_assignment(args.specialize, flag)
    return None


def _emit(args, doc: dict, text_lines: list) -> int:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(text_lines))
    return 0


def _context_header(group, flag) -> list:
    return [
        f"group: {group}",
        f"flag: {flag}",
        "degree convention: homological",
    ]


def _shown(obj, asg):
    return str(obj.specialize(asg)) if asg else str(obj)


def _shown_json(obj, asg):
    return (obj.specialize(asg) if asg else obj).to_json()


def cmd_theta_table(args) -> int:
    group, flag = _resolve_context(args)
    asg = _maybe_assignment(args, flag)
    n = flag.length
    chars = group.characters()
    rows = [(al, [aug(flag, al, i) for i in range(n + 1)]) for al in chars]
    coaugs = [(al, coaug(flag, al)) for al in chars if flag.first_index(al) is not None]
    lines = _context_header(group, flag)
    lines.append(f"theta(alpha)(y(V_i)) for i = 0..{n}:")
    for al, vals in rows:
        lines.append(f"{al} | " + " | ".join(_shown(v, asg) for v in vals))
    lines.append("coaugmentation classes:")
    for al, cls in coaugs:
        lines.append(f"theta[{al}] = {_shown(cls, asg)}")
    doc = {
        "schema": "equibord/theta-table/v1",
        "group": str(group),
        "flag": [str(c) for c in flag.chars],
        "degree_convention": "homological",
        "augmentations": [
            {"alpha": str(al), "values": [_shown_json(v, asg) for v in vals]}
            for al, vals in rows
        ],
        "coaugmentations": [
            {"alpha": str(al), "class": _shown_json(cls, asg)} for al, cls in coaugs
        ],
    }
    return _emit(args, doc, lines)


def cmd_thetas(args) -> int:
    group, flag = _resolve_context(args)
    asg = _maybe_assignment(args, flag)
    coaugs = [
        (al, coaug(flag, al))
        for al in group.characters()
        if flag.first_index(al) is not None
    ]
    lines = _context_header(group, flag)
    for al, cls in coaugs:
        lines.append(f"theta[{al}] = {_shown(cls, asg)}")
    doc = {
        "schema": "equibord/thetas/v1",
        "group": str(group),
        "flag": [str(c) for c in flag.chars],
        "degree_convention": "homological",
        "coaugmentations": [
            {"alpha": str(al), "class": _shown_json(cls, asg)} for al, cls in coaugs
        ],
    }
    return _emit(args, doc, lines)


def cmd_present(args) -> int:
    group, flag = _resolve_context(args)
    asg = _maybe_assignment(args, flag)
    pres = presentation(args.theory, flag, args.shift, assignment=asg)
    lines = [
        f"theory: {pres['theory']}",
        f"group: {pres['group']}",
        f"flag: {','.join(pres['flag'])}",
        f"degree convention: {pres['degree_convention']}",
        f"shift: {pres['shift']}",
        "generators:",
    ]
    for g in pres["generators"]:
        lines.append(f"  {g['symbol']} (degree {g['degree']})")
    lines.append("inverted:")
    if pres["inverted"]:
        for inv in pres["inverted"]:
            lines.append(f"  {inv['symbol']} (degree {inv['degree']}) = {inv['expansion']}")
    else:
        lines.append("  (none)")
    doc = {"schema": "equibord/present/v1", **pres}
    return _emit(args, doc, lines)


def cmd_rewrite(args) -> int:
    group, flag = _resolve_context(args)
    if args.theory == "MU":
        shift = -2 if args.shift is None else args.shift
        mode = "MUP"
    else:
        shift = 2 if args.shift is None else args.shift
        if shift != 2:
            raise SpecParseError("theory mU fixes shift +2")
        mode = "mUP"
    asg = _maybe_assignment(args, flag)
    ctx = ExprContext(flag, shift, mode)
    outcome = eval_expression(args.expr, ctx)
    if outcome["kind"] != "value":
        raise SpecParseError("rewrite expects a fraction, not a comparison")
    frac = as_fraction(outcome["value"], ctx)
    result = to_b_generators(frac) if shift == -2 else to_c_generators(frac)
    lines = [str(result)]
    doc = {
        "schema": "equibord/rewrite/v1",
        "theory": args.theory,
        "group": str(group),
        "flag": [str(c) for c in flag.chars],
        "shift": shift,
        "input": args.expr,
        "result": {"text": str(result), **result.to_json()},
    }
    if asg:
        sp = result.specialize(asg)
        lines.append(f"specialized: {sp}")
        doc["specialized"] = {"text": str(sp), **sp.to_json()}
    return _emit(args, doc, lines)


_THEORY_CONTEXT = {
    "MUP": (-2, "MUP"),
    "MU": (-2, "MUP"),
    "mUP": (2, "mUP"),
    "mU": (2, "mUP"),
}


def cmd_eval(args) -> int:
    group, flag = _resolve_context(args)
    asg = _maybe_assignment(args, flag)
    default_shift, mode = _THEORY_CONTEXT[args.theory]
    shift = default_shift if args.shift is None else args.shift
    ctx = ExprContext(flag, shift, mode)
    outcome = eval_expression(args.expr, ctx)
    doc = {
        "schema": "equibord/eval/v1",
        "group": str(group),
        "flag": [str(c) for c in flag.chars],
        "shift": shift,
        "mode": mode,
        "kind": outcome["kind"],
        "expr": args.expr,
    }
    if outcome["kind"] == "comparison":
        lhs = describe_value(outcome["lhs"], asg)
        rhs = describe_value(outcome["rhs"], asg)
        verdict = "equal" if outcome["equal"] else "not equal"
        lines = [f"lhs: {lhs['text']}"]
        if "specialized_text" in lhs:
            lines.append(f"lhs specialized: {lhs['specialized_text']}")
        lines.append(f"rhs: {rhs['text']}")
        if "specialized_text" in rhs:
            lines.append(f"rhs specialized: {rhs['specialized_text']}")
        lines.append(f"verdict: {verdict}")
        doc.update({"lhs": lhs, "rhs": rhs, "equal": outcome["equal"]})
    else:
        val = describe_value(outcome["value"], asg)
        lines = [f"kind: {val['kind']}", f"value: {val['text']}"]
        if "specialized_text" in val:
            lines.append(f"specialized: {val['specialized_text']}")
        doc["value"] = val
    return _emit(args, doc, lines)


def cmd_verify(args) -> int:
    cfg = load_config(args.config) if args.config else default_config()
    if args.seed is not None:
        cfg = dataclasses.replace(cfg, rng_seed=args.seed)
    report = run_suite(cfg)
    if args.format == "json":
        print(json.dumps({"schema": "equibord/verify/v1", **report.to_json()}, indent=2))
    else:
        lines = []
        for c in report.checks:
            lines.append(f"{c.check}: {c.status} ({c.cases} cases, {c.millis} ms)")
            if c.counterexample is not None:
                lines.append(f"  counterexample: {json.dumps(c.counterexample)}")
        lines.append(f"suite: {report.status}")
        print("\n".join(lines))
    return 0 if report.status == "pass" else 1


def cmd_man(args) -> int:
    parser, subparsers = build_parser(return_subparsers=True)
    lines = [
        "EQUIBORD(1)",
        "",
        "NAME",
        "    equibord - exact graded-ring computations over character flags:",
        "    augmentation tables, coaugmentation classes, localized symmetric",
        "    algebras, degree-zero generator presentations, and identity sweeps",
        "",
        "SYNOPSIS",
        "    equibord <command> [options]",
        "",
        "COMMANDS",
    ]
    for name, sub in subparsers.choices.items():
        lines.append(f"  {name}")
        usage = sub.format_usage().replace("usage: ", "    ").rstrip()
        lines.append(usage)
        if sub.description:
            lines.append(f"      {sub.description}")
        lines.append("")
    lines += [
        "INPUT GRAMMARS",
        '    group          := "1" | "Z<n>" ( "x" "Z<n>" )*',
        '    character      := "(" r1 ( "," rk )* ")"   one residue per cyclic factor',
        '    representation := "0" | character ( "+" character )*',
        '    flag           := character ( "," character )*   first entry trivial',
        "",
        "EXPRESSION GRAMMAR",
    ]
    lines += ["    " + ln if ln else "" for ln in GRAMMAR_DOC.strip().splitlines()]
    lines += [
        "",
        "FILES",
        '    --specialize FILE  lines "e[(r1,...)] = <coefficient expression>"',
        '    --config FILE      lines "key = value"; keys: groups (comma-joined),',
        "                       max_flag_len, max_dimension, max_index,",
        "                       random_cases, rng_seed",
        "",
        "EXIT STATUS",
        "    0  success (including eval comparisons that print 'not equal')",
        "    1  verification suite reported a failing check",
        "    2  parse error in arguments, specs, expressions, or files",
        "    3  precondition violation (e.g. a character missing from the flag)",
    ]
    print("\n".join(lines))
    return 0


def _add_context_args(p, with_specialize=True):
    p.add_argument("--group", required=True, help='group spec, e.g. "1", "Z2", "Z2xZ4"')
    p.add_argument("--flag", help='flag spec, e.g. "(0),(1),(0),(1)"')
    p.add_argument("--truncate", type=int, help="length of the default cyclic flag")
    p.add_argument("--format", choices=("text", "json"), default="text")
    if with_specialize:
        p.add_argument(
            "--specialize",
            metavar="FILE",
            help="Euler-symbol assignment file applied to displayed results only",
        )


def build_parser(return_subparsers: bool = False):
    parser = argparse.ArgumentParser(
        prog="equibord",
        description="Exact graded-ring engine over character flags.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "theta-table",
        description="Print the augmentation matrix theta(alpha)(y(V_i)) and the coaugmentation classes.",
    )
    _add_context_args(p)
    p.set_defaults(func=cmd_theta_table)

    p = sub.add_parser("thetas", description="Print the coaugmentation classes of the flag.")
    _add_context_args(p)
    p.set_defaults(func=cmd_thetas)

    p = sub.add_parser(
        "present",
        description="Print the generator/inverted-class presentation of a theory over the flag.",
    )
    _add_context_args(p)
    p.add_argument("--theory", required=True, choices=("MUP", "mUP", "MU", "mU"))
    p.add_argument("--shift", type=int, choices=(-2, 2), help="shift route (default: by theory)")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser(
        "rewrite",
        description="Rewrite a dimension-0 fraction in the degree-zero generators.",
    )
    _add_context_args(p)
    p.add_argument("--theory", required=True, choices=("MU", "mU"))
    p.add_argument("--shift", type=int, choices=(-2, 2))
    p.add_argument("--expr", required=True, help="fraction over beta/theta symbols")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser(
        "eval",
        description="Evaluate an expression or decide an == comparison exactly.",
    )
    _add_context_args(p)
    p.add_argument("--theory", choices=("MUP", "mUP", "MU", "mU"), default="MUP")
    p.add_argument("--shift", type=int, choices=(-2, 2))
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", description="Run the identity sweeps and report.")
    p.add_argument("--config", metavar="FILE")
    p.add_argument("--seed", type=int, help="override the configured rng seed")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("man", description="Print the generated manual page.")
    p.set_defaults(func=cmd_man)

    if return_subparsers:
        return parser, sub
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

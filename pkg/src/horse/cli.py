"""Command-line front end: ``horse <command> [options]``.

Every command writes an envelope of metadata plus rows, as CSV (metadata on
leading ``#`` lines) or JSON. Exit status is 0 on success, 2 for bad
arguments or out-of-domain values, 1 for anything else.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import shlex
import sys
from pathlib import Path

from . import __version__
from .game import ONE, TWO, GameConfig, game_win_prob_exact, game_win_prob_mc
from .model import (
    DomainError,
    Equal,
    Free,
    LinearDiff,
    Ratio,
    RuleSet,
    resolve,
    scenario_probs,
    score_prob,
)
from .optimize import numeric_optimal_p1, optimal_p1, optimum_formula
from .simulate import RNG_ALGORITHM, turn_score_estimate

PROG = "horse"

# Lines from the unequal-players heatmap, with the matchup each one fixes.
OVERLAY_LINES = [
    ("p2=p1+0.2", LinearDiff(-0.2)),
    ("p2=p1/0.8", Ratio(0.8)),
    ("p2=p1", Equal()),
    ("p2=p1/1.1", Ratio(1.1)),
    ("p2=p1-0.2", LinearDiff(0.2)),
]

# (case, condition, A, B, example parameter label, matchup at that parameter)
TABLE_ROWS = [
    ("p2=p1", "", "p1/(1+p1)", "p1*(1-p1)", "", Equal()),
    ("p2=p1-d", "d>=0", "(p1-p1^2+p1*d)/(1-p1^2+p1*d)", "(1+d)*p1-p1^2", "d=0.2", LinearDiff(0.2)),
    ("p2=p1-d", "d<0", "(p1-p1^2+p1*d)/(1-p1^2+p1*d)", "(1+d)*p1-p1^2", "d=-0.2", LinearDiff(-0.2)),
    ("p2=p1/r", "r>=2", "(p1-p1^2/r)/(1-p1^2/r)", "p1-p1^2/r", "r=2.5", Ratio(2.5)),
    ("p2=p1/r", "1<=r<2", "(p1-p1^2/r)/(1-p1^2/r)", "p1-p1^2/r", "r=1.1", Ratio(1.1)),
    ("p2=p1/r", "0<r<1", "(p1-p1^2/r)/(1-p1^2/r)", "p1-p1^2/r", "r=0.8", Ratio(0.8)),
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- output ------------------------------------------------------------------

def _fmt(value, precision):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{precision}f}"
    return str(value)


def _csv_block(columns, rows, precision):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row[c], precision) for c in columns])
    return buf.getvalue()


def _metadata(argv, seed=None):
    meta = {"tool": PROG, "version": __version__, "command": shlex.join([PROG, *argv])}
    if seed is not None:
        meta["seed"] = seed
        meta["rng"] = RNG_ALGORITHM
    return meta


def _render(args, tables, seed=None):
    """Render ``tables`` (name -> (columns, rows)) in the requested format.

    Returns a list of ``(suffix, text)``; the first entry is the main output
    and any others are companion CSV files.
    """
    meta = _metadata(args.argv, seed)
    if args.format == "json":
        payload = {name: rows for name, (_, rows) in tables.items()}
        if len(payload) == 1:
            payload = next(iter(payload.values()))
        doc = {"format": "json", "metadata": meta, "payload": payload}
        return [("", json.dumps(doc, indent=2) + "\n")]
    header = "".join(f"# {k}: {v}\n" for k, v in meta.items())
    out = []
    for i, (name, (columns, rows)) in enumerate(tables.items()):
        suffix = "" if i == 0 else f"_{name}"
        out.append((suffix, header + _csv_block(columns, rows, args.precision)))
    return out


def _write(args, tables, seed=None):
    outputs = _render(args, tables, seed)
    if args.out is None:
        sys.stdout.write("\n".join(text for _, text in outputs))
        return
    base = Path(args.out)
    for suffix, text in outputs:
        path = base.with_name(base.stem + suffix + base.suffix) if suffix else base
        with open(path, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)


# -- argument helpers ----------------------------------------------------------

def _rule_list(args):
    if args.rules is None:
        return [RuleSet.TRADITIONAL, RuleSet.POPS]
    return [RuleSet.parse(args.rules)]


def _matchup(args):
    if args.p is not None:
        if args.p1 is not None or args.p2 is not None:
            raise UsageError("--p cannot be combined with --p1/--p2")
        return Equal(args.p)
    if args.d is not None or args.r is not None:
        if args.d is not None and args.r is not None:
            raise UsageError("give at most one of --d and --r")
        if args.p1 is None or args.p2 is not None:
            raise UsageError("--d/--r need --p1 and no --p2")
        return LinearDiff(args.d, args.p1) if args.d is not None else Ratio(args.r, args.p1)
    if args.p1 is None or args.p2 is None:
        raise UsageError("give --p, or --p1 and --p2, or --p1 with --d or --r")
    return Free(args.p1, args.p2)


def _family(args):
    if args.case == "equal":
        return Equal()
    if args.case == "diff":
        if args.d is None:
            raise UsageError("--case diff needs --d")
        return LinearDiff(args.d)
    if args.r is None:
        raise UsageError("--case ratio needs --r")
    return Ratio(args.r)


def _grid(step):
    if not 0.0 < step < 1.0:
        raise DomainError(f"--step must lie in (0, 1), got {step!r}")
    points = []
    k = 1
    while k * step < 1.0 - 1e-12:
        points.append(round(k * step, 12))
        k += 1
    return points


def _opt_fields(prefix, opt):
    # a supremum is never serialised as a number in the p1 column
    if opt.is_supremum:
        return {f"{prefix}_kind": opt.kind.value, f"{prefix}_p1": f"sup->{opt.argmax:g}",
                f"{prefix}_value": None, f"{prefix}_limit_value": opt.value}
    return {f"{prefix}_kind": opt.kind.value, f"{prefix}_p1": opt.argmax,
            f"{prefix}_value": opt.value, f"{prefix}_limit_value": None}


# -- commands ------------------------------------------------------------------

def cmd_score(args):
    p1, p2 = resolve(_matchup(args))
    s = scenario_probs(p1, p2)
    rows = [{"rules": rules.value, "p1": float(p1), "p2": float(p2),
             "score": score_prob(rules, p1, p2), "s1": s.s1, "s2": s.s2, "s3": s.s3}
            for rules in _rule_list(args)]
    _write(args, {"score": (list(rows[0]), rows)})


def cmd_curve(args):
    rows = [{"p": p, "A_tr": score_prob(RuleSet.TRADITIONAL, p, p),
             "B_pr": score_prob(RuleSet.POPS, p, p)} for p in _grid(args.step)]
    _write(args, {"curve": (["p", "A_tr", "B_pr"], rows)})


def overlay_rows():
    rows = []
    for label, case in OVERLAY_LINES:
        param = "" if isinstance(case, Equal) else (
            f"d={case.d:g}" if isinstance(case, LinearDiff) else f"r={case.r:g}")
        row = {"line": label, "param": param}
        row.update(_opt_fields("tr", optimal_p1(RuleSet.TRADITIONAL, case)))
        row.update(_opt_fields("pr", optimal_p1(RuleSet.POPS, case)))
        rows.append(row)
    return rows


def cmd_heatmap(args):
    grid = _grid(args.step)
    rows = [{"p1": p1, "p2": p2, "A_tr": score_prob(RuleSet.TRADITIONAL, p1, p2),
             "B_pr": score_prob(RuleSet.POPS, p1, p2)} for p1 in grid for p2 in grid]
    tables = {"heatmap": (["p1", "p2", "A_tr", "B_pr"], rows)}
    if args.overlays:
        ov = overlay_rows()
        tables["overlays"] = (list(ov[0]), ov)
    _write(args, tables)


def table_rows():
    rows = []
    for case_label, cond, a_form, b_form, example, case in TABLE_ROWS:
        tr = optimal_p1(RuleSet.TRADITIONAL, case)
        pr = optimal_p1(RuleSet.POPS, case)
        row = {"case": case_label, "condition": cond,
               "A": a_form, "tr_opt": optimum_formula(RuleSet.TRADITIONAL, case),
               "B": b_form, "pr_opt": optimum_formula(RuleSet.POPS, case),
               "example": example}
        row.update(_opt_fields("tr", tr))
        row.update(_opt_fields("pr", pr))
        rows.append(row)
    return rows


def cmd_table(args):
    rows = table_rows()
    _write(args, {"table": (list(rows[0]), rows)})


def cmd_optimize(args):
    case = _family(args)
    solver = numeric_optimal_p1 if args.method == "numeric" else optimal_p1
    param = {"equal": "", "diff": f"d={args.d!r}", "ratio": f"r={args.r!r}"}[args.case]
    rows = []
    for rules in _rule_list(args):
        opt = solver(rules, case)
        rows.append({"case": args.case, "param": param, "rules": rules.value,
                     "method": args.method, **_opt_fields("opt", opt)})
    _write(args, {"optimize": (list(rows[0]), rows)})


def cmd_simulate(args):
    p1, p2 = resolve(_matchup(args))
    if args.n < 1:
        raise DomainError("--n must be at least 1")
    rows = []
    for rules in _rule_list(args):
        est, se = turn_score_estimate(rules, p1, p2, args.n, args.seed)
        exact = score_prob(rules, p1, p2)
        # z against the closed form's own binomial spread, which is never 0
        z = (est - exact) / (exact * (1.0 - exact) / args.n) ** 0.5
        rows.append({"rules": rules.value, "p1": float(p1), "p2": float(p2), "n": args.n,
                     "estimate": est, "std_error": se, "closed_form": exact, "z": z})
    _write(args, {"simulate": (list(rows[0]), rows)}, seed=args.seed)


def cmd_game(args):
    p1, p2 = resolve(_matchup(args))
    q1 = p1 if args.q1 is None else args.q1
    q2 = p2 if args.q2 is None else args.q2
    cfg = GameConfig(RuleSet.parse(args.rules or "tr"), (p1, p2), (q2, q1),
                     letters_to_lose=args.letters,
                     first_shooter=ONE if args.first == "one" else TWO)
    row = {"rules": cfg.rules.value, "mode": args.mode, "letters": cfg.letters_to_lose,
           "first": args.first}
    if args.mode == "exact":
        row.update(p_one_wins=game_win_prob_exact(cfg), std_error=None, n=None)
        _write(args, {"game": (list(row), [row])})
    else:
        if args.n < 1:
            raise DomainError("--n must be at least 1")
        est, se = game_win_prob_mc(cfg, args.n, args.seed)
        row.update(p_one_wins=est, std_error=se, n=args.n)
        _write(args, {"game": (list(row), [row])}, seed=args.seed)


# -- parser --------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write to this path instead of stdout")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--precision", type=int, default=6, help="CSV decimal places")

    rules = argparse.ArgumentParser(add_help=False)
    rules.add_argument("--rules", choices=["tr", "pr"], help="default: both")

    probs = argparse.ArgumentParser(add_help=False)
    probs.add_argument("--p", type=float, help="equal players")
    probs.add_argument("--p1", type=float)
    probs.add_argument("--p2", type=float)
    probs.add_argument("--d", type=float, help="p2 = p1 - d")
    probs.add_argument("--r", type=float, help="p2 = p1 / r")

    parser = _Parser(prog=PROG, description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("score", parents=[common, rules, probs],
                       help="scoring probability and scenario split for one turn")
    p.set_defaults(func=cmd_score)

    for name, func, helptext in [("curve", cmd_curve, "equal-player curves A(p), B(p)"),
                                 ("heatmap", cmd_heatmap, "A and B over a (p1, p2) grid")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--step", type=float, default=0.01)
        p.set_defaults(func=func)
        if name == "heatmap":
            p.add_argument("--overlays", action="store_true",
                           help="also emit the five reference lines and their optima")

    p = sub.add_parser("table", parents=[common], help="optimal p1 for every case")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("optimize", parents=[common, rules], help="optimal p1 for one case")
    p.add_argument("--case", choices=["equal", "diff", "ratio"], required=True)
    p.add_argument("--d", type=float)
    p.add_argument("--r", type=float)
    p.add_argument("--method", choices=["closed", "numeric"], default="closed")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("simulate", parents=[common, rules, probs],
                       help="Monte Carlo check of the scoring probability")
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("game", parents=[common, rules, probs],
                       help="probability Player One wins a full game")
    p.add_argument("--q1", type=float, help="Player One follow probability when Two shoots")
    p.add_argument("--q2", type=float, help="Player Two make probability when Two shoots")
    p.add_argument("--letters", type=int, default=5)
    p.add_argument("--first", choices=["one", "two"], default="one")
    p.add_argument("--mode", choices=["exact", "mc"], default="exact")
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_game)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        args.argv = argv
        args.func(args)
    except (UsageError, DomainError, OSError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"{PROG}: internal error: {exc!r}", file=sys.stderr)
        return 1
    return 0

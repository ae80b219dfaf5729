"""Batch command line: ``gjcluster <command> [options]``.

Exit status is 0 on success, 2 for usage errors and 1 when a computation
fails (the error class is printed on stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import blanks, cluster, general, oracle, penney, series_engine, symmetry
from .errors import GJError
from .exact import Polynomial, RationalFunction, Series
from .exact.expr import parse_value
from .words import Alphabet, format_word, parse_alphabet, parse_words


class UsageError(Exception):
    pass


# rendering ---------------------------------------------------------------

def _json_value(x):
    if isinstance(x, RationalFunction):
        return x.to_json()
    if isinstance(x, Polynomial):
        return {"polynomial": x.to_json(), "text": str(x)}
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Series):
        return [_json_value(c) for c in x]
    if isinstance(x, (list, tuple)):
        return [_json_value(c) for c in x]
    if isinstance(x, dict):
        return {str(k): _json_value(v) for k, v in x.items()}
    return x


def _text_value(x) -> str:
    if isinstance(x, (list, tuple)):
        return ", ".join(_text_value(c) for c in x)
    return str(x)


def emit(args, value, text: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(_json_value(value), sort_keys=True))
    else:
        print(text if text is not None else _text_value(value))


# argument helpers ----------------------------------------------------------

def _alphabet(args) -> Alphabet:
    if args.symbolic_d:
        return Alphabet.symbolic_size(args.symbolic_d)
    if not args.alphabet:
        raise UsageError("--alphabet (or --symbolic-d) is required")
    return parse_alphabet(args.alphabet)


def _concrete(args) -> Alphabet:
    a = _alphabet(args)
    if a.symbolic:
        raise UsageError("this command needs a concrete --alphabet")
    return a


def _bad(args, required: bool = True):
    text = args.bad
    if text is None:
        if required:
            raise UsageError("--bad is required")
        return []
    if text == "-":
        text = sys.stdin.read()
    return parse_words(text)


def _symmetry(args):
    return None if args.symmetry in (None, "none") else args.symmetry


def _probs(text: str) -> list:
    return [parse_value(p) for p in text.split(",")]


# commands ------------------------------------------------------------------

def cmd_avoid(args):
    a, B = _alphabet(args), _bad(args)
    if _symmetry(args):
        f = symmetry.sym_gj_avoid(a, B, _symmetry(args))
    else:
        f = cluster.gj_avoid(a, B)
    emit(args, f)


def cmd_count(args):
    a, B = _alphabet(args), _bad(args)
    if _symmetry(args):
        f = symmetry.sym_gj_count(a, B, _symmetry(args), args.t)
    else:
        f = cluster.gj_count(a, B, args.t)
    emit(args, f)


def cmd_detail(args):
    emit(args, cluster.gj_detail(_alphabet(args), _bad(args), args.t, letters=args.letter_weights))


def cmd_letters(args):
    emit(args, cluster.gj_letters(_concrete(args), _bad(args), args.mode, args.t))


def cmd_general(args):
    emit(args, general.gjnz_count(_alphabet(args), _bad(args), args.mode, args.t))


def cmd_runs(args):
    emit(args, general.runs_gf(_concrete(args), _bad(args, required=False), args.r))


def cmd_avg_runs(args):
    res = general.avg_runs(_concrete(args), _bad(args, required=False), args.order)
    emit(args, {"averages": res.averages, "estimate": res.estimate}, str(res))


def cmd_blanks_count(args):
    a = _concrete(args)
    emit(args, blanks.blanks_count(a, _bad(args), args.blank, args.markers, args.t))


def cmd_blanks_avoid(args):
    emit(args, blanks.blanks_avoid(_concrete(args), _bad(args), args.blank))


def _penney_args(args):
    if not args.letters or not args.words or not args.probs:
        raise UsageError("--letters, --words and --probs are required")
    return [x.strip() for x in args.letters.split(",")], parse_words(args.words), _probs(args.probs)


def cmd_penney(args):
    letters, words, probs = _penney_args(args)
    emit(args, penney.penney(letters, words, probs))


def cmd_penney_sim(args):
    letters, words, probs = _penney_args(args)
    inst = penney.PenneyInstance(letters, words, probs)
    emit(args, penney.simulate_games(inst, args.games, args.seed))


def cmd_best_play(args):
    letters, words, probs = _penney_args(args)
    move = penney.best_last_play(letters, words, probs, args.length)
    emit(args, {"word": format_word(move.word), "probability": move.probability}, str(move))


def cmd_series(args):
    marking = cluster.Marking(args.mode, args.t)
    job = series_engine.SeriesJob(_alphabet(args), _bad(args, required=False), marking, args.order, _symmetry(args))
    emit(args, series_engine.gj_series(job))


def cmd_sqfree(args):
    sym = "auto" if args.symmetry is None else _symmetry(args)
    emit(args, series_engine.squarefree_series(args.memo, args.dim, args.nuterms, sym))


def cmd_growth(args):
    sym = "auto" if args.symmetry is None else _symmetry(args)
    g = series_engine.growth_bounds(args.memo, args.dim, Fraction(args.tol), args.nuterms, sym)
    emit(args, {"upper_bound": g.upper_bound, "lower_bound": g.lower_bound,
                "root": [str(g.root[0]), str(g.root[1])], "ratios": [[n, r] for n, r in g.ratios]}, str(g))


def cmd_oracle(args):
    if args.squarefree:
        letters = series_engine.squarefree_letters(args.dim) if args.alphabet is None else _concrete(args).letters
        counts = oracle.dfs_avoid_count(letters, n_max=args.order, squarefree=True, max_half=args.memo)
        emit(args, counts)
        return
    a, B = _concrete(args), _bad(args, required=False)
    if args.dfs:
        emit(args, oracle.dfs_avoid_count(a, B, args.order))
        return
    table = oracle.brute_table(a, B, args.order, budget=args.budget)
    totals = table.by_total()
    lines = [f"n={n}: " + ", ".join(f"m={m}:{c}" for m, c in sorted(totals[n].items())) for n in sorted(totals)]
    emit(args, {n: dict(totals[n]) for n in totals}, "\n".join(lines))


def cmd_phi_r(args):
    emit(args, oracle.phi_R(_concrete(args), args.R, args.x))


COMMANDS = {
    "avoid": (cmd_avoid, "generating function of words avoiding the bad words"),
    "count": (cmd_count, "F(s,t) with t marking every bad-word occurrence (reduced sets)"),
    "detail": (cmd_detail, "one marker t[b] per bad word"),
    "letters": (cmd_letters, "letter-weighted generating function in x[v]"),
    "general": (cmd_general, "F(s,t) for arbitrary bad sets, nesting included"),
    "runs": (cmd_runs, "R(s,r): r counts maximal runs"),
    "avg-runs": (cmd_avg_runs, "exact average number of runs up to --order"),
    "blanks-count": (cmd_blanks_count, "patterns with blanks, t marking matches"),
    "blanks-avoid": (cmd_blanks_avoid, "words matching no pattern"),
    "penney": (cmd_penney, "exact Penney-ante win probabilities"),
    "penney-sim": (cmd_penney_sim, "seeded simulation of Penney-ante games"),
    "best-play": (cmd_best_play, "best counter-move for the last player"),
    "series": (cmd_series, "series expansion without solving the system"),
    "sqfree": (cmd_sqfree, "counts of words avoiding squares uu with |u| <= MEMO"),
    "growth": (cmd_growth, "growth-rate bound of the memory-MEMO relaxation"),
    "oracle": (cmd_oracle, "brute-force occurrence tables and backtracking counts"),
    "phi-r": (cmd_phi_r, "full factor-counting generating function (tiny cases)"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="letters, e.g. A..Z, H,T or {E,S,X}")
    common.add_argument("--bad", help='bracketed words, e.g. "[P,I,P,I],[C,A,C,A]"; "-" reads stdin')
    common.add_argument("--symbolic-d", nargs="?", const="d", default=None, metavar="SYMBOL",
                        help="treat the alphabet size as a symbol (default d)")
    common.add_argument("--symmetry", choices=["sym", "signed", "none"], default=None)
    common.add_argument("--order", type=int, default=10, help="series order / largest length")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="gjcluster", description="Cluster-method word enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = {}
    for name, (_, help_text) in COMMANDS.items():
        p[name] = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    for name in ("count", "detail", "letters", "general", "blanks-count", "series"):
        p[name].add_argument("--t", default="t", help="name of the marking variable")
    p["detail"].add_argument("--letter-weights", action="store_true", help="also weight letters by x[v]")
    p["letters"].add_argument("--mode", choices=["avoid", "uniform", "perword"], default="avoid")
    p["general"].add_argument("--mode", choices=["uniform", "perword"], default="uniform")
    p["series"].add_argument("--mode", choices=["avoid", "uniform", "perword"], default="avoid")
    p["runs"].add_argument("--r", default="r", help="name of the run variable")
    for name in ("blanks-count", "blanks-avoid"):
        p[name].add_argument("--blank", default="B", help="the blank token")
    p["blanks-count"].add_argument("--markers", choices=["uniform", "perpattern"], default="uniform")
    for name in ("penney", "penney-sim", "best-play"):
        p[name].add_argument("--letters", help="die faces, e.g. H,T")
        p[name].add_argument("--words", help='player words, e.g. "[H,H,T],[H,T,T]"')
        p[name].add_argument("--probs", help="face probabilities, e.g. 1/2,1/2 or p,1-p")
    p["penney-sim"].add_argument("--games", type=int, default=1000)
    p["best-play"].add_argument("--length", type=int, default=None)
    for name in ("sqfree", "growth"):
        p[name].add_argument("--memo", type=int, required=True)
        p[name].add_argument("--dim", type=int, default=3)
    p["sqfree"].add_argument("--nuterms", type=int, default=20)
    p["growth"].add_argument("--nuterms", type=int, default=None)
    p["growth"].add_argument("--tol", default="1/1000000000", help="width of the root bracket")
    p["oracle"].add_argument("--dfs", action="store_true", help="backtracking avoidance counts")
    p["oracle"].add_argument("--squarefree", action="store_true", help="square-free counts (with --dim)")
    p["oracle"].add_argument("--dim", type=int, default=3)
    p["oracle"].add_argument("--memo", type=int, default=None, help="only ban uu with |u| <= MEMO")
    p["oracle"].add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p["phi-r"].add_argument("--R", type=int, required=True)
    p["phi-r"].add_argument("--x", default="x")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        handler(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GJError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())

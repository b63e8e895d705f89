"""Command-line front end.

Subcommands: analyze (verdict report, single pair or batch file), twist-check
(the degree-2 twist identity on one pair), eval (homology class and degree-2
invariant of one word), selftest (seeded property suites).

Exit codes: 0 success, 1 parse/input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ell import ell
from .homology import abelianize, basis_label
from .obstruction import analyze, twist_consistency
from .selftest import run_selftest
from .words import WordError, format_word, parse_word


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curveobs",
        description=(
            "Certify positive geometric intersection of two curves on a "
            "genus-g surface with one boundary, from free-group words over "
            "the symplectic generators x1 y1 ... xg yg."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full obstruction report for a pair")
    p_an.add_argument("--genus", type=int,
                      help="required unless --pairs carries per-line genus")
    p_an.add_argument("--a", dest="word_a", help="first word")
    p_an.add_argument("--b", dest="word_b", help="second word")
    p_an.add_argument("--pairs", help="batch file: one 'genus<TAB>a<TAB>b' per line")
    p_an.add_argument("--format", choices=["text", "json"], default="text")

    p_tw = sub.add_parser("twist-check",
                          help="degree-2 twist identity cross-check for a pair")
    p_tw.add_argument("--genus", type=int, required=True)
    p_tw.add_argument("--a", dest="word_a", required=True)
    p_tw.add_argument("--b", dest="word_b", required=True)
    p_tw.add_argument("--format", choices=["text", "json"], default="text")

    p_ev = sub.add_parser("eval", help="homology class and invariant of a word")
    p_ev.add_argument("--genus", type=int, required=True)
    p_ev.add_argument("word")
    p_ev.add_argument("--format", choices=["text", "json"], default="text")

    p_st = sub.add_parser("selftest", help="run the seeded property suites")
    p_st.add_argument("--seed", type=int, default=0)
    p_st.add_argument("--iterations", type=int, default=1)
    return parser


def _cmd_analyze(args) -> int:
    if args.pairs is not None:
        with open(args.pairs) as fh:
            lines = [line.rstrip("\n") for line in fh if line.strip()]
        for line in lines:
            fields = line.split("\t")
            if len(fields) != 3:
                raise WordError(f"bad batch line (need genus<TAB>a<TAB>b): {line!r}")
            genus = int(fields[0])
            rep = analyze(genus,
                          parse_word(fields[1], genus),
                          parse_word(fields[2], genus))
            print(rep.to_json())
        return 0
    if args.word_a is None or args.word_b is None:
        raise WordError("analyze needs --a and --b (or --pairs FILE)")
    if args.genus is None:
        raise WordError("analyze needs --genus")
    rep = analyze(args.genus,
                  parse_word(args.word_a, args.genus),
                  parse_word(args.word_b, args.genus))
    print(rep.to_json() if args.format == "json" else rep.to_text())
    return 0


def _cmd_twist_check(args) -> int:
    a = parse_word(args.word_a, args.genus)
    b = parse_word(args.word_b, args.genus)
    ok, lhs, rhs = twist_consistency(args.genus, a, b)
    if args.format == "json":
        def terms(t):
            return {
                " ".join(basis_label(i) for i in s) or "1": str(c)
                for s, c in sorted(t.terms.items())
            }

        payload = {
            "consistent": ok,
            "twisted_minus_original": terms(lhs),
            "closed_form": terms(rhs),
        }
        print(json.dumps(payload))
    else:
        print(f"twist identity holds: {ok}")
        if not ok:
            print(f"derivation-exponential side: {lhs!r}")
            print(f"closed-form side:            {rhs!r}")
    return 0 if ok else 2


def _cmd_eval(args) -> int:
    w = parse_word(args.word, args.genus)
    h = abelianize(w)
    e = ell(w)
    if args.format == "json":
        print(json.dumps({
            "word": format_word(w),
            "abs": h.to_json(),
            "ell": e.to_json(),
        }))
    else:
        print(f"word : {format_word(w)}")
        print(f"|w|  : {h}")
        print(f"ell  : {e}")
    return 0


def _cmd_selftest(args) -> int:
    if args.iterations < 1:
        raise WordError("iterations must be >= 1")
    results = run_selftest(args.seed, args.iterations)
    failures = 0
    for name, cases, error in results:
        if error is None:
            print(f"PASS {name} ({cases} cases)")
        else:
            failures += 1
            print(f"FAIL {name}: {error}")
    print(f"{len(results) - failures}/{len(results)} suites passed "
          f"(seed={args.seed}, iterations={args.iterations})")
    return 2 if failures else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "twist-check":
            return _cmd_twist_check(args)
        if args.command == "eval":
            return _cmd_eval(args)
        return _cmd_selftest(args)
    except (WordError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

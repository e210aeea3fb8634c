"""``sturm`` command-line front end.

Exit codes: 0 success, 1 verification failure or inconsistent input,
2 usage and parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import analysis, sturmian, verify, words
from .errors import InsufficientDirective, InvalidDirective, InvalidOc, InvalidWord, NotSturmianOc


class UsageError(Exception):
    pass


def _directive(text):
    try:
        return sturmian.DirectiveSequence.parse(text)
    except InvalidDirective as e:
        raise argparse.ArgumentTypeError(str(e))


def _natural(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj):
    return json.dumps(obj, indent=2)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def cmd_generate(args):
    _need(args, "directive", "length")
    w = sturmian.generate_prefix(args.directive, args.length)
    if args.format == "json":
        return _json({"directive": str(args.directive), "length": args.length, "word": w}), 0
    if args.format == "csv":
        return _csv(["directive", "length", "word"], [[str(args.directive), args.length, w]]), 0
    return w, 0


def cmd_oc(args):
    if args.word is not None:
        if args.directive is not None:
            raise UsageError("give either a word or --directive, not both")
        w = words.check_word(args.word)
        bits = words.oc_sequence(w)
        profile = analysis.RunProfile(words.runs(bits))
        verdict = None
        payload = {"word": w, "oc": bits}
    else:
        _need(args, "directive", "length")
        w = sturmian.generate_prefix(args.directive, args.length)
        bits = words.oc_sequence(w)
        profile = analysis.run_profile(args.directive, args.length)
        predicted = analysis.oc_from_directive(args.directive, args.length)
        ok = predicted == bits and profile.runs == words.runs(bits) and profile.matches_prediction()
        verdict = "MATCH" if ok else "MISMATCH"
        payload = {"directive": str(args.directive), "length": args.length, "word": w, "oc": bits}
    payload["runs"] = [list(r) for r in profile.runs]
    if verdict is not None:
        payload["predicted_k"] = profile.predicted_k
        payload["last_run_complete"] = profile.last_run_complete
        payload["predicted_oc"] = predicted
        payload["verdict"] = verdict
    status = 1 if verdict == "MISMATCH" else 0

    if args.format == "json":
        return _json(payload), status
    if args.format == "csv":
        rows = [[i, bit, length] for i, (bit, length) in enumerate(profile.runs)]
        return _csv(["run", "bit", "length"], rows), status
    if not bits:
        return "", status
    lines = [f"word  {w}", f"oc    {bits}", "", "run  bit  length"]
    lines += [f"{i:>3}  {bit:>3}  {length:>6}" for i, (bit, length) in enumerate(profile.runs)]
    if verdict is not None:
        lines += ["", f"predicted k  {profile.predicted_k}",
                  f"last run     {'complete' if profile.last_run_complete else 'possibly incomplete'}",
                  f"verdict      {verdict}"]
    return "\n".join(lines), status


def cmd_classify(args):
    _need(args, "directive", "length")
    if args.length < 1:
        raise UsageError("classify needs --length >= 1")
    w = sturmian.generate_prefix(args.directive, args.length)
    bits = words.oc_sequence(w)
    events = {e.position: e for e in analysis.boundary_classify(args.directive, args.length)}
    flips = [i for i in range(1, len(bits)) if bits[i - 1] != bits[i]]
    status = 0 if sorted(events) == flips else 1

    rows = []
    for i in range(1, len(w) + 1):
        e = events.get(i)
        rows.append({
            "length": i,
            "prefix": w[:i],
            "class": "closed" if bits[i - 1] == "1" else "open",
            "event": e.kind if e else "",
            "n": e.index_n if e else None,
        })
    if args.format == "json":
        return _json({"directive": str(args.directive), "length": args.length, "rows": rows}), status
    if args.format == "csv":
        return _csv(["length", "prefix", "class", "event", "n"],
                    [[r["length"], r["prefix"], r["class"], r["event"],
                      "" if r["n"] is None else r["n"]] for r in rows]), status
    width = max(len("prefix"), len(w))
    lines = [f"{'n':>4}  {'prefix':<{width}}  {'class':<6}  boundary", "-" * (width + 30)]
    for r in rows:
        note = ""
        if r["event"] == "open_to_closed":
            note = f"semicentral u_{r['n']}xyu_{r['n']}, next prefix closed"
        elif r["event"] == "closed_to_open":
            note = (f"central a^d0, next prefix open" if r["n"] == 0
                    else f"central u_{r['n']}xyu_{r['n'] + 1}, next prefix open")
        lines.append(f"{r['length']:>4}  {r['prefix']:<{width}}  {r['class']:<6}  {note}".rstrip())
    return "\n".join(lines), status


def cmd_factorize(args):
    _need(args, "directive", "count")
    if args.count < 1:
        raise UsageError("factorize needs --count >= 1")
    rep = analysis.square_factorization(args.directive, args.count)
    status = 0 if rep.all_verified else 1
    if args.format == "json":
        return _json({
            "directive": str(args.directive),
            "leading": rep.leading,
            "covered_length": rep.covered_length,
            "factors": [{"n": f.n, "factor": f.word, "verified": f.verified} for f in rep.factors],
        }), status
    if args.format == "csv":
        return _csv(["n", "factor", "square", "verified"],
                    [[f.n, f.word, f.word * 2, f.verified] for f in rep.factors]), status
    lines = [f"{'n':>3}  factor  status"]
    lines += [f"{f.n:>3}  {f.word}  {'VERIFIED' if f.verified else 'FAILED'}" for f in rep.factors]
    lines += ["", f"swapped   {rep.swapped_product()}", f"rewritten {rep.rewritten_product()}",
              f"covered   {rep.covered_length} letters"]
    return "\n".join(lines), status


def cmd_reconstruct(args):
    bits = args.bits.strip()
    if not bits or set(bits) - {"0", "1"}:
        raise UsageError(f"oc bits must be a non-empty 0/1 string, got {args.bits!r}")
    w = analysis.reconstruct_from_oc(bits)
    if args.format == "json":
        return _json({"oc": bits, "word": w}), 0
    if args.format == "csv":
        return _csv(["oc", "word"], [[bits, w]]), 0
    return w, 0


def cmd_verify(args):
    family = verify.Family(max_terms=args.max_terms, max_digit=args.max_digit)
    results = verify.run_all(args.max_word_len, family)
    results.sort(key=lambda r: r.name)
    status = 0 if all(r.passed for r in results) else 1
    if args.format == "json":
        return _json({"passed": status == 0, "suites": [r.as_dict() for r in results]}), status
    if args.format == "csv":
        return _csv(["suite", "result", "checked", "first_failure"],
                    [[r.name, "PASS" if r.passed else "FAIL", r.checked,
                      r.failures[0] if r.failures else ""] for r in results]), status
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.checked} checks)")
        lines += [f"      {f}" for f in r.failures]
    lines.append("all suites PASS" if status == 0 else "verification FAILED")
    return "\n".join(lines), status


def build_parser():
    parser = argparse.ArgumentParser(prog="sturm", description="Open and closed prefixes of Sturmian words")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def directive_args(p, length=True, count=False):
        p.add_argument("--directive", type=_directive, help='e.g. "2,2,1,(1)"; (...) repeats forever')
        if length:
            p.add_argument("--length", type=_natural)
        if count:
            p.add_argument("--count", type=_natural)

    p = sub.add_parser("generate", parents=[common], help="prefix of a standard Sturmian word")
    directive_args(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oc", parents=[common], help="oc sequence and runs")
    p.add_argument("word", nargs="?")
    directive_args(p)
    p.set_defaults(func=cmd_oc)

    p = sub.add_parser("classify", parents=[common], help="open/closed table with run boundaries")
    directive_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("factorize", parents=[common], help="square factorization")
    directive_args(p, length=False, count=True)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("reconstruct", parents=[common], help="word from its oc sequence")
    p.add_argument("bits")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", parents=[common], help="run every invariant suite")
    p.add_argument("--max-word-len", type=_natural, default=12)
    p.add_argument("--max-terms", type=_natural, default=3)
    p.add_argument("--max-digit", type=_natural, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, status = args.func(args)
    except (UsageError, InvalidWord, InvalidDirective, InsufficientDirective) as e:
        print(f"sturm {args.command}: error: {e}", file=sys.stderr)
        return 2
    except (InvalidOc, NotSturmianOc) as e:
        print(f"sturm {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Exit codes: 0 for a decided answer, 1 when bounded searches left the answer
Unknown or inexact, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .augbraid import AugBraid, format_aug, from_word, parse_aug
from .braid import artin, braid_eq, format_braid, parse_braid, perm, power
from .foxcalc import raw_trace
from .freegroup import FreeWord, endo_power, format_word, parse_word
from .nielsen import (
    Decision,
    SearchBounds,
    TwistContext,
    degenerate_families,
    format_trace,
    merge,
    twisted_conj,
)
from .forcing import forced_set, is_forced, report_json, report_text


def _json_safe(obj):
    if isinstance(obj, FreeWord):
        return format_word(obj)
    if isinstance(obj, (tuple, list)):
        return [_json_safe(x) for x in obj]
    return obj


def _cert_str(cert: tuple) -> str:
    return " ".join(str(_json_safe(x)) for x in cert)


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _decision_lines(d: Decision) -> list[str]:
    lines = [f"verdict: {d.kind}"]
    if d.witness is not None:
        lines.append(f"witness: {format_word(d.witness)}")
    if d.certificate:
        lines.append(f"certificate: {_cert_str(d.certificate)}")
    return lines


def _decision_exit(d: Decision) -> int:
    return 1 if d.is_unknown else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidforce",
        description="Forced orbit braids of braid iterates via Fox calculus and twisted conjugacy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m_flag=True, bounds=False):
        p.add_argument("-n", "--strands", type=int, required=True, help="number of strands")
        p.add_argument("--braid", required=True, help="braid word, e.g. 's1 s2 s3^-1'")
        if m_flag:
            p.add_argument("-m", type=int, default=1, help="iteration count (default 1)")
        if bounds:
            p.add_argument("--radius", type=int, default=5, help="conjugator search radius (default 5)")
            p.add_argument("--k-max", type=int, default=6, help="strand-loop power bound (default 6)")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("action", help="images of the free group generators under the braid action")
    common(p)

    p = sub.add_parser("perm", help="strand permutation of the braid iterate")
    common(p)

    p = sub.add_parser("trace", help="merged Fox trace of the braid iterate")
    common(p, bounds=True)

    p = sub.add_parser("forced", help="all braids forced by the braid iterate")
    common(p, bounds=True)
    p.add_argument("--boundary-fixed", action="store_true", help="drop the class realized on the boundary")
    p.add_argument("--permissive", action="store_true", help="keep classes with unknown degeneracy")

    p = sub.add_parser("is-forced", help="decide whether a candidate braid is forced")
    common(p, bounds=True)
    p.add_argument("--aug", help="candidate as '(braid ; tail)' on n strands")
    p.add_argument("--word", help="candidate tail word; base defaults to the braid iterate")
    p.add_argument("--cand", help="candidate as a braid word on n+1 strands")

    p = sub.add_parser("degenerate", help="degenerate families carried by fixed strands")
    common(p)

    p = sub.add_parser("eq", help="decide equality of two braid words")
    p.add_argument("-n", "--strands", type=int, required=True)
    p.add_argument("--braid", action="append", required=True, help="give twice: the two braid words")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("twisted-conj", help="decide twisted conjugacy of two words under the braid action")
    common(p, bounds=True)
    p.add_argument("--word", action="append", required=True, help="give twice: the two free group words")

    p = sub.add_parser("decompose", help="split a braid word fixing strand n+1 into (base ; tail)")
    p.add_argument("-n", "--punctures", type=int, required=True, help="number of punctures n")
    p.add_argument("--braid", required=True, help="braid word on n+1 strands")
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_action(args) -> int:
    beta = parse_braid(args.braid, args.strands)
    theta = endo_power(artin(beta), args.m)
    images = [format_word(w) for w in theta.images]
    if args.json:
        _emit({"n": args.strands, "m": args.m, "braid": format_braid(beta), "images": images})
    else:
        for i, img in enumerate(images, start=1):
            print(f"x{i} -> {img}")
    return 0


def _cmd_perm(args) -> int:
    beta = parse_braid(args.braid, args.strands)
    p = perm(power(beta, args.m))
    if args.json:
        _emit({"n": args.strands, "m": args.m, "braid": format_braid(beta), "perm": list(p.images)})
    else:
        print(" ".join(str(i) for i in p.images))
    return 0


def _cmd_trace(args) -> int:
    beta = parse_braid(args.braid, args.strands)
    bounds = SearchBounds(args.radius, args.k_max)
    theta = endo_power(artin(beta), args.m)
    ctx = TwistContext.create(theta, bounds)
    trace = merge(ctx, raw_trace(theta))
    exact = not trace.unresolved
    if args.json:
        _emit(
            {
                "n": args.strands,
                "m": args.m,
                "braid": format_braid(beta),
                "bounds": {"radius": bounds.radius, "k_max": bounds.k_max},
                "trace": format_trace(trace),
                "summands": [
                    {"coefficient": s.coefficient, "representative": format_word(s.representative)}
                    for s in trace.summands
                ],
                "unresolved": [[format_word(a), format_word(b)] for a, b in trace.unresolved],
                "exact": exact,
            }
        )
    else:
        print(format_trace(trace))
        for a, b in trace.unresolved:
            print(f"unresolved: [{format_word(a)}] ~? [{format_word(b)}]")
    return 0 if exact else 1


def _cmd_forced(args) -> int:
    beta = parse_braid(args.braid, args.strands)
    bounds = SearchBounds(args.radius, args.k_max)
    report = forced_set(beta, args.m, bounds, args.boundary_fixed, args.permissive)
    if args.json:
        _emit(report_json(report))
    else:
        print(report_text(report))
    return 0 if report.exact else 1


def _cmd_is_forced(args) -> int:
    beta = parse_braid(args.braid, args.strands)
    bounds = SearchBounds(args.radius, args.k_max)
    given = [x for x in (args.aug, args.word, args.cand) if x is not None]
    if len(given) != 1:
        raise ValueError("give the candidate exactly one way: --aug, --word, or --cand")
    if args.aug is not None:
        cand = parse_aug(args.aug, args.strands)
    elif args.word is not None:
        cand = AugBraid(power(beta, args.m), parse_word(args.word, args.strands))
    else:
        cand = from_word(parse_braid(args.cand, args.strands + 1))
    d = is_forced(cand, beta, args.m, bounds)
    if args.json:
        _emit(
            {
                "n": args.strands,
                "m": args.m,
                "braid": format_braid(beta),
                "candidate": {"base": format_braid(cand.base), "tail": format_word(cand.tail)},
                "bounds": {"radius": bounds.radius, "k_max": bounds.k_max},
                "verdict": d.kind,
                "witness": None if d.witness is None else format_word(d.witness),
                "certificate": _json_safe(d.certificate),
            }
        )
    else:
        for line in _decision_lines(d):
            print(line)
    return _decision_exit(d)


def _cmd_degenerate(args) -> int:
    beta = parse_braid(args.braid, args.strands)
    fams = degenerate_families(beta, args.m)
    if args.json:
        _emit(
            {
                "n": args.strands,
                "m": args.m,
                "braid": format_braid(beta),
                "families": [{"strand": f.strand, "conj": format_word(f.conj)} for f in fams],
            }
        )
    else:
        if not fams:
            print("none")
        for f in fams:
            print(f"strand {f.strand}: conj = {format_word(f.conj)}")
    return 0


def _cmd_eq(args) -> int:
    if len(args.braid) != 2:
        raise ValueError("eq needs --braid given exactly twice")
    b1 = parse_braid(args.braid[0], args.strands)
    b2 = parse_braid(args.braid[1], args.strands)
    equal = braid_eq(b1, b2)
    if args.json:
        _emit({"n": args.strands, "left": format_braid(b1), "right": format_braid(b2), "equal": equal})
    else:
        print("equal" if equal else "not equal")
    return 0


def _cmd_twisted_conj(args) -> int:
    if len(args.word) != 2:
        raise ValueError("twisted-conj needs --word given exactly twice")
    beta = parse_braid(args.braid, args.strands)
    bounds = SearchBounds(args.radius, args.k_max)
    theta = endo_power(artin(beta), args.m)
    ctx = TwistContext.create(theta, bounds)
    u = parse_word(args.word[0], args.strands)
    v = parse_word(args.word[1], args.strands)
    d = twisted_conj(ctx, u, v)
    if args.json:
        _emit(
            {
                "n": args.strands,
                "m": args.m,
                "braid": format_braid(beta),
                "u": format_word(u),
                "v": format_word(v),
                "bounds": {"radius": bounds.radius, "k_max": bounds.k_max},
                "verdict": d.kind,
                "witness": None if d.witness is None else format_word(d.witness),
                "certificate": _json_safe(d.certificate),
            }
        )
    else:
        for line in _decision_lines(d):
            print(line)
    return _decision_exit(d)


def _cmd_decompose(args) -> int:
    w = parse_braid(args.braid, args.punctures + 1)
    a = from_word(w)
    if args.json:
        _emit(
            {
                "punctures": args.punctures,
                "input": format_braid(w),
                "base": format_braid(a.base),
                "tail": format_word(a.tail),
            }
        )
    else:
        print(format_aug(a))
    return 0


_COMMANDS = {
    "action": _cmd_action,
    "perm": _cmd_perm,
    "trace": _cmd_trace,
    "forced": _cmd_forced,
    "is-forced": _cmd_is_forced,
    "degenerate": _cmd_degenerate,
    "eq": _cmd_eq,
    "twisted-conj": _cmd_twisted_conj,
    "decompose": _cmd_decompose,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

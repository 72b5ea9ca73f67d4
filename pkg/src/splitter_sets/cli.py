"""Command-line interface: splitter-sets {check,construct,verify,search,factor-test,quasi}.

Exit status: 0 decided, 2 invalid input, 3 undecided (oracle bound), 4 an
internal consistency failure such as a construction that does not verify.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from ._search import SearchBoundError
from .existence import (ConstructionError, NonexistentError, SingularError, check_family,
                        construct_perfect)
from .cyclotomic import FactorizationError
from .factorization import build_complement, direct_factor_test
from .numtheory import GroupCtx, is_prime
from .quasiperfect import NONEXISTENT, lift_interval, no_quasi_B0k_km
from .splitter import PERFECT_ORACLE_BOUND, Interval, Kind, SplitterSet, read_set

EXIT_OK, EXIT_INVALID, EXIT_UNDECIDED, EXIT_INTERNAL = 0, 2, 3, 4
ENV_ORACLE_BOUND = "SPLITTER_SETS_ORACLE_BOUND"
LARGE_SET = 10_000


class UsageError(ValueError):
    pass


def _load_config(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    conf = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        if not sep:
            raise UsageError(f"config line is not key=value: {raw!r}")
        conf[key.strip().replace("-", "_")] = val.strip()
    return conf


def _oracle_bound(args, conf) -> int:
    if args.oracle_bound is not None:
        return args.oracle_bound
    if "oracle_bound" in conf:
        return int(conf["oracle_bound"])
    return int(os.environ.get(ENV_ORACLE_BOUND, PERFECT_ORACLE_BOUND))


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        if args.timing:
            # opt-in: timing would break byte-identical output
            doc = dict(doc, timing={"seconds": round(time.perf_counter() - args.start, 6)})
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _fmt_cert(cert: dict) -> list[str]:
    return [f"  {k}: {v}" for k, v in cert.items()]


def _ctx(q: int, g: int | None = None) -> GroupCtx:
    if not is_prime(q) or q < 3:
        raise UsageError(f"q={q} is not an odd prime")
    return GroupCtx.create(q, g)


def _set_doc(s: SplitterSet, with_elements: bool) -> dict:
    doc = {"modulus": s.modulus, "k1": s.interval.k1, "k2": s.interval.k2, "size": len(s)}
    if s.generator is not None:
        doc["generator"] = s.generator
    if with_elements:
        doc["elements"] = list(s.elements)
    return doc


# -- commands --------------------------------------------------------------------

def cmd_check(args, conf) -> int:
    interval = Interval(args.k1, args.k2)
    ctx = _ctx(args.q, args.g)
    try:
        verdict = check_family(ctx, interval, _oracle_bound(args, conf), args.allow_singular)
    except SingularError as exc:
        raise UsageError(f"{exc}; pass --allow-singular to use the exact-cover oracle") from None
    doc = {"command": "check", "inputs": {"q": args.q, "k1": args.k1, "k2": args.k2, "g": ctx.g},
           "verdict": verdict.to_dict()}
    word = {True: "exists", False: "does not exist", None: "undecided"}[verdict.exists]
    _emit(args, doc, [f"perfect B{interval}({args.q}) {word}  [rule {verdict.rule}]",
                      *_fmt_cert(verdict.certificate)])
    return EXIT_OK if verdict.decided else EXIT_UNDECIDED


def cmd_construct(args, conf) -> int:
    interval = Interval(args.k1, args.k2)
    ctx = _ctx(args.q, args.g)
    try:
        result = construct_perfect(ctx, interval, _oracle_bound(args, conf))
    except NonexistentError as exc:
        raise UsageError(f"nonexistent: {exc}") from None
    except SingularError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        result.write(args.out, args.set_format)
    inline = not args.out or len(result) < LARGE_SET
    doc = {"command": "construct", "inputs": {"q": args.q, "k1": args.k1, "k2": args.k2, "g": ctx.g},
           "verdict": {"exists": True, "rule": "construct",
                       "certificate": {"kind": result.classify().kind.value}},
           "construction": _set_doc(result, inline)}
    if args.out:
        doc["construction"]["file"] = str(args.out)
    lines = [f"perfect B{interval}({args.q}) set of size {len(result)}"]
    if result.generator:
        lines.append(f"  generator: {result.generator}")
    if args.out:
        lines.append(f"  written to {args.out}")
    elif len(result) < LARGE_SET:
        lines.append("  " + " ".join(map(str, result.elements)))
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_verify(args, conf) -> int:
    try:
        s = read_set(args.set_file, args.modulus, args.k1, args.k2)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {args.set_file}: {exc}") from None
    cls = s.classify()
    doc = {"command": "verify",
           "inputs": {"file": str(args.set_file), "modulus": s.modulus,
                      "k1": s.interval.k1, "k2": s.interval.k2, "size": len(s)},
           "verdict": {"exists": cls.kind is not Kind.INVALID, "rule": "classify",
                       "certificate": {"kind": cls.kind.value, "singular": cls.singular}}}
    _emit(args, doc, [f"{cls.kind.value} B{s.interval}({s.modulus}) set, size {len(s)}, "
                      f"{'singular' if cls.singular else 'nonsingular'}"])
    return EXIT_OK


def _search_one(job):
    q, k1, k2, bound = job
    verdict = check_family(GroupCtx.create(q), Interval(k1, k2), bound)
    return {"q": q, "verdict": verdict.to_dict()}


def _search_primes(lo: int, hi: int, interval: Interval) -> list[int]:
    return [q for q in range(max(lo, 3), hi + 1)
            if (q - 1) % interval.size == 0 and not interval.is_singular_for(q) and is_prime(q)]


def cmd_search(args, conf) -> int:
    if args.min > args.max:
        raise UsageError("--min must not exceed --max")
    jobs = args.jobs if args.jobs is not None else int(conf.get("jobs", 1))
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    interval = Interval(args.k1, args.k2)
    bound = _oracle_bound(args, conf)
    work = [(q, args.k1, args.k2, bound) for q in _search_primes(args.min, args.max, interval)]
    if jobs == 1:
        results = map(_search_one, work)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_search_one, work, chunksize=max(1, len(work) // (8 * jobs)))
    out = open(args.results, "w") if args.results else None
    undecided = 0
    try:
        for rec in results:  # map preserves submission order: ascending q
            if rec["verdict"]["exists"] is None:
                undecided += 1
            if out:
                out.write(json.dumps(rec, sort_keys=True) + "\n")
            if args.only_exists and not rec["verdict"]["exists"]:
                continue
            if args.format == "json":
                print(json.dumps(rec, sort_keys=True))
            else:
                word = {True: "exists", False: "none", None: "undecided"}[rec["verdict"]["exists"]]
                print(f"{rec['q']}\t{word}\t{rec['verdict']['rule']}")
    finally:
        if out:
            out.close()
        if jobs > 1:
            pool.shutdown()
    return EXIT_UNDECIDED if undecided else EXIT_OK


def _parse_set_arg(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"--set must be comma-separated integers: {text!r}") from None


def cmd_factor_test(args, conf) -> int:
    A = _parse_set_arg(args.set)
    if len(set(x % args.modulus for x in A)) != len(A):
        raise UsageError("elements of --set must be distinct modulo --modulus")
    dv = direct_factor_test(A, args.modulus, args.p)
    cert = {"p": dv.p, "n": dv.n, "a": dv.a, "levels": list(dv.divisor_levels)}
    verdict = {"exists": dv.is_factor, "rule": "direct-factor-test", "certificate": cert}
    lines = [f"A={sorted(A)} {'is' if dv else 'is not'} a direct factor of Z_{args.modulus}",
             f"  cyclotomic levels M_A: {list(dv.divisor_levels)} (need {dv.n})"]
    if dv:
        comp = build_complement(dv.labeling, args.modulus)
        cert["complement"] = {"size": comp.size, "chains": [list(c) for c in comp.chains]}
        elements = comp.elements().tolist()
        if comp.size < LARGE_SET:
            cert["complement"]["elements"] = elements
        lines.append(f"  complement chains (step, count): {list(comp.chains)}")
        if args.complement_out:
            Path(args.complement_out).write_text("".join(f"{x}\n" for x in elements))
            lines.append(f"  complement written to {args.complement_out}")
        elif comp.size < LARGE_SET:
            lines.append("  complement: " + " ".join(map(str, elements)))
    doc = {"command": "factor-test", "inputs": {"modulus": args.modulus, "set": A, "p": args.p},
           "verdict": verdict}
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_quasi(args, conf) -> int:
    if args.family == "zero-k":
        v = no_quasi_B0k_km(args.k, args.m)
        target = f"B[0,{args.k}]({args.k * args.m})"
    else:
        v = lift_interval(args.k, args.m)
        target = f"B[-{args.k - 1},{args.k}]({args.m})"
    doc = {"command": "quasi", "inputs": {"k": args.k, "m": args.m, "family": args.family},
           "verdict": {"exists": False if v.conclusion == NONEXISTENT else None,
                       "rule": f"quasi-{args.family}", "certificate": v.to_dict()}}
    _emit(args, doc, [f"quasi-perfect {target}: {v.conclusion} "
                      f"({'applicable' if v.applicable else 'not applicable'}: {v.reason})",
                      *_fmt_cert(v.witnesses)])
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--config", help="key=value file (oracle_bound, jobs)")
    common.add_argument("--oracle-bound", type=int, default=None,
                        help=f"brute-force bound on q (default ${ENV_ORACLE_BOUND} or {PERFECT_ORACLE_BOUND})")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to JSON output")

    parser = argparse.ArgumentParser(prog="splitter-sets", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def window(p):
        p.add_argument("--k1", type=int, required=True)
        p.add_argument("--k2", type=int, required=True)

    p = sub.add_parser("check", parents=[common], help="decide existence of a perfect set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, help="primitive root (default: smallest)")
    p.add_argument("--allow-singular", action="store_true")
    window(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common], help="build a perfect set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--out", help="set file to write")
    p.add_argument("--set-format", choices=["text", "json"], default=None,
                   help="set file form (default: by extension, .json -> json)")
    window(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="classify a set file")
    p.add_argument("set_file")
    p.add_argument("--modulus", type=int)
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="check every admissible prime in a range")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--results", help="JSON-lines results file")
    p.add_argument("--only-exists", action="store_true")
    window(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("factor-test", parents=[common], help="direct-factor test in Z_N")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--set", required=True, help="comma-separated residues")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--complement-out")
    p.set_defaults(func=cmd_factor_test)

    p = sub.add_parser("quasi", parents=[common], help="quasi-perfect nonexistence criteria")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=["zero-k", "shifted"], required=True)
    p.set_defaults(func=cmd_quasi)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.start = time.perf_counter()
    try:
        conf = _load_config(args.config)
        return args.func(args, conf)
    except SearchBoundError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (ConstructionError, FactorizationError, AssertionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

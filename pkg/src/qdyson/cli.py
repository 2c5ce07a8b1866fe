"""Command-line front end.

    qdyson eval   --v 1,1 --a 1,1 [--method recursive|inductive|corollary]
    qdyson oracle --v 1,0 --lambda 2 --a 1,1
    qdyson verify IDENTITY [range options]
    qdyson sweep  --nmax 3 --vmax 2 --amax 2 [--threads 8]
    qdyson bench  --v 2,2,2 --a 3,3,3

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 a verification failed, 2 invalid input, 3 non-polynomial result.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Sequence

from . import dyson_core as core
from . import laurent, oracle, sweeps
from .qring import NonPolynomialResult, QLaurentPoly

SCHEMA = 1
IDENTITIES = (
    "qdyson", "kadell", "theorem", "corollary", "splitting", "lemma31",
    "prop41", "prop51", "lemma52", "lemma53", "prop54", "section6",
)

log = logging.getLogger("qdyson")


class InputError(ValueError):
    pass


def parse_seq(text: str, *, nonneg: bool = True) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()"):
        return ()
    try:
        out = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if nonneg and any(x < 0 for x in out):
        raise argparse.ArgumentTypeError(f"entries must be non-negative: {text!r}")
    return out


def _int_seq(text):
    return parse_seq(text, nonneg=False)


def _emit(obj, output: str, text: str) -> None:
    if output == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _check_lengths(v, a):
    if len(v) != len(a):
        raise InputError(f"v has {len(v)} parts but a has {len(a)}")


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args) -> int:
    _check_lengths(args.v, args.a)
    value = core.EVALUATORS[args.method](args.v, args.a)
    payload = {
        "schema": SCHEMA, "command": "eval", "method": args.method,
        "v": list(args.v), "a": list(args.a), "value": value.to_json(), "text": str(value),
    }
    _emit(payload, args.output, str(value))
    return 0


def cmd_oracle(args) -> int:
    _check_lengths(args.v, args.a)
    lam = args.lam
    if lam is None:
        lam = tuple(sorted((x for x in args.v if x > 0), reverse=True))
        if any(x < 0 for x in args.v):
            raise InputError("--lambda is required when v has negative entries")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InputError(f"lambda {lam} is not weakly decreasing")
    value = oracle.brute_D(args.v, lam, args.a)
    payload = {
        "schema": SCHEMA, "command": "oracle", "v": list(args.v), "lambda": list(lam),
        "a": list(args.a), "value": value.to_json(), "text": str(value),
    }
    _emit(payload, args.output, str(value))
    return 0


def _n_range(args, default_max: int) -> tuple[int, int]:
    if args.n is not None:
        return args.n, args.n
    return 1, args.nmax if args.nmax is not None else default_max


def _pick(value, default):
    return default if value is None else value


def _splitting_bundle(a) -> list:
    reports = [oracle.verify_splitting(a)]
    for inst in sweeps.power_series_instances(a):
        reports.append(oracle.check_power_series(*inst))
    return reports


def verify_jobs(args):
    """(checker, instance list) for the requested identity."""
    name = args.identity
    chk = sweeps.CHECKERS[name]
    if name == "qdyson":
        if args.a is not None:
            return chk, [(args.a,)]
        lo, hi = _n_range(args, 3)
        return chk, list(sweeps.up_to(sweeps.qdyson_instances, hi, _pick(args.amax, 3), nmin=lo))
    if name in ("kadell", "theorem", "corollary"):
        if args.a is not None or args.v is not None:
            if args.a is None or args.v is None:
                raise InputError("give both --v and --a, or neither")
            _check_lengths(args.v, args.a)
            return chk, [(args.v, args.a)]
        lo, hi = _n_range(args, 3)
        amax = _pick(args.amax, 3)
        if name == "kadell":
            return chk, list(sweeps.up_to(sweeps.kadell_instances, hi, amax, _pick(args.rmax, 4), nmin=lo))
        family = sweeps.theorem_instances if name == "theorem" else sweeps.corollary_instances
        return chk, list(sweeps.up_to(family, hi, amax, _pick(args.vmax, 3), nmin=lo))
    if name == "splitting":
        if args.a is not None:
            return _splitting_bundle, [(args.a,)]
        lo, hi = _n_range(args, 3)
        return _splitting_bundle, list(sweeps.up_to(sweeps.splitting_instances, hi, _pick(args.amax, 2), nmin=lo))
    if name == "lemma31":
        if args.i is not None and args.j is not None and args.k is not None:
            return chk, [(args.i, args.j, args.k)]
        return chk, list(sweeps.lemma31_instances(_pick(args.imax, 4), _pick(args.jmax, 4)))
    if name == "prop41":
        if args.n is not None and args.t is not None:
            return chk, [(args.n, args.t)]
        return chk, list(sweeps.prop41_instances(_pick(args.nmax, 8)))
    if name in ("prop51", "lemma52", "lemma53"):
        family = {
            "prop51": sweeps.prop51_instances,
            "lemma52": sweeps.lemma52_instances,
            "lemma53": sweeps.lemma53_instances,
        }[name]
        lo, hi = _n_range(args, 5)
        return chk, list(sweeps.up_to(family, hi, _pick(args.amax, 3), nmin=lo))
    if name == "prop54":
        lo, hi = _n_range(args, 4)
        return chk, list(sweeps.up_to(sweeps.prop54_instances, hi, _pick(args.amax, 3), _pick(args.rmax, 4),
                                      nmin=max(lo, 2)))
    if name == "section6":
        return chk, list(sweeps.section6_instances(
            _pick(args.nmax, 3), _pick(args.amax, 6), _pick(args.rmax, 6), _pick(args.summax, 12)))
    raise InputError(f"unknown identity {name!r}")


def cmd_verify(args) -> int:
    chk, instances = verify_jobs(args)
    results = sweeps.run_instances(chk, instances, args.threads)
    reports = []
    for r in results:
        reports.extend(r if isinstance(r, list) else [r])
    counts = {s: sum(1 for r in reports if r.status == s) for s in ("pass", "fail", "degenerate")}
    if args.output == "json":
        _emit({"schema": SCHEMA, "command": "verify", "identity": args.identity,
               "reports": [r.to_dict() for r in reports], "summary": counts}, "json", "")
    else:
        for r in reports:
            sys.stdout.write(str(r) + "\n")
        sys.stdout.write(
            f"{counts['pass']} pass, {counts['fail']} fail, {counts['degenerate']} degenerate"
            f" / {len(reports)} reports\n"
        )
    return 1 if counts["fail"] else 0


def cmd_sweep(args) -> int:
    rows = sweeps.sweep(args.nmax, args.vmax, args.amax, threads=args.threads, nmin=args.nmin)
    bad = [r for r in rows if not r["match"]]
    summary = f"{len(bad)} mismatches / {len(rows)} instances"
    if args.output == "json":
        _emit({"schema": SCHEMA, "command": "sweep",
               "ranges": {"nmin": args.nmin, "nmax": args.nmax, "vmax": args.vmax, "amax": args.amax},
               "instances": rows, "mismatches": len(bad), "total": len(rows)}, "json", "")
    else:
        for r in bad:
            sys.stdout.write(f"mismatch v={r['v']} a={r['a']}\n")
        sys.stdout.write(summary + "\n")
    return 1 if bad else 0


def _clear_all_caches():
    core.clear_caches()
    laurent._dyson_product_cached.cache_clear()
    laurent._h_r_cached.cache_clear()
    laurent._h_lambda_cached.cache_clear()


def _timed(fn, repeat: int) -> tuple[float, QLaurentPoly]:
    best = float("inf")
    value = None
    for _ in range(repeat):
        _clear_all_caches()
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def cmd_bench(args) -> int:
    _check_lengths(args.v, args.a)
    lam = tuple(sorted(args.v, reverse=True))
    rows = []
    t_or, v_or = _timed(lambda: oracle.brute_D(args.v, lam, args.a), args.repeat)
    rows.append(("oracle", t_or))
    values = {"oracle": v_or}
    for method in ("recursive", "inductive"):
        t, val = _timed(lambda: core.EVALUATORS[method](args.v, args.a), args.repeat)
        rows.append((method, t))
        values[method] = val
    agree = len(set(values.values())) == 1
    if args.output == "json":
        _emit({"schema": SCHEMA, "command": "bench", "v": list(args.v), "a": list(args.a),
               "seconds": {k: t for k, t in rows}, "agree": agree}, "json", "")
    else:
        lines = [f"v={','.join(map(str, args.v))} a={','.join(map(str, args.a))}"]
        lines += [f"{name:<10} {t * 1e3:12.3f} ms" for name, t in rows]
        lines.append(f"speedup (oracle/recursive): {t_or / max(rows[1][1], 1e-12):.1f}x")
        lines.append("values agree" if agree else "VALUES DISAGREE")
        _emit(None, "text", "\n".join(lines))
    return 0 if agree else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qdyson", description=__doc__.split("\n\n")[0])
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--output", choices=("text", "json"), default="text")

    sp = sub.add_parser("eval", help="evaluate D_{v,v+}(a) by a fast method")
    sp.add_argument("--v", type=parse_seq, required=True)
    sp.add_argument("--a", type=parse_seq, required=True)
    sp.add_argument("--method", choices=tuple(core.EVALUATORS), default="recursive")
    common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("oracle", help="brute-force D_{v,lambda}(a)")
    sp.add_argument("--v", type=_int_seq, required=True)
    sp.add_argument("--lambda", dest="lam", type=parse_seq, default=None)
    sp.add_argument("--a", type=parse_seq, required=True)
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="check an identity over a range of instances")
    sp.add_argument("identity", choices=IDENTITIES)
    for flag in ("n", "nmax", "amax", "rmax", "vmax", "imax", "jmax", "summax", "i", "j", "k", "t"):
        sp.add_argument(f"--{flag}", type=int, default=None)
    sp.add_argument("--a", type=parse_seq, default=None)
    sp.add_argument("--v", type=parse_seq, default=None)
    sp.add_argument("--threads", type=int, default=sweeps.default_threads())
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="cross-check the recursion against the oracle")
    sp.add_argument("--nmin", type=int, default=1)
    sp.add_argument("--nmax", type=int, default=3)
    sp.add_argument("--vmax", type=int, default=2)
    sp.add_argument("--amax", type=int, default=2)
    sp.add_argument("--threads", type=int, default=sweeps.default_threads())
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("bench", help="time the oracle against the fast evaluators")
    sp.add_argument("--v", type=parse_seq, required=True)
    sp.add_argument("--a", type=parse_seq, required=True)
    sp.add_argument("--repeat", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except NonPolynomialResult as exc:
        print(f"error: {exc}: remainder {exc.remainder}", file=sys.stderr)
        return 3
    except (InputError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

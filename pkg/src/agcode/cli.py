"""Command line for inspecting, encoding, decoding and simulating AG codes.

Vectors on the command line are comma-separated field elements; each
element is a digit vector `[d0,d1,...]`, a generator power `a^k` (also
`a`), or a bare prime-subfield integer.  Output always uses digit
vectors.  An argument of `-` reads the vector from standard input.

Simulation randomness comes from Python's Mersenne Twister with a
per-trial stream seeded by the string "<seed>:<trial>", so reports are
reproducible across platforms and trial-level parallelism.  All report
fields except mean_decode_seconds are deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from agcode.codedata import CodeData, CodeDataError, fixture_path, list_fixtures
from agcode.decoder import DecoderInvariantError, decode, format_trace
from agcode.precompute import precompute


def _split_vector(text):
    parts, cur, depth = [], [], 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _parse_vector(F, text, expect, what):
    if text == "-":
        text = sys.stdin.readline()
        if "=" in text:
            text = text.split("=", 1)[1]
    elems = [F.parse(t) for t in _split_vector(text)]
    if len(elems) != expect:
        raise ValueError(f"{what} has {len(elems)} elements, expected {expect}")
    return elems


def _format_vector(F, vec):
    return ",".join(F.format(v) for v in vec)


def _load(path_or_name):
    if os.path.exists(path_or_name):
        return CodeData.load(path_or_name)
    p = fixture_path(path_or_name)
    if p.is_file():
        return CodeData.from_json(json.loads(p.read_text()))
    raise CodeDataError(
        f"no such file or fixture: {path_or_name!r} (fixtures: {', '.join(list_fixtures())})"
    )


def cmd_info(args):
    pc = precompute(_load(args.code))
    code = pc.code
    nu = sorted(pc.nu_table.items(), reverse=True)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": code.n,
                    "k": code.k,
                    "gamma": code.gamma,
                    "genus": code.genus,
                    "degG": code.degG,
                    "nu": [[s, v] for s, v in nu],
                    "d_lo": pc.d_lo,
                    "N_h": pc.n_h,
                    "N_eta": pc.n_eta,
                    "N_deg": pc.n_deg,
                    "N_iter": pc.n_iter,
                }
            )
        )
        return 0
    print(f"n = {code.n}")
    print(f"k = {code.k}")
    print(f"gamma = {code.gamma}")
    print(f"genus = {code.genus}")
    print(f"|G| = {code.degG}")
    print("nu:")
    for s, v in nu:
        print(f"  s = {s}\tnu = {v}")
    print(f"d_LO = {pc.d_lo}")
    print(f"N_h = {pc.n_h}")
    print(f"N_eta = {pc.n_eta}")
    print(f"N_deg = {pc.n_deg}")
    print(f"N_iter = {pc.n_iter}")
    return 0


def cmd_encode(args):
    pc = precompute(_load(args.code))
    code = pc.code
    msg = _parse_vector(code.field, args.message, code.k, "message")
    word = code.encode(msg, pc.encoder)
    print(_format_vector(code.field, word))
    return 0


def cmd_decode(args):
    pc = precompute(_load(args.code))
    code, F = pc.code, pc.code.field
    v = _parse_vector(F, args.vector, code.n, "received vector")
    res = decode(v, pc, want_trace=args.trace, check="all" if args.selfcheck else "sampled")
    if args.format == "json":
        out = {
            "message": [F.digits(x) for x in res.message],
            "codeword": [F.digits(x) for x in res.codeword],
            "residual_weight": res.residual_weight,
            "verified": res.verified,
            "iterations": res.iterations,
            "tie": res.tie_flag,
        }
        if args.trace:
            out["trace"] = format_trace(res.trace, F).splitlines()
        print(json.dumps(out))
    else:
        print(f"message = {_format_vector(F, res.message)}")
        print(f"codeword = {_format_vector(F, res.codeword)}")
        print(f"residual_weight = {res.residual_weight}")
        print(f"verified = {'true' if res.verified else 'false'}")
        print(f"iterations = {res.iterations}")
        if args.trace:
            print(format_trace(res.trace, F))
    if args.verify and not res.verified:
        return 3
    return 0


def simulate(pc, errors, trials, seed):
    """Monte-Carlo decoding of random messages under exact-weight errors."""
    code, F = pc.code, pc.code.field
    n, q = code.n, F.q
    successes = ties = 0
    max_iter = max_deg = 0
    total_time = 0.0
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        msg = [rng.randrange(q) for _ in range(code.k)]
        word = code.encode(msg, pc.encoder)
        v = list(word)
        for t in rng.sample(range(n), errors):
            v[t] = F.add(v[t], rng.randrange(1, q))
        t0 = time.perf_counter()
        res = decode(v, pc, check="off")
        total_time += time.perf_counter() - t0
        if res.message == msg:
            successes += 1
        if res.tie_flag:
            ties += 1
        max_iter = max(max_iter, res.iterations)
        max_deg = max(max_deg, res.max_degree)
        if res.iterations > pc.n_iter:
            raise DecoderInvariantError(None, "iteration bound exceeded in simulation")
        if res.max_degree > pc.n_deg:
            raise DecoderInvariantError(None, "degree bound exceeded in simulation")
    return {
        "trials": trials,
        "error_weight": errors,
        "successes": successes,
        "failures": trials - successes,
        "ties": ties,
        "max_iterations": max_iter,
        "max_poly_degree": max_deg,
        "mean_decode_seconds": total_time / trials if trials else 0.0,
    }


def cmd_simulate(args):
    pc = precompute(_load(args.code))
    report = simulate(pc, args.errors, args.trials, args.seed)
    if args.format == "json":
        print(json.dumps(report))
    else:
        for k, v in report.items():
            print(f"{k} = {v:.6g}" if isinstance(v, float) else f"{k} = {v}")
    return 0


def cmd_selftest(args):
    pc = precompute(_load(args.code))
    code, F = pc.code, pc.code.field
    for trial in range(args.vectors):
        rng = random.Random(f"{args.seed}:{trial}")
        v = [rng.randrange(F.q) for _ in range(code.n)]
        decode(v, pc, check="all")
    print(f"selftest passed: {args.vectors} random vectors, all invariants held")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="agcode",
        description="Decode algebraic-geometry evaluation codes from curve-data files.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("code", help="curve-data file or shipped fixture name")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    add("info", cmd_info, help="print code parameters, the nu table and bounds")

    p = add("encode", cmd_encode, help="encode a message into a codeword")
    p.add_argument("message", help="k comma-separated field elements, or -")

    p = add("decode", cmd_decode, help="decode a received vector")
    p.add_argument("vector", help="n comma-separated field elements, or -")
    p.add_argument("--trace", action="store_true", help="print the per-iteration dump")
    p.add_argument(
        "--verify",
        action="store_true",
        help="exit nonzero unless the result is within the guaranteed radius",
    )
    p.add_argument(
        "--selfcheck", action="store_true", help="run invariant checks every iteration"
    )

    p = add("simulate", cmd_simulate, help="Monte-Carlo decoding experiment")
    p.add_argument("--errors", type=int, required=True, help="exact error weight")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = add("selftest", cmd_selftest, help="decode random vectors with all checks on")
    p.add_argument("--vectors", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)

    args = ap.parse_args(argv)
    if getattr(args, "errors", 0) < 0 or getattr(args, "trials", 1) < 1:
        ap.error("--errors must be >= 0 and --trials >= 1")
    try:
        return args.fn(args)
    except (CodeDataError, ValueError) as exc:
        print(f"agcode: {exc}", file=sys.stderr)
        return 2
    except DecoderInvariantError as exc:
        print(f"agcode: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: JSON in, JSON (or CSV) out.

Exit codes: 0 success, 1 failed self-test or unexpected internal error,
2 singular Toeplitz matrix, 3 invalid input, 4 violated exact division.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .bench import rows_to_csv, run_bench
from .corpus import invertible_toeplitz, random_hermitian, random_pair, structured_pair
from .errors import ExactnessViolation, InputError, Singular, SymresError
from .fssr import constant_terms, fast_sequence, fssr, subresultant_constant_terms
from .jsonio import (
    decode_pair,
    decode_toeplitz,
    dumps,
    encode_coeff,
    encode_pair,
    encode_poly,
    encode_toeplitz,
    read_json,
    write_atomic,
)
from .poly import SymPoly
from .ring import RING_TAGS, join_rings, ring_of
from .ssr_oracle import subresultant_sequence_det
from .ssr_seq import compose_transitions, seed_pair, ssr_sequence
from .toeplitz import fitm_invert, principal_minors, signature

EXIT_OK, EXIT_FAIL, EXIT_SINGULAR, EXIT_INPUT, EXIT_EXACTNESS = 0, 1, 2, 3, 4


@dataclass
class JobSpec:
    """One CLI invocation: the command, its input file, flags and output path."""

    command: str
    input: str | None = None
    flags: dict = field(default_factory=dict)
    out: str | None = None


# ------------------------------------------------------------------- helpers


def _tag_of(values) -> str:
    tag = "int"
    for v in values:
        tag = join_rings(tag, ring_of(v))
    return tag


def _encode_list(values) -> list:
    tag = _tag_of(values)
    return [encode_coeff(v, tag) for v in values]


def _encode_matrix(M) -> dict:
    m00, m01, m10, m11 = M.entries
    return {
        "entries": [[encode_poly(m00), encode_poly(m01)], [encode_poly(m10), encode_poly(m11)]],
        "denominator": encode_coeff(M.denom),
    }


def _chain(quotients, start: int = 0) -> list:
    out, k = [], start
    for q in quotients:
        out.append({"k": k, "alpha": q.alpha, "beta": q.beta})
        k += q.alpha + q.beta
    return out


def _pair_ring(A: SymPoly, B: SymPoly) -> str:
    return join_rings(A.ring, B.ring)


def _load_pair(job: JobSpec):
    return decode_pair(read_json(job.input), "$", job.flags.get("ring"))


def _load_toeplitz(job: JobSpec):
    return decode_toeplitz(read_json(job.input), "$", job.flags.get("ring"))


# ------------------------------------------------------------------ commands


def _cmd_ssr(job: JobSpec):
    A, B = _load_pair(job)
    tag = _pair_ring(A, B)
    if job.flags.get("constant_terms_only"):
        d = A.formal_degree
        seq_fast = fast_sequence(A, B)
        values = subresultant_constant_terms(A, B, d) if d else []
        return tag, {
            "constant_terms": [{"j": j, "value": encode_coeff(v)} for j, v in enumerate(values, 1)],
            "chain": _chain(seq_fast.quotients),
        }
    seq = ssr_sequence(A, B, full=bool(job.flags.get("full")))
    entries = [
        {"j": j, "S_j": encode_poly(P, tag)}
        for j, P in enumerate(seq.full, start=-1)
        if P is not None
    ]
    return tag, {
        "sequence": entries,
        "chain": _chain(seq.quotients),
        "regular_indices": seq.regular_indices,
        "shear": seq.shear,
    }


def _cmd_ssr_oracle(job: JobSpec):
    A, B = _load_pair(job)
    tag = _pair_ring(A, B)
    seq = subresultant_sequence_det(A, B)
    return tag, [{"j": j, "S_j": encode_poly(P, tag)} for j, P in enumerate(seq, start=-1)]


def _cmd_fssr(job: JobSpec):
    A, B = _load_pair(job)
    tag = _pair_ring(A, B)
    d = A.formal_degree
    r = job.flags.get("r")
    emit = job.flags.get("emit") or "quotients"
    if r is None:
        fast = fast_sequence(A, B)
        quotients, matrix, seed = fast.quotients, fast.matrix, fast.seed
        terms = fast.constant_terms()
        bound = d + 1
    else:
        if r < 1:
            raise InputError("--r must be at least 1")
        S0, S1, seed, _ = seed_pair(A, B)
        res = fssr(S0, S1.with_formal_degree(d), min(r, d + 1))
        quotients, matrix = res.quotients, res.matrix
        terms = constant_terms(res, (S0, S1))
        bound = r
    result: dict = {"bound": bound, "chain": _chain(quotients)}
    if emit == "quotients":
        result["quotients"] = [
            {"Q": encode_poly(q.Q), "alpha": q.alpha, "beta": q.beta,
             "lc_next": encode_coeff(q.lc_next), "tc_next": encode_coeff(q.tc_next)}
            for q in quotients
        ]
    elif emit == "constant-terms":
        result["constant_terms"] = [
            {"k": k, "value": encode_coeff(c), "leading": encode_coeff(lc)} for k, c, lc in terms
        ]
    elif emit == "matrix":
        result["last_regular_index"] = terms[-1][0]
        result["matrix"] = _encode_matrix(compose_transitions(matrix, seed))
    else:
        raise InputError(f"unknown --emit value {emit!r}")
    return tag, result


def _cmd_toeplitz_minors(job: JobSpec):
    T = _load_toeplitz(job)
    minors = principal_minors(T)
    return _tag_of(T.diagonals), {"minors": _encode_list(minors)}


def _cmd_toeplitz_sig(job: JobSpec):
    T = _load_toeplitz(job)
    res = signature(T)
    return _tag_of(T.diagonals), {
        "minors": _encode_list(res.minors),
        "signature": res.signature,
        "method": res.method,
        "log": res.log,
    }


def _cmd_toeplitz_inv(job: JobSpec):
    T = _load_toeplitz(job)
    gen, dense = fitm_invert(T, dense=bool(job.flags.get("dense")))
    result = {
        "branch": gen.branch,
        "denominator": encode_coeff(gen.denominator),
        "x": _encode_list(gen.x_num),
        "y": _encode_list(gen.y_num),
        "determinant": encode_coeff(gen.det),
        "gamma_delta": list(gen.gamma_delta),
        "attempts": gen.attempts,
    }
    if dense is not None:
        flat = [v for row in dense for v in row]
        tag = _tag_of(flat)
        result["dense"] = [[encode_coeff(v, tag) for v in row] for row in dense]
    return _tag_of(T.diagonals), result


def _cmd_corpus(job: JobSpec):
    rng = random.Random(job.flags.get("seed", 0))
    kind, d, count = job.flags["kind"], job.flags["d"], job.flags["count"]
    gauss = job.flags.get("ring") in ("gauss", "gaussrat")
    items = []
    for _ in range(count):
        if kind == "pair":
            items.append(encode_pair(*random_pair(rng, d, 9, gauss)))
        elif kind == "structured":
            items.append(encode_pair(*structured_pair(rng, d, gauss)))
        elif kind == "hermitian":
            items.append(encode_toeplitz(random_hermitian(rng, d, 3, gauss)))
        else:
            items.append(encode_toeplitz(invertible_toeplitz(rng, d)))
    return "gauss" if gauss else "int", items


COMMANDS = {
    "ssr": _cmd_ssr,
    "ssr-oracle": _cmd_ssr_oracle,
    "fssr": _cmd_fssr,
    "toeplitz-minors": _cmd_toeplitz_minors,
    "toeplitz-sig": _cmd_toeplitz_sig,
    "toeplitz-inv": _cmd_toeplitz_inv,
    "corpus": _cmd_corpus,
}


# ---------------------------------------------------------------------- runner


def _emit(job: JobSpec, text: str) -> None:
    if job.out:
        write_atomic(job.out, text)
    else:
        sys.stdout.write(text)


def _context_dump(job: JobSpec, exc: ExactnessViolation) -> str:
    try:
        inputs = read_json(job.input) if job.input else None
    except SymresError:
        inputs = None
    return json.dumps(
        {"error": "ExactnessViolation", "message": str(exc), "command": job.command,
         "flags": job.flags, "input": inputs,
         "context": {k: repr(v) for k, v in exc.context.items()}},
        indent=2, sort_keys=True, default=repr,
    )


def run(job: JobSpec) -> int:
    """Execute one job and write its report; returns the exit code."""
    try:
        if job.command == "bench":
            rows = run_bench(job.flags["sizes"], job.flags.get("bench_ring", "zp"),
                             job.flags.get("seed", 0), not job.flags.get("fast_only"),
                             job.flags.get("repeat", 1))
            _emit(job, rows_to_csv(rows))
            return EXIT_OK
        if job.command == "selftest":
            return _run_selftest(job)
        handler = COMMANDS[job.command]
        t0 = time.perf_counter()
        tag, result = handler(job)
        elapsed = time.perf_counter() - t0
        report = {"version": __version__, "command": job.command, "ring": tag, "result": result}
        if not job.flags.get("no_timing"):
            report["timing"] = {"seconds": round(elapsed, 6)}
        _emit(job, dumps(report))
        return EXIT_OK
    except Singular as exc:
        _error(job, "Singular", str(exc))
        return EXIT_SINGULAR
    except ExactnessViolation as exc:
        sys.stderr.write(_context_dump(job, exc) + "\n")
        return EXIT_EXACTNESS
    except InputError as exc:
        _error(job, type(exc).__name__, str(exc))
        return EXIT_INPUT
    except SymresError as exc:
        _error(job, type(exc).__name__, str(exc))
        return EXIT_FAIL


def _error(job: JobSpec, kind: str, message: str) -> None:
    sys.stderr.write(f"symres {job.command}: {kind}: {message}\n")


def _run_selftest(job: JobSpec) -> int:
    from .selftest import selftest

    size = job.flags.get("size", 20)
    results = selftest(size, job.flags.get("seed", 0), job.flags.get("mutate", False))
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name}  ({r.cases} cases, {len(r.failures)} failures)")
        lines += [f"      {msg}" for msg in r.failures[:3]]
    if not results:
        lines.append("PASS  empty corpus")
    _emit(job, "\n".join(lines) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------- parser


def _common(bench: bool = False) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    if not bench:
        p.add_argument("--ring", choices=RING_TAGS, default=argparse.SUPPRESS,
                       help="embed input coefficients into this ring")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for generated data")
    p.add_argument("--out", default=argparse.SUPPRESS, help="write the report here (atomically)")
    p.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                   help="leave the timing field out of the report")
    return p


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="symres",
        description="Symmetric subresultants and Toeplitz computations in exact arithmetic.",
        parents=[_common()],
    )
    parser.add_argument("--version", action="version", version=f"symres {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ssr", parents=[common], help="subresultant sequence by the quadratic recurrence")
    p.add_argument("--in", dest="input", required=True, help='pair JSON {"A": poly, "B": poly}')
    p.add_argument("--full", action="store_true", help="include the degenerate interior terms")
    p.add_argument("--constant-terms-only", action="store_true",
                   help="only S_j(0) for j = 1..d, through the fast chain")

    p = sub.add_parser("ssr-oracle", parents=[common], help="subresultants from determinants")
    p.add_argument("--in", dest="input", required=True)

    p = sub.add_parser("fssr", parents=[common], help="quotient chain by divide and conquer")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--r", type=int, help="only steps landing below this index (default: all)")
    p.add_argument("--emit", choices=("quotients", "constant-terms", "matrix"), default="quotients")

    p = sub.add_parser("toeplitz", help="Hermitian signature, minors and inversion")
    tsub = p.add_subparsers(dest="toeplitz_command", required=True)
    for name, helptext in (("sig", "signature of a Hermitian matrix"),
                           ("inv", "fraction-free inverse generators"),
                           ("minors", "principal minors of a Hermitian matrix")):
        tp = tsub.add_parser(name, parents=[common], help=helptext)
        tp.add_argument("--in", dest="input", required=True,
                        help='{"d": int, "diagonals": [...], "hermitian": bool}')
        if name == "inv":
            tp.add_argument("--dense", action="store_true", help="also materialise the inverse")

    p = sub.add_parser("bench", help="timing harness")
    bsub = p.add_subparsers(dest="bench_command", required=True)
    bp = bsub.add_parser("fssr", parents=[_common(bench=True)], help="fast vs quadratic chain")
    bp.add_argument("--sizes", type=_sizes, default=[256, 512, 1024, 2048])
    bp.add_argument("--ring", dest="bench_ring", choices=("zp", "int"), default="zp")
    bp.add_argument("--repeat", type=int, default=1)
    bp.add_argument("--fast-only", action="store_true", help="skip the quadratic path")

    p = sub.add_parser("selftest", parents=[common], help="embedded oracle-equivalence corpus")
    p.add_argument("--size", type=int, default=20, help="instances per family (0: no-op)")
    p.add_argument("--mutate", action="store_true", help="corrupt the recurrence on purpose")

    p = sub.add_parser("corpus", parents=[common], help="generate random inputs as JSON")
    p.add_argument("kind", choices=("pair", "structured", "hermitian", "toeplitz"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    return parser


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    flags = {k: v for k, v in vars(ns).items() if k not in ("command", "input", "out")}
    command = ns.command
    if command == "toeplitz":
        command = f"toeplitz-{flags.pop('toeplitz_command')}"
    elif command == "bench":
        flags.pop("bench_command")
    return JobSpec(command, getattr(ns, "input", None), flags, getattr(ns, "out", None))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; that code is reserved for Singular
        return EXIT_INPUT if exc.code else EXIT_OK
    return run(job_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())

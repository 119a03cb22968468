"""Command-line interface: basis, verify, bench subcommands.

Documents go to stdout unless --out is given; diagnostics go to stderr.
JSON stores complex matrices as flat row-major "re"/"im" arrays with
explicit "rows"/"cols"; CSV uses two fields per cell (real, imaginary).
Every document carries a metadata block (p, generator, tool version,
seed). Floats serialize with shortest round-trip rendering, so payloads
re-parse bit for bit.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .arith import is_prime, make_context
from .bench import run_bench
from .errors import OscBasisError
from .oscillator import build_basis
from .verify import DEFAULT_SEED, run_full_suite


def _metadata(p=None, generator=None, seed=None) -> dict:
    return {"tool": "oscbasis", "version": __version__, "p": p, "generator": generator, "seed": seed}


def _matrix_payload(m: np.ndarray) -> dict:
    return {
        "rows": m.shape[0],
        "cols": m.shape[1],
        "re": [float(v) for v in m.real.ravel(order="C")],
        "im": [float(v) for v in m.imag.ravel(order="C")],
    }


def _complex_list_payload(values: np.ndarray) -> dict:
    return {"re": [float(v) for v in values.real], "im": [float(v) for v in values.imag]}


def matrix_from_payload(payload: dict) -> np.ndarray:
    """Inverse of the JSON matrix encoding (used by tests and consumers)."""
    shape = (payload["rows"], payload["cols"])
    re = np.array(payload["re"], dtype=np.float64).reshape(shape)
    im = np.array(payload["im"], dtype=np.float64).reshape(shape)
    return re + 1j * im


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_primes(args, parser) -> list[int]:
    if getattr(args, "prime", None) is not None:
        return [args.prime]
    expr = getattr(args, "primes", None)
    if not expr:
        parser.error("one of --prime or --primes is required")
    if ".." in expr:
        lo_s, hi_s = expr.split("..", 1)
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            parser.error(f"bad range {expr!r}; expected A..B")
        primes = [p for p in range(lo, hi + 1) if p % 4 == 1 and is_prime(p)]
        if not primes:
            parser.error(f"no primes = 1 (mod 4) in {expr!r}")
        return primes
    try:
        primes = [int(tok) for tok in expr.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"bad prime list {expr!r}")
    if not primes:
        parser.error("empty prime list")
    return primes


def _basis_csv(matrix: np.ndarray, dft_eigs, torus_eigs, meta: dict) -> str:
    p = matrix.shape[0]
    lines = [f"# oscbasis v{meta['version']} p={meta['p']} generator={meta['generator']}"]
    header = ["i"]
    for x in range(p):
        header += [f"phi_{x}_re", f"phi_{x}_im"]
    lines.append(",".join(header))
    for i in range(p):
        cells = [str(i)]
        for x in range(p):
            cells += [repr(float(matrix[i, x].real)), repr(float(matrix[i, x].imag))]
        lines.append(",".join(cells))
    for label, eigs in (("dft_eig", dft_eigs), ("torus_eig", torus_eigs)):
        cells = [label]
        for v in eigs:
            cells += [repr(float(v.real)), repr(float(v.imag))]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_basis(args, parser) -> int:
    ctx = make_context(args.prime, generator_override=args.generator)
    basis = build_basis(ctx)
    meta = _metadata(p=ctx.p, generator=ctx.a, seed=None)
    if args.format == "json":
        doc = {
            "meta": meta,
            "matrix": _matrix_payload(basis.matrix),
            "dft_eigenvalues": _complex_list_payload(basis.dft_eigenvalues),
            "torus_eigenvalues": _complex_list_payload(basis.torus_eigenvalues),
        }
        _write(json.dumps(doc, indent=2), args.out)
    else:
        _write(
            _basis_csv(basis.matrix, basis.dft_eigenvalues, basis.torus_eigenvalues, meta),
            args.out,
        )
    return 0


def cmd_verify(args, parser) -> int:
    primes = _parse_primes(args, parser)
    reports = []
    for p in primes:
        ctx = make_context(p, generator_override=args.generator)
        reports.append(run_full_suite(ctx, tol=args.tol, seed=args.seed))
    all_passed = all(r.passed for r in reports)
    if args.format == "json":
        doc = {
            "meta": _metadata(
                p=primes[0] if len(primes) == 1 else None,
                generator=reports[0].generator if len(reports) == 1 else None,
                seed=args.seed,
            ),
            "passed": all_passed,
            "reports": [r.to_dict() for r in reports],
        }
        _write(json.dumps(doc, indent=2), args.out)
    else:
        lines = [
            f"# oscbasis v{__version__} seed={args.seed}",
            "p,generator,check,residual,tolerance,passed",
        ]
        for r in reports:
            for c in r.checks:
                lines.append(
                    f"{r.p},{r.generator},{c.name},{repr(c.residual)},{repr(c.tolerance)},{c.passed}"
                )
        _write("\n".join(lines) + "\n", args.out)
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        print(f"verify p={r.p}: {status} ({len(r.checks)} checks, {r.elapsed_s:.2f}s)", file=sys.stderr)
    return 0 if all_passed else 1


def cmd_bench(args, parser) -> int:
    primes = _parse_primes(args, parser)
    rows = run_bench(primes, reps=args.reps)
    if args.format == "json":
        doc = {"meta": _metadata(seed=None), "rows": rows}
        _write(json.dumps(doc, indent=2), args.out)
    else:
        lines = [f"# oscbasis v{__version__}", "p,route,backend,reps,median_s,best_s"]
        for row in rows:
            lines.append(
                f"{row['p']},{row['route']},{row['backend']},{row['reps']},"
                f"{repr(row['median_s'])},{repr(row['best_s'])}"
            )
        _write("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscbasis",
        description="Canonical DFT eigenbasis and oscillator transform for primes p = 1 (mod 4)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", help="emit Theta_p with its eigenvalue lists")
    b.add_argument("--prime", type=int, required=True)
    b.add_argument("--generator", type=int, default=None)
    b.add_argument("--format", choices=("json", "csv"), default="json")
    b.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="run the full property suite")
    v.add_argument("--prime", type=int, default=None)
    v.add_argument("--primes", default=None, help="A..B range or comma list")
    v.add_argument("--generator", type=int, default=None)
    v.add_argument("--tol", type=float, default=None, help="override 1e-12*p")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", default=None)

    n = sub.add_parser("bench", help="time basis construction and the projector oracle")
    n.add_argument("--primes", required=True, help="A..B range or comma list")
    n.add_argument("--reps", type=int, default=3)
    n.add_argument("--format", choices=("json", "csv"), default="json")
    n.add_argument("--out", default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"basis": cmd_basis, "verify": cmd_verify, "bench": cmd_bench}
    try:
        return handlers[args.command](args, parser)
    except OscBasisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

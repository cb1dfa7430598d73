"""Command-line interface: determinants, spectra, generators, suites.

Exit codes: 0 success, 2 usage or parse error, 3 numeric failure (including
a failing verification suite), 4 structurally unsupported input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import io as docio
from . import numkit
from .determinant import dt
from .errors import DomainError, JbdetError, UnsupportedInputError
from .generators import (
    random_biquat_unitary,
    random_herm,
    random_normal,
    random_selfadjoint,
    random_unitary,
    distinct_unimodular,
)
from .jordan import HermMatrix
from .minproj import random_min_projection
from .reduce import simultaneous_biq
from .spectral import dt_general, spectral_decompose
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_UNSUPPORTED = 4

GEN_KINDS = {
    "unitary-c6": lambda rng: random_unitary(rng),
    "unitary-biquat": lambda rng: random_biquat_unitary(rng),
    "diag-unitary": lambda rng: HermMatrix.diag(distinct_unimodular(rng)),
    "normal-c6": lambda rng: random_normal(rng),
    "selfadjoint-c6": lambda rng: random_selfadjoint(rng),
    "herm-biquat": lambda rng, order=3: random_herm(rng, order=order, level=2),
    "min-projection": lambda rng: random_min_projection(rng),
}


def _default_seed() -> int:
    raw = os.environ.get("JBDET_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def _common_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: JBDET_SEED env var or 0)")
    parser.add_argument("--tolerance", type=float, default=None,
                        help="override tolerance where applicable")
    parser.add_argument("--trials", type=int, default=None,
                        help="trial count for randomized suites")
    parser.add_argument("--out", type=str, default=None,
                        help="output file or directory")
    parser.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp line for byte-stable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jbdet",
        description="determinants and spectral calculus for hermitian "
                    "matrices of biquaternions and complex octonions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dt = sub.add_parser("dt", help="determinant of a stored element")
    p_dt.add_argument("input", type=str)
    p_dt.add_argument("--check-hat", action="store_true",
                      help="report the squared-determinant residual")
    _common_flags(p_dt)

    p_verify = sub.add_parser("verify", help="run a named theorem suite")
    p_verify.add_argument("suite", type=str,
                          help=f"one of: {', '.join(sorted(SUITES))}")
    _common_flags(p_verify)

    p_gen = sub.add_parser("gen", help="generate reproducible instances")
    p_gen.add_argument("kind", type=str,
                       help=f"one of: {', '.join(sorted(GEN_KINDS))}")
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--order", type=int, default=3,
                       help="matrix order for herm-biquat")
    _common_flags(p_gen)

    p_spec = sub.add_parser("spectral", help="spectral resolution of an element")
    p_spec.add_argument("input", type=str)
    p_spec.add_argument("--isotope", type=str, default=None,
                        help="path to the unitary serving as isotope unit")
    _common_flags(p_spec)

    p_red = sub.add_parser("reduce", help="simultaneous reduction to biquaternions")
    p_red.add_argument("unitary", type=str)
    p_red.add_argument("diagonal", type=str)
    _common_flags(p_red)
    return parser


def _stamp(args) -> list[str]:
    if args.no_timestamp:
        return []
    return [f"# generated {datetime.now(timezone.utc).isoformat()}"]


def _fmt_complex(z: complex) -> str:
    # adding 0.0 collapses negative zero so output does not depend on the
    # arithmetic path that produced the value
    return f"{z.real + 0.0:.6f}+({z.imag + 0.0:.6f})i"


def _load_matrix(path: str) -> HermMatrix:
    obj = docio.load(path)
    if not isinstance(obj, HermMatrix):
        raise docio.DocumentError("expected a hermitian matrix document")
    return obj


def cmd_dt(args) -> int:
    x = _load_matrix(args.input)
    lines = _stamp(args)
    rng = numkit.make_rng(args.seed if args.seed is not None else _default_seed())
    if x.level == 2 or x.is_biquaternionic(1e-9):
        result = dt(x, rng)
        lines.append(f"dt = {_fmt_complex(result.value)}")
        lines.append(f"route = {result.route}")
        if args.check_hat:
            lines.append(f"residual(dt^2 vs hat determinant) = {result.residual:.3e}")
            tol = args.tolerance if args.tolerance is not None else 1e-9
            lines.append(f"hat-check {'PASS' if result.residual <= tol else 'FAIL'}"
                         f" (tolerance {tol:.1e})")
    else:
        value = dt_general(x)
        lines.append(f"dt = {_fmt_complex(value)}")
        lines.append("route = spectral")
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}",
              file=sys.stderr)
        return EXIT_USAGE
    seed = args.seed if args.seed is not None else _default_seed()
    report = run_suite(args.suite, seed=seed, trials=args.trials)
    lines = _stamp(args)
    lines.append(f"suite {args.suite}  seed={seed}"
                 f"  trials={args.trials if args.trials is not None else SUITES[args.suite][1]}")
    lines.extend(report.lines())
    text = "\n".join(lines)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    return EXIT_OK if report.passed else EXIT_NUMERIC


def cmd_gen(args) -> int:
    if args.kind not in GEN_KINDS:
        print(f"unknown kind {args.kind!r}; choose from {', '.join(sorted(GEN_KINDS))}",
              file=sys.stderr)
        return EXIT_USAGE
    seed = args.seed if args.seed is not None else _default_seed()
    factory = GEN_KINDS[args.kind]
    outputs = []
    for k in range(args.count):
        rng = numkit.make_rng([seed, k])
        if args.kind == "herm-biquat":
            obj = factory(rng, order=args.order)
        else:
            obj = factory(rng)
        outputs.append(obj)
    if args.out:
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        for k, obj in enumerate(outputs):
            docio.save(obj, directory / f"{args.kind}-{seed}-{k:03d}.json")
        print(f"wrote {len(outputs)} documents to {directory}")
    else:
        for obj in outputs:
            print(docio.dumps(obj))
    return EXIT_OK


def cmd_spectral(args) -> int:
    x = _load_matrix(args.input)
    isotope = _load_matrix(args.isotope) if args.isotope else None
    res = spectral_decompose(x, isotope)
    lines = _stamp(args)
    lines.append(f"components: {len(res.eigenvalues)}")
    order = np.argsort([v.real for v in res.eigenvalues])
    for idx in order:
        value = res.eigenvalues[idx]
        mult = res.multiplicities[idx]
        comp = res.components[idx]
        diag = ", ".join(_fmt_complex(comp.entries[i, i, 0]) for i in range(3))
        lines.append(f"eigenvalue {_fmt_complex(value)}  multiplicity {mult}"
                     f"  component diag [{diag}]")
    recon = (res.reconstruct() - x.to_level3()).sup_norm()
    lines.append(f"reconstruction residual = {recon:.3e}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_reduce(args) -> int:
    u = _load_matrix(args.unitary)
    e = _load_matrix(args.diagonal)
    seed = args.seed if args.seed is not None else _default_seed()
    result = simultaneous_biq(u, e, numkit.make_rng(seed))
    lines = _stamp(args)
    lines.append("case path: " + " -> ".join(result.certificate.case_path))
    for label in sorted(result.certificate.residuals):
        lines.append(f"residual {label} = {result.certificate.residuals[label]:.3e}")
    doc = {
        "schema_version": docio.SCHEMA_VERSION,
        "kind": "reduction",
        "automorphism": docio.encode_linear_map(
            result.auto.matrix, result.auto.kind, result.auto.provenance),
        "certificate": {
            "case_path": result.certificate.case_path,
            "residuals": result.certificate.residuals,
        },
        "images": [docio.encode_element(img) for img in result.images],
    }
    payload = json.dumps(doc, indent=1)
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        lines.append(f"wrote reduction document to {args.out}")
    else:
        lines.append(payload)
    print("\n".join(lines))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "dt": cmd_dt,
        "verify": cmd_verify,
        "gen": cmd_gen,
        "spectral": cmd_spectral,
        "reduce": cmd_reduce,
    }
    try:
        return handlers[args.command](args)
    except UnsupportedInputError as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (DomainError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except JbdetError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line surface.

Subcommands dispatch to the computation modules and print plain text, JSON,
or LaTeX.  Exit codes are meant for scripted pipelines:

    0   success; any requested cross-checks passed
    1   a mathematical verification failed (pipeline disagreement, mirror
        identity violation, internal consistency assertion)
    2   invalid input (bad flags, out-of-range parameters)

JSON output is stable-ordered (sorted keys, index-ordered coefficient
arrays) so golden files can compare bytes.  The environment variable
HITCHIN_TRUNC_ORDER overrides the default truncation order of the series
pipelines; the computation modules reject orders too small to be exact.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import bundles, geometry, higgs, mirror
from .exactpoly import IntPoly, coeff_extract_x
from .geometry import ModuliParams, SpectralNumbers
from .stability import (
    Block,
    FiltrationData,
    WeightProfile,
    hm_weight,
    torus_classify,
)

__all__ = ["build_parser", "run", "main"]

EXHAUSTIVE_MIRROR_MAX_GENUS = 6
DEFAULT_MIRROR_SAMPLE = 64


def _poly_str(poly: IntPoly, latex: bool = False) -> str:
    """Ascending-power display, the convention of the Betti-number tables."""
    coeffs = poly.to_coeff_list()
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            power = "t" if i == 1 else (f"t^{{{i}}}" if latex else f"t^{i}")
            term = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


def _latex_table(rows) -> str:
    lines = ["\\begin{tabular}{ll}"]
    for key, value in rows:
        lines.append(f"{key} & {value} \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def _output(fmt: str, plain: str, payload: dict, latex: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "latex":
        print(latex)
    else:
        print(plain)


def _env_order() -> int | None:
    raw = os.environ.get("HITCHIN_TRUNC_ORDER")
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"HITCHIN_TRUNC_ORDER must be an integer, got {raw!r}")


def _cmd_poincare(args) -> int:
    order = _env_order()
    g = args.genus
    if args.space == "vector-bundles":
        pipelines = {
            "closed": lambda: bundles.poincare_N_closed(g),
            "recursion": lambda: bundles.poincare_N_recursion(g, order=order),
        }
    else:
        pipelines = {
            "closed": lambda: higgs.poincare_M_closed(g, order=order),
            "strata": lambda: higgs.poincare_M_stratified(g),
        }
    if args.via != "both" and args.via not in pipelines:
        raise ValueError(f"--via {args.via} does not apply to --space {args.space}")

    if args.via != "both":
        poly = pipelines[args.via]()
        payload = {
            "space": args.space,
            "genus": g,
            "via": args.via,
            "coeffs": poly.to_coeff_list(),
        }
        _output(args.format, _poly_str(poly), payload, f"${_poly_str(poly, latex=True)}$")
        return 0

    (name_a, make_a), (name_b, make_b) = pipelines.items()
    poly_a, poly_b = make_a(), make_b()
    if poly_a == poly_b:
        payload = {
            "space": args.space,
            "genus": g,
            "via": "both",
            "agree": True,
            "coeffs": poly_a.to_coeff_list(),
        }
        plain = f"{_poly_str(poly_a)}\n{name_a} and {name_b} agree"
        _output(args.format, plain, payload, f"${_poly_str(poly_a, latex=True)}$")
        return 0
    payload = {
        "space": args.space,
        "genus": g,
        "via": "both",
        "agree": False,
        f"coeffs_{name_a}": poly_a.to_coeff_list(),
        f"coeffs_{name_b}": poly_b.to_coeff_list(),
    }
    plain = (
        f"{name_a}: {_poly_str(poly_a)}\n"
        f"{name_b}: {_poly_str(poly_b)}\n"
        "PIPELINES DISAGREE"
    )
    latex = _latex_table([(name_a, f"${_poly_str(poly_a, latex=True)}$"),
                          (name_b, f"${_poly_str(poly_b, latex=True)}$")])
    _output(args.format, plain, payload, latex)
    return 1


def _cmd_mirror(args) -> int:
    sample = args.sample
    if sample is None and args.genus > EXHAUSTIVE_MIRROR_MAX_GENUS:
        sample = DEFAULT_MIRROR_SAMPLE
    report = mirror.mirror_verify(args.genus, sample=sample, seed=args.seed)
    payload = {
        "genus": report.genus,
        "elements_checked": report.elements_checked,
        "pass": report.passed,
        "lhs": report.lhs.to_sorted_dict(),
        "rhs_sample": report.rhs_sample.to_sorted_dict(),
    }
    plain = (
        f"genus {report.genus}: {report.elements_checked} elements checked, "
        f"{'pass' if report.passed else 'FAIL'}"
    )
    latex = _latex_table([
        ("genus", report.genus),
        ("elements checked", report.elements_checked),
        ("pass", str(report.passed).lower()),
    ])
    _output(args.format, plain, payload, latex)
    return 0


def _cmd_dims(args) -> int:
    params = ModuliParams(args.rank, args.degree, args.genus, group=args.group.upper())
    dims = {
        "bundles": geometry.moduli_dim(params, "bundles"),
        "higgs": geometry.moduli_dim(params, "higgs"),
        "hitchin_base": geometry.moduli_dim(params, "hitchin-base"),
    }
    payload = {
        "rank": params.r,
        "degree": params.d,
        "genus": params.g,
        "group": params.group,
        **dims,
    }
    header = (
        f"rank {params.r}  degree {params.d}  genus {params.g}  group {params.group}"
    )
    body = "\n".join(f"{name:<13}{value}" for name, value in dims.items())
    latex = _latex_table(
        [("rank", params.r), ("degree", params.d), ("genus", params.g),
         ("group", params.group)] + list(dims.items())
    )
    _output(args.format, f"{header}\n{body}", payload, latex)
    return 0


def _cmd_spectral(args) -> int:
    numbers: SpectralNumbers = geometry.spectral_numbers(args.rank, args.genus, args.degree)
    fields = numbers._asdict()
    payload = {"rank": args.rank, "genus": args.genus, "degree": args.degree, **fields}
    width = max(len(name) for name in fields) + 2
    plain = "\n".join(f"{name:<{width}}{value}" for name, value in fields.items())
    latex = _latex_table(list(fields.items()))
    _output(args.format, plain, payload, latex)
    return 0


def _cmd_git_classify(args) -> int:
    try:
        weights = tuple(int(w) for w in args.weights.split(",") if w.strip() != "")
    except ValueError:
        raise ValueError(f"--weights expects comma-separated integers, got {args.weights!r}")
    verdict = torus_classify(WeightProfile(weights))
    payload = {"weights": list(weights), "verdict": verdict.value}
    latex = _latex_table([("weights", ",".join(map(str, weights))),
                          ("verdict", verdict.value)])
    _output(args.format, verdict.value, payload, latex)
    return 0


def _parse_blocks(text: str) -> tuple[Block, ...]:
    blocks = []
    for chunk in text.split(","):
        pieces = chunk.split(":")
        if len(pieces) != 4:
            raise ValueError(f"--blocks expects N:a:r:d entries, got {chunk!r}")
        try:
            blocks.append(Block(*(int(p) for p in pieces)))
        except ValueError:
            raise ValueError(f"--blocks entries must be integers, got {chunk!r}")
    return tuple(blocks)


def _cmd_git_hm(args) -> int:
    filtration = FiltrationData(_parse_blocks(args.blocks), m=args.m, g=args.genus, n=args.n)
    weight = hm_weight(filtration)
    payload = {
        "blocks": [list(b) for b in filtration.blocks],
        "m": filtration.m,
        "n": filtration.n,
        "genus": filtration.g,
        "weight": weight,
    }
    latex = _latex_table([("blocks", args.blocks), ("m", filtration.m),
                          ("genus", filtration.g), ("weight", weight)])
    _output(args.format, f"weight = {weight}", payload, latex)
    return 0


def _cmd_macdonald(args) -> int:
    poly = coeff_extract_x(args.genus, args.n)
    payload = {"genus": args.genus, "n": args.n, "coeffs": poly.to_coeff_list()}
    _output(args.format, _poly_str(poly), payload, f"${_poly_str(poly, latex=True)}$")
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["plain", "json", "latex"], default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgsmoduli",
        description="Exact Betti numbers, E-polynomials, and GIT stability "
        "for rank-2 moduli of bundles and Higgs bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poincare", help="Poincare polynomial of a moduli space")
    p.add_argument("--space", choices=["vector-bundles", "higgs"], required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--via", choices=["closed", "recursion", "strata", "both"],
                   default="both")
    _add_format(p)
    p.set_defaults(func=_cmd_poincare)

    p = sub.add_parser("mirror", help="verify the rank-2 mirror-symmetry identity")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--sample", type=int, default=None,
                   help="check this many random elements instead of all "
                   f"(default: exhaustive through genus {EXHAUSTIVE_MIRROR_MAX_GENUS}, "
                   f"{DEFAULT_MIRROR_SAMPLE} samples above)")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=_cmd_mirror)

    p = sub.add_parser("dims", help="moduli and Hitchin-base dimensions")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--group", choices=["gl", "sl", "pgl"], default="sl")
    _add_format(p)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("spectral", help="spectral-curve numerology")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_spectral)

    gitp = sub.add_parser("git", help="GIT stability tools")
    gitsub = gitp.add_subparsers(dest="git_command", required=True)

    p = gitsub.add_parser("classify", help="classify a torus weight profile")
    p.add_argument("--weights", required=True, metavar="W1,W2,...")
    _add_format(p)
    p.set_defaults(func=_cmd_git_classify)

    p = gitsub.add_parser("hm", help="Hilbert-Mumford weight of a filtration")
    p.add_argument("--blocks", required=True, metavar="N:a:r:d,...")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--genus", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_git_hm)

    p = sub.add_parser("macdonald", help="Poincare polynomial of a symmetric product")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_macdonald)

    return parser


def run(argv) -> int:
    """Parse argv (without the program name) and execute; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))

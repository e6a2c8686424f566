"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 unreadable or malformed
input, 3 precondition violated (e.g. signal length not divisible).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import plotting, serialize
from .errors import InvalidArgument
from .meyer import Classical, ClassicalN2, CompositeFrequency, FrequencyDescriptor
from .synthesis import (
    DEFAULT_SAMPLES,
    DEFAULT_THRESHOLD,
    compose_banks,
    decay_profile,
    frequency_functions,
    synthesize_bank,
    tail_energy_beyond,
)
from .transform import decompose, multilevel, multilevel_reconstruct, reconstruct, zero_pad
from .verify import verify_bank

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

# A band whose l2 tail beyond this radius exceeds SLOW_DECAY_LEVEL triggers a warning.
SLOW_DECAY_RADIUS = 200
SLOW_DECAY_LEVEL = 1e-8


class InputError(Exception):
    pass


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _read_bank(path):
    try:
        return serialize.read_bank(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except serialize.FormatError as exc:
        raise InputError(str(exc)) from exc


def _read_signal(path):
    try:
        return serialize.read_signal(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except serialize.FormatError as exc:
        raise InputError(str(exc)) from exc


def _rel_err(x, y) -> float:
    nx = np.linalg.norm(x)
    return float(np.linalg.norm(x - y) / nx) if nx else float(np.linalg.norm(x - y))


def slow_bands(bank, radius: int = SLOW_DECAY_RADIUS, level: float = SLOW_DECAY_LEVEL):
    return [(f.band, t) for f in bank.filters if (t := tail_energy_beyond(f, radius)) > level]


def cmd_synthesize(args) -> int:
    classical = {"auto": None, "yes": True, "no": False}[args.classical2]
    bank = synthesize_bank(args.factor, args.samples, args.threshold, classical2=classical)
    serialize.write_bank(bank, args.out)
    print(f"{bank.provenance}: {bank.factor} bands, max tail_energy {bank.max_tail_energy:.3e} -> {args.out}")
    for band, tail in slow_bands(bank):
        print(
            f"warning: band {band} decays slowly (l2 tail beyond |n|={SLOW_DECAY_RADIUS}: {tail:.3e}); "
            f"build this factor with `compose` from smaller banks instead",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_compose(args) -> int:
    outer = _read_bank(args.outer)
    inner = _read_bank(args.inner)
    bank = compose_banks(outer, inner)
    serialize.write_bank(bank, args.out)
    print(f"{bank.provenance}: {bank.factor} bands, max tail_energy {bank.max_tail_energy:.3e} -> {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    bank = _read_bank(args.bank)
    report = verify_bank(bank, args.grid, args.tol)
    text = serialize.dumps(report.to_dict())
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAIL


def _signal_for(args, factor: int):
    x = _read_signal(args.signal)
    if args.pad == "zero":
        x = zero_pad(x, factor ** getattr(args, "levels", 1))
    return x


def cmd_decompose(args) -> int:
    bank = _read_bank(args.bank)
    x = _signal_for(args, bank.factor)
    c = decompose(x, bank)
    serialize.write_coeffs(c, args.out)
    err = _rel_err(x, reconstruct(c, bank))
    print(f"{bank.factor} bands of {c.length // c.factor} -> {args.out}; round-trip relative error {err:.3e}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    bank = _read_bank(args.bank)
    try:
        c = serialize.read_coeffs(args.coeffs)
    except OSError as exc:
        raise InputError(f"cannot read {args.coeffs}: {exc}") from exc
    except serialize.FormatError as exc:
        raise InputError(str(exc)) from exc
    x = reconstruct(c, bank)
    serialize.write_signal(x, args.out)
    print(f"{len(x)} samples -> {args.out}")
    return EXIT_OK


def cmd_multilevel(args) -> int:
    bank = _read_bank(args.bank)
    x = _signal_for(args, bank.factor)
    pyr = multilevel(x, bank, args.levels)
    serialize.write_pyramid(pyr, args.out)
    err = _rel_err(x, multilevel_reconstruct(pyr, bank))
    print(
        f"{pyr.levels} level(s), approximation of {len(pyr.approximation)} -> {args.out}; "
        f"round-trip relative error {err:.3e}"
    )
    return EXIT_OK


def cmd_decay(args) -> int:
    bank = _read_bank(args.bank)
    radii = [int(r) for r in args.radii.split(",")] if args.radii else None
    rows = {}
    for f in bank.filters:
        prof = decay_profile(f, radii)
        rows[bank.band_label(f.band)] = prof
        print(f"band {bank.band_label(f.band)}: " + "  ".join(f"{r}:{t:.2e}" for r, t in prof))
    if args.out:
        payload = {"factor": bank.factor, "provenance": bank.provenance, "bands": [
            {"band": label, "radius": [r for r, _ in prof], "tail_energy": [t for _, t in prof]}
            for label, prof in rows.items()
        ]}
        Path(args.out).write_text(serialize.dumps(payload))
    return EXIT_OK


def parse_curve(text: str) -> plotting.Curve:
    """``FUNC[=LABEL][@COLOR]`` where FUNC is one of

    ``H:N:k`` (band k of factor N), ``C2:scaling`` / ``C2:wavelet``,
    ``HC:M:N:k:l`` (composite band (k, l)) or ``const:VALUE``.
    """
    color = "black"
    if "@" in text:
        text, color = text.rsplit("@", 1)
    label = None
    if "=" in text:
        text, label = text.split("=", 1)
    parts = text.split(":")
    try:
        kind = parts[0]
        if kind == "H":
            func = FrequencyDescriptor(int(parts[1]), int(parts[2]))
        elif kind == "C2":
            func = ClassicalN2(Classical(parts[1]))
        elif kind == "HC":
            M, N, k, l = (int(p) for p in parts[1:5])
            func = CompositeFrequency(frequency_functions(M)[l], frequency_functions(N)[k], M, N)
        elif kind == "const":
            value = float(parts[1])
            func = lambda w, v=value: np.full(np.shape(w), v)  # noqa: E731
        else:
            raise ValueError(f"unknown function kind {kind!r}")
    except (IndexError, ValueError) as exc:
        raise InvalidArgument(f"bad curve spec {text!r}: {exc}") from exc
    return plotting.Curve(func, label or text, color)


def cmd_plot(args) -> int:
    if args.preset:
        spec = plotting.preset(args.preset, samples=args.samples)
    elif args.curve:
        spec = plotting.PlotSpec([parse_curve(c) for c in args.curve], samples=args.samples)
    else:
        raise InvalidArgument("give --preset or at least one --curve")
    if args.range:
        spec.range = (args.range[0] * math.pi, args.range[1] * math.pi)
    if args.mode:
        spec.mode = plotting.PlotMode(args.mode)
    spec.__post_init__()
    csv_path = plotting.write_plot(spec, args.out)
    print(f"{len(spec.curves)} curve(s) -> {args.out} (+ {csv_path})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="meyerbank", description="Meyer wavelet filter banks for integer factors.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("synthesize", help="build the Meyer bank for one factor")
    s.add_argument("--factor", type=int, required=True)
    s.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="FFT size (power of two >= 256)")
    s.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD, help="relative l2 truncation threshold")
    s.add_argument("--classical2", nargs="?", const="yes", default="auto", choices=["auto", "yes", "no"],
                   help="factor 2 only: classical pair (default) or the parity-extended construction ('no')")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("compose", help="composite M*N bank from an outer M-bank and an inner N-bank")
    s.add_argument("--inner", required=True, help="N-bank JSON (applied first)")
    s.add_argument("--outer", required=True, help="M-bank JSON")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("verify", help="modulation-matrix unitarity check")
    s.add_argument("--bank", required=True)
    s.add_argument("--grid", type=int, default=1024)
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--out", help="also write the report here")
    s.set_defaults(func=cmd_verify)

    for name, fn, helptext in (
        ("decompose", cmd_decompose, "one analysis level"),
        ("multilevel", cmd_multilevel, "repeated analysis of the approximation band"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--bank", required=True)
        s.add_argument("--signal", required=True, help="CSV, one 're' or 're,im' per line")
        s.add_argument("--pad", choices=["none", "zero"], default="none",
                       help="zero-pad to a valid length (reconstruction then covers the padded signal)")
        if name == "multilevel":
            s.add_argument("--levels", type=int, required=True)
        s.add_argument("--out", required=True)
        s.set_defaults(func=fn)

    s = sub.add_parser("reconstruct", help="synthesis from one level of coefficients")
    s.add_argument("--bank", required=True)
    s.add_argument("--coeffs", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("decay", help="l2 tail energy of each band versus radius")
    s.add_argument("--bank", required=True)
    s.add_argument("--radii", help="comma-separated radii (default 0,1,2,5,10,...)")
    s.add_argument("--out", help="JSON output")
    s.set_defaults(func=cmd_decay)

    s = sub.add_parser("plot", help="SVG plot of frequency functions plus CSV sidecar")
    s.add_argument("--preset", choices=["fig1", "fig2", "constant"])
    s.add_argument("--curve", action="append", help="FUNC[=LABEL][@COLOR], see parse_curve; repeatable")
    s.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"), help="in units of pi (default -1 1)")
    s.add_argument("--samples", type=int, default=1201)
    s.add_argument("--mode", choices=["value", "modulus"])
    s.add_argument("--out", required=True, help="SVG path; the sidecar gets a .csv suffix")
    s.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _fail(str(exc), EXIT_INPUT)
    except InvalidArgument as exc:
        return _fail(str(exc), EXIT_PRECONDITION)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())

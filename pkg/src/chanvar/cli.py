"""Command-line front end.

Subcommands:

* ``uncertainty`` -- total/quantum/classical uncertainty of a channel in a state
* ``bounds``      -- the trade-off, entropy-exchange, coherent-information and
  Fano bound reports (unsatisfied bounds are reported data, never errors)
* ``sweep``       -- CSV (or JSON) parameter sweeps over the state families,
  optionally rendered to a figure file
* ``verify``      -- the seeded property suite

States and channels are given as JSON files or ``preset:`` strings; complex
matrix entries are ``[re, im]`` pairs in row-major nested arrays.  Exit codes:
0 success, 1 verification failure, 2 malformed input, 3 violated physical
invariant.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import channels, closed_forms, infotheory, states
from .channels import KrausChannel
from .exceptions import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
    NotTracePreservingError,
    NotUnitalError,
    NotUnitaryError,
)
from .states import DensityMatrix
from .uncertainty import channel_uncertainty
from .verify import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_SCHEMA = 2
EXIT_INVARIANT = 3

INVARIANT_ERRORS = (
    NotHermitianError,
    NotPositiveError,
    NotTracePreservingError,
    NotUnitaryError,
    NotUnitalError,
    DimensionMismatchError,
)


class SchemaError(ValueError):
    """Malformed request: bad JSON, unknown preset, missing key, empty grid."""


def _fail(code: int, message: str) -> int:
    print(f"chanvar: error: {message}", file=sys.stderr)
    return code


def _parse_kv(args: str) -> dict[str, str]:
    out = {}
    if not args:
        return out
    for item in args.split(","):
        if "=" not in item:
            raise SchemaError(f"expected key=value, got {item!r}")
        key, val = item.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def _kv_float(kv: dict[str, str], key: str, default=None) -> float:
    if key not in kv:
        if default is None:
            raise SchemaError(f"preset needs parameter {key!r}")
        return default
    try:
        return float(kv.pop(key))
    except ValueError:
        raise SchemaError(f"parameter {key!r} is not a number") from None


def _kv_int(kv: dict[str, str], key: str, default=None) -> int:
    if key not in kv:
        if default is None:
            raise SchemaError(f"preset needs parameter {key!r}")
        return default
    try:
        return int(kv.pop(key))
    except ValueError:
        raise SchemaError(f"parameter {key!r} is not an integer") from None


def _no_leftover(kv: dict[str, str], what: str):
    if kv:
        raise SchemaError(f"unknown parameters for {what}: {sorted(kv)}")


def _complex_entry(x) -> complex:
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, list) and len(x) == 2 and all(isinstance(c, (int, float)) for c in x):
        return complex(x[0], x[1])
    raise SchemaError(f"matrix entries must be numbers or [re, im] pairs, got {x!r}")


def _parse_matrix(rows) -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise SchemaError("matrix must be a non-empty nested array")
    try:
        return np.array([[_complex_entry(x) for x in row] for row in rows])
    except SchemaError:
        raise
    except Exception as exc:
        raise SchemaError(f"malformed matrix: {exc}") from None


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from None


def _state_from_preset(name: str, kv: dict[str, str]) -> DensityMatrix:
    if name == "werner":
        rho = states.werner(_kv_float(kv, "p"))
    elif name == "isotropic":
        rho = states.isotropic(_kv_float(kv, "f"))
    elif name == "bloch":
        rho = states.from_bloch([_kv_float(kv, "rx", 0.0),
                                 _kv_float(kv, "ry", 0.0),
                                 _kv_float(kv, "rz", 0.0)])
    elif name == "mixed":
        rho = states.maximally_mixed(_kv_int(kv, "dim", 2))
    elif name == "pure":
        dim = _kv_int(kv, "dim", 2)
        rho = states.projector(states.basis_state(dim, _kv_int(kv, "index", 0)))
    elif name == "random":
        dim = _kv_int(kv, "dim", 2)
        rho = states.random_density(dim, rank=_kv_int(kv, "rank", dim),
                                    seed=_kv_int(kv, "seed", 0))
    else:
        raise SchemaError(f"unknown state preset {name!r}")
    _no_leftover(kv, f"state preset {name!r}")
    return rho


def _channel_from_preset(name: str, kv: dict[str, str]) -> KrausChannel:
    if name == "identity":
        phi = channels.identity_channel(_kv_int(kv, "dim", 2))
    elif name in ("amplitude-damping", "ad"):
        phi = channels.amplitude_damping(_kv_float(kv, "p"))
    elif name in ("phase-damping", "pd"):
        phi = channels.phase_damping(_kv_float(kv, "p"))
    elif name == "depolarizing":
        phi = channels.depolarizing(_kv_float(kv, "p"))
    elif name == "decoherence":
        phi = channels.hadamard_decoherence(_kv_float(kv, "theta"))
    elif name == "basis":
        phi = channels.basis_channel(_kv_int(kv, "d", 4))
    elif name == "measurement":
        d = _kv_int(kv, "d", 4)
        basis = kv.pop("basis", "computational")
        if basis == "computational":
            phi = channels.computational_measurement(d)
        elif basis == "bell":
            if d != 4:
                raise SchemaError("the Bell measurement basis needs d=4")
            phi = channels.von_neumann_measurement(states.bell_basis())
        else:
            raise SchemaError(f"unknown measurement basis {basis!r}")
    elif name == "random":
        phi = channels.random_channel(_kv_int(kv, "dim", 2),
                                      _kv_int(kv, "kraus", 2),
                                      seed=_kv_int(kv, "seed", 0))
    else:
        raise SchemaError(f"unknown channel preset {name!r}")
    _no_leftover(kv, f"channel preset {name!r}")
    return phi


def _split_preset(source: str) -> tuple[str, dict[str, str]]:
    body = source[len("preset:"):]
    name, _, args = body.partition(":")
    if not name:
        raise SchemaError("empty preset name")
    return name, _parse_kv(args)


def parse_state(source: str) -> DensityMatrix:
    """State from a ``preset:`` string or a JSON file."""
    if source.startswith("preset:"):
        return _state_from_preset(*_split_preset(source))
    doc = _load_json(source)
    if not isinstance(doc, dict):
        raise SchemaError(f"{source}: state document must be a JSON object")
    if "preset" in doc:
        kv = {k: str(v) for k, v in doc.items() if k != "preset"}
        return _state_from_preset(str(doc["preset"]), kv)
    if "bloch" in doc:
        vec = doc["bloch"]
        if not isinstance(vec, list) or len(vec) != 3:
            raise SchemaError("bloch must be a 3-element array")
        return states.from_bloch([float(c) for c in vec])
    if "matrix" in doc:
        return DensityMatrix(_parse_matrix(doc["matrix"]))
    raise SchemaError(f"{source}: state needs one of 'matrix', 'bloch', 'preset'")


def parse_channel(source: str) -> KrausChannel:
    """Channel from a ``preset:`` string or a JSON file of Kraus matrices."""
    if source.startswith("preset:"):
        return _channel_from_preset(*_split_preset(source))
    doc = _load_json(source)
    if not isinstance(doc, dict):
        raise SchemaError(f"{source}: channel document must be a JSON object")
    if "preset" in doc:
        kv = {k: str(v) for k, v in doc.items() if k != "preset"}
        return _channel_from_preset(str(doc["preset"]), kv)
    if "kraus" in doc:
        mats = doc["kraus"]
        if not isinstance(mats, list) or not mats:
            raise SchemaError("kraus must be a non-empty array of matrices")
        return KrausChannel([_parse_matrix(m) for m in mats])
    raise SchemaError(f"{source}: channel needs 'kraus' or 'preset'")


def _parse_grid(text: str) -> list[float]:
    """A single float or an inclusive ``start:stop:step`` range."""
    if ":" not in text:
        try:
            return [float(text)]
        except ValueError:
            raise SchemaError(f"not a number: {text!r}") from None
    parts = text.split(":")
    if len(parts) != 3:
        raise SchemaError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise SchemaError(f"grid must be numeric, got {text!r}") from None
    if step <= 0 or stop < start:
        raise SchemaError(f"bad grid range {text!r}")
    count = int(round((stop - start) / step))
    grid = [start + i * step for i in range(count + 1)]
    return [g for g in grid if g <= stop + 1e-12]


def _fmt(x: float) -> str:
    return repr(float(x) + 0.0)  # +0.0 folds -0.0 into 0.0


def _print_or_json(args, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_uncertainty(args) -> int:
    rho = parse_state(args.state)
    phi = parse_channel(args.channel)
    triple = channel_uncertainty(rho, phi, args.alpha, args.beta)
    lines = [
        f"total uncertainty V     = {_fmt(triple.total)}",
        f"quantum uncertainty Q   = {_fmt(triple.quantum)}",
        f"classical uncertainty C = {_fmt(triple.classical)}",
        f"decomposition residual  = {_fmt(triple.residual)}",
    ]
    payload = {
        "alpha": args.alpha, "beta": args.beta,
        "total": triple.total, "quantum": triple.quantum,
        "classical": triple.classical, "residual": triple.residual,
    }
    _print_or_json(args, lines, payload)
    return EXIT_OK


def _report_dict(report: infotheory.BoundReport) -> dict:
    return {"lhs": report.lhs, "rhs": report.rhs,
            "slack": report.slack, "satisfied": report.satisfied}


def cmd_bounds(args) -> int:
    rho = parse_state(args.state)
    phi = parse_channel(args.channel)
    reports = {
        "fidelity_tradeoff": infotheory.fidelity_tradeoff(rho, phi, args.alpha, args.beta),
        "exchange_bound": infotheory.entropy_exchange_bound(rho, phi, args.alpha, args.beta),
        "coherent_bound": infotheory.coherent_info_bound(rho, phi, args.alpha, args.beta),
        "quantum_fano": infotheory.quantum_fano(rho, phi),
    }
    lines = []
    for name, rep in reports.items():
        state = "yes" if rep.satisfied else "NO"
        lines.append(
            f"{name:18s} lhs={_fmt(rep.lhs)}  rhs={_fmt(rep.rhs)}  "
            f"slack={_fmt(rep.slack)}  satisfied={state}"
        )
    payload = {name: _report_dict(rep) for name, rep in reports.items()}
    if rho.is_pure():
        from .uncertainty import mgv_channel

        residual = 2.0 * mgv_channel(rho, phi, args.alpha, args.beta) \
            + infotheory.entanglement_fidelity(rho, phi) - 1.0
        lines.append(f"pure-state identity residual (2V + Fe - 1) = {_fmt(residual)}")
        payload["pure_state_identity_residual"] = residual
    _print_or_json(args, lines, payload)
    return EXIT_OK


FAMILIES = ("werner", "isotropic", "bloch-grid")
OUTPUT_CHOICES = ("V", "Q", "C", "Fe", "Se", "Ic", "bounds", "curves")
BOUND_COLUMNS = (
    "tradeoff_lhs", "tradeoff_rhs", "exchange", "exchange_bound",
    "coherent_floor", "coherent_bound", "fano_bound",
)
CURVE_COLUMNS = ("exchange_bound", "exchange", "coherent_bound", "coherent_floor")


def _family_state(family: str, param: float) -> DensityMatrix:
    if family == "werner":
        return states.werner(param)
    if family == "isotropic":
        return states.isotropic(param)
    return states.from_bloch([0.0, 0.0, param])


def _sweep_rows(args, outputs: list[str], phi: KrausChannel | None):
    param_grid = _parse_grid(args.param_grid)
    alpha_grid = _parse_grid(args.alpha)
    beta_grid = _parse_grid(args.beta)
    if not param_grid or not alpha_grid or not beta_grid:
        raise SchemaError("empty sweep grid")
    rows = []
    skipped = 0
    for param in param_grid:
        rho = _family_state(args.family, param)
        for alpha in alpha_grid:
            for beta in beta_grid:
                if alpha + beta > 1.0 + 1e-12:
                    skipped += 1
                    continue
                row = [param, alpha, beta]
                if any(k in outputs for k in ("V", "Q", "C")):
                    triple = channel_uncertainty(rho, phi, alpha, beta)
                    if "V" in outputs:
                        row.append(triple.total)
                    if "Q" in outputs:
                        row.append(triple.quantum)
                    if "C" in outputs:
                        row.append(triple.classical)
                if "Fe" in outputs:
                    row.append(infotheory.entanglement_fidelity(rho, phi))
                if "Se" in outputs:
                    row.append(infotheory.entropy_exchange(rho, phi))
                if "Ic" in outputs:
                    row.append(infotheory.coherent_information(rho, phi))
                if "bounds" in outputs:
                    trade = infotheory.fidelity_tradeoff(rho, phi, alpha, beta)
                    exch = infotheory.entropy_exchange_bound(rho, phi, alpha, beta)
                    coh = infotheory.coherent_info_bound(rho, phi, alpha, beta)
                    fano = infotheory.quantum_fano(rho, phi)
                    row += [trade.lhs, trade.rhs, exch.lhs, exch.rhs,
                            coh.lhs, coh.rhs, fano.rhs]
                rows.append(row)
    return rows, skipped


def _curve_rows(args):
    param_grid = _parse_grid(args.param_grid)
    if not param_grid:
        raise SchemaError("empty sweep grid")
    if args.family == "werner":
        curve = closed_forms.werner_bound_curves
    elif args.family == "isotropic":
        curve = closed_forms.isotropic_bound_curves
    else:
        raise SchemaError("curves output needs --family werner or isotropic")
    rows = []
    for param in param_grid:
        c = curve(param)
        rows.append([param, c.exchange_bound, c.exchange,
                     c.coherent_bound, c.coherent_floor])
    return rows


def cmd_sweep(args) -> int:
    outputs = [o.strip() for o in args.outputs.split(",") if o.strip()]
    unknown = [o for o in outputs if o not in OUTPUT_CHOICES]
    if unknown:
        raise SchemaError(f"unknown outputs {unknown}; choose from {OUTPUT_CHOICES}")
    if not outputs:
        raise SchemaError("no outputs requested")
    if args.family not in FAMILIES:
        raise SchemaError(f"unknown family {args.family!r}; choose from {FAMILIES}")

    if "curves" in outputs:
        if len(outputs) != 1:
            raise SchemaError("curves cannot be combined with other outputs")
        columns = ["param", *CURVE_COLUMNS]
        rows = _curve_rows(args)
        skipped = 0
    else:
        if args.channel is None:
            raise SchemaError("this sweep needs --channel")
        phi = parse_channel(args.channel)
        columns = ["param", "alpha", "beta"]
        columns += [o for o in ("V", "Q", "C", "Fe", "Se", "Ic") if o in outputs]
        if "bounds" in outputs:
            columns += list(BOUND_COLUMNS)
        rows, skipped = _sweep_rows(args, outputs, phi)

    if not rows:
        raise SchemaError("sweep produced no rows (every grid point was skipped)")
    try:
        if args.json:
            doc = {"columns": columns, "rows": rows, "skipped": skipped}
            text = json.dumps(doc, indent=2, default=float) + "\n"
        else:
            lines = [",".join(columns)]
            lines += [",".join(_fmt(x) for x in row) for row in rows]
            text = "\n".join(lines) + "\n"
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        return _fail(EXIT_SCHEMA, f"cannot write {args.out}: {exc}")
    if skipped:
        print(f"skipped {skipped} grid points with alpha + beta > 1", file=sys.stderr)
    if args.plot is not None:
        plot_path = args.plot or _default_plot_path(args.out)
        x_column = _plot_axis(columns, rows)
        from .plotting import render_sweep

        render_sweep(columns, rows, x_column, plot_path,
                     title=f"{args.family} sweep")
        print(f"wrote {plot_path}", file=sys.stderr)
    return EXIT_OK


def _default_plot_path(out: str) -> str:
    for suffix in (".csv", ".json"):
        if out.lower().endswith(suffix):
            return out[: -len(suffix)] + ".png"
    return out + ".png"


def _plot_axis(columns: list[str], rows: list[list[float]]) -> str:
    varying = [
        c for c in ("param", "alpha", "beta")
        if c in columns and len({row[columns.index(c)] for row in rows}) > 1
    ]
    if len(varying) != 1:
        raise SchemaError(
            "plotting needs exactly one varying grid axis; "
            f"these vary: {varying or 'none'}"
        )
    return varying[0]


def cmd_verify(args) -> int:
    extra = parse_channel(args.channel) if args.channel else None
    dims = []
    try:
        for part in args.dims.split(","):
            part = part.strip()
            if "-" in part and not part.startswith("-"):
                lo, hi = part.split("-", 1)
                dims += list(range(int(lo), int(hi) + 1))
            elif part:
                dims.append(int(part))
    except ValueError:
        raise SchemaError(f"malformed dimension list {args.dims!r}") from None
    if not dims:
        raise SchemaError("empty dimension list")
    try:
        results = run_suite(seed=args.seed, samples=args.samples, dims=dims,
                            extra_channel=extra)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    failed = [r for r in results if not r.passed]
    if args.json:
        payload = [
            {"property": r.name, "samples": r.samples, "failures": r.failures,
             "worst_margin": r.worst_margin, "tol": r.tol, "passed": r.passed}
            for r in results
        ]
        print(json.dumps({"seed": args.seed, "results": payload,
                          "passed": not failed}, indent=2))
    else:
        print(f"{'property':36s} {'samples':>7s} {'failures':>8s} {'worst margin':>14s}")
        for r in results:
            flag = "PASS" if r.passed else "FAIL"
            print(f"{r.name:36s} {r.samples:7d} {r.failures:8d} "
                  f"{r.worst_margin:+14.3e}  {flag}")
        verdict = "FAIL" if failed else "PASS"
        print(f"RESULT: {verdict} ({len(results)} properties, "
              f"{sum(r.failures for r in failed)} failing samples)")
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chanvar",
        description="Uncertainty of quantum channels: totals, decompositions, "
                    "information-theoretic bounds, sweeps and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_eval_args(p):
        p.add_argument("--state", required=True,
                       help="state JSON file or preset:name[:k=v,...]")
        p.add_argument("--channel", required=True,
                       help="channel JSON file or preset:name[:k=v,...]")
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p_unc = sub.add_parser("uncertainty",
                           help="total/quantum/classical uncertainty")
    add_eval_args(p_unc)
    p_unc.set_defaults(func=cmd_uncertainty)

    p_bounds = sub.add_parser("bounds", help="trade-off and bound reports")
    add_eval_args(p_bounds)
    p_bounds.set_defaults(func=cmd_bounds)

    p_sweep = sub.add_parser("sweep", help="grid sweeps to CSV/JSON")
    p_sweep.add_argument("--family", required=True,
                         help="werner | isotropic | bloch-grid")
    p_sweep.add_argument("--channel", help="channel JSON file or preset string")
    p_sweep.add_argument("--param-grid", required=True,
                         help="family parameter grid start:stop:step")
    p_sweep.add_argument("--alpha", default="0:1:0.01",
                         help="value or grid start:stop:step (default 0:1:0.01)")
    p_sweep.add_argument("--beta", default="0:1:0.01",
                         help="value or grid start:stop:step (default 0:1:0.01)")
    p_sweep.add_argument("--outputs", default="V,Q,C",
                         help=f"comma list from {OUTPUT_CHOICES}")
    p_sweep.add_argument("--out", required=True, help="output file path")
    p_sweep.add_argument("--plot", nargs="?", const="", default=None,
                         help="also render a figure (optional path)")
    p_sweep.add_argument("--json", action="store_true",
                         help="write JSON instead of CSV")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the property suite")
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--samples", type=int, default=500)
    p_verify.add_argument("--dims", default="2,3,4",
                          help="comma list or ranges, e.g. 2,3,4 or 2-4")
    p_verify.add_argument("--channel", default=None,
                          help="extra channel file to exercise in the bound checks")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        return _fail(EXIT_SCHEMA, str(exc))
    except INVARIANT_ERRORS as exc:
        return _fail(EXIT_INVARIANT, f"{type(exc).__name__}: {exc}")
    except ValueError as exc:
        return _fail(EXIT_INVARIANT, f"invariant violation: {exc}")


if __name__ == "__main__":
    sys.exit(main())

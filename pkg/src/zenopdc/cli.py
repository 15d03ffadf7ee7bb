"""Command-line interface: simulate | classify | sweep | dressed-check | ridge.

Every command reads an optional flat JSON config (``--config``, path or the
bundled names fig2/fig3) and lets flags override config values.  Reports are
JSON on stdout unless ``--out`` redirects them to a file; sweep and ridge can
also emit CSV.  All artifacts are byte-deterministic, including across
``--threads`` settings.

Exit codes: 0 success; 2 invalid parameters/config/range; 3 engine-parameter
mismatch (closed-form engine off its domain, classification at kappa = 0);
4 sweep finished but some cells failed; 5 dressed-frame cross-check exceeded
its tolerance.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from .closed_forms import coupled_matched_occupations, n_s_mismatched_uncoupled
from .dressed import propagate_dressed, qpm_comparison
from .dynamics import check_symplectic, propagate_exact, propagate_ode, vacuum_occupations
from .params import (
    CouplerError,
    CouplerParams,
    DomainError,
    InvalidParameterError,
)
from .regimes import classify_regime
from .sweeps import (
    ENGINE_NUMERIC,
    ENGINES,
    SweepAxis,
    SweepGrid,
    SweepSpec,
    find_anti_zeno_ridge,
    ridge_linearity,
    sweep_2d,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_CELL_FAILURES = 4
EXIT_DRESSED_MISMATCH = 5

DRESSED_CHECK_TOL = 1e-8

_PARAM_DEFAULTS = {"gamma": 0.5, "kappa": 0.0, "delta": 0.0, "length": 1.0}
_PARAM_NAMES = ("gamma", "kappa", "delta", "length")
_BUNDLED_CONFIGS = {
    "fig2": "fig2.json",
    "fig2.json": "fig2.json",
    "fig3": "fig3.json",
    "fig3.json": "fig3.json",
}
#: Result keys a sweep artifact carries beyond its spec; ignored on re-ingest
#: so that a sweep's JSON output is itself a valid config.
_SWEEP_RESULT_KEYS = frozenset({"values", "provenance", "failures"})


# ---------------------------------------------------------------- config I/O


def _read_config(spec: str) -> dict:
    path = Path(spec)
    if path.exists():
        text = path.read_text()
    else:
        bundled = _BUNDLED_CONFIGS.get(spec)
        if bundled is None:
            raise InvalidParameterError(f"config not found: {spec}")
        text = resources.files("zenopdc").joinpath("configs", bundled).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidParameterError("config must be a JSON object")
    return data


def _check_keys(data: dict, allowed: set, what: str, ignored: frozenset = frozenset()) -> None:
    unknown = set(data) - allowed - ignored
    if unknown:
        raise InvalidParameterError(f"unknown {what} keys: {sorted(unknown)}")


def _merge_params(args, config: dict) -> CouplerParams:
    """Resolve gamma/kappa/delta/length from flags > config > defaults."""
    values = {}
    for name in _PARAM_NAMES:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
        elif name in config:
            values[name] = config[name]
        else:
            values[name] = _PARAM_DEFAULTS[name]
    return CouplerParams(**values)


def _resolve(args, config: dict, key: str, default):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    return config.get(key, default)


# ------------------------------------------------------------- serialization


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_text(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def _params_echo(params: CouplerParams) -> dict:
    return {name: getattr(params, name) for name in _PARAM_NAMES}


def _require_json_format(fmt: str, command: str) -> None:
    if fmt != "json":
        raise InvalidParameterError(f"{command} supports only --format json, got {fmt!r}")


def _sweep_json_text(grid: SweepGrid) -> str:
    spec = grid.spec
    doc = {
        "engine": spec.engine,
        "fixed": _params_echo(spec.fixed),
        "axis1": {"name": spec.axis1.name, "start": spec.axis1.start,
                  "stop": spec.axis1.stop, "count": spec.axis1.count},
        "axis2": {"name": spec.axis2.name, "start": spec.axis2.start,
                  "stop": spec.axis2.stop, "count": spec.axis2.count},
        "values": grid.values,
        "provenance": grid.provenance,
        "failures": grid.failures,
    }
    return _json_text(doc)


def _sweep_csv_text(grid: SweepGrid) -> str:
    a1 = grid.spec.axis1.grid()
    a2 = grid.spec.axis2.grid()
    lines = ["axis1,axis2,n_s,engine"]
    for i in range(grid.spec.axis1.count):
        for j in range(grid.spec.axis2.count):
            lines.append(
                f"{float(a1[i])!r},{float(a2[j])!r},"
                f"{float(grid.values[i, j])!r},{grid.provenance[i, j]}"
            )
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ commands


def cmd_simulate(args) -> int:
    config = _read_config(args.config) if args.config else {}
    _check_keys(config, {*_PARAM_NAMES, "engine", "out", "format"}, "config")
    params = _merge_params(args, config)
    engine = _resolve(args, config, "engine", "exact")
    out = _resolve(args, config, "out", None)
    fmt = _resolve(args, config, "format", "json")
    _require_json_format(fmt, "simulate")
    if engine not in ("exact", "ode", "closed-form"):
        raise InvalidParameterError(
            f"engine must be exact, ode, or closed-form, got {engine!r}"
        )

    branch = None
    residual = None
    if engine == "closed-form":
        if params.delta == 0.0:
            n_s, n_i, n_b, branch = coupled_matched_occupations(
                params.gamma, params.kappa, params.length
            )
        elif params.kappa == 0.0:
            result = n_s_mismatched_uncoupled(params.gamma, params.delta, params.length)
            n_s, n_i, n_b, branch = result.n_s, result.n_s, 0.0, result.branch
        else:
            raise DomainError(
                "closed-form engine requires delta = 0 or kappa = 0; "
                "use --engine exact (or ode) for the general case"
            )
    else:
        bmap = propagate_exact(params) if engine == "exact" else propagate_ode(params)
        occ = vacuum_occupations(bmap)
        n_s, n_i, n_b = occ.n_s, occ.n_i, occ.n_b
        residual = check_symplectic(bmap)

    report = {
        "command": "simulate",
        "engine": engine,
        "params": _params_echo(params),
        "n_s": n_s,
        "n_i": n_i,
        "n_b": n_b,
        "symplectic_residual": residual,
        "branch": branch,
    }
    _emit(_json_text(report), out)
    return EXIT_OK


def cmd_classify(args) -> int:
    config = _read_config(args.config) if args.config else {}
    _check_keys(config, {*_PARAM_NAMES, "out", "format"}, "config")
    params = _merge_params(args, config)
    out = _resolve(args, config, "out", None)
    fmt = _resolve(args, config, "format", "json")
    _require_json_format(fmt, "classify")
    report = classify_regime(params)
    doc = {
        "command": "classify",
        "params": _params_echo(params),
        "coefficients": {
            "c2": report.coefficients.c2,
            "c1": report.coefficients.c1,
            "c0": report.coefficients.c0,
        },
        "discriminant": report.discriminant,
        "regime": report.regime,
        "roots": [[z.real, z.imag] for z in report.roots],
        "boundary_kappas": list(report.boundary_kappas) if report.boundary_kappas else None,
    }
    if report.boundary_kappas:
        k1, k2 = report.boundary_kappas
        window = f"; hyperbolic window kappa in ({k2:.6g}, {k1:.6g})"
    else:
        window = ""
    print(
        f"regime: {report.regime} (discriminant {report.discriminant:.6g}){window}",
        file=sys.stderr,
    )
    _emit(_json_text(doc), out)
    return EXIT_OK


def _sweep_spec_from(args) -> tuple[SweepSpec, int]:
    config = _read_config(args.config) if args.config else {}
    _check_keys(
        config,
        {"fixed", "axis1", "axis2", "engine", "out", "format", "threads"},
        "config",
        ignored=_SWEEP_RESULT_KEYS,
    )
    fixed_cfg = dict(config.get("fixed", {}))
    _check_keys(fixed_cfg, {*_PARAM_NAMES, "tol_sym", "tol_phys"}, "fixed")
    for name in _PARAM_NAMES:
        flag = getattr(args, name, None)
        if flag is not None:
            fixed_cfg[name] = flag
        elif name not in fixed_cfg:
            fixed_cfg[name] = _PARAM_DEFAULTS[name]
    fixed = CouplerParams(**fixed_cfg)

    axes = []
    for key in ("axis1", "axis2"):
        axis_cfg = config.get(key)
        if not isinstance(axis_cfg, dict):
            raise InvalidParameterError(f"sweep config must define {key} as an object")
        _check_keys(axis_cfg, {"name", "start", "stop", "count"}, key)
        try:
            axes.append(SweepAxis(**axis_cfg))
        except TypeError as exc:
            raise InvalidParameterError(f"{key} is incomplete: {exc}") from exc

    engine = _resolve(args, config, "engine", ENGINE_NUMERIC)
    threads = _resolve(args, config, "threads", 1)
    if not isinstance(threads, int) or threads < 1:
        raise InvalidParameterError(f"threads must be a positive integer, got {threads!r}")
    return SweepSpec(fixed=fixed, axis1=axes[0], axis2=axes[1], engine=engine), threads


def cmd_sweep(args) -> int:
    spec, threads = _sweep_spec_from(args)
    config = _read_config(args.config) if args.config else {}
    out = _resolve(args, config, "out", None)
    fmt = _resolve(args, config, "format", "json")
    if fmt not in ("json", "csv"):
        raise InvalidParameterError(f"format must be json or csv, got {fmt!r}")
    grid = sweep_2d(spec, threads=threads)
    text = _sweep_csv_text(grid) if fmt == "csv" else _sweep_json_text(grid)
    _emit(text, out)
    if grid.failures:
        print(f"{grid.failures} grid cells failed (tagged NaN)", file=sys.stderr)
        return EXIT_CELL_FAILURES
    return EXIT_OK


def cmd_dressed_check(args) -> int:
    config = _read_config(args.config) if args.config else {}
    _check_keys(config, {*_PARAM_NAMES, "seed", "out", "format"}, "config")
    out = _resolve(args, config, "out", None)
    fmt = _resolve(args, config, "format", "json")
    _require_json_format(fmt, "dressed-check")
    seed = _resolve(args, config, "seed", None)
    if seed is not None:
        rng = np.random.default_rng(int(seed))
        params = CouplerParams(
            gamma=rng.uniform(0.05, 1.5),
            kappa=rng.uniform(0.0, 10.0),
            delta=rng.uniform(-10.0, 10.0),
            length=rng.uniform(0.0, 3.0),
        )
    else:
        params = _merge_params(args, config)
    direct = vacuum_occupations(propagate_exact(params))
    dressed = propagate_dressed(params)
    residual = max(
        abs(direct.n_s - dressed.n_s),
        abs(direct.n_i - dressed.n_i),
        abs(direct.n_b - dressed.n_b),
    )
    if params.gamma > 0.0:
        resonant, qpm = qpm_comparison(params.gamma)
        qpm_doc = {"resonant_gain": resonant, "qpm_gain": qpm, "ratio": resonant / qpm}
    else:
        qpm_doc = None
    passed = residual <= DRESSED_CHECK_TOL
    report = {
        "command": "dressed-check",
        "params": _params_echo(params),
        "direct": {"n_s": direct.n_s, "n_i": direct.n_i, "n_b": direct.n_b},
        "dressed": {"n_s": dressed.n_s, "n_i": dressed.n_i, "n_b": dressed.n_b},
        "residual": residual,
        "tolerance": DRESSED_CHECK_TOL,
        "passed": passed,
        "qpm": qpm_doc,
    }
    _emit(_json_text(report), out)
    return EXIT_OK if passed else EXIT_DRESSED_MISMATCH


def _parse_deltas(spec: str) -> list[float]:
    """Parse --delta for ridge: a single value or min:max:count."""
    parts = spec.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) == 3:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1 or not lo < hi:
            raise InvalidParameterError(f"bad delta range {spec!r}: need min < max and count >= 1")
        return [float(x) for x in np.linspace(lo, hi, count)]
    raise InvalidParameterError(f"bad delta range {spec!r}: use VALUE or MIN:MAX:COUNT")


def cmd_ridge(args) -> int:
    config = _read_config(args.config) if args.config else {}
    _check_keys(config, {"gamma", "length", "deltas", "out", "format"}, "config")
    out = _resolve(args, config, "out", None)
    fmt = _resolve(args, config, "format", "json")
    if fmt not in ("json", "csv"):
        raise InvalidParameterError(f"format must be json or csv, got {fmt!r}")
    gamma = _resolve(args, config, "gamma", 0.5)
    length = _resolve(args, config, "length", 1.5)
    if args.delta is not None:
        deltas = _parse_deltas(args.delta)
    elif "deltas" in config:
        deltas = [float(d) for d in config["deltas"]]
    else:
        raise InvalidParameterError("ridge needs --delta MIN:MAX:COUNT or config 'deltas'")

    points = find_anti_zeno_ridge(gamma, length, deltas)
    fit = None
    if len(points) >= 3:
        slope, intercept, max_residual = ridge_linearity(points)
        fit = {"slope": slope, "intercept": intercept, "max_residual": max_residual}
    if fmt == "csv":
        lines = ["delta,kappa_opt,n_s_max"]
        for p in points:
            lines.append(f"{p.delta!r},{p.kappa_opt!r},{p.n_s_max!r}")
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(
            {
                "command": "ridge",
                "gamma": gamma,
                "length": length,
                "points": [
                    {"delta": p.delta, "kappa_opt": p.kappa_opt, "n_s_max": p.n_s_max}
                    for p in points
                ],
                "fit": fit,
            }
        )
    _emit(text, out)
    return EXIT_OK


# -------------------------------------------------------------------- parser


def _add_common(sub: argparse.ArgumentParser, length: bool = True) -> None:
    sub.add_argument("--gamma", type=float, help="downconversion gain (1/length)")
    sub.add_argument("--kappa", type=float, help="idler-probe coupling (1/length)")
    sub.add_argument("--delta", type=float, help="pump phase mismatch (1/length)")
    if length:
        sub.add_argument("--length", type=float, help="interaction length")
    sub.add_argument("--config", help="JSON config file (or bundled: fig2, fig3)")
    sub.add_argument("--out", help="write the report/artifact to this path")
    sub.add_argument("--format", choices=("json", "csv"), help="artifact format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zenopdc",
        description="Photon-pair generation in a probed nonlinear coupler",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="occupations for one parameter point")
    _add_common(p)
    p.add_argument("--engine", choices=("exact", "ode", "closed-form"),
                   help="propagation engine (default exact)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("classify", help="dynamical regime from the frequency cubic")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="2-D grid of signal occupations")
    _add_common(p)
    p.add_argument("--engine", choices=ENGINES, help="per-cell engine policy")
    p.add_argument("--threads", type=int, help="worker threads (output is identical)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("dressed-check", help="cross-validate the dressed-frame route")
    _add_common(p)
    p.add_argument("--seed", type=int, help="draw random parameters instead of flags")
    p.set_defaults(func=cmd_dressed_check)

    p = sub.add_parser("ridge", help="track the anti-Zeno ridge kappa_opt(delta)")
    p.add_argument("--gamma", type=float, help="downconversion gain (1/length)")
    p.add_argument("--length", type=float, help="interaction length")
    p.add_argument("--delta", help="mismatch values: VALUE or MIN:MAX:COUNT")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--out", help="write the report/artifact to this path")
    p.add_argument("--format", choices=("json", "csv"), help="artifact format")
    p.set_defaults(func=cmd_ridge)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except CouplerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end: solve, degree sweeps, and field exports.

Outputs are deterministic: floats are serialized with 17 significant digits
and no locale dependence, so identical configs give byte-identical files.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .aaa import AaaOptions
from .barycentric import poles as bary_poles, zeros as bary_zeros
from .fieldmap import (capacity_bound, default_bbox, grid_csv_lines,
                       magnitude_field, sign_distance_fields)
from .geometry import (Arc, Circle, Ellipse, GeometryError, GradedRay,
                       Interval, Polyline, Transform, build_sample_set,
                       PRESETS)
from .lawson import LawsonOptions
from .zolotarev import ProblemSpec, degree_sweep, solve

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# config parsing

def _complex_from(obj, what):
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return complex(float(obj[0]), float(obj[1]))
    raise ConfigError(f"{what}: expected a number or [re, im] pair, got {obj!r}")


def _shape_from_json(obj):
    if not isinstance(obj, dict) or "type" not in obj:
        raise ConfigError(f"shape must be an object with a 'type' key: {obj!r}")
    kind = obj["type"]
    try:
        if kind == "circle":
            return Circle(_complex_from(obj["center"], "circle.center"),
                          float(obj["radius"]), int(obj["count"]))
        if kind == "interval":
            return Interval(_complex_from(obj["endpoint_a"], "interval.endpoint_a"),
                            _complex_from(obj["endpoint_b"], "interval.endpoint_b"),
                            int(obj["count"]))
        if kind == "ellipse":
            return Ellipse(_complex_from(obj["center"], "ellipse.center"),
                           float(obj["semi_x"]), float(obj["semi_y"]),
                           float(obj.get("rotation", 0.0)), int(obj["count"]))
        if kind == "arc":
            return Arc(_complex_from(obj["center"], "arc.center"),
                       float(obj["radius"]), float(obj["angle_start"]),
                       float(obj["angle_end"]), int(obj["count"]))
        if kind == "polyline":
            counts = obj["count_per_side"]
            if not isinstance(counts, int):
                counts = tuple(int(c) for c in counts)
            return Polyline(tuple(_complex_from(v, "polyline.vertex")
                                  for v in obj["vertices"]),
                            counts, bool(obj.get("closed", False)))
        if kind == "graded_ray":
            return GradedRay(_complex_from(obj["anchor"], "graded_ray.anchor"),
                             float(obj["decade_start"]), float(obj["decade_end"]),
                             int(obj["count"]))
        if kind == "transform":
            return Transform(_shape_from_json(obj["inner"]),
                             _complex_from(obj["scale"], "transform.scale"),
                             _complex_from(obj["shift"], "transform.shift"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad {kind!r} shape: {exc}") from exc
    raise ConfigError(f"unknown shape type {kind!r}")


class RunConfig:
    def __init__(self, samples, degree, lawson_steps, damping, sign_blend,
                 capacity):
        self.samples = samples
        self.degree = degree
        self.lawson_steps = lawson_steps
        self.damping = damping
        self.sign_blend = sign_blend
        self.capacity = capacity

    def problem_spec(self, degree=None) -> ProblemSpec:
        n = self.degree if degree is None else degree
        return ProblemSpec(
            samples=self.samples, degree=n,
            aaa_opts=AaaOptions(degree=n, sign_blend=self.sign_blend),
            lawson_opts=LawsonOptions(steps=self.lawson_steps, delta=self.damping),
        )


def load_config(args) -> RunConfig:
    doc = {}
    if args.config is not None:
        try:
            doc = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed JSON config: {exc}") from exc
        if not isinstance(doc, dict):
            raise ConfigError("config root must be a JSON object")

    preset_name = args.preset or doc.get("preset")
    preset = None
    if preset_name is not None:
        if preset_name not in PRESETS:
            raise ConfigError(f"unknown preset {preset_name!r}; available: "
                              + ", ".join(sorted(PRESETS)))
        preset = PRESETS[preset_name]
        samples = build_sample_set(preset.shapes_E, preset.shapes_F)
    elif "geometry" in doc:
        geo = doc["geometry"]
        if not isinstance(geo, dict) or "E" not in geo or "F" not in geo:
            raise ConfigError("geometry must be an object with 'E' and 'F' lists")
        samples = build_sample_set([_shape_from_json(s) for s in geo["E"]],
                                   [_shape_from_json(s) for s in geo["F"]])
    else:
        raise ConfigError("no geometry: give --preset or a config with "
                          "'preset' or 'geometry'")

    def pick(cli_value, key, default):
        if cli_value is not None:
            return cli_value
        if key in doc:
            return doc[key]
        return default

    degree = int(pick(args.degree, "degree", preset.degree if preset else 12))
    steps = int(pick(getattr(args, "lawson_steps", None), "lawson_steps",
                     preset.lawson_steps if preset else 200))
    damping = float(pick(getattr(args, "damping", None), "damping",
                         preset.damping if preset else 0.95))
    sign_blend = bool(pick(getattr(args, "sign_blend", None), "sign_blend", True))
    capacity = pick(getattr(args, "capacity", None), "capacity", None)
    if capacity is not None:
        capacity = float(capacity)
        if capacity <= 0:
            raise ConfigError("capacity must be positive")
    if degree < 0 or steps < 0 or not (0 < damping <= 1):
        raise ConfigError("degree/lawson_steps must be >= 0 and damping in (0, 1]")
    return RunConfig(samples, degree, steps, damping, sign_blend, capacity)


# ---------------------------------------------------------------------------
# deterministic serialization

def _fmt(x: float) -> str:
    return "%.17g" % float(x)


def _dump_json(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_dump_json(v, indent + 1)}'
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}  {_dump_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{_fmt(obj.real)}, {_fmt(obj.imag)}]"
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)}")


def _complex_list(arr) -> list:
    return [complex(z) for z in np.asarray(arr).ravel()]


def _write_out(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_solve(args) -> int:
    cfg = load_config(args)
    z4, z3 = solve(cfg.problem_spec())
    doc = {
        "degree": cfg.degree,
        "tau": z4.tau,
        "sigma": z3.sigma if z3 else None,
        "p": z3.p if z3 else None,
        "support_points": _complex_list(z4.r_hat.nodes),
        "node_values": _complex_list(z4.r_hat.values),
        "weights": _complex_list(z4.r_hat.weights),
        "poles_rstar": _complex_list(z3.poles) if z3 else [],
        "zeros_rstar": _complex_list(z3.zeros) if z3 else [],
        "poles_rhat": _complex_list(bary_poles(z4.r_hat)),
        "zeros_rhat": _complex_list(bary_zeros(z4.r_hat)),
        "min_on_F": z3.min_on_F if z3 else None,
        "max_on_E": z3.max_on_E if z3 else None,
        "tau_history": [float(t) for t in z4.tau_history],
        "warnings": list(z4.warnings),
    }
    _write_out(_dump_json(doc) + "\n", args.out)
    if args.verbose:
        for i, t in enumerate(z4.tau_history):
            print(f"step {i}: tau = {t:.6e}", file=sys.stderr)
    return 0


def _parse_degrees(spec: str) -> list:
    spec = spec.strip()
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        degrees = list(range(int(lo), int(hi) + 1))
    else:
        degrees = [int(tok) for tok in spec.split(",") if tok.strip()]
    if not degrees:
        raise ConfigError("empty degree list")
    return degrees


def cmd_sweep(args) -> int:
    cfg = load_config(args)
    degrees = _parse_degrees(args.degrees)
    entries = degree_sweep(
        cfg.samples, degrees,
        aaa_opts=AaaOptions(degree=degrees[0], sign_blend=cfg.sign_blend),
        lawson_opts=LawsonOptions(steps=cfg.lawson_steps, delta=cfg.damping),
    )
    header = "n,tau,sigma"
    if cfg.capacity is not None:
        header += ",lower_bound"
    lines = [header]
    for e in entries:
        if e.error is not None:
            continue
        row = f"{e.degree},{_fmt(e.tau)},{_fmt(e.sigma)}"
        if cfg.capacity is not None:
            row += f",{_fmt(capacity_bound(e.degree, cfg.capacity))}"
        lines.append(row)
    _write_out("\n".join(lines) + "\n", args.out)
    for e in entries:
        if e.error is not None:
            print(f"degree {e.degree} failed: {e.error}", file=sys.stderr)
    if args.plot is not None:
        _plot_sweep(entries, cfg.capacity, args.plot)
    return 0


def _plot_sweep(entries, capacity, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [e.degree for e in entries if e.error is None]
    sig = [e.sigma for e in entries if e.error is None]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, sig, "o-", label="computed ratio value")
    if capacity is not None:
        bound = [capacity_bound(n, capacity) for n in ns]
        ax.semilogy(ns, bound, "k--", label="capacity lower bound")
    ax.set_xlabel("degree n")
    ax.set_ylabel("sigma")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _parse_floats(text, n, what):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != n:
        raise ConfigError(f"{what}: expected {n} comma-separated values")
    return [float(p) for p in parts]


def cmd_field(args) -> int:
    cfg = load_config(args)
    z4, z3 = solve(cfg.problem_spec())
    if args.mode == "ratio" and z3 is None:
        print("error: tau >= 1, ratio field unavailable", file=sys.stderr)
        return EXIT_NUMERICAL
    bbox = (tuple(_parse_floats(args.bbox, 4, "--bbox")) if args.bbox
            else default_bbox(cfg.samples))
    nx, ny = ((int(v) for v in _parse_floats(args.res, 2, "--res"))
              if args.res else (400, 300))
    out = Path(args.out)
    written = []
    if args.mode == "ratio":
        grid = magnitude_field(z3, bbox, nx, ny)
        grids = [(out, grid)]
    else:
        gp, gm = sign_distance_fields(z4.r_hat, bbox, nx, ny)
        grids = [(out.with_name(out.stem + "-dist-plus1" + out.suffix or ".csv"), gp),
                 (out.with_name(out.stem + "-dist-minus1" + out.suffix or ".csv"), gm)]
    for path, grid in grids:
        path.write_text("\n".join(grid_csv_lines(grid)) + "\n")
        written.append(path)
        if args.format == "svg":
            svg = path.with_suffix(".svg")
            _plot_field(grid, cfg.samples, args.levels, svg)
            written.append(svg)
    for p in written:
        print(p, file=sys.stderr)
    return 0


def _plot_field(grid, samples, levels_mode, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    step = 1.0 if levels_mode == "unit" else 1.0 / 3.0
    vmin = float(np.min(grid.values))
    levels = np.arange(np.ceil(vmin / step) * step, 0.0, step)
    if len(levels) == 0:
        levels = np.array([vmin / 2])
    fig, ax = plt.subplots(figsize=(6, 5))
    ax.contour(grid.x, grid.y, grid.values.T, levels=levels,
               linewidths=0.7, cmap="viridis")
    ax.plot(samples.points_E.real, samples.points_E.imag, ".",
            color="0.3", markersize=1.5)
    ax.plot(samples.points_F.real, samples.points_F.imag, ".",
            color="0.6", markersize=1.5)
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zolo",
        description="Minimax rational sign approximation and extremal "
                    "ratio functions on two complex sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config path")
        p.add_argument("--preset", help="named preset geometry "
                                        "(fig1a..fig3d, fig5, fig6, fig7)")
        p.add_argument("--degree", type=int, default=None)
        p.add_argument("--lawson-steps", dest="lawson_steps", type=int,
                       default=None)
        p.add_argument("--damping", type=float, default=None)
        blend = p.add_mutually_exclusive_group()
        blend.add_argument("--sign-blend", dest="sign_blend",
                           action="store_true", default=None)
        blend.add_argument("--no-sign-blend", dest="sign_blend",
                           action="store_false")
        p.add_argument("--capacity", type=float, default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--verbose", action="store_true")

    p_solve = sub.add_parser("solve", help="solve one problem, emit JSON")
    common(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_sweep = sub.add_parser("sweep", help="sweep degrees, emit CSV")
    common(p_sweep)
    p_sweep.add_argument("--degrees", required=True,
                         help="A..B range or comma-separated list")
    p_sweep.add_argument("--plot", default=None,
                         help="also save a convergence figure to this path")
    p_sweep.set_defaults(func=cmd_sweep)

    p_field = sub.add_parser("field", help="evaluate contour-field grids")
    common(p_field)
    p_field.add_argument("--mode", choices=["ratio", "sign"], default="ratio")
    p_field.add_argument("--bbox", default=None, help="x0,x1,y0,y1")
    p_field.add_argument("--res", default=None, help="NX,NY (default 400,300)")
    p_field.add_argument("--format", choices=["csv", "svg"], default="csv",
                         help="svg additionally renders contour figures")
    p_field.add_argument("--levels", choices=["unit", "thirds"], default="unit")
    p_field.set_defaults(func=cmd_field)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "field" and args.out is None:
        print("error: field requires --out", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except (ConfigError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

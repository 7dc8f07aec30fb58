"""Command-line interface.

Subcommands:

    forward      synthesize near-field data, write data.csv + grid.json
    reconstruct  full pipeline for one method, write reconstructions + summary
    sweep-noise  (delta, seed) error table for a noise study
    validate     run the correctness oracles, nonzero exit on failure

Every flag overrides its counterpart in the JSON config given by --config.
Exit codes: 0 success, 1 configuration error (including bad usage),
2 validation failure, 3 reconstruction degeneracy.
"""

import argparse
import json
import sys

from .exceptions import ConfigurationError, DegenerateReconstructionError
from .experiment import (ExperimentConfig, config_from_dict, run_experiment, sweep_noise,
                         synthesize_data, validate)
from .forward import dirichlet_data
from . import io

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for validation failures
    def error(self, message):
        raise ConfigurationError(message)


def _add_common(p):
    p.add_argument("--config", help="JSON experiment config")
    p.add_argument("--source", help="source profile id (f1..f5)")
    p.add_argument("--k", help="comma-separated wavenumbers to run, e.g. 0.5 or 0.99,1.99")
    p.add_argument("--truncation", type=int, help="reconstruction truncation order N")
    p.add_argument("--noise-delta", type=float, help="multiplicative noise level")
    p.add_argument("--seed", type=int, help="noise seed")
    p.add_argument("--k-shift", type=float,
                   help="shift every selected wavenumber by this amount")
    p.add_argument("--paper-faithful-degeneracy", action="store_true", default=None,
                   help="treat near-zero mode exponents as failed modes")
    p.add_argument("--out", help="output directory")


def build_parser():
    parser = _Parser(prog="helmsource",
                     description="Multi-frequency near-field synthesis and source reconstruction "
                                 "for the 2-D Helmholtz equation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forward", help="synthesize near-field data")
    _add_common(p)
    p.add_argument("--with-neumann", action="store_true",
                   help="append Dirichlet-to-Neumann columns to the data CSV")

    p = sub.add_parser("reconstruct", help="run the reconstruction pipeline")
    p.add_argument("--method", choices=("dl", "ft"), help="reconstruction method")
    _add_common(p)

    p = sub.add_parser("sweep-noise", help="noise study over (delta, seed) cells")
    _add_common(p)
    p.add_argument("--deltas", help="comma-separated noise levels")
    p.add_argument("--truncations", help="comma-separated N, one per delta")
    p.add_argument("--num-seeds", type=int, default=20, help="seeds 0..n-1 (default 20)")
    p.add_argument("--workers", type=int, default=1, help="parallel sweep processes")
    p.add_argument("--method", choices=("dl", "ft"), help="reconstruction method")

    p = sub.add_parser("validate", help="run the correctness oracles")
    _add_common(p)
    return parser


def _load_config(args) -> ExperimentConfig:
    doc = {}
    if args.config:
        try:
            with open(args.config) as f:
                doc = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigurationError(f"cannot read config {args.config}: {exc}") from exc
    if getattr(args, "method", None):
        doc["method"] = args.method
    if args.source:
        doc.setdefault("source", {})["profile"] = args.source
    if args.k:
        try:
            doc["k_select"] = [float(v) for v in args.k.split(",")]
        except ValueError as exc:
            raise ConfigurationError(f"bad --k list {args.k!r}") from exc
    if args.truncation is not None:
        doc["truncation"] = args.truncation
    if args.noise_delta is not None:
        doc.setdefault("noise", {})["delta"] = args.noise_delta
    if args.seed is not None:
        doc.setdefault("noise", {})["seed"] = args.seed
    if args.k_shift is not None:
        doc["k_shift"] = args.k_shift
    if args.paper_faithful_degeneracy is not None:
        doc["paper_faithful_degeneracy"] = args.paper_faithful_degeneracy
    if args.out:
        doc["output_dir"] = args.out
    return config_from_dict(doc)


def _cmd_forward(args) -> int:
    cfg = _load_config(args)
    if not cfg.output_dir:
        raise ConfigurationError("forward needs an output directory (--out)")
    if args.with_neumann:
        data = synthesize_data(cfg)
    else:
        data = dirichlet_data(cfg.source, cfg.g, cfg.measurement_grid(), cfg.quad)
    import os
    os.makedirs(cfg.output_dir, exist_ok=True)
    io.write_data_csv(os.path.join(cfg.output_dir, "data.csv"), data)
    io.write_grid_json(os.path.join(cfg.output_dir, "grid.json"), data.grid,
                       data.neumann is not None)
    print(f"wrote {data.dirichlet.shape[0]}x{data.dirichlet.shape[1]} data entries "
          f"to {cfg.output_dir}")
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    cfg = _load_config(args)
    results = run_experiment(cfg)
    status = EXIT_OK
    for r in results:
        if r.failed:
            print(f"k={r.k:g}: FAILED ({r.failure})")
            status = EXIT_DEGENERATE
        else:
            print(f"k={r.k:g}: method={r.method} N={r.truncation} "
                  f"relative_l2_error={r.relative_l2_error:.6g}")
    return status


def _cmd_sweep(args) -> int:
    cfg = _load_config(args)
    sweep_doc = dict(cfg.sweep or {})
    if args.deltas:
        sweep_doc["deltas"] = [float(v) for v in args.deltas.split(",")]
    if args.truncations:
        sweep_doc["truncations"] = [int(v) for v in args.truncations.split(",")]
    if "deltas" not in sweep_doc:
        raise ConfigurationError("sweep-noise needs --deltas or a config sweep section")
    seeds = sweep_doc.get("seeds", list(range(args.num_seeds)))
    rows, means = sweep_noise(cfg, sweep_doc["deltas"], seeds,
                              truncations=sweep_doc.get("truncations"),
                              workers=args.workers)
    for m in means:
        print(f"delta={m['delta']:g} N={m['truncation']}: "
              f"mean_error={m['mean_error']:.6g} over {len(seeds)} seeds"
              + (f" ({m['num_failed']} failed)" if m["num_failed"] else ""))
    return EXIT_OK


def _cmd_validate(args) -> int:
    cfg = _load_config(args)
    report = validate(cfg)
    for name in ("specfun", "dtn_point_source", "forward_quadrature", "greens_identity"):
        entry = report[name]
        print(f"{'PASS' if entry['passed'] else 'FAIL'} {name}: "
              + ", ".join(f"{k}={v:.3g}" for k, v in entry.items()
                          if isinstance(v, float)))
    return EXIT_OK if report["passed"] else EXIT_VALIDATION


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        handler = {"forward": _cmd_forward, "reconstruct": _cmd_reconstruct,
                   "sweep-noise": _cmd_sweep, "validate": _cmd_validate}[args.command]
        return handler(args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateReconstructionError as exc:
        print(f"reconstruction degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())

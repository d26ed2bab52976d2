"""Command line front end.

Subcommands compute coefficient tables (ck), zeta values (zeta), Moebius
tables (mobius), Pochhammer partial sums (phi), or whole catalog
experiments (experiment), and emit CSV or JSON.  When an experiment is
written to a file, its figures are rendered as PNGs alongside the output
(disable with --no-figures, redirect with --figures DIR).

Exit codes: 0 success, 1 runtime/I-O error, 2 usage error,
3 insufficient-precision refusal.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mpc, mpf, nstr

from . import __version__
from .coefficients import (METHOD_BINOMIAL, METHOD_MOBIUS, ck_series,
                           required_binomial_bits)
from .experiments import (CATALOG, UnknownExperimentError, experiment_spec,
                          run_experiment)
from .experiments import Dataset
from .mobius import mobius_sieve
from .params import FamilyParams
from .pochhammer import phi_partial
from .precision import (DomainError, InsufficientPrecisionError,
                        PrecisionContext, frac_to_mpf, working_bits)
from .zeta import inv_zeta_minus_one, zeta_real

_FIGURES_AUTO = "@auto"

_METHOD_ALIASES = {"mobius": METHOD_MOBIUS, "binomial": METHOD_BINOMIAL,
                   METHOD_BINOMIAL: METHOD_BINOMIAL}


@dataclass
class RunConfig:
    command: str
    params: FamilyParams = None
    k_max: int = 0
    n_max: int = 0
    precision_bits: int = 256
    method: str = METHOD_MOBIUS
    fmt: str = "csv"
    output: str = "-"
    digits: int = 30
    experiment: str = None
    sigma: Fraction = None
    s_re: Fraction = None
    s_im: Fraction = None
    k_terms: int = 0
    figures_dir: str = None


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected a number like 3.5 or 7/2, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rieszkit",
        description="Coefficient sequences, zeta values and decay datasets "
                    "for the generalized Riesz criterion machinery.")
    parser.add_argument("--version", action="version",
                        version=f"rieszkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--precision-bits", type=int, default=None,
                       help="mantissa bits (default 256, raised "
                            "automatically for binomial-zeta batches)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"),
                       default=None, help="output format (default csv)")
        p.add_argument("--output", default=None,
                       help="output path, '-' for stdout (default)")
        p.add_argument("--digits", type=int, default=None,
                       help="significant digits in emitted values "
                            "(default 30)")
        p.add_argument("--config", default=None,
                       help="key=value file with flag defaults; explicit "
                            "flags win")

    p_ck = sub.add_parser("ck", help="coefficient sequence c_k(alpha, beta)")
    p_ck.add_argument("--alpha", type=_rational, default=None)
    p_ck.add_argument("--beta", type=_rational, default=None)
    p_ck.add_argument("--k-max", type=int, default=None)
    p_ck.add_argument("--method", choices=("mobius", "binomial"),
                      default=None)
    p_ck.add_argument("--n-max", type=int, default=None,
                      help="series truncation for the mobius method")
    add_common(p_ck)

    p_zeta = sub.add_parser("zeta", help="zeta(sigma) for real sigma > 1")
    p_zeta.add_argument("--sigma", type=_rational, default=None)
    add_common(p_zeta)

    p_mob = sub.add_parser("mobius", help="Moebius function table")
    p_mob.add_argument("--n-max", type=int, default=None)
    add_common(p_mob)

    p_phi = sub.add_parser(
        "phi", help="Pochhammer partial sum approximating 1/zeta(s)")
    p_phi.add_argument("--s-re", type=_rational, default=None)
    p_phi.add_argument("--s-im", type=_rational, default=None)
    p_phi.add_argument("--alpha", type=_rational, default=None)
    p_phi.add_argument("--beta", type=_rational, default=None)
    p_phi.add_argument("--k-terms", type=int, default=None,
                       help="number of Pochhammer terms (default 400)")
    add_common(p_phi)

    p_exp = sub.add_parser("experiment", help="run a catalog experiment")
    p_exp.add_argument("name", nargs="?", default=None,
                       help="experiment name; see catalog below")
    p_exp.add_argument("--k-max", type=int, default=None)
    p_exp.add_argument("--n-max", type=int, default=None)
    p_exp.add_argument("--figures", nargs="?", const=_FIGURES_AUTO,
                       default=None, metavar="DIR",
                       help="render PNG figures (default: next to a file "
                            "output)")
    p_exp.add_argument("--no-figures", action="store_true",
                       help="suppress figure rendering")
    add_common(p_exp)
    return parser


_CONFIG_CONVERTERS = {
    "alpha": Fraction, "beta": Fraction, "sigma": Fraction,
    "s_re": Fraction, "s_im": Fraction,
    "k_max": int, "n_max": int, "k_terms": int, "precision_bits": int,
    "digits": int, "method": str, "fmt": str, "format": str, "output": str,
    "figures": str, "name": str,
}


def _load_config_file(path, error):
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    error(f"{path}:{lineno}: expected key=value, got {line!r}")
                key, _, value = line.partition("=")
                key = key.strip().replace("-", "_")
                if key == "format":
                    key = "fmt"
                conv = _CONFIG_CONVERTERS.get(
                    "fmt" if key == "fmt" else key)
                if key != "fmt" and key not in _CONFIG_CONVERTERS:
                    error(f"{path}:{lineno}: unknown config key {key!r}")
                try:
                    values[key] = (conv or str)(value.strip())
                except ValueError:
                    error(f"{path}:{lineno}: bad value for {key}")
    except OSError as exc:
        error(f"cannot read config file: {exc}")
    return values


def parse_args(argv=None):
    """Parse argv into a validated RunConfig (SystemExit 2 on usage error)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    error = parser.error

    file_values = {}
    if getattr(args, "config", None):
        file_values = _load_config_file(args.config, error)

    def pick(key, default):
        explicit = getattr(args, key, None)
        if explicit is not None:
            return explicit
        if key in file_values:
            return file_values[key]
        return default

    command = args.command
    cfg = RunConfig(command=command)
    cfg.fmt = pick("fmt", "csv")
    if cfg.fmt not in ("csv", "json"):
        error(f"format must be csv or json, got {cfg.fmt!r}")
    cfg.output = pick("output", "-")
    cfg.digits = pick("digits", 30)
    if cfg.digits < 2:
        error("digits must be >= 2")

    precision = pick("precision_bits", None)
    if precision is not None and precision < 64:
        error("precision-bits must be >= 64")

    def family(alpha, beta):
        if alpha is None or beta is None:
            error(f"{command} requires --alpha and --beta")
        if beta <= 0:
            error("beta must be > 0")
        if alpha <= 1:
            error(f"alpha must be > 1 for this computation, got {alpha}")
        return FamilyParams(alpha, beta)

    if command == "ck":
        cfg.method = _METHOD_ALIASES[pick("method", "mobius")]
        cfg.k_max = pick("k_max", 100)
        cfg.n_max = pick("n_max", 10_000)
        if cfg.k_max < 0:
            error("k-max must be >= 0")
        if cfg.n_max < 2:
            error("n-max must be >= 2")
        cfg.params = family(pick("alpha", None), pick("beta", None))
        default_bits = (required_binomial_bits(cfg.k_max)
                        if cfg.method == METHOD_BINOMIAL else 256)
        cfg.precision_bits = precision if precision else default_bits
    elif command == "zeta":
        cfg.sigma = pick("sigma", None)
        if cfg.sigma is None:
            error("zeta requires --sigma")
        if cfg.sigma <= 1:
            error(f"sigma must be > 1, got {cfg.sigma}")
        cfg.precision_bits = precision if precision else 256
    elif command == "mobius":
        cfg.n_max = pick("n_max", 1000)
        if cfg.n_max < 1:
            error("n-max must be >= 1")
        cfg.precision_bits = precision if precision else 256
    elif command == "phi":
        cfg.s_re = pick("s_re", None)
        if cfg.s_re is None:
            error("phi requires --s-re")
        cfg.s_im = pick("s_im", Fraction(0))
        cfg.k_terms = pick("k_terms", 400)
        if cfg.k_terms < 0:
            error("k-terms must be >= 0")
        cfg.params = family(pick("alpha", None), pick("beta", None))
        cfg.precision_bits = (precision if precision
                              else required_binomial_bits(cfg.k_terms))
    elif command == "experiment":
        name = pick("name", None)
        if name is None:
            error("experiment requires a name; valid names: "
                  + ", ".join(CATALOG))
        if name not in CATALOG:
            error(f"unknown experiment {name!r}; valid names: "
                  + ", ".join(CATALOG))
        cfg.experiment = name
        cfg.k_max = pick("k_max", None)
        cfg.n_max = pick("n_max", None)
        if cfg.k_max is not None and cfg.k_max < 0:
            error("k-max must be >= 0")
        if cfg.n_max is not None and cfg.n_max < 2:
            error("n-max must be >= 2")
        cfg.precision_bits = precision if precision else 256
        if not args.no_figures:
            figures = pick("figures", None)
            if figures == _FIGURES_AUTO or (figures is None
                                            and cfg.output != "-"):
                base = os.path.dirname(cfg.output) if cfg.output != "-" else ""
                cfg.figures_dir = base or "."
            elif figures is not None:
                cfg.figures_dir = figures
    return cfg


def _format_cell(value, digits):
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    return nstr(value if isinstance(value, mpf) else mpf(value), digits,
                strip_zeros=True)


def _meta_value(value, digits):
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_meta_value(v, digits) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    return _format_cell(value, digits)


def emit_dataset(dataset, fmt, destination, digits=30):
    """Write the dataset as CSV (header + rows) or JSON (meta + columns).

    Values are decimal strings with `digits` significant digits, LF line
    endings, no locale formatting.  I/O errors propagate as OSError.
    """
    names = list(dataset.columns)
    if not names or dataset.n_rows() == 0:
        raise ValueError("refusing to emit an empty dataset")
    if fmt == "csv":
        lines = [",".join(names)]
        cols = [dataset.columns[n] for n in names]
        for row in zip(*cols):
            lines.append(",".join(_format_cell(v, digits) for v in row))
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        meta = {k: _meta_value(v, digits) for k, v in dataset.meta.items()}
        meta["generated_by"] = f"rieszkit {__version__}"
        payload = {
            "meta": meta,
            "columns": {n: [_format_cell(v, digits) if not isinstance(v, int)
                            else v
                            for v in dataset.columns[n]] for n in names},
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if destination == "-":
        sys.stdout.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _execute(cfg):
    ctx = PrecisionContext(cfg.precision_bits)
    if cfg.command == "ck":
        table = (mobius_sieve(cfg.n_max)
                 if cfg.method == METHOD_MOBIUS else None)
        series = ck_series(cfg.params, cfg.k_max, cfg.method, ctx, table)
        meta = {
            "params": cfg.params.label(),
            "method": series.method,
            "precision_bits": series.precision_bits_used,
        }
        if series.n_max is not None:
            meta["n_max"] = series.n_max
            meta["truncation_tail_bound"] = series.truncation_tail_bound
        return Dataset("ck", {"k": list(range(cfg.k_max + 1)),
                              "c_k": list(series.values)}, meta)
    if cfg.command == "zeta":
        zv = zeta_real(cfg.sigma, ctx)
        inv = inv_zeta_minus_one(cfg.sigma, ctx)
        return Dataset(
            "zeta",
            {"sigma": [str(zv.argument)], "zeta": [zv.value],
             "error_bound": [zv.error_bound], "inv_zeta_minus_one": [inv]},
            {"precision_bits": ctx.precision_bits})
    if cfg.command == "mobius":
        table = mobius_sieve(cfg.n_max)
        mertens = table.mertens()
        ns = list(range(1, cfg.n_max + 1))
        return Dataset(
            "mobius",
            {"n": ns, "mu": [int(table.values[n]) for n in ns],
             "mertens": [int(mertens[n]) for n in ns]},
            {"n_max": cfg.n_max})
    if cfg.command == "phi":
        coeffs = ck_series(cfg.params, cfg.k_terms, METHOD_BINOMIAL, ctx)
        with working_bits(ctx.precision_bits):
            s = mpc(frac_to_mpf(cfg.s_re), frac_to_mpf(cfg.s_im))
        result = phi_partial(s, cfg.params, cfg.k_terms, coeffs, ctx)
        return Dataset(
            "phi",
            {"K": [result.K], "phi_re": [result.value.real],
             "phi_im": [result.value.imag],
             "term_tail_estimate": [result.term_tail_estimate]},
            {"params": cfg.params.label(),
             "s": f"{cfg.s_re}+{cfg.s_im}i",
             "precision_bits": ctx.precision_bits})
    if cfg.command == "experiment":
        spec = experiment_spec(cfg.experiment, k_max=cfg.k_max,
                               n_max=cfg.n_max)
        return run_experiment(spec, ctx)
    raise ValueError(f"unknown command {cfg.command!r}")


def main(argv=None):
    cfg = parse_args(argv)
    try:
        dataset = _execute(cfg)
        emit_dataset(dataset, cfg.fmt, cfg.output, cfg.digits)
        if cfg.figures_dir is not None and dataset.plots:
            from .figures import render_dataset
            render_dataset(dataset, cfg.figures_dir)
        return 0
    except InsufficientPrecisionError as exc:
        print(f"rieszkit: insufficient precision: {exc}", file=sys.stderr)
        return 3
    except (DomainError, UnknownExperimentError) as exc:
        print(f"rieszkit: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"rieszkit: i/o error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"rieszkit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

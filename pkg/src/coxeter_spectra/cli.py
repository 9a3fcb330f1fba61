"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.  Artifacts go
to ``--out`` or standard output; diagnostics go to standard error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import characters, identities, partitions, representation, spectra
from .tableaux import BASIS_ORDER_VERSION, DEFAULT_DIMENSION_CAP, DimensionCapError, TableauBasis

SCHEMA = 1
CAP_WARN = 10_000
COXETER_TOL = 1e-12

COMMANDS = ("dim", "charratio", "spectrum", "moments", "check-coxeter", "check-identities", "check-plancherel")

EPILOG = f"""\
Shapes: "4,3,2,1", "stair:k" for (k,...,1), "hook:N" for (N-1,1).
Basis order v{BASIS_ORDER_VERSION}: standard tableaux sorted lexicographically by
their row-reading word (row 1 left to right, then row 2, ...).
Seeds are explicit; there is no environment default.
"""


class CheckFailed(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    shape_spec: str | None = None
    seed: int = 0
    trials: int = 1
    smax: int = 4
    bins: int = spectra.HIST_BINS
    out_path: str | None = None
    format: str = "table"
    dimension_cap: int = DEFAULT_DIMENSION_CAP
    r: int = 1
    method: str = "mn"
    n: int = 2
    K: int = 1
    eta: tuple[int, ...] = ()
    rmax: int = 4
    workers: int = 1
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.trials < 1 or self.smax < 0 or self.bins < 1:
            raise ValueError("need trials >= 1, smax >= 0, bins >= 1")


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def dumps(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n"


def table(rows) -> str:
    width = max(len(str(k)) for k, _ in rows)
    return "".join(f"{str(k).ljust(width)}  {v}\n" for k, v in rows)


# -- commands ---------------------------------------------------------------

def cmd_dim(cfg: RunConfig) -> str:
    lam = partitions.parse_shape(cfg.shape_spec)
    hook = partitions.hook_data(lam).dimension
    det = partitions.dimension_determinant(lam)
    if hook != det:
        raise CheckFailed(f"hook formula {hook} != determinant formula {det}")
    if cfg.verbose:
        for t in TableauBasis(lam, cfg.dimension_cap):
            print(f"# T[{t.index}]", file=sys.stderr)
            print(t.render(), file=sys.stderr)
    if cfg.format == "json":
        return dumps({"shape": str(lam), "dimension": hook})
    return f"{hook}\n"


def cmd_charratio(cfg: RunConfig) -> str:
    lam = partitions.parse_shape(cfg.shape_spec)
    r = cfg.r
    if cfg.method == "mn":
        value = frac(characters.ratio_mn(lam, r))
    elif cfg.method == "closed":
        closed = {
            0: lambda p: Fraction(1),
            1: characters.ratio_one_transposition,
            2: characters.ratio_two_transpositions,
        }
        if r not in closed:
            raise ValueError("closed forms exist only for r <= 2")
        value = frac(closed[r](lam))
    elif cfg.method == "trace":
        if 2 * r > lam.size:
            raise ValueError("trace method needs 2r <= N")
        value = repr(representation.trace_character(lam, list(range(1, 2 * r, 2)), cfg.dimension_cap))
    else:
        raise ValueError(f"unknown method {cfg.method!r}")
    if cfg.format == "json":
        return dumps({"shape": str(lam), "r": r, "method": cfg.method, "ratio": value})
    return value + "\n"


def cmd_spectrum(cfg: RunConfig) -> str:
    lam = partitions.parse_shape(cfg.shape_spec)
    rep = spectra.monte_carlo(lam, cfg.trials, cfg.seed, smax=2, bins=cfg.bins,
                              cap=cfg.dimension_cap, workers=cfg.workers)
    print(f"ks_distance {spectra.ks_distance(rep.pooled)!r}", file=sys.stderr)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["bin_left", "bin_right", "mass"])
    for lo, hi, mass in zip(rep.hist_edges[:-1], rep.hist_edges[1:], rep.hist_mass):
        w.writerow([repr(float(lo)), repr(float(hi)), repr(float(mass))])
    return buf.getvalue()


def cmd_moments(cfg: RunConfig) -> str:
    lam = partitions.parse_shape(cfg.shape_spec)
    smax = max(cfg.smax, 2)
    rep = spectra.monte_carlo(lam, cfg.trials, cfg.seed, smax=smax, bins=cfg.bins,
                              cap=cfg.dimension_cap, workers=cfg.workers)
    moments = []
    for s in range(1, smax + 1):
        est, se = rep.moment(s)
        target = spectra.expected_moment(lam, s, cfg.dimension_cap)
        moments.append({
            "s": s,
            "estimate": est,
            "se": se,
            "target": target,
            "within_3se": None if target is None else abs(est - target) <= 3 * se,
            "limit_gap": float(rep.limit_gap[s - 1]),
        })
    theta = partitions.theta_ratio(lam)
    doc = {
        "shape": str(lam),
        "dimension": partitions.dimension(lam),
        "theta": frac(theta),
        "trials": cfg.trials,
        "seed": cfg.seed,
        "moments": moments,
        "conditional_variance": {
            "estimate": rep.conditional_variance,
            "se": rep.conditional_variance_se,
            "limit_target": float(1 - theta * theta),
        },
        "ks_distance": spectra.ks_distance(rep.pooled),
        "identity_residuals": rep.residuals,
    }
    if cfg.format == "table":
        rows = [(f"m{m['s']}", f"{m['estimate']:.6f} +- {m['se']:.6f} (target {m['target']})") for m in moments]
        rows.append(("ks_distance", f"{doc['ks_distance']:.6f}"))
        return table(rows)
    return dumps(doc)


def cmd_check_coxeter(cfg: RunConfig) -> str:
    lam = partitions.parse_shape(cfg.shape_spec)
    rep = representation.coxeter_audit(lam, cfg.dimension_cap)
    ok = rep.worst <= COXETER_TOL and rep.max_offdiag_per_row <= 1
    out = dumps({**rep.as_dict(), "tolerance": COXETER_TOL, "pass": ok}) if cfg.format == "json" \
        else table([(k, v) for k, v in rep.as_dict().items()] + [("pass", ok)])
    if not ok:
        raise CheckFailed(out)
    return out


def cmd_check_identities(cfg: RunConfig) -> str:
    spec = identities.StaircaseSpec(cfg.K, cfg.eta)
    rows, ok = [], True
    for r in range(cfg.rmax + 1):
        target = cfg.K ** r
        plain = identities.staircase_lhs(spec, r, "plain")
        fact = identities.staircase_lhs(spec, r, "factorial")
        eta0 = identities.eta_zero_lhs(cfg.K, r)
        k2 = identities.k2_series(r)
        row = {
            "r": r,
            "target": target,
            "staircase_plain": frac(plain),
            "staircase_factorial": frac(fact),
            "eta_zero": frac(eta0),
            "k2_series": frac(k2),
            "pass": plain == target and eta0 == target and k2 == 2 ** r,
        }
        ok &= row["pass"]
        rows.append(row)
    verified = [v for v in identities.VARIANTS
                if all(identities.staircase_lhs(spec, r, v) == cfg.K ** r for r in range(cfg.rmax + 1))]
    doc = {"K": cfg.K, "eta": list(spec.eta), "rows": rows, "verified_variants": verified, "pass": ok}
    if cfg.format == "json":
        out = dumps(doc)
    else:
        head = "r  target  staircase  eta_zero  k2_series  pass\n"
        body = "".join(f"{x['r']}  {x['target']}  {x['staircase_plain']}  {x['eta_zero']}  "
                       f"{x['k2_series']}  {'PASS' if x['pass'] else 'FAIL'}\n" for x in rows)
        out = head + body + f"verified variant(s): {', '.join(verified) or 'none'}\n"
    if not ok:
        raise CheckFailed(out)
    return out


def cmd_check_plancherel(cfg: RunConfig) -> str:
    s = characters.plancherel_moments(cfg.n)
    expected = Fraction(1, comb(cfg.n, 2))
    ok = s.mean == 0 and s.variance == expected and s.total_mass == 1
    doc = {"n": cfg.n, "mean": frac(s.mean), "variance": frac(s.variance),
           "expected_variance": frac(expected), "total_mass": frac(s.total_mass), "pass": ok}
    out = dumps(doc) if cfg.format == "json" else table([(k, v) for k, v in doc.items()])
    if not ok:
        raise CheckFailed(out)
    return out


HANDLERS = {
    "dim": cmd_dim,
    "charratio": cmd_charratio,
    "spectrum": cmd_spectrum,
    "moments": cmd_moments,
    "check-coxeter": cmd_check_coxeter,
    "check-identities": cmd_check_identities,
    "check-plancherel": cmd_check_plancherel,
}


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out_path:
        with open(cfg.out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(cfg: RunConfig) -> int:
    try:
        text = HANDLERS[cfg.command](cfg)
    except CheckFailed as exc:
        _emit(cfg, str(exc))
        print(f"{cfg.command}: check failed", file=sys.stderr)
        return 1
    except (ValueError, DimensionCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, text)
    return 0


# -- argument parsing -------------------------------------------------------

def _eta_list(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad eta list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_DIMENSION_CAP, help="largest f^lambda allowed")
    common.add_argument("--format", choices=["json", "csv", "table"], default=None)
    common.add_argument("--out", default=None, help="write the artifact here instead of stdout")
    common.add_argument("--verbose", action="store_true")

    mc = argparse.ArgumentParser(add_help=False)
    mc.add_argument("--trials", type=int, default=100)
    mc.add_argument("--seed", type=int, required=True)
    mc.add_argument("--bins", type=int, default=spectra.HIST_BINS)
    mc.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="coxeter-spectra",
        description="Symmetric-group representation data and random Coxeter-generator matrices.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="dimension f^lambda")
    p.add_argument("shape")

    p = sub.add_parser("charratio", parents=[common], help="character ratio on 1^(N-2r) 2^r")
    p.add_argument("shape")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--method", choices=["mn", "closed", "trace"], default="mn")

    p = sub.add_parser("spectrum", parents=[common, mc], help="pooled eigenvalue histogram (CSV)")
    p.add_argument("shape")

    p = sub.add_parser("moments", parents=[common, mc], help="spectral moment report (JSON)")
    p.add_argument("shape")
    p.add_argument("--smax", type=int, default=4)

    check = sub.add_parser("check", help="verification suites").add_subparsers(dest="check", required=True)
    p = check.add_parser("coxeter", parents=[common], help="Coxeter relation residuals")
    p.add_argument("shape")
    p = check.add_parser("identities", parents=[common], help="domino-chain identities")
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--eta", type=_eta_list, default=None)
    p.add_argument("--rmax", type=int, default=4)
    p = check.add_parser("plancherel", parents=[common], help="Plancherel mean/variance")
    p.add_argument("--n", type=int, required=True)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = f"check-{args.check}" if args.command == "check" else args.command
    default_format = {"spectrum": "csv", "moments": "json"}.get(command, "table")
    kw = dict(
        command=command,
        shape_spec=getattr(args, "shape", None),
        out_path=args.out,
        format=args.format or default_format,
        dimension_cap=args.cap,
        verbose=args.verbose,
    )
    for name in ("seed", "trials", "bins", "smax", "r", "method", "n", "K", "rmax", "workers"):
        if getattr(args, name, None) is not None:
            kw[name] = getattr(args, name)
    if command == "check-identities":
        kw["eta"] = args.eta if args.eta is not None else (0,) * (args.K - 1)
    return RunConfig(**kw)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap > CAP_WARN:
        print(f"warning: dimension cap {args.cap} above {CAP_WARN}; dense work is O(f^3)", file=sys.stderr)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

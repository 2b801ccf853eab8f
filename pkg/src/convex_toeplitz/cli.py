"""Command-line front end.

JSON reports go to stdout (or ``--out``), a one-line summary to stderr.
Exit codes: 0 all checks pass, 1 an invariant was violated, 2 bad usage.
"""

from __future__ import annotations

import argparse
import csv
import functools
import io
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import bounds, coeffs, extremal, highdim, schwarz
from .psi import make_order_alpha, make_strong_beta, parse_psi

DEFAULT_TOL = {
    "lemma": 1e-12,
    "oracle": 1e-12,
    "soundness": 1e-9,
    "sharpness": 1e-6,
    "attainment": 1e-10,
    "equality": 1e-9,
}

LAMBDA_GRID = (0, 0.5, -0.5, 1, -1, 2, -2, 5, -5, 1j, 2j)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    psi: str = "halfplane"
    budget: int = 100_000
    samples: int = 10_000
    seed: int = 0
    n: int = 2
    norm: str = "l2"
    tol: dict = field(default_factory=lambda: dict(DEFAULT_TOL))
    out: str | None = None
    grid: str | None = None

    def __post_init__(self):
        if self.budget < 1 or self.samples < 1:
            raise UsageError("--budget and --samples must be >= 1")
        if self.n < 1:
            raise UsageError("--n must be >= 1")
        if self.norm not in highdim.NORMS:
            raise UsageError(f"--norm must be one of {highdim.NORMS}")


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (float, np.floating)):
        return float(x)
    return x


def dumps(report: dict) -> str:
    return json.dumps(_jsonable(report), indent=2, allow_nan=True) + "\n"


def _psi(cfg):
    try:
        return parse_psi(cfg.psi)
    except ValueError as e:
        raise UsageError(str(e)) from None


# -- commands ------------------------------------------------------------------


def cmd_bound(cfg: RunConfig):
    if cfg.grid:
        return 0, _grid_csv(cfg.grid), "grid written"
    psi = _psi(cfg)
    rep = bounds.sharp_bound_t23(psi)
    return 0, rep.to_dict(), f"{psi.label}: |T23| <= {rep.bound!r}"


def _parse_grid(text):
    try:
        name, rng = text.split("=")
        start, stop, step = (float(x) for x in rng.split(":"))
    except ValueError:
        raise UsageError(f"bad --grid {text!r}; expected name=start:stop:step") from None
    if name not in ("alpha", "beta") or step <= 0:
        raise UsageError(f"bad --grid {text!r}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return name, [round(start + i * step, 12) for i in range(count)]


def _grid_csv(text):
    name, values = _parse_grid(text)
    make = make_order_alpha if name == "alpha" else make_strong_beta
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([name, "bound", "r1", "r2", "region", "hypothesis_ok"])
    for v in values:
        try:
            rep = bounds.sharp_bound_t23(make(v))
        except ValueError as e:
            raise UsageError(str(e)) from None
        w.writerow([repr(v), repr(rep.bound), repr(rep.r1), repr(rep.r2),
                    "" if rep.region_index is None else rep.region_index, rep.hypothesis_ok])
    return buf.getvalue()


def _check(violations, worst, tol):
    return {"passed": violations == 0, "violations": int(violations), "worst_excess": float(worst), "tol": tol}


def cmd_verify(cfg: RunConfig):
    psi = _psi(cfg)
    tol = cfg.tol
    jets, gamma = schwarz.sample_batch(cfg.seed, cfg.samples)
    checks = {}

    ok = jets.satisfies_schur_bounds(tol["lemma"])
    checks["schur_bounds"] = _check(np.sum(~ok), 0.0, tol["lemma"])

    worst, bad = -np.inf, 0
    for lam in LAMBDA_GRID:
        ex = schwarz.lemma1_functional(jets, lam) - max(1, abs(lam))
        worst, bad = max(worst, ex.max()), bad + np.sum(ex > tol["lemma"])
    checks["lemma1"] = _check(bad, worst, tol["lemma"])

    rng = np.random.default_rng(cfg.seed + 1)
    worst, bad = -np.inf, 0
    for i in range(1, 8):
        for nu1, nu2 in bounds.sample_region(i, 12, rng):
            ex = schwarz.lemma2_functional(jets, nu1, nu2) - max(1, abs(nu2))
            worst, bad = max(worst, ex.max()), bad + np.sum(ex > tol["lemma"])
    checks["lemma2"] = _check(bad, worst, tol["lemma"])

    v = coeffs.coeffs_from_subordination(psi, jets)
    d = np.maximum(np.abs(v.a3 - coeffs.a3_closed_form(psi, jets)),
                   np.abs(v.a4 - coeffs.a4_closed_form(psi, jets)))
    checks["closed_forms"] = _check(np.sum(d > tol["oracle"]), d.max(), tol["oracle"])

    worst = 0.0
    for g in gamma[: min(cfg.samples, 1000)]:
        p = schwarz.SchurParams(tuple(g))
        s = schwarz.schwarz_series(p, 3)
        worst = max(worst, np.abs(np.array(schwarz.jet_from_schur(p).as_tuple()) - s.coeffs[1:]).max())
    checks["schur_closed_form"] = _check(int(worst > tol["oracle"]), worst, tol["oracle"])

    rep = bounds.sharp_bound_t23(psi)
    if bounds.certified(rep):
        ex = coeffs.t23(v) - rep.bound
        checks["t23_soundness"] = _check(np.sum(ex > tol["soundness"]), ex.max(), tol["soundness"])
        att = extremal.verify_attainment(psi)
        checks["attainment"] = _check(int(abs(att.gap) > tol["attainment"]), abs(att.gap), tol["attainment"])

    passed = all(c["passed"] for c in checks.values())
    report = {"psi": psi.label, "samples": cfg.samples, "seed": cfg.seed,
              "bound": rep.to_dict(), "checks": checks, "passed": passed}
    return (0 if passed else 1), report, f"verify {psi.label}: {'pass' if passed else 'FAIL'}"


def cmd_search(cfg: RunConfig):
    psi = _psi(cfg)
    res = bounds.sharpness_search(psi, cfg.budget, cfg.seed)
    report = res.to_dict()
    rep = bounds.sharp_bound_t23(psi)
    bad = bounds.certified(rep) and (res.best > res.bound + cfg.tol["soundness"]
                                     or res.gap > cfg.tol["sharpness"])
    return (1 if bad else 0), report, f"search {psi.label}: best {res.best!r}, gap {res.gap:.3e}"


def cmd_extremal(cfg: RunConfig):
    psi = _psi(cfg)
    ext = extremal.build_extremal(psi)
    att = extremal.verify_attainment(psi)
    v = ext.coefficients
    report = {"psi": psi.label, "series": list(ext.series.coeffs),
              "a2": v.a2, "a3": v.a3, "a4": v.a4,
              "bound": att.bound, "attained": att.attained, "gap": att.gap}
    bad = bounds.certified(bounds.sharp_bound_t23(psi)) and abs(att.gap) > cfg.tol["attainment"]
    return (1 if bad else 0), report, f"extremal {psi.label}: gap {att.gap:.3e}"


def cmd_highdim(cfg: RunConfig):
    psi = _psi(cfg)
    rng = np.random.default_rng(cfg.seed)
    tol = cfg.tol["soundness"]
    checks = violations = 0
    worst = np.inf
    for g in schwarz.sample_gamma(rng, cfg.samples):
        u = highdim.random_unit(rng, cfg.norm, cfg.n)
        m = highdim.schwarz_seed(psi, schwarz.SchurParams(tuple(g)), u, cfg.norm)
        z = highdim.sample_ball(rng, cfg.norm, cfg.n, 1)[0]
        sides = [highdim.t41_check(m, z, tol)]
        if cfg.norm == "linf":
            sides.append(highdim.t42_sides(m, z, tol))
        for s in sides:
            checks += 1
            violations += not s.holds
            worst = min(worst, s.rhs - s.lhs)

    gap = 0.0
    radii = (0.1, 0.5, 0.9)
    if cfg.norm == "l2":
        u = highdim.random_unit(rng, "l2", cfg.n)
        m = highdim.extremal_ball(psi, u)
        for r in radii:
            s = highdim.t41_check(m, r * u)
            gap = max(gap, abs(s.rhs - s.lhs))
    else:
        m = highdim.extremal_polydisk(psi, cfg.n)
        for r in radii:
            z = np.zeros(cfg.n, dtype=complex)
            z[0] = r
            for s in (highdim.t41_check(m, z), highdim.t42_sides(m, z)):
                gap = max(gap, abs(s.rhs - s.lhs))
    mp = highdim.mpsi_sample_check(m, min(cfg.samples, 1000), cfg.seed)

    report = {"psi": psi.label, "norm": cfg.norm, "n": cfg.n, "samples": cfg.samples, "seed": cfg.seed,
              "checks_run": checks, "violations": violations, "worst_margin": worst,
              "equality_gap_at_extremal": gap,
              "mpsi_at_extremal": {"samples": mp.samples, "violations": mp.violations,
                                   "worst_margin": mp.worst_margin}}
    certified = bounds.certified(bounds.sharp_bound_t23(psi))
    bad = violations > 0 or mp.violations > 0 or (certified and gap > cfg.tol["equality"])
    return (1 if bad else 0), report, f"highdim {cfg.norm} n={cfg.n}: {violations} violations, gap {gap:.3e}"


COMMANDS = {
    "bound": cmd_bound,
    "verify": cmd_verify,
    "search": cmd_search,
    "extremal": cmd_extremal,
    "highdim": cmd_highdim,
}


def _tol_pair(text):
    name, sep, value = text.partition("=")
    if not sep or name not in DEFAULT_TOL:
        raise argparse.ArgumentTypeError(f"expected one of {sorted(DEFAULT_TOL)}=<value>, got {text!r}")
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad tolerance value in {text!r}") from None


@functools.lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--psi", default="halfplane", help="halfplane | alpha:<v> | beta:<v>")
    common.add_argument("--budget", type=int, default=100_000)
    common.add_argument("--samples", type=int, default=10_000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--norm", choices=highdim.NORMS, default="l2")
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--tol", type=_tol_pair, action="append", default=[], metavar="NAME=V")
    common.add_argument("--grid", help="bound only: CSV over e.g. alpha=0:0.9:0.1")

    parser = argparse.ArgumentParser(prog="convex-toeplitz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    tol = dict(DEFAULT_TOL)
    tol.update(dict(args.tol))
    try:
        cfg = RunConfig(args.command, args.psi, args.budget, args.samples, args.seed,
                        args.n, args.norm, tol, args.out, args.grid)
        code, report, summary = COMMANDS[cfg.command](cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    text = report if isinstance(report, str) else dumps(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

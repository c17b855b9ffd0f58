"""Experiment runner: seeded batch experiments with CSV/JSON/SVG outputs.

Configuration comes from an INI or JSON file, overridden by CLI flags; the
seed fully determines all sampled randomness, and reruns produce
byte-identical outputs (wall-clock goes to stderr, never into artifacts).
Exit codes: 0 success, 1 usage/config error, 2 property-check failure.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from gmpy2 import mpq

from . import __version__
from .exactnum import ExactReal, exact, parse_exact
from .iet import Iet, build_iet, rotation, keane_certificate
from .induce import (
    BudgetExhausted,
    TowerViolated,
    find_tower,
    first_return,
    tower_book,
)
from .dioph import (
    RationalInput,
    akc_measure,
    cf_expand,
    liouville_from_scale,
    mixing_falsifier,
)
from .gauges import (
    decisiveness_diagnostic,
    discrepancy,
    estimate_constants,
    gauge_trace,
    omega_discrepancy,
    philox,
    proximality_bc_measure,
    tau_entropy,
)
from .scales import parse_scale
from .svgplot import BadCsv, emit_plot

EXPERIMENTS = (
    "gauge",
    "constants",
    "tau",
    "discrepancy",
    "cf",
    "liouville",
    "akc",
    "induce",
    "tower",
    "towerbook",
    "mix3",
    "bc-measure",
    "decisive",
    "plot",
)


class ConfigError(ValueError):
    pass


class PropertyFailure(RuntimeError):
    """A theorem-backed check came out false."""


@dataclass
class ExperimentConfig:
    experiment: str
    target: str = ""
    parameters: dict = field(default_factory=dict)
    seed: int = 0
    output: str = ""

    def to_ini(self) -> str:
        cp = configparser.ConfigParser()
        cp["experiment"] = {
            "name": self.experiment,
            "target": self.target,
            "seed": str(self.seed),
            "output": self.output,
        }
        cp["parameters"] = {k: str(v) for k, v in sorted(self.parameters.items())}
        import io

        buf = io.StringIO()
        cp.write(buf)
        return buf.getvalue()

    @classmethod
    def from_ini(cls, text: str) -> "ExperimentConfig":
        cp = configparser.ConfigParser()
        try:
            cp.read_string(text)
            exp = cp["experiment"]
            name = exp["name"]
        except (configparser.Error, KeyError) as e:
            raise ConfigError(f"bad config: {e}") from e
        if name not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {name!r}")
        params = dict(cp["parameters"]) if cp.has_section("parameters") else {}
        return cls(
            experiment=name,
            target=exp.get("target", ""),
            parameters=params,
            seed=int(exp.get("seed", "0")),
            output=exp.get("output", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError(f"bad JSON config: {e}") from e
        if raw.get("experiment") not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {raw.get('experiment')!r}")
        return cls(
            experiment=raw["experiment"],
            target=raw.get("target", ""),
            parameters={k: str(v) for k, v in raw.get("parameters", {}).items()},
            seed=int(raw.get("seed", 0)),
            output=raw.get("output", ""),
        )


def parse_target(text: str) -> Iet:
    """IET literals: "iet: lengths=[1/2,1/4,1/4] perm=[3,2,1]" or "rot: alpha=...".

    A bare expression is read as a rotation number.
    """
    text = text.strip()
    if text.startswith("iet:"):
        body = text[4:]
        fields = {}
        for chunk in body.split():
            if "=" not in chunk:
                raise ConfigError(f"bad iet literal near {chunk!r}")
            k, v = chunk.split("=", 1)
            fields[k] = v
        try:
            lengths = [parse_exact(s) for s in fields["lengths"].strip("[]").split(",")]
            perm = [int(s) for s in fields["perm"].strip("[]").split(",")]
        except (KeyError, ValueError) as e:
            raise ConfigError(f"bad iet literal: {e}") from e
        return build_iet(lengths, perm)
    if text.startswith("rot:"):
        body = text[4:].strip()
        if body.startswith("alpha="):
            body = body[6:]
        return rotation(parse_exact(body))
    return rotation(parse_exact(text))


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------

_BIG = 1 << 53


def jsonable(obj):
    """Plain-JSON view: exact values as strings, big integers as decimal strings."""
    if isinstance(obj, ExactReal):
        return str(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, type(mpq(0))):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= _BIG else obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = list(obj)
        if isinstance(obj, (set, frozenset)):
            items = sorted(items, key=str)
        return [jsonable(v) for v in items]
    if hasattr(obj, "__dataclass_fields__"):
        return {k: jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}
    return obj


def write_report(cfg: ExperimentConfig, payload: dict, steps: int, out_json: str) -> dict:
    report = {
        "artifact": {"name": "ietlab", "version": __version__},
        "config": {
            "experiment": cfg.experiment,
            "target": cfg.target,
            "parameters": dict(sorted(cfg.parameters.items())),
            "seed": cfg.seed,
            "threads": int(os.environ.get("LAB_THREADS", "1")),
        },
        "steps": steps,
        "payload": jsonable(payload),
    }
    if out_json:
        with open(out_json, "w", newline="\n") as fh:
            json.dump(report, fh, indent=1, sort_keys=True)
            fh.write("\n")
    return report


def write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_csv_cell(v) for v in row) + "\n")


def _csv_cell(v) -> str:
    if isinstance(v, ExactReal):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _decade_ladder(horizon: int) -> list[int]:
    marks = []
    h = 1000
    while h < horizon:
        marks.append(h)
        h *= 10
    marks.append(horizon)
    return sorted(set(m for m in marks if m >= 1))


# ---------------------------------------------------------------------------
# experiment implementations
# ---------------------------------------------------------------------------


def run(cfg: ExperimentConfig) -> dict:
    """Dispatch one experiment; returns the JSON report dict."""
    fn = _RUNNERS.get(cfg.experiment)
    if fn is None:
        raise ConfigError(f"unknown experiment {cfg.experiment!r}")
    return fn(cfg)


def _param(cfg, key, default=None, cast=str):
    raw = cfg.parameters.get(key)
    if raw is None:
        if default is None:
            raise ConfigError(f"{cfg.experiment}: missing parameter {key!r}")
        return default
    try:
        return cast(raw)
    except (ValueError, TypeError) as e:
        raise ConfigError(f"bad value for {key!r}: {raw!r}") from e


def _int_param(cfg, key, default=None):
    return _param(cfg, key, default, lambda s: int(float(s)))


def _out_paths(cfg) -> tuple[str, str]:
    base = cfg.output or f"{cfg.experiment}-out"
    if base.endswith(".json") or base.endswith(".csv"):
        base = base.rsplit(".", 1)[0]
    return base + ".csv", base + ".json"


def _run_gauge(cfg):
    t = parse_target(cfg.target)
    kind = _param(cfg, "kind")
    scale = parse_scale(_param(cfg, "scale", "pow:1"))
    pairs = _int_param(cfg, "pairs", 16)
    horizon = _int_param(cfg, "horizon", 10**4)
    metric = _param(cfg, "metric", "interval")
    exact_flag = _param(cfg, "exact", "auto")
    exact_mode = {"auto": None, "true": True, "false": False}.get(exact_flag)
    horizons = _decade_ladder(horizon)
    rows = []
    for sid in range(pairs):
        gs = philox(cfg.seed, stream=sid + 1)
        xf, yf = gs.random(2)
        x = exact(mpq(xf))
        y = exact(mpq(yf)) if kind != "rho" else None
        tr = gauge_trace(kind, t, scale, x, y, horizons=horizons, metric=metric,
                         exact_mode=exact_mode)
        for hi, h in enumerate(tr.horizons):
            val = tr.exact_values[hi] if tr.exact_values else tr.values[hi]
            rows.append([sid, x, y if y is not None else "", h, val, tr.argmins[hi]])
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["sample_id", "x", "y", "horizon", "running_min", "argmin"], rows)
    payload = {
        "kind": kind,
        "scale": scale.describe(),
        "metric": metric,
        "pairs": pairs,
        "horizons": horizons,
        "csv": os.path.basename(csv_path),
        "final_min": min(float(r[4].to_float() if isinstance(r[4], ExactReal) else r[4])
                          for r in rows if r[3] == horizons[-1]),
    }
    return write_report(cfg, payload, steps=pairs * horizons[-1], out_json=json_path)


def _run_constants(cfg):
    t = parse_target(cfg.target)
    grid = [float(a) for a in _param(cfg, "alphas", "0.25,0.5,0.75,1.0,1.5").split(",")]
    horizon = _int_param(cfg, "horizon", 10**4)
    samples = _int_param(cfg, "samples", 200)
    rep = estimate_constants(t, grid, horizon, samples, cfg.seed)
    csv_path, json_path = _out_paths(cfg)
    rows = []
    for kind in ("phi", "psi", "rho"):
        for ai, a in enumerate(rep.alpha_grid):
            rows.append([kind, a, rep.below[kind][ai], rep.above[kind][ai]])
    write_csv(csv_path, ["kind", "alpha", "below_frac", "above_frac"], rows)
    return write_report(cfg, jsonable(rep), steps=3 * samples * horizon, out_json=json_path)


def _run_tau(cfg):
    t = parse_target(cfg.target)
    n_max = _int_param(cfg, "nmax", 256)
    tau_hat, table = tau_entropy(t, n_max)
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["n", "card"], [[n, c] for n, c in table])
    payload = {"tau_hat": tau_hat, "table": table,
               "note": "finite-horizon surrogate of the difference-set growth exponent"}
    return write_report(cfg, payload, steps=n_max, out_json=json_path)


def _run_discrepancy(cfg):
    t = parse_target(cfg.target)
    mode = _param(cfg, "mode", "exact")
    interval = _param(cfg, "interval", "0,1/2")
    a_s, b_s = interval.split(",")
    a, b = parse_exact(a_s), parse_exact(b_s)
    nlist = [int(float(x)) for x in _param(cfg, "nlist", "64,128,256").split(",")]
    omega, detail = omega_discrepancy(t, nlist, interval=(a, b), mode=mode,
                                      n_samples=_int_param(cfg, "samples", 64),
                                      seed=cfg.seed)
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["n", "value"], [[n, d] for n, d in zip(detail["n"], detail["D"])])
    payload = {"omega_hat": omega, **detail}
    return write_report(cfg, payload, steps=sum(nlist), out_json=json_path)


def _run_cf(cfg):
    alpha = _target_alpha(cfg)
    depth = _int_param(cfg, "depth", 20)
    try:
        cf = cf_expand(alpha, depth)
    except RationalInput as e:
        raise PropertyFailure(str(e)) from e
    from .dioph import check_convergent_ineq

    checks = check_convergent_ineq(cf, alpha)
    if not all(ok for _, ok in checks):
        raise PropertyFailure("convergent inequality failed; expansion is wrong")
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["k", "a", "p", "q"],
              [[k + 1, cf.a[k], cf.p[k + 1], cf.q[k + 1]] for k in range(cf.depth)])
    payload = {"alpha": str(alpha), "a": list(cf.a), "p": list(cf.p)[:depth],
               "q": list(cf.q)[:depth], "periodic": cf.periodic,
               "convergent_inequality_ok": True}
    return write_report(cfg, payload, steps=depth, out_json=json_path)


def _run_liouville(cfg):
    scale = parse_scale(_param(cfg, "scale", "pow:2"))
    depth = _int_param(cfg, "k", 5)
    rot = liouville_from_scale(scale, depth)
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["k", "N", "a", "q"],
              [[k + 1, rot.n_thresholds[k], rot.a[k], rot.q[k + 1]] for k in range(depth)])
    return write_report(cfg, jsonable(rot), steps=depth, out_json=json_path)


def _run_akc(cfg):
    scale = parse_scale(_param(cfg, "scale", "pow:2"))
    k = _int_param(cfg, "k", 2)
    c = Fraction(_param(cfg, "c", "1"))
    target = cfg.target.strip()
    if target in ("", "liouville"):
        rot = liouville_from_scale(scale, max(k + 2, 4))
        res = akc_measure(rot, None, k, c, scale)
    else:
        res = akc_measure(_target_alpha(cfg), None, k, c, scale)
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["k", "lower", "upper", "bound", "within"],
              [[k, res.lower, res.upper, res.bound, res.within_bound]])
    if not res.within_bound:
        raise PropertyFailure("union measure exceeded the target bound")
    return write_report(cfg, jsonable(res), steps=res.n_range[1] - res.n_range[0],
                        out_json=json_path)


def _run_induce(cfg):
    t = parse_target(cfg.target)
    a_s, b_s = _param(cfg, "interval").split(",")
    ind = first_return(t, (parse_exact(a_s), parse_exact(b_s)),
                       max_steps=_int_param(cfg, "budget", 10**6))
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["piece", "length", "translation", "return_time"],
              [[i, ind.iet.lengths[i], ind.iet.trans[i], ind.return_times[i]]
               for i in range(ind.iet.r)])
    payload = {
        "interval": [str(ind.interval[0]), str(ind.interval[1])],
        "r": ind.iet.r,
        "lengths": [str(x) for x in ind.iet.lengths],
        "perm": list(ind.iet.perm),
        "return_times": list(ind.return_times),
    }
    return write_report(cfg, payload, steps=sum(ind.return_times), out_json=json_path)


def _run_tower(cfg):
    t = parse_target(cfg.target)
    eps = parse_exact(_param(cfg, "eps", "1/10"))
    cert = keane_certificate(t, _int_param(cfg, "certify_depth", 200))
    try:
        tw = find_tower(t, eps)
    except (TowerViolated, BudgetExhausted) as e:
        raise PropertyFailure(f"tower construction failed: {e}") from e
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["floor", "lo", "hi"],
              [[i, lo, hi] for i, (lo, hi) in enumerate(tw.floors)])
    payload = {
        "certificate": jsonable(cert),
        "base": [str(tw.base[0]), str(tw.base[1])],
        "height": tw.height,
        "total_measure": str(tw.total_measure),
    }
    return write_report(cfg, payload, steps=tw.height, out_json=json_path)


def _run_towerbook(cfg):
    ms = [int(x) for x in _param(cfg, "m").split(",")]
    ns = [int(x) for x in _param(cfg, "n").split(",")]
    seed_b = [int(x) for x in _param(cfg, "seed_b", "1,1,1,1").split(",")]
    depth = _int_param(cfg, "k", len(ms))
    if depth != len(ms):
        raise ConfigError(f"k={depth} does not match {len(ms)} supplied stages")
    book = tower_book(ms, ns, seed_b)
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["k", "b1", "b2", "b3", "b4"],
              [[k + 1, *row] for k, row in enumerate(book.rows)])
    return write_report(cfg, jsonable(book), steps=len(ms), out_json=json_path)


def _target_alpha(cfg, default=None):
    text = cfg.target.strip()
    if text.startswith("rot:"):
        text = text[4:].strip()
        if text.startswith("alpha="):
            text = text[6:]
    if not text:
        if default is None:
            raise ConfigError(f"{cfg.experiment}: needs a rotation number")
        text = default
    return parse_exact(text)


def _run_mix3(cfg):
    alpha = _target_alpha(cfg, default="golden")
    t_param = parse_exact(_param(cfg, "t"))
    m_lo, m_hi = (int(x) for x in _param(cfg, "mrange", "6:14").split(":"))
    cells = _int_param(cfg, "cells", 20)
    rep = mixing_falsifier(alpha, t_param, range(m_lo, m_hi + 1), cells=cells)
    csv_path, json_path = _out_paths(cfg)
    write_csv(
        csv_path,
        ["m", "q_m", "b_m", "time", "missed_min", "displacement_values"],
        [[e["m"], e["q_m"], e["b_m"], e["time"], e["missed_min"],
          e["displacement_consecutive"]] for e in rep.entries],
    )
    report = write_report(cfg, jsonable(rep), steps=sum(e["time"] for e in rep.entries),
                          out_json=json_path)
    if any(e["missed_min"] < 6 for e in rep.entries):
        raise PropertyFailure("a tested time left fewer than 6 cells missed")
    if any(e["displacement_consecutive"] > 7 for e in rep.entries):
        raise PropertyFailure("displacement exceeded 7 consecutive values")
    return report


def _run_bc_measure(cfg):
    t = parse_target(cfg.target)
    ns = [int(float(x)) for x in _param(cfg, "nlist", "50,100,200").split(",")]
    c = float(_param(cfg, "c", "0.6"))
    samples = _int_param(cfg, "samples", 10**5)
    metric = _param(cfg, "metric", "interval")
    rows = []
    for n in ns:
        p, sigma, bound = proximality_bc_measure(t, n, c, samples, cfg.seed, metric=metric)
        rows.append([n, p, sigma, bound, p <= bound + 3 * sigma])
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["n", "estimate", "sigma", "bound", "within_3sigma"], rows)
    payload = {"c": c, "samples": samples, "metric": metric,
               "rows": [dict(zip(["n", "estimate", "sigma", "bound", "ok"], r)) for r in rows]}
    report = write_report(cfg, payload, steps=samples * max(ns), out_json=json_path)
    if not all(r[4] for r in rows):
        raise PropertyFailure("Monte Carlo estimate exceeded the bound beyond 3 sigma")
    return report


def _run_decisive(cfg):
    scale = parse_scale(_param(cfg, "scale", "pow:1"))
    horizon = _int_param(cfg, "horizon", 10**4)
    samples = _int_param(cfg, "samples", 2000)
    seq_kind = _param(cfg, "sequence", "rotation")
    if seq_kind == "rotation":
        alpha = parse_exact(_param(cfg, "alpha", "golden"))
        af = alpha.to_float()
        pts = []
        v = 0.0
        for _ in range(horizon):
            v = (v + af) % 1.0
            pts.append(v)
    elif seq_kind == "constant":
        pts = [float(_param(cfg, "value", "0"))] * horizon
    else:
        raise ConfigError(f"unknown sequence kind {seq_kind!r}")
    marks = _decade_ladder(horizon)
    fracs = decisiveness_diagnostic(pts, scale, samples, cfg.seed, checkpoints=marks)
    csv_path, json_path = _out_paths(cfg)
    write_csv(csv_path, ["horizon", "middle_fraction"], [[n, f] for n, f in fracs])
    payload = {"sequence": seq_kind, "fractions": fracs,
               "note": "tail-window surrogate of the contact gauge"}
    return write_report(cfg, payload, steps=horizon, out_json=json_path)


def _run_plot(cfg):
    src = _param(cfg, "csv")
    kind = _param(cfg, "kind", "trace")
    out = cfg.output or (src.rsplit(".", 1)[0] + ".svg")
    hline = cfg.parameters.get("hline")
    emit_plot(src, kind, out, hline=float(hline) if hline else None,
              hline_label=cfg.parameters.get("hline_label", ""))
    return {"artifact": {"name": "ietlab", "version": __version__}, "svg": out}


_RUNNERS = {
    "gauge": _run_gauge,
    "constants": _run_constants,
    "tau": _run_tau,
    "discrepancy": _run_discrepancy,
    "cf": _run_cf,
    "liouville": _run_liouville,
    "akc": _run_akc,
    "induce": _run_induce,
    "tower": _run_tower,
    "towerbook": _run_towerbook,
    "mix3": _run_mix3,
    "bc-measure": _run_bc_measure,
    "decisive": _run_decisive,
    "plot": _run_plot,
}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    ap = _Parser(
        prog="ietlab",
        description="exact-arithmetic interval exchange experiments",
    )
    sub = ap.add_subparsers(dest="experiment")
    common = dict(add_help=True)
    for name in EXPERIMENTS:
        p = sub.add_parser(name, **common)
        p.add_argument("--config", help="INI or JSON config file")
        p.add_argument("--iet", help="iet literal: lengths=[...] perm=[...]")
        p.add_argument("--rot", "--alpha", dest="rot", help="rotation number expression")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", help="output basename or file")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="set an experiment parameter")
        # frequent parameters get first-class flags
        for flag in ("kind", "scale", "pairs", "horizon", "metric", "exact", "depth",
                     "k", "c", "interval", "nlist", "samples", "alphas", "nmax",
                     "eps", "m", "n", "seed-b", "t", "mrange", "cells", "budget",
                     "mode", "csv", "hline", "hline-label", "sequence", "value",
                     "certify-depth"):
            p.add_argument(f"--{flag}", dest=flag.replace("-", "_"), default=None)
    return ap


def _config_from_args(args) -> ExperimentConfig:
    if args.config:
        with open(args.config) as fh:
            text = fh.read()
        if args.config.endswith(".json"):
            cfg = ExperimentConfig.from_json(text)
        else:
            cfg = ExperimentConfig.from_ini(text)
        if cfg.experiment != args.experiment:
            raise ConfigError(
                f"config is for {cfg.experiment!r}, command was {args.experiment!r}"
            )
    else:
        cfg = ExperimentConfig(experiment=args.experiment)
    if args.iet:
        cfg.target = "iet: " + args.iet
    elif args.rot:
        cfg.target = "rot: alpha=" + args.rot
    if args.seed is not None:
        cfg.seed = args.seed
    if args.out:
        cfg.output = args.out
    passthrough = (
        "kind scale pairs horizon metric exact depth k c interval nlist samples "
        "alphas nmax eps m n seed_b t mrange cells budget mode csv hline "
        "hline_label sequence value certify_depth"
    ).split()
    for key in passthrough:
        val = getattr(args, key, None)
        if val is not None:
            cfg.parameters[key] = val
    for item in args.set:
        if "=" not in item:
            raise ConfigError(f"--set needs KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        cfg.parameters[k] = v
    return cfg


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if not args.experiment:
        print("usage: ietlab <experiment> [options]; see --help", file=sys.stderr)
        return 1
    t0 = time.monotonic()
    try:
        cfg = _config_from_args(args)
        report = run(cfg)
    except (ConfigError, FileNotFoundError, BadCsv) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except PropertyFailure as e:
        print(f"property failure: {e}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - t0
    print(f"{args.experiment}: done in {elapsed:.2f}s", file=sys.stderr)
    summary = report.get("payload", report)
    line = json.dumps(summary, sort_keys=True, default=str)
    if len(line) > 400:
        line = line[:400] + "..."
    print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())

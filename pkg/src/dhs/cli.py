"""Command-line front end: tables as CSV/JSON, validation and diagnostics.

Exit codes: 0 success, 1 failed validation, 2 bad configuration,
3 solver failure on at least one row (the other rows are still written).
"""

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import bound_states, model, oracle, scattering, validation
from .errors import (
    ComplexExponentError,
    ConvergenceError,
    DHSError,
    EmptyWindowError,
    EvanescentChannelError,
    NoTransitionError,
    PoleError,
)
from .model import C0_DEFAULT, Limit, PotentialParams, SymmetryContext

EXIT_OK, EXIT_VALIDATION, EXIT_CONFIG, EXIT_SOLVER = 0, 1, 2, 3

SOLVER_ERRORS = (ConvergenceError, EmptyWindowError, NoTransitionError)


class ConfigError(Exception):
    pass


# key -> (parser, default); keys double as config-file keys and flag names
OPTIONS = {
    "symmetry": (str, None),
    "D": (float, None),
    "sigma0": ("floats", None),
    "alpha": ("floats", None),
    "c0": (float, C0_DEFAULT),
    "Cps": (float, None),
    "Cs": (float, None),
    "M": (float, 1.0),
    "E": (float, None),
    "n": ("ints", None),
    "l": ("ints", None),
    "kappa": ("ints", None),
    "sweep_kappa": ("range", None),
    "window": ("pair", None),
    "format": (str, "csv"),
    "out": (str, None),
    "spin_exponent": (str, "consistent"),
    "r_min": (float, None),
    "r_max": (float, None),
    "r_step": (float, None),
    "points": (int, None),
}


def _convert(key, raw):
    kind = OPTIONS[key][0]
    text = str(raw).strip()
    try:
        if kind == "floats":
            return [float(x) for x in text.split(",") if x.strip()]
        if kind == "ints":
            return [int(x) for x in text.split(",") if x.strip()]
        if kind == "pair":
            lo, hi = (float(x) for x in text.split(","))
            return lo, hi
        if kind == "range":
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return kind(text)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc


def read_config(path):
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for num, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{num}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in OPTIONS:
            raise ConfigError(f"{path}:{num}: unknown key {key!r}")
        values[key] = value
    return values


def resolve(args):
    """Merge defaults, config file and flags (flags win) into a dict."""
    merged = {k: default for k, (_, default) in OPTIONS.items()}
    if getattr(args, "config", None):
        for key, raw in read_config(args.config).items():
            merged[key] = _convert(key, raw)
    for key in OPTIONS:
        raw = getattr(args, key, None)
        if raw is not None:
            merged[key] = _convert(key, raw)
    if merged["Cps"] is not None and merged["Cs"] is not None:
        raise ConfigError("give either --Cps or --Cs, not both")
    if merged["format"] not in ("csv", "json"):
        raise ConfigError(f"unknown format {merged['format']!r}")
    return merged


def _symmetry(cfg, required=True):
    sym = cfg["symmetry"]
    if sym is None:
        if required:
            raise ConfigError("--symmetry is required")
        return None
    try:
        limit = Limit(sym)
    except ValueError as exc:
        raise ConfigError(f"unknown symmetry {sym!r}") from exc
    C = cfg["Cps"] if limit is Limit.PSEUDOSPIN else cfg["Cs"]
    if limit is Limit.PSEUDOSPIN and cfg["Cs"] is not None:
        raise ConfigError("--Cs applies to the spin limit")
    if limit is Limit.SPIN and cfg["Cps"] is not None:
        raise ConfigError("--Cps applies to the pseudospin limit")
    try:
        return SymmetryContext(limit, C=0.0 if C is None else C, M=cfg["M"], spin_exponent=cfg["spin_exponent"])
    except DHSError as exc:
        raise ConfigError(str(exc)) from exc


def _potentials(cfg):
    for key in ("D", "sigma0", "alpha"):
        if cfg[key] is None:
            raise ConfigError(f"--{key} is required")
    out = []
    try:
        for alpha in cfg["alpha"]:
            for sigma0 in sorted(cfg["sigma0"]):
                out.append(PotentialParams(D=cfg["D"], sigma0=sigma0, alpha=alpha, c0=cfg["c0"]))
    except DHSError as exc:
        raise ConfigError(str(exc)) from exc
    if not out:
        raise ConfigError("empty --sigma0 or --alpha list")
    return out


def _single(values, name):
    if not values or len(values) != 1:
        raise ConfigError(f"--{name} takes exactly one value here")
    return values[0]


def worker_count():
    raw = os.environ.get("DHS_NUM_THREADS", "1")
    try:
        count = int(raw)
    except ValueError as exc:
        raise ConfigError(f"DHS_NUM_THREADS must be an integer, got {raw!r}") from exc
    if count < 0:
        raise ConfigError("DHS_NUM_THREADS must be >= 0")
    return count or (os.cpu_count() or 1)


def parallel_map(fn, items):
    """Ordered map, spread over DHS_NUM_THREADS workers."""
    items = list(items)
    workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _plain(value):
    # numpy scalars -> built-ins, so repr and json see ordinary numbers
    if isinstance(value, np.generic):
        return value.item()
    return value


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(columns, rows, fmt):
    """CSV or JSON text; floats use repr so they parse back exactly."""
    rows = [[_plain(v) for v in row] for row in rows]
    if fmt == "json":
        records = [
            {c: (None if isinstance(v, float) and not math.isfinite(v) else v) for c, v in zip(columns, row)}
            for row in rows
        ]
        return json.dumps({"columns": list(columns), "rows": records}, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _marker(exc):
    if isinstance(exc, (EvanescentChannelError, ComplexExponentError, PoleError)):
        return validation.cli_marker(exc)
    return type(exc).__name__


def cmd_energies(cfg):
    s = _symmetry(cfg)
    potentials = _potentials(cfg)
    ns = sorted(cfg["n"] or [])
    if s.limit is Limit.NONREL:
        ls = sorted(cfg["l"] or [])
        if not ns or not ls:
            raise ConfigError("energies needs --n and --l for the non-relativistic limit")
        jobs = [(n, l, p) for n in ns for l in ls for p in sorted(potentials, key=lambda q: (q.sigma0, q.alpha))]

        def row(job):
            n, l, p = job
            if l < 0 or n < 0:
                return [n, l, p.sigma0, p.alpha, None, None, "INVALID"], False
            E = bound_states.nonrel_energy(p, s.M, n, l)
            return [n, l, p.sigma0, p.alpha, E, bound_states.nonrel_decaying(p, s.M, n, l), ""], False

        results = parallel_map(row, jobs)
        columns = ["n", "l", "sigma0", "alpha", "E", "decaying", "marker"]
        emit(render(columns, [r for r, _ in results], cfg["format"]), cfg["out"])
        return EXIT_OK

    kappas = cfg["kappa"] or cfg["sweep_kappa"]
    if not ns or not kappas:
        raise ConfigError("energies needs --n and --kappa")
    if cfg["window"] is not None and not cfg["window"][0] < cfg["window"][1]:
        raise ConfigError("--window needs lo < hi")
    jobs = [(n, k, p) for n in ns for k in sorted(kappas, reverse=True) for p in potentials]

    def row(job):
        n, kappa, p = job
        base = [n, kappa, p.sigma0, p.alpha]
        if kappa == 0:
            return base + [[], "INVALID"], False
        try:
            sols = bound_states.solve_bound_energies(p, s, n, kappa, window=cfg["window"])
        except SOLVER_ERRORS as exc:
            return base + [[], type(exc).__name__], True
        return base + [sols, ""], False

    results = parallel_map(row, jobs)
    width = max([len(r[4]) for r, _ in results] + [1])
    columns = ["n", "kappa", "sigma0", "alpha", "count"]
    for i in range(1, width + 1):
        columns += [f"E{i}", f"decaying{i}"]
    columns.append("marker")
    rows = []
    for r, _ in results:
        sols = r[4]
        cells = r[:4] + [len(sols)]
        for i in range(width):
            cells += [sols[i].E, sols[i].decaying] if i < len(sols) else [None, None]
        rows.append(cells + [r[5]])
    emit(render(columns, rows, cfg["format"]), cfg["out"])
    return EXIT_SOLVER if any(failed for _, failed in results) else EXIT_OK


def cmd_phase_shifts(cfg):
    s = _symmetry(cfg)
    if s.limit is Limit.NONREL:
        raise ConfigError("phase shifts are computed for the pspin and spin limits")
    if cfg["E"] is None:
        raise ConfigError("--E is required")
    p = _single(_potentials(cfg), "sigma0/--alpha")
    kappas = cfg["sweep_kappa"] or cfg["kappa"]
    ls = sorted(cfg["l"] or [])
    if not kappas or not ls:
        raise ConfigError("phase-shifts needs --l and --kappa or --sweep-kappa")
    jobs = [(l, k) for l in ls for k in kappas]

    def row(job):
        l, kappa = job
        if kappa == 0 or l < 0:
            return [l, kappa, None, None, None, "INVALID"], False
        try:
            res = scattering.phase_shift(p, s, cfg["E"], l, kappa)
        except EvanescentChannelError as exc:
            return [l, kappa, None, None, exc.k_squared, "EVANESCENT"], False
        except (ComplexExponentError, PoleError) as exc:
            ksq = model.k_squared(p, s, cfg["E"], model.centrifugal_factor(s.limit, kappa))
            return [l, kappa, None, None, ksq, _marker(exc)], False
        except SOLVER_ERRORS as exc:
            return [l, kappa, None, None, None, type(exc).__name__], True
        return [l, kappa, res.delta, res.k, res.k * res.k, ""], False

    results = parallel_map(row, jobs)
    columns = ["l", "kappa", "delta", "k", "k_squared", "non_computable"]
    emit(render(columns, [r for r, _ in results], cfg["format"]), cfg["out"])
    return EXIT_SOLVER if any(failed for _, failed in results) else EXIT_OK


def _grid(cfg):
    r_min, r_max = cfg["r_min"], cfg["r_max"]
    if r_min is None or r_max is None:
        raise ConfigError("--r-min and --r-max are required")
    if not 0 < r_min < r_max:
        raise ConfigError("grid needs 0 < r_min < r_max")
    if cfg["points"] is not None:
        if cfg["points"] < 2:
            raise ConfigError("--points must be at least 2")
        return np.linspace(r_min, r_max, cfg["points"])
    step = cfg["r_step"] if cfg["r_step"] is not None else (r_max - r_min) / 1000.0
    if not step > 0:
        raise ConfigError("--r-step must be positive")
    count = int(math.floor((r_max - r_min) / step + 1e-9)) + 1
    return r_min + step * np.arange(count)


def envelope_fit(r, values, k, amplitude, window=oracle.FIT_WINDOW):
    """Fit the real part on the k r window; returns (fitted amplitude, predicted, relative gap)."""
    _, fitted = oracle.fit_tail_phase(r, np.real(values), k, window)
    return fitted, amplitude, abs(fitted - amplitude) / amplitude


def cmd_wavefunction(cfg, check_envelope=False):
    s = _symmetry(cfg)
    if s.limit is Limit.NONREL:
        raise ConfigError("wavefunctions are computed for the pspin and spin limits")
    if cfg["E"] is None:
        raise ConfigError("--E is required")
    p = _single(_potentials(cfg), "sigma0/--alpha")
    kappa = _single(cfg["kappa"], "kappa")
    if kappa == 0:
        raise ConfigError("kappa = 0 is not allowed")
    r = _grid(cfg)
    try:
        prof = scattering.radial_wavefunction(p, s, cfg["E"], kappa, r)
    except (EvanescentChannelError, ComplexExponentError, PoleError) as exc:
        sys.stderr.write(f"{_marker(exc)}: {exc}\n")
        return EXIT_SOLVER
    except SOLVER_ERRORS as exc:
        sys.stderr.write(f"solver failure: {exc}\n")
        return EXIT_SOLVER
    rows = [[float(ri), v.real, v.imag, abs(v) ** 2] for ri, v in zip(prof.r_grid, prof.values)]
    emit(render(["r", "re", "im", "abs2"], rows, cfg["format"]), cfg["out"])
    if check_envelope:
        amp, _ = scattering.asymptotic_form(p, s, cfg["E"], kappa)
        k = scattering.phase_shift(p, s, cfg["E"], 0, kappa).k
        try:
            fitted, predicted, gap = envelope_fit(prof.r_grid, prof.values, k, amp)
        except DHSError as exc:
            sys.stderr.write(f"envelope fit failed: {exc}\n")
            return EXIT_SOLVER
        verdict = "ok" if gap < 0.01 else "MISMATCH"
        sys.stderr.write(f"envelope fitted={fitted!r} predicted={predicted!r} rel_gap={gap:.3e} {verdict}\n")
    return EXIT_OK


def cmd_validate(cfg, include_oracle=False, strict_phase=False):
    checks = validation.run_validation(
        include_oracle=include_oracle, strict_phase=strict_phase, workers=worker_count()
    )
    emit(validation.format_report(checks), cfg["out"])
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VALIDATION


def cmd_pekeris_report(cfg):
    for key in ("D", "sigma0", "alpha"):
        if cfg[key] is None:
            cfg[key] = [1.0] if key != "D" else 1.0
    p = _single(_potentials(cfg), "sigma0/--alpha")
    if cfg["r_min"] is None and cfg["r_max"] is None:
        cfg = dict(cfg, r_min=0.01 / p.alpha, r_max=5.0 / p.alpha, points=cfg["points"] or 50)
    r = _grid(cfg)
    rows = [[row.r, row.c0, row.exact, row.approx, row.rel_error] for row in oracle.pekeris_quality_report(p, r)]
    emit(render(["r", "c0", "exact", "approx", "rel_error"], rows, cfg["format"]), cfg["out"])
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key=value file; flags override it")
    common.add_argument("--symmetry", choices=[m.value for m in Limit])
    common.add_argument("--D")
    common.add_argument("--sigma0", help="comma list")
    common.add_argument("--alpha", help="comma list")
    common.add_argument("--c0")
    common.add_argument("--Cps")
    common.add_argument("--Cs")
    common.add_argument("--M", help="mass (reduced mass for nonrel)")
    common.add_argument("--E")
    common.add_argument("--n", help="comma list")
    common.add_argument("--l", help="comma list")
    common.add_argument("--kappa", help="comma list")
    common.add_argument("--sweep-kappa", dest="sweep_kappa", metavar="A..B")
    common.add_argument("--window", metavar="LO,HI")
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--spin-exponent", dest="spin_exponent", choices=["consistent", "literal"])
    common.add_argument("--r-min", dest="r_min")
    common.add_argument("--r-max", dest="r_max")
    common.add_argument("--r-step", dest="r_step")
    common.add_argument("--points")

    parser = argparse.ArgumentParser(prog="dhs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("energies", parents=[common], help="bound-state energies")
    sub.add_parser("phase-shifts", parents=[common], help="scattering phase shifts")
    wf = sub.add_parser("wavefunction", parents=[common], help="radial spinor component on a grid")
    wf.add_argument("--check-envelope", action="store_true", help="fit the tail against the asymptotic envelope")
    val = sub.add_parser("validate", parents=[common], help="table regression and oracle checks")
    val.add_argument("--include-oracle", action="store_true")
    val.add_argument("--strict-phase", action="store_true")
    sub.add_parser("pekeris-report", parents=[common], help="surrogate vs exact 1/r^2")
    return parser


def _attach_negative_values(argv):
    # "--kappa -1,-2" or "--sweep-kappa -5..5" would otherwise read as flags
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok.startswith("--") and "=" not in tok and nxt is not None and re.match(r"-[\d.]", nxt):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    try:
        cfg = resolve(args)
        if args.command == "energies":
            return cmd_energies(cfg)
        if args.command == "phase-shifts":
            return cmd_phase_shifts(cfg)
        if args.command == "wavefunction":
            return cmd_wavefunction(cfg, check_envelope=args.check_envelope)
        if args.command == "validate":
            return cmd_validate(cfg, args.include_oracle, args.strict_phase)
        return cmd_pekeris_report(cfg)
    except ConfigError as exc:
        sys.stderr.write(f"dhs {args.command}: {exc}\n")
        sys.stderr.write(f"usage: dhs {args.command} [options]; run 'dhs {args.command} --help' for the list\n")
        return EXIT_CONFIG
    except SOLVER_ERRORS as exc:
        sys.stderr.write(f"dhs {args.command}: solver failure: {exc}\n")
        return EXIT_SOLVER
    except DHSError as exc:
        sys.stderr.write(f"dhs {args.command}: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

"""Batch verification front-end with JSON reports.

Every verification in the package is exposed as a subcommand that runs
non-interactively, prints a short human-readable summary on stdout, and
optionally writes a JSON report (schema ``report_v1``) with ``--out``.
The process exit status is 0 exactly when every check passes, 1 when a
check fails, and 2 for usage or configuration errors.

Scalar domains: ``--q-mode symbolic`` keeps coefficients in the exact
rational-function field, ``--q-mode rational`` specializes oscillator
actions at the point ``--s0``.  Kernel computations at scale (the
``decompose`` and ``centralizer`` subcommands) need a rational point and
reject symbolic mode with a diagnostic.  Identities that live purely in
the scalar field are checked exactly in either mode; rational mode also
reports their values at s0.

Config file: ``--config FILE`` reads ``key = value`` lines (``#`` starts
a comment).  Keys are the long flag names with ``-`` or ``_``.  Explicit
command-line flags win over file values, which win over defaults.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebras import (
    AlgebraError,
    UnsupportedFlavorError,
    bracket,
    canonical_genspecs,
    central_element,
    embed,
    format_genspec,
    gen,
    source_algebra,
)
from .decompose import (
    DecomposeError,
    TruncationWindow,
    centralizer_bruteforce,
    decompose_report,
)
from .fock import (
    PSI,
    PSIBAR,
    FockError,
    FockKind,
    FockVector,
    format_monomial,
    mode,
    rho_apply,
    rho_element_apply,
)
from .hwv import HwvError, LEMMAS, build_hwv, eta_eval, run_lemma, verify_hwv
from .qfield import (
    ONE,
    QFieldError,
    QScalar,
    ZERO,
    qs_inv,
    qs_qpow,
    qs_specialize,
)
from .torus import TorusElement
from .weights import WeightError, WeightLabel

_PAIR_NAMES = {
    "gl": "gl_gl",
    "so-sp": "so_sp",
    "sp-so": "sp_so",
    "gl_gl": "gl_gl",
    "so_sp": "so_sp",
    "sp_so": "sp_so",
}
_PAIR_DISPLAY = {"gl_gl": "gl", "so_sp": "so-sp", "sp_so": "sp-so"}
_LABEL_GROUP = {"gl_gl": "GL", "so_sp": "O", "sp_so": "Sp"}
_CARTAN_KIND = {"gl_gl": "E", "so_sp": "f", "sp_so": "f"}

_SUBCOMMANDS = (
    "verify-axioms",
    "verify-rep",
    "verify-dualpair",
    "hwv",
    "eta",
    "lemma",
    "decompose",
    "centralizer",
)

# subcommands whose core computation is an exact-kernel solve; these need a
# rational specialization point
_KERNEL_SUBCOMMANDS = ("decompose", "centralizer")


class CliError(ValueError):
    """Unusable configuration or arguments; maps to exit status 2."""


# ---------------------------------------------------------------- run config


@dataclass
class RunConfig:
    """Resolved parameters of one subcommand run."""

    subcommand: str
    pair: str | None = None
    n: int = 1
    m: int = 1
    flavor: str | None = None
    a_max: int = 2
    b_max: int = 2
    max_energy: Fraction | None = None
    max_zero_modes: int | None = None
    q_mode: str = "symbolic"
    s0: Fraction = Fraction(2)
    seed: int = 0
    out: str | None = None
    jobs: int = 1
    samples: int | None = None
    mu: str | None = None
    bar: bool = False
    lemma_id: str | None = None
    r_max: int = 2

    def __post_init__(self):
        if self.subcommand not in _SUBCOMMANDS:
            raise CliError("unknown subcommand %r" % (self.subcommand,))
        if self.n < 1 or self.m < 1:
            raise CliError("--n and --m must be positive")
        if self.a_max < 0 or self.b_max < 0:
            raise CliError("--a-max and --b-max must be nonnegative")
        if self.max_energy is not None and self.max_energy < 0:
            raise CliError("--max-energy must be nonnegative")
        if self.max_zero_modes is not None and self.max_zero_modes < 0:
            raise CliError("--max-zero-modes must be nonnegative")
        if self.q_mode not in ("symbolic", "rational"):
            raise CliError("--q-mode must be symbolic or rational")
        if self.q_mode == "rational" and self.s0 in (0, 1, -1):
            raise CliError(
                "--s0 must avoid 0 and +-1 (q = s0^2 would degenerate)"
            )
        if self.jobs < 1:
            raise CliError("--jobs must be positive")
        if self.samples is not None and self.samples < 1:
            raise CliError("--samples must be positive")
        if self.flavor is not None and self.flavor not in ("int", "half"):
            raise CliError("--flavor must be int or half")

    @property
    def rational(self) -> bool:
        return self.q_mode == "rational"

    @property
    def apply_s0(self):
        return self.s0 if self.rational else None

    def to_json(self) -> dict:
        out = {
            "subcommand": self.subcommand,
            "n": self.n,
            "m": self.m,
            "a_max": self.a_max,
            "b_max": self.b_max,
            "q_mode": self.q_mode,
            "seed": self.seed,
            "jobs": self.jobs,
        }
        if self.pair is not None:
            out["pair"] = _PAIR_DISPLAY[self.pair]
        if self.flavor is not None:
            out["flavor"] = self.flavor
        if self.max_energy is not None:
            out["max_energy"] = str(self.max_energy)
        if self.max_zero_modes is not None:
            out["max_zero_modes"] = self.max_zero_modes
        if self.rational:
            out["s0"] = str(self.s0)
        if self.samples is not None:
            out["samples"] = self.samples
        if self.mu is not None:
            out["mu"] = self.mu
        if self.bar:
            out["bar"] = True
        if self.lemma_id is not None:
            out["lemma_id"] = self.lemma_id
        if self.subcommand == "lemma":
            out["r_max"] = self.r_max
        return out


# ----------------------------------------------------------- value parsing


def _parse_int(name: str, text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise CliError("%s expects an integer, got %r" % (name, text))


def _parse_fraction(name: str, text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError("%s expects a rational like 3/2, got %r" % (name, text))


def _parse_pair(text: str) -> str:
    key = text.strip().lower()
    if key not in _PAIR_NAMES:
        raise CliError(
            "--pair must be one of gl, so-sp, sp-so (got %r)" % (text,)
        )
    return _PAIR_NAMES[key]


def _parse_bool(name: str, text: str) -> bool:
    key = text.strip().lower()
    if key in ("1", "true", "yes", "on"):
        return True
    if key in ("0", "false", "no", "off"):
        return False
    raise CliError("%s expects a boolean, got %r" % (name, text))


def parse_label(pair: str, n: int, mu_text: str) -> WeightLabel:
    """Weight label from a comma list, with an optional trailing ~."""
    body = mu_text.strip()
    tilde = body.endswith("~")
    if tilde:
        body = body[:-1].strip()
    try:
        entries = [int(x) for x in body.split(",")] if body else []
    except ValueError:
        raise CliError("--mu expects a comma list of integers, got %r" % (mu_text,))
    group = _LABEL_GROUP[pair]
    size = 2 * n if pair == "sp_so" else n
    if len(entries) > size:
        raise CliError(
            "--mu has %d entries but the label holds at most %d"
            % (len(entries), size)
        )
    entries = entries + [0] * (size - len(entries))
    try:
        return WeightLabel(group, size, tuple(entries), tilde=tilde)
    except WeightError as exc:
        raise CliError("invalid label %r: %s" % (mu_text, exc))


# ------------------------------------------------------------- config file

_CONFIG_KEYS = {
    "pair",
    "n",
    "m",
    "flavor",
    "a_max",
    "b_max",
    "max_energy",
    "max_zero_modes",
    "q_mode",
    "s0",
    "seed",
    "out",
    "jobs",
    "samples",
    "mu",
    "bar",
    "id",
    "r_max",
}


def load_config_file(path: str) -> dict:
    """Key-value pairs from a flat config file; flags override these."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError("cannot read config file %s: %s" % (path, exc))
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, value = line.split("=", 1)
        elif ":" in line:
            key, value = line.split(":", 1)
        else:
            raise CliError(
                "%s:%d: expected key = value, got %r" % (path, lineno, raw)
            )
        key = key.strip().lower().replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise CliError("%s:%d: unknown key %r" % (path, lineno, key))
        out[key] = value.strip()
    return out


_SUB_DEFAULTS = {
    "verify-axioms": {"n": "4", "a_max": "3", "b_max": "3", "samples": "500"},
    "verify-rep": {
        "n": "2",
        "a_max": "2",
        "b_max": "2",
        "samples": "200",
        "max_energy": "3",
    },
    "verify-dualpair": {"a_max": "2", "b_max": "2"},
    "hwv": {"n": "1", "m": "1", "flavor": "half", "a_max": "2", "b_max": "2"},
    "eta": {"n": "1", "m": "1", "flavor": "half", "b_max": "3"},
    "lemma": {"n": "2", "m": "1", "flavor": "half", "a_max": "2", "b_max": "2"},
    "decompose": {
        "n": "1",
        "m": "1",
        "flavor": "half",
        "a_max": "2",
        "b_max": "2",
        "max_energy": "2",
    },
    "centralizer": {"a_max": "1", "b_max": "1"},
}


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Layer flags over config-file values over subcommand defaults."""
    sub = args.subcommand
    layered = dict(_SUB_DEFAULTS.get(sub, {}))
    if getattr(args, "config", None):
        layered.update(load_config_file(args.config))
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            layered[key] = flag

    def grab(key, conv, default=None):
        if key in layered:
            return conv(layered[key])
        return default

    q_mode = grab("q_mode", str)
    if q_mode is None:
        q_mode = "rational" if sub in _KERNEL_SUBCOMMANDS else "symbolic"
    cfg = RunConfig(
        subcommand=sub,
        pair=grab("pair", _parse_pair),
        n=grab("n", lambda t: _parse_int("--n", t), 1),
        m=grab("m", lambda t: _parse_int("--m", t), 1),
        flavor=grab("flavor", str),
        a_max=grab("a_max", lambda t: _parse_int("--a-max", t), 2),
        b_max=grab("b_max", lambda t: _parse_int("--b-max", t), 2),
        max_energy=grab("max_energy", lambda t: _parse_fraction("--max-energy", t)),
        max_zero_modes=grab(
            "max_zero_modes", lambda t: _parse_int("--max-zero-modes", t)
        ),
        q_mode=q_mode,
        s0=grab("s0", lambda t: _parse_fraction("--s0", t), Fraction(2)),
        seed=grab("seed", lambda t: _parse_int("--seed", t), 0),
        out=grab("out", str),
        jobs=grab("jobs", lambda t: _parse_int("--jobs", t), 1),
        samples=grab("samples", lambda t: _parse_int("--samples", t)),
        mu=grab("mu", str),
        bar=grab("bar", lambda t: _parse_bool("--bar", t), False),
        lemma_id=grab("id", str),
        r_max=grab("r_max", lambda t: _parse_int("--r-max", t), 2),
    )
    if sub in _KERNEL_SUBCOMMANDS and cfg.q_mode == "symbolic":
        raise CliError(
            "%s solves exact kernels at scale, which is not feasible in the "
            "symbolic field; run with --q-mode rational and a point --s0 "
            "(default 2)" % (sub,)
        )
    if sub in ("hwv", "eta", "decompose", "centralizer") and cfg.pair is None:
        raise CliError("%s requires --pair (gl, so-sp, or sp-so)" % (sub,))
    return cfg


# ------------------------------------------------- randomized check builders


def _check(checks: list, check_id: str, generator: str, ok: bool,
           lhs: str = "", rhs: str = "") -> bool:
    if not ok:
        checks.append(
            {
                "check_id": check_id,
                "generator": generator,
                "status": "fail",
                "lhs": lhs,
                "rhs": rhs,
            }
        )
    return ok


def _random_scalar(rng: random.Random) -> QScalar:
    """Nonzero scalar whose denominator stays nonzero away from |s| = 1."""
    while True:
        total = ZERO
        for _ in range(rng.randint(1, 3)):
            c = rng.randint(-3, 3)
            if c:
                total = total + QScalar.from_int(c) * qs_qpow(
                    Fraction(rng.randint(-4, 4), 2)
                )
        if total.is_zero():
            continue
        for _ in range(rng.randint(0, 2)):
            total = total * qs_inv(ONE - qs_qpow(rng.randint(1, 3)))
        return total


def _scalar_field_suite(rng: random.Random, rounds: int, s0: Fraction) -> dict:
    checks = []
    done = 0
    for _ in range(rounds):
        x, y, z = (_random_scalar(rng) for _ in range(3))
        done += _check(
            checks, "field-assoc", "ad-hoc",
            (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z),
        )
        done += _check(
            checks, "field-distrib", "ad-hoc",
            x * (y + z) == x * y + x * z, str(x * (y + z)), str(x * y + x * z),
        )
        done += _check(
            checks, "field-inverse", str(x), x * qs_inv(x) == ONE,
            str(x * qs_inv(x)), "1",
        )
        lhs = qs_specialize(x * y + z, s0)
        rhs = qs_specialize(x, s0) * qs_specialize(y, s0) + qs_specialize(z, s0)
        done += _check(
            checks, "field-specialize", "s0=%s" % (s0,), lhs == rhs,
            str(lhs), str(rhs),
        )
    return {"name": "scalar-field", "checks": done + len(checks), "failures": checks}


def _torus_suite(rng: random.Random, rounds: int) -> dict:
    checks = []
    done = 0
    for _ in range(rounds):
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        u = TorusElement.monomial(a, b, _random_scalar(rng))
        v = TorusElement.monomial(c, d, _random_scalar(rng))
        w = TorusElement.monomial(rng.randint(-2, 2), rng.randint(-2, 2))
        done += _check(
            checks, "torus-assoc", "t0^%d t1^%d" % (a, b),
            (u * v) * w == u * (v * w),
        )
        done += _check(
            checks, "torus-exchange", "((%d,%d),(%d,%d))" % (a, b, c, d),
            u * v == (v * u).scale(qs_qpow(b * c - d * a)),
            str(u * v), str((v * u).scale(qs_qpow(b * c - d * a))),
        )
        done += _check(
            checks, "torus-bar", "((%d,%d),(%d,%d))" % (a, b, c, d),
            (u * v).bar() == v.bar() * u.bar() and u.bar().bar() == u,
        )
        done += _check(
            checks, "torus-unit", "t0^%d t1^%d" % (a, b),
            u * TorusElement.unit() == u,
        )
    return {"name": "quantum-torus", "checks": done + len(checks), "failures": checks}


def _random_gl_spec(rng: random.Random, size: int, a_max: int, b_max: int):
    return (
        "E",
        rng.randint(1, size),
        rng.randint(1, size),
        rng.randint(-a_max, a_max),
        rng.randint(-b_max, b_max),
    )


def jacobi_suite(triples: int = 500, max_size: int = 4, a_max: int = 3,
                 b_max: int = 3, seed: int = 0) -> dict:
    """Jacobi identity and antisymmetry on random centrally extended triples."""
    rng = random.Random(seed)
    checks = []
    done = 0
    for _ in range(triples):
        size = rng.randint(1, max_size)
        specs = [_random_gl_spec(rng, size, a_max, b_max) for _ in range(3)]
        x, y, z = (gen(*s, size) for s in specs)
        if rng.random() < 0.1:
            x = x + central_element(size, _random_scalar(rng))
        total = (
            bracket(x, bracket(y, z))
            + bracket(y, bracket(z, x))
            + bracket(z, bracket(x, y))
        )
        name = ",".join(format_genspec(s) for s in specs)
        done += _check(checks, "jacobi", name, total.is_zero(), str(total), "0")
        done += _check(
            checks, "antisymmetry", name,
            (bracket(x, y) + bracket(y, x)).is_zero(),
        )
    return {"name": "jacobi", "checks": done + len(checks), "failures": checks,
            "triples": triples}


def _random_monomial(rng: random.Random, size: int, flavor: str,
                     max_energy: Fraction) -> tuple:
    modes = []
    budget = Fraction(max_energy)
    for _ in range(rng.randint(0, 4)):
        species = rng.choice((PSI, PSIBAR))
        if flavor == "half":
            level = -Fraction(2 * rng.randint(1, 3) - 1, 2)
        else:
            low = 0 if species == PSI else 1
            level = Fraction(-rng.randint(low, 3))
        if -level > budget:
            continue
        budget += level
        modes.append(mode(species, rng.randint(1, size), level))
    return tuple(sorted(modes))


def _random_sp_spec(rng: random.Random, size: int, a_max: int, b_max: int):
    kind = rng.choice(("f", "f", "g", "h"))
    i, j = rng.randint(1, size), rng.randint(1, size)
    return (kind, i, j, rng.randint(-a_max, a_max), rng.randint(-b_max, b_max))


def rep_suite(samples: int = 200, max_size: int = 2, a_max: int = 2,
              b_max: int = 2, max_energy: Fraction = Fraction(3),
              flavors: tuple = ("half", "int"), seed: int = 0,
              s0: Fraction | None = None) -> dict:
    """Bracket compatibility of the oscillator action on random samples."""
    rng = random.Random(seed)
    checks = []
    done = 0
    unit = ONE if s0 is None else Fraction(1)
    for k in range(samples):
        size = rng.randint(1, max_size)
        flavor = flavors[k % len(flavors)]
        kind = FockKind(size, flavor)
        xs = ("c",) if rng.random() < 0.05 else _random_sp_spec(rng, size, a_max, b_max)
        ys = _random_sp_spec(rng, size, a_max, b_max)
        v = FockVector({_random_monomial(rng, size, flavor, max_energy): unit})
        x_el = central_element(2 * size) if xs == ("c",) else gen(*xs, size)
        y_el = gen(*ys, size)
        lhs = rho_element_apply(kind, bracket(x_el, y_el), v, s0)
        rhs = rho_apply(kind, xs, rho_apply(kind, ys, v, s0), s0) - rho_apply(
            kind, ys, rho_apply(kind, xs, v, s0), s0
        )
        name = "%s,%s on N=%d %s" % (
            format_genspec(xs), format_genspec(ys), size, flavor,
        )
        done += _check(checks, "rep-bracket", name, lhs == rhs, str(lhs), str(rhs))
    return {"name": "oscillator-rep", "checks": done + len(checks),
            "failures": checks, "samples": samples}


def dualpair_suite(pairs=("gl_gl", "so_sp", "sp_so"),
                   grid=((1, 2), (2, 1), (2, 2)), a_max: int = 2,
                   b_max: int = 2, jobs: int = 1) -> dict:
    """All brackets between the two embedded members, over a generator grid."""
    checks = []
    done = 0
    rows = []
    for pair in pairs:
        for n, m in grid:
            fin_family, fin_param = source_algebra(pair, "finite", m, n)
            tor_family, tor_param = source_algebra(pair, "toroidal", m, n)
            fin_specs = [
                s[:3] for s in canonical_genspecs(fin_family, fin_param, 0, 0)
            ]
            tor_specs = list(
                canonical_genspecs(tor_family, tor_param, a_max, b_max)
            ) + [("c",)]

            def run_one(fs, pair=pair, n=n, m=m, tor_specs=tor_specs):
                xf = embed(pair, "finite", m, n, fs)
                bad = []
                for ts in tor_specs:
                    if not bracket(xf, embed(pair, "toroidal", m, n, ts)).is_zero():
                        bad.append((fs, ts))
                return bad

            if jobs > 1:
                with ThreadPoolExecutor(max_workers=jobs) as pool:
                    failures = [f for chunk in pool.map(run_one, fin_specs)
                                for f in chunk]
            else:
                failures = [f for fs in fin_specs for f in run_one(fs)]
            count = len(fin_specs) * len(tor_specs)
            done += count - len(failures)
            for fs, ts in failures:
                _check(
                    checks, "dualpair-bracket",
                    "%s n=%d m=%d [%s, %s]" % (
                        _PAIR_DISPLAY[pair], n, m,
                        format_genspec(fs + (0, 0)), format_genspec(ts),
                    ),
                    False, "nonzero", "0",
                )
            rows.append(
                {
                    "pair": _PAIR_DISPLAY[pair],
                    "n": n,
                    "m": m,
                    "brackets": count,
                    "failures": len(failures),
                }
            )
    return {"name": "dual-pairs", "checks": done + len(checks),
            "failures": checks, "grid": rows}


# ------------------------------------------------------------- subcommands


def _suite_lines(suites: list) -> list:
    lines = []
    for suite in suites:
        lines.append(
            "%-16s %5d checks, %d failures"
            % (suite["name"], suite["checks"], len(suite["failures"]))
        )
        for bad in suite["failures"][:5]:
            lines.append(
                "  FAIL %s at %s" % (bad["check_id"], bad["generator"])
            )
    return lines


def cmd_verify_axioms(cfg: RunConfig) -> tuple:
    rng = random.Random(cfg.seed)
    rounds = max(1, (cfg.samples or 500) // 10)
    suites = [
        _scalar_field_suite(rng, rounds, cfg.s0 if cfg.rational else Fraction(3)),
        _torus_suite(rng, rounds),
        jacobi_suite(
            triples=cfg.samples or 500, max_size=cfg.n,
            a_max=cfg.a_max, b_max=cfg.b_max, seed=cfg.seed,
        ),
        rep_suite(
            samples=25, max_size=min(cfg.n, 2), a_max=min(cfg.a_max, 2),
            b_max=min(cfg.b_max, 2), max_energy=Fraction(3, 2),
            seed=cfg.seed, s0=cfg.apply_s0,
        ),
    ]
    ok = all(not s["failures"] for s in suites)
    report = {"suites": suites}
    return report, ok, _suite_lines(suites)


def cmd_verify_rep(cfg: RunConfig) -> tuple:
    flavors = (cfg.flavor,) if cfg.flavor else ("half", "int")
    suite = rep_suite(
        samples=cfg.samples or 200, max_size=cfg.n, a_max=cfg.a_max,
        b_max=cfg.b_max, max_energy=cfg.max_energy or Fraction(3),
        flavors=flavors, seed=cfg.seed, s0=cfg.apply_s0,
    )
    ok = not suite["failures"]
    return {"suites": [suite]}, ok, _suite_lines([suite])


def cmd_verify_dualpair(cfg: RunConfig) -> tuple:
    pairs = (cfg.pair,) if cfg.pair else ("gl_gl", "so_sp", "sp_so")
    grid = ((1, 2), (2, 1), (2, 2))
    suite = dualpair_suite(
        pairs=pairs, grid=grid, a_max=cfg.a_max, b_max=cfg.b_max, jobs=cfg.jobs
    )
    ok = not suite["failures"]
    lines = _suite_lines([suite])
    for row in suite["grid"]:
        lines.append(
            "  %-6s n=%d m=%d: %d brackets, %d nonzero"
            % (row["pair"], row["n"], row["m"], row["brackets"], row["failures"])
        )
    return {"suites": [suite]}, ok, lines


def _scalar_str(value: QScalar, cfg: RunConfig) -> str:
    if cfg.rational:
        return str(qs_specialize(value, cfg.s0))
    return str(value)


def _eta_table(cfg: RunConfig, label: WeightLabel) -> list:
    rows = [
        {
            "generator": "c",
            "value": str(eta_eval(cfg.pair, cfg.m, label, cfg.flavor, ("c",))),
        }
    ]
    kind = _CARTAN_KIND[cfg.pair]
    for i in range(1, cfg.m + 1):
        for b in range(-cfg.b_max, cfg.b_max + 1):
            spec = (kind, i, i, 0, b)
            value = eta_eval(cfg.pair, cfg.m, label, cfg.flavor, spec)
            row = {"generator": format_genspec(spec), "value": str(value)}
            if cfg.rational:
                row["value_at_s0"] = str(qs_specialize(value, cfg.s0))
            rows.append(row)
    return rows


def _require_label(cfg: RunConfig) -> WeightLabel:
    if cfg.mu is None:
        raise CliError("%s requires --mu (a comma list, like 2,1)" % (cfg.subcommand,))
    if cfg.pair == "sp_so" and cfg.flavor == "int":
        raise CliError(
            "the symplectic-orthogonal pair decomposes only in the "
            "half-integer flavor; --flavor int has no highest-weight theory "
            "for this pair"
        )
    return parse_label(cfg.pair, cfg.n, cfg.mu)


def cmd_hwv(cfg: RunConfig) -> tuple:
    label = _require_label(cfg)
    vector = build_hwv(cfg.pair, cfg.m, label, cfg.flavor, bar=cfg.bar)
    hwv_report = verify_hwv(
        cfg.pair, cfg.m, label, cfg.flavor,
        window=(cfg.a_max, cfg.b_max), bar=cfg.bar,
    )
    eta_rows = _eta_table(cfg, label)
    lines = ["label %s%s" % (label, " (bar)" if cfg.bar else "")]
    for mono in sorted(vector.terms):
        lines.append(
            "  %s * %s" % (_scalar_str(vector.terms[mono], cfg),
                           format_monomial(mono))
        )
    lines.append("eta table (|b| <= %d):" % (cfg.b_max,))
    for row in eta_rows:
        lines.append("  eta(%s) = %s" % (row["generator"], row["value"]))
    lines.append(
        "verify: %d checks, %d failures"
        % (len(hwv_report.checks), len(hwv_report.failures()))
    )
    report = hwv_report.to_json()
    report["vector"] = vector.to_json()
    report["eta"] = eta_rows
    return report, hwv_report.ok, lines


def cmd_eta(cfg: RunConfig) -> tuple:
    label = _require_label(cfg)
    rows = _eta_table(cfg, label)
    lines = ["label %s" % (label,)]
    lines += ["  eta(%s) = %s" % (r["generator"], r["value"]) for r in rows]
    return {"label": str(label), "eta": rows}, True, lines


def cmd_lemma(cfg: RunConfig) -> tuple:
    if cfg.lemma_id is None:
        raise CliError(
            "lemma requires --id; known: %s" % (", ".join(sorted(LEMMAS)))
        )
    checks = run_lemma(
        cfg.lemma_id, cfg.m, cfg.n, cfg.flavor,
        a_max=cfg.a_max, b_max=cfg.b_max, r_max=cfg.r_max,
    )
    failures = [c for c in checks if c["status"] != "pass"]
    lines = [
        "%s: %d checks, %d failures" % (cfg.lemma_id, len(checks), len(failures))
    ]
    for bad in failures[:5]:
        lines.append("  FAIL %s at %s" % (bad["check_id"], bad["generator"]))
    return {"lemma": cfg.lemma_id, "checks": checks}, not failures, lines


def cmd_decompose(cfg: RunConfig) -> tuple:
    window = TruncationWindow(
        cfg.max_energy if cfg.max_energy is not None else Fraction(2),
        a_max=cfg.a_max, b_max=cfg.b_max, max_zero_modes=cfg.max_zero_modes,
    )
    rep = decompose_report(cfg.pair, cfg.m, cfg.n, cfg.flavor, window, s0=cfg.s0)
    lines = []
    for entry in rep.lines:
        lines.append(
            "  %-14s degree %-4s %s" % (
                entry["label"] + ("~bar" if entry["barred"] else ""),
                entry["degree"],
                "ok" if entry["found"] and entry["matches_build_hwv"] else "MISMATCH",
            )
        )
    for row in rep.bookkeeping:
        lines.append(
            "  degree %-4s dim %-5d %s" % (
                row["degree"], row["dim_F"],
                "balanced" if row["balanced"] else "UNBALANCED",
            )
        )
    for msg in rep.anomalies:
        lines.append("  anomaly: %s" % (msg,))
    return rep.to_json(), rep.ok, lines


def cmd_centralizer(cfg: RunConfig) -> tuple:
    report = centralizer_bruteforce(
        cfg.pair, cfg.m, cfg.n, a_max=cfg.a_max, b_max=cfg.b_max, s0=cfg.s0
    )
    lines = []
    for row in report["directions"]:
        lines.append(
            "  equations from %s side: solution dim %d, expected %d, %s"
            % (
                row["equations_from"], row["solution_dim"], row["expected_dim"],
                "spans equal" if row["spans_equal"] else "SPAN MISMATCH",
            )
        )
    return report, report["ok"], lines


_HANDLERS = {
    "verify-axioms": cmd_verify_axioms,
    "verify-rep": cmd_verify_rep,
    "verify-dualpair": cmd_verify_dualpair,
    "hwv": cmd_hwv,
    "eta": cmd_eta,
    "lemma": cmd_lemma,
    "decompose": cmd_decompose,
    "centralizer": cmd_centralizer,
}


# ------------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    for flag, help_text in (
        ("--pair", "dual pair: gl, so-sp, or sp-so"),
        ("--flavor", "weight lattice flavor: int or half"),
        ("--mu", "weight label as a comma list, optional trailing ~"),
        ("--q-mode", "scalar domain: symbolic or rational"),
        ("--s0", "rational specialization point (default 2)"),
        ("--out", "write the JSON report here ('-' for stdout)"),
        ("--config", "layer defaults from a key = value file"),
        ("--max-energy", "energy bound of the truncation window"),
    ):
        shared.add_argument(flag, help=help_text)
    for flag, help_text in (
        ("--n", "finite-member rank parameter"),
        ("--m", "toroidal-member rank parameter"),
        ("--a-max", "bound on the first torus degree"),
        ("--b-max", "bound on the second torus degree"),
        ("--max-zero-modes", "zero-mode cap (required for int decomposition)"),
        ("--seed", "seed for randomized sampling"),
        ("--jobs", "worker pool size for independent checks"),
        ("--samples", "number of randomized samples"),
        ("--r-max", "mode-shift bound for lemma expansions"),
    ):
        shared.add_argument(flag, help=help_text)
    shared.add_argument(
        "--bar", action="store_const", const="true",
        help="use the reflected highest-weight vector",
    )

    parser = argparse.ArgumentParser(
        prog="qdual",
        description="Exact verification harness for toroidal dual pairs "
        "acting on oscillator modules.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    descriptions = {
        "verify-axioms": "scalar field, quantum torus, and bracket axioms",
        "verify-rep": "oscillator action is a Lie module (randomized)",
        "verify-dualpair": "embedded members commute generator by generator",
        "hwv": "build one joint highest-weight vector and verify it",
        "eta": "print the toroidal Cartan eigenvalue table for a label",
        "lemma": "run one mechanized commutation lemma by id",
        "decompose": "search singular vectors and balance dimensions",
        "centralizer": "solve the windowed commutant by brute force",
    }
    for name in _SUBCOMMANDS:
        p = sub.add_parser(name, parents=[shared], help=descriptions[name])
        if name == "lemma":
            p.add_argument("--id", dest="id", help="lemma identifier")
    return parser


def _emit(cfg: RunConfig, report: dict, ok: bool, lines: list) -> None:
    payload = {"schema": "report_v1", "kind": cfg.subcommand, "ok": ok,
               "config": cfg.to_json()}
    payload.update(report)
    for line in lines:
        print(line)
    print("%s: %s" % (cfg.subcommand, "PASS" if ok else "FAIL"))
    text = json.dumps(payload, indent=2, sort_keys=True)
    if cfg.out == "-":
        print(text)
    elif cfg.out:
        Path(cfg.out).write_text(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        started = time.time()
        report, ok, lines = _HANDLERS[cfg.subcommand](cfg)
    except (CliError, AlgebraError, DecomposeError, FockError, HwvError,
            QFieldError, WeightError, UnsupportedFlavorError) as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2
    lines.append("elapsed %.1fs" % (time.time() - started))
    _emit(cfg, report, ok, lines)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

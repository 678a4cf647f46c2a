"""Seeded random verification suites.

Each trial draws its inputs from a ``random.Random`` seeded with
``trial_seed(seed, index)``, so a report depends only on the configuration
and never on execution order or worker count. Inputs outside the domain of a
rational map are redrawn (from the same stream) up to ``resample_cap`` times.
All comparisons are exact.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import actions, rmatrix, structure
from .actions import ActionReport, Grid
from .algebra import LAMBDA, Matrix, mat_det, mat_inverse, mat_mul
from .errors import ConfigError, DomainError, Singular
from .rmatrix import TorusPoint

MASK64 = (1 << 64) - 1
DEFAULT_BOUND = 20
DEFAULT_RESAMPLE_CAP = 100


def splitmix64(state: int) -> int:
    z = (state + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(seed: int, index: int) -> int:
    """``splitmix64(splitmix64(seed) ^ index)``."""
    return splitmix64(splitmix64(seed & MASK64) ^ index)


def sample_rational(rng: random.Random, bound: int) -> Fraction:
    """``s * p / q`` with p, q uniform in 1..bound and a uniform sign s."""
    p = rng.randint(1, bound)
    q = rng.randint(1, bound)
    s = 1 if rng.random() < 0.5 else -1
    return Fraction(s * p, q)


def sample_point(n: int, rng: random.Random, bound: int = DEFAULT_BOUND) -> TorusPoint:
    if bound < 1:
        raise ConfigError("bound must be at least 1")
    return TorusPoint(tuple(sample_rational(rng, bound) for _ in range(n)))


def sample_grid(n: int, m: int, rng: random.Random, bound: int = DEFAULT_BOUND) -> Grid:
    return Grid(tuple(tuple(sample_rational(rng, bound) for _ in range(m)) for _ in range(n)))


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    n: int = 3
    m: int = 3
    trials: int = 100
    seed: int = 0
    bound: int = DEFAULT_BOUND
    resample_cap: int = DEFAULT_RESAMPLE_CAP
    output: str = "text"
    workers: int = 1

    def validate(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if self.bound < 1:
            raise ConfigError("bound must be at least 1")
        if self.n < 1 or self.m < 1:
            raise ConfigError("dimensions must be positive")
        if self.resample_cap < 1:
            raise ConfigError("resample cap must be at least 1")
        if not 0 <= self.seed <= MASK64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if self.output not in ("text", "json"):
            raise ConfigError(f"unknown output format {self.output!r}")
        if self.suite != "all":
            SUITES[self.suite].check_shape(self)


@dataclass
class SuiteReport:
    suite: str
    n: int
    m: int
    trials: int
    seed: int
    bound: int
    resampled: int = 0
    completed: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "m": self.m,
            "trials": self.trials,
            "seed": self.seed,
            "bound": self.bound,
            "resampled": self.resampled,
            "failures": list(self.failures),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "passed": self.passed,
        }


# -- suites --------------------------------------------------------------------

Trial = Callable[[random.Random, SuiteConfig], "tuple[dict, ActionReport]"]


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    run: Trial
    min_n: int = 1
    min_m: int = 1
    uses_m: bool = False

    def check_shape(self, cfg: SuiteConfig):
        if cfg.n < self.min_n or (self.uses_m and cfg.m < self.min_m):
            raise ConfigError(
                f"suite {self.name} needs n >= {self.min_n}"
                + (f" and m >= {self.min_m}" if self.uses_m else "")
            )


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(_fmt(u) for u in v) + ")"
    return str(v)


def _all_reports(reports) -> ActionReport:
    for r in reports:
        if not r.passed:
            return r
    return ActionReport.ok()


def _equal(identity: str, left, right) -> ActionReport:
    return ActionReport.ok() if left == right else ActionReport.fail(identity, left, right)


def _trial_qybe(rng, cfg):
    x, y, z = (sample_point(cfg.n, rng, cfg.bound) for _ in range(3))
    return {"x": x, "y": y, "z": z}, actions.qybe_check(x, y, z)


def _trial_involution(rng, cfg):
    x, y = (sample_point(cfg.n, rng, cfg.bound) for _ in range(2))
    return {"x": x, "y": y}, actions.involutivity_check(x, y)


def _trial_nondegeneracy(rng, cfg):
    y = sample_point(cfg.n, rng, cfg.bound)
    a = sample_rational(rng, cfg.bound)
    b = y.level
    numeric = _equal("det A_f(y, a) = (b - a)^(n-1)", mat_det(rmatrix.matrix_af(y, a)), (b - a) ** (cfg.n - 1))
    symbolic = _equal(
        "det A_f(y, λ) = (b - λ)^(n-1)",
        mat_det(rmatrix.matrix_af(y, LAMBDA)),
        (b - LAMBDA) ** (cfg.n - 1),
    )
    return {"y": y, "a": a}, _all_reports([numeric, symbolic])


def _trial_inverse(rng, cfg):
    y = sample_point(cfg.n, rng, cfg.bound)
    a = sample_rational(rng, cfg.bound)
    if a == y.level:
        raise Singular("a equals level(y)")
    A = rmatrix.matrix_af(y, a)
    closed = rmatrix.matrix_af_inv(y, a)
    return {"y": y, "a": a}, _all_reports(
        [
            _equal("A_f * closed-form inverse = I", mat_mul(A, closed), Matrix.identity(cfg.n)),
            _equal("closed-form inverse = elimination inverse", closed, mat_inverse(A)),
        ]
    )


def _trial_conjugation(rng, cfg):
    ts = tuple(sample_point(cfg.n, rng, cfg.bound) for _ in range(cfg.m))
    reports = [actions.rho_conjugation_check(ts, i) for i in range(1, cfg.m)]
    return {f"x{k + 1}": t for k, t in enumerate(ts)}, _all_reports(reports)


def _grid_trial(check):
    def run(rng, cfg):
        grid = sample_grid(cfg.n, cfg.m, rng, cfg.bound)
        reports = [check(grid, i, j) for i in range(1, cfg.m) for j in range(1, cfg.n)]
        return {"grid": grid}, _all_reports(reports)

    return run


def _trial_relation(rng, cfg):
    x, y = (sample_point(cfg.n, rng, cfg.bound) for _ in range(2))
    return {"x": x, "y": y}, structure.relation_check(x, y)


def _trial_transpose(rng, cfg):
    z = sample_point(cfg.n, rng, cfg.bound)
    return {"z": z}, structure.transpose_check(z)


def _window(rng, cfg):
    return tuple(sample_rational(rng, cfg.bound) for _ in range(3))


def _trial_identity18(rng, cfg):
    Xw, Yw = _window(rng, cfg), _window(rng, cfg)
    lhs, rhs = rmatrix.involutivity_kernel(Xw, Yw)
    return {"X": Xw, "Y": Yw}, _equal("window identity = 1/Y_i", lhs, rhs)


def _trial_b_symmetry(rng, cfg):
    Xw, Yw = _window(rng, cfg), _window(rng, cfg)
    return {"X": Xw, "Y": Yw}, actions.b_symmetry_check(Xw, Yw)


def _trial_cross_oracle(rng, cfg):
    x, y = (sample_point(cfg.n, rng, cfg.bound) for _ in range(2))
    direct = rmatrix.apply_R(x, y)
    return {"x": x, "y": y}, _all_reports(
        [
            _equal("apply_R = closed form", tuple(direct), tuple(rmatrix.closed_form_R(x, y))),
            _equal("f_y(x) = plus-chart matrix route", direct.x_out, rmatrix.f_by_matrix(x, y)),
            _equal("g_x(y) = minus-chart matrix route", direct.y_out, rmatrix.g_by_matrix(x, y)),
        ]
    )


def _trial_phi_gamma(rng, cfg):
    x, y = (sample_point(cfg.n, rng, cfg.bound) for _ in range(2))
    xp, yp = rmatrix.apply_R(x, y)
    X, Y = rmatrix.partial_products(x), rmatrix.partial_products(y)
    phi = rmatrix.phi_map(Y, rmatrix.partial_products(xp))
    gamma = rmatrix.gamma_map(X, rmatrix.partial_products(yp))
    checks = [
        ActionReport.ok()
        if phi.proportional_to(X.base[:-1])
        else ActionReport.fail("phi ~ (X_0..X_n-1)", phi.entries, X.base[:-1]),
        ActionReport.ok()
        if gamma.proportional_to(Y.base[1:])
        else ActionReport.fail("gamma ~ (Y_1..Y_n)", gamma.entries, Y.base[1:]),
        _equal("f_y^-1(f_y(x)) = x", rmatrix.f_inverse(y, xp), x),
        _equal("g_x^-1(g_x(y)) = y", rmatrix.g_inverse(x, yp), y),
    ]
    return {"x": x, "y": y}, _all_reports(checks)


SUITES: dict = {
    s.name: s
    for s in [
        Suite("qybe", "quantum Yang-Baxter equation R12 R13 R23 = R23 R13 R12", _trial_qybe),
        Suite("involution", "involutivity R21 R = 1", _trial_involution),
        Suite(
            "nondegeneracy",
            "det A_f(y, a) = (b - a)^(n-1), numerically and with a = λ",
            _trial_nondegeneracy,
        ),
        Suite(
            "inverse-closed-form",
            "closed-form bidiagonal inverse of A_f, against elimination",
            _trial_inverse,
        ),
        Suite(
            "conjugation",
            "P R_(i,i+1) = J^-1 s_i J on m-tuples of points",
            _trial_conjugation,
            min_m=2,
            uses_m=True,
        ),
        Suite(
            "commute",
            "row and column actions on n x m grids commute",
            _grid_trial(actions.commutation_check),
            min_n=2,
            min_m=2,
            uses_m=True,
        ),
        Suite(
            "star-formulas",
            "G/H-sum closed forms for one and two grid moves",
            _grid_trial(actions.star_formula_check),
            min_n=2,
            min_m=2,
            uses_m=True,
        ),
        Suite(
            "relation",
            "f_y f_x = f_x' f_y' and g_x g_y = g_y' g_x' in PGL_n(Q(λ))",
            _trial_relation,
        ),
        Suite("transpose", "A_f(z, λ)^T = A_g(z, λ)", _trial_transpose),
        Suite("identity18", "local window identity behind involutivity", _trial_identity18),
        Suite("b-symmetry", "B-operator coefficients symmetric in X, Y", _trial_b_symmetry),
        Suite(
            "cross-oracle",
            "recursive R, G-sum closed form and both matrix charts agree",
            _trial_cross_oracle,
        ),
        Suite("phi-gamma", "phi and gamma invert f and g", _trial_phi_gamma),
    ]
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def _run_trial(args) -> tuple:
    """Returns (index, completed, resampled, failure-or-None)."""
    cfg, index = args
    suite = SUITES[cfg.suite]
    rng = random.Random(trial_seed(cfg.seed, index))
    resampled = 0
    last_error = ""
    for _ in range(cfg.resample_cap):
        try:
            inputs, report = suite.run(rng, cfg)
        except DomainError as exc:
            resampled += 1
            last_error = str(exc)
            continue
        if report.passed:
            return index, True, resampled, None
        failure = {
            "trial": index,
            "inputs": {k: _fmt(v) for k, v in inputs.items()},
            "identity": report.identity,
            "left": _fmt(report.left),
            "right": _fmt(report.right),
        }
        return index, True, resampled, failure
    failure = {
        "trial": index,
        "inputs": {},
        "identity": "resample cap exhausted",
        "left": last_error,
        "right": "",
    }
    return index, False, resampled, failure


def applicable_suites(cfg: SuiteConfig) -> list:
    out = []
    for name, suite in SUITES.items():
        try:
            suite.check_shape(cfg)
        except ConfigError:
            continue
        out.append(name)
    return out


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    cfg.validate()
    start = time.perf_counter()
    report = SuiteReport(cfg.suite, cfg.n, cfg.m, cfg.trials, cfg.seed, cfg.bound)
    names = applicable_suites(cfg) if cfg.suite == "all" else [cfg.suite]
    for name in names:
        sub = _replace(cfg, name)
        jobs = [(sub, t) for t in range(cfg.trials)]
        if cfg.workers > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                results = list(pool.map(_run_trial, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
        else:
            results = [_run_trial(j) for j in jobs]
        for _, completed, resampled, failure in sorted(results, key=lambda r: r[0]):
            report.completed += completed
            report.resampled += resampled
            if failure is not None:
                if cfg.suite == "all":
                    failure = dict(failure, identity=f"{name}: {failure['identity']}")
                report.failures.append(failure)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def _replace(cfg: SuiteConfig, suite: str) -> SuiteConfig:
    d = asdict(cfg)
    d["suite"] = suite
    return SuiteConfig(**d)


def format_report(report: SuiteReport) -> str:
    names = [report.suite] if report.suite != "all" else applicable_suites(
        SuiteConfig("all", report.n, report.m)
    )
    lines = []
    for name in names:
        lines.append(f"{name}: {SUITES[name].description}")
    status = "PASS" if report.passed else "FAIL"
    lines.append(
        f"{status}  suite={report.suite} n={report.n} m={report.m} trials={report.trials} "
        f"seed={report.seed} bound={report.bound} completed={report.completed} "
        f"resampled={report.resampled} failures={len(report.failures)} "
        f"elapsed={report.elapsed_ms:.0f}ms"
    )
    for f in report.failures[:10]:
        lines.append(f"  trial {f['trial']}: {f['identity']}")
        for k, v in f["inputs"].items():
            lines.append(f"    {k} = {v}")
        lines.append(f"    left  = {f['left']}")
        lines.append(f"    right = {f['right']}")
    if len(report.failures) > 10:
        lines.append(f"  ... {len(report.failures) - 10} more")
    return "\n".join(lines)

"""Identity-verification suites with structured, reproducible reports.

Each suite compares two independently computed sides of one identity over a
full index range and reports pass/fail with the first counterexample found.
Suites are independent: run_all executes every one of them, never letting a
failure in one abort another, and aggregates the reports.

Numeric t samples are drawn as fractions p/q with 1 <= p, q <= 50 and
rejection-sampled past the bad set (vanishing entry denominators, vanishing
leading minors): a rejected sample is recorded and replaced, up to 100
attempts per slot.  With a fixed seed the sample stream, and with it the
whole report list, is identical from run to run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_form
from .errors import CauchyLUError, RetriesExhausted, SingularEntry, ZeroPivot
from .formats import serialize_value
from .matrix import build_matrix, det_elimination, lu_doolittle
from .ratfunc import SYMBOLIC_T

MAX_SAMPLE_ATTEMPTS = 100

SUITE_LU_PRODUCT = "lu_product"
SUITE_FACTORS_MATCH = "factors_match"
SUITE_GAMMA = "gamma_identities"
SUITE_CHAIN = "chain_t1"


@dataclass(frozen=True)
class Counterexample:
    """One concrete index tuple where the two sides differ."""

    indices: dict
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"indices": dict(self.indices), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    suite: str
    range: dict
    mode: str
    t_samples: list[str] = field(default_factory=list)
    discarded_t_samples: list[str] = field(default_factory=list)
    passed: bool = False
    skipped: bool = False
    counterexample: Counterexample | None = None
    error: str | None = None
    elapsed_ms: float = 0.0

    def to_dict(self, include_elapsed: bool = False) -> dict:
        # Key order is the wire format; elapsed is opt-in because timings
        # would break byte-for-byte reproducibility of seeded runs.
        out = {
            "suite": self.suite,
            "range": dict(self.range),
            "mode": self.mode,
            "t_samples": list(self.t_samples),
            "discarded_t_samples": list(self.discarded_t_samples),
            "passed": self.passed,
            "skipped": self.skipped,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "error": self.error,
        }
        if include_elapsed:
            out["elapsed_ms"] = self.elapsed_ms
        return out


@dataclass
class VerifyConfig:
    seed: int = 0
    s_max_symbolic: int = 6
    s_max_numeric: int = 12
    s_max_factors_numeric: int = 10
    n_t_samples: int = 20
    gamma_max: int = 8
    chain_max: int = 20
    chain_elimination_cap: int = 12


def _sample_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 50), rng.randint(1, 50))


def _compare_matrices(computed, reference, base_indices: dict) -> Counterexample | None:
    n = computed.n_rows
    for i in range(1, n + 1):
        for l in range(1, n + 1):
            a = computed.at(i, l)
            b = reference.at(i, l)
            if a != b:
                indices = dict(base_indices)
                indices.update(i=i, l=l)
                return Counterexample(indices, serialize_value(a), serialize_value(b))
    return None


def _run_numeric(report: VerificationReport, t_samples, n_samples, rng, check_one):
    """Shared numeric-mode driver: rejection sampling plus per-sample checks.

    ``check_one(t)`` returns a Counterexample or None and may raise
    SingularEntry/ZeroPivot, which discards the sample and draws a fresh one.
    """
    provided = list(t_samples) if t_samples is not None else []
    wanted = len(provided) if t_samples is not None else n_samples
    if rng is None:
        rng = random.Random("resample")
    for _ in range(wanted):
        counterexample = None
        for _ in range(MAX_SAMPLE_ATTEMPTS):
            t = provided.pop(0) if provided else _sample_rational(rng)
            try:
                counterexample = check_one(t)
            except (SingularEntry, ZeroPivot):
                report.discarded_t_samples.append(str(t))
                continue
            report.t_samples.append(str(t))
            break
        else:
            raise RetriesExhausted(MAX_SAMPLE_ATTEMPTS)
        if counterexample is not None:
            report.counterexample = counterexample
            return
    report.passed = True


def _finish(report: VerificationReport, started: float) -> VerificationReport:
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return report


def verify_lu_product(
    s_max: int,
    mode: str = "symbolic",
    t_samples=None,
    n_samples: int = 20,
    rng: random.Random | None = None,
) -> VerificationReport:
    """Check that the closed-form factors multiply back to the matrix.

    Entrywise exact equality of (lower factor) @ (upper factor) against the
    built matrix, for every s = 1..s_max, symbolically or at numeric t
    samples.
    """
    started = time.perf_counter()
    report = VerificationReport(SUITE_LU_PRODUCT, {"s_max": s_max}, mode)
    if s_max < 1:
        report.skipped = True
        return _finish(report, started)

    def check_one_size(s: int, t, base: dict) -> Counterexample | None:
        product = closed_form.build_L(s, t) @ closed_form.build_U(s, t)
        target = build_matrix(s, t)
        return _compare_matrices(product, target, base)

    if mode == "symbolic":
        for s in range(1, s_max + 1):
            found = check_one_size(s, SYMBOLIC_T, {"s": s})
            if found is not None:
                report.counterexample = found
                return _finish(report, started)
        report.passed = True
        return _finish(report, started)

    def check_one(t) -> Counterexample | None:
        for s in range(1, s_max + 1):
            found = check_one_size(s, t, {"s": s, "t": str(t)})
            if found is not None:
                return found
        return None

    _run_numeric(report, t_samples, n_samples, rng, check_one)
    return _finish(report, started)


def verify_factors_match(
    s_max: int,
    mode: str = "symbolic",
    t_samples=None,
    n_samples: int = 20,
    rng: random.Random | None = None,
) -> VerificationReport:
    """Check the closed-form factors against elimination-computed factors.

    Runs Doolittle elimination on the built matrix and compares both factors
    entrywise with the directly assembled ones.  Numeric samples that hit a
    zero pivot are discarded and resampled, and show up in the report.
    """
    started = time.perf_counter()
    report = VerificationReport(SUITE_FACTORS_MATCH, {"s_max": s_max}, mode)
    if s_max < 1:
        report.skipped = True
        return _finish(report, started)

    def check_one_size(s: int, t, base: dict) -> Counterexample | None:
        factors = lu_doolittle(build_matrix(s, t))
        found = _compare_matrices(
            closed_form.build_L(s, t), factors.L, {**base, "factor": "L"}
        )
        if found is not None:
            return found
        return _compare_matrices(
            closed_form.build_U(s, t), factors.U, {**base, "factor": "U"}
        )

    if mode == "symbolic":
        for s in range(1, s_max + 1):
            found = check_one_size(s, SYMBOLIC_T, {"s": s})
            if found is not None:
                report.counterexample = found
                return _finish(report, started)
        report.passed = True
        return _finish(report, started)

    def check_one(t) -> Counterexample | None:
        for s in range(1, s_max + 1):
            found = check_one_size(s, t, {"s": s, "t": str(t)})
            if found is not None:
                return found
        return None

    _run_numeric(report, t_samples, n_samples, rng, check_one)
    return _finish(report, started)


def verify_gamma_identities(i_max: int = 8, j_max: int = 8, l_max: int = 8) -> VerificationReport:
    """Check both Gamma-product identities over the full index grid.

    Exact rational-function equality of the literal product against its
    rising-factorial form, for the row identity on (i, j) and the column
    identity on (j, l).
    """
    started = time.perf_counter()
    bounds = {"i_max": i_max, "j_max": j_max, "l_max": l_max}
    report = VerificationReport(SUITE_GAMMA, bounds, "symbolic")
    if min(i_max, j_max, l_max) < 1:
        report.skipped = True
        return _finish(report, started)
    for i in range(1, i_max + 1):
        for j in range(1, j_max + 1):
            lhs, rhs = closed_form.gamma_identity_left(i, j)
            if lhs != rhs:
                report.counterexample = Counterexample(
                    {"identity": "left", "i": i, "j": j},
                    serialize_value(lhs),
                    serialize_value(rhs),
                )
                return _finish(report, started)
    for j in range(1, j_max + 1):
        for l in range(1, l_max + 1):
            lhs, rhs = closed_form.gamma_identity_right(j, l)
            if lhs != rhs:
                report.counterexample = Counterexample(
                    {"identity": "right", "j": j, "l": l},
                    serialize_value(lhs),
                    serialize_value(rhs),
                )
                return _finish(report, started)
    report.passed = True
    return _finish(report, started)


def verify_chain(s_max: int = 20, elimination_cap: int = 12) -> VerificationReport:
    """Check the six t=1 expressions against each other and the determinant.

    For each s: all six chain values must agree, the last must be positive
    and equal the diagonal-product determinant at t=1, and -- up to the
    elimination cap -- equal the Gaussian-elimination determinant as well.
    """
    started = time.perf_counter()
    bounds = {"s_max": s_max, "elimination_cap": elimination_cap}
    report = VerificationReport(SUITE_CHAIN, bounds, "numeric", t_samples=["1"])
    if s_max < 1:
        report.skipped = True
        return _finish(report, started)
    for s in range(1, s_max + 1):
        chain = closed_form.chain_t1(s)
        disagreement = chain.first_disagreement()
        if disagreement is not None:
            ref, offender = disagreement
            report.counterexample = Counterexample(
                {"s": s, "expressions": [ref, offender]},
                serialize_value(chain.values[ref - 1]),
                serialize_value(chain.values[offender - 1]),
            )
            return _finish(report, started)
        value = chain.values[5]
        if not value > 0:
            report.counterexample = Counterexample(
                {"s": s, "check": "positivity"}, serialize_value(value), "> 0"
            )
            return _finish(report, started)
        diagonal = closed_form.det_closed(s, 1)
        if diagonal != value:
            report.counterexample = Counterexample(
                {"s": s, "check": "diagonal_product"},
                serialize_value(diagonal),
                serialize_value(value),
            )
            return _finish(report, started)
        if s <= elimination_cap:
            eliminated = det_elimination(build_matrix(s, 1))
            if eliminated != value:
                report.counterexample = Counterexample(
                    {"s": s, "check": "elimination"},
                    serialize_value(eliminated),
                    serialize_value(value),
                )
                return _finish(report, started)
    report.passed = True
    return _finish(report, started)


def run_all(config: VerifyConfig | None = None) -> list[VerificationReport]:
    """Run every suite with per-suite seeded sampling; nothing aborts early.

    A suite that raises (e.g. RetriesExhausted) is reported as failed with
    the error message; the remaining suites still run.
    """
    cfg = config or VerifyConfig()

    def suite_rng(name: str) -> random.Random:
        return random.Random(f"{cfg.seed}:{name}")

    plan = [
        (
            SUITE_LU_PRODUCT,
            {"s_max": cfg.s_max_symbolic},
            "symbolic",
            lambda: verify_lu_product(cfg.s_max_symbolic, "symbolic"),
        ),
        (
            SUITE_LU_PRODUCT,
            {"s_max": cfg.s_max_numeric},
            "numeric",
            lambda: verify_lu_product(
                cfg.s_max_numeric,
                "numeric",
                n_samples=cfg.n_t_samples,
                rng=suite_rng("lu_product"),
            ),
        ),
        (
            SUITE_FACTORS_MATCH,
            {"s_max": cfg.s_max_symbolic},
            "symbolic",
            lambda: verify_factors_match(cfg.s_max_symbolic, "symbolic"),
        ),
        (
            SUITE_FACTORS_MATCH,
            {"s_max": cfg.s_max_factors_numeric},
            "numeric",
            lambda: verify_factors_match(
                cfg.s_max_factors_numeric,
                "numeric",
                n_samples=cfg.n_t_samples,
                rng=suite_rng("factors_match"),
            ),
        ),
        (
            SUITE_GAMMA,
            {"i_max": cfg.gamma_max, "j_max": cfg.gamma_max, "l_max": cfg.gamma_max},
            "symbolic",
            lambda: verify_gamma_identities(cfg.gamma_max, cfg.gamma_max, cfg.gamma_max),
        ),
        (
            SUITE_CHAIN,
            {"s_max": cfg.chain_max, "elimination_cap": cfg.chain_elimination_cap},
            "numeric",
            lambda: verify_chain(cfg.chain_max, cfg.chain_elimination_cap),
        ),
    ]

    reports = []
    for name, bounds, mode, runner in plan:
        started = time.perf_counter()
        try:
            reports.append(runner())
        except CauchyLUError as exc:
            failed = VerificationReport(name, bounds, mode, error=str(exc))
            reports.append(_finish(failed, started))
    return reports

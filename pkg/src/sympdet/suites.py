"""Property suites tying the structure checks together.

Each suite maps a trial index to a deterministic child seed, runs one
independent check, and aggregates pass counts, worst residuals, and
reproducible failure records into a :class:`~sympdet.report.Report`.  Trials
touch no shared state, so they can be executed in any order or in parallel;
results are merged by trial index and do not depend on scheduling.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass

from ._version import __version__
from .generators import GeneratorConfig, elementary_factor, embed_orthogonal_pair, generate
from .linalg import (
    log_det,
    lu_decompose,
    frobenius,
    identity,
    phase_angle,
    random_gaussian,
    rng_from_seed,
    solve,
    split_seed,
    zeros,
)
from .matio import format_matrix
from .report import Report
from .symplectic import (
    BlockPair,
    DEFAULT_TOLERANCES,
    FormulaInconclusiveError,
    GroupKind,
    MembershipError,
    ToleranceConfig,
    block_pair,
    certify_symplectic,
    conj_block_det,
    conj_block_reduction,
    conj_symplectic_det,
    conj_symplectic_residual,
    membership_residual,
    symplectic_form,
    unitary_split_det,
)

SUITE_IDS = (
    "form-identities",
    "real-theorem",
    "complex-theorem",
    "lemma",
    "ineq-real",
    "conj-formula",
    "generator-sanity",
)

_DEFAULT_TRIALS = {
    "form-identities": 8,
    "real-theorem": 200,
    "complex-theorem": 200,
    "lemma": 500,
    "ineq-real": 500,
    "conj-formula": 200,
    "generator-sanity": 60,
}

_DEFAULT_HALF_DIMS = {
    "form-identities": tuple(range(1, 9)),
    "real-theorem": (1, 2, 4, 8, 10),
    "complex-theorem": (1, 2, 4, 8, 10),
    "lemma": tuple(range(1, 9)),
    "ineq-real": tuple(range(1, 9)),
    "conj-formula": tuple(range(1, 17)),
    "generator-sanity": (1, 2, 3, 4, 6, 8),
}


@dataclass(frozen=True)
class SuiteSpec:
    """One suite run: which checks, how many trials, over which sizes."""

    suite_id: str
    trials: int
    half_dims: tuple[int, ...]
    seed: int = 0
    tolerances: ToleranceConfig = DEFAULT_TOLERANCES

    def __post_init__(self):
        if self.suite_id not in SUITE_IDS:
            raise ValueError(f"unknown suite {self.suite_id!r}; known: {', '.join(SUITE_IDS)}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.half_dims or any(n < 1 for n in self.half_dims):
            raise ValueError("half_dims must be nonempty, all >= 1")


def default_suite_spec(suite_id: str, seed: int = 0, trials: int | None = None,
                       half_dims: tuple[int, ...] | None = None,
                       tolerances: ToleranceConfig = DEFAULT_TOLERANCES) -> SuiteSpec:
    if suite_id not in SUITE_IDS:
        raise ValueError(f"unknown suite {suite_id!r}; known: {', '.join(SUITE_IDS)}")
    return SuiteSpec(
        suite_id=suite_id,
        trials=trials if trials is not None else _DEFAULT_TRIALS[suite_id],
        half_dims=tuple(half_dims) if half_dims is not None else _DEFAULT_HALF_DIMS[suite_id],
        seed=seed,
        tolerances=tolerances,
    )


@dataclass(frozen=True)
class TrialResult:
    residuals: dict
    passed: bool


def _bounds(suite_id: str, tol: ToleranceConfig) -> dict:
    common_cert = {
        "membership": tol.membership,
        "detPhaseSign": tol.det_one,
        "gramPositive": 0.0,
        "gramReal": tol.phase,
        "factorIdentity": tol.identity_rel,
        "blockNonneg": tol.nonneg,
        "splitIdentity": tol.identity_rel,
        "splitConjugate": tol.identity_rel,
        "detOne": tol.det_one,
    }
    return {
        "form-identities": {
            "formSquare": tol.exact_residual,
            "formSkew": tol.exact_residual,
            "formInverse": tol.exact_residual,
            "detOne": tol.exact_residual,
        },
        "real-theorem": common_cert,
        "complex-theorem": common_cert,
        "lemma": {
            "imagSlack": tol.nonneg,
            "realSlack": tol.nonneg,
            "solve": tol.identity_rel,
            "reduction": tol.identity_rel,
            "commuting": tol.identity_rel,
            "eeNonneg": tol.nonneg,
        },
        "ineq-real": {
            "imagSlack": tol.ineq_real,
            "realSlack": tol.ineq_real,
            "splitAgreement": tol.ineq_real,
            "splitConjugate": tol.identity_rel,
        },
        "conj-formula": {
            "membership": tol.membership,
            "detModulusOne": tol.det_one,
            "phaseAgreement": tol.phase,
        },
        "generator-sanity": {
            "factorResidual": tol.factor_residual,
            "productResidual": tol.product_residual,
            "detOne": tol.det_one,
            "detUnitModulus": tol.det_one,
            "determinism": 0.0,
        },
    }[suite_id]


def _passes(residuals: dict, bounds: dict) -> bool:
    return all(v <= bounds[k] for k, v in residuals.items())


def _sign_slacks(dd, tol: ToleranceConfig) -> tuple[float, float]:
    """(imag, -real) violations of det >= 0, with the absolute floor applied."""
    if dd.log_magnitude == -math.inf:
        return 0.0, 0.0
    allowance = tol.nonneg_abs * math.exp(min(-dd.log_magnitude, 700.0))
    return (max(0.0, abs(dd.phase.imag) - allowance),
            max(0.0, -dd.phase.real - allowance))


def _trial_form_identities(n: int, seed: int, tol: ToleranceConfig) -> dict:
    j = symplectic_form(n)
    eye = identity(2 * n)
    return {
        "formSquare": frobenius(j @ j + eye),
        "formSkew": frobenius(j.T + j),
        "formInverse": frobenius(j.T @ j - eye),
        "detOne": abs(log_det(j).value - 1.0),
    }


def _trial_theorem(group: GroupKind, n: int, seed: int, tol: ToleranceConfig) -> dict:
    cfg = GeneratorConfig(half_dim=n, target=group, seed=seed)
    a = generate(cfg, tol=tol)
    try:
        cert = certify_symplectic(a, group, tol)
    except MembershipError:
        return {"membership": math.inf}
    return dict(cert.residuals)


def _lemma_inputs(n: int, seed: int):
    """(C, D, mode) with mode 0 generic, 1 and 2 near-singular C."""
    rng = rng_from_seed(seed)
    mode = int(rng.integers(0, 3))
    c = random_gaussian(rng, n, "C")
    d = random_gaussian(rng, n, "C")
    if mode:
        eps = 1e-2 if mode == 1 else 1e-6
        if n == 1:
            rank_deficient = zeros(1, "C")
        else:
            rank_deficient = random_gaussian(rng, n, "C")
            coeffs = rng.standard_normal(n - 1) + 1j * rng.standard_normal(n - 1)
            rank_deficient[:, -1] = rank_deficient[:, :-1] @ coeffs
        c = eps * identity(n, "C") + rank_deficient
    return c, d, mode


def _trial_lemma(n: int, seed: int, tol: ToleranceConfig) -> dict:
    c, d, _ = _lemma_inputs(n, seed)
    dd = conj_block_det(c, d)
    im_slack, re_slack = _sign_slacks(dd, tol)
    residuals = {"imagSlack": im_slack, "realSlack": re_slack}

    fac = lu_decompose(c)
    well_conditioned = False
    if not fac.singular:
        cond = frobenius(c) * frobenius(solve(fac, identity(n, "C")))
        well_conditioned = cond <= tol.condition_gate
    if well_conditioned:
        probe = conj_block_reduction(c, d, tol)
        residuals.update(probe.residuals)
    return residuals


def _trial_ineq_real(n: int, seed: int, tol: ToleranceConfig) -> dict:
    rng = rng_from_seed(seed)
    c = random_gaussian(rng, n, "R")
    d = random_gaussian(rng, n, "R")
    dd = log_det(embed_orthogonal_pair(c, d))
    im_slack, re_slack = _sign_slacks(dd, tol)
    d_plus, d_minus = unitary_split_det(BlockPair(c, d, GroupKind.REAL_SYMPLECTIC))
    return {
        "imagSlack": im_slack,
        "realSlack": re_slack,
        "splitAgreement": dd.rel_diff(d_plus.abs_squared()),
        "splitConjugate": d_minus.rel_diff(d_plus.conjugated()),
    }


def _trial_conj_formula(n: int, seed: int, tol: ToleranceConfig) -> dict:
    cfg = GeneratorConfig(half_dim=n, target=GroupKind.CONJUGATE_SYMPLECTIC, seed=seed)
    a = generate(cfg, tol=tol)
    residuals = {"membership": conj_symplectic_residual(a) / frobenius(a) ** 2}
    oracle = log_det(a)
    residuals["detModulusOne"] = abs(math.expm1(oracle.log_magnitude))
    try:
        formula_phase = conj_symplectic_det(a, tol)
        residuals["phaseAgreement"] = phase_angle(formula_phase, oracle.phase)
    except (MembershipError, FormulaInconclusiveError):
        residuals["phaseAgreement"] = math.inf
    return residuals


def _trial_generator_sanity(n: int, seed: int, tol: ToleranceConfig) -> dict:
    rng = rng_from_seed(seed)
    target = (GroupKind.REAL_SYMPLECTIC, GroupKind.COMPLEX_SYMPLECTIC,
              GroupKind.CONJUGATE_SYMPLECTIC)[int(rng.integers(0, 3))]
    cfg = GeneratorConfig(half_dim=n, target=target, seed=split_seed(seed, 1))

    names = ["shear_lower", "shear_upper", "diag_block", "form"]
    if target is GroupKind.CONJUGATE_SYMPLECTIC:
        names.append("phase")
    worst_factor = 0.0
    for name in names:
        f = elementary_factor(name, cfg, rng)
        worst_factor = max(worst_factor,
                           membership_residual(f, target) / frobenius(f) ** 2)

    a = generate(cfg, tol=tol)
    residuals = {
        "factorResidual": worst_factor,
        "productResidual": membership_residual(a, target) / frobenius(a) ** 2,
    }
    dd = log_det(a)
    if target is GroupKind.CONJUGATE_SYMPLECTIC:
        residuals["detUnitModulus"] = abs(math.expm1(dd.log_magnitude))
    else:
        residuals["detOne"] = abs(dd.value - 1.0)
    residuals["determinism"] = 0.0 if format_matrix(generate(cfg, tol=tol)) == format_matrix(a) else 1.0
    return residuals


_TRIALS = {
    "form-identities": _trial_form_identities,
    "real-theorem": lambda n, s, t: _trial_theorem(GroupKind.REAL_SYMPLECTIC, n, s, t),
    "complex-theorem": lambda n, s, t: _trial_theorem(GroupKind.COMPLEX_SYMPLECTIC, n, s, t),
    "lemma": _trial_lemma,
    "ineq-real": _trial_ineq_real,
    "conj-formula": _trial_conj_formula,
    "generator-sanity": _trial_generator_sanity,
}


def run_trial(suite_id: str, n_half: int, seed: int,
              tol: ToleranceConfig = DEFAULT_TOLERANCES) -> TrialResult:
    """Run one trial in isolation; rerunning a recorded failure seed through
    this function reproduces its residuals exactly."""
    if suite_id not in SUITE_IDS:
        raise ValueError(f"unknown suite {suite_id!r}; known: {', '.join(SUITE_IDS)}")
    residuals = _TRIALS[suite_id](n_half, seed, tol)
    return TrialResult(residuals=residuals, passed=_passes(residuals, _bounds(suite_id, tol)))


def run_suite(spec: SuiteSpec) -> Report:
    """Run every trial of a suite and aggregate the report.

    Trial t runs at half_dims[t % len(half_dims)] with the t-th child seed of
    spec.seed, so the report is independent of execution order.
    """
    t0 = time.perf_counter()
    passes = 0
    failures = []
    worst: dict = {}
    for t in range(spec.trials):
        n = spec.half_dims[t % len(spec.half_dims)]
        child = split_seed(spec.seed, t)
        result = run_trial(spec.suite_id, n, child, spec.tolerances)
        if result.passed:
            passes += 1
        else:
            failures.append({"seed": child, "halfDim": n, "residuals": result.residuals})
        for k, v in result.residuals.items():
            worst[k] = max(worst.get(k, 0.0), v)
    elapsed = time.perf_counter() - t0
    return Report(
        tool=f"sympdet {__version__}",
        suite=spec.suite_id,
        config={
            "suiteId": spec.suite_id,
            "trials": spec.trials,
            "halfDims": list(spec.half_dims),
            "seed": spec.seed,
            "tolerances": asdict(spec.tolerances),
        },
        trials=spec.trials,
        passes=passes,
        failures=failures,
        worst_residuals=worst,
        elapsed_seconds=elapsed,
    )

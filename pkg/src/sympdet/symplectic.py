"""Symplectic structure: the standard skew form, membership residuals, block
machinery, determinant certificates, and the conjugate-symplectic determinant
formula.

A 2N x 2N matrix A is symplectic when A^T J A = J for the standard form
J = [[0, I], [-I, 0]], and conjugate symplectic when A^* J A = J.  Symplectic
matrices (real or complex) have determinant exactly one; conjugate symplectic
matrices have |det| = 1 with the phase determined by the four N x N subblocks.
This module turns those facts into checkable numerical certificates, with all
determinants evaluated through the LU engine in :mod:`sympdet.linalg`.

Everything here is a pure function over immutable values; certificates are
built locally and returned by value, so concurrent use needs no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .linalg import (
    LogDet,
    as_square,
    frobenius,
    identity,
    kind_of,
    log_det,
    lu_decompose,
    solve,
    zeros,
)


class GroupKind(Enum):
    """Which bilinear-form identity a matrix is measured against."""

    REAL_SYMPLECTIC = "real"            # A^T J A = J, real entries
    COMPLEX_SYMPLECTIC = "complex"      # A^T J A = J, complex entries
    CONJUGATE_SYMPLECTIC = "conjugate"  # A^* J A = J


class MembershipError(ValueError):
    """Input failed the residual test for the requested matrix group."""


class FormulaInconclusiveError(ArithmeticError):
    """The subblock phase formula hit a numerically vanishing determinant.

    Distinct from :class:`MembershipError`: the input passed the group test,
    but the formula's denominator is too close to zero to trust the phase.
    For exact group members this cannot happen (the relevant determinant is
    provably nonzero); it guards rounding on borderline inputs.
    """


@dataclass(frozen=True)
class ToleranceConfig:
    """Residual and comparison thresholds shared by predicates, certificates,
    and suites.

    ``membership`` is relative: the defect is compared against
    membership * ||A||_F^2.  Nonnegativity slacks are relative to |det| with
    an absolute floor ``nonneg_abs`` so exact zeros pass.
    """

    membership: float = 1e-8        # residual bound, scaled by ||A||_F^2
    identity_rel: float = 1e-9      # relative bound on determinant identities
    phase: float = 1e-8             # angular bound for unit-circle comparisons
    det_one: float = 1e-8           # |det(A) - 1| bound for certified matrices
    nonneg: float = 1e-9            # sign slack, scaled by |det|
    nonneg_abs: float = 1e-12       # absolute sign slack near det = 0
    ineq_real: float = 1e-10        # slack for the real paired-block inequality
    exact_residual: float = 1e-12   # bound for identities exact up to representation
    factor_residual: float = 1e-12  # membership bound for elementary factors
    product_residual: float = 1e-9  # membership bound for generated products
    condition_gate: float = 1e3     # Frobenius condition estimate beyond which
                                    # a block counts as near-singular
    formula_floor: float = math.log(1e-200)  # log|det| under which the phase
                                             # formula reports inconclusive


DEFAULT_TOLERANCES = ToleranceConfig()


def half_dim(a: np.ndarray) -> int:
    n = a.shape[0]
    if n % 2:
        raise ValueError(f"expected an even dimension, got {n}")
    return n // 2


def symplectic_form(n_half: int, kind: str = "R") -> np.ndarray:
    """The 2N x 2N form [[0, I], [-I, 0]]."""
    if n_half < 1:
        raise ValueError("half dimension must be >= 1")
    j = zeros(2 * n_half, kind)
    eye = identity(n_half, kind)
    j[:n_half, n_half:] = eye
    j[n_half:, :n_half] = -eye
    return j


def symplectic_residual(a) -> float:
    """||A^T J A - J||_F / ||J||_F."""
    a = as_square(a)
    n = half_dim(a)
    j = symplectic_form(n, kind_of(a))
    return frobenius(a.T @ j @ a - j) / frobenius(j)


def conj_symplectic_residual(a) -> float:
    """||A^* J A - J||_F / ||J||_F."""
    a = as_square(a)
    n = half_dim(a)
    j = symplectic_form(n, kind_of(a))
    return frobenius(a.conj().T @ j @ a - j) / frobenius(j)


def membership_residual(a, group: GroupKind) -> float:
    a = as_square(a)
    if group is GroupKind.REAL_SYMPLECTIC:
        if kind_of(a) != "R":
            raise ValueError("real symplectic membership needs a real matrix")
        return symplectic_residual(a)
    if group is GroupKind.COMPLEX_SYMPLECTIC:
        return symplectic_residual(a)
    return conj_symplectic_residual(a)


def passes_membership(a, group: GroupKind, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
    """Residual-based group test at tol.membership * ||A||_F^2."""
    a = as_square(a)
    return membership_residual(a, group) <= tol.membership * frobenius(a) ** 2


# ---------------------------------------------------------------------------
# Block machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockQuad:
    """The four N x N subblocks of a 2N x 2N matrix."""

    a11: np.ndarray
    a12: np.ndarray
    a21: np.ndarray
    a22: np.ndarray


def split_blocks(a) -> BlockQuad:
    a = as_square(a)
    n = half_dim(a)
    return BlockQuad(
        a11=a[:n, :n].copy(),
        a12=a[:n, n:].copy(),
        a21=a[n:, :n].copy(),
        a22=a[n:, n:].copy(),
    )


def assemble_blocks(q: BlockQuad) -> np.ndarray:
    return np.block([[q.a11, q.a12], [q.a21, q.a22]])


def j_conjugate(a) -> np.ndarray:
    """J A J^{-1}, computed blockwise as [[A22, -A21], [-A12, A11]]."""
    q = split_blocks(a)
    return np.block([[q.a22, -q.a21], [-q.a12, q.a11]])


@dataclass(frozen=True)
class BlockPair:
    """The (C, D) block combination of A + J A J^{-1} (or its conjugated
    variant), tagged with the group convention that produced it."""

    c: np.ndarray
    d: np.ndarray
    group: GroupKind


def block_pair(a, group: GroupKind) -> BlockPair:
    """C and D from the subblocks of A, per the group convention.

    Real/conjugate symplectic: C = A11 + A22, D = A12 - A21 (so that
    A + J A J^{-1} = [[C, D], [-D, C]]).  Complex symplectic: C = A11 +
    conj(A22), D = A12 - conj(A21) (so that A + conj(J A J^{-1}) =
    [[C, D], [-conj(D), conj(C)]]).
    """
    a = as_square(a)
    q = split_blocks(a)
    if group is GroupKind.COMPLEX_SYMPLECTIC:
        if kind_of(a) != "C":
            raise ValueError("the conjugated block pair needs a complex matrix")
        return BlockPair(c=q.a11 + q.a22.conj(), d=q.a12 - q.a21.conj(), group=group)
    return BlockPair(c=q.a11 + q.a22, d=q.a12 - q.a21, group=group)


def embed_pair(p: BlockPair) -> np.ndarray:
    """Reassemble the 2N x 2N matrix a block pair came from."""
    if p.group is GroupKind.COMPLEX_SYMPLECTIC:
        return np.block([[p.c, p.d], [-p.d.conj(), p.c.conj()]])
    return np.block([[p.c, p.d], [-p.d, p.c]])


def unitary_split_det(p: BlockPair) -> tuple[LogDet, LogDet]:
    """(det(C + iD), det(C - iD)) for a plain [[C, D], [-D, C]] pair.

    A unitary change of basis block-diagonalizes [[C, D], [-D, C]] into
    diag(C + iD, C - iD), so the two determinants multiply to the embedded
    pair's determinant.  Real input promotes to complex.
    """
    if p.group is GroupKind.COMPLEX_SYMPLECTIC:
        raise ValueError("the unitary split applies to unconjugated pairs only")
    c = p.c.astype(np.complex128)
    d = p.d.astype(np.complex128)
    return log_det(c + 1j * d), log_det(c - 1j * d)


# ---------------------------------------------------------------------------
# Conjugate-paired block determinants
# ---------------------------------------------------------------------------

def conj_block_det(c, d) -> LogDet:
    """Determinant of [[C, D], [-conj(D), conj(C)]] for complex C, D.

    These embeddings are exactly the complex images of quaternionic matrices;
    their determinant is always real and nonnegative.
    """
    c = as_square(c).astype(np.complex128)
    d = as_square(d).astype(np.complex128)
    if c.shape != d.shape:
        raise ValueError(f"dimension mismatch: {c.shape[0]} vs {d.shape[0]}")
    return log_det(np.block([[c, d], [-d.conj(), c.conj()]]))


@dataclass(frozen=True)
class ReductionProbe:
    """Outcome of reducing [[C, D], [-conj(D), conj(C)]] by block elimination.

    With E = C^{-1} D the embedded determinant factors through
    det(C) * det(conj(C)) * det([[I, E], [-conj(E), I]]), and the last factor
    collapses to det(conj(E) E + I), which is nonnegative.  ``e`` is absent
    and ``singular_c`` set when C has no LU inverse.
    """

    c: np.ndarray
    d: np.ndarray
    e: np.ndarray | None
    block_det: LogDet
    pair_det: LogDet | None     # det(conj(E) E + I)
    embed_det: LogDet | None    # det([[I, E], [-conj(E), I]])
    residuals: dict = field(default_factory=dict)
    singular_c: bool = False


def conj_block_reduction(c, d, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> ReductionProbe:
    """Check the block-elimination identities behind conj_block_det >= 0.

    Residuals recorded (all independent dense determinants):
      solve       relative defect of C @ E = D
      reduction   det(block) vs det(C) det(conj(C)) det([[I, E], [-conj(E), I]])
      commuting   det([[I, E], [-conj(E), I]]) vs det(conj(E) E + I)
      eeNonneg    sign slack of det(conj(E) E + I)
    """
    c = as_square(c).astype(np.complex128)
    d = as_square(d).astype(np.complex128)
    if c.shape != d.shape:
        raise ValueError(f"dimension mismatch: {c.shape[0]} vs {d.shape[0]}")
    n = c.shape[0]
    block = conj_block_det(c, d)
    fac = lu_decompose(c)
    if fac.singular:
        return ReductionProbe(c=c, d=d, e=None, block_det=block,
                              pair_det=None, embed_det=None, singular_c=True)
    e = solve(fac, d)
    eye = identity(n, "C")
    pair = log_det(e.conj() @ e + eye)
    embedded = np.block([[eye, e], [-e.conj(), eye]])
    embed = log_det(embedded)
    rhs = log_det(c) * log_det(c.conj()) * embed
    residuals = {
        "solve": frobenius(c @ e - d) / (frobenius(c) * frobenius(e) + frobenius(d) + 1e-300),
        "reduction": block.rel_diff(rhs),
        "commuting": embed.rel_diff(pair),
        "eeNonneg": nonneg_slack(pair, tol),
    }
    return ReductionProbe(c=c, d=d, e=e, block_det=block,
                          pair_det=pair, embed_det=embed, residuals=residuals)


def nonneg_slack(dd: LogDet, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """How far a determinant sits from the closed right half-axis.

    Returns max(0, violation) where the violation is measured on the unit
    phase: both |Im det| and -Re det must stay under
    tol.nonneg * |det| + tol.nonneg_abs.  Compare the result against
    tol.nonneg.
    """
    if dd.log_magnitude == -math.inf:
        return 0.0
    allowance = tol.nonneg_abs * math.exp(min(-dd.log_magnitude, 700.0))
    im = abs(dd.phase.imag)
    re = dd.phase.real
    return max(0.0, im - allowance, -re - allowance)


# ---------------------------------------------------------------------------
# Determinant certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    label: str
    lhs: str
    rhs: str
    residual: float
    passed: bool


@dataclass(frozen=True)
class Certificate:
    """Numerical transcript of the det = 1 argument for one matrix.

    ``narrative`` lists every identity in the order checked, with both sides
    rendered and the residual that was compared against its bound.  The
    verdict is "pass" only if every check passed.
    """

    group: GroupKind
    det_a: LogDet
    lhs_det: LogDet        # det(A^T A + I) or det(A^* A + I)
    auxiliary_det: LogDet  # det of the embedded block pair
    residuals: dict
    verdict: str
    narrative: tuple[IdentityCheck, ...]


def _fmt_logdet(dd: LogDet) -> str:
    if dd.log_magnitude == -math.inf:
        return "0"
    if abs(dd.log_magnitude) < 36.0:
        v = dd.value
        if abs(v.imag) < 1e-13 * max(1.0, abs(v.real)):
            return f"{v.real:.12g}"
        return f"{v.real:.12g}{v.imag:+.12g}j"
    return f"exp({dd.log_magnitude:.9g})*({dd.phase.real:.9g}{dd.phase.imag:+.9g}j)"


def certify_symplectic(a, group: GroupKind = GroupKind.REAL_SYMPLECTIC,
                       tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Certificate:
    """Certify det(A) = 1 for a real or complex symplectic matrix.

    Follows the Gram-matrix argument end to end: det(A) = +-1 from the form
    identity; det(A^T A + I) (resp. A^* A + I) exceeds one; that determinant
    factors through A times its J-conjugate, whose block pair embeds with a
    nonnegative determinant; hence det(A) is the positive sign.  Each step is
    recorded with its residual; the sign conclusion rests on the factorization
    identities, not on the positivity check alone.

    Raises MembershipError if A fails the group residual test, ValueError if
    the group/kind combination is invalid.
    """
    a = as_square(a)
    if group is GroupKind.CONJUGATE_SYMPLECTIC:
        raise ValueError("certificates cover the determinant-one groups; "
                         "use conj_symplectic_det for the conjugate group")
    want_kind = "R" if group is GroupKind.REAL_SYMPLECTIC else "C"
    if kind_of(a) != want_kind:
        raise ValueError(f"{group.value} certification needs a {want_kind}-kind matrix")

    scale = frobenius(a) ** 2
    res_mem = symplectic_residual(a) / scale
    if res_mem > tol.membership:
        raise MembershipError(
            f"not symplectic: scaled residual {res_mem:.3e} exceeds {tol.membership:.3e}")

    n2 = a.shape[0]
    det_a = log_det(a)
    if group is GroupKind.REAL_SYMPLECTIC:
        gram = a.T @ a + identity(n2, "R")
        adj_det = det_a                  # det(A^T) = det(A)
        gram_label = "det(A^T A + I)"
    else:
        gram = a.conj().T @ a + identity(n2, "C")
        adj_det = det_a.conjugated()     # det(A^*) = conj(det(A))
        gram_label = "det(A^* A + I)"
    lhs = log_det(gram)
    pair = block_pair(a, group)
    aux = log_det(embed_pair(pair))

    checks: list[IdentityCheck] = []
    residuals: dict = {"membership": res_mem}

    val = det_a.value
    res_sign = min(abs(val - 1.0), abs(val + 1.0))
    residuals["detPhaseSign"] = res_sign
    checks.append(IdentityCheck("det(A) is +-1", _fmt_logdet(det_a), "+-1",
                                res_sign, res_sign <= tol.det_one))

    res_pos = max(0.0, -lhs.log_magnitude)
    res_real = abs(lhs.phase - 1.0)
    residuals["gramPositive"] = res_pos
    residuals["gramReal"] = res_real
    checks.append(IdentityCheck(f"{gram_label} > 1", _fmt_logdet(lhs), "> 1",
                                res_pos, res_pos == 0.0 and res_real <= tol.phase))

    factor_rhs = adj_det * aux
    res_factor = lhs.rel_diff(factor_rhs)
    residuals["factorIdentity"] = res_factor
    checks.append(IdentityCheck(
        f"{gram_label} = det(A^adj) * det(block pair embedding)",
        _fmt_logdet(lhs), _fmt_logdet(factor_rhs),
        res_factor, res_factor <= tol.identity_rel))

    res_block = nonneg_slack(aux, tol)
    residuals["blockNonneg"] = res_block
    checks.append(IdentityCheck("block pair determinant >= 0", _fmt_logdet(aux),
                                ">= 0", res_block, res_block <= tol.nonneg))

    if group is GroupKind.REAL_SYMPLECTIC:
        d_plus, d_minus = unitary_split_det(pair)
        split_rhs = det_a * d_plus.abs_squared()
        res_split = lhs.rel_diff(split_rhs)
        residuals["splitIdentity"] = res_split
        checks.append(IdentityCheck(
            "det(A^T A + I) = det(A) * |det(C + iD)|^2",
            _fmt_logdet(lhs), _fmt_logdet(split_rhs),
            res_split, res_split <= tol.identity_rel))
        res_conj = d_minus.rel_diff(d_plus.conjugated())
        residuals["splitConjugate"] = res_conj
        checks.append(IdentityCheck(
            "det(C - iD) = conj(det(C + iD))",
            _fmt_logdet(d_minus), _fmt_logdet(d_plus.conjugated()),
            res_conj, res_conj <= tol.identity_rel))

    res_one = abs(val - 1.0)
    residuals["detOne"] = res_one
    checks.append(IdentityCheck("det(A) = 1", _fmt_logdet(det_a), "1",
                                res_one, res_one <= tol.det_one))

    verdict = "pass" if all(c.passed for c in checks) else "fail"
    return Certificate(group=group, det_a=det_a, lhs_det=lhs, auxiliary_det=aux,
                       residuals=residuals, verdict=verdict, narrative=tuple(checks))


def conj_symplectic_det(a, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> complex:
    """det(A) of a conjugate symplectic matrix from its subblocks.

    With C = A11 + A22 and D = A12 - A21, the determinant equals the unit
    phase of det(C^2 + D^2 - i(CD - DC)).  Real symplectic inputs are
    accepted (they satisfy the conjugate identity too) and return 1.

    Raises MembershipError when A^* J A = J fails the residual test, and
    FormulaInconclusiveError when |det| of the formula matrix falls below
    the configured floor.
    """
    a = as_square(a)
    scale = frobenius(a) ** 2
    res_mem = conj_symplectic_residual(a) / scale
    if res_mem > tol.membership:
        raise MembershipError(
            f"not conjugate symplectic: scaled residual {res_mem:.3e} "
            f"exceeds {tol.membership:.3e}")
    a = a.astype(np.complex128)
    p = block_pair(a, GroupKind.CONJUGATE_SYMPLECTIC)
    c, d = p.c, p.d
    m = c @ c + d @ d - 1j * (c @ d - d @ c)
    dm = log_det(m)
    if dm.log_magnitude < tol.formula_floor:
        raise FormulaInconclusiveError(
            f"formula determinant magnitude underflows the floor "
            f"(log|det| = {dm.log_magnitude:.3g})")
    return dm.phase

"""Noncommutative commutation forms and Darboux maps.

Variables are ordered (x_1..x_n, p_1..p_n) inside each subsystem, so a
subsystem form takes the block layout [[Theta, I], [-I, Upsilon]] with skew
deformation blocks Theta (position-position) and Upsilon (momentum-momentum).
A Darboux map S turns standard commuting variables into the deformed ones,
S J S^T = Omega; it is block-diagonal over the two parties and not unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    Tolerances,
    _readonly,
    block_diag,
    matrix_from_json,
    matrix_to_json,
    standard_symplectic_form,
    validate_covariance,
    validate_skew_form,
)
from .errors import DimensionError, DomainError, MatrixStructureError, SingularMatrixError

# 2x2 antisymmetric symbol with epsilon_12 = +1.
EPSILON2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


@dataclass(frozen=True)
class NCParams:
    """Planar deformation strengths theta (position) and eta (momentum)."""

    theta: float
    eta: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.eta)):
            raise DomainError("theta and eta must be finite")
        if self.theta < 0 or self.eta < 0:
            raise DomainError(f"theta and eta must be >= 0, got ({self.theta}, {self.eta})")
        if self.theta * self.eta >= 1:
            raise DomainError(
                f"theta*eta = {self.theta * self.eta} violates the domain theta*eta < 1"
            )

    def to_json(self) -> dict:
        return {"theta": self.theta, "eta": self.eta}

    @classmethod
    def from_json(cls, obj: dict) -> "NCParams":
        return cls(theta=float(obj["theta"]), eta=float(obj["eta"]))


@dataclass(frozen=True)
class SubsystemForm:
    """Commutation form of one party: [[Theta, I], [-I, Upsilon]], dimension 2n."""

    n_modes: int
    theta_block: np.ndarray
    upsilon_block: np.ndarray
    assembled: np.ndarray


@dataclass(frozen=True)
class CompositeForm:
    """Bipartite commutation form Diag[Omega_A, Omega_B]."""

    part_a: SubsystemForm
    part_b: SubsystemForm
    assembled: np.ndarray

    @property
    def n_a(self) -> int:
        return self.part_a.n_modes

    @property
    def n_b(self) -> int:
        return self.part_b.n_modes


def _check_skew_block(block, n_modes: int, name: str, tol: Tolerances) -> np.ndarray:
    arr = np.asarray(block, dtype=float)
    if arr.shape != (n_modes, n_modes):
        raise DimensionError(f"{name} block must be {n_modes}x{n_modes}, got {arr.shape}")
    if np.max(np.abs(arr + arr.T)) > tol.symmetry:
        raise MatrixStructureError(f"{name} block is not skew-symmetric within tolerance")
    return arr


def build_subsystem_form(
    n_modes: int, theta_block, upsilon_block, tol: Tolerances = DEFAULT_TOL
) -> SubsystemForm:
    """Assemble and validate a subsystem form from its deformation blocks."""
    if n_modes < 1:
        raise DimensionError(f"number of modes must be >= 1, got {n_modes}")
    theta = _check_skew_block(theta_block, n_modes, "position deformation", tol)
    upsilon = _check_skew_block(upsilon_block, n_modes, "momentum deformation", tol)
    eye = np.eye(n_modes)
    assembled = np.block([[theta, eye], [-eye, upsilon]])
    assembled = validate_skew_form(assembled, tol)  # raises if singular
    return SubsystemForm(
        n_modes=n_modes,
        theta_block=_readonly(theta),
        upsilon_block=_readonly(upsilon),
        assembled=assembled,
    )


def build_planar_form(params: NCParams, tol: Tolerances = DEFAULT_TOL) -> SubsystemForm:
    """Two-mode form with Theta = theta*eps and Upsilon = eta*eps."""
    return build_subsystem_form(2, params.theta * EPSILON2, params.eta * EPSILON2, tol)


def build_composite_form(
    part_a: SubsystemForm, part_b: SubsystemForm
) -> CompositeForm:
    """Stack two subsystem forms into the bipartite block-diagonal form."""
    assembled = _readonly(block_diag(part_a.assembled, part_b.assembled))
    return CompositeForm(part_a=part_a, part_b=part_b, assembled=assembled)


@dataclass(frozen=True)
class DarbouxMap:
    """Block-diagonal linear map S = Diag[S_A, S_B] between variable sets.

    ``lambda_scale`` and ``mu_scale`` are populated only for maps built from
    planar parameters; user-supplied maps carry None. Whether a map actually
    satisfies S J S^T = Omega for a given target form is checked by
    :func:`validate_darboux`, not by construction.
    """

    s_a: np.ndarray
    s_b: np.ndarray
    assembled: np.ndarray
    lambda_scale: float | None = None
    mu_scale: float | None = None

    @classmethod
    def from_blocks(cls, s_a, s_b, tol: Tolerances = DEFAULT_TOL) -> "DarbouxMap":
        a = np.asarray(s_a, dtype=float)
        b = np.asarray(s_b, dtype=float)
        for name, blk in (("S_A", a), ("S_B", b)):
            if blk.ndim != 2 or blk.shape[0] != blk.shape[1] or blk.shape[0] % 2 != 0:
                raise DimensionError(f"{name} must be square of even dimension, got {blk.shape}")
            if abs(np.linalg.det(blk)) <= tol.singularity:
                raise SingularMatrixError(f"{name} is numerically singular")
        return cls(s_a=_readonly(a), s_b=_readonly(b), assembled=_readonly(block_diag(a, b)))

    def inverse(self) -> "DarbouxMap":
        return DarbouxMap.from_blocks(np.linalg.inv(self.s_a), np.linalg.inv(self.s_b))

    def to_json(self) -> dict:
        return {
            "s_a": matrix_to_json(self.s_a),
            "s_b": matrix_to_json(self.s_b),
            "lambda": self.lambda_scale,
            "mu": self.mu_scale,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DarbouxMap":
        dmap = cls.from_blocks(matrix_from_json(obj["s_a"]), matrix_from_json(obj["s_b"]))
        lam = obj.get("lambda")
        mu = obj.get("mu")
        if lam is None or mu is None:
            return dmap
        return cls(
            s_a=dmap.s_a,
            s_b=dmap.s_b,
            assembled=dmap.assembled,
            lambda_scale=float(lam),
            mu_scale=float(mu),
        )


def _planar_darboux_block(params: NCParams, lam: float, mu: float) -> np.ndarray:
    # Sign placement fixed by requiring S J S^T = Omega with the
    # (x1, x2, p1, p2) ordering: the eta entry in the last row is negative.
    half_theta = params.theta / (2.0 * lam)
    half_eta = params.eta / (2.0 * mu)
    return np.array(
        [
            [lam, 0.0, 0.0, -half_theta],
            [0.0, lam, half_theta, 0.0],
            [0.0, half_eta, mu, 0.0],
            [-half_eta, 0.0, 0.0, mu],
        ]
    )


def build_darboux_map(
    params: NCParams, lambda_scale: float = 1.0, tol: Tolerances = DEFAULT_TOL
) -> DarbouxMap:
    """Planar Darboux map with free gauge parameter lambda; S_A = S_B.

    mu is fixed by lambda*mu = (1 + sqrt(1 - eta*theta)) / 2, which keeps the
    map invertible (det of each block is 1 - eta*theta).
    """
    if not math.isfinite(lambda_scale) or lambda_scale <= 0:
        raise DomainError(f"lambda must be > 0, got {lambda_scale}")
    product = (1.0 + math.sqrt(1.0 - params.eta * params.theta)) / 2.0
    mu = product / lambda_scale
    blk = _planar_darboux_block(params, lambda_scale, mu)
    if abs(np.linalg.det(blk)) <= tol.singularity:
        raise SingularMatrixError(
            f"Darboux block is singular (theta*eta = {params.theta * params.eta})"
        )
    target = build_planar_form(params, tol).assembled
    residual = np.max(np.abs(blk @ standard_symplectic_form(2) @ blk.T - target))
    if residual > tol.map_residual:
        raise MatrixStructureError(f"constructed map violates S J S^T = Omega by {residual:.3e}")
    return DarbouxMap(
        s_a=_readonly(blk),
        s_b=_readonly(blk),
        assembled=_readonly(block_diag(blk, blk)),
        lambda_scale=lambda_scale,
        mu_scale=mu,
    )


def validate_darboux(dmap: DarbouxMap, target: CompositeForm, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff the (block-diagonal) map is invertible and S J S^T matches the target."""
    dim = dmap.assembled.shape[0]
    if dim != target.assembled.shape[0]:
        raise DimensionError(
            f"map is {dim}-dimensional but target form is {target.assembled.shape[0]}-dimensional"
        )
    if dmap.s_a.shape[0] != 2 * target.n_a:
        raise DimensionError(
            f"map block S_A is {dmap.s_a.shape[0]}-dimensional, target part A needs {2 * target.n_a}"
        )
    if abs(np.linalg.det(dmap.assembled)) <= tol.singularity:
        return False
    jay = block_diag(standard_symplectic_form(target.n_a), standard_symplectic_form(target.n_b))
    residual = np.max(np.abs(dmap.assembled @ jay @ dmap.assembled.T - target.assembled))
    return bool(residual <= tol.map_residual)


def transform_covariance(dmap: DarbouxMap, sigma_tilde, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Push a covariance matrix through the map: Sigma = S Sigma~ S^T."""
    sig = validate_covariance(sigma_tilde, tol)
    if sig.shape[0] != dmap.assembled.shape[0]:
        raise DimensionError(
            f"covariance is {sig.shape[0]}-dimensional but map is {dmap.assembled.shape[0]}-dimensional"
        )
    out = dmap.assembled @ sig @ dmap.assembled.T
    out = 0.5 * (out + out.T)  # exact symmetry despite roundoff
    return validate_covariance(out, tol)

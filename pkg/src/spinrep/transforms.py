"""Linear coordinate changes and their actions on the algebras.

Covers substitution of generators along a linear map, spin lifts of metric
isometries (solved as the null space of the stacked conjugation system),
the grade-wise exterior extension of an arbitrary linear map, metric
pullback, the induced action on 4x4 matrices, and the checker comparing the
two transformation routes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from . import _kernels
from ._tables import BLADE_BITS, GRADE, NBLADES
from .clifford import CliffordElement, even_part, odd_part
from .errors import LiftNotFound, NotIsometry
from .grassmann import GrassmannElement, Metric
from .isomorphisms import (
    GammaBasis,
    clifford_to_matrix,
    gamma_blade_matrices,
    matrix_to_clifford,
)
from .report import FAIL, INFO, PASS, CheckResult, Report

DEFAULT_ISOMETRY_TOL = 1e-10
LIFT_ACCEPT = 1e-8  # largest normalized singular value accepted as null
LIFT_GAP = 1e-4  # the next singular value must exceed this


def isometry_defect(a: np.ndarray, g: Metric) -> float:
    """Largest entry of A^T g A - g."""
    a = np.asarray(a, dtype=np.float64)
    return float(np.abs(a.T @ g.g @ a - g.g).max())


def is_isometry(a: np.ndarray, g: Metric, tol: float = DEFAULT_ISOMETRY_TOL) -> bool:
    return isometry_defect(a, g) < tol


def metric_pullback(a: np.ndarray, g: Metric) -> Metric:
    """The metric A^T g A, symmetrized to machine exactness."""
    a = np.asarray(a, dtype=np.float64)
    m = a.T @ g.g @ a
    return Metric((m + m.T) / 2.0, det_tol=g.det_tol)


def substitute_gammas(a: np.ndarray, basis: GammaBasis) -> GammaBasis:
    """New generator set gamma'_mu = sum_nu A[nu, mu] gamma_nu.

    The returned basis represents the pulled-back metric A^T g A.
    """
    a = np.asarray(a, dtype=np.float64)
    new_gammas = np.einsum("nm,nij->mij", a, basis.gammas)
    return GammaBasis(new_gammas, metric_pullback(a, basis.metric))


def conjugation_system(a: np.ndarray, basis: GammaBasis) -> np.ndarray:
    """Stacked 64x16 system whose null vectors conjugate the generators into
    their substituted images: Sigma gamma_mu - gamma'_mu Sigma = 0 for all mu."""
    a = np.asarray(a, dtype=np.float64)
    eye = np.eye(4, dtype=np.complex128)
    rows = []
    for mu in range(4):
        gp = np.einsum("n,nij->ij", a[:, mu], basis.gammas)
        # row-major vec: vec(X G) = (I (x) G^T) vec X, vec(G' X) = (G' (x) I) vec X
        rows.append(np.kron(eye, basis.gammas[mu].T) - np.kron(gp, eye))
    return np.vstack(rows)


def conjugation_singular_values(a: np.ndarray, basis: GammaBasis) -> np.ndarray:
    """Normalized singular values (descending, divided by the largest)."""
    s = np.linalg.svd(conjugation_system(a, basis), compute_uv=False)
    return s / s[0]


@dataclass(frozen=True)
class SpinElement:
    """Invertible algebra element conjugating the generators along an isometry.

    ``parity`` is ``"even"`` for orientation-preserving isometries and
    ``"odd"`` for orientation-reversing ones; the matrix image is normalized
    to unit determinant with a deterministic phase branch.
    """

    element: CliffordElement
    matrix: np.ndarray
    parity: str
    residual: float | None
    branch: int = 0

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=np.complex128)
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def inverse_matrix(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)

    @classmethod
    def from_matrix(cls, m: np.ndarray, basis: GammaBasis, residual: float | None = None) -> "SpinElement":
        element = matrix_to_clifford(m, basis)
        return cls(element, np.asarray(m, dtype=np.complex128), _parity_of(element), residual)

    @classmethod
    def from_element(cls, element: CliffordElement, basis: GammaBasis, residual: float | None = None) -> "SpinElement":
        return cls(element, clifford_to_matrix(element, basis), _parity_of(element), residual)


def _parity_of(element: CliffordElement, tol: float = 1e-9) -> str:
    total = element.norm()
    if total == 0:
        return "even"
    if odd_part(element).norm() <= tol * total:
        return "even"
    if even_part(element).norm() <= tol * total:
        return "odd"
    return "mixed"


def _normalize_phase(m: np.ndarray, basis: GammaBasis) -> tuple[np.ndarray, int]:
    """Scale to unit determinant, then pick the i^k branch deterministically.

    Among the four unit-determinant rescalings the one making the
    largest-magnitude blade coefficient have the largest real part (ties by
    imaginary part) is chosen.
    """
    det = np.linalg.det(m)
    m = m / det ** 0.25
    coeffs = matrix_to_clifford(m, basis).coeffs
    ref = coeffs[int(np.argmax(np.abs(coeffs)))]
    branch = 0
    best = None
    for k in range(4):
        v = ref * 1j**k
        score = (round(v.real, 12), round(v.imag, 12))
        if best is None or score > best:
            best = score
            branch = k
    return m * 1j**branch, branch


def spin_lift(
    a: np.ndarray,
    basis: GammaBasis,
    isometry_tol: float = DEFAULT_ISOMETRY_TOL,
) -> SpinElement:
    """Conjugating element for an isometry of the basis metric.

    Solves the stacked conjugation system by singular value decomposition and
    accepts the null vector only when it is isolated (smallest normalized
    singular value below 1e-8, next one above 1e-4).  Raises
    :class:`NotIsometry` when A^T g A differs from g beyond tolerance and
    :class:`LiftNotFound` when the system has no usable null vector.
    """
    a = np.asarray(a, dtype=np.float64)
    defect = isometry_defect(a, basis.metric)
    if defect >= isometry_tol:
        raise NotIsometry(f"A^T g A - g has max entry {defect:.3e} >= {isometry_tol:.3e}")
    system = conjugation_system(a, basis)
    _, s, vh = np.linalg.svd(system)
    if s[0] == 0:
        raise LiftNotFound("conjugation system vanished entirely")
    smallest = s[-1] / s[0]
    next_smallest = s[-2] / s[0]
    if smallest > LIFT_ACCEPT or next_smallest < LIFT_GAP:
        raise LiftNotFound(
            f"no isolated null vector: normalized singular values "
            f"{smallest:.3e}, {next_smallest:.3e}"
        )
    m = vh[-1].conj().reshape(4, 4)
    m, branch = _normalize_phase(m, basis)
    residual = _conjugation_residual(m, a, basis)
    element = matrix_to_clifford(m, basis)
    return SpinElement(element, m, _parity_of(element), residual, branch)


def _conjugation_residual(m: np.ndarray, a: np.ndarray, basis: GammaBasis) -> float:
    minv = np.linalg.inv(m)
    worst = 0.0
    for mu in range(4):
        gp = np.einsum("n,nij->ij", a[:, mu], basis.gammas)
        worst = max(worst, float(np.abs(m @ basis.gammas[mu] @ minv - gp).max()))
    return worst


def exterior_pushforward(a: np.ndarray) -> np.ndarray:
    """Grade-wise extension of a linear map to the 16-dim exterior algebra.

    Block-diagonal across grades: scalars are fixed, the grade-1 block is A
    itself, the top block is multiplication by det A.
    """
    a = np.asarray(a, dtype=np.float64)
    cols = [GrassmannElement.from_vector(a[:, i].astype(np.complex128)).coeffs for i in range(4)]
    push = np.zeros((NBLADES, NBLADES), dtype=np.float64)
    unit = np.zeros(NBLADES, dtype=np.complex128)
    unit[0] = 1.0
    for b in range(NBLADES):
        acc = unit
        for i in BLADE_BITS[b]:
            acc = _kernels.wedge16(acc, cols[i])
        push[:, b] = acc.real
    return push


def parity_matrix() -> np.ndarray:
    """Spatial inversion diag(1, -1, -1, -1)."""
    return np.diag([1.0, -1.0, -1.0, -1.0])


def time_reversal_matrix() -> np.ndarray:
    """Time inversion diag(-1, 1, 1, 1)."""
    return np.diag([-1.0, 1.0, 1.0, 1.0])


class GL4Action:
    """Action of an invertible map on 4x4 matrices through the blade basis.

    Decomposes the matrix over the generator-product basis, pushes the
    coefficients forward grade by grade, and reassembles the matrix.
    """

    def __init__(self, a: np.ndarray, basis: GammaBasis):
        self.a = np.asarray(a, dtype=np.float64)
        self.basis = basis
        self.pushforward = exterior_pushforward(self.a)

    def __call__(self, m: np.ndarray) -> np.ndarray:
        coeffs = matrix_to_clifford(m, self.basis).coeffs
        return clifford_to_matrix(CliffordElement(self.pushforward @ coeffs), self.basis)


def gl4_on_matrices(a: np.ndarray, basis: GammaBasis) -> GL4Action:
    return GL4Action(a, basis)


def random_lorentz(
    rng: np.random.Generator, g: Metric, max_rapidity: float = 3.0
) -> np.ndarray:
    """Random proper orthochronous isometry of ``g``.

    Exponential of a random generator X with g X antisymmetric, rescaled so
    the generator norm stays at or below ``max_rapidity``.
    """
    k = rng.normal(size=(4, 4))
    k = k - k.T
    x = np.linalg.solve(g.g, k)
    norm = np.linalg.norm(x, 2)
    if norm > max_rapidity:
        x *= max_rapidity / norm
    return expm(x)


def random_invertible_non_isometry(
    rng: np.random.Generator,
    g: Metric,
    min_defect: float = 1e-2,
    min_det: float = 1e-2,
) -> np.ndarray:
    """Random invertible map that is clearly not an isometry of ``g``."""
    while True:
        a = rng.normal(size=(4, 4))
        if abs(np.linalg.det(a)) > min_det and isometry_defect(a, g) > min_defect:
            return a


def proposition_check(
    a: np.ndarray,
    basis: GammaBasis,
    samples: int = 20,
    seed: int = 0,
    tol: float = 1e-10,
    isometry_tol: float = DEFAULT_ISOMETRY_TOL,
) -> Report:
    """Compare the exterior-transport action with conjugation by the lift.

    For an isometry the two routes must agree on every basis blade and on
    random matrices.  For a non-isometry the conjugation system must have a
    trivial null space while the exterior action still composes like a group
    action.
    """
    a = np.asarray(a, dtype=np.float64)
    g = basis.metric
    rng = np.random.default_rng(seed)
    report = Report(
        seed=seed,
        metric=g.g.tolist(),
        tolerances={"tol": tol, "isometry_tol": isometry_tol},
        version="0.1.0",
        samples=samples,
        suites=["proposition"],
    )
    defect = isometry_defect(a, g)
    action = gl4_on_matrices(a, basis)
    blades = gamma_blade_matrices(basis)
    if defect < isometry_tol:
        sigma = spin_lift(a, basis, isometry_tol)
        sinv = sigma.inverse_matrix
        worst = 0.0
        for b in range(NBLADES):
            worst = max(worst, float(np.abs(action(blades[b]) - sigma.matrix @ blades[b] @ sinv).max()))
        for _ in range(samples):
            m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            worst = max(worst, float(np.abs(action(m) - sigma.matrix @ m @ sinv).max()))
        report.add(
            CheckResult(
                "proposition",
                "exterior_matches_conjugation",
                PASS if worst < tol else FAIL,
                residual=worst,
                samples=NBLADES + samples,
                detail=f"isometry defect {defect:.3e}",
            )
        )
    else:
        svals = conjugation_singular_values(a, basis)
        no_lift = svals[-1] > 1e-6
        report.add(
            CheckResult(
                "proposition",
                "no_conjugating_element",
                PASS if no_lift else FAIL,
                residual=float(svals[-1]),
                detail="smallest normalized singular value of the conjugation system",
            )
        )
        worst = 0.0
        for _ in range(samples):
            b = random_invertible_non_isometry(rng, g)
            lhs = gl4_on_matrices(a @ b, basis)
            rhs_inner = gl4_on_matrices(b, basis)
            m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            worst = max(worst, float(np.abs(lhs(m) - action(rhs_inner(m))).max()))
        report.add(
            CheckResult(
                "proposition",
                "exterior_action_is_homomorphism",
                PASS if worst < tol else FAIL,
                residual=worst,
                samples=samples,
                detail=f"isometry defect {defect:.3e}",
            )
        )
    return report


def conjugation_subspace_check(
    sigma: SpinElement,
    basis: GammaBasis,
    tol: float = 1e-11,
    expect_preserved: bool | None = None,
) -> Report:
    """Measure how conjugation by ``sigma`` mixes the grade subspaces.

    Grade mixing vanishes exactly when the element lifts an isometry; for
    other invertible elements the leakage magnitude is reported.
    """
    if expect_preserved is None:
        expect_preserved = sigma.residual is not None and sigma.residual < 1e-8
    sinv = sigma.inverse_matrix
    blades = gamma_blade_matrices(basis)
    leakage = 0.0
    for b in range(NBLADES):
        conj = sigma.matrix @ blades[b] @ sinv
        coeffs = matrix_to_clifford(conj, basis).coeffs
        total = np.linalg.norm(coeffs)
        if total == 0:
            continue
        off = np.linalg.norm(coeffs[GRADE != GRADE[b]])
        leakage = max(leakage, float(off / total))
    report = Report(
        seed=0,
        metric=basis.metric.g.tolist(),
        tolerances={"tol": tol},
        version="0.1.0",
        suites=["conjugation_subspace"],
    )
    if expect_preserved:
        status = PASS if leakage < tol else FAIL
    else:
        status = INFO
    report.add(
        CheckResult(
            "conjugation_subspace",
            "grade_preservation",
            status,
            residual=leakage,
            samples=NBLADES,
            detail=f"parity={sigma.parity}",
        )
    )
    return report

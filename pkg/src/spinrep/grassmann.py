"""Complex exterior algebra on four generators with its metric operators.

Elements are dense vectors of 16 complex blade coefficients (see
:mod:`spinrep._tables` for the blade indexing).  The module provides the
wedge product, exterior multiplication and metric contraction by a vector
(from the left and from the right), the generator operators built from their
sum, the Hodge star and the dual product it induces.

All values are immutable after construction and every operation is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from ._tables import (
    DIM,
    GRADE,
    INSERT_LEFT_SIGN,
    INSERT_RIGHT_SIGN,
    NBLADES,
    REMOVE_LEFT_SIGN,
    REMOVE_RIGHT_SIGN,
    TOP,
    WEDGE_SIGN,
    blade_label,
)
from .errors import DegenerateMetric

DEFAULT_DET_TOL = 1e-12


@dataclass(frozen=True)
class Metric:
    """Symmetric real 4x4 bilinear form.

    The matrix is required to be symmetric exactly as stored; it is copied
    and frozen on construction.  ``det_tol`` is the degeneracy threshold used
    by every operation that needs the star or the contraction.
    """

    g: np.ndarray
    det_tol: float = DEFAULT_DET_TOL

    def __post_init__(self) -> None:
        g = np.array(self.g, dtype=np.float64)
        if g.shape != (DIM, DIM):
            raise ValueError(f"metric must be 4x4, got shape {g.shape}")
        if not np.array_equal(g, g.T):
            raise ValueError("metric must be symmetric exactly as stored")
        g.flags.writeable = False
        object.__setattr__(self, "g", g)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.g))

    def is_degenerate(self) -> bool:
        return abs(self.det) < self.det_tol

    def require_nondegenerate(self) -> None:
        if self.is_degenerate():
            raise DegenerateMetric(
                f"|det g| = {abs(self.det):.3e} below tolerance {self.det_tol:.3e}"
            )

    def inner(self, v: np.ndarray, w: np.ndarray) -> complex:
        """Bilinear pairing g(v, w) of two (possibly complex) 4-vectors."""
        return complex(np.asarray(v) @ self.g @ np.asarray(w))

    def key(self) -> bytes:
        return self.g.tobytes()


def minkowski(signature: str = "+---") -> Metric:
    """Diagonal Minkowski metric for signature string ``"+---"`` or ``"-+++"``."""
    if signature == "+---":
        return Metric(np.diag([1.0, -1.0, -1.0, -1.0]))
    if signature == "-+++":
        return Metric(np.diag([-1.0, 1.0, 1.0, 1.0]))
    raise ValueError(f"unknown signature {signature!r}")


@dataclass(frozen=True)
class Orientation:
    """Choice of volume form sign: +1 selects +d0^d1^d2^d3."""

    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("orientation sign must be +1 or -1")


@dataclass(frozen=True)
class GrassmannElement:
    """Dense element of the exterior algebra: 16 complex blade coefficients."""

    coeffs: np.ndarray = field(default_factory=lambda: np.zeros(NBLADES, complex))

    def __post_init__(self) -> None:
        c = np.array(self.coeffs, dtype=np.complex128)
        if c.shape != (NBLADES,):
            raise ValueError(f"expected {NBLADES} coefficients, got shape {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "GrassmannElement":
        return cls(np.zeros(NBLADES, dtype=np.complex128))

    @classmethod
    def scalar(cls, value: complex = 1.0) -> "GrassmannElement":
        c = np.zeros(NBLADES, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, mask: int, value: complex = 1.0) -> "GrassmannElement":
        c = np.zeros(NBLADES, dtype=np.complex128)
        c[mask] = value
        return cls(c)

    @classmethod
    def from_vector(cls, v: np.ndarray) -> "GrassmannElement":
        """Grade-1 element with generator coefficients ``v``."""
        v = np.asarray(v, dtype=np.complex128)
        c = np.zeros(NBLADES, dtype=np.complex128)
        for i in range(DIM):
            c[1 << i] = v[i]
        return cls(c)

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        return GrassmannElement(self.coeffs + other.coeffs)

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return GrassmannElement(self.coeffs - other.coeffs)

    def __neg__(self) -> "GrassmannElement":
        return GrassmannElement(-self.coeffs)

    def __mul__(self, scalar: complex) -> "GrassmannElement":
        return GrassmannElement(self.coeffs * scalar)

    __rmul__ = __mul__

    def grade_project(self, k: int) -> "GrassmannElement":
        return GrassmannElement(np.where(GRADE == k, self.coeffs, 0.0))

    def grades(self, tol: float = 0.0) -> tuple[int, ...]:
        """Grades carrying a coefficient with magnitude above ``tol``."""
        present = np.abs(self.coeffs) > tol
        return tuple(sorted({int(GRADE[b]) for b in range(NBLADES) if present[b]}))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for b in range(NBLADES):
            c = self.coeffs[b]
            if c != 0:
                terms.append(f"({c:.6g})*{blade_label(b, 'd', '1', '^')}")
        return " + ".join(terms) if terms else "0"


def wedge(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    """Associative antisymmetric product of two elements."""
    return GrassmannElement(_kernels.wedge16(a.coeffs, b.coeffs))


# ---------------------------------------------------------------------------
# boundary / coboundary operators as 16x16 matrices on coefficient vectors

def delta_matrix(v: np.ndarray) -> np.ndarray:
    """Matrix of left exterior multiplication by the vector ``v``."""
    v = np.asarray(v, dtype=np.complex128)
    m = np.zeros((NBLADES, NBLADES), dtype=np.complex128)
    for i in range(DIM):
        if v[i] == 0:
            continue
        bit = 1 << i
        for b in range(NBLADES):
            if not b & bit:
                m[b | bit, b] += v[i] * INSERT_LEFT_SIGN[i, b]
    return m


def delta_star_matrix(v: np.ndarray, g: Metric) -> np.ndarray:
    """Matrix of the metric contraction by ``v`` acting from the left.

    On a blade v1^...^vk this is sum_l (-1)^(l+1) g(v, v_l) with factor v_l
    omitted; the alternating sign starts positive so that the generator
    operators square to the metric.
    """
    g.require_nondegenerate()
    w = g.g @ np.asarray(v, dtype=np.complex128)
    m = np.zeros((NBLADES, NBLADES), dtype=np.complex128)
    for i in range(DIM):
        if w[i] == 0:
            continue
        bit = 1 << i
        for b in range(NBLADES):
            if b & bit:
                m[b & ~bit, b] += w[i] * REMOVE_LEFT_SIGN[i, b]
    return m


def right_delta_matrix(v: np.ndarray) -> np.ndarray:
    """Matrix of right exterior multiplication: omega -> omega ^ v."""
    v = np.asarray(v, dtype=np.complex128)
    m = np.zeros((NBLADES, NBLADES), dtype=np.complex128)
    for i in range(DIM):
        if v[i] == 0:
            continue
        bit = 1 << i
        for b in range(NBLADES):
            if not b & bit:
                m[b | bit, b] += v[i] * INSERT_RIGHT_SIGN[i, b]
    return m


def right_delta_star_matrix(v: np.ndarray, g: Metric) -> np.ndarray:
    """Matrix of the metric contraction by ``v`` acting from the right."""
    g.require_nondegenerate()
    w = g.g @ np.asarray(v, dtype=np.complex128)
    m = np.zeros((NBLADES, NBLADES), dtype=np.complex128)
    for i in range(DIM):
        if w[i] == 0:
            continue
        bit = 1 << i
        for b in range(NBLADES):
            if b & bit:
                m[b & ~bit, b] += w[i] * REMOVE_RIGHT_SIGN[i, b]
    return m


def delta(v: np.ndarray, a: GrassmannElement) -> GrassmannElement:
    """Left exterior multiplication by ``v``; raises the grade by one."""
    return wedge(GrassmannElement.from_vector(v), a)


def delta_star(v: np.ndarray, a: GrassmannElement, g: Metric) -> GrassmannElement:
    """Left contraction of ``a`` by ``v``; lowers the grade by one."""
    return GrassmannElement(delta_star_matrix(v, g) @ a.coeffs)


def right_delta(v: np.ndarray, a: GrassmannElement) -> GrassmannElement:
    """Right exterior multiplication: a ^ v."""
    return wedge(a, GrassmannElement.from_vector(v))


def right_delta_star(v: np.ndarray, a: GrassmannElement, g: Metric) -> GrassmannElement:
    """Right contraction of ``a`` by ``v``."""
    return GrassmannElement(right_delta_star_matrix(v, g) @ a.coeffs)


@lru_cache(maxsize=128)
def _gamma_ops_cached(gkey: bytes, det_tol: float) -> np.ndarray:
    g = Metric(np.frombuffer(gkey, dtype=np.float64).reshape(DIM, DIM), det_tol)
    basis = np.eye(DIM)
    ops = np.empty((DIM, NBLADES, NBLADES), dtype=np.complex128)
    for i in range(DIM):
        ops[i] = delta_matrix(basis[i]) + delta_star_matrix(basis[i], g)
    ops.flags.writeable = False
    return ops


@lru_cache(maxsize=128)
def _right_gamma_ops_cached(gkey: bytes, det_tol: float) -> np.ndarray:
    g = Metric(np.frombuffer(gkey, dtype=np.float64).reshape(DIM, DIM), det_tol)
    basis = np.eye(DIM)
    ops = np.empty((DIM, NBLADES, NBLADES), dtype=np.complex128)
    for i in range(DIM):
        ops[i] = right_delta_matrix(basis[i]) + right_delta_star_matrix(basis[i], g)
    ops.flags.writeable = False
    return ops


def gamma_op(i: int, g: Metric) -> np.ndarray:
    """Generator operator delta_i + delta*_i as a 16x16 matrix.

    The four operators satisfy the anticommutation relations of the metric:
    gamma_op(mu) gamma_op(nu) + gamma_op(nu) gamma_op(mu) = 2 g[mu, nu] Id.
    """
    if not 0 <= i < DIM:
        raise ValueError(f"generator index must be in 0..3, got {i}")
    g.require_nondegenerate()
    return _gamma_ops_cached(g.key(), g.det_tol)[i]


def right_gamma_op(i: int, g: Metric) -> np.ndarray:
    """Mirror of :func:`gamma_op` built from the right-acting operators."""
    if not 0 <= i < DIM:
        raise ValueError(f"generator index must be in 0..3, got {i}")
    g.require_nondegenerate()
    return _right_gamma_ops_cached(g.key(), g.det_tol)[i]


# ---------------------------------------------------------------------------
# Hodge star and the dual product

def _blade_gram(g: np.ndarray, a: int, b: int) -> float:
    """Induced pairing of two blades: det of the metric submatrix."""
    rows = list(_bits(a))
    cols = list(_bits(b))
    if len(rows) != len(cols):
        return 0.0
    if not rows:
        return 1.0
    return float(np.linalg.det(g[np.ix_(rows, cols)]))


def _bits(mask: int):
    return (i for i in range(DIM) if mask >> i & 1)


@lru_cache(maxsize=128)
def _hodge_matrix_cached(gkey: bytes, det_tol: float, osign: int) -> np.ndarray:
    g = Metric(np.frombuffer(gkey, dtype=np.float64).reshape(DIM, DIM), det_tol)
    g.require_nondegenerate()
    scale = osign * np.sqrt(abs(g.det))
    h = np.zeros((NBLADES, NBLADES), dtype=np.float64)
    for b in range(NBLADES):
        k = GRADE[b]
        for a in range(NBLADES):
            if GRADE[a] != k:
                continue
            comp = TOP ^ a
            # star is fixed by e_a ^ star(e_b) = <e_a, e_b> vol
            h[comp, b] += scale * WEDGE_SIGN[a, comp] * _blade_gram(g.g, a, b)
    h.flags.writeable = False
    return h


def hodge_matrix(g: Metric, o: Orientation = Orientation()) -> np.ndarray:
    """16x16 matrix of the Hodge star for metric ``g`` and orientation ``o``."""
    return _hodge_matrix_cached(g.key(), g.det_tol, o.sign)


def hodge(a: GrassmannElement, g: Metric, o: Orientation = Orientation()) -> GrassmannElement:
    """Hodge star: grade k goes to grade 4 - k."""
    return GrassmannElement(hodge_matrix(g, o) @ a.coeffs)


def star_star_scalars(g: Metric, o: Orientation = Orientation()) -> np.ndarray:
    """The five per-grade scalars of the squared star, computed from the matrix.

    The double star restricted to each grade is a scalar multiple of the
    identity; the scalars are returned for grades 0..4 and are reported, not
    assumed.
    """
    h = hodge_matrix(g, o)
    hh = h @ h
    out = np.empty(DIM + 1)
    for k in range(DIM + 1):
        idx = [b for b in range(NBLADES) if GRADE[b] == k]
        block = hh[np.ix_(idx, idx)]
        out[k] = block[0, 0]
        if not np.allclose(block, block[0, 0] * np.eye(len(idx)), atol=1e-10 * max(1.0, abs(block[0, 0]))):
            raise AssertionError(f"double star is not scalar on grade {k}")
    return out


def vee(
    a: GrassmannElement,
    b: GrassmannElement,
    g: Metric,
    o: Orientation = Orientation(),
) -> GrassmannElement:
    """Dual product: the wedge conjugated by the star, star(a ^ star(b)).

    With a of grade j and b of grade k the result has grade k - j, so that
    contraction by a vector is the dual of exterior multiplication up to a
    per-grade factor (see :func:`contraction_vs_vee_table`).
    """
    return hodge(wedge(a, hodge(b, g, o)), g, o)


def contraction_vs_vee_table(g: Metric, o: Orientation = Orientation()) -> np.ndarray:
    """Per-grade ratio between v-contraction and the dual product v vee (.).

    Entry k is the factor r_k with delta*_v(omega) = r_k * (v vee omega) for
    omega of grade k >= 1 (entry 0 is set to 0: both sides annihilate
    scalars).  Computed by comparing the two operators on the blade basis for
    a fixed generic vector; stability across other vectors is a test concern.
    """
    vgen = np.array([1.0, 0.5, -0.75, 1.25])
    ds = delta_star_matrix(vgen, g)
    vm = np.zeros((NBLADES, NBLADES), dtype=np.complex128)
    v = GrassmannElement.from_vector(vgen)
    for b in range(NBLADES):
        vm[:, b] = vee(v, GrassmannElement.blade(b), g, o).coeffs
    out = np.zeros(DIM + 1)
    for k in range(1, DIM + 1):
        ratios = []
        for b in range(NBLADES):
            if GRADE[b] != k:
                continue
            dcol, vcol = ds[:, b], vm[:, b]
            ref = int(np.argmax(np.abs(vcol)))
            if abs(vcol[ref]) > 1e-14:
                ratios.append((dcol[ref] / vcol[ref]).real)
        if ratios:
            if not np.allclose(ratios, ratios[0], atol=1e-10):
                raise AssertionError(f"contraction/vee ratio not constant on grade {k}")
            out[k] = ratios[0]
    return out

"""Abstract 16-dimensional Clifford algebra of a symmetric nondegenerate metric.

Elements are stored as 16 complex coefficients in the ordered-generator-product
basis (blade mask m with bits i1 < ... < ik stands for the product of the k
generators in ascending order; the empty mask is the algebra unit).  The
geometric product is realized through the generator operators of
:mod:`spinrep.grassmann`: products of those operators represent the abstract
basis elements faithfully, so the structure constants are read off from the
operator algebra.

For a diagonal metric the operator image of a basis element applied to the
scalar 1 returns exactly that basis blade, and the product is the plain
"apply the operator stack, read the coefficients back" construction.  For a
non-diagonal metric the readback must go through the (invertible,
grade-unitriangular) symbol matrix built from those images, otherwise the
product would lose associativity; this module always applies that correction,
which is the identity in the diagonal case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from ._tables import (
    BLADE_BITS,
    DIM,
    GRADE,
    NBLADES,
    REVERSION_SIGN,
    blade_label,
)
from .grassmann import Metric, _gamma_ops_cached


@dataclass(frozen=True)
class CliffordElement:
    """Element of the Clifford algebra in the ordered-product basis."""

    coeffs: np.ndarray = field(default_factory=lambda: np.zeros(NBLADES, complex))

    def __post_init__(self) -> None:
        c = np.array(self.coeffs, dtype=np.complex128)
        if c.shape != (NBLADES,):
            raise ValueError(f"expected {NBLADES} coefficients, got shape {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "CliffordElement":
        return cls(np.zeros(NBLADES, dtype=np.complex128))

    @classmethod
    def unit(cls, value: complex = 1.0) -> "CliffordElement":
        c = np.zeros(NBLADES, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def generator(cls, i: int, value: complex = 1.0) -> "CliffordElement":
        if not 0 <= i < DIM:
            raise ValueError(f"generator index must be in 0..3, got {i}")
        c = np.zeros(NBLADES, dtype=np.complex128)
        c[1 << i] = value
        return cls(c)

    @classmethod
    def basis_blade(cls, mask: int, value: complex = 1.0) -> "CliffordElement":
        c = np.zeros(NBLADES, dtype=np.complex128)
        c[mask] = value
        return cls(c)

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(self.coeffs + other.coeffs)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(self.coeffs - other.coeffs)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(-self.coeffs)

    def __mul__(self, scalar: complex) -> "CliffordElement":
        return CliffordElement(self.coeffs * scalar)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for b in range(NBLADES):
            c = self.coeffs[b]
            if c != 0:
                terms.append(f"({c:.6g})*{blade_label(b, 'g', 'Id')}")
        return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=64)
def _structure_cached(gkey: bytes, det_tol: float):
    """Per-metric operator stack, symbol matrix and product tensor."""
    gens = _gamma_ops_cached(gkey, det_tol)
    ops = np.empty((NBLADES, NBLADES, NBLADES), dtype=np.complex128)
    for mask in range(NBLADES):
        m = np.eye(NBLADES, dtype=np.complex128)
        for i in BLADE_BITS[mask]:
            m = m @ gens[i]
        ops[mask] = m
    # symbol matrix: operator images of the unit, one column per basis element
    unit = np.zeros(NBLADES, dtype=np.complex128)
    unit[0] = 1.0
    phi = ops @ unit  # (NBLADES, NBLADES): row mask -> image vector
    phi = phi.T.copy()
    phi_inv = np.linalg.inv(phi)
    # structure tensor: tensor[i] is left multiplication by basis element i
    tensor = np.real(np.einsum("kl,ilm,mj->ikj", phi_inv, ops, phi)).copy()
    ops.flags.writeable = False
    phi.flags.writeable = False
    phi_inv.flags.writeable = False
    tensor.flags.writeable = False
    return ops, phi, phi_inv, tensor


def _structure(g: Metric):
    g.require_nondegenerate()
    return _structure_cached(g.key(), g.det_tol)


def basis_operators(g: Metric) -> np.ndarray:
    """Stack of the 16 operator images of the basis elements (16x16 each)."""
    return _structure(g)[0]


def product_tensor(g: Metric) -> np.ndarray:
    """Real structure tensor t with (a b)_k = sum_ij t[i, k, j] a_i b_j."""
    return _structure(g)[3]


def geometric_product(a: CliffordElement, b: CliffordElement, g: Metric) -> CliffordElement:
    """Associative product with generators squaring to the metric."""
    return CliffordElement(_kernels.mul16(a.coeffs, b.coeffs, product_tensor(g)))


def grade_project(a: CliffordElement, k: int) -> CliffordElement:
    """Keep only the coefficients of products of exactly ``k`` generators."""
    if not 0 <= k <= DIM:
        raise ValueError(f"grade must be in 0..4, got {k}")
    return CliffordElement(np.where(GRADE == k, a.coeffs, 0.0))


def even_part(a: CliffordElement) -> CliffordElement:
    """Projection onto the even subalgebra (grades 0, 2, 4)."""
    return CliffordElement(np.where(GRADE % 2 == 0, a.coeffs, 0.0))


def odd_part(a: CliffordElement) -> CliffordElement:
    """Projection onto the odd component (grades 1, 3)."""
    return CliffordElement(np.where(GRADE % 2 == 1, a.coeffs, 0.0))


def reversion(a: CliffordElement) -> CliffordElement:
    """Anti-automorphism reversing factor order: sign (-1)^(k(k-1)/2) on grade k."""
    return CliffordElement(a.coeffs * REVERSION_SIGN)

"""Numerical checks of the symmetrised-product algebra on Hermitian matrices.

The commutative product x ∘ y = (xy + yx)/2 on self-adjoint matrices is the
algebraic image of the logical conjunction of ideal sequential questions.
This module verifies its structural properties on concrete inputs: symmetry,
marginality, idempotency transfer, power associativity, the order symmetry of
the mapped exclusive disjunction, and formal reality (a sum of squares only
vanishes when every term does).

Formal reality is probed statistically over random inputs; the verdict is
"consistent with", never a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DimensionMismatchError, NotHermitianError
from .hilbert import DEFAULT_TOL, Projector, complement_projector, operator_norm

__all__ = [
    "jordan_product",
    "mapped_conjunction",
    "IdempotencyReport",
    "idempotency_transfer_check",
    "FormalRealityReport",
    "formal_reality_probe",
    "XorSymmetryReport",
    "xor_operator_symmetry_check",
]


def _as_hermitian(matrix: np.ndarray | Projector, tol: float) -> np.ndarray:
    m = matrix.matrix if isinstance(matrix, Projector) else np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    residual = operator_norm(m - m.conj().T)
    if residual > tol:
        raise NotHermitianError(residual, tol)
    return m


def jordan_product(
    x: np.ndarray | Projector, y: np.ndarray | Projector, tol: float = DEFAULT_TOL
) -> np.ndarray:
    """Symmetrised product (xy + yx)/2 of two Hermitian matrices.

    Commutative and Hermitian by construction; non-associative in general.
    """
    xm = _as_hermitian(x, tol)
    ym = _as_hermitian(y, tol)
    if xm.shape != ym.shape:
        raise DimensionMismatchError(f"shapes {xm.shape} and {ym.shape} differ")
    return (xm @ ym + ym @ xm) / 2


def mapped_conjunction(a: Projector, b: Projector, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Operator image of the logical conjunction of two questions.

    Identical to the symmetrised product of the projectors; satisfies the
    operator marginality  (A ∘ B) + (A ∘ B̄) = A.
    """
    return jordan_product(a, b, tol)


@dataclass(frozen=True)
class IdempotencyReport:
    """Residuals of the two idempotency requirements for a question operator."""

    cubic_residual: float       # ||A A A - A||
    square_residual: float      # ||A ∘ A - A||
    tol: float

    @property
    def passed(self) -> bool:
        return self.cubic_residual <= self.tol and self.square_residual <= self.tol


def idempotency_transfer_check(
    a: np.ndarray | Projector, tol: float = DEFAULT_TOL
) -> IdempotencyReport:
    """Check that asking a question twice is equivalent to asking it once.

    Accepts raw Hermitian matrices so that near-projectors can be diagnosed;
    a genuine projector passes both residual checks trivially.
    """
    m = _as_hermitian(a, tol)
    cubic = operator_norm(m @ m @ m - m)
    square = operator_norm(m @ m - m)  # x ∘ x reduces to the ordinary square
    return IdempotencyReport(cubic_residual=cubic, square_residual=square, tol=tol)


@dataclass(frozen=True)
class FormalRealityReport:
    """Result of probing x ∘ x + y ∘ y = 0  =>  x = y = 0 on one input pair."""

    residual_norm: float
    input_scale: float          # max(||x||, ||y||)
    verdict: Literal["consistent", "violated"]


def formal_reality_probe(
    x: np.ndarray, y: np.ndarray, tol: float = DEFAULT_TOL
) -> FormalRealityReport:
    """Measure ||x∘x + y∘y|| against the input scale.

    For Hermitian inputs the sum of squares is positive semidefinite, so the
    residual can only vanish when both inputs do; a "violated" verdict
    (vanishing residual with nonzero input) must never occur and would signal
    broken arithmetic.
    """
    xm = _as_hermitian(x, tol)
    ym = _as_hermitian(y, tol)
    if xm.shape != ym.shape:
        raise DimensionMismatchError(f"shapes {xm.shape} and {ym.shape} differ")
    residual = operator_norm(jordan_product(xm, xm) + jordan_product(ym, ym))
    scale = max(operator_norm(xm), operator_norm(ym))
    violated = residual <= tol and scale > tol
    return FormalRealityReport(
        residual_norm=residual,
        input_scale=scale,
        verdict="violated" if violated else "consistent",
    )


@dataclass(frozen=True)
class XorSymmetryReport:
    """Residuals for the order symmetry of the mapped exclusive disjunction."""

    swap_residual: float        # ||(A B̄ A + Ā B Ā) - (B Ā B + B̄ A B̄)||
    expansion_residual_ab: float  # ||(A B̄ A + Ā B Ā) - (A + B - AB - BA)||
    expansion_residual_ba: float
    tol: float

    @property
    def passed(self) -> bool:
        return (
            self.swap_residual <= self.tol
            and self.expansion_residual_ab <= self.tol
            and self.expansion_residual_ba <= self.tol
        )


def xor_operator_symmetry_check(
    a: Projector, b: Projector, tol: float = DEFAULT_TOL
) -> XorSymmetryReport:
    """Verify that the mapped exclusive disjunction does not depend on order.

    Both orderings of the mapped operator are compared with each other and
    with the common expansion A + B - AB - BA.
    """
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dims {a.dim} and {b.dim} differ")
    am, bm = a.matrix, b.matrix
    abar = complement_projector(a).matrix
    bbar = complement_projector(b).matrix
    forward = am @ bbar @ am + abar @ bm @ abar
    backward = bm @ abar @ bm + bbar @ am @ bbar
    expansion = am + bm - am @ bm - bm @ am
    return XorSymmetryReport(
        swap_residual=operator_norm(forward - backward),
        expansion_residual_ab=operator_norm(forward - expansion),
        expansion_residual_ba=operator_norm(backward - expansion),
        tol=tol,
    )

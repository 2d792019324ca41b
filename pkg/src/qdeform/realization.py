"""Deformed ladder operators as number-diagonal rescalings of the undeformed
pair (the Polychronakos-style realization).

a_minus = U_minus(N) a and a_plus = U_plus(N) a_dag with U chosen so the
product U_plus(n) U_minus(n-1) n reproduces the deformed integer {n}_q.  For
real q this reproduces the direct construction entrywise and is unitary
(a_plus is the adjoint of a_minus); at roots of unity the entries agree in
modulus only and the representation is in general non-unitary.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .ladder import build_ladder, matrix_mismatch
from .roots import DeformParam, RealQ, param_value, q_number_value


def u_plus(param: DeformParam, n: int) -> complex:
    """sqrt({n}_q / n).  The 0/0 point at n = 0 is fixed to 1: the realization
    only ever multiplies it by a vanishing ladder entry, and 1 keeps the
    function continuous with the q -> 1 limit."""
    if n == 0:
        return 1.0 + 0j
    return cmath.sqrt(complex(q_number_value(n, param)) / n)


def u_minus(param: DeformParam, n: int) -> complex:
    """sqrt({n+1}_q / (n+1)); the singular point at n = -1 is fixed to 1."""
    if n == -1:
        return 1.0 + 0j
    return cmath.sqrt(complex(q_number_value(n + 1, param)) / (n + 1))


def undeformed_ladder(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """The ordinary oscillator pair: raising[n+1, n] = lowering[n, n+1] = sqrt(n+1)."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    amplitudes = np.sqrt(np.arange(1, dim, dtype=float))
    raising = np.zeros((dim, dim), dtype=complex)
    lowering = np.zeros((dim, dim), dtype=complex)
    steps = np.arange(dim - 1)
    raising[steps + 1, steps] = amplitudes
    lowering[steps, steps + 1] = amplitudes
    return raising, lowering


def realize_deformed(param: DeformParam, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """(a_minus, a_plus) built by rescaling the undeformed pair.

    a_minus = diag(U_minus(n)) @ lowering gives entries sqrt(n) sqrt({n}_q/n);
    a_plus = diag(U_plus(n)) @ raising gives sqrt(n+1) sqrt({n+1}_q/(n+1)).
    """
    if dim < 2:
        raise ValueError(f"need dim >= 2, got {dim}")
    raising, lowering = undeformed_ladder(dim)
    scale_minus = np.diag([u_minus(param, n) for n in range(dim)])
    scale_plus = np.diag([u_plus(param, n) for n in range(dim)])
    return scale_minus @ lowering, scale_plus @ raising


def realization_mismatch(param: DeformParam, dim: int) -> float:
    """Scaled gap between the rescaled pair and the direct construction.

    Entrywise for real q; in modulus for roots of unity (sqrt(a)*sqrt(b) and
    sqrt(a*b) may differ by a sign for complex arguments, so entrywise phase
    equality is not claimed there).
    """
    realized_minus, realized_plus = realize_deformed(param, dim)
    direct_raising, direct_lowering = build_ladder(param, dim)
    if isinstance(param, RealQ):
        return max(
            matrix_mismatch(realized_plus, direct_raising),
            matrix_mismatch(realized_minus, direct_lowering),
        )
    return max(
        matrix_mismatch(np.abs(realized_plus), np.abs(direct_raising)),
        matrix_mismatch(np.abs(realized_minus), np.abs(direct_lowering)),
    )


@dataclass(frozen=True)
class ScalingRecurrenceReport:
    """Residuals of the product recurrence F(n+1) - q F(n) = 1 and of the
    identification F(n) = {n}_q, where F(n) = U_plus(n) U_minus(n-1) n."""

    n_max: int
    max_recurrence_residual: float
    max_qnumber_mismatch: float


def verify_scaling_recurrence(param: DeformParam, n_max: int) -> ScalingRecurrenceReport:
    """Check the recurrence that forces the scaling choice, up to n_max.

    Residuals are scaled by the operand magnitude (F grows like q**n for real
    q > 1, where absolute doubles cannot reach 1e-12).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    q = param_value(param)
    f = [u_plus(param, n) * u_minus(param, n - 1) * n for n in range(n_max + 2)]
    recurrence = 0.0
    for n in range(n_max + 1):
        residual = abs(f[n + 1] - q * f[n] - 1.0)
        scale = max(1.0, abs(f[n + 1]), abs(q * f[n]))
        recurrence = max(recurrence, residual / scale)
    mismatch = 0.0
    for n in range(n_max + 1):
        target = complex(q_number_value(n, param))
        mismatch = max(mismatch, abs(f[n] - target) / max(1.0, abs(target)))
    return ScalingRecurrenceReport(
        n_max=n_max, max_recurrence_residual=recurrence, max_qnumber_mismatch=mismatch
    )


def unitarity_check(param: DeformParam, dim: int) -> bool:
    """True iff the realized a_plus is the conjugate transpose of a_minus.

    Holds for every real q; at roots of unity the phases of {n}_q generally
    break it (the order-2 root, whose deformed integers are all real, is the
    exception).
    """
    realized_minus, realized_plus = realize_deformed(param, dim)
    return matrix_mismatch(realized_plus, realized_minus.conj().T) <= 1e-12

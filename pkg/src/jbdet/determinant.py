"""Determinants of hermitian biquaternion matrices.

The determinant of order n is defined recursively: dt of a 1x1 matrix is its
single (complex) entry, and for a nonzero (1,1) pivot

    dt(x) = x11 * dt( x_ij - x11^{-1} x_i1 x_1j )   over  2 <= i, j <= n+1.

Near the measure-zero set where the pivot vanishes the map is evaluated by
polynomial interpolation of lambda -> dt(lambda * I + x), which is a monic
polynomial of degree n; its value at 0 is the continuous extension.  The
square of dt always equals the ordinary determinant of the 2n x 2n complex
image under the hat map, which is carried along as a residual diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cd, numkit
from .biquat import hat_matrix, unhat_matrix
from .errors import ConsistencyError, DomainError, NumericError
from .jordan import HermMatrix

#: pivot is usable when |x11| >= PIVOT_REL * (1 + max coordinate)
PIVOT_REL = 1e-6

_MAX_PHASE_RETRIES = 12


@dataclass(frozen=True)
class DtResult:
    value: complex
    route: str
    residual: float


def _as_biquat(x: HermMatrix) -> HermMatrix:
    if x.level == 2:
        return x
    return x.to_level2()


def _scale(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def _schur_complement(a: np.ndarray) -> np.ndarray:
    """Pivot elimination of the first row/column; entries stay biquaternionic."""
    pivot = a[0, 0, 0]
    col = a[1:, 0, :]
    row = a[0, 1:, :]
    cross = np.einsum("ia,jb,abc->ijc", col, row, cd.mul_tensor(2))
    return a[1:, 1:, :] - cross / pivot


def _dt_array(a: np.ndarray, rng: np.random.Generator, scale: float) -> tuple[complex, bool]:
    """dt of an (n, n, 4) hermitian array; second value flags interpolation."""
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0, 0]), False
    if abs(a[0, 0, 0]) >= PIVOT_REL * (1.0 + scale):
        value, _ = _dt_array(_schur_complement(a), rng, scale)
        return complex(a[0, 0, 0]) * value, False
    return _dt_interpolated(a, rng, scale), True


def _dt_interpolated(a: np.ndarray, rng: np.random.Generator, scale: float) -> complex:
    """Value at 0 of the degree-n polynomial lambda -> dt(lambda I + a)."""
    n = a.shape[0]
    rho = 1.0 + scale
    nodes = rho * np.exp(2j * np.pi * np.arange(n + 1) / (n + 1))
    eye = np.zeros_like(a)
    for i in range(n):
        eye[i, i, 0] = 1.0
    for _ in range(_MAX_PHASE_RETRIES):
        phase = np.exp(2j * np.pi * rng.random())
        lam = nodes * phase
        # every shifted pivot must clear the threshold before recursing
        if np.min(np.abs(lam + a[0, 0, 0])) < PIVOT_REL * (1.0 + scale + rho):
            continue
        samples = []
        for lk in lam:
            shifted = a + lk * eye
            value, _ = _dt_array(shifted, rng, _scale(shifted))
            samples.append((complex(lk), value))
        poly = numkit.poly_fit(samples)
        return poly(0.0)
    raise NumericError("could not find interpolation nodes with usable pivots")


def dt(x: HermMatrix, rng: np.random.Generator | None = None) -> DtResult:
    """Determinant with route tag and the squared-determinant residual."""
    x = _as_biquat(x)
    rng = rng if rng is not None else numkit.make_rng(0)
    value, interpolated = _dt_array(x.entries, rng, _scale(x.entries))
    hat = hat_matrix(x.entries)
    det_hat = complex(np.linalg.det(hat))
    residual = abs(value * value - det_hat) / max(1.0, abs(det_hat))
    return DtResult(value, "interpolated" if interpolated else "recursive", residual)


def dt_value(x: HermMatrix, rng: np.random.Generator | None = None) -> complex:
    rng = rng if rng is not None else numkit.make_rng(0)
    x = _as_biquat(x)
    value, _ = _dt_array(x.entries, rng, _scale(x.entries))
    return value


def dt3_sarrus(x: HermMatrix) -> complex:
    """Closed form for order 3: the six ordered triple products."""
    x = _as_biquat(x)
    if x.order != 3:
        raise DomainError("the closed form is specific to order 3")
    e = x.entries

    def m(u, v):
        return cd.mul_arrays(u, v, 2)

    x11, x22, x33 = e[0, 0, 0], e[1, 1, 0], e[2, 2, 0]
    x12, x13, x23 = e[0, 1], e[0, 2], e[1, 2]
    x21, x31, x32 = e[1, 0], e[2, 0], e[2, 1]
    total = np.zeros(4, dtype=np.complex128)
    total[0] += x11 * x22 * x33
    total += m(m(x32, x21), x13)
    total += m(m(x31, x12), x23)
    total -= x11 * m(x32, x23)
    total -= x22 * m(x31, x13)
    total -= x33 * m(x21, x12)
    if np.max(np.abs(total[1:])) > 1e-8 * max(1.0, float(np.max(np.abs(total)))):
        raise ConsistencyError(
            "closed form produced a non-scalar value", float(np.max(np.abs(total[1:])))
        )
    return complex(total[0])


def dt_eigen_half(x: HermMatrix, reference: complex) -> complex:
    """Verification route: product of hat eigenvalues at half multiplicity.

    Every eigenvalue of the hat image has even multiplicity; their product
    with halved multiplicities equals the determinant up to a sign that the
    identity itself cannot fix, so the sign is resolved against the supplied
    reference value.  Raises when a multiplicity comes out odd.
    """
    x = _as_biquat(x)
    values, mults = numkit.cluster_values(numkit.eig(hat_matrix(x.entries)))
    if any(m % 2 for m in mults):
        raise ConsistencyError(
            f"odd eigenvalue multiplicities {list(mults)}", float(np.max(mults))
        )
    product = 1.0 + 0.0j
    for v, m in zip(values, mults):
        product *= v ** (int(m) // 2)
    return product if abs(product - reference) <= abs(product + reference) else -product


def char_poly(x: HermMatrix, rng: np.random.Generator | None = None) -> numkit.Polynomial:
    """The monic polynomial lambda -> dt(lambda I - x)."""
    x = _as_biquat(x)
    rng = rng if rng is not None else numkit.make_rng(0)
    n = x.order
    one = HermMatrix.identity(n, 2)
    rho = 1.0 + _scale(x.entries)
    for _ in range(_MAX_PHASE_RETRIES):
        phase = np.exp(2j * np.pi * rng.random())
        lam = rho * phase * np.exp(2j * np.pi * np.arange(n + 1) / (n + 1))
        samples = [
            (complex(lk), dt_value(one * lk - x, rng)) for lk in lam
        ]
        try:
            return numkit.poly_fit(samples)
        except NumericError:
            continue
    raise NumericError("characteristic polynomial fit failed")


def _hat_unitary_gap(hat: np.ndarray) -> float:
    eye = np.eye(hat.shape[0])
    return float(np.max(np.abs(hat @ hat.conj().T - eye)))


def unitary_sqrt_hat(e: HermMatrix, branch_signs=None,
                     tol: float = 1e-7) -> HermMatrix:
    """A unitary square root of a unitary element, computed in the hat image.

    The root is a Lagrange polynomial in the element itself, so it stays
    inside the hermitian biquaternionic matrices.  ``branch_signs`` optionally
    flips the principal square root per distinct eigenvalue.
    """
    e = _as_biquat(e)
    hat = hat_matrix(e.entries)
    if _hat_unitary_gap(hat) > tol:
        raise DomainError("square root needs a unitary element")
    values, _ = numkit.cluster_values(numkit.eig(hat))
    roots = np.sqrt(values)
    if branch_signs is not None:
        if len(branch_signs) != len(values):
            raise DomainError(
                f"expected {len(values)} branch signs, got {len(branch_signs)}"
            )
        roots = roots * np.asarray(branch_signs)
    dim = hat.shape[0]
    v_hat = np.zeros_like(hat)
    for j, chi in enumerate(roots):
        proj = np.eye(dim, dtype=np.complex128)
        for k, mu in enumerate(values):
            if k != j:
                proj = proj @ (hat - mu * np.eye(dim)) / (values[j] - mu)
        v_hat += chi * proj
    entries = unhat_matrix(v_hat)
    v = HermMatrix(entries, 2, tol=1e-6)
    round_trip = np.max(np.abs(hat_matrix(v.entries) - v_hat))
    if round_trip > 1e-7:
        raise ConsistencyError("square root left the hat image", float(round_trip))
    return v


def dt_relative(x: HermMatrix, e: HermMatrix,
                rng: np.random.Generator | None = None,
                branch_signs=None) -> complex:
    """Determinant relative to a unitary element.

    Transports x through the *-isomorphism T(y) = v* y v* built from a
    unitary square root v of e, then takes the plain determinant.
    """
    x = _as_biquat(x)
    e = _as_biquat(e)
    x._check_compatible(e)
    v = unitary_sqrt_hat(e, branch_signs=branch_signs)
    v_star_hat = hat_matrix(v.entries).conj().T
    tx_hat = v_star_hat @ hat_matrix(x.entries) @ v_star_hat
    tx = HermMatrix(unhat_matrix(tx_hat), 2, tol=1e-6)
    return dt_value(tx, rng)

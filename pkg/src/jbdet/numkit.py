"""Small dense complex numerics: eigenvalues, determinants, polynomials, RNG.

Everything here is standard linear algebra on matrices of order at most
eight, delegated to LAPACK through numpy (Hessenberg + shifted QR for the
eigenvalues, LU for determinants).  The module also owns the seeded RNG
conventions used by every randomized suite in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError

#: relative clustering tolerance: two eigenvalues are "equal" when
#: |a - b| <= CLUSTER_TOL * max(1, |a|)
CLUSTER_TOL = 1e-6

MAX_EIG_ORDER = 8


def make_rng(seed: int | None) -> np.random.Generator:
    """Per-caller deterministic generator; never shared implicitly."""
    return np.random.default_rng(seed)


def spawn_seeds(seed: int, count: int) -> list[int]:
    """Independent per-trial sub-seeds so parallel and serial runs agree."""
    return [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(count)]


@dataclass(frozen=True)
class Polynomial:
    """Complex polynomial, coefficients stored by ascending degree."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def trimmed(self, tol: float = 1e-12) -> "Polynomial":
        coeffs = self.coeffs
        scale = max(1.0, float(np.max(np.abs(coeffs))))
        last = len(coeffs) - 1
        while last > 0 and abs(coeffs[last]) <= tol * scale:
            last -= 1
        return Polynomial(coeffs[: last + 1])

    def __call__(self, z: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return complex(acc)

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial(np.zeros(1, dtype=np.complex128))
        k = np.arange(1, len(self.coeffs))
        return Polynomial(self.coeffs[1:] * k)


def eig(m: np.ndarray) -> np.ndarray:
    """Eigenvalues with algebraic multiplicity for k x k complex m, k <= 8."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"eig needs a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_EIG_ORDER:
        raise DomainError(f"eig supports order <= {MAX_EIG_ORDER}, got {m.shape[0]}")
    try:
        return np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericError(f"eigenvalue iteration failed: {exc}") from exc


def det_lu(m: np.ndarray) -> complex:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"det_lu needs a square matrix, got shape {m.shape}")
    return complex(np.linalg.det(m))


def companion_matrix(p: Polynomial) -> np.ndarray:
    p = p.trimmed()
    if p.degree < 1:
        raise DomainError("companion matrix needs degree >= 1")
    monic = p.coeffs / p.coeffs[-1]
    n = p.degree
    comp = np.zeros((n, n), dtype=np.complex128)
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -monic[:-1]
    return comp


def poly_roots(p: Polynomial) -> np.ndarray:
    """Roots via the companion matrix, then one Newton polish per root."""
    p = p.trimmed()
    if p.degree == 0:
        return np.zeros(0, dtype=np.complex128)
    roots = eig(companion_matrix(p))
    dp = p.derivative()
    polished = []
    for r in roots:
        d = dp(r)
        if abs(d) > 1e-14:
            step = p(r) / d
            if abs(step) < 1e-2 * max(1.0, abs(r)):
                r = r - step
        polished.append(r)
    return np.asarray(polished, dtype=np.complex128)


def poly_from_roots(roots) -> Polynomial:
    coeffs = np.array([1.0 + 0.0j])
    for r in roots:
        coeffs = np.convolve(coeffs, np.array([-r, 1.0 + 0.0j]))
    return Polynomial(coeffs)


def poly_fit(points: list[tuple[complex, complex]]) -> Polynomial:
    """Interpolating polynomial of degree len(points)-1 via Vandermonde solve."""
    xs = np.asarray([p[0] for p in points], dtype=np.complex128)
    ys = np.asarray([p[1] for p in points], dtype=np.complex128)
    if len(set(map(complex, xs))) != len(xs):
        raise NumericError("interpolation abscissae must be distinct")
    vander = np.vander(xs, increasing=True)
    try:
        coeffs = np.linalg.solve(vander, ys)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"singular Vandermonde system: {exc}") from exc
    return Polynomial(coeffs)


def lstsq(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimum-norm least-squares solution."""
    sol, *_ = np.linalg.lstsq(np.asarray(a, dtype=np.complex128),
                              np.asarray(b, dtype=np.complex128), rcond=None)
    return sol


def cluster_values(values, tol: float = CLUSTER_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Greedy clustering of near-equal complex values.

    Returns (representatives, multiplicities); representatives are the means
    of their clusters, multiplicities the cluster sizes.
    """
    reps: list[complex] = []
    members: list[list[complex]] = []
    for v in sorted(map(complex, values), key=lambda z: (z.real, z.imag)):
        for k, rep in enumerate(reps):
            if abs(v - rep) <= tol * max(1.0, abs(rep)):
                members[k].append(v)
                reps[k] = complex(np.mean(members[k]))
                break
        else:
            reps.append(v)
            members.append([v])
    return (
        np.asarray(reps, dtype=np.complex128),
        np.asarray([len(m) for m in members], dtype=np.int64),
    )

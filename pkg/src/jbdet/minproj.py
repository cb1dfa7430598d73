"""Minimal projections: the three explicit forms, a sampler, a classifier.

Every minimal projection is one of

    corner:    E_33
    lower2x2:  [[0, 0, 0], [0, t, a], [0, a^d, |a|^2/t]]
    full:      [[t, a, b],
                [a^d, |a|^2/t, (a^d b)/t],
                [b^d, (b^d a)/t, |b|^2/t]]

with real t != 0, real octonions a (and b), and the trace constraint
t = t^2 + |a|^2 (+ |b|^2).  Dependent rows are left multiples of the pivot
row by a^d/t and b^d/t.  The classifier inverts the construction from any
matrix that passes the projection and minimality predicates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cd
from .errors import DomainError
from .jordan import HermMatrix, is_projection, tripotent_rank

FORM_CORNER = "corner"
FORM_LOWER = "lower2x2"
FORM_FULL = "full"

_CONSTRAINT_TOL = 1e-10


@dataclass(frozen=True)
class MinProjParams:
    """Parameters (form, pivot value, octonion rows) of a minimal projection."""

    form: str
    alpha: float = 1.0
    a: np.ndarray | None = None
    b: np.ndarray | None = None

    def __post_init__(self):
        if self.form not in (FORM_CORNER, FORM_LOWER, FORM_FULL):
            raise DomainError(f"unknown form {self.form!r}")
        for name in ("a", "b"):
            value = getattr(self, name)
            if value is not None:
                arr = np.asarray(value, dtype=np.float64)
                if arr.shape != (8,):
                    raise DomainError(f"{name} must have 8 real coordinates")
                object.__setattr__(self, name, arr)

    def constraint_gap(self) -> float:
        if self.form == FORM_CORNER:
            return 0.0
        total = self.alpha**2 + float(self.a @ self.a)
        if self.form == FORM_FULL:
            total += float(self.b @ self.b)
        return abs(self.alpha - total)


def _oct(x: np.ndarray) -> np.ndarray:
    return np.asarray(x, dtype=np.complex128)


def build_min_projection(params: MinProjParams,
                         tol: float = _CONSTRAINT_TOL) -> HermMatrix:
    """The matrix of the given form; validates the trace constraint."""
    if params.form == FORM_CORNER:
        return HermMatrix.diag([0, 0, 1])
    if abs(params.alpha) < 1e-12:
        raise DomainError("the pivot value must be nonzero")
    if params.constraint_gap() > tol:
        raise DomainError(
            f"trace constraint violated by {params.constraint_gap():.2e}"
        )
    alpha = params.alpha
    d = cd.diamond_signs(3)
    if params.form == FORM_LOWER:
        a = _oct(params.a)
        q = HermMatrix.zeros(3, 3)
        q.entries[1, 1, 0] = alpha
        q.entries[1, 2] = a
        q.entries[2, 1] = a * d
        q.entries[2, 2, 0] = float(params.a @ params.a) / alpha
        return HermMatrix(q.entries, 3)
    a, b = _oct(params.a), _oct(params.b)
    q = HermMatrix.zeros(3, 3)
    q.entries[0, 0, 0] = alpha
    q.entries[0, 1] = a
    q.entries[0, 2] = b
    q.entries[1, 0] = a * d
    q.entries[2, 0] = b * d
    q.entries[1, 1, 0] = float(params.a @ params.a) / alpha
    q.entries[2, 2, 0] = float(params.b @ params.b) / alpha
    cross = cd.mul_arrays(a * d, b, 3) / alpha
    q.entries[1, 2] = cross
    q.entries[2, 1] = cross * d
    return HermMatrix(q.entries, 3)


def random_min_projection(rng: np.random.Generator,
                          margin: float = 0.05) -> HermMatrix:
    """Sample: a corner at a random diagonal slot, or a dense full form.

    For the full form the pivot is uniform in (margin, 1 - margin), the mass
    t - t^2 is split uniformly between the two octonion rows, and directions
    are uniform on the unit sphere.
    """
    if rng.random() < 0.25:
        position = rng.integers(0, 3)
        values = [0.0, 0.0, 0.0]
        values[position] = 1.0
        return HermMatrix.diag(values)
    alpha = margin + (1.0 - 2.0 * margin) * rng.random()
    mass = alpha - alpha * alpha
    split = rng.random()
    norm_a = np.sqrt(mass * split)
    norm_b = np.sqrt(mass * (1.0 - split))
    a = rng.normal(size=8)
    a *= norm_a / np.linalg.norm(a)
    b = rng.normal(size=8)
    b *= norm_b / np.linalg.norm(b)
    return build_min_projection(MinProjParams(FORM_FULL, alpha, a, b))


def classify_min_projection(q: HermMatrix, tol: float = 1e-7) -> MinProjParams:
    """Recover (form, pivot, rows) from a minimal projection.

    The three canonical forms cover all minimal projections: a vanishing
    diagonal entry forces its whole row and column to vanish, so the first
    nonzero diagonal slot decides the form.
    """
    q = q.to_level3() if q.level == 2 else q
    if not is_projection(q, tol):
        raise DomainError("classification needs a projection")
    if tripotent_rank(q) != 1:
        raise DomainError("classification needs a minimal projection")
    diag = [float(q.entries[i, i, 0].real) for i in range(3)]
    if abs(diag[0]) > tol:
        params = MinProjParams(
            FORM_FULL, diag[0], q.entries[0, 1].real, q.entries[0, 2].real
        )
    elif abs(diag[1]) > tol:
        params = MinProjParams(FORM_LOWER, diag[1], q.entries[1, 2].real)
    elif abs(diag[2]) > tol:
        params = MinProjParams(FORM_CORNER)
    else:
        raise DomainError("zero diagonal cannot belong to a nonzero projection")
    rebuilt = build_min_projection(params, tol=10 * tol)
    gap = (rebuilt - q).sup_norm()
    if gap > tol:
        raise DomainError(
            f"projection does not match its classified form (gap {gap:.2e}); "
            "this would contradict the classification of minimal projections"
        )
    return params


def orthogonal_witness(params: MinProjParams) -> HermMatrix:
    """The explicit projection orthogonal to a dense full form.

    Built from the pivot 2x2 block; together with q it stays strictly below
    the unit, which is what makes the full form minimal.
    """
    if params.form != FORM_FULL or params.a is None or params.b is None:
        raise DomainError("the witness is defined for the full form")
    alpha = params.alpha
    na2 = float(params.a @ params.a)
    denom = alpha**2 + na2
    if denom < 1e-12 or na2 < 1e-12:
        raise DomainError("the witness needs a nonzero second row")
    r = HermMatrix.zeros(3, 3)
    a = _oct(params.a)
    d = cd.diamond_signs(3)
    r.entries[0, 0, 0] = na2 / denom
    r.entries[0, 1] = -alpha * a / denom
    r.entries[1, 0] = -alpha * (a * d) / denom
    r.entries[1, 1, 0] = alpha**2 / denom
    return HermMatrix(r.entries, 3)

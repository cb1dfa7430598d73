"""Real-octonion maps: multiplication pairs, permutations, canonical forms.

All maps here are materialized as real orthogonal 8x8 matrices acting on the
coordinates of the real octonions and extended complex-linearly (a real
matrix automatically commutes with coordinatewise conjugation).  Two kinds
are distinguished: full algebra automorphisms, and the weaker maps that only
preserve the product (x y^d) z; a map of the weaker kind is an automorphism
exactly when it fixes the unit.

The three canonicalization procedures compose multiplication pairs with the
two basis permutations to drive an arbitrary nonzero real octonion into R,
into span{e0, e1}, or (fixing e1) into span{e0, e1, e2}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cd
from .cd import CDElement
from .errors import ConsistencyError, DomainError

KIND_AUTO = "automorphism"
KIND_ASYM = "asymmetric_triple_iso"

_TOL = 1e-10

#: images of e0..e7 under the two permutation automorphisms
_P1_IMAGES = [0, 1, 7, 6, 2, 3, 5, 4]
_P2_IMAGES = [0, 4, 7, 3, 6, 2, 1, 5]


@dataclass(frozen=True)
class OctonionMap:
    """Real-linear isometry of the octonion coordinates."""

    matrix: np.ndarray
    kind: str

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=np.float64)
        if matrix.shape != (8, 8):
            raise DomainError(f"octonion maps are 8x8, got {matrix.shape}")
        gap = np.max(np.abs(matrix.T @ matrix - np.eye(8)))
        if gap > 1e-8:
            raise ConsistencyError("octonion map is not an isometry", float(gap))
        object.__setattr__(self, "matrix", matrix)

    def __call__(self, x):
        if isinstance(x, CDElement):
            if x.level != 3:
                raise DomainError("octonion maps act on level-3 elements")
            return CDElement(3, self.matrix @ x.coords)
        return self.matrix @ np.asarray(x, dtype=np.complex128)

    def compose(self, other: "OctonionMap") -> "OctonionMap":
        """self applied after other."""
        return _from_matrix(self.matrix @ other.matrix)

    @staticmethod
    def identity() -> "OctonionMap":
        return OctonionMap(np.eye(8), KIND_AUTO)

    def fixes_unit(self, tol: float = _TOL) -> bool:
        return bool(np.max(np.abs(self.matrix[:, 0] - np.eye(8)[:, 0])) <= tol)


def _from_matrix(matrix: np.ndarray) -> OctonionMap:
    kind = KIND_AUTO if np.max(np.abs(matrix[:, 0] - np.eye(8)[:, 0])) <= _TOL else KIND_ASYM
    return OctonionMap(matrix, kind)


def _quat_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return cd.mul_arrays(x, y, 2).real


def _right_mult_quat(h: np.ndarray) -> np.ndarray:
    """4x4 matrix of q -> q h on quaternion coordinates."""
    cols = [_quat_mul(np.eye(4)[j], h) for j in range(4)]
    return np.stack(cols, axis=1)


def _check_unit_quat(h: np.ndarray) -> np.ndarray:
    h = np.asarray(h, dtype=np.float64)
    if h.shape != (4,):
        raise DomainError(f"quaternions have 4 real coordinates, got {h.shape}")
    if abs(np.linalg.norm(h) - 1.0) > 1e-8:
        raise DomainError("multiplier quaternions must have unit norm")
    return h


def pair_multiplier(h1, h2) -> OctonionMap:
    """The map (x1, x2) -> (x1 h1, x2 h2) for unit quaternions h1, h2.

    Preserves (x y^d) z; it is a full automorphism exactly when h1 = 1.
    """
    h1 = _check_unit_quat(h1)
    h2 = _check_unit_quat(h2)
    matrix = np.zeros((8, 8))
    matrix[:4, :4] = _right_mult_quat(h1)
    matrix[4:, 4:] = _right_mult_quat(h2)
    kind = KIND_AUTO if np.max(np.abs(h1 - np.eye(4)[0])) <= _TOL else KIND_ASYM
    return OctonionMap(matrix, kind)


def permutation_auto(which: str) -> OctonionMap:
    """The two signed-basis permutation automorphisms (all signs +1)."""
    try:
        images = {"P1": _P1_IMAGES, "P2": _P2_IMAGES}[which]
    except KeyError:
        raise DomainError(f"unknown permutation {which!r}; use 'P1' or 'P2'") from None
    matrix = np.zeros((8, 8))
    for j, target in enumerate(images):
        matrix[target, j] = 1.0
    return OctonionMap(matrix, KIND_AUTO)


def _check_real_octonion(x: CDElement, name: str) -> np.ndarray:
    if x.level != 3:
        raise DomainError(f"{name} must be a level-3 element")
    if not x.is_real(1e-9):
        raise DomainError(f"{name} must have real coordinates")
    return x.coords.real.copy()


def divide_left(x: CDElement, y: CDElement) -> CDElement:
    """The unique u with u y = x, for real octonions with y != 0."""
    xr = _check_real_octonion(x, "x")
    yr = _check_real_octonion(y, "y")
    ny2 = float(yr @ yr)
    if ny2 <= 1e-24:
        raise ZeroDivisionError("division by the zero octonion")
    u = cd.mul_arrays(xr, yr * cd.diamond_signs(3), 3) / ny2
    return CDElement(3, u)


def divide_right(x: CDElement, y: CDElement) -> CDElement:
    """The unique v with y v = x, for real octonions with y != 0."""
    xr = _check_real_octonion(x, "x")
    yr = _check_real_octonion(y, "y")
    ny2 = float(yr @ yr)
    if ny2 <= 1e-24:
        raise ZeroDivisionError("division by the zero octonion")
    v = cd.mul_arrays(yr * cd.diamond_signs(3), xr, 3) / ny2
    return CDElement(3, v)


# ---------------------------------------------------------------------------
# canonicalization of a nonzero real octonion
# ---------------------------------------------------------------------------

_E0 = np.eye(4)[0]


def _rot_to_real(q: np.ndarray) -> np.ndarray:
    """Unit h with q h real; h = 1 when q vanishes (any unit then works)."""
    norm = np.linalg.norm(q)
    if norm <= _TOL:
        return _E0.copy()
    return q * cd.diamond_signs(2).real / norm


def _rot_to_axis(q: np.ndarray, axis: int) -> np.ndarray:
    """Unit h with q h a multiple of the quaternion basis vector `axis`."""
    norm = np.linalg.norm(q)
    if norm <= _TOL:
        return _E0.copy()
    return _quat_mul(q * cd.diamond_signs(2).real, np.eye(4)[axis]) / norm


def _prepare(u: CDElement) -> np.ndarray:
    coords = _check_real_octonion(u, "u")
    if np.linalg.norm(coords) <= _TOL:
        raise DomainError("canonicalization needs a nonzero octonion")
    return coords


def _check_span(v: np.ndarray, axes: tuple[int, ...], label: str):
    mask = np.ones(8, dtype=bool)
    mask[list(axes)] = False
    gap = float(np.max(np.abs(np.asarray(v)[mask])))
    if gap > 1e-8:
        raise ConsistencyError(f"canonicalization missed span {label}", gap)


def canonicalize_a(u: CDElement) -> OctonionMap:
    """A product-triple-preserving map sending u into R."""
    coords = _prepare(u)
    t1 = pair_multiplier(_rot_to_real(coords[:4]), _rot_to_real(coords[4:]))
    p1 = permutation_auto("P1")
    step = p1.compose(t1)
    v = (step.matrix @ coords).real
    t2 = pair_multiplier(_rot_to_real(v[:4]), _E0)
    total = t2.compose(step)
    _check_span(total.matrix @ coords, (0,), "{e0}")
    return total


def canonicalize_b(u: CDElement) -> OctonionMap:
    """An automorphism sending u into span{e0, e1}.

    Follows the constructive chain T3 P1 T2 P2 T1 of unital multiplication
    pairs and permutations; the image of that chain lies in span{e0, e4}, and
    the inverse of P2 (applied as P2 twice, since P2 has order three) carries
    e4 to e1.
    """
    coords = _prepare(u)
    t1 = pair_multiplier(_E0, _rot_to_real(coords[4:]))
    p2 = permutation_auto("P2")
    step = p2.compose(t1)
    v = (step.matrix @ coords).real
    t2 = pair_multiplier(_E0, _rot_to_axis(v[4:], 3))
    p1 = permutation_auto("P1")
    step = p1.compose(t2.compose(step))
    w = (step.matrix @ coords).real
    t3 = pair_multiplier(_E0, _rot_to_real(w[4:]))
    total = p2.compose(p2.compose(t3.compose(step)))
    _check_span(total.matrix @ coords, (0, 1), "{e0,e1}")
    if total.kind != KIND_AUTO:
        raise ConsistencyError("expected a unital map", 1.0)
    return total


def canonicalize_c(u: CDElement) -> OctonionMap:
    """An automorphism fixing e1 and sending u into span{e0, e1, e2}."""
    coords = _prepare(u)
    t1 = pair_multiplier(_E0, _rot_to_axis(coords[4:], 3))
    p1 = permutation_auto("P1")
    step = p1.compose(t1)
    v = (step.matrix @ coords).real
    t2 = pair_multiplier(_E0, _rot_to_real(v[4:]))
    total = p1.compose(t2.compose(step))
    _check_span(total.matrix @ coords, (0, 1, 2), "{e0,e1,e2}")
    e1 = np.eye(8)[1]
    if np.max(np.abs(total.matrix @ e1 - e1)) > 1e-9:
        raise ConsistencyError("canonicalization failed to fix e1", 1.0)
    return total


# ---------------------------------------------------------------------------
# randomized verification of the defining identities
# ---------------------------------------------------------------------------

def map_residuals(t: OctonionMap, rng: np.random.Generator, trials: int = 32) -> dict[str, float]:
    """Worst residuals of the defining identities over random elements."""
    worst_triple = 0.0
    worst_mult = 0.0
    worst_conj = 0.0
    d = cd.diamond_signs(3)
    for _ in range(trials):
        x, y, z = (rng.normal(size=8) + 1j * rng.normal(size=8) for _ in range(3))
        tx, ty, tz = t(x), t(y), t(z)
        lhs = t(cd.mul_arrays(cd.mul_arrays(x, d * y, 3), z, 3))
        rhs = cd.mul_arrays(cd.mul_arrays(tx, d * ty, 3), tz, 3)
        worst_triple = max(worst_triple, float(np.max(np.abs(lhs - rhs))))
        lhs = t(cd.mul_arrays(x, y, 3))
        rhs = cd.mul_arrays(tx, ty, 3)
        worst_mult = max(worst_mult, float(np.max(np.abs(lhs - rhs))))
        worst_conj = max(
            worst_conj, float(np.max(np.abs(t(np.conj(x)) - np.conj(tx))))
        )
    unit_gap = float(np.max(np.abs(t(np.eye(8)[0]) - np.eye(8)[0])))
    return {
        "triple": worst_triple,
        "multiplicative": worst_mult,
        "conjugation": worst_conj,
        "unit": unit_gap,
    }

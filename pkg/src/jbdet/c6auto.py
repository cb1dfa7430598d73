"""Automorphisms of the exceptional algebra of hermitian octonion matrices.

Three generator families, all materialized as operators on the 27 hermitian
coordinates:

* row/column exchanges, which conjugate by a permutation symmetry;
* lifts of octonion maps acting entrywise up to unit-gauge factors; a
  non-unital octonion map T enters through the recipe

      alpha, beta, gamma fixed;  a -> T(a);  b -> T(b) T(1)^d;  c -> T(c^d)^d

  which is a Jordan *-automorphism whenever T preserves (x y^d) z and
  commutes with conjugation (three relabeled variants conjugate this recipe
  by an exchange);
* shifts x -> {u, x*, u} by a unitary u, which are triple automorphisms and
  are unital exactly when u^2 = 1.

Every map carries a provenance trace and can be re-verified against
randomized product-preservation tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import cd
from .errors import ConsistencyError, DomainError
from .jordan import (
    HermMatrix,
    LinearOperator,
    basis_stack,
    coords_of,
    from_coords,
    hermitian_dim,
    is_unitary,
    jordan_mul,
    op_U,
    triple_product,
)
from .octonion import OctonionMap

KIND_JORDAN = "jordan_star_auto"
KIND_TRIPLE = "triple_auto"

_UNIT_TOL = 1e-9


@dataclass
class C6Auto:
    """A structure-preserving linear bijection with provenance."""

    op: LinearOperator
    kind: str
    provenance: list[str]

    def __call__(self, x: HermMatrix) -> HermMatrix:
        return self.op(x)

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix

    def inverse(self) -> "C6Auto":
        return C6Auto(self.op.inverse(), self.kind,
                      [f"inverse({'; '.join(self.provenance)})"])

    @staticmethod
    def identity() -> "C6Auto":
        return C6Auto(LinearOperator.identity(3, 3), KIND_JORDAN, ["identity"])


def _materialize_from_images(images: np.ndarray, provenance: list[str]) -> C6Auto:
    dim = hermitian_dim(3, 3)
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(dim):
        matrix[:, k] = coords_of(images[k])
    op = LinearOperator(matrix, 3, 3)
    unit_gap = np.max(np.abs(op(HermMatrix.identity(3, 3)).entries
                             - HermMatrix.identity(3, 3).entries))
    kind = KIND_JORDAN if unit_gap <= _UNIT_TOL else KIND_TRIPLE
    return C6Auto(op, kind, provenance)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def _exchange_entries(entries: np.ndarray, k: int, l: int) -> np.ndarray:
    out = entries.copy()
    out[[k, l], :, :] = out[[l, k], :, :]
    out[:, [k, l], :] = out[:, [l, k], :]
    return out


@lru_cache(maxsize=None)
def _exchange_matrix(k: int, l: int) -> np.ndarray:
    basis = basis_stack(3, 3)
    dim = basis.shape[0]
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    for m in range(dim):
        matrix[:, m] = coords_of(_exchange_entries(basis[m], k - 1, l - 1))
    matrix.setflags(write=False)
    return matrix


def exchange_auto(k: int, l: int) -> C6Auto:
    """Exchange rows k, l and then columns k, l (1-based indices)."""
    if k == l or not {k, l} <= {1, 2, 3}:
        raise DomainError(f"exchange needs two distinct indices in 1..3, got {k}, {l}")
    op = LinearOperator(_exchange_matrix(k, l).copy(), 3, 3)
    return C6Auto(op, KIND_JORDAN, [f"U_{k}{l}"])


def exchange_symmetry(k: int, l: int) -> HermMatrix:
    """The self-adjoint unitary implementing the exchange as {u, x*, u}."""
    if k == l or not {k, l} <= {1, 2, 3}:
        raise DomainError(f"exchange needs two distinct indices in 1..3, got {k}, {l}")
    u = HermMatrix.zeros(3, 3)
    m = ({1, 2, 3} - {k, l}).pop()
    u.entries[m - 1, m - 1, 0] = 1.0
    u.entries[k - 1, l - 1, 0] = 1.0
    u.entries[l - 1, k - 1, 0] = 1.0
    return u


def _right_mult_oct(w: np.ndarray) -> np.ndarray:
    """8x8 matrix of x -> x w for a fixed real octonion w."""
    return np.stack([cd.mul_arrays(np.eye(8)[j], w, 3) for j in range(8)], axis=1).real


def lift_auto(t: OctonionMap, variant: str = "base") -> C6Auto:
    """Lift an octonion map to the matrix algebra.

    The base recipe keeps the diagonal, applies T on the a-slot, gauges the
    b-slot by the right factor T(1)^d and twists the c-slot by the linear
    involution.  Variants conjugate the base lift by the three exchanges.
    """
    t_matrix = t.matrix
    t_one = t_matrix[:, 0]
    signs = cd.diamond_signs(3)
    dim = hermitian_dim(3, 3)
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    matrix[:3, :3] = np.eye(3)
    a_block = t_matrix
    b_block = _right_mult_oct(t_one * signs) @ t_matrix
    c_block = (signs[:, None] * t_matrix) * signs[None, :]
    matrix[3:11, 3:11] = a_block
    matrix[11:19, 11:19] = b_block
    matrix[19:27, 19:27] = c_block
    base = C6Auto(LinearOperator(matrix, 3, 3), KIND_JORDAN,
                  [f"lift[{t.kind}]"])
    if variant == "base":
        return base
    exchanges = {"T1": (1, 3), "T2": (1, 2), "T3": (2, 3)}
    if variant not in exchanges:
        raise DomainError(f"unknown lift variant {variant!r}")
    u = exchange_auto(*exchanges[variant])
    lifted = compose(u, compose(base, u))
    lifted.provenance = [f"lift_{variant}[{t.kind}]"]
    return lifted


def shift_auto(u: HermMatrix, check: bool = True) -> C6Auto:
    """The triple automorphism x -> {u, x*, u} of a unitary u.

    Conjugate-linearity of the involution cancels against the middle slot,
    leaving exactly the linear operator U_u.
    """
    if check and not is_unitary(u):
        raise DomainError("shift automorphisms require a unitary element")
    return C6Auto(op_U(u), KIND_TRIPLE, ["shift"])


def compose(a: C6Auto, b: C6Auto) -> C6Auto:
    """The map 'a after b'; kind is re-derived from the image of the unit."""
    op = a.op.compose(b.op)
    one = HermMatrix.identity(3, 3)
    unit_gap = np.max(np.abs(op(one).entries - one.entries))
    kind = KIND_JORDAN if unit_gap <= _UNIT_TOL else KIND_TRIPLE
    return C6Auto(op, kind, a.provenance + b.provenance)


def compose_chain(autos) -> C6Auto:
    """Compose a sequence applied left to right (first element acts first)."""
    total = C6Auto.identity()
    for auto in autos:
        total = compose(auto, total)
    return total


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _random_element(rng: np.random.Generator) -> HermMatrix:
    dim = hermitian_dim(3, 3)
    return from_coords(rng.normal(size=dim) + 1j * rng.normal(size=dim), 3, 3)


def verify_kind(auto: C6Auto, rng: np.random.Generator | None = None,
                samples: int = 64, tol: float = 1e-9) -> dict:
    """Re-derive the kind tag from randomized product preservation."""
    rng = rng if rng is not None else np.random.default_rng(0)
    worst_jordan = 0.0
    worst_star = 0.0
    worst_triple = 0.0
    for _ in range(samples):
        x = _random_element(rng)
        y = _random_element(rng)
        z = _random_element(rng)
        fx, fy, fz = auto(x), auto(y), auto(z)
        gap = (auto(jordan_mul(x, y)) - jordan_mul(fx, fy)).sup_norm()
        worst_jordan = max(worst_jordan, gap / max(1.0, x.sup_norm() * y.sup_norm()))
        gap = (auto(x.star()) - fx.star()).sup_norm()
        worst_star = max(worst_star, gap / max(1.0, x.sup_norm()))
        gap = (auto(triple_product(x, y, z)) - triple_product(fx, fy, fz)).sup_norm()
        scale = max(1.0, x.sup_norm() * y.sup_norm() * z.sup_norm())
        worst_triple = max(worst_triple, gap / scale)
    one = HermMatrix.identity(3, 3)
    unit_gap = float((auto(one) - one).sup_norm())
    report = {
        "kind": auto.kind,
        "samples": samples,
        "jordan_residual": worst_jordan,
        "star_residual": worst_star,
        "triple_residual": worst_triple,
        "unit_gap": unit_gap,
    }
    if worst_triple > tol:
        raise ConsistencyError(
            f"map is not a triple automorphism (residual {worst_triple:.2e})",
            worst_triple,
        )
    if auto.kind == KIND_JORDAN and max(worst_jordan, worst_star, unit_gap) > tol:
        raise ConsistencyError(
            "map tagged unital fails the Jordan *-automorphism predicate",
            max(worst_jordan, worst_star, unit_gap),
        )
    return report

"""Spectral calculus for normal elements, in the base algebra and isotopes.

A unitary element e turns the order-3 octonionic hermitian matrices into a
new unital algebra with product x o_e y = {x, e, y} and involution
x -> {e, x, e}.  A normal element x of that algebra generates an associative
subalgebra, so it has a minimal polynomial of degree at most three; its
spectral components are recovered by Lagrange interpolation evaluated with
isotope products.  The resulting resolution drives unitary square roots,
determinants of unitaries relative to any isotope, determinants of general
normal elements, range tripotents, Jordan inverses and the invertibility
predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import numkit
from .determinant import dt_value
from .errors import (
    ConsistencyError,
    DomainError,
    NumericError,
    SingularError,
    UnsupportedInputError,
)
from .jordan import (
    HermMatrix,
    coords_of,
    is_projection,
    is_tripotent,
    is_unitary,
    op_L,
    op_U,
    triple_product,
    tripotent_rank,
)

#: residual gate for reconstructing the input from its resolution
RECONSTRUCT_TOL = 1e-7

#: an eigenvalue this small (relative to the largest) counts as zero
ZERO_EIGENVALUE_TOL = 1e-8

NORMALITY_TOL = 1e-7

_MINPOLY_RESIDUAL = 1e-8


@dataclass
class SpectralResolution:
    """Distinct eigenvalues with orthogonal components below the unit."""

    base_unitary: HermMatrix
    eigenvalues: list[complex]
    components: list[HermMatrix]
    multiplicities: list[int]

    def reconstruct(self) -> HermMatrix:
        total = HermMatrix.zeros(3, 3)
        for value, comp in zip(self.eigenvalues, self.components):
            total = total + comp * value
        return total

    def eigenvalue_multiset(self) -> list[complex]:
        out: list[complex] = []
        for value, mult in zip(self.eigenvalues, self.multiplicities):
            out.extend([value] * mult)
        return out


def _to_c6(x: HermMatrix) -> HermMatrix:
    if x.order != 3:
        raise DomainError("spectral calculus is implemented for order 3")
    return x.to_level3()


def iso_mul(x: HermMatrix, y: HermMatrix, e: HermMatrix) -> HermMatrix:
    """Isotope Jordan product x o_e y = {x, e, y}."""
    return triple_product(x, e, y)


def iso_star(x: HermMatrix, e: HermMatrix) -> HermMatrix:
    """Isotope involution {e, x, e}."""
    return triple_product(e, x, e)


def is_normal(x: HermMatrix, e: HermMatrix | None = None,
              tol: float = NORMALITY_TOL) -> bool:
    """Operator commutation of x with its isotope adjoint."""
    x = _to_c6(x)
    e = HermMatrix.identity(3, 3) if e is None else _to_c6(e)
    mx = op_L(x, e).matrix
    mxs = op_L(iso_star(x, e), e).matrix
    comm = mx @ mxs - mxs @ mx
    scale = max(1.0, float(np.max(np.abs(mx))) * float(np.max(np.abs(mxs))))
    return bool(np.max(np.abs(comm)) <= tol * scale)


def _minimal_polynomial(x: HermMatrix, unit: HermMatrix, e: HermMatrix,
                        max_degree: int) -> np.ndarray:
    """Distinct roots of the minimal polynomial over isotope powers."""
    powers = [unit, x]
    for _ in range(max_degree - 1):
        powers.append(iso_mul(powers[-1], x, e))
    columns = [coords_of(p.entries) for p in powers]
    scale = max(1.0, max(float(np.max(np.abs(c))) for c in columns))
    for degree in range(1, max_degree + 1):
        a = np.stack(columns[:degree], axis=1)
        b = columns[degree]
        sol = numkit.lstsq(a, b)
        residual = float(np.max(np.abs(a @ sol - b)))
        if residual <= _MINPOLY_RESIDUAL * scale:
            coeffs = np.concatenate([-sol, [1.0 + 0.0j]])
            roots = numkit.poly_roots(numkit.Polynomial(coeffs))
            merged, _ = numkit.cluster_values(roots)
            return merged
    raise NumericError(
        f"no annihilating polynomial of degree <= {max_degree} found"
    )


def _lagrange_components(x: HermMatrix, values: np.ndarray, unit: HermMatrix,
                         e: HermMatrix) -> list[HermMatrix]:
    components = []
    for j, vj in enumerate(values):
        comp = unit
        for k, vk in enumerate(values):
            if k != j:
                comp = iso_mul(comp, (x - unit * vk) * (1.0 / (vj - vk)), e)
        components.append(comp)
    return components


def _decompose_under(x: HermMatrix, unit: HermMatrix, e: HermMatrix,
                     max_degree: int) -> tuple[np.ndarray, list[HermMatrix]]:
    """Core functional calculus below a tripotent `unit` of the e-isotope."""
    values = _minimal_polynomial(x, unit, e, max_degree)
    components = _lagrange_components(x, values, unit, e)
    recon = HermMatrix.zeros(3, 3)
    for vj, comp in zip(values, components):
        recon = recon + comp * vj
    gap = (recon - x).sup_norm()
    if gap > RECONSTRUCT_TOL * max(1.0, x.sup_norm()):
        raise NumericError(
            f"spectral reconstruction residual {gap:.2e} exceeds the gate"
        )
    return values, components


def spectral_decompose(x: HermMatrix, e: HermMatrix | None = None,
                       check_normal: bool = True) -> SpectralResolution:
    """Resolution of a normal element relative to a unitary e (default 1)."""
    x = _to_c6(x)
    if e is None:
        e = HermMatrix.identity(3, 3)
    else:
        e = _to_c6(e)
        if not is_unitary(e):
            raise DomainError("the isotope unit must be unitary")
    if check_normal and not is_normal(x, e):
        raise DomainError("spectral decomposition needs a normal element")
    values, components = _decompose_under(x, e, e, 3)
    mults = []
    for comp in components:
        if not is_tripotent(comp, 1e-7):
            raise NumericError("a spectral component failed the tripotent test")
        mults.append(tripotent_rank(comp))
    if sum(mults) != 3:
        raise ConsistencyError(
            f"component ranks {mults} do not fill the algebra", float(sum(mults))
        )
    return SpectralResolution(e, [complex(v) for v in values], components, mults)


def unitary_sqrt(u: HermMatrix, e: HermMatrix | None = None,
                 branch_signs=None) -> HermMatrix:
    """A square root of a unitary element inside the e-isotope.

    Principal branch per distinct eigenvalue unless ``branch_signs`` flips
    individual choices; any choice yields a unitary square root.
    """
    res = spectral_decompose(u, e)
    if any(abs(abs(v) - 1.0) > 1e-6 for v in res.eigenvalues):
        raise DomainError("square root of a non-unitary element was requested")
    roots = np.sqrt(np.asarray(res.eigenvalues, dtype=np.complex128))
    if branch_signs is not None:
        if len(branch_signs) != len(roots):
            raise DomainError(
                f"expected {len(roots)} branch signs, got {len(branch_signs)}"
            )
        roots = roots * np.asarray(branch_signs)
    v = HermMatrix.zeros(3, 3)
    for root, comp in zip(roots, res.components):
        v = v + comp * root
    e_mat = res.base_unitary
    gap = (iso_mul(v, v, e_mat) - u).sup_norm()
    if gap > 1e-7 * max(1.0, u.sup_norm()):
        raise NumericError(f"square root verification failed ({gap:.2e})")
    return v


def dt_unitary(u: HermMatrix, e: HermMatrix | None = None) -> complex:
    """Determinant of a unitary element: the product of its eigenvalues."""
    res = spectral_decompose(u, e)
    if any(abs(abs(v) - 1.0) > 1e-6 for v in res.eigenvalues):
        raise DomainError("dt_unitary needs a unitary element")
    value = 1.0 + 0.0j
    for v, m in zip(res.eigenvalues, res.multiplicities):
        value *= v**m
    return complex(value)


def dt_general(x: HermMatrix, reduction=None) -> complex:
    """Determinant of a general element along one of the supported routes.

    Routes, in order: caller-supplied unital automorphism whose image is
    biquaternionic; biquaternionic entries; normal element (spectral).  A
    non-normal element with genuinely octonionic entries and no supplied
    reduction is unsupported: producing the reducing automorphism requires
    frame transitivity, for which no construction is available here.
    """
    x = _to_c6(x)
    if reduction is not None:
        image = reduction(x)
        if not image.is_biquaternionic(1e-7):
            raise DomainError("the supplied reduction did not yield biquaternions")
        return dt_value(image.to_level2())
    if x.is_biquaternionic():
        return dt_value(x.to_level2())
    if is_normal(x):
        res = spectral_decompose(x, check_normal=False)
        value = 1.0 + 0.0j
        for v, m in zip(res.eigenvalues, res.multiplicities):
            value *= v**m
        return complex(value)
    raise UnsupportedInputError(
        "element is neither biquaternionic nor normal; supply a reducing "
        "Jordan *-automorphism (route for arbitrary octonionic elements "
        "rests on non-constructive frame transitivity)"
    )


def range_tripotent(x: HermMatrix) -> HermMatrix:
    """Range tripotent of a normal element: unimodular parts of its values."""
    res = spectral_decompose(x)
    scale = max(abs(v) for v in res.eigenvalues) if res.eigenvalues else 0.0
    r = HermMatrix.zeros(3, 3)
    for v, comp in zip(res.eigenvalues, res.components):
        if abs(v) > ZERO_EIGENVALUE_TOL * max(1.0, scale):
            r = r + comp * (v / abs(v))
    return r


def complete_to_unitary(x: HermMatrix) -> HermMatrix:
    """A unitary u with x = {u, x, u}: range tripotent plus its kernel frame."""
    res = spectral_decompose(x)
    scale = max(abs(v) for v in res.eigenvalues) if res.eigenvalues else 0.0
    u = HermMatrix.zeros(3, 3)
    for v, comp in zip(res.eigenvalues, res.components):
        phase = v / abs(v) if abs(v) > ZERO_EIGENVALUE_TOL * max(1.0, scale) else 1.0
        u = u + comp * phase
    return u


def jordan_inverse(x: HermMatrix) -> HermMatrix:
    """Inverse of an invertible normal element from its resolution."""
    res = spectral_decompose(x)
    scale = max(abs(v) for v in res.eigenvalues)
    if any(abs(v) <= ZERO_EIGENVALUE_TOL * max(1.0, scale) for v in res.eigenvalues):
        raise SingularError("element has a zero eigenvalue")
    y = HermMatrix.zeros(3, 3)
    for v, comp in zip(res.eigenvalues, res.components):
        y = y + comp.star() * (1.0 / v)
    return y


def is_invertible(x: HermMatrix, tol: float = 1e-10) -> bool:
    """Invertibility through the quadratic representation operator."""
    x = _to_c6(x)
    svals = np.linalg.svd(op_U(x).matrix, compute_uv=False)
    return bool(svals[-1] > tol * max(1.0, svals[0]))


# ---------------------------------------------------------------------------
# projection splitting and frames
# ---------------------------------------------------------------------------

def split_projection(p: HermMatrix, rng: np.random.Generator,
                     attempts: int = 25) -> list[HermMatrix]:
    """Decompose a projection into mutually orthogonal minimal projections.

    Rank-2 projections are split by compressing a random self-adjoint
    element into their Peirce-2 algebra and decomposing there; the compression
    is redrawn whenever it degenerates to a multiple of p.
    """
    p = _to_c6(p)
    if not is_projection(p):
        raise DomainError("splitting is defined for projections")
    rank = tripotent_rank(p)
    if rank == 1:
        return [p]
    if rank == 3:
        if (p - HermMatrix.identity(3, 3)).sup_norm() > 1e-7:
            raise ConsistencyError("a rank-3 projection must be the unit", 3.0)
        return [HermMatrix.diag([1, 0, 0]), HermMatrix.diag([0, 1, 0]),
                HermMatrix.diag([0, 0, 1])]
    one = HermMatrix.identity(3, 3)
    # within the Peirce-2 space of a projection the base Jordan product
    # coincides with the Peirce product, so the base unit can be passed
    for _ in range(attempts):
        y = _random_selfadjoint(rng)
        z = triple_product(p, y, p)
        try:
            values, comps = _decompose_under(z, p, one, 2)
        except NumericError:
            continue
        if len(values) != 2:
            continue
        if abs(values[0] - values[1]) < 1e-3 * max(1.0, *(abs(v) for v in values)):
            continue
        if all(is_projection(c, 1e-7) and tripotent_rank(c) == 1 for c in comps):
            return list(comps)
    raise NumericError("failed to split a rank-2 projection")


def frame_under(e: HermMatrix, rng: np.random.Generator) -> list[HermMatrix]:
    """Three mutually orthogonal minimal tripotents summing to a unitary e."""
    res = spectral_decompose(e)
    if any(abs(abs(v) - 1.0) > 1e-6 for v in res.eigenvalues):
        raise DomainError("frames are extracted below unitary elements")
    frame = []
    for v, comp, mult in zip(res.eigenvalues, res.components, res.multiplicities):
        if mult == 1:
            frame.append(comp * v)
        else:
            for piece in split_projection(comp, rng):
                frame.append(piece * v)
    return frame


def _random_selfadjoint(rng: np.random.Generator) -> HermMatrix:
    from .jordan import from_coords, hermitian_dim

    return from_coords(rng.normal(size=hermitian_dim(3, 3)), 3, 3)

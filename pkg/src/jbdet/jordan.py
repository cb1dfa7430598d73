"""Matrix Jordan algebras over the Cayley-Dickson tower.

Hermitian matrices (fixed points of the diamond-transpose) with level-2
entries form the biquaternionic algebras of any order; with level-3 entries
and order three they form the 27-dimensional exceptional algebra.  This
module owns the box/Jordan/triple products, the L, Q and U operators as
materialized matrices on hermitian coordinates, Peirce projections, and the
tripotent/projection/unitarity predicates used throughout.

Raw matrices are (n, n, K) complex arrays with K = 2**level; hermitian
elements additionally satisfy entry(j,i) = diamond(entry(i,j)) with scalar
diagonal.  Tolerances throughout use the coordinate sup norm; the canonical
Banach-algebra norm of these algebras has no closed form here and is never
computed.  Hermitian coordinates are laid out as the n diagonal scalars
followed by the K coordinates of every above-diagonal entry in row order;
for order 3, level 3 this gives the canonical 27 complex coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import cd
from .errors import ConsistencyError, DomainError

PREDICATE_TOL = 1e-8

#: hermitian-coordinate dimension of the Peirce-2 space by tripotent rank
RANK_BY_PEIRCE_DIM = {3: {1: 1, 10: 2, 27: 3}, 2: {1: 1, 6: 2, 15: 3}}


# ---------------------------------------------------------------------------
# raw (n, n, K) matrix arithmetic
# ---------------------------------------------------------------------------

def box(x: np.ndarray, y: np.ndarray, level: int) -> np.ndarray:
    """Matrix product with entrywise Cayley-Dickson multiplication."""
    return np.einsum("ija,jkb,abc->ikc", x, y, cd.mul_tensor(level))


def box_batch(x: np.ndarray, y_batch: np.ndarray, level: int) -> np.ndarray:
    return np.einsum("ija,Bjkb,abc->Bikc", x, y_batch, cd.mul_tensor(level))


def box_batch_rev(x_batch: np.ndarray, y: np.ndarray, level: int) -> np.ndarray:
    return np.einsum("Bija,jkb,abc->Bikc", x_batch, y, cd.mul_tensor(level))


def dtranspose(x: np.ndarray, level: int) -> np.ndarray:
    """Diamond-transpose: entry (i, j) becomes diamond of entry (j, i)."""
    return np.swapaxes(x, -3, -2) * cd.diamond_signs(level)


def star_m(x: np.ndarray, level: int) -> np.ndarray:
    """Conjugate-linear involution: conjugate of the diamond-transpose."""
    return np.conj(dtranspose(x, level))


def jordan_m(x: np.ndarray, y: np.ndarray, level: int) -> np.ndarray:
    return 0.5 * (box(x, y, level) + box(y, x, level))


def jordan_batch(x: np.ndarray, y_batch: np.ndarray, level: int) -> np.ndarray:
    return 0.5 * (box_batch(x, y_batch, level) + box_batch_rev(y_batch, x, level))


def triple_m(x: np.ndarray, y: np.ndarray, z: np.ndarray, level: int) -> np.ndarray:
    """{x,y,z} = (x o y*) o z + (z o y*) o x - (x o z) o y*."""
    ystar = star_m(y, level)
    return (
        jordan_m(jordan_m(x, ystar, level), z, level)
        + jordan_m(jordan_m(z, ystar, level), x, level)
        - jordan_m(jordan_m(x, z, level), ystar, level)
    )


def triple_batch_mid(x: np.ndarray, y_batch: np.ndarray, z: np.ndarray, level: int) -> np.ndarray:
    """{x, Y_b, z} over a batch of middle arguments."""
    ystar = np.conj(dtranspose(y_batch, level))
    xz = jordan_m(x, z, level)
    t1 = jordan_batch(z, jordan_batch(x, ystar, level), level)
    t2 = jordan_batch(x, jordan_batch(z, ystar, level), level)
    t3 = jordan_batch(xz, ystar, level)
    return t1 + t2 - t3


def triple_batch_outer(x: np.ndarray, y: np.ndarray, z_batch: np.ndarray, level: int) -> np.ndarray:
    """{x, y, Z_b} over a batch of outer arguments."""
    ystar = star_m(y, level)
    xy = jordan_m(x, ystar, level)
    t1 = jordan_batch(xy, z_batch, level)
    t2 = jordan_batch(x, jordan_batch(ystar, z_batch, level), level)
    t3 = jordan_batch(ystar, jordan_batch(x, z_batch, level), level)
    return t1 + t2 - t3


# ---------------------------------------------------------------------------
# hermitian elements
# ---------------------------------------------------------------------------

class HermMatrix:
    """A diamond-hermitian matrix with scalar diagonal, entries of one level."""

    __slots__ = ("order", "level", "entries")

    def __init__(self, entries: np.ndarray, level: int | None = None,
                 validate: bool = True, tol: float = PREDICATE_TOL):
        entries = np.asarray(entries, dtype=np.complex128)
        if entries.ndim != 3 or entries.shape[0] != entries.shape[1]:
            raise DomainError(f"expected (n, n, K) entries, got shape {entries.shape}")
        n, _, width = entries.shape
        if level is None:
            level = int(width).bit_length() - 1
        if width != 1 << level:
            raise DomainError(f"entry width {width} does not match level {level}")
        if level == 3 and n != 3:
            raise DomainError("octonionic hermitian matrices exist only at order 3")
        if validate:
            herm_gap = np.max(np.abs(entries - dtranspose(entries, level)))
            diag_gap = max(
                (np.max(np.abs(entries[i, i, 1:])) for i in range(n)), default=0.0
            )
            if herm_gap > tol or diag_gap > tol:
                raise DomainError(
                    f"matrix is not hermitian with scalar diagonal "
                    f"(hermitian gap {herm_gap:.2e}, diagonal gap {diag_gap:.2e})"
                )
        # store the exactly symmetrized representative
        sym = 0.5 * (entries + dtranspose(entries, level))
        for i in range(n):
            sym[i, i, 1:] = 0.0
        self.order = n
        self.level = level
        self.entries = sym

    # -- constructors -------------------------------------------------------
    @classmethod
    def _trusted(cls, entries: np.ndarray, order: int, level: int) -> "HermMatrix":
        """Wrap entries already known to be exactly hermitian (no checks)."""
        m = object.__new__(cls)
        m.order = order
        m.level = level
        m.entries = entries
        return m

    @staticmethod
    def zeros(order: int, level: int) -> "HermMatrix":
        return HermMatrix._trusted(
            np.zeros((order, order, 1 << level), dtype=np.complex128), order, level
        )

    @staticmethod
    def identity(order: int, level: int) -> "HermMatrix":
        m = HermMatrix.zeros(order, level)
        for i in range(order):
            m.entries[i, i, 0] = 1.0
        return m

    @staticmethod
    def diag(values, level: int = 3) -> "HermMatrix":
        values = list(values)
        m = HermMatrix.zeros(len(values), level)
        for i, v in enumerate(values):
            m.entries[i, i, 0] = v
        return m

    @staticmethod
    def from_parts(diag, offdiag: dict[tuple[int, int], np.ndarray],
                   order: int = 3, level: int = 3) -> "HermMatrix":
        """Build from diagonal scalars and above-diagonal entry coordinates."""
        m = HermMatrix.zeros(order, level)
        for i, v in enumerate(diag):
            m.entries[i, i, 0] = v
        for (i, j), coords in offdiag.items():
            if not i < j:
                raise DomainError("off-diagonal parts must be indexed with i < j")
            coords = np.asarray(coords, dtype=np.complex128)
            m.entries[i, j] = coords
            m.entries[j, i] = coords * cd.diamond_signs(level)
        return m

    # -- coordinates ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return hermitian_dim(self.order, self.level)

    def coords(self) -> np.ndarray:
        return coords_of(self.entries)

    # -- arithmetic ----------------------------------------------------------
    def _like(self, entries: np.ndarray) -> "HermMatrix":
        return HermMatrix(entries, self.level, validate=False)

    def __add__(self, other: "HermMatrix") -> "HermMatrix":
        self._check_compatible(other)
        return self._like(self.entries + other.entries)

    def __sub__(self, other: "HermMatrix") -> "HermMatrix":
        self._check_compatible(other)
        return self._like(self.entries - other.entries)

    def __neg__(self) -> "HermMatrix":
        return self._like(-self.entries)

    def __mul__(self, scalar) -> "HermMatrix":
        return self._like(self.entries * scalar)

    __rmul__ = __mul__

    def _check_compatible(self, other: "HermMatrix"):
        if self.order != other.order or self.level != other.level:
            raise DomainError(
                f"incompatible matrices: order/level ({self.order},{self.level})"
                f" vs ({other.order},{other.level})"
            )

    def conj(self) -> "HermMatrix":
        return self._like(np.conj(self.entries))

    def star(self) -> "HermMatrix":
        # for hermitian elements the involution is entrywise conjugation
        return self.conj()

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.entries)))

    def isclose(self, other: "HermMatrix", tol: float = PREDICATE_TOL) -> bool:
        self._check_compatible(other)
        return bool(np.max(np.abs(self.entries - other.entries)) <= tol)

    def is_selfadjoint(self, tol: float = PREDICATE_TOL) -> bool:
        return bool(np.max(np.abs(self.entries.imag)) <= tol)

    def is_diagonal(self, tol: float = PREDICATE_TOL) -> bool:
        off = self.entries.copy()
        for i in range(self.order):
            off[i, i, :] = 0.0
        return bool(np.max(np.abs(off)) <= tol)

    def is_biquaternionic(self, tol: float = PREDICATE_TOL) -> bool:
        """True when every entry lies in the quaternionic half of the level."""
        if self.level <= 2:
            return True
        half = 1 << (self.level - 1)
        return bool(np.max(np.abs(self.entries[:, :, half:])) <= tol)

    def to_level3(self) -> "HermMatrix":
        """Embed level-2 entries into the octonions by zero padding."""
        if self.level == 3:
            return self
        if self.level != 2 or self.order != 3:
            raise DomainError("only order-3 biquaternionic matrices embed into C6")
        padded = np.zeros((3, 3, 8), dtype=np.complex128)
        padded[:, :, :4] = self.entries
        return HermMatrix(padded, 3, validate=False)

    def to_level2(self, tol: float = PREDICATE_TOL) -> "HermMatrix":
        """Restrict octonionic entries that are actually biquaternionic."""
        if self.level == 2:
            return self
        if not self.is_biquaternionic(tol):
            raise DomainError("entries are genuinely octonionic")
        return HermMatrix(self.entries[:, :, :4].copy(), 2, validate=False)

    def __repr__(self) -> str:
        return f"HermMatrix(order={self.order}, level={self.level})"


def hermitian_dim(order: int, level: int) -> int:
    return order + (1 << level) * order * (order - 1) // 2


@lru_cache(maxsize=None)
def _coord_maps(order: int, level: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Gather/scatter index maps between entry grids and coordinate vectors.

    Returns (gather, mirror, mirror_signs): flat entry positions of each
    coordinate, flat positions of the diamond-mirrored off-diagonal copies,
    and the signs those copies carry.
    """
    width = 1 << level
    signs = cd.diamond_signs(level)

    def flat(i, j, k):
        return (i * order + j) * width + k

    gather = [flat(i, i, 0) for i in range(order)]
    mirror: list[int] = []
    mirror_signs: list[float] = []
    for i in range(order):
        for j in range(i + 1, order):
            gather.extend(flat(i, j, k) for k in range(width))
            mirror.extend(flat(j, i, k) for k in range(width))
            mirror_signs.extend(signs)
    return (
        np.asarray(gather, dtype=np.int64),
        np.asarray(mirror, dtype=np.int64),
        np.asarray(mirror_signs, dtype=np.float64),
    )


def coords_of(entries: np.ndarray) -> np.ndarray:
    n, width = entries.shape[0], entries.shape[2]
    gather, _, _ = _coord_maps(n, width.bit_length() - 1)
    return entries.reshape(-1)[gather]


def from_coords(coords: np.ndarray, order: int, level: int) -> HermMatrix:
    coords = np.asarray(coords, dtype=np.complex128)
    dim = hermitian_dim(order, level)
    if coords.shape != (dim,):
        raise DomainError(f"expected {dim} coordinates, got {coords.shape}")
    gather, mirror, mirror_signs = _coord_maps(order, level)
    flat = np.zeros(order * order * (1 << level), dtype=np.complex128)
    flat[gather] = coords
    flat[mirror] = coords[order:] * mirror_signs
    return HermMatrix._trusted(flat.reshape(order, order, 1 << level), order, level)


@lru_cache(maxsize=None)
def basis_stack(order: int, level: int) -> np.ndarray:
    """All hermitian basis elements as one (dim, n, n, K) array."""
    dim = hermitian_dim(order, level)
    stack = np.zeros((dim, order, order, 1 << level), dtype=np.complex128)
    eye = np.eye(dim)
    for k in range(dim):
        stack[k] = from_coords(eye[k], order, level).entries
    stack.setflags(write=False)
    return stack


@lru_cache(maxsize=None)
def jordan_tensor(order: int, level: int) -> np.ndarray:
    """Structure tensor J of the Jordan product on hermitian coordinates.

    coords(x o y) = einsum('p,q,pqr->r', coords(x), coords(y), J); all the
    multiplication operators below are contractions of this tensor, which
    turns operator materialization into small dense matrix products.
    """
    basis = basis_stack(order, level)
    dim = basis.shape[0]
    tensor = np.zeros((dim, dim, dim), dtype=np.complex128)
    for p in range(dim):
        products = jordan_batch(basis[p], basis, level)
        for q in range(dim):
            tensor[p, q, :] = coords_of(products[q])
    tensor.setflags(write=False)
    return tensor


@lru_cache(maxsize=None)
def _jordan_tensor_flat(order: int, level: int) -> np.ndarray:
    dim = hermitian_dim(order, level)
    flat = np.ascontiguousarray(jordan_tensor(order, level).reshape(dim, dim * dim))
    flat.setflags(write=False)
    return flat


def jmul_coords(cx: np.ndarray, cy: np.ndarray, order: int, level: int) -> np.ndarray:
    """Jordan product on coordinate vectors."""
    dim = cx.shape[0]
    return cy @ (cx @ _jordan_tensor_flat(order, level)).reshape(dim, dim)


def mult_matrix(cx: np.ndarray, order: int, level: int) -> np.ndarray:
    """Matrix of the multiplication operator y -> x o y on coordinates."""
    dim = cx.shape[0]
    return (cx @ _jordan_tensor_flat(order, level)).reshape(dim, dim).T


def triple_coords(cx: np.ndarray, cy: np.ndarray, cz: np.ndarray,
                  order: int, level: int) -> np.ndarray:
    """{x,y,z} on coordinates; the involution is coordinatewise conjugation."""
    ys = np.conj(cy)
    t1 = jmul_coords(jmul_coords(cx, ys, order, level), cz, order, level)
    t2 = jmul_coords(jmul_coords(cz, ys, order, level), cx, order, level)
    t3 = jmul_coords(jmul_coords(cx, cz, order, level), ys, order, level)
    return t1 + t2 - t3


# ---------------------------------------------------------------------------
# products on hermitian elements
# ---------------------------------------------------------------------------

def box_mul(x: HermMatrix, y: HermMatrix) -> np.ndarray:
    x._check_compatible(y)
    return box(x.entries, y.entries, x.level)


def jordan_mul(x: HermMatrix, y: HermMatrix) -> HermMatrix:
    x._check_compatible(y)
    return from_coords(
        jmul_coords(x.coords(), y.coords(), x.order, x.level), x.order, x.level
    )


def triple_product(x: HermMatrix, y: HermMatrix, z: HermMatrix) -> HermMatrix:
    x._check_compatible(y)
    x._check_compatible(z)
    return from_coords(
        triple_coords(x.coords(), y.coords(), z.coords(), x.order, x.level),
        x.order, x.level,
    )


def square(x: HermMatrix) -> HermMatrix:
    return jordan_mul(x, x)


# ---------------------------------------------------------------------------
# materialized linear operators on hermitian coordinates
# ---------------------------------------------------------------------------

@dataclass
class LinearOperator:
    """Complex-linear (or flagged conjugate-linear) operator on coordinates."""

    matrix: np.ndarray
    order: int
    level: int
    conj_linear: bool = False

    def __call__(self, x: HermMatrix) -> HermMatrix:
        c = x.coords()
        if self.conj_linear:
            c = np.conj(c)
        return from_coords(self.matrix @ c, self.order, self.level)

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """Operator for self applied after other."""
        m_other = np.conj(other.matrix) if self.conj_linear else other.matrix
        return LinearOperator(
            self.matrix @ m_other, self.order, self.level,
            self.conj_linear ^ other.conj_linear,
        )

    @staticmethod
    def identity(order: int, level: int) -> "LinearOperator":
        return LinearOperator(
            np.eye(hermitian_dim(order, level), dtype=np.complex128), order, level
        )

    def inverse(self) -> "LinearOperator":
        if self.conj_linear:
            raise DomainError("inverse implemented for linear operators only")
        return LinearOperator(np.linalg.inv(self.matrix), self.order, self.level)

    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))

    def rank_as_idempotent(self) -> int:
        """Complex dimension of the range of an idempotent operator."""
        return int(round(float(np.trace(self.matrix).real)))


def _materialize(out_batch: np.ndarray, order: int, level: int,
                 conj_linear: bool = False) -> LinearOperator:
    """Stack images of the coordinate basis into an operator matrix."""
    dim = hermitian_dim(order, level)
    cols = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(dim):
        cols[:, k] = coords_of(out_batch[k])
    return LinearOperator(cols, order, level, conj_linear)


def op_L(a: HermMatrix, b: HermMatrix) -> LinearOperator:
    """L(a,b): x -> {a, b, x}.

    Expanding the triple product gives L(a,b) = M(a o b*) + [M(a), M(b*)]
    in terms of multiplication operators, three small matrix products.
    """
    a._check_compatible(b)
    ca, cbs = a.coords(), np.conj(b.coords())
    m_ab = mult_matrix(jmul_coords(ca, cbs, a.order, a.level), a.order, a.level)
    m_a = mult_matrix(ca, a.order, a.level)
    m_bs = mult_matrix(cbs, a.order, a.level)
    return LinearOperator(m_ab + m_a @ m_bs - m_bs @ m_a, a.order, a.level)


def op_mult(a: HermMatrix) -> LinearOperator:
    """Multiplication operator x -> a o x."""
    return LinearOperator(mult_matrix(a.coords(), a.order, a.level), a.order, a.level)


def _u_matrix(a: HermMatrix) -> np.ndarray:
    ca = a.coords()
    m_a = mult_matrix(ca, a.order, a.level)
    m_a2 = mult_matrix(jmul_coords(ca, ca, a.order, a.level), a.order, a.level)
    return 2.0 * (m_a @ m_a) - m_a2


def op_Q(a: HermMatrix) -> LinearOperator:
    """Q(a): x -> {a, x, a} = U_a(x*), conjugate-linear."""
    return LinearOperator(_u_matrix(a), a.order, a.level, conj_linear=True)


def op_U(a: HermMatrix) -> LinearOperator:
    """U_a: x -> 2 (a o x) o a - a^2 o x (linear)."""
    return LinearOperator(_u_matrix(a), a.order, a.level)


# ---------------------------------------------------------------------------
# tripotents, projections, Peirce decomposition
# ---------------------------------------------------------------------------

def is_tripotent(x: HermMatrix, tol: float = PREDICATE_TOL) -> bool:
    cube = triple_product(x, x, x)
    return bool(np.max(np.abs(cube.entries - x.entries)) <= tol * max(1.0, x.sup_norm()))


def is_projection(x: HermMatrix, tol: float = PREDICATE_TOL) -> bool:
    if not x.is_selfadjoint(tol):
        return False
    sq = jordan_mul(x, x)
    return bool(np.max(np.abs(sq.entries - x.entries)) <= tol * max(1.0, x.sup_norm()))


def is_orthogonal(x: HermMatrix, y: HermMatrix, tol: float = PREDICATE_TOL) -> bool:
    """Tripotent orthogonality: {x, x, y} = 0."""
    t = triple_product(x, x, y)
    scale = max(1.0, x.sup_norm() ** 2 * y.sup_norm())
    return bool(np.max(np.abs(t.entries)) <= tol * scale)


def is_unitary(x: HermMatrix, tol: float = PREDICATE_TOL) -> bool:
    """Unitary tripotent: L(x, x) is the identity operator."""
    op = op_L(x, x)
    gap = np.max(np.abs(op.matrix - np.eye(op.matrix.shape[0])))
    return bool(gap <= tol * max(1.0, x.sup_norm() ** 2))


def peirce_projections(e: HermMatrix,
                       tol: float = PREDICATE_TOL) -> tuple[LinearOperator, LinearOperator, LinearOperator]:
    """Peirce projections (P2, P1, P0) of a tripotent."""
    if not is_tripotent(e, tol):
        raise DomainError("Peirce decomposition needs a tripotent")
    q = op_Q(e)
    p2_matrix = q.matrix @ np.conj(q.matrix)
    l_matrix = op_L(e, e).matrix
    eye = np.eye(p2_matrix.shape[0])
    p2 = LinearOperator(p2_matrix, e.order, e.level)
    p1 = LinearOperator(2.0 * (l_matrix - p2_matrix), e.order, e.level)
    p0 = LinearOperator(eye - 2.0 * l_matrix + p2_matrix, e.order, e.level)
    return p2, p1, p0


def peirce_dims(e: HermMatrix) -> tuple[int, int, int]:
    p2, p1, p0 = peirce_projections(e)
    return (
        p2.rank_as_idempotent(),
        p1.rank_as_idempotent(),
        p0.rank_as_idempotent(),
    )


def tripotent_rank(e: HermMatrix, tol: float = PREDICATE_TOL) -> int:
    """Rank 1, 2 or 3 from the Peirce-2 dimension."""
    if not is_tripotent(e, tol):
        raise DomainError("rank is defined for tripotents only")
    p2, _, _ = peirce_projections(e, tol)
    dim = p2.rank_as_idempotent()
    table = RANK_BY_PEIRCE_DIM.get(e.level)
    if table is None or dim not in table:
        raise ConsistencyError(
            f"Peirce-2 dimension {dim} is impossible at level {e.level}", float(dim)
        )
    return table[dim]

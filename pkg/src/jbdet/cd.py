"""Cayley-Dickson doubling tower over the complex field.

Level n lives on 2**n complex coordinates.  Level 0 is the complex field,
level 1 the commutative doubled algebra, level 2 the biquaternions and
level 3 the complex octonions.  Products, the linear involution ``diamond``,
the conjugate-linear involution ``star`` and coordinatewise conjugation are
all defined by structural recursion on (first half, second half) splits:

    conj(x1, x2)    = (conj x1, conj x2)
    (x1, x2)^d      = (x1^d, -x2)
    (x1, x2)^*      = (x1^*, -conj x2)
    (x1, x2)(y1, y2) = (x1 y1 - y2 x2^d,  x1^d y2 + y1 x2)

Basis products are always signed basis vectors, so each level owns a signed
multiplication table.  The table is built once per level by the recursion
above and products are then evaluated through it; `mul_recursive` keeps the
literal recursion around as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, LevelMismatchError

#: default absolute per-coordinate tolerance for equality tests
DEFAULT_TOL = 1e-9


@lru_cache(maxsize=None)
def mul_table(level: int) -> tuple[np.ndarray, np.ndarray]:
    """Signed basis multiplication table ``e_i e_j = sgn[i,j] * e_idx[i,j]``."""
    if level < 0:
        raise DomainError(f"level must be non-negative, got {level}")
    if level == 0:
        return np.zeros((1, 1), dtype=np.int64), np.ones((1, 1))
    idx0, sgn0 = mul_table(level - 1)
    half = 1 << (level - 1)
    d = diamond_signs(level - 1)
    idx = np.zeros((2 * half, 2 * half), dtype=np.int64)
    sgn = np.zeros((2 * half, 2 * half))
    # x = (x1, x2), y = (y1, y2); product = (x1 y1 - y2 x2^d, x1^d y2 + y1 x2)
    idx[:half, :half] = idx0
    sgn[:half, :half] = sgn0
    for i in range(half):
        for j in range(half):
            # e_i * e_{j+half}: contribution x1^d y2
            idx[i, j + half] = idx0[i, j] + half
            sgn[i, j + half] = d[i] * sgn0[i, j]
            # e_{i+half} * e_j: contribution y1 x2
            idx[i + half, j] = idx0[j, i] + half
            sgn[i + half, j] = sgn0[j, i]
            # e_{i+half} * e_{j+half}: contribution -y2 x2^d
            idx[i + half, j + half] = idx0[j, i]
            sgn[i + half, j + half] = -d[i] * sgn0[j, i]
    idx.setflags(write=False)
    sgn.setflags(write=False)
    return idx, sgn


@lru_cache(maxsize=None)
def mul_tensor(level: int) -> np.ndarray:
    """Dense structure tensor G with (x y)_k = sum_ij G[i,j,k] x_i y_j."""
    idx, sgn = mul_table(level)
    dim = 1 << level
    tensor = np.zeros((dim, dim, dim))
    ii, jj = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    tensor[ii, jj, idx] = sgn
    tensor.setflags(write=False)
    return tensor


@lru_cache(maxsize=None)
def diamond_signs(level: int) -> np.ndarray:
    """Signs of the linear involution on basis vectors: +1 at e_0, -1 elsewhere."""
    signs = -np.ones(1 << level)
    signs[0] = 1.0
    signs.setflags(write=False)
    return signs


def mul_arrays(x: np.ndarray, y: np.ndarray, level: int) -> np.ndarray:
    """Product of coordinate vectors (supports leading batch axes)."""
    return np.einsum("...i,...j,ijk->...k", x, y, mul_tensor(level))


def mul_recursive(x: np.ndarray, y: np.ndarray, level: int) -> np.ndarray:
    """Literal structural recursion; oracle for the table-driven product."""
    if level == 0:
        return x * y
    half = 1 << (level - 1)
    d = diamond_signs(level - 1)
    x1, x2 = x[:half], x[half:]
    y1, y2 = y[:half], y[half:]
    first = mul_recursive(x1, y1, level - 1) - mul_recursive(y2, d * x2, level - 1)
    second = mul_recursive(d * x1, y2, level - 1) + mul_recursive(y1, x2, level - 1)
    return np.concatenate([first, second])


def diamond_arrays(x: np.ndarray, level: int) -> np.ndarray:
    return x * diamond_signs(level)


def star_arrays(x: np.ndarray, level: int) -> np.ndarray:
    return np.conj(x) * diamond_signs(level)


def inner_arrays(x: np.ndarray, y: np.ndarray) -> complex:
    """Hermitian inner product, linear in x and conjugate-linear in y."""
    return complex(np.sum(x * np.conj(y)))


@dataclass(frozen=True)
class CDElement:
    """One element of the level-n algebra, held as 2**n complex coordinates."""

    level: int
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=np.complex128)
        if coords.shape != (1 << self.level,):
            raise DomainError(
                f"level {self.level} element needs {1 << self.level} coordinates, "
                f"got shape {coords.shape}"
            )
        object.__setattr__(self, "coords", coords)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def basis(level: int, j: int) -> "CDElement":
        if not 0 <= j < (1 << level):
            raise DomainError(f"basis index {j} out of range for level {level}")
        coords = np.zeros(1 << level, dtype=np.complex128)
        coords[j] = 1.0
        return CDElement(level, coords)

    @staticmethod
    def one(level: int) -> "CDElement":
        return CDElement.basis(level, 0)

    @staticmethod
    def zero(level: int) -> "CDElement":
        return CDElement(level, np.zeros(1 << level, dtype=np.complex128))

    @staticmethod
    def scalar(level: int, value: complex) -> "CDElement":
        coords = np.zeros(1 << level, dtype=np.complex128)
        coords[0] = value
        return CDElement(level, coords)

    # -- arithmetic --------------------------------------------------------
    def _check_level(self, other: "CDElement"):
        if self.level != other.level:
            raise LevelMismatchError(
                f"levels differ: {self.level} vs {other.level}"
            )

    def __add__(self, other: "CDElement") -> "CDElement":
        self._check_level(other)
        return CDElement(self.level, self.coords + other.coords)

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._check_level(other)
        return CDElement(self.level, self.coords - other.coords)

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, -self.coords)

    def __mul__(self, other):
        if isinstance(other, CDElement):
            return multiply(self, other)
        return CDElement(self.level, self.coords * other)

    def __rmul__(self, scalar) -> "CDElement":
        return CDElement(self.level, self.coords * scalar)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CDElement)
            and self.level == other.level
            and bool(np.all(np.abs(self.coords - other.coords) <= DEFAULT_TOL))
        )

    def isclose(self, other: "CDElement", tol: float = DEFAULT_TOL) -> bool:
        self._check_level(other)
        return bool(np.all(np.abs(self.coords - other.coords) <= tol))

    def is_real(self, tol: float = DEFAULT_TOL) -> bool:
        """Membership in the real form: fixed by coordinatewise conjugation."""
        return bool(np.all(np.abs(self.coords.imag) <= tol))

    def __repr__(self) -> str:
        return f"CDElement(level={self.level}, coords={self.coords!r})"


def multiply(x: CDElement, y: CDElement) -> CDElement:
    x._check_level(y)
    return CDElement(x.level, mul_arrays(x.coords, y.coords, x.level))


def conj(x: CDElement) -> CDElement:
    return CDElement(x.level, np.conj(x.coords))


def diamond(x: CDElement) -> CDElement:
    return CDElement(x.level, diamond_arrays(x.coords, x.level))


def star(x: CDElement) -> CDElement:
    return CDElement(x.level, star_arrays(x.coords, x.level))


def inner(x: CDElement, y: CDElement) -> complex:
    x._check_level(y)
    return inner_arrays(x.coords, y.coords)


def norm2(x: CDElement) -> float:
    return float(np.linalg.norm(x.coords))


def spin_norm(x: CDElement) -> float:
    """Spin-factor norm: ||x||^2 = s + sqrt(s^2 - |<x, conj x>|^2), s = ||x||_2^2.

    The radicand is evaluated as the Gram determinant 4 P Q - B^2 of the real
    and imaginary coordinate parts (P, Q their squared norms, B twice their
    dot product), which is algebraically equal to s^2 - |<x, conj x>|^2 but
    vanishes exactly on the real form instead of amplifying rounding noise.
    """
    re, im = x.coords.real, x.coords.imag
    p, q = float(re @ re), float(im @ im)
    b = 2.0 * float(re @ im)
    return float(np.sqrt(p + q + np.sqrt(max(4.0 * p * q - b * b, 0.0))))


def triple(x: CDElement, y: CDElement, z: CDElement) -> CDElement:
    """Spin-factor triple product {x,y,z} = <x,y>z + <z,y>x - <x,conj z> conj y."""
    x._check_level(y)
    x._check_level(z)
    return CDElement(
        x.level,
        inner(x, y) * z.coords
        + inner(z, y) * x.coords
        - inner_arrays(x.coords, np.conj(z.coords)) * np.conj(y.coords),
    )


def jordan(x: CDElement, y: CDElement) -> CDElement:
    """Jordan product x o y = (xy + yx) / 2."""
    x._check_level(y)
    prod = mul_arrays(x.coords, y.coords, x.level)
    prod_rev = mul_arrays(y.coords, x.coords, x.level)
    return CDElement(x.level, 0.5 * (prod + prod_rev))

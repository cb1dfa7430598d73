"""Biquaternions and their identification with 2x2 complex matrices.

The hat map sends the level-2 element with coordinates (x1, x2, x3, x4) to

    [[x1 + i x2,  -x3 + i x4],
     [x3 + i x4,   x1 - i x2]]

and is a *-isomorphism: multiplicative for the doubling product, with the
linear involution going to the adjugate and the conjugate-linear involution
to the conjugate transpose.  (Of the two transpose-related candidates for
this map only this one is multiplicative rather than anti-multiplicative for
the doubling product used here; both satisfy the involution identities.)
Matrices of biquaternions map blockwise to 2n x 2n complex matrices.
"""

from __future__ import annotations

import numpy as np

from .cd import CDElement
from .errors import DomainError


def hat_coords(coords: np.ndarray) -> np.ndarray:
    """Hat of a 4-coordinate vector (supports leading batch axes)."""
    x1, x2, x3, x4 = np.moveaxis(np.asarray(coords, dtype=np.complex128), -1, 0)
    row0 = np.stack([x1 + 1j * x2, -x3 + 1j * x4], axis=-1)
    row1 = np.stack([x3 + 1j * x4, x1 - 1j * x2], axis=-1)
    return np.stack([row0, row1], axis=-2)


def unhat_coords(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    a, b = m[..., 0, 0], m[..., 0, 1]
    c, d = m[..., 1, 0], m[..., 1, 1]
    return np.stack(
        [(a + d) / 2, (a - d) / (2j), (c - b) / 2, (b + c) / (2j)], axis=-1
    )


def hat(x: CDElement) -> np.ndarray:
    if x.level != 2:
        raise DomainError(f"hat needs a level-2 element, got level {x.level}")
    return hat_coords(x.coords)


def unhat(m: np.ndarray) -> CDElement:
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (2, 2):
        raise DomainError(f"unhat needs a 2x2 matrix, got shape {m.shape}")
    return CDElement(2, unhat_coords(m))


def hat_matrix(entries: np.ndarray) -> np.ndarray:
    """Blockwise hat of an (n, n, 4) biquaternion matrix to 2n x 2n complex."""
    entries = np.asarray(entries, dtype=np.complex128)
    if entries.ndim != 3 or entries.shape[0] != entries.shape[1] or entries.shape[2] != 4:
        raise DomainError(f"expected (n, n, 4) biquaternion entries, got {entries.shape}")
    n = entries.shape[0]
    blocks = hat_coords(entries)  # (n, n, 2, 2)
    return blocks.transpose(0, 2, 1, 3).reshape(2 * n, 2 * n)


def unhat_matrix(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise DomainError(f"expected a 2n x 2n matrix, got shape {m.shape}")
    n = m.shape[0] // 2
    blocks = m.reshape(n, 2, n, 2).transpose(0, 2, 1, 3)
    return unhat_coords(blocks)

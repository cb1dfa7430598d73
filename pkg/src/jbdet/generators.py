"""Seeded random instances: frames, unitaries, normals, scrambling maps.

Frames are built from the explicit minimal-projection sampler: a dense
minimal projection plus a split of its rank-2 complement.  Unitaries and
normal elements are unimodular/complex combinations over such frames,
optionally scrambled through random automorphism words.  Targeted builders
steer the simultaneous-reduction pipeline into each labeled proof branch.
"""

from __future__ import annotations

import numpy as np

from .c6auto import C6Auto, compose, exchange_auto, lift_auto
from .errors import ConsistencyError
from .jordan import HermMatrix, from_coords, hermitian_dim, is_projection
from .minproj import FORM_FULL, MinProjParams, build_min_projection, random_min_projection
from .octonion import pair_multiplier, permutation_auto
from .spectral import split_projection
from . import cd


def random_herm(rng: np.random.Generator, order: int = 3, level: int = 3,
                scale: float = 1.0) -> HermMatrix:
    dim = hermitian_dim(order, level)
    return from_coords(scale * (rng.normal(size=dim) + 1j * rng.normal(size=dim)),
                       order, level)


def random_selfadjoint(rng: np.random.Generator, order: int = 3,
                       level: int = 3, scale: float = 1.0) -> HermMatrix:
    dim = hermitian_dim(order, level)
    return from_coords(scale * rng.normal(size=dim), order, level)


def unit_quaternion(rng: np.random.Generator) -> np.ndarray:
    h = rng.normal(size=4)
    return h / np.linalg.norm(h)


def random_frame(rng: np.random.Generator) -> list[HermMatrix]:
    """Three mutually orthogonal minimal projections summing to the unit."""
    q1 = random_min_projection(rng)
    rest = split_projection(HermMatrix.identity(3, 3) - q1, rng)
    frame = [q1, *rest]
    order = rng.permutation(3)
    return [frame[i] for i in order]


def quaternionic_min_projection(rng: np.random.Generator,
                                margin: float = 0.05) -> HermMatrix:
    """Full-form minimal projection whose rows live in the quaternions."""
    alpha = margin + (1.0 - 2.0 * margin) * rng.random()
    mass = alpha - alpha * alpha
    split = rng.random()
    a = np.zeros(8)
    b = np.zeros(8)
    a[:4] = rng.normal(size=4)
    b[:4] = rng.normal(size=4)
    a *= np.sqrt(mass * split) / np.linalg.norm(a)
    b *= np.sqrt(mass * (1 - split)) / np.linalg.norm(b)
    return build_min_projection(MinProjParams(FORM_FULL, alpha, a, b))


def random_quat_frame(rng: np.random.Generator) -> list[HermMatrix]:
    """A frame staying inside the biquaternionic subalgebra."""
    for _ in range(40):
        q1 = quaternionic_min_projection(rng)
        pieces = split_projection(HermMatrix.identity(3, 3) - q1,
                                  rng_biquat_wrapper(rng))
        frame = [q1, *pieces]
        if all(p.is_biquaternionic(1e-9) for p in frame):
            return frame
    raise ConsistencyError("failed to build a biquaternionic frame", 1.0)


class rng_biquat_wrapper:
    """Random generator whose normal() keeps octonion slots quaternionic.

    split_projection compresses a random self-adjoint element; zeroing the
    upper octonion coordinates keeps every intermediate biquaternionic.
    """

    def __init__(self, rng: np.random.Generator):
        self._rng = rng

    def normal(self, size: int) -> np.ndarray:
        out = self._rng.normal(size=size)
        if size == hermitian_dim(3, 3):
            for base in (3, 11, 19):
                out[base + 4: base + 8] = 0.0
        return out

    def __getattr__(self, name):
        return getattr(self._rng, name)


def distinct_unimodular(rng: np.random.Generator, count: int = 3,
                        min_gap: float = 0.4) -> np.ndarray:
    """Unimodular values pairwise separated by at least min_gap in angle."""
    while True:
        angles = rng.uniform(0.0, 2.0 * np.pi, size=count)
        diffs = [
            abs(np.exp(1j * angles[i]) - np.exp(1j * angles[j]))
            for i in range(count)
            for j in range(i + 1, count)
        ]
        if not diffs or min(diffs) > min_gap:
            return np.exp(1j * angles)


def distinct_reals(rng: np.random.Generator, count: int = 3,
                   min_gap: float = 0.3, scale: float = 2.0) -> np.ndarray:
    while True:
        values = rng.normal(scale=scale, size=count)
        diffs = [abs(values[i] - values[j]) for i in range(count)
                 for j in range(i + 1, count)]
        if not diffs or min(diffs) > min_gap:
            return values


def combine_frame(frame: list[HermMatrix], values) -> HermMatrix:
    total = HermMatrix.zeros(3, 3)
    for v, q in zip(values, frame):
        total = total + q * v
    return total


def random_unitary(rng: np.random.Generator, scramble: int = 2) -> HermMatrix:
    """A unitary with (generically) octonionic entries."""
    u = combine_frame(random_frame(rng), distinct_unimodular(rng))
    if scramble:
        u = random_jordan_auto(rng, scramble)(u)
    return u


def random_biquat_unitary(rng: np.random.Generator) -> HermMatrix:
    """A unitary inside the biquaternionic subalgebra (level-3 entries)."""
    return combine_frame(random_quat_frame(rng), distinct_unimodular(rng))


def random_normal(rng: np.random.Generator, zero_probability: float = 0.0,
                  selfadjoint: bool = False) -> HermMatrix:
    frame = random_frame(rng)
    if selfadjoint:
        values = distinct_reals(rng).astype(np.complex128)
    else:
        values = rng.normal(size=3) + 1j * rng.normal(size=3)
        while min(abs(values[i] - values[j]) for i in range(3)
                  for j in range(i + 1, 3)) < 0.3:
            values = rng.normal(size=3) + 1j * rng.normal(size=3)
    if zero_probability and rng.random() < zero_probability:
        values[rng.integers(0, 3)] = 0.0
    return combine_frame(frame, values)


def random_octonion_map(rng: np.random.Generator, unital: bool = False):
    """A random word in multiplication pairs and basis permutations."""
    h1 = np.eye(4)[0] if unital else unit_quaternion(rng)
    word = pair_multiplier(h1, unit_quaternion(rng))
    for _ in range(int(rng.integers(1, 3))):
        word = permutation_auto(["P1", "P2"][rng.integers(0, 2)]).compose(word)
        word = pair_multiplier(
            np.eye(4)[0] if unital else unit_quaternion(rng),
            unit_quaternion(rng),
        ).compose(word)
    return word


def random_jordan_auto(rng: np.random.Generator, length: int = 3) -> C6Auto:
    """A composition of random lifts and exchanges (always unital)."""
    total = C6Auto.identity()
    variants = ["base", "T1", "T2", "T3"]
    pairs = [(1, 2), (1, 3), (2, 3)]
    for _ in range(length):
        if rng.random() < 0.3:
            total = compose(exchange_auto(*pairs[rng.integers(0, 3)]), total)
        else:
            t = random_octonion_map(rng)
            total = compose(lift_auto(t, variants[rng.integers(0, 4)]), total)
    return total


def random_lift_auto(rng: np.random.Generator, length: int = 2) -> C6Auto:
    """Lifted maps only; preserves diagonals and diagonal entries."""
    total = C6Auto.identity()
    for _ in range(length):
        total = compose(lift_auto(random_octonion_map(rng), "base"), total)
    return total


# ---------------------------------------------------------------------------
# frames steering the reduction pipeline into specific proof branches
# ---------------------------------------------------------------------------

def _completed_frame(q1: HermMatrix, q2: HermMatrix) -> list[HermMatrix]:
    q3 = HermMatrix.identity(3, 3) - q1 - q2
    for q in (q1, q2, q3):
        if not is_projection(q, 1e-8):
            raise ConsistencyError("steered frame member is not a projection", 1.0)
    return [q1, q2, q3]


def frame_case1(rng: np.random.Generator) -> list[HermMatrix]:
    """Pivot projection with vanishing third row plus the corner E33."""
    alpha = 0.55 + 0.3 * rng.random()
    a = np.zeros(8)
    a[:8] = rng.normal(size=8)
    a *= np.sqrt(alpha - alpha**2) / np.linalg.norm(a)
    q1 = build_min_projection(MinProjParams(FORM_FULL, alpha, a, np.zeros(8)))
    q2 = HermMatrix.diag([0, 0, 1])
    return _completed_frame(q1, q2)


def frame_case2(rng: np.random.Generator) -> list[HermMatrix]:
    """Dense pivot projection plus a lower-block projection, orthogonal."""
    alpha = 0.55 + 0.25 * rng.random()
    xi = 0.1 + 0.5 * rng.random()
    x = rng.normal(size=8)
    x *= np.sqrt(xi - xi**2) / np.linalg.norm(x)
    a = rng.normal(size=8)
    a *= np.sqrt(alpha * (1 - alpha) * (1 - xi)) / np.linalg.norm(a)
    b = -cd.mul_arrays(a, x, 3).real * (xi / float(x @ x))
    q1 = build_min_projection(MinProjParams(FORM_FULL, alpha, a, b))
    q2 = build_min_projection(MinProjParams("lower2x2", xi, x))
    return _completed_frame(q1, q2)


def frame_subcase31(rng: np.random.Generator) -> list[HermMatrix]:
    """Two dense pivots filling the first slot: third projection avoids it."""
    xi = 0.2 + 0.5 * rng.random()
    w = rng.normal(size=8)
    w *= np.sqrt(xi - xi**2) / np.linalg.norm(w)
    q3 = build_min_projection(MinProjParams("lower2x2", xi, w))
    pieces = split_projection(HermMatrix.identity(3, 3) - q3, rng)
    pieces.sort(key=lambda q: -q.entries[0, 0, 0].real)
    q1, q2 = pieces
    return _completed_frame(q1, q2)


def frame_subcase321(rng: np.random.Generator) -> list[HermMatrix]:
    """Aligned third rows: q1 has a = 0 and q2's last row is parallel to b."""
    for _ in range(60):
        alpha = 0.45 + 0.2 * rng.random()
        xi_max = min(alpha, (1 - alpha) / 2) - 0.02
        if xi_max <= 0.05:
            continue
        xi = 0.05 + (xi_max - 0.05) * rng.random()
        b = rng.normal(size=8)
        b *= np.sqrt(alpha - alpha**2) / np.linalg.norm(b)
        y = -b * (xi / (1.0 - alpha))
        norm_x2 = xi * (1.0 - alpha - xi) / (1.0 - alpha)
        if norm_x2 <= 1e-4:
            continue
        x = rng.normal(size=8)
        x *= np.sqrt(norm_x2) / np.linalg.norm(x)
        q1 = build_min_projection(MinProjParams(FORM_FULL, alpha, np.zeros(8), b))
        q2 = build_min_projection(MinProjParams(FORM_FULL, xi, x, y))
        try:
            return _completed_frame(q1, q2)
        except ConsistencyError:
            continue
    raise ConsistencyError("failed to steer the aligned-rows branch", 1.0)

"""Constructive simultaneous reduction to biquaternionic entries.

Given a unitary u and a *diagonal* unitary e, a Jordan *-automorphism is
assembled that keeps e diagonal and maps u into the biquaternionic
subalgebra.  The construction follows the explicit case analysis of the
underlying proof: split u into three minimal projections, normalize the one
carrying the (1,1) pivot with the octonion canonicalization maps, then
branch on the shape of the second projection (corner / lower block / full),
with the full case splitting further on the pivot budget and on the
alignment of the two third-row octonions.  Every branch decision and every
residual is recorded in a certificate; a residual above tolerance raises
instead of being ignored, since it would falsify the construction.

Diagonality of e is a precondition rather than something produced here:
producing a diagonalizing automorphism for an arbitrary unitary requires
frame transitivity, which has no known explicit construction.  The same gap
is why the normal-pair variant takes a caller-supplied diagonalizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import numkit
from .c6auto import C6Auto, compose, lift_auto, KIND_JORDAN
from .cd import CDElement
from .errors import ConsistencyError, DomainError
from .jordan import HermMatrix, is_unitary
from .octonion import canonicalize_a, canonicalize_b, canonicalize_c
from .spectral import is_normal, spectral_decompose, split_projection

_SPAN_TOL = 1e-9
_BRANCH_TOL = 1e-8
BIQUAT_TOL = 1e-8


@dataclass
class ReductionCertificate:
    case_path: list[str] = field(default_factory=list)
    residuals: dict[str, float] = field(default_factory=dict)

    def note(self, label: str):
        self.case_path.append(label)

    def record(self, label: str, value: float):
        self.residuals[label] = float(value)


@dataclass
class ReductionResult:
    auto: C6Auto
    images: list[HermMatrix]
    certificate: ReductionCertificate


def _outside_span(coords: np.ndarray, axes: tuple[int, ...]) -> float:
    mask = np.ones(8, dtype=bool)
    mask[list(axes)] = False
    return float(np.max(np.abs(coords[mask])))


def _real_octonion(coords: np.ndarray, cert: ReductionCertificate, label: str) -> np.ndarray:
    gap = float(np.max(np.abs(coords.imag)))
    cert.record(f"{label}-imag", gap)
    if gap > 1e-7:
        raise ConsistencyError(f"{label} should have real coordinates", gap)
    return coords.real.copy()


class _Pipeline:
    """Carries the composed automorphism and the transported elements."""

    def __init__(self, pieces: list[HermMatrix], carried: list[HermMatrix],
                 rng: np.random.Generator):
        self.auto = C6Auto.identity()
        self.cert = ReductionCertificate()
        self.carried = list(carried)
        # the pivot projection is the piece with the largest (1,1) entry;
        # the remaining order is randomized, which lets every branch of the
        # case analysis occur for suitable inputs
        order = sorted(range(3), key=lambda i: -pieces[i].entries[0, 0, 0].real)
        rest = [order[1], order[2]]
        rng.shuffle(rest)
        self.pieces = [pieces[order[0]], pieces[rest[0]], pieces[rest[1]]]
        pivot = self.pieces[0].entries[0, 0, 0].real
        if pivot < 1e-6:
            raise ConsistencyError("no projection carries the (1,1) pivot", pivot)

    def apply(self, octonion_map, label: str):
        step = lift_auto(octonion_map, "base")
        self.auto = compose(step, self.auto)
        self.pieces = [step(q) for q in self.pieces]
        self.carried = [step(x) for x in self.carried]
        self.cert.note(label)

    def entry(self, piece: int, i: int, j: int) -> np.ndarray:
        return _real_octonion(
            self.pieces[piece].entries[i, j], self.cert, f"q{piece + 1}({i},{j})"
        )

    # -- stage 1: normalize the pivot projection ---------------------------
    def normalize_pivot(self):
        a = self.entry(0, 0, 1)
        if np.linalg.norm(a) > _SPAN_TOL and _outside_span(a, (0,)) > _SPAN_TOL:
            self.apply(canonicalize_a(CDElement(3, a)), "canonical-a")
        else:
            self.cert.note("canonical-a-skipped")
        b = self.entry(0, 0, 2)
        if np.linalg.norm(b) > _SPAN_TOL and _outside_span(b, (0, 1)) > _SPAN_TOL:
            self.apply(canonicalize_b(CDElement(3, b)), "canonical-b")
        else:
            self.cert.note("canonical-b-skipped")
        gap = max(
            _outside_span(self.entry(0, 0, 1), (0, 1)),
            _outside_span(self.entry(0, 0, 2), (0, 1)),
            _outside_span(self.entry(0, 1, 2), (0, 1)),
        )
        self.cert.record("pivot-span", gap)
        if gap > 1e-7:
            raise ConsistencyError("pivot projection did not reach span{e0,e1}", gap)

    def _canonical_c_if_needed(self, coords: np.ndarray, label: str):
        if np.linalg.norm(coords) > _SPAN_TOL and _outside_span(coords, (0, 1, 2)) > _SPAN_TOL:
            self.apply(canonicalize_c(CDElement(3, coords)), label)
        else:
            self.cert.note(f"{label}-skipped")

    # -- stage 2: branch on the second projection ---------------------------
    def reduce_second(self):
        q2 = self.pieces[1]
        xi_top = q2.entries[0, 0, 0].real
        if abs(xi_top) > 1e-8:
            self._case_full(xi_top)
        elif abs(q2.entries[1, 1, 0].real) > 1e-8:
            self.cert.note("case2")
            self._canonical_c_if_needed(self.entry(1, 1, 2), "canonical-c(x)")
        else:
            self.cert.note("case1")
            gap = float(np.max(np.abs(q2.entries - HermMatrix.diag([0, 0, 1]).entries)))
            self.cert.record("corner-gap", gap)

    def _case_full(self, xi: float):
        self.cert.note("case3")
        alpha = self.pieces[0].entries[0, 0, 0].real
        budget = abs(alpha + xi - 1.0)
        self.cert.record("pivot-budget", budget)
        if budget <= _BRANCH_TOL:
            self.cert.note("subcase3.1")
            return
        self.cert.note("subcase3.2")
        b = self.entry(0, 0, 2)
        y = self.entry(1, 0, 2)
        alignment = float(np.linalg.norm(b + ((1.0 - alpha) / xi) * y))
        self.cert.record("third-row-alignment", alignment)
        if alignment <= _BRANCH_TOL:
            self.cert.note("subcase3.2.1")
            self._canonical_c_if_needed(self.entry(1, 0, 1), "canonical-c(x)")
        else:
            self.cert.note("subcase3.2.2")
            self._canonical_c_if_needed(self.entry(1, 0, 2), "canonical-c(y)")

    def finish(self) -> ReductionCertificate:
        gap = 0.0
        for k, q in enumerate(self.pieces):
            gap = max(gap, float(np.max(np.abs(q.entries[:, :, 4:]))))
        self.cert.record("frame-biquat", gap)
        if gap > BIQUAT_TOL:
            raise ConsistencyError(
                f"projections kept octonionic parts after {self.cert.case_path}", gap
            )
        if self.auto.kind != KIND_JORDAN:
            raise ConsistencyError("pipeline composed a non-unital map", 1.0)
        return self.cert


def _run_pipeline(x: HermMatrix, carried: list[HermMatrix],
                  rng: np.random.Generator) -> tuple[C6Auto, list[HermMatrix], ReductionCertificate]:
    resolution = spectral_decompose(x)
    pieces: list[HermMatrix] = []
    for comp, mult in zip(resolution.components, resolution.multiplicities):
        pieces.extend(split_projection(comp, rng) if mult > 1 else [comp])
    if len(pieces) != 3:
        raise ConsistencyError(f"expected 3 minimal pieces, got {len(pieces)}", 0.0)
    pipeline = _Pipeline(pieces, [x, *carried], rng)
    pipeline.normalize_pivot()
    pipeline.reduce_second()
    cert = pipeline.finish()
    image = pipeline.carried[0]
    gap = float(np.max(np.abs(image.entries[:, :, 4:])))
    cert.record("image-biquat", gap)
    if gap > BIQUAT_TOL:
        raise ConsistencyError(
            f"image kept octonionic parts after {cert.case_path}", gap
        )
    return pipeline.auto, pipeline.carried, cert


def simultaneous_biq(u: HermMatrix, e: HermMatrix,
                     rng: np.random.Generator | None = None) -> ReductionResult:
    """Jordan *-automorphism making a unitary biquaternionic, fixing diagonals.

    Preconditions: u unitary, e a *diagonal* unitary.  The returned images
    are [T(u), T(e)]; T(e) equals e because every map used is a lift acting
    only on off-diagonal slots.
    """
    rng = rng if rng is not None else numkit.make_rng(0)
    u = u.to_level3()
    e = e.to_level3()
    if not e.is_diagonal(1e-9):
        raise DomainError(
            "the second unitary must be diagonal; diagonalizing a general "
            "unitary needs frame transitivity, which is not constructive here"
        )
    if not is_unitary(e):
        raise DomainError("the diagonal element must be unitary")
    if not is_unitary(u):
        raise DomainError("the first element must be unitary")
    auto, carried, cert = _run_pipeline(u, [e], rng)
    e_image = carried[1]
    cert.record("diagonal-image", float(np.max(np.abs(
        e_image.entries - e.entries))))
    return ReductionResult(auto, [carried[0], e_image], cert)


def simultaneous_quat(a: HermMatrix, b: HermMatrix,
                      a_diagonalizer: C6Auto | None = None,
                      rng: np.random.Generator | None = None) -> ReductionResult:
    """Reduce a pair of normal elements: a to diagonal, b to biquaternions.

    The diagonalizer for a must be supplied by the caller unless a already
    is diagonal; the pipeline then never disturbs it.
    """
    rng = rng if rng is not None else numkit.make_rng(0)
    a = a.to_level3()
    b = b.to_level3()
    if a_diagonalizer is None:
        if not a.is_diagonal(1e-9):
            raise DomainError(
                "a diagonalizer for the first element is required: the "
                "underlying diagonalization step is non-constructive"
            )
        a_diagonalizer = C6Auto.identity()
    a0 = a_diagonalizer(a)
    if not a0.is_diagonal(1e-8):
        raise DomainError("the supplied map does not diagonalize the first element")
    b0 = a_diagonalizer(b)
    if not is_normal(b0):
        raise DomainError("the second element must be normal")
    auto, carried, cert = _run_pipeline(b0, [a0], rng)
    total = compose(auto, a_diagonalizer)
    cert.record("diagonal-image", float(np.max(np.abs(
        carried[1].entries - a0.entries))))
    return ReductionResult(total, [carried[1], carried[0]], cert)


def reduce_single(x: HermMatrix, helper: C6Auto | None = None,
                  rng: np.random.Generator | None = None) -> ReductionResult:
    """Make the entries of an arbitrary element biquaternionic.

    Splits x into self-adjoint parts x = a + i b and reduces the pair; the
    helper must diagonalize a (identity suffices when a is diagonal).
    """
    rng = rng if rng is not None else numkit.make_rng(0)
    x = x.to_level3()
    a = (x + x.star()) * 0.5
    b = (x - x.star()) * (-0.5j)
    result = simultaneous_quat(a, b, helper, rng)
    image = result.auto(x)
    gap = float(np.max(np.abs(image.entries[:, :, 4:])))
    result.certificate.record("element-biquat", gap)
    if gap > BIQUAT_TOL:
        raise ConsistencyError("reduced element kept octonionic parts", gap)
    return ReductionResult(result.auto, [image], result.certificate)

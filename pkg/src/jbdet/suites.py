"""Named randomized verification suites behind `jbdet verify`.

Each suite bundles the property checks of one theorem circle, runs them at a
requested trial count with per-trial sub-seeded generators, and reports the
worst residual per property against its pinned tolerance.  The acceptance
tests run the same code at full scale.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field

import numpy as np

from . import cd, numkit
from .biquat import hat_coords, hat_matrix, unhat_matrix
from .c6auto import (
    KIND_JORDAN,
    compose,
    exchange_auto,
    exchange_symmetry,
    lift_auto,
    shift_auto,
    verify_kind,
)
from .cd import CDElement
from .determinant import (
    char_poly,
    dt,
    dt3_sarrus,
    dt_eigen_half,
    dt_relative,
    dt_value,
)
from .errors import DomainError, JbdetError
from .generators import (
    combine_frame,
    distinct_unimodular,
    frame_case1,
    frame_case2,
    frame_subcase31,
    frame_subcase321,
    quaternionic_min_projection,
    random_biquat_unitary,
    random_quat_frame,
    random_frame,
    random_herm,
    random_jordan_auto,
    random_lift_auto,
    random_normal,
    random_octonion_map,
    random_selfadjoint,
    random_unitary,
    unit_quaternion,
)
from .jordan import (
    HermMatrix,
    is_orthogonal,
    is_projection,
    is_tripotent,
    is_unitary,
    jordan_mul,
    peirce_projections,
    tripotent_rank,
    triple_product,
)
from .minproj import (
    FORM_FULL,
    build_min_projection,
    classify_min_projection,
    orthogonal_witness,
    random_min_projection,
)
from .octonion import (
    canonicalize_a,
    canonicalize_b,
    canonicalize_c,
    divide_left,
    divide_right,
    map_residuals,
    pair_multiplier,
    permutation_auto,
)
from .reduce import simultaneous_biq
from .spectral import (
    dt_general,
    dt_unitary,
    frame_under,
    is_invertible,
    jordan_inverse,
    range_tripotent,
    spectral_decompose,
    unitary_sqrt,
)

#: the octonion basis multiplication scheme, each triple cyclically closed
MULT_SCHEME = ((1, 3, 2), (1, 5, 4), (1, 6, 7), (2, 6, 4), (2, 7, 5),
               (3, 5, 6), (3, 7, 4))


@dataclass
class CheckResult:
    name: str
    worst: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.worst <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.detail}]" if self.detail else ""
        return (f"{status}  {self.name}: worst residual {self.worst:.3e}"
                f" (tolerance {self.tolerance:.1e}){extra}")


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: list[CheckResult] = field(default_factory=list)
    coverage: dict[str, int] | None = None

    @property
    def passed(self) -> bool:
        covered = all(v > 0 for v in self.coverage.values()) if self.coverage else True
        return covered and all(c.passed for c in self.checks)

    def add(self, name: str, worst: float, tolerance: float, detail: str = ""):
        self.checks.append(CheckResult(name, float(worst), tolerance, detail))

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        if self.coverage is not None:
            out.append("branch coverage:")
            for label in sorted(self.coverage):
                count = self.coverage[label]
                mark = "ok" if count else "MISSING"
                out.append(f"  {label:<14} hits {count:<5d} {mark}")
        out.append(f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}")
        return out


def _rng(seed: int, stream: str, k: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(stream.encode()), k])


def _unit_vector(rng, dim=8):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


# ---------------------------------------------------------------------------
# suite: aut-octonion
# ---------------------------------------------------------------------------

def run_aut_octonion(seed: int = 0, trials: int = 1000,
                     tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("aut-octonion", seed)

    # exact multiplication table against the seven cyclic triples
    idx, sgn = cd.mul_table(3)
    table_gap = 0.0
    for a, b, c in MULT_SCHEME:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            table_gap = max(table_gap, abs(idx[i, j] - k), abs(sgn[i, j] - 1.0))
            table_gap = max(table_gap, abs(idx[j, i] - k), abs(sgn[j, i] + 1.0))
    for j in range(8):
        table_gap = max(table_gap, abs(idx[0, j] - j), abs(sgn[0, j] - 1.0))
        table_gap = max(table_gap, abs(idx[j, 0] - j), abs(sgn[j, 0] - 1.0))
        if j:
            table_gap = max(table_gap, abs(idx[j, j] - 0), abs(sgn[j, j] + 1.0))
    report.add("multiplication-table-scheme", table_gap, 0.0, "exhaustive, exact")

    rng = _rng(seed, "cd-laws")
    assoc = alt = invol = adjoint = lcd = spin = triple_form = table_vs_rec = 0.0
    for _ in range(trials):
        for level in (1, 2):
            x, y, z = (_unit_vector(rng, 1 << level) for _ in range(3))
            lhs = cd.mul_arrays(cd.mul_arrays(x, y, level), z, level)
            rhs = cd.mul_arrays(x, cd.mul_arrays(y, z, level), level)
            assoc = max(assoc, float(np.max(np.abs(lhs - rhs))))
        x, y, z = (_unit_vector(rng) for _ in range(3))
        xx = cd.mul_arrays(x, x, 3)
        alt = max(alt, float(np.max(np.abs(
            cd.mul_arrays(x, cd.mul_arrays(x, y, 3), 3) - cd.mul_arrays(xx, y, 3)))))
        alt = max(alt, float(np.max(np.abs(
            cd.mul_arrays(cd.mul_arrays(y, x, 3), x, 3) - cd.mul_arrays(y, xx, 3)))))
        d = cd.diamond_signs(3)
        invol = max(invol, float(np.max(np.abs((x * d) * d - x))))
        invol = max(invol, float(np.max(np.abs(np.conj(np.conj(x) * d) * d - x))))
        invol = max(invol, float(np.max(np.abs(np.conj(x) * d - np.conj(x * d)))))
        zs = np.conj(z) * d
        adjoint = max(adjoint, abs(
            np.sum(cd.mul_arrays(x, zs, 3) * np.conj(y))
            - np.sum(x * np.conj(cd.mul_arrays(y, z, 3)))))
        adjoint = max(adjoint, abs(
            np.sum(cd.mul_arrays(zs, x, 3) * np.conj(y))
            - np.sum(x * np.conj(cd.mul_arrays(z, y, 3)))))
        ex, ey = CDElement(3, x), CDElement(3, y)
        lcd = max(lcd, float(np.max(np.abs(
            cd.triple(ex, CDElement.one(3), ey).coords
            - 0.5 * (cd.mul_arrays(x, y, 3) + cd.mul_arrays(y, x, 3))))))
        lcd = max(lcd, abs(cd.inner(ex, ey) - 0.5 * (
            cd.multiply(ex, cd.star(ey)) + cd.multiply(cd.conj(ey), cd.diamond(ex))
        ).coords[0]))
        xr = CDElement(3, rng.normal(size=8))
        spin = max(spin, abs(cd.spin_norm(xr) - cd.norm2(xr)))
        ez = CDElement(3, z)
        box_form = 0.5 * (
            cd.mul_arrays(cd.mul_arrays(x, np.conj(y) * d, 3), z, 3)
            + cd.mul_arrays(cd.mul_arrays(z, np.conj(y) * d, 3), x, 3))
        triple_form = max(triple_form, float(np.max(np.abs(
            cd.triple(ex, ey, ez).coords - box_form))))
        lvl = int(rng.integers(0, 5))
        a, b = (_unit_vector(rng, 1 << lvl) for _ in range(2))
        table_vs_rec = max(table_vs_rec, float(np.max(np.abs(
            cd.mul_arrays(a, b, lvl) - cd.mul_recursive(a, b, lvl)))))
    report.add("associativity-low-levels", assoc, 1e-10, f"{trials} triples")
    report.add("alternativity-octonions", alt, 1e-10, f"{trials} pairs")
    report.add("involution-identities", invol, 1e-12)
    report.add("adjoint-identities", adjoint, 1e-12)
    report.add("unit-triple-jordan-identity", lcd, 1e-12)
    report.add("real-form-spin-norm", spin, 1e-12)
    report.add("triple-vs-box-form", triple_form, 1e-12)
    report.add("table-vs-recursion", table_vs_rec, 1e-12, "levels 0..4")

    # permutations act as automorphisms on every basis pair, sign-perfect
    perm_gap = 0.0
    for which in ("P1", "P2"):
        p = permutation_auto(which)
        for i in range(8):
            for j in range(8):
                lhs = p(cd.mul_arrays(np.eye(8)[i], np.eye(8)[j], 3))
                rhs = cd.mul_arrays(p(np.eye(8)[i]), p(np.eye(8)[j]), 3)
                perm_gap = max(perm_gap, float(np.max(np.abs(lhs - rhs))))
    report.add("permutation-automorphisms", perm_gap, 0.0, "all 64 basis pairs")

    rng = _rng(seed, "oct-maps")
    pair_gap = iso_gap = 0.0
    for _ in range(max(1, trials // 10)):
        h1, h2 = unit_quaternion(rng), unit_quaternion(rng)
        res = map_residuals(pair_multiplier(np.eye(4)[0], h2), rng, 8)
        pair_gap = max(pair_gap, res["multiplicative"], res["triple"], res["unit"])
        res = map_residuals(pair_multiplier(h1, h2), rng, 8)
        iso_gap = max(iso_gap, res["triple"], res["conjugation"])
    report.add("pair-multiplier-automorphism", pair_gap, 1e-9)
    report.add("pair-multiplier-weak-iso", iso_gap, 1e-9)

    rng = _rng(seed, "canonical")
    canon_gap = isometry_gap = 0.0
    for _ in range(max(1, trials // 5)):
        u = CDElement(3, rng.normal(size=8))
        ta, tb, tc = canonicalize_a(u), canonicalize_b(u), canonicalize_c(u)
        va, vb, vc = ta(u).coords, tb(u).coords, tc(u).coords
        canon_gap = max(canon_gap, float(np.max(np.abs(va[1:]))))
        canon_gap = max(canon_gap, float(np.max(np.abs(vb[2:]))))
        canon_gap = max(canon_gap, float(np.max(np.abs(vc[3:]))))
        canon_gap = max(canon_gap, float(np.max(np.abs(
            tc(CDElement.basis(3, 1)).coords - CDElement.basis(3, 1).coords))))
        for t, v in ((ta, va), (tb, vb), (tc, vc)):
            isometry_gap = max(isometry_gap, abs(
                np.linalg.norm(v) - np.linalg.norm(u.coords)))
        res = map_residuals(tb, rng, 4)
        pair_gap = max(pair_gap, res["multiplicative"], res["unit"])
        res = map_residuals(ta, rng, 4)
        iso_gap = max(iso_gap, res["triple"], res["conjugation"])
    report.add("canonicalization-spans", canon_gap, 1e-8)
    report.add("canonicalization-isometry", isometry_gap, 1e-9)

    rng = _rng(seed, "divide")
    div_gap = 0.0
    for _ in range(max(1, trials // 5)):
        x = CDElement(3, rng.normal(size=8))
        y = CDElement(3, rng.normal(size=8))
        div_gap = max(div_gap, float(np.max(np.abs(
            cd.multiply(divide_left(x, y), y).coords - x.coords))))
        div_gap = max(div_gap, float(np.max(np.abs(
            cd.multiply(y, divide_right(x, y)).coords - x.coords))))
    report.add("division-round-trip", div_gap, 1e-10)
    return report


# ---------------------------------------------------------------------------
# suite: t-determinant
# ---------------------------------------------------------------------------

def run_t_determinant(seed: int = 0, trials: int = 500,
                      tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("t-determinant", seed)

    rng = _rng(seed, "hat")
    hat_gap = 0.0
    d2 = cd.diamond_signs(2)
    for _ in range(2 * trials):
        x, y = (_unit_vector(rng, 4) for _ in range(2))
        hx, hy = hat_coords(x), hat_coords(y)
        hat_gap = max(hat_gap, float(np.max(np.abs(
            hat_coords(cd.mul_arrays(x, y, 2)) - hx @ hy))))
        adjugate = np.array([[hx[1, 1], -hx[0, 1]], [-hx[1, 0], hx[0, 0]]])
        hat_gap = max(hat_gap, float(np.max(np.abs(hat_coords(x * d2) - adjugate))))
        hat_gap = max(hat_gap, float(np.max(np.abs(
            hat_coords(np.conj(x) * d2) - hx.conj().T))))
        conj_formula = np.array(
            [[np.conj(hx[1, 1]), -np.conj(hx[1, 0])],
             [-np.conj(hx[0, 1]), np.conj(hx[0, 0])]])
        hat_gap = max(hat_gap, float(np.max(np.abs(hat_coords(np.conj(x)) - conj_formula))))
    report.add("hat-star-isomorphism", hat_gap, 1e-12, f"{2 * trials} elements")

    for n in range(1, 5):
        rng = _rng(seed, f"dt-{n}")
        sq = hom = cpoly = even = sign = 0.0
        for k in range(trials):
            x = random_herm(rng, order=n, level=2)
            res = dt(x, rng)
            sq = max(sq, res.residual)
            alpha = complex(rng.normal(), rng.normal())
            hom = max(hom, abs(dt_value(x * alpha, rng) - alpha**n * res.value)
                      / max(1.0, abs(res.value)))
            p = char_poly(x, rng)
            cpoly = max(cpoly, abs(p.coeffs[-1] - 1.0))
            cpoly = max(cpoly, abs(p.coeffs[0] - (-1.0) ** n * res.value)
                        / max(1.0, abs(res.value)))
            _, mults = numkit.cluster_values(numkit.eig(hat_matrix(x.entries)))
            even = max(even, float(np.max(np.asarray(mults) % 2)))
            half = dt_eigen_half(x, res.value)
            sign = max(sign, abs(half - res.value) / max(1.0, abs(res.value)))
        report.add(f"squared-identity-n{n}", sq, 1e-9, f"{trials} matrices")
        report.add(f"homogeneity-n{n}", hom, 1e-9)
        report.add(f"char-poly-coefficients-n{n}", cpoly, 1e-8)
        report.add(f"even-multiplicity-n{n}", even, 0.0)
        report.add(f"half-product-sign-n{n}", sign, 1e-8)

    rng = _rng(seed, "two-param")
    two_param = 0.0
    for _ in range(max(1, trials // 10)):
        n = int(rng.integers(2, 5))
        x = random_herm(rng, order=n, level=2)
        y = random_herm(rng, order=n, level=2)
        rho = 1.0 + float(np.max(np.abs(x.entries)))
        nodes = rho * np.exp(2j * np.pi * (np.arange(n + 1) + rng.random()) / (n + 1))
        samples = [(complex(lam), dt_value(y * lam + x, rng)) for lam in nodes]
        poly = numkit.poly_fit(samples)
        scale = max(1.0, abs(dt_value(y, rng)))
        two_param = max(two_param, abs(poly.coeffs[-1] - dt_value(y, rng)) / scale)
        two_param = max(two_param, abs(poly.coeffs[0] - dt_value(x, rng)) / scale)
    report.add("pencil-polynomiality", two_param, 1e-8)

    rng = _rng(seed, "sarrus")
    sarrus_gap = 0.0
    interp_used = 0
    for k in range(2 * trials):
        x = random_herm(rng, order=3, level=2)
        if k % 10 == 0:
            x.entries[0, 0, 0] = 10.0 ** -rng.integers(10, 15)
        res = dt(x, rng)
        if res.route == "interpolated":
            interp_used += 1
        sarrus_gap = max(sarrus_gap, abs(dt3_sarrus(x) - res.value))
    report.add("sarrus-closed-form", sarrus_gap, 1e-10,
               f"{2 * trials} matrices, {interp_used} interpolated")
    report.add("interpolation-route-hit", float(interp_used < max(1, trials // 10)), 0.0)

    rng = _rng(seed, "relative")
    rel_gap = branch_gap = 0.0
    count = min(300, max(1, trials))
    for _ in range(count):
        x = random_herm(rng, order=3, level=2)
        e = random_biquat_unitary(rng).to_level2()
        de = dt_value(e, rng)
        rel = dt_relative(x, e, rng)
        rel_gap = max(rel_gap, abs(dt_value(x, rng) - rel * de)
                      / max(1.0, abs(dt_value(x, rng))))
        values, _ = numkit.cluster_values(numkit.eig(hat_matrix(e.entries)))
        flips = 1 - 2 * rng.integers(0, 2, size=len(values))
        rel2 = dt_relative(x, e, rng, branch_signs=flips)
        branch_gap = max(branch_gap, abs(rel - rel2) / max(1.0, abs(rel)))
    report.add("relative-determinant-product", rel_gap, 1e-8, f"{count} pairs")
    report.add("square-root-branch-independence", branch_gap, 1e-8)
    return report


# ---------------------------------------------------------------------------
# suite: t-minproj
# ---------------------------------------------------------------------------

def run_t_minproj(seed: int = 0, trials: int = 1000,
                  tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("t-minproj", seed)

    rng = _rng(seed, "sufficiency")
    proj_gap = 0.0
    rank_fail = 0
    complement_fail = 0
    roundtrip = 0.0
    for k in range(trials):
        q = random_min_projection(rng)
        sq = jordan_mul(q, q)
        proj_gap = max(proj_gap, (sq - q).sup_norm(),
                       float(np.max(np.abs(q.entries.imag))))
        if tripotent_rank(q) != 1:
            rank_fail += 1
        if k < trials // 5:
            if tripotent_rank(HermMatrix.identity(3, 3) - q) != 2:
                complement_fail += 1
        params = classify_min_projection(q)
        roundtrip = max(roundtrip, (build_min_projection(params) - q).sup_norm())
    report.add("sufficiency-projection", proj_gap, 1e-9, f"{trials} samples")
    report.add("sufficiency-minimality", float(rank_fail), 0.0)
    report.add("complement-rank-two", float(complement_fail), 0.0)
    report.add("classify-round-trip", roundtrip, 1e-8)

    rng = _rng(seed, "necessity")
    necessity = 0.0
    half = max(1, trials // 4)
    for k in range(half):
        comp_source = spectral_decompose(random_selfadjoint(rng))
        for comp, mult in zip(comp_source.components, comp_source.multiplicities):
            if mult == 1:
                params = classify_min_projection(comp, tol=1e-7)
                necessity = max(
                    necessity, (build_min_projection(params) - comp).sup_norm())
    for k in range(half):
        scramble = random_jordan_auto(rng, 4)
        q = scramble(HermMatrix.diag([1, 0, 0]))
        params = classify_min_projection(q, tol=1e-7)
        necessity = max(necessity, (build_min_projection(params) - q).sup_norm())
    report.add("necessity-classification", necessity, 1e-7,
               f"{2 * half}+ independent projections")

    rng = _rng(seed, "rank-two")
    rank_two = 0.0
    for _ in range(max(1, trials // 4)):
        q = quaternionic_min_projection(rng)
        svals = np.linalg.svd(hat_matrix(q.entries[:, :, :4]), compute_uv=False)
        if svals[1] - svals[2] < 1e-6 or svals[1] < 1e-6:
            rank_two = max(rank_two, 1.0)
        rank_two = max(rank_two, float(svals[2]))
    report.add("biquaternionic-hat-rank-two", rank_two, 1e-6)

    rng = _rng(seed, "witness")
    witness = 0.0
    for _ in range(max(1, trials // 5)):
        q = random_min_projection(rng)
        params = classify_min_projection(q)
        if params.form != FORM_FULL or params.a is None or params.b is None:
            continue
        if np.linalg.norm(params.a) < 1e-6 or np.linalg.norm(params.b) < 1e-6:
            continue
        r = orthogonal_witness(params)
        witness = max(witness, (jordan_mul(r, r) - r).sup_norm())
        witness = max(witness, jordan_mul(r, q).sup_norm())
        # q + r stays strictly below the unit: the gap is at least the
        # largest coordinate of the third-row octonion, which is nonzero
        if (q + r - HermMatrix.identity(3, 3)).sup_norm() < 1e-7:
            witness = max(witness, 1.0)
    report.add("orthogonal-complement-witness", witness, 1e-9)
    return report


# ---------------------------------------------------------------------------
# suite: aut-c6
# ---------------------------------------------------------------------------

def run_aut_c6(seed: int = 0, trials: int = 64,
               tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("aut-c6", seed)

    rng = _rng(seed, "exchange")
    exch = 0.0
    for k, l in ((1, 2), (1, 3), (2, 3)):
        auto = exchange_auto(k, l)
        sym = exchange_symmetry(k, l)
        exch = max(exch, float(np.max(np.abs(
            compose(auto, auto).matrix - np.eye(27)))))
        for _ in range(trials // 4):
            x = random_herm(rng)
            oracle = triple_product(sym, x.star(), sym)
            exch = max(exch, (auto(x) - oracle).sup_norm())
    report.add("exchange-vs-shift-oracle", exch, 1e-12)

    rng = _rng(seed, "lift")
    lift_gap = 0.0
    diag_gap = 0.0
    for base_map in (permutation_auto("P1"), permutation_auto("P2"),
                     random_octonion_map(rng), random_octonion_map(rng),
                     random_octonion_map(rng, unital=True)):
        for variant in ("base", "T1", "T2", "T3"):
            auto = lift_auto(base_map, variant)
            res = verify_kind(auto, rng, samples=trials)
            lift_gap = max(lift_gap, res["jordan_residual"], res["star_residual"],
                           res["unit_gap"])
        if base_map.fixes_unit():
            d = HermMatrix.diag(distinct_unimodular(rng))
            image = lift_auto(base_map)(d)
            diag_gap = max(diag_gap, 0.0 if image.is_diagonal(1e-10) else 1.0)
    report.add("lifted-jordan-automorphisms", lift_gap, 1e-9,
               f"{trials} pairs per map")
    report.add("unital-lift-preserves-diagonals", diag_gap, 0.0)

    rng = _rng(seed, "compose")
    word = random_jordan_auto(rng, 6)
    res = verify_kind(word, rng, samples=trials)
    report.add("six-step-composition", max(res["jordan_residual"],
                                           res["unit_gap"]), 1e-9)

    rng = _rng(seed, "shift")
    shift_gap = unitpair = 0.0
    for _ in range(4):
        u = random_unitary(rng, scramble=1)
        auto = shift_auto(u)
        res = verify_kind(auto, rng, samples=trials // 2)
        shift_gap = max(shift_gap, res["triple_residual"])
        one_image = auto(HermMatrix.identity(3, 3))
        shift_gap = max(shift_gap, (one_image - jordan_mul(u, u)).sup_norm())
        star_shift = shift_auto(u.star())
        unitpair = max(unitpair, 0.0 if compose(auto, star_shift).kind == KIND_JORDAN
                       else 1.0)
    report.add("shift-triple-automorphism", shift_gap, 1e-9)
    report.add("shift-inverse-pair-unital", unitpair, 0.0)

    rng = _rng(seed, "preserve")
    dt_gap = struct_gap = 0.0
    for _ in range(max(1, trials // 8)):
        auto = random_jordan_auto(rng, 3)
        x = random_normal(rng)
        dt_gap = max(dt_gap, abs(dt_general(auto(x)) - dt_general(x))
                     / max(1.0, abs(dt_general(x))))
        q = random_min_projection(rng)
        image = auto(q)
        if not is_projection(image, 1e-8) or tripotent_rank(image) != 1:
            struct_gap = max(struct_gap, 1.0)
        r = random_min_projection(rng)
        if jordan_mul(q, r).sup_norm() < 1e-9:
            if not is_orthogonal(auto(q), auto(r)):
                struct_gap = max(struct_gap, 1.0)
    report.add("automorphisms-preserve-determinant", dt_gap, 1e-8)
    report.add("automorphisms-preserve-projections", struct_gap, 0.0)
    return report


# ---------------------------------------------------------------------------
# suite: t-spectral
# ---------------------------------------------------------------------------

def run_t_spectral(seed: int = 0, trials: int = 100,
                   tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("t-spectral", seed)

    res = spectral_decompose(HermMatrix.diag([5, 5, 2]))
    fixed = sorted(zip(res.eigenvalues, res.multiplicities), key=lambda p: p[0].real)
    gap = abs(fixed[0][0] - 2) + abs(fixed[1][0] - 5) + abs(fixed[0][1] - 1) \
        + abs(fixed[1][1] - 2)
    report.add("degenerate-diagonal-example", float(gap), 1e-10)

    rng = _rng(seed, "uniqueness")
    uniq = recon = lagr = sqrt_gap = jordan_axiom = peirce = 0.0
    for k in range(trials):
        frame = random_frame(rng)
        values = distinct_unimodular(rng)
        u = combine_frame(frame, values)
        res = spectral_decompose(u)
        got = np.sort_complex(np.asarray(res.eigenvalue_multiset()))
        want = np.sort_complex(np.asarray(values))
        uniq = max(uniq, float(np.max(np.abs(got - want))))
        recon = max(recon, (res.reconstruct() - u).sup_norm())
        e = res.base_unitary
        for comp in res.components:
            cube = triple_product(comp, comp, comp)
            lagr = max(lagr, (cube - comp).sup_norm())
            rest = e - comp
            lagr = max(lagr, (triple_product(rest, rest, rest) - rest).sup_norm())
            lagr = max(lagr, triple_product(comp, comp, rest).sup_norm())
        v = unitary_sqrt(u)
        sqrt_gap = max(sqrt_gap, (jordan_mul(v, v) - u).sup_norm())
        x = random_herm(rng)
        y = random_herm(rng)
        x2 = jordan_mul(x, x)
        jordan_axiom = max(jordan_axiom, (
            jordan_mul(x2, jordan_mul(y, x)) - jordan_mul(jordan_mul(x2, y), x)
        ).sup_norm() / max(1.0, x.sup_norm() ** 3 * y.sup_norm()))
        if k < max(1, trials // 5):
            for t in (frame[0], frame[0] + frame[1], u):
                p2, p1, p0 = peirce_projections(t)
                eye = np.eye(27)
                for a, pa in enumerate((p2, p1, p0)):
                    peirce = max(peirce, float(np.max(np.abs(
                        pa.matrix @ pa.matrix - pa.matrix))))
                    for b, pb in enumerate((p2, p1, p0)):
                        if a != b:
                            peirce = max(peirce, float(np.max(np.abs(
                                pa.matrix @ pb.matrix))))
                peirce = max(peirce, float(np.max(np.abs(
                    p2.matrix + p1.matrix + p0.matrix - eye))))
            w = frame[0]
            ortho = frame[1]
            if not (is_orthogonal(w, ortho) and is_orthogonal(ortho, w)):
                peirce = max(peirce, 1.0)
    report.add("unitary-eigenvalue-recovery", uniq, 1e-8, f"{trials} unitaries")
    report.add("reconstruction", recon, 1e-8)
    report.add("lagrange-components-tripotent", lagr, 1e-8)
    report.add("unitary-square-root", sqrt_gap, 1e-8)
    report.add("jordan-axiom", jordan_axiom, 1e-9)
    report.add("peirce-idempotence-completeness", peirce, 1e-9)

    rng = _rng(seed, "seed-independence")
    u = random_unitary(rng)
    m1 = np.sort_complex(np.asarray(
        spectral_decompose(u).eigenvalue_multiset()))
    m2 = np.sort_complex(np.asarray(
        spectral_decompose(u).eigenvalue_multiset()))
    report.add("resolution-uniqueness", float(np.max(np.abs(m1 - m2))), 1e-8)

    bad = 0.0
    x = random_herm(_rng(seed, "non-normal"))
    try:
        spectral_decompose(x)
        bad = 1.0
    except (DomainError, JbdetError):
        pass
    report.add("non-normal-rejected", bad, 0.0)
    return report


# ---------------------------------------------------------------------------
# suite: t-product
# ---------------------------------------------------------------------------

def run_t_product(seed: int = 0, trials: int = 300,
                  tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("t-product", seed)

    product_gap = 0.0
    octonionic = 0
    for k in range(trials):
        rng = _rng(seed, "pairs", k)
        u = random_unitary(rng)
        e = random_unitary(rng)
        if float(np.max(np.abs(u.entries[:, :, 4:]))) > 1e-2:
            octonionic += 1
        product_gap = max(product_gap, abs(
            dt_unitary(u) - dt_unitary(u, e) * dt_unitary(e)))
    report.add("unitary-product-rule", product_gap, 1e-7,
               f"{trials} pairs, {octonionic} genuinely octonionic")
    report.add("octonionic-instance-share",
               float(octonionic < 0.9 * trials), 0.0)

    sa_gap = 0.0
    count = max(1, (2 * trials) // 3)
    for k in range(count):
        rng = _rng(seed, "self-adjoint", k)
        e = random_unitary(rng)
        frame = frame_under(e, rng)
        signs = rng.choice([-1.0, 1.0], size=3)
        u = combine_frame(frame, signs)
        sa_gap = max(sa_gap, (triple_product(e, u, e) - u).sup_norm())
        du, de = dt_unitary(u), dt_unitary(e)
        sa_gap = max(sa_gap, min(abs(du - de), abs(du + de)))
    report.add("self-adjoint-in-isotope-corollary", sa_gap, 1e-7,
               f"{count} instances")

    shift_gap = 0.0
    for k in range(count):
        rng = _rng(seed, "triple-aut", k)
        u = random_unitary(rng)
        w = random_unitary(rng)
        auto = shift_auto(w)
        lhs = dt_unitary(auto(u))
        rhs = dt_unitary(u) * dt_unitary(jordan_mul(w, w))
        shift_gap = max(shift_gap, abs(lhs - rhs))
    report.add("triple-automorphism-corollary", shift_gap, 1e-7,
               f"{count} instances")
    return report


# ---------------------------------------------------------------------------
# suite: t-simbiq
# ---------------------------------------------------------------------------

def run_t_simbiq(seed: int = 0, trials: int = 200,
                 tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("t-simbiq", seed)
    labels = ("case1", "case2", "case3", "subcase3.1", "subcase3.2",
              "subcase3.2.1", "subcase3.2.2")
    coverage = {label: 0 for label in labels}

    auto_gap = biq_gap = diag_gap = dt_gap = replay_gap = 0.0
    for k in range(trials):
        rng = _rng(seed, "simbiq", k)
        u = random_unitary(rng, scramble=1)
        e = HermMatrix.diag(distinct_unimodular(rng))
        result = simultaneous_biq(u, e, rng)
        for label in result.certificate.case_path:
            if label in coverage:
                coverage[label] += 1
        biq_gap = max(biq_gap, result.certificate.residuals["image-biquat"])
        diag_gap = max(diag_gap, result.certificate.residuals["diagonal-image"])
        if k < max(1, trials // 10):
            res = verify_kind(result.auto, rng, samples=32)
            auto_gap = max(auto_gap, res["jordan_residual"], res["unit_gap"])
        dt_gap = max(dt_gap, abs(dt_unitary(u) - dt_unitary(result.images[0])))
        if k < max(1, trials // 4):
            u_img = result.images[0].to_level2()
            e_img = result.images[1].to_level2()
            lhs = dt_value(u_img)
            rhs = dt_relative(u_img, e_img, rng) * dt_value(e_img)
            replay_gap = max(replay_gap, abs(lhs - rhs),
                             abs(lhs - dt_unitary(u)),
                             abs(dt_relative(u_img, e_img, rng)
                                 - dt_unitary(u, e)))
    report.add("verified-jordan-automorphism", auto_gap, 1e-9)
    report.add("biquaternionic-image", biq_gap, 1e-8, f"{trials} pairs")
    report.add("diagonal-image-fixed", diag_gap, 1e-10)
    report.add("determinant-invariance", dt_gap, 1e-7)
    report.add("product-theorem-replay", replay_gap, 1e-7)

    steer = {"case1": frame_case1, "case2": frame_case2,
             "subcase3.1": frame_subcase31, "subcase3.2.1": frame_subcase321}
    for k in range(max(20, trials // 5)):
        rng = _rng(seed, "steered", k)
        name = list(steer)[k % len(steer)]
        try:
            frame = steer[name](rng)
        except JbdetError:
            continue
        u = combine_frame(frame, distinct_unimodular(rng))
        u = random_lift_auto(rng, 2)(u)
        result = simultaneous_biq(u, HermMatrix.identity(3, 3), rng)
        for label in result.certificate.case_path:
            if label in coverage:
                coverage[label] += 1
    report.coverage = coverage
    return report


# ---------------------------------------------------------------------------
# suite: t-dt-c6
# ---------------------------------------------------------------------------

def run_t_dt_c6(seed: int = 0, trials: int = 300,
                tolerance: float | None = None) -> SuiteReport:
    report = SuiteReport("t-dt-c6", seed)

    one = HermMatrix.identity(3, 3)

    def cubic_residual(x3: HermMatrix, value: complex,
                       rng: np.random.Generator) -> float:
        # fit lambda -> dt(lambda - x) from four independent evaluations
        rho = 1.0 + x3.sup_norm()
        samples = []
        for j in range(4):
            lam = rho * np.exp(2j * np.pi * (j + rng.random()) / 4.0)
            samples.append((complex(lam), dt_general(one * lam - x3)))
        poly = numkit.poly_fit(samples)
        return max(abs(poly.coeffs[-1] - 1.0),
                   abs(poly.coeffs[0] + value) / max(1.0, abs(value)))

    equiv_fail = inverse_gap = cubic_gap = 0.0
    singular_seen = 0
    for k in range(trials):
        rng = _rng(seed, "normal", k)
        x = random_normal(rng, zero_probability=0.3,
                          selfadjoint=bool(rng.random() < 0.4))
        value = dt_general(x)
        invertible = is_invertible(x)
        r = range_tripotent(x)
        r_unitary = is_unitary(r)
        nonzero = abs(value) > 1e-8
        if not nonzero:
            singular_seen += 1
        if (nonzero != invertible) or (nonzero != r_unitary):
            equiv_fail = max(equiv_fail, 1.0)
        if nonzero:
            y = jordan_inverse(x)
            inverse_gap = max(inverse_gap, (jordan_mul(x, y) - one).sup_norm())
            inverse_gap = max(inverse_gap, (
                jordan_mul(jordan_mul(x, x), y) - x).sup_norm()
                / max(1.0, x.sup_norm()))
        cubic_gap = max(cubic_gap, cubic_residual(x, value, rng))
    report.add("normal-invertibility-equivalence", equiv_fail, 0.0,
               f"{trials} normals, {singular_seen} singular")
    report.add("normal-jordan-inverse", inverse_gap, 1e-8)
    report.add("singular-instances-exercised", float(singular_seen == 0), 0.0)

    biq_fail = 0.0
    biq_singular = 0
    for k in range(trials):
        rng = _rng(seed, "biquat", k)
        if rng.random() < 0.25:
            frame = random_quat_frame(rng)
            values = rng.normal(size=3) + 1j * rng.normal(size=3)
            values[int(rng.integers(0, 3))] = 0.0
            x3 = combine_frame(frame, values)
        else:
            x3 = random_herm(rng, order=3, level=2).to_level3()
        value = dt_general(x3)
        x2 = x3.to_level2()
        value_rec = dt_value(x2)
        if abs(value - value_rec) > 1e-8 * max(1.0, abs(value)):
            biq_fail = max(biq_fail, 1.0)
        nonzero = abs(value) > 1e-8
        if not nonzero:
            biq_singular += 1
        if nonzero != is_invertible(x3):
            biq_fail = max(biq_fail, 1.0)
        hat = hat_matrix(x2.entries)
        u_svd, svals, vh = np.linalg.svd(hat)
        kdim = int(np.sum(svals > 1e-8 * max(1.0, svals[0])))
        w = u_svd[:, :kdim] @ vh[:kdim, :]
        entries = unhat_matrix(w)
        tri = HermMatrix(entries, 2, tol=1e-6).to_level3()
        if not is_tripotent(tri, 1e-6):
            biq_fail = max(biq_fail, 1.0)
        if nonzero != (kdim == 6):
            biq_fail = max(biq_fail, 1.0)
        poly = char_poly(x2, rng)
        cubic_gap = max(cubic_gap, abs(poly.coeffs[-1] - 1.0))
        cubic_gap = max(cubic_gap, abs(poly.coeffs[0] + value)
                        / max(1.0, abs(value)))
    report.add("biquaternionic-invertibility-equivalence", biq_fail, 0.0,
               f"{trials} matrices, {biq_singular} singular")
    report.add("characteristic-cubic-coefficients", cubic_gap, 1e-8,
               f"{2 * trials} elements")
    return report


SUITES = {
    "aut-octonion": (run_aut_octonion, 1000),
    "t-determinant": (run_t_determinant, 500),
    "t-minproj": (run_t_minproj, 1000),
    "aut-c6": (run_aut_c6, 64),
    "t-spectral": (run_t_spectral, 100),
    "t-product": (run_t_product, 300),
    "t-simbiq": (run_t_simbiq, 200),
    "t-dt-c6": (run_t_dt_c6, 300),
}


def run_suite(name: str, seed: int = 0, trials: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    func, default_trials = SUITES[name]
    return func(seed=seed, trials=trials if trials is not None else default_trials)

import numpy as np
import pytest

from jbdet.errors import DomainError
from jbdet.generators import random_jordan_auto, random_selfadjoint
from jbdet.jordan import (
    HermMatrix,
    is_projection,
    jordan_mul,
    tripotent_rank,
)
from jbdet.minproj import (
    FORM_CORNER,
    FORM_FULL,
    FORM_LOWER,
    MinProjParams,
    build_min_projection,
    classify_min_projection,
    orthogonal_witness,
    random_min_projection,
)
from jbdet.spectral import spectral_decompose


def test_corner_form():
    q = build_min_projection(MinProjParams(FORM_CORNER))
    assert (q - HermMatrix.diag([0, 0, 1])).sup_norm() == 0
    assert is_projection(q) and tripotent_rank(q) == 1


def test_full_form_degenerates_to_top_corner():
    q = build_min_projection(MinProjParams(FORM_FULL, 1.0, np.zeros(8), np.zeros(8)))
    assert (q - HermMatrix.diag([1, 0, 0])).sup_norm() == 0


def test_full_form_with_balanced_mass(rng):
    a = rng.normal(size=8)
    a *= np.sqrt(1 / 8) / np.linalg.norm(a)
    b = rng.normal(size=8)
    b *= np.sqrt(1 / 8) / np.linalg.norm(b)
    q = build_min_projection(MinProjParams(FORM_FULL, 0.5, a, b))
    assert is_projection(q, 1e-10)
    assert tripotent_rank(q) == 1


def test_lower_form(rng):
    alpha = 0.7
    a = rng.normal(size=8)
    a *= np.sqrt(alpha - alpha**2) / np.linalg.norm(a)
    q = build_min_projection(MinProjParams(FORM_LOWER, alpha, a))
    assert is_projection(q, 1e-10) and tripotent_rank(q) == 1
    assert np.max(np.abs(q.entries[0, :, :])) == 0


def test_constraint_violation_rejected(rng):
    a = rng.normal(size=8)
    a /= np.linalg.norm(a)  # |a| = 1 breaks alpha = alpha^2 + |a|^2
    with pytest.raises(DomainError):
        build_min_projection(MinProjParams(FORM_FULL, 0.5, a, np.zeros(8)))
    with pytest.raises(DomainError):
        build_min_projection(MinProjParams(FORM_FULL, 0.0, np.zeros(8), np.zeros(8)))


def test_sampler_properties(rng):
    for _ in range(200):
        q = random_min_projection(rng)
        assert is_projection(q, 1e-9)
        assert tripotent_rank(q) == 1
    complement = HermMatrix.identity(3, 3) - q
    assert tripotent_rank(complement) == 2


def test_sampler_reproducible():
    a = random_min_projection(np.random.default_rng(123))
    b = random_min_projection(np.random.default_rng(123))
    assert np.array_equal(a.entries, b.entries)


def test_classify_canonical_forms(rng):
    assert classify_min_projection(HermMatrix.diag([0, 0, 1])).form == FORM_CORNER
    assert classify_min_projection(HermMatrix.diag([0, 1, 0])).form == FORM_LOWER
    assert classify_min_projection(HermMatrix.diag([1, 0, 0])).form == FORM_FULL


def test_classify_round_trip(rng):
    for _ in range(200):
        q = random_min_projection(rng)
        params = classify_min_projection(q)
        rebuilt = build_min_projection(params)
        assert (rebuilt - q).sup_norm() < 1e-9


def test_classify_spectral_components(rng):
    hits = 0
    for _ in range(30):
        res = spectral_decompose(random_selfadjoint(rng))
        for comp, mult in zip(res.components, res.multiplicities):
            if mult == 1:
                params = classify_min_projection(comp, tol=1e-7)
                assert (build_min_projection(params) - comp).sup_norm() < 1e-7
                hits += 1
    assert hits > 30


def test_classify_automorphism_scrambles(rng):
    for _ in range(40):
        auto = random_jordan_auto(rng, 5)
        q = auto(HermMatrix.diag([1, 0, 0]))
        params = classify_min_projection(q, tol=1e-7)
        assert (build_min_projection(params) - q).sup_norm() < 1e-7


def test_classify_rejects_non_minimal(rng):
    with pytest.raises(DomainError):
        classify_min_projection(HermMatrix.diag([1, 1, 0]))
    with pytest.raises(DomainError):
        classify_min_projection(random_selfadjoint(rng))


def test_orthogonal_witness(rng):
    for _ in range(30):
        q = random_min_projection(rng)
        params = classify_min_projection(q)
        if params.form != FORM_FULL:
            continue
        if np.linalg.norm(params.a) < 1e-6 or np.linalg.norm(params.b) < 1e-6:
            continue
        r = orthogonal_witness(params)
        assert is_projection(r, 1e-9)
        assert jordan_mul(r, q).sup_norm() < 1e-10
        assert (q + r - HermMatrix.identity(3, 3)).sup_norm() > 0.1


def test_bad_params_rejected():
    with pytest.raises(DomainError):
        MinProjParams("pentagon")
    with pytest.raises(DomainError):
        MinProjParams(FORM_FULL, 0.5, np.zeros(5), np.zeros(8))

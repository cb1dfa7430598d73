import numpy as np
import pytest

from jbdet.c6auto import (
    C6Auto,
    KIND_JORDAN,
    KIND_TRIPLE,
    compose,
    compose_chain,
    exchange_auto,
    exchange_symmetry,
    lift_auto,
    shift_auto,
    verify_kind,
)
from jbdet.errors import ConsistencyError, DomainError
from jbdet.generators import random_herm, random_octonion_map
from jbdet.jordan import HermMatrix, LinearOperator, jordan_mul, triple_product
from jbdet.octonion import pair_multiplier, permutation_auto


def test_exchange_on_diagonal():
    u12 = exchange_auto(1, 2)
    x = HermMatrix.diag([1.0, 2.0, 3.0])
    image = u12(x)
    assert [image.entries[i, i, 0].real for i in range(3)] == [2.0, 1.0, 3.0]


def test_exchange_is_involution():
    for k, l in ((1, 2), (1, 3), (2, 3)):
        auto = exchange_auto(k, l)
        assert np.max(np.abs(compose(auto, auto).matrix - np.eye(27))) < 1e-14


def test_exchange_matches_shift_oracle(rng):
    for k, l in ((1, 2), (1, 3), (2, 3)):
        auto = exchange_auto(k, l)
        sym = exchange_symmetry(k, l)
        for _ in range(10):
            x = random_herm(rng)
            oracle = triple_product(sym, x.star(), sym)
            assert (auto(x) - oracle).sup_norm() < 1e-12


def test_exchange_bad_indices():
    with pytest.raises(DomainError):
        exchange_auto(1, 1)
    with pytest.raises(DomainError):
        exchange_auto(0, 2)


def test_lift_identity_map():
    from jbdet.octonion import OctonionMap

    auto = lift_auto(OctonionMap.identity())
    assert np.max(np.abs(auto.matrix - np.eye(27))) < 1e-14


def test_lift_of_automorphism_acts_entrywise(rng):
    t = pair_multiplier(np.eye(4)[0], np.eye(4)[1])
    auto = lift_auto(t)
    x = random_herm(rng)
    expected = x.entries.copy()
    for i in range(3):
        for j in range(3):
            if i != j:
                expected[i, j] = t(expected[i, j])
    assert np.max(np.abs(auto(x).entries - expected)) < 1e-12


def test_lift_of_weak_isomorphism_is_jordan_automorphism(rng):
    t = pair_multiplier(np.eye(4)[2], np.eye(4)[3])
    auto = lift_auto(t)
    assert auto.kind == KIND_JORDAN
    for _ in range(100):
        x = random_herm(rng)
        y = random_herm(rng)
        gap = (auto(jordan_mul(x, y)) - jordan_mul(auto(x), auto(y))).sup_norm()
        assert gap / max(1.0, x.sup_norm() * y.sup_norm()) < 1e-9
    report = verify_kind(auto, rng, samples=32)
    assert report["jordan_residual"] < 1e-9 and report["unit_gap"] < 1e-12


def test_lift_variants_pass_verification(rng):
    for _ in range(3):
        t = random_octonion_map(rng)
        for variant in ("base", "T1", "T2", "T3"):
            auto = lift_auto(t, variant)
            report = verify_kind(auto, rng, samples=24)
            assert report["jordan_residual"] < 1e-9


def test_lift_unknown_variant(rng):
    with pytest.raises(DomainError):
        lift_auto(permutation_auto("P1"), "T4")


def test_unital_lift_preserves_diagonals(rng):
    t = pair_multiplier(np.eye(4)[0], np.eye(4)[2])
    auto = lift_auto(t)
    d = HermMatrix.diag([1j, -1.0, np.exp(0.2j)])
    assert (auto(d) - d).sup_norm() < 1e-13


def test_shift_trivial_and_square():
    assert np.max(np.abs(shift_auto(HermMatrix.identity(3, 3)).matrix
                         - np.eye(27))) < 1e-13
    u = HermMatrix.diag([1j, 1, 1])
    auto = shift_auto(u)
    assert auto.kind == KIND_TRIPLE
    one_image = auto(HermMatrix.identity(3, 3))
    assert np.allclose([one_image.entries[i, i, 0] for i in range(3)],
                       [-1.0, 1.0, 1.0], atol=1e-13)


def test_shift_preserves_triples(rng):
    from jbdet.generators import random_unitary

    u = random_unitary(rng, scramble=1)
    auto = shift_auto(u)
    report = verify_kind(auto, rng, samples=24)
    assert report["triple_residual"] < 1e-9


def test_shift_requires_unitary(rng):
    with pytest.raises(DomainError):
        shift_auto(HermMatrix.diag([2.0, 1.0, 1.0]))


def test_compose_provenance_and_kind(rng):
    u12 = exchange_auto(1, 2)
    lift = lift_auto(random_octonion_map(rng))
    total = compose(u12, lift)
    assert total.kind == KIND_JORDAN
    assert total.provenance == u12.provenance + lift.provenance
    report = verify_kind(total, rng, samples=24)
    assert report["jordan_residual"] < 1e-9


def test_six_fold_composition(rng):
    autos = [lift_auto(random_octonion_map(rng)) for _ in range(6)]
    total = compose_chain(autos)
    report = verify_kind(total, rng, samples=32)
    assert report["jordan_residual"] < 1e-9


def test_shift_pair_is_unital(rng):
    from jbdet.generators import random_unitary

    u = random_unitary(rng, scramble=1)
    pair = compose(shift_auto(u), shift_auto(u.star()))
    assert pair.kind == KIND_JORDAN


def test_verify_kind_flags_forgeries(rng):
    # a diagonal scaling is not a triple automorphism
    fake = C6Auto(LinearOperator(2.0 * np.eye(27, dtype=np.complex128), 3, 3),
                  KIND_JORDAN, ["fake"])
    with pytest.raises(ConsistencyError):
        verify_kind(fake, rng, samples=8)


def test_inverse_of_automorphism(rng):
    auto = lift_auto(random_octonion_map(rng))
    x = random_herm(rng)
    assert (auto.inverse()(auto(x)) - x).sup_norm() < 1e-10

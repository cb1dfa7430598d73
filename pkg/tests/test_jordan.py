import numpy as np
import pytest

from jbdet.biquat import hat_matrix, unhat_matrix
from jbdet.errors import DomainError
from jbdet.jordan import (
    HermMatrix,
    box_mul,
    from_coords,
    hermitian_dim,
    is_orthogonal,
    is_projection,
    is_tripotent,
    is_unitary,
    jordan_mul,
    op_L,
    op_Q,
    op_U,
    peirce_dims,
    peirce_projections,
    triple_product,
    tripotent_rank,
)


def rand_herm(rng, order=3, level=3, real=False):
    dim = hermitian_dim(order, level)
    coords = rng.normal(size=dim)
    if not real:
        coords = coords + 1j * rng.normal(size=dim)
    return from_coords(coords, order, level)


def test_unit_element(rng):
    one = HermMatrix.identity(3, 3)
    x = rand_herm(rng)
    assert (jordan_mul(one, x) - x).sup_norm() < 1e-14
    # the unit box-commutes with arbitrary matrices
    assert np.max(np.abs(box_mul(one, x) - box_mul(x, one))) < 1e-14
    assert np.max(np.abs(box_mul(one, x) - x.entries)) < 1e-14


def test_projection_idempotent():
    p1 = HermMatrix.diag([1, 0, 0])
    assert (jordan_mul(p1, p1) - p1).sup_norm() == 0
    assert is_projection(p1) and is_tripotent(p1)


def test_jordan_mul_matches_hat_oracle(rng):
    # on biquaternionic matrices the product agrees with (XY + YX)/2 in M6
    for _ in range(30):
        x = rand_herm(rng, level=2)
        y = rand_herm(rng, level=2)
        hx, hy = hat_matrix(x.entries), hat_matrix(y.entries)
        expected = unhat_matrix(0.5 * (hx @ hy + hy @ hx))
        assert np.max(np.abs(jordan_mul(x, y).entries - expected)) < 1e-10


def test_triple_matches_hat_oracle(rng):
    # {x,y,z} agrees with (x y* z + z y* x)/2 through the hat map
    for _ in range(30):
        x, y, z = (rand_herm(rng, level=2) for _ in range(3))
        hx, hy, hz = (hat_matrix(v.entries) for v in (x, y, z))
        expected = unhat_matrix(0.5 * (hx @ hy.conj().T @ hz + hz @ hy.conj().T @ hx))
        assert np.max(np.abs(triple_product(x, y, z).entries - expected)) < 1e-9


def test_star_via_unit_triple(rng):
    one = HermMatrix.identity(3, 3)
    x = rand_herm(rng)
    assert (triple_product(one, x, one) - x.star()).sup_norm() < 1e-13


def test_unitary_tripotent_example():
    u = HermMatrix.diag([1j, 1, -1])
    assert is_tripotent(u)
    assert is_unitary(u)
    assert not is_projection(u)
    assert tripotent_rank(u) == 3
    assert (triple_product(u, u, u) - u).sup_norm() < 1e-14


def test_jordan_axiom(rng):
    for _ in range(30):
        x = rand_herm(rng)
        y = rand_herm(rng)
        x2 = jordan_mul(x, x)
        lhs = jordan_mul(x2, jordan_mul(y, x))
        rhs = jordan_mul(jordan_mul(x2, y), x)
        scale = max(1.0, x.sup_norm() ** 3 * y.sup_norm())
        assert (lhs - rhs).sup_norm() / scale < 1e-9


def test_operator_definitions_agree(rng):
    a, b, x = (rand_herm(rng) for _ in range(3))
    assert (op_L(a, b)(x) - triple_product(a, b, x)).sup_norm() < 1e-12
    assert (op_Q(a)(x) - triple_product(a, x, a)).sup_norm() < 1e-12
    expected = 2 * jordan_mul(jordan_mul(a, x), a) - jordan_mul(jordan_mul(a, a), x)
    assert (op_U(a)(x) - expected).sup_norm() < 1e-12


def test_L_of_unit_is_identity():
    one = HermMatrix.identity(3, 3)
    op = op_L(one, one)
    assert np.max(np.abs(op.matrix - np.eye(27))) < 1e-14


def test_U_of_unitary_is_invertible(rng):
    u = HermMatrix.diag([1j, np.exp(0.3j), -1])
    assert abs(op_U(u).det()) > 1e-6
    # a singular element gives a singular quadratic representation
    s = HermMatrix.diag([1, 1, 0])
    svals = np.linalg.svd(op_U(s).matrix, compute_uv=False)
    assert svals[-1] < 1e-12


def test_Q_of_corner_projection_compresses(rng):
    p1 = HermMatrix.diag([1, 0, 0])
    x = rand_herm(rng)
    image = op_Q(p1)(x)
    expected = HermMatrix.zeros(3, 3)
    expected.entries[0, 0, 0] = np.conj(x.entries[0, 0, 0])
    assert (image - expected).sup_norm() < 1e-13


def test_peirce_dimensions_and_eig_oracle():
    cases = [
        (HermMatrix.diag([1, 0, 0]), (1, 16, 10)),
        (HermMatrix.diag([1, 1, 0]), (10, 16, 1)),
        (HermMatrix.identity(3, 3), (27, 0, 0)),
    ]
    for e, dims in cases:
        assert peirce_dims(e) == dims
        # independent oracle: eigenvalue counts of L(e, e) at 1, 1/2, 0
        eig = np.linalg.eigvals(op_L(e, e).matrix)
        counts = tuple(int(np.sum(np.abs(eig - t) < 1e-8)) for t in (1.0, 0.5, 0.0))
        assert counts == dims


def test_peirce_projections_resolve_identity(rng):
    e = HermMatrix.diag([1, 1, 0])
    p2, p1, p0 = peirce_projections(e)
    eye = np.eye(27)
    assert np.max(np.abs(p2.matrix + p1.matrix + p0.matrix - eye)) < 1e-12
    for p in (p2, p1, p0):
        assert np.max(np.abs(p.matrix @ p.matrix - p.matrix)) < 1e-12
    assert np.max(np.abs(p2.matrix @ p1.matrix)) < 1e-12
    # Peirce spaces are the eigenspaces of L(e,e)
    l_matrix = op_L(e, e).matrix
    assert np.max(np.abs(l_matrix @ p2.matrix - 1.0 * p2.matrix)) < 1e-12
    assert np.max(np.abs(l_matrix @ p1.matrix - 0.5 * p1.matrix)) < 1e-12
    assert np.max(np.abs(l_matrix @ p0.matrix)) < 1e-12


def test_peirce_rejects_non_tripotent(rng):
    with pytest.raises(DomainError):
        peirce_projections(rand_herm(rng))
    with pytest.raises(DomainError):
        tripotent_rank(HermMatrix.diag([2, 0, 0]))


def test_orthogonality_symmetric():
    e = HermMatrix.diag([1, 0, 0])
    v = HermMatrix.diag([0, 1, 0])
    w = HermMatrix.diag([0, 1j, 0])
    assert is_orthogonal(e, v) and is_orthogonal(v, e)
    assert is_orthogonal(e, w) and is_orthogonal(w, e)
    assert not is_orthogonal(e, e)


def test_shift_preserves_triples(rng):
    # {u, x*, u} is a triple automorphism for unitary u
    u = HermMatrix.diag([np.exp(0.4j), 1j, -1])
    shift = op_U(u)
    for _ in range(10):
        x, y, z = (rand_herm(rng) for _ in range(3))
        lhs = shift(triple_product(x, y, z))
        rhs = triple_product(shift(x), shift(y), shift(z))
        scale = max(1.0, x.sup_norm() * y.sup_norm() * z.sup_norm())
        assert (lhs - rhs).sup_norm() / scale < 1e-10


def test_hermitian_validation():
    bad = np.zeros((3, 3, 8), dtype=np.complex128)
    bad[0, 1, 0] = 1.0  # mirror entry missing
    with pytest.raises(DomainError):
        HermMatrix(bad, 3)
    bad2 = np.zeros((3, 3, 8), dtype=np.complex128)
    bad2[0, 0, 3] = 1.0  # non-scalar diagonal
    with pytest.raises(DomainError):
        HermMatrix(bad2, 3)
    with pytest.raises(DomainError):
        HermMatrix(np.zeros((4, 4, 8)), 3)  # octonionic entries need order 3


def test_biquaternionic_predicate_and_embedding(rng):
    x2 = rand_herm(rng, level=2)
    x3 = x2.to_level3()
    assert x3.is_biquaternionic()
    assert np.max(np.abs(x3.to_level2().entries - x2.entries)) == 0
    y = rand_herm(rng, level=3)
    assert not y.is_biquaternionic()
    with pytest.raises(DomainError):
        y.to_level2()


def test_rank_requires_known_dimension():
    # a tripotent of the level-2 algebra embedded in the octonionic one keeps
    # a well-defined rank through the Peirce dimension table
    e = HermMatrix.diag([1, 0, 0], level=2)
    assert tripotent_rank(e) == 1
    assert tripotent_rank(HermMatrix.identity(3, 2)) == 3

import numpy as np
import pytest

from jbdet import cd
from jbdet.biquat import hat, hat_coords, hat_matrix, unhat, unhat_matrix
from jbdet.cd import CDElement
from jbdet.determinant import dt_value
from jbdet.errors import DomainError
from jbdet.jordan import from_coords, hermitian_dim


def rand_biquat(rng):
    return rng.normal(size=4) + 1j * rng.normal(size=4)


def test_hat_of_unit_and_basis():
    assert np.allclose(hat(CDElement.one(2)), np.eye(2))
    assert np.allclose(hat(CDElement.basis(2, 1)), np.diag([1j, -1j]))


def test_hat_unhat_mutually_inverse(rng):
    for _ in range(30):
        x = CDElement(2, rand_biquat(rng))
        assert np.max(np.abs(unhat(hat(x)).coords - x.coords)) < 1e-15
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        assert np.max(np.abs(hat(unhat(m)) - m)) < 1e-15


def test_hat_is_multiplicative(rng):
    for _ in range(100):
        x, y = rand_biquat(rng), rand_biquat(rng)
        lhs = hat_coords(cd.mul_arrays(x, y, 2))
        rhs = hat_coords(x) @ hat_coords(y)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_involutions_match_matrix_formulas(rng):
    d = cd.diamond_signs(2)
    for _ in range(100):
        x = rand_biquat(rng)
        hx = hat_coords(x)
        adjugate = np.array([[hx[1, 1], -hx[0, 1]], [-hx[1, 0], hx[0, 0]]])
        assert np.max(np.abs(hat_coords(x * d) - adjugate)) < 1e-14
        assert np.max(np.abs(hat_coords(np.conj(x) * d) - hx.conj().T)) < 1e-14
        conj_formula = np.array([[np.conj(hx[1, 1]), -np.conj(hx[1, 0])],
                                 [-np.conj(hx[0, 1]), np.conj(hx[0, 0])]])
        assert np.max(np.abs(hat_coords(np.conj(x)) - conj_formula)) < 1e-14


def test_subalgebra_embeddings(rng):
    # doubled complex numbers land on diagonal matrices
    x = np.array([rng.normal() + 1j * rng.normal(), rng.normal() + 1j * rng.normal(),
                  0.0, 0.0])
    hx = hat_coords(x)
    assert abs(hx[0, 1]) < 1e-15 and abs(hx[1, 0]) < 1e-15
    # its real form gives conjugate diagonal pairs
    xr = np.array([rng.normal(), rng.normal(), 0.0, 0.0])
    hr = hat_coords(xr)
    assert abs(hr[0, 0] - np.conj(hr[1, 1])) < 1e-15
    # complex scalars embed as scalar matrices
    s = rng.normal() + 1j * rng.normal()
    assert np.max(np.abs(hat_coords(np.array([s, 0, 0, 0])) - s * np.eye(2))) < 1e-15
    # real quaternions give the [[a, b], [-conj b, conj a]] block shape
    q = hat_coords(rng.normal(size=4))
    assert abs(q[0, 0] - np.conj(q[1, 1])) < 1e-15
    assert abs(q[0, 1] + np.conj(q[1, 0])) < 1e-15


def test_hat_matrix_identity_and_diag():
    eye3 = np.zeros((3, 3, 4), dtype=np.complex128)
    for i in range(3):
        eye3[i, i, 0] = 1.0
    assert np.allclose(hat_matrix(eye3), np.eye(6))
    lam = np.array([2.0 + 1j, -0.5, 3.0j])
    diag = np.zeros((3, 3, 4), dtype=np.complex128)
    for i in range(3):
        diag[i, i, 0] = lam[i]
    assert np.allclose(hat_matrix(diag), np.diag(np.repeat(lam, 2)))


def test_hat_matrix_blockwise_multiplicative(rng):
    from jbdet.jordan import box

    x = rng.normal(size=(3, 3, 4)) + 1j * rng.normal(size=(3, 3, 4))
    y = rng.normal(size=(3, 3, 4)) + 1j * rng.normal(size=(3, 3, 4))
    assert np.max(np.abs(hat_matrix(box(x, y, 2))
                         - hat_matrix(x) @ hat_matrix(y))) < 1e-10


def test_unhat_matrix_roundtrip(rng):
    x = rng.normal(size=(3, 3, 4)) + 1j * rng.normal(size=(3, 3, 4))
    assert np.max(np.abs(unhat_matrix(hat_matrix(x)) - x)) < 1e-15


def test_det_hat_equals_dt_squared(rng):
    for _ in range(40):
        x = from_coords(rng.normal(size=hermitian_dim(3, 2))
                        + 1j * rng.normal(size=hermitian_dim(3, 2)), 3, 2)
        det6 = np.linalg.det(hat_matrix(x.entries))
        value = dt_value(x)
        assert abs(value * value - det6) <= 1e-9 * max(1.0, abs(det6))


def test_shape_errors():
    with pytest.raises(DomainError):
        hat(CDElement.one(3))
    with pytest.raises(DomainError):
        unhat(np.eye(3))
    with pytest.raises(DomainError):
        hat_matrix(np.zeros((2, 3, 4)))
    with pytest.raises(DomainError):
        unhat_matrix(np.zeros((5, 5)))

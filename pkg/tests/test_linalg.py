"""Exact matrix arithmetic and field elimination."""

import pytest

from cliffqp.errors import DomainError, UnsupportedRingError, UsageError
from cliffqp.forms import b_wedge_gram
from cliffqp.linalg import (
    Matrix,
    SpanChecker,
    image_basis,
    in_span,
    kernel_basis,
    mat_vec,
    matmul,
    rank,
    rref,
    signed_perm_inverse,
    solve,
)
from cliffqp.rings import GF2, GF3, GF5, QQ, ZZ
from cliffqp.sampling import random_matrix, random_vector

from conftest import FIELDS, fresh_rng


def test_trace_identity_mod_char():
    assert Matrix.identity(GF3, 4).trace() == 1  # 4 mod 3


def test_transpose_involution(rng):
    m = random_matrix(QQ, 3, 5, rng)
    assert m.transpose().transpose() == m


def test_trace_cyclicity(rng):
    for _ in range(10):
        a = random_matrix(GF5, 4, 4, rng)
        b = random_matrix(GF5, 4, 4, rng)
        assert matmul(a, b).trace() == matmul(b, a).trace()


def test_shape_errors():
    with pytest.raises(UsageError):
        matmul(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3))
    with pytest.raises(UsageError):
        Matrix.identity(QQ, 2) + Matrix.identity(QQ, 3)


@pytest.mark.parametrize("ring", FIELDS)
def test_solve_by_substitution(ring):
    rng = fresh_rng(f"solve:{ring.name}")
    for trial in range(100):
        size = rng.randint(1, 16)
        a = random_matrix(ring, size, size, rng)
        x = random_vector(ring, size, rng)
        b = mat_vec(a, x)
        got = solve(a, b)
        assert got is not None
        assert mat_vec(a, got) == b


def test_solve_inconsistent():
    a = Matrix.from_rows(QQ, [[QQ.one, QQ.one], [QQ.one, QQ.one]])
    assert solve(a, [QQ.zero, QQ.one]) is None


def test_elimination_needs_field():
    with pytest.raises(UnsupportedRingError):
        rref(Matrix.identity(ZZ, 2))


def test_image_of_zero_map_is_empty():
    assert image_basis(Matrix.zeros(GF3, 4, 4)) == []


def test_in_span_trivial():
    v = [QQ.one, QQ.zero]
    assert in_span(QQ, v, [v])
    assert not in_span(QQ, v, [[QQ.zero, QQ.one]])
    assert in_span(QQ, [QQ.zero, QQ.zero], [])


def test_kernel_image_dimensions(rng):
    a = random_matrix(GF3, 6, 9, rng)
    assert len(image_basis(a)) + len(kernel_basis(a)) == 9
    for v in kernel_basis(a):
        assert mat_vec(a, v) == [GF3.zero] * 6


def test_gram_rank_n2():
    assert rank(b_wedge_gram(GF3, 2)) == 4  # the pairing is regular


def test_signed_perm_identity():
    assert signed_perm_inverse(Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 3)


def test_signed_perm_antidiag():
    b = Matrix.from_rows(QQ, [[QQ.zero, QQ.one], [-QQ.one, QQ.zero]])
    inv = signed_perm_inverse(b)
    assert matmul(b, inv) == Matrix.identity(QQ, 2)
    assert matmul(inv, b) == Matrix.identity(QQ, 2)


@pytest.mark.parametrize("ring", (GF2, GF3, QQ, ZZ))
@pytest.mark.parametrize("n", range(1, 7))
def test_gram_inverse_by_direct_multiplication(ring, n):
    g = b_wedge_gram(ring, n)
    inv = signed_perm_inverse(g)
    assert matmul(g, inv) == Matrix.identity(ring, 1 << n)


def test_signed_perm_rejects_bad_input():
    with pytest.raises(DomainError):
        signed_perm_inverse(Matrix.from_rows(QQ, [[QQ.one, QQ.one], [QQ.zero, QQ.one]]))
    with pytest.raises(DomainError):
        signed_perm_inverse(Matrix.from_rows(QQ, [[QQ.from_int(2), QQ.zero], [QQ.zero, QQ.one]]))


def test_span_checker_matches_in_span(rng):
    basis = [random_vector(GF5, 6, rng) for _ in range(3)]
    checker = SpanChecker(GF5, basis)
    for _ in range(20):
        coeffs = [GF5.sample(rng) for _ in basis]
        v = [GF5.zero] * 6
        for c, b in zip(coeffs, basis):
            v = [GF5.add(x, GF5.mul(c, y)) for x, y in zip(v, b)]
        assert checker.contains(v)
        assert in_span(GF5, v, basis)

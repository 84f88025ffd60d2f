"""Generator words, relations, the involution, traces, and decomposition."""

import pytest

from cliffqp.clifford import (
    CliffordElement,
    canonical_involution,
    classify_even_involution,
    decompose_monomial,
    even_blocks,
    generator_matrix,
    involution_suite,
    involution_type_matches,
    monomial_basis,
    parity_masks,
    phi_vector,
    phi_word,
    reduced_trace,
    relation_suite,
)
from cliffqp.errors import UnsupportedRingError, UsageError
from cliffqp.exterior import mask_size
from cliffqp.linalg import Matrix
from cliffqp.rings import GF2, GF3, GF4, GF5, QQ, ZZ
from cliffqp.sampling import random_clifford_element, random_even_element

from conftest import PALETTE, fresh_rng


def test_phi_word_n1_matrix():
    x = phi_word(QQ, 1, ["v1"])
    assert x.matrix == Matrix.from_rows(QQ, [[QQ.zero, QQ.zero], [QQ.one, QQ.zero]])


def test_phi_anticommutator_is_identity():
    for ring in PALETTE:
        lhs = phi_word(ring, 1, ["v1", "v1*"]) + phi_word(ring, 1, ["v1*", "v1"])
        assert lhs == CliffordElement.identity(ring, 1)


def test_phi_word_n2_even_blocks():
    x = phi_word(QQ, 2, ["v1", "v2"])
    b0, b1 = even_blocks(x)
    assert b0 == Matrix.from_rows(QQ, [[QQ.zero, QQ.zero], [QQ.one, QQ.zero]])
    assert b1 == Matrix.zeros(QQ, 2, 2)


def test_phi_word_rejects_bad_label():
    with pytest.raises(UsageError):
        phi_word(QQ, 2, ["v3"])


@pytest.mark.parametrize("ring", PALETTE + (GF5,))
@pytest.mark.parametrize("n", (1, 2, 3))
def test_relation_suite_small(ring, n):
    out = relation_suite(ring, n, fresh_rng(f"rel:{ring.name}:{n}"), trials=25)
    assert out.passed, out.details


def test_phi_square_is_form_value():
    ring, n = GF5, 3
    rng = fresh_rng("phisq")
    coeffs = [ring.one, ring.zero, ring.zero, ring.zero, ring.zero, ring.one]
    x = phi_vector(ring, n, coeffs)  # v1 + v1*
    assert x * x == CliffordElement.identity(ring, n)


def test_quartic_word_idempotent_and_involution_expansion():
    ring = GF2
    x = phi_word(ring, 2, ["v1", "v2", "v2*", "v1*"])
    assert x * x == x
    expansion = (
        CliffordElement.identity(ring, 2)
        + phi_word(ring, 2, ["v1", "v1*"])
        + phi_word(ring, 2, ["v2", "v2*"])
        + x
    )
    assert canonical_involution(x) == expansion


@pytest.mark.parametrize("ring", PALETTE)
@pytest.mark.parametrize("n", range(1, 6))
def test_involution_fixes_generators(ring, n):
    for k in range(2 * n):
        g = CliffordElement(ring, n, generator_matrix(ring, n, k))
        assert canonical_involution(g) == g


@pytest.mark.parametrize("ring", (GF3, QQ))
def test_involution_squares_to_identity_on_randoms(ring):
    rng = fresh_rng(f"tausq:{ring.name}")
    for _ in range(10):
        x = random_clifford_element(ring, 3, rng)
        assert canonical_involution(canonical_involution(x)) == x


@pytest.mark.parametrize("ring", PALETTE)
def test_involution_anti_multiplicative(ring):
    rng = fresh_rng(f"antimult:{ring.name}")
    for _ in range(25):
        x = random_clifford_element(ring, 3, rng)
        y = random_clifford_element(ring, 3, rng)
        assert canonical_involution(x * y) == canonical_involution(y) * canonical_involution(x)


def test_involution_suite_runs():
    assert involution_suite(GF3, 2, fresh_rng("isuite"), pairs=10).passed


def test_involution_on_n2_blocks_swaps_diagonal():
    rng = fresh_rng("blockswap")
    for ring in (GF2, QQ):
        x = random_even_element(ring, 2, rng)
        t = canonical_involution(x)
        xb0, xb1 = even_blocks(x)
        tb0, tb1 = even_blocks(t)
        for xb, tb in ((xb0, tb0), (xb1, tb1)):
            assert tb.at(0, 0) == xb.at(1, 1)
            assert tb.at(1, 1) == xb.at(0, 0)
        if ring.char == 2:  # full matrix form [[d, b], [c, a]] per block
            for xb, tb in ((xb0, tb0), (xb1, tb1)):
                assert tb.at(0, 1) == xb.at(0, 1)
                assert tb.at(1, 0) == xb.at(1, 0)


def test_reduced_trace_examples():
    for ring in PALETTE:
        ident = CliffordElement.identity(ring, 3)
        assert ring.eq(reduced_trace(ident), ring.from_int(8))
    # trace of v1 v1* counts the subsets containing 1 (independent oracle)
    for n in (2, 3, 4):
        count = sum(1 for mask in range(1 << n) if mask & 1)
        assert count == 1 << (n - 1)
        for ring in PALETTE:
            x = phi_word(ring, n, ["v1", "v1*"])
            assert ring.eq(reduced_trace(x), ring.from_int(count))
    assert reduced_trace(phi_word(QQ, 3, ["v1", "v2"])) == QQ.zero


def test_parity_of_words():
    rng = fresh_rng("parity")
    labels = ["v1", "v2", "v1*", "v2*"]
    for _ in range(20):
        k = rng.randint(1, 4)
        word = [rng.choice(labels) for _ in range(k)]
        x = phi_word(GF3, 2, word)
        if x.matrix.is_zero():
            continue
        assert x.parity == ("even" if k % 2 == 0 else "odd")


def test_decompose_identity_and_monomials():
    mb = monomial_basis(GF3, 2)
    ident = CliffordElement.identity(GF3, 2)
    coords = mb.decompose(ident)
    assert coords[0] == GF3.one
    assert all(c == GF3.zero for c in coords[1:])
    x = phi_word(GF3, 2, ["v1", "v2"])
    coords = mb.decompose(x)
    expect_mask = 0b0011  # generators v1 and v2 in the fixed order
    for mask, c in enumerate(coords):
        assert c == (GF3.one if mask == expect_mask else GF3.zero)


@pytest.mark.parametrize("ring", (GF2, GF3, GF4, GF5, QQ))
def test_decompose_recompose_roundtrip(ring):
    mb = monomial_basis(ring, 2)
    rng = fresh_rng(f"roundtrip:{ring.name}")
    for _ in range(100):
        x = random_clifford_element(ring, 2, rng)
        assert mb.recompose(mb.decompose(x)) == x


@pytest.mark.parametrize("ring", (GF3, GF4))
def test_coordinates_roundtrip_proves_independence(ring):
    # recompose then decompose returns the same coordinates, so the 4^n
    # monomials are linearly independent as well as spanning
    mb = monomial_basis(ring, 2)
    rng = fresh_rng(f"coords:{ring.name}")
    for _ in range(25):
        coords = [ring.sample(rng) for _ in range(mb.size)]
        got = mb.decompose(mb.recompose(coords))
        assert all(ring.eq(a, b) for a, b in zip(coords, got))


@pytest.mark.parametrize("ring", (GF2, GF3, GF4, GF5, QQ))
@pytest.mark.parametrize("n", (3, 4))
def test_monomials_span_at_larger_rank(ring, n):
    # decompose-recompose on arbitrary matrices proves the 4^n monomials span
    mb = monomial_basis(ring, n)
    rng = fresh_rng(f"span:{ring.name}:{n}")
    for _ in range(3):
        x = random_clifford_element(ring, n, rng)
        assert mb.recompose(mb.decompose(x)) == x


def test_decompose_needs_field():
    with pytest.raises(UnsupportedRingError):
        monomial_basis(ZZ, 2)


def test_decompose_caps_rank():
    with pytest.raises(UsageError):
        monomial_basis(GF2, 5)


def test_decompose_monomial_function():
    x = phi_word(GF3, 2, ["v2*"])
    coords = decompose_monomial(x)
    hot = [mask for mask, c in enumerate(coords) if c != GF3.zero]
    assert hot == [0b0100]  # v2* is the third generator in the fixed order


@pytest.mark.parametrize("ring", (GF2, GF3, QQ))
@pytest.mark.parametrize("n", (2, 3, 4, 5))
def test_involution_type_table(ring, n):
    report = classify_even_involution(ring, n)
    ok, want = involution_type_matches(report)
    assert ok, f"n={n} over {ring.name}: verdict {report.verdict}, want {want}"


def test_involution_type_char2_refinement():
    report = classify_even_involution(GF2, 2)
    assert report.involution_labels == {"orthogonal", "symplectic"}
    report = classify_even_involution(GF3, 2)
    assert report.involution_labels == {"symplectic"}
    report = classify_even_involution(QQ, 4)
    assert report.involution_labels == {"orthogonal"}


def test_center_behaviour():
    # for even n the two block identities commute with random even elements
    ring = GF3
    rng = fresh_rng("center")
    half = 1 << 3
    from cliffqp.clifford import embed_blocks

    e0 = embed_blocks(ring, 4, Matrix.identity(ring, half), Matrix.zeros(ring, half, half))
    e1 = embed_blocks(ring, 4, Matrix.zeros(ring, half, half), Matrix.identity(ring, half))
    for _ in range(20):
        x = random_even_element(ring, 4, rng)
        assert e0 * x == x * e0
        assert e1 * x == x * e1
    # for odd n the involution moves the second block identity
    quarter = 1 << 2
    o1 = embed_blocks(ring, 3, Matrix.zeros(ring, quarter, quarter), Matrix.identity(ring, quarter))
    assert canonical_involution(o1) != o1


def test_parity_masks_order():
    even, odd = parity_masks(3)
    assert even == [0b000, 0b011, 0b101, 0b110]
    assert odd == [0b001, 0b010, 0b100, 0b111]
    assert all(mask_size(m) % 2 == 0 for m in even)


def test_sparse_paths_match_dense():
    # the fast internal representation agrees with the public dense one
    from cliffqp.clifford import _phi_vector_sparse, _sfrom_matrix, _sto_matrix, _tau_sparse

    ring, n = GF5, 3
    rng = fresh_rng("sparse-dense")
    for _ in range(10):
        coeffs = [ring.sample(rng) for _ in range(2 * n)]
        dense = phi_vector(ring, n, coeffs).matrix
        sparse = _sto_matrix(ring, 1 << n, _phi_vector_sparse(ring, n, coeffs))
        assert dense == sparse
        x = random_clifford_element(ring, n, rng)
        via_sparse = _sto_matrix(ring, 1 << n, _tau_sparse(ring, n, _sfrom_matrix(x.matrix)))
        assert via_sparse == canonical_involution(x).matrix

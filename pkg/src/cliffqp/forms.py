"""Quadratic and bilinear forms: the hyperbolic form on V + V^* and the
pairing of complementary subsets on wedge V.

Quadratic forms are kept as evaluation procedures, never as symmetric
matrices: in characteristic 2 the form and its polar carry genuinely
different information, and conflating them is exactly the mistake this
package exists to avoid.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import UsageError
from .exterior import ExteriorVector, sign_exponent
from .linalg import Matrix
from .rings import Element, Ring


class HyperbolicSpace:
    """H(V) = V + V^* with basis ordered (v_1, .., v_n, v_n^*, .., v_1^*)."""

    def __init__(self, ring: Ring, n: int):
        if n < 1:
            raise UsageError("n must be positive")
        self.ring = ring
        self.n = n
        self.dim = 2 * n

    def labels(self) -> list[str]:
        return [f"v{i}" for i in range(1, self.n + 1)] + [
            f"v{i}*" for i in range(self.n, 0, -1)
        ]

    def index_of(self, label: str) -> int:
        try:
            return self.labels().index(label)
        except ValueError:
            raise UsageError(f"unknown basis label {label!r}")

    def vector_index(self, i: int) -> int:
        """Position of v_i."""
        if not 1 <= i <= self.n:
            raise UsageError(f"index {i} outside 1..{self.n}")
        return i - 1

    def dual_index(self, i: int) -> int:
        """Position of v_i^*."""
        if not 1 <= i <= self.n:
            raise UsageError(f"index {i} outside 1..{self.n}")
        return 2 * self.n - i

    def partner(self, k: int) -> int:
        """Index pairing v_i with v_i^* under the polar form."""
        return self.dim - 1 - k

    def q(self, coeffs: Sequence[Element]) -> Element:
        """The hyperbolic quadratic form: sum over i of x_i * y_i."""
        if len(coeffs) != self.dim:
            raise UsageError(f"expected {self.dim} coefficients")
        ring = self.ring
        total = ring.zero
        for i in range(self.n):
            total = ring.add(total, ring.mul(coeffs[i], coeffs[self.dim - 1 - i]))
        return total

    def polar_gram(self) -> Matrix:
        """Gram matrix of the polar form: ones on the antidiagonal."""
        g = Matrix.zeros(self.ring, self.dim, self.dim)
        for k in range(self.dim):
            g.put(k, self.partner(k), self.ring.one)
        return g

    def quadratic_form(self) -> "QuadraticForm":
        return QuadraticForm(self.ring, self.dim, self.q)

    def __repr__(self) -> str:
        return f"HyperbolicSpace({self.ring.name}, n={self.n})"


class QuadraticForm:
    """A quadratic form as an evaluation procedure on coefficient lists."""

    def __init__(self, ring: Ring, dim: int, evaluate: Callable[[Sequence[Element]], Element]):
        self.ring = ring
        self.dim = dim
        self.evaluate = evaluate
        self._polar_gram: Matrix | None = None

    def __call__(self, coeffs: Sequence[Element]) -> Element:
        return self.evaluate(coeffs)

    def polar(self, x: Sequence[Element], y: Sequence[Element]) -> Element:
        """The polar form q(x + y) - q(x) - q(y), computed literally."""
        ring = self.ring
        xy = [ring.add(a, b) for a, b in zip(x, y)]
        return ring.sub(ring.sub(self.evaluate(xy), self.evaluate(x)), self.evaluate(y))

    def polar_gram(self) -> Matrix:
        """Gram matrix of the polar form over the standard basis (cached)."""
        if self._polar_gram is None:
            ring = self.ring
            basis = []
            for k in range(self.dim):
                e = [ring.zero] * self.dim
                e[k] = ring.one
                basis.append(e)
            g = Matrix.zeros(ring, self.dim, self.dim)
            for r in range(self.dim):
                for c in range(self.dim):
                    g.put(r, c, self.polar(basis[r], basis[c]))
            self._polar_gram = g
        return self._polar_gram


def b_wedge(x: ExteriorVector, y: ExteriorVector) -> Element:
    """Pairing of complementary subsets:
    sum over I of (-1)**((sum I) - |I|) x_I y_{I^c}.
    """
    if x.n != y.n or x.ring != y.ring:
        raise UsageError("operands live in different exterior algebras")
    ring = x.ring
    full = (1 << x.n) - 1
    total = ring.zero
    for mask, a in enumerate(x.coeffs):
        if ring.is_zero(a):
            continue
        b = y.coeffs[full ^ mask]
        if ring.is_zero(b):
            continue
        term = ring.mul(a, b)
        if sign_exponent(mask) % 2:
            term = ring.neg(term)
        total = ring.add(total, term)
    return total


def b_wedge_via_top(x: ExteriorVector, y: ExteriorVector) -> Element:
    """The defining description: top coefficient of reversal(x) wedge y."""
    return x.reversal().wedge(y).pi_top()


def b_wedge_gram(ring: Ring, n: int) -> Matrix:
    """Gram matrix of the pairing: one signed entry per row, at (I, I^c)."""
    dim = 1 << n
    full = dim - 1
    g = Matrix.zeros(ring, dim, dim)
    for mask in range(dim):
        g.put(mask, full ^ mask, ring.sign(sign_exponent(mask)))
    return g


def q_wedge(x: ExteriorVector) -> Element:
    """Quadratic form on wedge V:
    sum over I containing 1 of (-1)**((sum I) - |I|) x_I x_{I^c}.
    """
    ring = x.ring
    full = (1 << x.n) - 1
    total = ring.zero
    for mask, a in enumerate(x.coeffs):
        if not mask & 1 or ring.is_zero(a):
            continue
        b = x.coeffs[full ^ mask]
        if ring.is_zero(b):
            continue
        term = ring.mul(a, b)
        if sign_exponent(mask) % 2:
            term = ring.neg(term)
        total = ring.add(total, term)
    return total


def q_wedge_form(ring: Ring, n: int) -> QuadraticForm:
    def evaluate(coeffs: Sequence[Element]) -> Element:
        return q_wedge(ExteriorVector.from_coeffs(ring, n, coeffs))

    return QuadraticForm(ring, 1 << n, evaluate)


def q_wedge_hyperbolic_gram(ring: Ring, n: int) -> Matrix:
    """Polar Gram of q_wedge in the rescaled basis that exhibits it as
    hyperbolic: v_I for 1 not in I, and (-1)**((sum I)-|I|) v_I otherwise.

    Basis order: the masks without 1 ascending, then their complements in
    matching order, so a hyperbolic pairing shows up as [[0, I], [I, 0]].
    """
    half = 1 << (n - 1)
    full = (1 << n) - 1
    form = q_wedge_form(ring, n)
    without = [m for m in range(1 << n) if not m & 1]
    order = without + [full ^ m for m in without]
    basis = []
    for mask in order:
        coeffs = [ring.zero] * (1 << n)
        coeffs[mask] = ring.sign(sign_exponent(mask)) if mask & 1 else ring.one
        basis.append(coeffs)
    g = Matrix.zeros(ring, 2 * half, 2 * half)
    for r in range(2 * half):
        for c in range(2 * half):
            g.put(r, c, form.polar(basis[r], basis[c]))
    return g


def gram_agreement_suite(ring: Ring, n: int) -> "CheckOutcome":
    """Formula vs definition on all basis pairs, plus regularity.

    The subset-pairing formula must agree with the top coefficient of
    reversal(x) wedge y on every basis pair, the Gram matrix must invert
    as a signed permutation, and the rescaled basis must exhibit the
    quadratic form as hyperbolic with polar Gram [[0, I], [I, 0]].
    """
    from .exterior import ExteriorVector
    from .linalg import signed_perm_inverse
    from .reporting import CheckOutcome

    out = CheckOutcome()
    dim = 1 << n
    basis = [ExteriorVector.basis(ring, n, mask) for mask in range(dim)]
    for mi in range(dim):
        for mj in range(dim):
            lhs = b_wedge(basis[mi], basis[mj])
            rhs = b_wedge_via_top(basis[mi], basis[mj])
            if not ring.eq(lhs, rhs):
                out.fail(
                    f"pairing mismatch at basis pair ({mi}, {mj}): "
                    f"formula {ring.show(lhs)} vs definition {ring.show(rhs)}"
                )
    gram = b_wedge_gram(ring, n)
    inverse = signed_perm_inverse(gram)
    if gram * inverse != Matrix.identity(ring, dim):
        out.fail("Gram matrix times its signed-permutation inverse is not the identity")
    hyper = q_wedge_hyperbolic_gram(ring, n)
    half = dim // 2
    for r in range(dim):
        for c in range(dim):
            want = ring.one if (r + half == c or c + half == r) else ring.zero
            if not ring.eq(hyper.at(r, c), want):
                out.fail(
                    f"hyperbolic witness Gram has {ring.show(hyper.at(r, c))} at ({r}, {c})"
                )
    if out.passed:
        out.note(
            f"pairing formula matches on all {dim * dim} basis pairs; "
            f"Gram invertible; hyperbolic witness in block form (n={n}, {ring.name})"
        )
    return out


def polar_matches_prediction(ring: Ring, n: int) -> "CheckOutcome":
    """polar(q_wedge) equals the pairing exactly when n = 0, 1 mod 4 or the
    characteristic is 2; otherwise the comparison must fail (the negative
    control at n = 2 over GF(3)).
    """
    from .reporting import CheckOutcome

    out = CheckOutcome()
    expected_equal = n % 4 in (0, 1) or ring.char == 2
    equal = q_wedge_form(ring, n).polar_gram() == b_wedge_gram(ring, n)
    if equal != expected_equal:
        out.fail(
            f"polar identity {'held' if equal else 'failed'} for n={n} over {ring.name}, "
            f"expected the opposite"
        )
    else:
        out.note(
            f"polar of the quadratic form {'equals' if equal else 'differs from'} the pairing "
            f"(n={n}, {ring.name}), as predicted"
        )
    return out


def classify_bilinear(gram: Matrix) -> frozenset[str]:
    """All labels that apply: 'symmetric', 'skew', 'alternating'.

    In characteristic 2 symmetric and skew coincide, so several labels can
    hold at once; the empty set means none applies.
    """
    if gram.rows != gram.cols:
        raise UsageError("classification needs a square Gram matrix")
    ring = gram.ring
    labels = set()
    transpose = gram.transpose()
    if gram == transpose:
        labels.add("symmetric")
    if gram == -transpose:
        labels.add("skew")
        if all(ring.is_zero(gram.at(i, i)) for i in range(gram.rows)):
            labels.add("alternating")
    return frozenset(labels)

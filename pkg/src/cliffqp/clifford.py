"""The split Clifford algebra of the hyperbolic form, realized faithfully
as endomorphisms of wedge V.

The generator v_i acts as left wedge multiplication and v_i^* as the
dual-basis contraction, so every algebra element is a concrete
2^n x 2^n matrix and equality is decidable.  The canonical involution is
the adjoint of the subset pairing, and the 4^n ordered generator
products form a monomial basis with a division-free coordinate
decomposition (their leading entries are +-1 and triangular by degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, UnsupportedRingError, UsageError
from .exterior import mask_size, sign_exponent
from .forms import HyperbolicSpace, b_wedge_gram
from .linalg import Matrix, signed_perm_inverse
from .reporting import CheckOutcome
from .rings import Element, Ring

# --- sparse columns -------------------------------------------------------
#
# Internal format for hot paths: a matrix is a list of per-column dicts
# {row: value}.  Generator matrices have at most one entry per column, so
# generator words and random Phi images multiply in near-linear time.


def _szero(dim: int) -> list[dict]:
    return [dict() for _ in range(dim)]


def _sidentity(ring: Ring, dim: int) -> list[dict]:
    return [{c: ring.one} for c in range(dim)]


def _smul(ring: Ring, a: list[dict], b: list[dict]) -> list[dict]:
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    out = []
    for bcol in b:
        acc: dict = {}
        for r, v in bcol.items():
            for rr, vv in a[r].items():
                w = mul(vv, v)
                cur = acc.get(rr)
                if cur is None:
                    acc[rr] = w
                else:
                    acc[rr] = add(cur, w)
        out.append({r: v for r, v in acc.items() if not is_zero(v)})
    return out


def _saxpy(ring: Ring, acc: list[dict], c: Element, m: list[dict]) -> None:
    """acc += c * m, in place."""
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    if is_zero(c):
        return
    for col, mcol in enumerate(m):
        accc = acc[col]
        for r, v in mcol.items():
            w = mul(c, v)
            cur = accc.get(r)
            total = w if cur is None else add(cur, w)
            if is_zero(total):
                accc.pop(r, None)
            else:
                accc[r] = total


def _sfrom_matrix(m: Matrix) -> list[dict]:
    ring = m.ring
    out = _szero(m.cols)
    for r in range(m.rows):
        base = r * m.cols
        for c in range(m.cols):
            v = m.entries[base + c]
            if not ring.is_zero(v):
                out[c][r] = v
    return out


def _sto_matrix(ring: Ring, dim: int, cols: list[dict]) -> Matrix:
    m = Matrix.zeros(ring, dim, dim)
    for c, col in enumerate(cols):
        for r, v in col.items():
            m.entries[r * dim + c] = v
    return m


def _sequal(ring: Ring, a: list[dict], b: list[dict]) -> bool:
    for acol, bcol in zip(a, b):
        if set(acol) != set(bcol):
            return False
        for r, v in acol.items():
            if not ring.eq(v, bcol[r]):
                return False
    return True


# --- generators -----------------------------------------------------------


def generator_label(n: int, k: int) -> str:
    """Label of the k-th generator in the order v_1 .. v_n, v_n^* .. v_1^*."""
    if not 0 <= k < 2 * n:
        raise UsageError(f"generator index {k} outside 0..{2 * n - 1}")
    return f"v{k + 1}" if k < n else f"v{2 * n - k}*"


def _generator_cols(ring: Ring, n: int, k: int) -> list[dict]:
    dim = 1 << n
    cols = _szero(dim)
    if k < n:
        bit = 1 << k  # left multiplication by v_{k+1}
        for col in range(dim):
            if col & bit:
                continue
            cols[col][col | bit] = ring.sign(mask_size(col & (bit - 1)))
    else:
        bit = 1 << (2 * n - k - 1)  # contraction by the matching dual vector
        for col in range(dim):
            if not col & bit:
                continue
            cols[col][col & ~bit] = ring.sign(mask_size(col & (bit - 1)))
    return cols


_GEN_CACHE: dict = {}


def generator_sparse(ring: Ring, n: int, k: int) -> list[dict]:
    key = (ring, n, k)
    if key not in _GEN_CACHE:
        _GEN_CACHE[key] = _generator_cols(ring, n, k)
    return _GEN_CACHE[key]


def generator_matrix(ring: Ring, n: int, k: int) -> Matrix:
    return _sto_matrix(ring, 1 << n, generator_sparse(ring, n, k))


# --- algebra elements -----------------------------------------------------


@dataclass(frozen=True)
class CliffordElement:
    """An element of the algebra as a 2^n x 2^n matrix acting on wedge V."""

    ring: Ring
    n: int
    matrix: Matrix

    def __post_init__(self):
        dim = 1 << self.n
        if self.matrix.rows != dim or self.matrix.cols != dim:
            raise UsageError(f"matrix must be {dim}x{dim} for n={self.n}")

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "CliffordElement":
        return cls(ring, n, Matrix.identity(ring, 1 << n))

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "CliffordElement":
        return cls(ring, n, Matrix.zeros(ring, 1 << n, 1 << n))

    def _wrap(self, m: Matrix) -> "CliffordElement":
        return CliffordElement(self.ring, self.n, m)

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        return self._wrap(self.matrix + other.matrix)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self._wrap(self.matrix - other.matrix)

    def __neg__(self) -> "CliffordElement":
        return self._wrap(-self.matrix)

    def __mul__(self, other: "CliffordElement") -> "CliffordElement":
        return self._wrap(self.matrix * other.matrix)

    def scale(self, c: Element) -> "CliffordElement":
        return self._wrap(self.matrix.scale(c))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CliffordElement)
            and self.n == other.n
            and self.matrix == other.matrix
        )

    @property
    def parity(self) -> str:
        """'even', 'odd' or 'mixed' from the matrix support; zero is even."""
        ring = self.ring
        m = self.matrix
        has_even = has_odd = False
        for r in range(m.rows):
            rp = mask_size(r) & 1
            base = r * m.cols
            for c in range(m.cols):
                if ring.is_zero(m.entries[base + c]):
                    continue
                if (mask_size(c) & 1) == rp:
                    has_even = True
                else:
                    has_odd = True
        if has_even and has_odd:
            return "mixed"
        return "odd" if has_odd else "even"

    def __repr__(self) -> str:
        return f"CliffordElement(n={self.n}, {self.matrix!r})"


def phi_word(ring: Ring, n: int, labels: Sequence[str]) -> CliffordElement:
    """Image of a generator word, e.g. ("v1", "v2*"), as a matrix product."""
    hs = HyperbolicSpace(ring, n)
    cols = _sidentity(ring, 1 << n)
    for label in labels:
        cols = _smul(ring, cols, generator_sparse(ring, n, hs.index_of(label)))
    return CliffordElement(ring, n, _sto_matrix(ring, 1 << n, cols))


def phi_vector(ring: Ring, n: int, coeffs: Sequence[Element]) -> CliffordElement:
    """Image of a module element of H(V): the sum of scaled generators."""
    if len(coeffs) != 2 * n:
        raise UsageError(f"expected {2 * n} coefficients")
    dim = 1 << n
    m = Matrix.zeros(ring, dim, dim)
    for k, c in enumerate(coeffs):
        if ring.is_zero(c):
            continue
        for col, gcol in enumerate(generator_sparse(ring, n, k)):
            for r, v in gcol.items():
                idx = r * dim + col
                m.entries[idx] = ring.add(m.entries[idx], ring.mul(c, v))
    return CliffordElement(ring, n, m)


def _phi_vector_sparse(ring: Ring, n: int, coeffs: Sequence[Element]) -> list[dict]:
    dim = 1 << n
    acc = _szero(dim)
    for k, c in enumerate(coeffs):
        _saxpy(ring, acc, c, generator_sparse(ring, n, k))
    return acc


# --- canonical involution and trace ---------------------------------------

_GRAM_CACHE: dict = {}


def _gram_pair(ring: Ring, n: int) -> tuple[Matrix, Matrix]:
    key = (ring, n)
    if key not in _GRAM_CACHE:
        g = b_wedge_gram(ring, n)
        _GRAM_CACHE[key] = (g, signed_perm_inverse(g))
    return _GRAM_CACHE[key]


def canonical_involution(x: CliffordElement) -> CliffordElement:
    """Adjoint involution of the subset pairing: G^-1 x^T G."""
    g, ginv = _gram_pair(x.ring, x.n)
    return CliffordElement(x.ring, x.n, ginv * x.matrix.transpose() * g)


def tau_unit(n: int, a: int, b: int) -> tuple[int, int, int]:
    """Image of the matrix unit E_ab under the involution.

    Returns (sign parity, row, col): tau(E_ab) = +-E_{b^c, a^c} with sign
    (-1)**(sign parity) determined by the Gram signs of a and b.
    """
    full = (1 << n) - 1
    parity = (sign_exponent(a) + sign_exponent(b)) & 1
    return parity, full ^ b, full ^ a


def _tau_sparse(ring: Ring, n: int, cols: list[dict]) -> list[dict]:
    out = _szero(1 << n)
    for c, col in enumerate(cols):
        for r, v in col.items():
            parity, rr, cc = tau_unit(n, r, c)
            out[cc][rr] = ring.neg(v) if parity else v
    return out


def reduced_trace(x: CliffordElement) -> Element:
    """The matrix trace; on the even part this is the sum of block traces."""
    return x.matrix.trace()


# --- parity blocks ---------------------------------------------------------


def parity_masks(n: int) -> tuple[list[int], list[int]]:
    """Masks of even and of odd popcount, each in ascending order."""
    even = [m for m in range(1 << n) if mask_size(m) % 2 == 0]
    odd = [m for m in range(1 << n) if mask_size(m) % 2 == 1]
    return even, odd


def even_blocks(x: CliffordElement) -> tuple[Matrix, Matrix]:
    """The two diagonal blocks of an even element, in parity-sorted order."""
    if x.parity != "even":
        raise UsageError("parity blocks need an even element")
    even, odd = parity_masks(x.n)
    ring = x.ring
    blocks = []
    for masks in (even, odd):
        b = Matrix.zeros(ring, len(masks), len(masks))
        for i, r in enumerate(masks):
            for j, c in enumerate(masks):
                b.put(i, j, x.matrix.at(r, c))
        blocks.append(b)
    return blocks[0], blocks[1]


def embed_blocks(ring: Ring, n: int, block_even: Matrix, block_odd: Matrix) -> CliffordElement:
    """Assemble an even element from its two parity blocks."""
    even, odd = parity_masks(n)
    dim = 1 << n
    m = Matrix.zeros(ring, dim, dim)
    for masks, block in ((even, block_even), (odd, block_odd)):
        if block.rows != len(masks) or block.cols != len(masks):
            raise UsageError("block size does not match the parity subspace")
        for i, r in enumerate(masks):
            for j, c in enumerate(masks):
                m.put(r, c, block.at(i, j))
    return CliffordElement(ring, n, m)


def flatten_even(x: CliffordElement) -> list:
    """An even element as a vector of length 2 * 4^(n-1): both blocks row-major."""
    b0, b1 = even_blocks(x)
    return list(b0.entries) + list(b1.entries)


def unflatten_even(ring: Ring, n: int, vec: Sequence[Element]) -> CliffordElement:
    half = 1 << (n - 1)
    if len(vec) != 2 * half * half:
        raise UsageError(f"expected a vector of length {2 * half * half}")
    b0 = Matrix(ring, half, half, list(vec[: half * half]))
    b1 = Matrix(ring, half, half, list(vec[half * half :]))
    return embed_blocks(ring, n, b0, b1)


# --- relation suite ---------------------------------------------------------


def relation_suite(ring: Ring, n: int, rng=None, trials: int = 100) -> CheckOutcome:
    """Check the defining relations of the algebra as matrix identities.

    The six generator families: squares of the v_i and of the v_i^* vanish,
    distinct v's anticommute, distinct duals anticommute, v_i v_i^* is
    1 - v_i^* v_i, and mixed pairs with distinct indices anticommute.
    On top of that, Phi(m)^2 = q(m) * Id for random module elements m.
    """
    out = CheckOutcome()
    hs = HyperbolicSpace(ring, n)
    dim = 1 << n
    gens = [generator_sparse(ring, n, k) for k in range(2 * n)]
    zero = _szero(dim)

    def check(name: str, got: list[dict], want: list[dict]) -> None:
        if not _sequal(ring, got, want):
            got_m = _sto_matrix(ring, dim, got)
            want_m = _sto_matrix(ring, dim, want)
            out.fail(f"{name}: got {got_m!r}, want {want_m!r}")

    def sneg(cols: list[dict]) -> list[dict]:
        return [{r: ring.neg(v) for r, v in col.items()} for col in cols]

    for i in range(n):
        vi, di = gens[i], gens[hs.dual_index(i + 1)]
        check(f"v{i + 1}^2 = 0", _smul(ring, vi, vi), zero)
        check(f"(v{i + 1}*)^2 = 0", _smul(ring, di, di), zero)
        vd = _smul(ring, vi, di)
        dv = _smul(ring, di, vi)
        one_minus_dv = [dict(col) for col in sneg(dv)]
        for c in range(dim):
            cur = one_minus_dv[c].get(c, ring.zero)
            total = ring.add(cur, ring.one)
            if ring.is_zero(total):
                one_minus_dv[c].pop(c, None)
            else:
                one_minus_dv[c][c] = total
        check(f"v{i + 1} v{i + 1}* = 1 - v{i + 1}* v{i + 1}", vd, one_minus_dv)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            vi, vj = gens[i], gens[j]
            di = gens[hs.dual_index(i + 1)]
            dj = gens[hs.dual_index(j + 1)]
            if i < j:
                check(
                    f"v{i + 1} v{j + 1} = -v{j + 1} v{i + 1}",
                    _smul(ring, vi, vj),
                    sneg(_smul(ring, vj, vi)),
                )
                check(
                    f"v{i + 1}* v{j + 1}* = -v{j + 1}* v{i + 1}*",
                    _smul(ring, di, dj),
                    sneg(_smul(ring, dj, di)),
                )
            check(
                f"v{i + 1} v{j + 1}* = -v{j + 1}* v{i + 1}",
                _smul(ring, vi, dj),
                sneg(_smul(ring, dj, vi)),
            )

    if rng is not None:
        for t in range(trials):
            coeffs = [ring.sample(rng) for _ in range(2 * n)]
            phi = _phi_vector_sparse(ring, n, coeffs)
            square = _smul(ring, phi, phi)
            qm = hs.q(coeffs)
            want = _szero(dim) if ring.is_zero(qm) else [{c: qm} for c in range(dim)]
            if not _sequal(ring, square, want):
                out.fail(
                    f"Phi(m)^2 != q(m) Id for m={coeffs!r} (trial {t}): "
                    f"q(m)={ring.show(qm)}, square={_sto_matrix(ring, dim, square)!r}"
                )
    if out.passed:
        out.note(f"relations hold for n={n} over {ring.name}" + (
            f" ({trials} random module elements)" if rng is not None else ""
        ))
    return out


# --- monomial basis ---------------------------------------------------------


class MonomialBasis:
    """The 4^n ordered products of distinct generators, with decomposition.

    Subsets of the 2n generators are indexed by bitmask (bit k is the k-th
    generator in the fixed order), and the monomial is the product in
    ascending generator order.  Each monomial has a leading matrix entry
    of +-1 that no monomial of equal or higher degree shares, so peeling
    by ascending degree recovers coordinates without any division.
    """

    def __init__(self, ring: Ring, n: int):
        if not ring.is_field:
            raise UnsupportedRingError(f"monomial decomposition needs a field, not {ring.name}")
        if n > 4:
            raise UsageError("monomial decomposition is sized for n <= 4")
        self.ring = ring
        self.n = n
        self.size = 1 << (2 * n)
        self.dim = 1 << n
        self._sparse: list[list[dict]] = [_sidentity(ring, self.dim)]
        for mask in range(1, self.size):
            low = (mask & -mask).bit_length() - 1
            rest = self._sparse[mask & (mask - 1)]
            self._sparse.append(_smul(ring, generator_sparse(ring, n, low), rest))
        self._leads = [self._lead_entry(mask) for mask in range(self.size)]
        self.peel_order = sorted(range(self.size), key=lambda m: (mask_size(m), m))

    def _lead_entry(self, mask: int) -> tuple[int, int, Element]:
        n = self.n
        row = mask & ((1 << n) - 1)  # plain generators map to their wedge bits
        col = 0
        for k in range(n, 2 * n):
            if mask >> k & 1:
                col |= 1 << (2 * n - k - 1)
        val = self._sparse[mask][col][row]
        return row, col, val

    def monomial_sparse(self, mask: int) -> list[dict]:
        return self._sparse[mask]

    def monomial(self, mask: int) -> CliffordElement:
        return CliffordElement(self.ring, self.n, _sto_matrix(self.ring, self.dim, self._sparse[mask]))

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(
            generator_label(self.n, k) for k in range(2 * self.n) if mask >> k & 1
        )

    def decompose(self, x: CliffordElement) -> list:
        """Coordinates of x in the monomial basis, indexed by subset mask."""
        return self.decompose_sparse(_sfrom_matrix(x.matrix))

    def decompose_sparse(self, cols: list[dict]) -> list:
        ring = self.ring
        residual = [dict(col) for col in cols]
        coords = [ring.zero] * self.size
        for mask in self.peel_order:
            row, col, lead = self._leads[mask]
            entry = residual[col].get(row)
            if entry is None:
                continue
            c = entry if ring.is_one(lead) else ring.neg(entry)
            coords[mask] = c
            _saxpy(ring, residual, ring.neg(c), self._sparse[mask])
        if any(residual[c] for c in range(self.dim)):
            raise DomainError("decomposition left a nonzero residual")
        return coords

    def recompose(self, coords: Sequence[Element]) -> CliffordElement:
        if len(coords) != self.size:
            raise UsageError(f"expected {self.size} coordinates")
        acc = _szero(self.dim)
        for mask, c in enumerate(coords):
            _saxpy(self.ring, acc, c, self._sparse[mask])
        return CliffordElement(self.ring, self.n, _sto_matrix(self.ring, self.dim, acc))


_MONOMIAL_CACHE: dict = {}


def monomial_basis(ring: Ring, n: int) -> MonomialBasis:
    key = (ring, n)
    if key not in _MONOMIAL_CACHE:
        _MONOMIAL_CACHE[key] = MonomialBasis(ring, n)
    return _MONOMIAL_CACHE[key]


def decompose_monomial(x: CliffordElement) -> list:
    """Coordinates of x over the monomial basis (field rings, n <= 4)."""
    return monomial_basis(x.ring, x.n).decompose(x)


def involution_suite(ring: Ring, n: int, rng=None, pairs: int = 100) -> CheckOutcome:
    """The involution fixes every generator, squares to the identity on all
    matrix units, and is anti-multiplicative on random pairs (n <= 4).
    """
    out = CheckOutcome()
    for k in range(2 * n):
        g = CliffordElement(ring, n, generator_matrix(ring, n, k))
        if canonical_involution(g) != g:
            out.fail(f"involution moves generator {generator_label(n, k)}")
    dim = 1 << n
    for a in range(dim):
        for b in range(dim):
            p1, r1, c1 = tau_unit(n, a, b)
            p2, r2, c2 = tau_unit(n, r1, c1)
            if (r2, c2) != (a, b) or (p1 + p2) % 2 != 0:
                out.fail(f"involution does not square to the identity on unit ({a}, {b})")
    if rng is not None and n <= 4:
        from .sampling import random_clifford_element

        for t in range(pairs):
            x = random_clifford_element(ring, n, rng)
            y = random_clifford_element(ring, n, rng)
            if canonical_involution(x * y) != canonical_involution(y) * canonical_involution(x):
                out.fail(f"involution not anti-multiplicative on random pair {t}")
    if out.passed:
        extra = f"; anti-multiplicative on {pairs} random pairs" if rng is not None and n <= 4 else ""
        out.note(f"involution fixes all generators and squares to the identity (n={n}){extra}")
    return out


# --- involution type on the even part ---------------------------------------


@dataclass(frozen=True)
class EvenInvolutionReport:
    n: int
    ring: Ring
    center_fixed: bool
    block_labels: frozenset[str]
    involution_labels: frozenset[str]

    @property
    def verdict(self) -> str:
        if not self.center_fixed:
            return "center-nontrivial"
        return "+".join(sorted(self.involution_labels)) or "unclassified"


def classify_even_involution(ring: Ring, n: int) -> EvenInvolutionReport:
    """Type of the involution restricted to the even part.

    The center of the even algebra is spanned by the two parity-block
    identities; the involution either fixes both (n even) or swaps them
    (n odd).  When it fixes them, the restricted Gram blocks classify it:
    symmetric blocks give an orthogonal involution, alternating blocks a
    symplectic one, and in characteristic 2 both can hold at once.
    """
    if n < 2:
        raise UsageError("the even involution type needs n >= 2")
    from .forms import classify_bilinear

    half = 1 << (n - 1)
    ident = Matrix.identity(ring, half)
    zero = Matrix.zeros(ring, half, half)
    e0 = embed_blocks(ring, n, ident, zero)
    e1 = embed_blocks(ring, n, zero, ident)
    center_fixed = (
        canonical_involution(e0) == e0 and canonical_involution(e1) == e1
    )

    gram = b_wedge_gram(ring, n)
    even, odd = parity_masks(n)
    labels: set[str] = set()
    if center_fixed:
        for masks in (even, odd):
            block = Matrix.zeros(ring, len(masks), len(masks))
            for i, r in enumerate(masks):
                for j, c in enumerate(masks):
                    block.put(i, j, gram.at(r, c))
            labels |= classify_bilinear(block)
    involution = set()
    if "symmetric" in labels:
        involution.add("orthogonal")
    if "alternating" in labels:
        involution.add("symplectic")
    return EvenInvolutionReport(
        n=n,
        ring=ring,
        center_fixed=center_fixed,
        block_labels=frozenset(labels),
        involution_labels=frozenset(involution),
    )


def involution_type_matches(report: EvenInvolutionReport) -> tuple[bool, str]:
    """Compare the computed even-involution type with the rank prediction:
    odd n moves the center, n = 0 mod 4 is orthogonal, n = 2 mod 4 is
    symplectic and additionally orthogonal in characteristic 2.
    """
    n, ring = report.n, report.ring
    if n % 2 == 1:
        return (not report.center_fixed), "center-nontrivial"
    if not report.center_fixed:
        return False, "center unexpectedly moved for even n"
    if n % 4 == 0:
        want = "orthogonal"
        return ("orthogonal" in report.involution_labels), want
    want = "symplectic+orthogonal" if ring.char == 2 else "symplectic"
    ok = "symplectic" in report.involution_labels and (
        ring.char != 2 or "orthogonal" in report.involution_labels
    )
    return ok, want

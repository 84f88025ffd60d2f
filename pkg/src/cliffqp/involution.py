"""Symmetric and alternating subspaces of the even algebra, and
semi-traces built from class representatives.

The involution permutes matrix units up to sign, so the image of Id - tau
and the kernel of Id - tau both have explicit bases indexed by unit
orbits; no elimination is needed to write them down, and membership tests
still run through exact elimination.  A semi-trace is determined by a
representative l with l + tau(l) = 1 and evaluates symmetric elements via
the reduced trace of l * s; two representatives give the same semi-trace
exactly when they differ by an alternating element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clifford import (
    CliffordElement,
    canonical_involution,
    flatten_even,
    parity_masks,
    reduced_trace,
    tau_unit,
)
from .errors import DomainError, UnsupportedRingError, UsageError
from .linalg import SpanChecker
from .reporting import CheckOutcome
from .rings import Element, Ring

# A unit combo is a list of (coefficient, (row mask, col mask)) pairs; it
# stands for a sum of scaled matrix units inside the even algebra.
UnitCombo = list[tuple[Element, tuple[int, int]]]


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent unit combos spanning a subspace of the algebra;
    by default everything lives in the even part."""

    ring: Ring
    n: int
    combos: tuple[UnitCombo, ...]
    even_only: bool = True

    @property
    def ambient_dim(self) -> int:
        if self.even_only:
            return 2 * (1 << (self.n - 1)) ** 2
        return (1 << self.n) ** 2

    def __len__(self) -> int:
        return len(self.combos)

    def elements(self) -> list[CliffordElement]:
        return [self.element(i) for i in range(len(self.combos))]

    def element(self, i: int) -> CliffordElement:
        from .linalg import Matrix

        dim = 1 << self.n
        m = Matrix.zeros(self.ring, dim, dim)
        for coef, (r, c) in self.combos[i]:
            m.put(r, c, self.ring.add(m.at(r, c), coef))
        return CliffordElement(self.ring, self.n, m)

    def vectors(self) -> list[list]:
        if self.even_only:
            return [flatten_even(e) for e in self.elements()]
        return [list(e.matrix.entries) for e in self.elements()]


def _even_units(n: int) -> list[tuple[int, int]]:
    """Matrix-unit positions inside the even algebra, row-major per block."""
    even, odd = parity_masks(n)
    units = []
    for masks in (even, odd):
        for r in masks:
            for c in masks:
                units.append((r, c))
    return units


def _all_units(n: int) -> list[tuple[int, int]]:
    dim = 1 << n
    return [(r, c) for r in range(dim) for c in range(dim)]


def _unit_orbits(ring: Ring, n: int, even_only: bool):
    """Orbits of matrix units under the involution, with the unit signs.

    Yields (kind, data): kind 'fixed' with (unit, sign) for tau-eigenunits,
    kind 'pair' with (unit, partner, sign) where tau(E_unit) = sign * E_partner.
    """
    units = _even_units(n) if even_only else _all_units(n)
    position = {u: i for i, u in enumerate(units)}
    for i, (a, b) in enumerate(units):
        parity, r, c = tau_unit(n, a, b)
        partner = (r, c)
        sign = ring.sign(parity)
        if partner == (a, b):
            yield "fixed", ((a, b), sign)
        elif position[partner] > i:
            yield "pair", ((a, b), partner, sign)


def alt_basis(ring: Ring, n: int, even_only: bool = True) -> SubspaceBasis:
    """Basis of the alternating elements, the image of Id - tau.

    Each unit orbit contributes independently: a two-element orbit gives
    E - sign * tau-partner, and a fixed unit contributes 2E only when its
    sign is -1 (so never in characteristic 2).
    """
    if not ring.is_field:
        raise UnsupportedRingError(f"subspace bases need a field, not {ring.name}")
    combos: list[UnitCombo] = []
    two = ring.from_int(2)
    for kind, data in _unit_orbits(ring, n, even_only):
        if kind == "pair":
            unit, partner, sign = data
            combos.append([(ring.one, unit), (ring.neg(sign), partner)])
        else:
            unit, sign = data
            if not ring.eq(sign, ring.one):
                combos.append([(two, unit)])
    return SubspaceBasis(ring, n, tuple(combos), even_only)


def sym_basis(ring: Ring, n: int, even_only: bool = True) -> SubspaceBasis:
    """Basis of the symmetric elements, the kernel of Id - tau."""
    if not ring.is_field:
        raise UnsupportedRingError(f"subspace bases need a field, not {ring.name}")
    combos: list[UnitCombo] = []
    for kind, data in _unit_orbits(ring, n, even_only):
        if kind == "pair":
            unit, partner, sign = data
            combos.append([(ring.one, unit), (sign, partner)])
        else:
            unit, sign = data
            if ring.eq(sign, ring.one):
                combos.append([(ring.one, unit)])
    return SubspaceBasis(ring, n, tuple(combos), even_only)


_ALT_CHECKER_CACHE: dict = {}


def _alt_checker(ring: Ring, n: int) -> SpanChecker:
    key = (ring, n)
    if key not in _ALT_CHECKER_CACHE:
        basis = alt_basis(ring, n)
        _ALT_CHECKER_CACHE[key] = SpanChecker(ring, basis.vectors())
    return _ALT_CHECKER_CACHE[key]


def in_alternating(x: CliffordElement) -> bool:
    """Membership of an even element in the alternating subspace."""
    if not x.ring.is_field:
        raise UnsupportedRingError(f"membership tests need a field, not {x.ring.name}")
    if x.parity != "even":
        raise UsageError("alternating membership is defined for even elements")
    return _alt_checker(x.ring, x.n).contains(flatten_even(x))


class SemiTrace:
    """A semi-trace on the symmetric elements of the even algebra.

    Carried by a representative l with l + tau(l) = 1; evaluation is
    s -> trace(l * s).  Replacing l by l + a for alternating a does not
    change any value on symmetric elements, so equality is decided by
    agreement on a symmetric basis rather than by comparing representatives.
    """

    def __init__(self, rep: CliffordElement):
        ring, n = rep.ring, rep.n
        if rep.parity != "even":
            raise DomainError("a semi-trace representative must be even")
        ident = CliffordElement.identity(ring, n)
        if rep + canonical_involution(rep) != ident:
            raise DomainError("representative does not satisfy l + tau(l) = 1")
        self.ring = ring
        self.n = n
        self.rep = rep

    def evaluate(self, s: CliffordElement) -> Element:
        """Value on a symmetric element: the reduced trace of rep * s."""
        return reduced_trace(self.rep * s)

    def evaluate_combo(self, combo: UnitCombo) -> Element:
        """Fast path on a sum of matrix units: trace(rep * E_ab) = rep[b, a]."""
        ring = self.ring
        total = ring.zero
        m = self.rep.matrix
        for coef, (r, c) in combo:
            total = ring.add(total, ring.mul(coef, m.at(c, r)))
        return total

    def agrees_with(self, other: "SemiTrace") -> bool:
        """Equality as semi-traces: agreement on the symmetric basis."""
        if self.ring != other.ring or self.n != other.n:
            return False
        for combo in sym_basis(self.ring, self.n).combos:
            if not self.ring.eq(self.evaluate_combo(combo), other.evaluate_combo(combo)):
                return False
        return True


def semi_trace_from(rep: CliffordElement) -> SemiTrace:
    """Build the semi-trace s -> trace(rep * s); validates the representative."""
    return SemiTrace(rep)


def trace_orthogonality(ring: Ring, n: int) -> CheckOutcome:
    """trace(a * s) = 0 for every alternating a and symmetric s basis vector."""
    out = CheckOutcome()
    alt = alt_basis(ring, n)
    sym = sym_basis(ring, n)
    checked = 0
    for acombo in alt.combos:
        for scombo in sym.combos:
            # trace(E_ab E_cd) = [b == c][a == d]
            total = ring.zero
            for ca, (ra, cca) in acombo:
                for cs, (rs, ccs) in scombo:
                    if cca == rs and ra == ccs:
                        total = ring.add(total, ring.mul(ca, cs))
            checked += 1
            if not ring.is_zero(total):
                out.fail(
                    f"trace pairing nonzero: alt {acombo!r} vs sym {scombo!r} "
                    f"-> {ring.show(total)}"
                )
    if out.passed:
        out.note(f"{checked} alt x sym trace pairings vanish for n={n} over {ring.name}")
    return out

"""Exact split Clifford algebras of hyperbolic forms over small rings.

The package builds the algebra faithfully as endomorphisms of the
exterior algebra, equips it with its canonical involution and the
canonical semi-trace, verifies invariance under the orthogonal group,
and carries the exhaustive degree-4 counterexample over GF(4).
"""

from .canonical import (
    canonical_map_c,
    canonical_semitrace,
    correspondence_with_q_wedge,
    degree4_no_canonical,
    rho_xi_check,
    semitrace_eligibility,
)
from .clifford import (
    CliffordElement,
    MonomialBasis,
    canonical_involution,
    classify_even_involution,
    decompose_monomial,
    phi_vector,
    phi_word,
    reduced_trace,
    relation_suite,
)
from .errors import DomainError, EligibilityError, UnsupportedRingError, UsageError
from .exterior import ExteriorVector, SubsetIndex, subset_sign, wedge_basis
from .forms import (
    HyperbolicSpace,
    QuadraticForm,
    b_wedge,
    b_wedge_gram,
    classify_bilinear,
    q_wedge,
)
from .group import clifford_action, is_orthogonal, pgo_invariance
from .involution import (
    SemiTrace,
    SubspaceBasis,
    alt_basis,
    in_alternating,
    semi_trace_from,
    sym_basis,
    trace_orthogonality,
)
from .linalg import Matrix, image_basis, in_span, kernel_basis, rank, signed_perm_inverse, solve
from .rings import GF2, GF3, GF4, GF5, QQ, ZZ, Ring, RingMorphism, gf2_into_gf4, ring_by_name

__all__ = [
    "CliffordElement",
    "DomainError",
    "EligibilityError",
    "ExteriorVector",
    "GF2",
    "GF3",
    "GF4",
    "GF5",
    "HyperbolicSpace",
    "Matrix",
    "MonomialBasis",
    "QQ",
    "QuadraticForm",
    "Ring",
    "RingMorphism",
    "SemiTrace",
    "SubsetIndex",
    "SubspaceBasis",
    "UnsupportedRingError",
    "UsageError",
    "ZZ",
    "alt_basis",
    "b_wedge",
    "b_wedge_gram",
    "canonical_involution",
    "canonical_map_c",
    "canonical_semitrace",
    "classify_bilinear",
    "classify_even_involution",
    "clifford_action",
    "correspondence_with_q_wedge",
    "decompose_monomial",
    "degree4_no_canonical",
    "gf2_into_gf4",
    "image_basis",
    "in_alternating",
    "in_span",
    "is_orthogonal",
    "kernel_basis",
    "pgo_invariance",
    "phi_vector",
    "phi_word",
    "q_wedge",
    "rank",
    "reduced_trace",
    "relation_suite",
    "rho_xi_check",
    "ring_by_name",
    "semi_trace_from",
    "semitrace_eligibility",
    "signed_perm_inverse",
    "solve",
    "subset_sign",
    "sym_basis",
    "trace_orthogonality",
    "wedge_basis",
]

"""Exact incidence algebras of finite preorders and their derivation-type maps."""
from .algebra import (
    IncidenceAlgebra,
    IncidenceElement,
    LinearMap,
    apply,
    convolve,
    inner_derivation,
    left_multiplication,
    map_add,
    map_scale,
    map_sub,
)
from .decomposition import (
    DecompositionCertificate,
    build_phi,
    certify,
    extract_relating_derivation,
    strip_reverse_components,
    verify_c_relations,
)
from .errors import HypothesisError, IncalgError, InputError, InvariantViolation
from .predicates import (
    GenPair,
    IdentityReport,
    is_derivation,
    is_generalized_derivation,
    is_generalized_jordan_derivation,
    is_jordan_derivation,
    verify_basis_identities,
    verify_generalized_leibniz,
    verify_idempotent_identities,
    verify_lemma1,
)
from .preorder import Preorder, antichain, chain, closure
from .ring import RingSpec, Scalar
from .solver import build_system, compare_spaces, nullspace, sample_solution, solve

__version__ = "0.1.0"

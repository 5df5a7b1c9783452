"""Bi-Cohen-Macaulay simplicial complexes: duality, homology, Betti numbers, constructions."""

from .analysis import ComplexProfile, profile
from .betti import BettiTable, eagon_reiner_check, has_linear_resolution, hochster_betti
from .certify import Certificate, certify
from .complex import (
    SimplicialComplex,
    alexander_dual,
    boundary_of_simplex,
    cone,
    empty_simplex,
    faces,
    frame_invariant_c,
    from_facets,
    from_minimal_nonfaces,
    full_simplex,
    is_cone,
    link,
    minimal_nonfaces,
    relabel,
    restriction,
)
from .constructions import (
    LatticePath,
    PathMatrixSpec,
    biCM_noncone,
    d_tree,
    identify_diagonals,
    iterated_cone,
    lex_shelling_order,
    path_complexes,
    path_dichotomy,
    rp2_six,
    skeleton_complex,
)
from .errors import ComplexError, GuardExceeded
from .explorer import SearchReport, all_complexes, cone_bound_audit, enumerate_type, verify_c1_bound
from .fvectors import (
    chi_O,
    cone_bound,
    dual_f,
    euler_char_S,
    f_from_h,
    f_polynomial,
    f_sc,
    grothendieck_class,
    h_vector,
    hilbert_series_S,
    type_of,
)
from .homology import FieldSpec, find_shelling, is_biCM, is_CM, is_shelling, reduced_homology
from .io import parse_complex, serialize_complex
from .isomorphism import canonical_form, is_isomorphic

__version__ = "0.1.0"

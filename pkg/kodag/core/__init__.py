from .chains import Chain, ChainSet, HyperBoxPoint, IdentityReport, check_markov, check_markov_poset, \
    corollary_check, count_interval_chains, enumerate_layer_chains, fnomial_via_max, hyperbox_decode, \
    hyperbox_encode, hyperbox_points, layer_chain_count, theorem1_check, theorem3_check, theorem3_general
from .errors import *
from .fsequence import AdmissibilityReport, FNomialValue, Sequence, cumulative, falling, ffactorial, fnomial, \
    is_admissible, parse_sequence, pascal_binomial, random_explicit_sequences, term
from .incidence import BlockReport, ClosedFormResult, KrotonVariants, Mismatch, coding_matrix, eta, eta_inverse, \
    first_mismatch, krot_mobius, krot_mobius_matrix, kroton, kroton_alternating, kroton_alternating_literal, \
    kroton_recurrence, kroton_variants, l_logic, max_inverse, max_matrix, mobius_closed_form, mobius_inverse, \
    mobius_recurrence, validate_block_structure, zeta_block_formula, zeta_closure, zeta_formula_dziemianczuk, \
    zeta_formula_kwasniewski, zeta_formula_krot, zeta_strict
from .lascala import lascala_rows, render_lascala
from .matrix import CodingMatrix, IncidenceMatrix, KrotonValue, boolean_dot, exact_dot
from .poset import GradedPoset, NodeRef, adjacency, block_product, cobweb, cover_matrix, grid_of, layer, layers, \
    level_of, linear_label, mute_nodes, natural_join, random_poset

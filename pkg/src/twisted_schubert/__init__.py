"""Exact twisted Schubert calculus on integer polynomials."""

from .permutations import (
    Permutation, alpha_beta_pairs, bruhat_leq, canonical_reduced_word, compose,
    cycles, remove_letters_factorization, subwords_with_product,
)
from .polyring import (
    MultiPoly, act_permutation, divided_difference, elementary, homogeneous,
    is_monomial_nonnegative, min_degree_part, parse_poly, substitute_x_by_y,
    twisted_op,
)
from .operators import (
    OperatorExpr, apply, leibniz_expand, skew_naive, twisted_skew_naive,
    twisted_skew_positive,
)
from .symchains import a_set, b_set, pieri_e, pieri_h, tdel_on_elementary, tdel_on_homogeneous
from .pipedreams import PipeDream, reduced_pipe_dreams
from .schubert import (
    billey, chain_from_pipe_dream, double_schubert, double_twisted_schubert,
    double_twisted_schubert_via_chains, expand_schubert, localize, localize_formula,
    schubert, schubert_via_pipedreams, twisted_schubert, twisted_schubert_via_chains,
)

__version__ = "0.1.0"

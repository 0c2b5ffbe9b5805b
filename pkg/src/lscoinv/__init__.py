"""Exact graded character matrices, Lusztig-Shoji factorization, and
modified Kostka polynomials for Weyl groups of types A and B."""

from .lsalgo import GradedMatrix, LSResult, kostka_normalize, ls_factorize
from .ring import LaurentPoly, RatFunc, bar, series_expand
from .springer import Label, OrbitPoset, build_poset, closure_leq, d_value, n_invariant, refinements
from .verify import cartan_determinant, cocharge_kostka_oracle, expand_in_basis, verify_all
from .weyl import CharTable, WeylType, char_table, enumerate_labels, fake_degree, graded_mult, molien_matrix

__version__ = "0.1.0"

__all__ = [
    "CharTable",
    "GradedMatrix",
    "LSResult",
    "Label",
    "LaurentPoly",
    "OrbitPoset",
    "RatFunc",
    "WeylType",
    "bar",
    "build_poset",
    "cartan_determinant",
    "char_table",
    "closure_leq",
    "cocharge_kostka_oracle",
    "d_value",
    "enumerate_labels",
    "expand_in_basis",
    "fake_degree",
    "graded_mult",
    "kostka_normalize",
    "ls_factorize",
    "molien_matrix",
    "n_invariant",
    "refinements",
    "series_expand",
    "verify_all",
]

"""Exact matrix computations in loop-group slices for PGL_n.

The package works over the field Q(t) with exact rational arithmetic:
Gauss factorization of loop-group elements, transversal-slice membership
and projection, one-parameter chart coordinates, moment vectors, the
multiplication/splitting pair, a translation group action, the associated
Poisson and Weyl algebras, and randomized verification suites that check
the structural identities exactly.
"""

from .coordpoly import CoordPoly, monomials_upto, poisson_bracket
from .coordpoly import generators as coord_generators
from .errors import (DecompositionFails, DivisionByZero, InternalError,
                     InvalidCoordinate, NotInChart, NotInOpenLocus,
                     NotInSlice, SamplingExhausted, SingularMatrix,
                     SlicelabError)
from .field import Poly, Rational, RatFunc, T, poly_gcd, rf
from .gauss import (GaussForm, MembershipReport, SlicePoint, coweight,
                    coweight_add, coweight_neg, coweights_pgl_equal,
                    dominance_ok, gauss_decompose, minor_degrees, pgl_equal,
                    project_pi, slice_membership)
from .ihr import (MomentVector, SplitPair, act, chi_alpha, in_nalpha_group,
                  multiply, phi_alpha, shift_point, split_F,
                  translation_matrix, xi_alpha, zeta_alpha)
from .liedata import (Partition, QuiverData, alpha_mu, dominance_leq,
                      equiv_quiver, mv_quiver)
from .matrix import MatQt
from .sampling import (SplitMix64, random_gauss_factors, random_nalpha_group,
                       recipe_coweight, sample_slice, sample_zastava,
                       substream)
from .suites import (SUITE_NAMES, FailureRecord, SuiteReport, mu_palette,
                     run_suite)
from .weyl import NCPoly, nc_comm, semiclassical, symbol
from .weyl import generators as weyl_generators
from .zastava import (CorootInterval, ZastavaPoint, matrix_to_zastava,
                      translate, zastava_to_matrix)

__version__ = "0.1.0"

__all__ = [
    "CoordPoly", "monomials_upto", "poisson_bracket", "coord_generators",
    "DecompositionFails", "DivisionByZero", "InternalError",
    "InvalidCoordinate", "NotInChart", "NotInOpenLocus", "NotInSlice",
    "SamplingExhausted", "SingularMatrix", "SlicelabError",
    "Poly", "Rational", "RatFunc", "T", "poly_gcd", "rf",
    "GaussForm", "MembershipReport", "SlicePoint", "coweight",
    "coweight_add", "coweight_neg", "coweights_pgl_equal", "dominance_ok",
    "gauss_decompose", "minor_degrees", "pgl_equal", "project_pi",
    "slice_membership",
    "MomentVector", "SplitPair", "act", "chi_alpha", "in_nalpha_group",
    "multiply", "phi_alpha", "shift_point", "split_F", "translation_matrix",
    "xi_alpha", "zeta_alpha",
    "Partition", "QuiverData", "alpha_mu", "dominance_leq", "equiv_quiver",
    "mv_quiver",
    "MatQt",
    "SplitMix64", "random_gauss_factors", "random_nalpha_group",
    "recipe_coweight", "sample_slice", "sample_zastava", "substream",
    "SUITE_NAMES", "FailureRecord", "SuiteReport", "mu_palette", "run_suite",
    "NCPoly", "nc_comm", "semiclassical", "symbol", "weyl_generators",
    "CorootInterval", "ZastavaPoint", "matrix_to_zastava", "translate",
    "zastava_to_matrix",
    "__version__",
]

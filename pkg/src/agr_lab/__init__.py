"""Exact classification of Gorenstein, almost Gorenstein and pseudo-Gorenstein
rings among numerical semigroup rings, Stanley-Reisner rings and Veronese
subrings."""

from .complexes import Field, SimplicialComplex, complex_from_facets, h_vector, homology_ranks, parse_complex
from .errors import *  # noqa: F401,F403
from .hilbert import HilbertNumerator
from .report import ClassificationReport
from .semigroup import (
    NumericalSemigroup,
    RelativeIdeal,
    apery_set,
    colength,
    ideal_from_generators,
    ideal_sum,
    pseudo_frobenius,
    semigroup_from_generators,
)
from .semigroup_rings import (
    NotAChain,
    SymmetryClass,
    SymmetryKind,
    canonical_ideal,
    classify_local,
    hilbert_coeffs,
    oversemigroup_chain,
    oversemigroups,
    shifted_canonical_ideal,
    symmetry_class,
)
from .stanley_reisner import classify_sr, is_cohen_macaulay, is_gorenstein_sr
from .veronese import VeroneseInstance, a_invariant_veronese, classify_veronese, veronese_h_numerator

__version__ = "0.1.0"

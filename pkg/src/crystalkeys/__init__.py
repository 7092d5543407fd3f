"""Crystal graphs, Key maps and Demazure characters for finite types A and C
and affine type A."""

from .cartan import (AffineTypeA, CartanDatum, FiniteTypeA, FiniteTypeC,
                     InfinityTypeA, Weight, cartan_datum,
                     simple_reflection_apply)
from .weyl import (all_reduced_words, bruhat_leq, coset_bruhat_split, length,
                   project_coset, project_to_weight, weak_leq, word_reduce,
                   words_equal)
from .engine import (Crystal, CrystalGraph, TensorCrystal, crystal_graph,
                     demazure_enumerate, demazure_membership, dilatation,
                     dilatation_factors, key_left, key_left_reduced, key_right,
                     key_right_reduced, orbit, orbit_word_of,
                     rmatrix_path_transport, tensor_e, tensor_f, to_highest,
                     transport, weyl_act, weyl_act_word)
from .characters import WeightPolynomial, character_of, demazure_character
from .abacus import MultiSymbol, Symbol, as_partition

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

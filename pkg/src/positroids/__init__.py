"""Positroid varieties made computable: bounded affine permutations, juggling
patterns, Grassmann necklaces, k-Bruhat intervals, shellable complexes,
positroid cohomology classes and Gromov-Witten invariants."""
from .affine import (AffinePermutation, CyclicRankMatrix, DecoratedPermutation,
                     affine_bruhat_leq, affine_length, cyclic_rank_matrix, enumerate_bound,
                     is_bounded, juggling_states, mobius, to_siteswap)
from .perms import Permutation, bruhat_leq, demazure_product, k_bruhat_leq, length
from .positroid import Matroid, envelope, necklace_of_matroid, positroid_of_necklace
from .qposet import QClass, canonicalize, f_of_pair, pair_of_f, q_leq
from .symfunc import affine_stanley, positroid_class
from .quantum import f_of_quantum, gromov_witten

__all__ = [
    "AffinePermutation", "CyclicRankMatrix", "DecoratedPermutation", "Matroid", "Permutation",
    "QClass", "affine_bruhat_leq", "affine_length", "affine_stanley", "bruhat_leq",
    "canonicalize", "cyclic_rank_matrix", "demazure_product", "enumerate_bound", "envelope",
    "f_of_pair", "f_of_quantum", "gromov_witten", "is_bounded", "juggling_states",
    "k_bruhat_leq", "length", "mobius", "necklace_of_matroid", "pair_of_f",
    "positroid_class", "positroid_of_necklace", "q_leq", "to_siteswap",
]

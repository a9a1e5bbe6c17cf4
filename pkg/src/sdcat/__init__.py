"""Barycentric subdivision of finite categories and groupoid reconstruction."""
from .errors import SdcatError
from .fincat import (FinCategory, FinGroupoid, Functor, cyclic_group, dihedral_group, discrete,
                     disjoint_union, klein_four, pair_groupoid, poset_interval, zigzag)
from .subdivision import SdCategory, Simplex, build_sd, sd_of_functor
from .oracle import automorphism_group, find_isomorphisms
from .reconstruct import assemble, reconstruct

__all__ = [
    "SdcatError", "FinCategory", "FinGroupoid", "Functor", "cyclic_group", "dihedral_group", "discrete",
    "disjoint_union", "klein_four", "pair_groupoid", "poset_interval", "zigzag", "SdCategory", "Simplex",
    "build_sd", "sd_of_functor", "automorphism_group", "find_isomorphisms", "assemble", "reconstruct",
]

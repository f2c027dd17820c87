"""Preprojective algebras of simply-laced type and their modules."""
from .algebra import PreprojAlgebra, build_preprojective
from .gamma import bz_from_module, d_gamma, n_gamma
from .modules import (LambdaModule, ModuleMap, direct_sum, ext1_dim, hom_basis, hom_dim,
                      injective, is_isomorphic, projective, simple, soc_chain, socle,
                      standard_module, top_dim, zero_module)
from .quiver import DoubledQuiver, default_orientation

__all__ = [
    "PreprojAlgebra", "build_preprojective", "bz_from_module", "d_gamma", "n_gamma",
    "LambdaModule", "ModuleMap", "direct_sum", "ext1_dim", "hom_basis", "hom_dim",
    "injective", "is_isomorphic", "projective", "simple", "soc_chain", "socle",
    "standard_module", "top_dim", "zero_module", "DoubledQuiver", "default_orientation",
]

"""Exact homological algebra over graded-local rings.

Resolutions, Ext and Tor, depth, Matlis duals, G-dimension and Gorenstein
flat dimension (with bounded certificates), and approximation triangles for
modules of finite G-dimension.  All arithmetic is exact, over ``QQ`` or a
prime field ``GF(p)``.
"""

__version__ = "0.1.0"

from .field import Field, QQ, GF
from .algebra import (TermOrder, Polynomial, GradedRing, RingMap, groebner_basis, normal_form,
                      ideal_member, is_regular_element, apply_map)
from .modules import Matrix, FPModule, ModuleMap, kernel, mingens, syzygy, subquotient
from .resolution import Resolution, BettiTable, free_resolution, betti_table
from .duality import (dual_into_ring, matlis_dual, matlis_dual_map, matlis_biduality_map,
                      injective_hull, injective_hull_truncation)
from .complexes import (Complex, FreeComplex, ChainMap, ModuleHandle, TrianglePresentation,
                        restrict_scalars, base_change_complex, tensor_with_module,
                        hom_into_module, homology, sup_inf, shift, truncate)
from .invariants import (InvariantReport, depth, ext, tor_over_phi, fd_bounded, pd_bounded,
                         is_totally_reflexive, gdim, gfd_bounded, rfd_bounded, supp_member_max)
from .approximation import (pushout_step, embed_totally_reflexive, build_reflexive_tail,
                            approximation_triangle, rotate_triangle, ApproximationResult)
from .harness.parser import parse_session, ParseError

__all__ = [
    "__version__", "Field", "QQ", "GF",
    "TermOrder", "Polynomial", "GradedRing", "RingMap", "groebner_basis", "normal_form",
    "ideal_member", "is_regular_element", "apply_map",
    "Matrix", "FPModule", "ModuleMap", "kernel", "mingens", "syzygy", "subquotient",
    "Resolution", "BettiTable", "free_resolution", "betti_table",
    "dual_into_ring", "matlis_dual", "matlis_dual_map", "matlis_biduality_map",
    "injective_hull", "injective_hull_truncation",
    "Complex", "FreeComplex", "ChainMap", "ModuleHandle", "TrianglePresentation",
    "restrict_scalars", "base_change_complex", "tensor_with_module", "hom_into_module",
    "homology", "sup_inf", "shift", "truncate",
    "InvariantReport", "depth", "ext", "tor_over_phi", "fd_bounded", "pd_bounded",
    "is_totally_reflexive", "gdim", "gfd_bounded", "rfd_bounded", "supp_member_max",
    "pushout_step", "embed_totally_reflexive", "build_reflexive_tail",
    "approximation_triangle", "rotate_triangle", "ApproximationResult",
    "parse_session", "ParseError",
]

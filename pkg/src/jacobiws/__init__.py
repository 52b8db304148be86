"""Exact computations in the algebra of trivalent chord diagrams: the
deframing projector, the Alexander-Conway weight systems, and weight
systems from metrized Lie superalgebras."""

from . import cache as _cache
from .diagrams import (
    CCD,
    ChineseCharacter,
    canonical_key,
    enumerate_ccds,
    enumerate_chinese_characters,
    enumerate_chord_diagrams,
    parse_diagram,
    serialize_diagram,
)
from .linalg import Functional, LinComb, QuotientSpace
from .hopf import build_A, connect_sum, coproduct, e_set, expand_cc, generate_stu
from .deframe import decompose, dim_Inn, even_partitions, phi, s_map, tau
from .conway import check_convolution_identity, conway, conway_bar, counit, ws_product
from .algebra import AlgebraSpec, builtin, parse_algebra, validate_spec
from .statesum import compile_diagram, evaluate, evaluate_diagram
from .verma import highest_weight_poly, knn

_cache.install_enumeration_hooks()

__all__ = [
    "CCD",
    "ChineseCharacter",
    "canonical_key",
    "enumerate_ccds",
    "enumerate_chinese_characters",
    "enumerate_chord_diagrams",
    "parse_diagram",
    "serialize_diagram",
    "Functional",
    "LinComb",
    "QuotientSpace",
    "build_A",
    "connect_sum",
    "coproduct",
    "e_set",
    "expand_cc",
    "generate_stu",
    "decompose",
    "dim_Inn",
    "even_partitions",
    "phi",
    "s_map",
    "tau",
    "check_convolution_identity",
    "conway",
    "conway_bar",
    "counit",
    "ws_product",
    "AlgebraSpec",
    "builtin",
    "parse_algebra",
    "validate_spec",
    "compile_diagram",
    "evaluate",
    "evaluate_diagram",
    "highest_weight_poly",
    "knn",
]

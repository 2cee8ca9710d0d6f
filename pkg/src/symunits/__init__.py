"""Symmetric units of modular group algebras of finite p-groups."""

from .algebra import AlgebraElement, augmentation, inverse, is_symmetric, is_unit, star
from .goodness import build_S, classify, closure_oracle, is_good, theorem_rhs
from .groups import Group, direct_product, central_product, make_family
from .presentation import group_from_presentation, load_presentation, parse_presentation
from .rings import GF

__all__ = [
    "AlgebraElement",
    "GF",
    "Group",
    "augmentation",
    "build_S",
    "central_product",
    "classify",
    "closure_oracle",
    "direct_product",
    "group_from_presentation",
    "inverse",
    "is_good",
    "is_symmetric",
    "is_unit",
    "load_presentation",
    "make_family",
    "parse_presentation",
    "star",
    "theorem_rhs",
]

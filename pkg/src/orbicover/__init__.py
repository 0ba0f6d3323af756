"""Exact verification of symmetric coverings of P^n, their discriminants,
orbifold braid group orders and line-orbit curve censuses."""

from .cyclotomic import CyclotomicScalar
from .exact import BinaryForm, HomogeneousPoly, ProjectivePoint
from .fpgroups import Presentation, abelianization, analyse, parse_group_spec
from .orbifold import OrbifoldSignature, UniformizationType, classify_orbifold
from .weights import INF

__all__ = [
    "INF",
    "BinaryForm",
    "CyclotomicScalar",
    "HomogeneousPoly",
    "OrbifoldSignature",
    "Presentation",
    "ProjectivePoint",
    "UniformizationType",
    "abelianization",
    "analyse",
    "classify_orbifold",
    "parse_group_spec",
]

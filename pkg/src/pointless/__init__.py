"""Pointless hyperelliptic curves over finite fields: construction, counting and census."""

from .census import CensusReport, count_pointless, enumerate_models, min_pointless_genus
from .constructions import (
    Branch,
    ConstructionCertificate,
    NotFoundError,
    artin_schreier_pointless,
    construct_maximal_odd,
    construct_pointless,
    genus_bound,
    replay,
)
from .finite_field import FieldElement, FiniteField, field_of_order, make_field
from .hyperelliptic import (
    HyperellipticModel,
    count_points,
    hasse_weil_min_genus,
    is_smooth,
    make_model,
    quadratic_twist,
)
from .polynomial import Polynomial

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CensusReport",
    "ConstructionCertificate",
    "FieldElement",
    "FiniteField",
    "HyperellipticModel",
    "NotFoundError",
    "Polynomial",
    "artin_schreier_pointless",
    "construct_maximal_odd",
    "construct_pointless",
    "count_points",
    "count_pointless",
    "enumerate_models",
    "field_of_order",
    "genus_bound",
    "hasse_weil_min_genus",
    "is_smooth",
    "make_field",
    "make_model",
    "min_pointless_genus",
    "quadratic_twist",
    "replay",
]

"""Support-constrained linearized Reed-Solomon codes over the sum-rank metric,
plus the distributed multi-source network designer built on top of them."""

__version__ = "0.1.0"

from .constraints import SupportConstraint, check_condition, cover_dimension, suggest_field_params
from .construct import ConstrainedCode, subcode_generator, synthesize
from .gf import FieldTower, make_field
from .lrs import LrsCode, make_code
from .netsim import DesignResult, NetworkInstance, build_distributed_code, design_lengths
from .skewpoly import SkewPoly, minimal_polynomial
from .sumrank import OrderedPartition, bruteforce_decode, min_distance_bruteforce, sum_rank_weight

__all__ = [
    "ConstrainedCode",
    "DesignResult",
    "FieldTower",
    "LrsCode",
    "NetworkInstance",
    "OrderedPartition",
    "SkewPoly",
    "SupportConstraint",
    "__version__",
    "bruteforce_decode",
    "build_distributed_code",
    "check_condition",
    "cover_dimension",
    "design_lengths",
    "make_code",
    "make_field",
    "min_distance_bruteforce",
    "minimal_polynomial",
    "subcode_generator",
    "suggest_field_params",
    "sum_rank_weight",
    "synthesize",
]

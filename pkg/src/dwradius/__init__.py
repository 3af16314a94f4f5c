"""Davis-Wielandt radius, numerical-range quantities, and a catalog of bounds."""

from .blocks import BlockSpec, assemble
from .bounds import BoundResult, full_catalog
from .config import DEFAULT, SearchConfig
from .quantities import crawford, dw_radius, nr_profile, num_radius, op_norm

__all__ = ["BlockSpec", "BoundResult", "DEFAULT", "SearchConfig", "assemble", "crawford",
           "dw_radius", "full_catalog", "nr_profile", "num_radius", "op_norm"]

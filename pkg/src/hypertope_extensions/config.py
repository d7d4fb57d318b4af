import logging
from dataclasses import dataclass, fields

logger = logging.getLogger(__name__)

DEFAULT_COSET_LIMIT = 2_000_000
DEFAULT_GEOMETRY_BOUND = 100_000
DEFAULT_INTERSECTION_BOUND = 10_000_000
DEFAULT_CENTRAL_BOUND = 1_000_000
DEFAULT_INTERSECTION_ORDER_BOUND = 1_000_000


@dataclass(frozen=True)
class Limits:
    """Resource limits shared by every bounded computation of a job."""

    coset_limit: int = DEFAULT_COSET_LIMIT
    geometry_bound: int = DEFAULT_GEOMETRY_BOUND
    intersection_bound: int = DEFAULT_INTERSECTION_BOUND
    central_bound: int = DEFAULT_CENTRAL_BOUND
    intersection_order_bound: int = DEFAULT_INTERSECTION_ORDER_BOUND

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"Limit '{field.name}' must be a positive integer.")


DEFAULT_LIMITS = Limits()

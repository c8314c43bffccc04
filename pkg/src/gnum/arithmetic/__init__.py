"""Graph integers, graph rationals, single-network Wiener elements and series."""

from gnum.arithmetic.calculus import (
    COS,
    EXP,
    GEOM,
    SIN,
    DivergenceError,
    PowerSeries,
    exponentiation_determinant_report,
    functional_pushforward,
    graph_power_b_to_x,
    log1p_series,
    series_by_name,
    series_eval,
    zero_divisor_demo,
)
from gnum.arithmetic.integers import GraphInteger, gi, gi_add, gi_mul, gi_neg, gi_norm
from gnum.arithmetic.rationals import GraphRational, LocalizationError, gr_make
from gnum.arithmetic.scalars import GaussianRational
from gnum.arithmetic.wiener import (
    InversionResult,
    WienerElement,
    from_rational,
    we_from_laurent,
    we_invert,
    we_mul,
    we_norm,
)


def gr_add(x: GraphRational, y: GraphRational) -> GraphRational:
    return x + y


def gr_mul(x: GraphRational, y: GraphRational) -> GraphRational:
    return x * y


def gr_neg(x: GraphRational) -> GraphRational:
    return -x


__all__ = [
    "COS", "EXP", "GEOM", "SIN", "DivergenceError", "GaussianRational", "GraphInteger",
    "GraphRational", "InversionResult", "LocalizationError", "PowerSeries", "WienerElement",
    "exponentiation_determinant_report", "from_rational", "functional_pushforward", "gi",
    "gi_add", "gi_mul", "gi_neg", "gi_norm", "gr_add", "gr_make", "gr_mul", "gr_neg",
    "graph_power_b_to_x", "log1p_series", "series_by_name", "series_eval", "we_from_laurent",
    "we_invert", "we_mul", "we_norm", "zero_divisor_demo",
]

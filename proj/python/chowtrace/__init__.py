"""Exact Chow-trace, Rost-number, and Schubert/Steenrod calculator."""

from ._chowtrace import (
    DimensionNotDivisible,
    NotDivisibleByP,
    PathDisagreement,
    UnknownVariety,
    check_special,
    divisor_power_degree,
    eta,
    eta_from_file,
    euler_characteristic,
    phi,
    poincare,
    steenrod_s2_check,
    weyl_order,
)

__all__ = [
    "DimensionNotDivisible",
    "NotDivisibleByP",
    "PathDisagreement",
    "UnknownVariety",
    "check_special",
    "divisor_power_degree",
    "eta",
    "eta_from_file",
    "euler_characteristic",
    "phi",
    "poincare",
    "steenrod_s2_check",
    "weyl_order",
]

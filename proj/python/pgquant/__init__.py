"""Coherent-state quantization of paragrassmann algebras."""

from ._core import (
    Deformation,
    ParaPoly,
    ParseError,
    inner_product,
    ladder,
    ladder_dag,
    lower_symbol,
    moyal_star,
    q_power_N,
    qfactorial,
    qnumber,
    quantize,
    quaternion_demo,
    rescale_B,
    to_bargmann,
    upper_symbol,
    verify,
    weight,
)

__all__ = [
    "Deformation",
    "ParaPoly",
    "ParseError",
    "inner_product",
    "ladder",
    "ladder_dag",
    "lower_symbol",
    "moyal_star",
    "q_power_N",
    "qfactorial",
    "qnumber",
    "quantize",
    "quaternion_demo",
    "rescale_B",
    "to_bargmann",
    "upper_symbol",
    "verify",
    "weight",
]

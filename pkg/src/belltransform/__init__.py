"""Exact Bell transforms of integer and rational sequences."""

from belltransform.bell_core import (
    BellTable,
    as_sequence,
    closed_form_f_bell,
    faa_di_bruno_compose,
    factorial_weight,
    log_polynomial,
    partial_bell,
    partial_bell_direct,
    potential_polynomial,
)
from belltransform.series import Series
from belltransform.transform import (
    BellParams,
    apply_word,
    bell_inverse,
    bell_transform,
    bell_transform_k_slices,
    named_transform,
)

__all__ = [
    "BellParams",
    "BellTable",
    "Series",
    "apply_word",
    "as_sequence",
    "bell_inverse",
    "bell_transform",
    "bell_transform_k_slices",
    "closed_form_f_bell",
    "faa_di_bruno_compose",
    "factorial_weight",
    "log_polynomial",
    "named_transform",
    "partial_bell",
    "partial_bell_direct",
    "potential_polynomial",
]

"""Self-dual code searches under prescribed automorphism groups."""

from ._core import (
    BinaryCode,
    BudgetError,
    InputError,
    InvariantError,
    classify_self_dual,
    count_max_isotropic,
    equivalent,
    golay24,
    hamming8,
    max_isotropic_count,
    orbit_representatives,
    read_codes,
    self_dual_count,
)

__all__ = [
    "BinaryCode",
    "BudgetError",
    "InputError",
    "InvariantError",
    "classify_self_dual",
    "count_max_isotropic",
    "equivalent",
    "golay24",
    "hamming8",
    "max_isotropic_count",
    "orbit_representatives",
    "read_codes",
    "self_dual_count",
]

"""Exact-arithmetic computation of commutative post-Lie structures.

Thin wrapper over the C++ core. Solver reports come back as plain dicts;
rationals are decimal fraction strings like "3/2".
"""

from ._api import (  # noqa: F401
    LieAlgebra,
    AlgebraWindow,
    ValidationError,
    WindowTooSmallError,
    ResourceLimitError,
    HypothesisViolatedError,
    builtin,
    builtin_names,
    from_json,
    semidirect_model,
    central_extension_model,
    loop_window,
    witt_window,
    kac_moody_window,
    cpa_solve,
    verify_suite,
    verify_suite_ids,
)

__version__ = "0.1.0"

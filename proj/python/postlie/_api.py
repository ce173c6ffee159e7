import json as _json

try:
    from . import _postlie as _core
except ImportError:
    import _postlie as _core

LieAlgebra = _core.LieAlgebra
AlgebraWindow = _core.AlgebraWindow
ValidationError = _core.ValidationError
WindowTooSmallError = _core.WindowTooSmallError
ResourceLimitError = _core.ResourceLimitError
HypothesisViolatedError = _core.HypothesisViolatedError

builtin = _core.builtin
builtin_names = _core.builtin_names
from_json = _core.from_json
semidirect_model = _core.semidirect_model
central_extension_model = _core.central_extension_model
loop_window = _core.loop_window
witt_window = _core.witt_window
kac_moody_window = _core.kac_moody_window
verify_suite_ids = _core.verify_suite_ids


def cpa_solve(obj, degree_bound=-1, budget=100000):
    """Solve for all commutative post-Lie structures; returns the report dict.

    Accepts a LieAlgebra or an AlgebraWindow; degree_bound only applies to
    windows (default: the window bound).
    """
    if isinstance(obj, AlgebraWindow):
        return _json.loads(obj.cpa_solve_json(degree_bound=degree_bound, budget=budget))
    return _json.loads(obj.cpa_solve_json(budget=budget))


def verify_suite(suite_id, budget=100000, seed=20240501):
    """Run a named verification suite; returns its result dict."""
    return _json.loads(_core.verify_suite_json(suite_id, budget=budget, seed=seed))

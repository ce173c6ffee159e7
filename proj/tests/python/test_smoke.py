import pytest

import postlie


def test_builtins():
    names = postlie.builtin_names()
    assert "sl2" in names
    sl2 = postlie.builtin("sl2")
    assert sl2.dim == 3
    assert sl2.labels == ["e", "f", "h"]
    assert sl2.is_perfect()
    assert sl2.is_centerless()
    assert sl2.center_dim() == 0
    assert sl2.derivation_dim() == 3
    assert sl2.killing()[2][2] == "8"


def test_heisenberg_invariants():
    h = postlie.builtin("heisenberg")
    assert h.center_dim() == 1
    assert h.derived_dim() == 1
    assert not h.is_perfect()
    assert h.h2_dim() == 2
    assert h.bracket(0, 1) == [(2, "1")]


def test_cpa_solve_sl2():
    report = postlie.cpa_solve(postlie.builtin("sl2"))
    assert report["verdict"] == "ZeroOnly"
    assert report["dcomm_dim"] == 0


def test_cpa_solve_abelian_line():
    report = postlie.cpa_solve(postlie.builtin("abelian1"))
    assert report["verdict"] == "LinearSpace"
    assert report["solution_dim"] == 1


def test_condition_c():
    assert postlie.builtin("sl2").check_condition_c() == "HoldsByCorollary"
    assert postlie.builtin("abelian2").check_condition_c() == "Fails"


def test_verify_cpa():
    sl2 = postlie.builtin("sl2")
    ok, _ = sl2.verify_cpa([])
    assert ok
    bad, identity = sl2.verify_cpa([(0, 1, 2, "1"), (1, 0, 2, "-1")])
    assert not bad
    assert identity == "commutativity"


def test_json_round_trip():
    sl2 = postlie.builtin("sl2_z2")
    again = postlie.from_json(sl2.to_json())
    assert again.dim == 3
    assert again.graded


def test_loop_window_solve():
    w = postlie.loop_window("sl2_z1", 2)
    assert w.dim == 15
    report = postlie.cpa_solve(w)
    assert report["verdict"] == "ZeroOnly"


def test_kac_moody_window():
    w = postlie.kac_moody_window("sl2_z1", 2)
    d, z = w.dim - 2, w.dim - 1
    ok, _ = w.verify_cpa([(d, d, z, "1")])
    assert ok
    report = postlie.cpa_solve(w)
    assert report["verdict"] == "LinearSpace"
    assert report["solution_dim"] == 1


def test_witt_window():
    w = postlie.witt_window(3, one_sided=True)
    assert w.degrees[0] == -1
    report = postlie.cpa_solve(w, degree_bound=2)
    assert report["verdict"] == "ZeroOnly"


def test_models():
    semi = postlie.semidirect_model("sl2", trunc=3)
    assert semi.dim == 10
    assert postlie.cpa_solve(semi)["verdict"] == "ZeroOnly"
    ext = postlie.central_extension_model("sl2", pinched=True)
    assert ext.dim == 11
    report = postlie.cpa_solve(ext)
    assert report["verdict"] == "LinearSpace"
    assert report["solution_dim"] == 1
    with pytest.raises(postlie.ValidationError):
        postlie.central_extension_model("sl2", trunc=3, pinched=False)


def test_verify_suite():
    result = postlie.verify_suite("prop1")
    assert result["pass"]
    assert all(c["pass"] for c in result["checks"])


def test_unknown_builtin():
    with pytest.raises(postlie.ValidationError):
        postlie.builtin("so8")

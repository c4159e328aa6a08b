import pytest

import binomeul as b


def test_binomial_table_r2():
    assert b.binomial_eulerian(4, 2) == [1, 80, 328, 208, 16]
    plus, minus = b.binomial_eulerian_pm(5, 2)
    assert plus == [1, 211, 1371, 1371, 211, 1]
    assert b.gamma_vector(minus, 6) == [0, 31, 577, 361]


def test_counts_and_roots():
    assert sum(b.eulerian_poly(6, 3)) == 3**6 * 720
    assert b.is_real_rooted([1, 4, 1])
    assert not b.is_real_rooted([1, 0, 1])


def test_des_exc_agree():
    assert b.eulerian_poly(4, 2, "des") == b.eulerian_poly(4, 2, "exc")


def test_geometry():
    assert b.h_polynomial("delta-gamma", 2, 2) == [1, 5, 1]
    assert b.h_polynomial("gamma", 3, 2) == b.a_plus_minus(3, 2)[0]
    assert b.local_h("gamma", 3, 2) == b.d_plus_minus(3, 2)[0]
    assert len(b.facets("gamma", 3, 3)["facets"]) == 54


def test_series():
    tphi = b.named_series("tphi", 1, 2, basis="s")
    assert tphi["terms"][2][1]["s"] == {"2": "2", "1,1": "1"}
    assert b.dimension_shadows("psi", 2, 2)[2] == [0, 4, 1]
    assert "c_gamma" in b.series_names()


def test_errors():
    with pytest.raises(ValueError):
        b.named_series("nope", 1, 2)
    with pytest.raises(ValueError):
        b.eulerian_poly(3, 1, "maj")


def test_verify_report():
    report = b.verify("geometric", max_n=2, max_r=2)
    assert report["passed"]
    assert all(c["pass"] for c in report["checks"])

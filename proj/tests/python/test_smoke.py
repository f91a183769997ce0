import pytest

import heckekit


def test_theta_golden():
    a = heckekit.Algebra("A1")
    theta = a.theta([-1])
    assert str(theta) == "(v^-1 - v)*T[t[1]*s1] + (v^-1)*T[t[-1]]"
    assert str(a.act(a.m("e"), theta)) == "(-v)*m[t[1]*s1]"
    assert a.parse_hecke(str(theta)) == theta


def test_group_and_kl():
    a = heckekit.Algebra("A2")
    assert a.length("s0") == 1
    assert len(a.omega()) == 3
    assert a.kl_polynomial("e", "s1") == "1"
    w = a.multiply("s1", a.multiply("s2", "s1"))
    c = a.kl_basis(w)
    assert a.bar(c) == c
    assert a.T("s1") * a.T_inverse("s1") == a.one()


def test_center_and_kgroup():
    a = heckekit.Algebra("A1")
    z = a.center_element([2])
    assert z * a.T("s0") == a.T("s0") * z
    image = a.specialize(a.theta([3]))
    assert image == [{"element": "t[3]", "coeff": "1"}]
    assert a.euler_pairing("s1", "s1") == -1


def test_whittaker():
    assert heckekit.whittaker_trace("G2", [0, 0], [0, 0]) == "t^6"
    assert heckekit.lusztig_q_analogue("A2", [1, 1], [0, 0]) == "q + q^2"
    a = heckekit.Algebra("A2")
    table = a.whittaker_table([1, 1])
    assert len(table["rows"]) == 7
    assert all(r["match"] for r in table["rows"])
    assert a.whittaker_csv([1, 1]).count("\n") == 8


def test_suites():
    report = heckekit.run_suite("all", "A1", 4, seed=3)
    assert report["schema"] == 1
    assert report["passed"]
    assert report == heckekit.run_suite("all", "A1", 4, seed=3)
    assert "whittaker" in heckekit.suite_names()


def test_errors():
    a = heckekit.Algebra("A1")
    with pytest.raises(heckekit.DomainError):
        a.center_element([-1])
    with pytest.raises(heckekit.ParseError):
        heckekit.Algebra("Q7")
    with pytest.raises(heckekit.ResourceError):
        heckekit.run_suite("braid", "A1", 11)
    with pytest.raises(heckekit.ParseError):
        heckekit.run_suite("nosuch", "A1", 2)

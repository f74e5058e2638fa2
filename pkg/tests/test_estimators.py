from __future__ import annotations

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from matchforge import AntiForcingPolynomial, ForcingPolynomial, build_g, from_cells
from matchforge.polynomial import poly


def test_forcing_fit(g1):
    est = ForcingPolynomial().fit(g1)
    assert est.polynomial_ == poly(0, 2, 4)
    assert est.n_matchings_ == 6
    assert (est.spectrum_.min, est.spectrum_.max) == (1, 2)
    assert est.transform(g1) == est.values_


def test_antiforcing_fit(g1):
    est = AntiForcingPolynomial().fit(g1)
    assert est.polynomial_ == poly(0, 1, 3, 2)


def test_transform_given_matchings(g1, g1_matchings):
    est = AntiForcingPolynomial(method="compat").fit(g1)
    assert est.transform([g1_matchings["M_a"], g1_matchings["M_1"], g1_matchings["M_c"]]) == [1, 3, 2]
    assert est.predict([g1_matchings["M_c"].pairs()]) == [2]


def test_transform_rejects_bad_input(g1):
    est = ForcingPolynomial().fit(g1)
    with pytest.raises(ValueError):
        est.transform(build_g(2))
    with pytest.raises(ValueError):
        est.transform([[[0, 1]]])


def test_not_fitted(g1):
    with pytest.raises(NotFittedError):
        ForcingPolynomial().transform(g1)


def test_params_and_clone():
    est = ForcingPolynomial(method="oracle", oracle_max=8)
    assert est.get_params() == {"method": "oracle", "oracle_max": 8, "cycle_limit": 40}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est
    est.set_params(method="cycles")
    assert est.method == "cycles"


def test_bad_params(g1):
    with pytest.raises(ValueError):
        ForcingPolynomial(method="structural").fit(g1)
    with pytest.raises(ValueError):
        AntiForcingPolynomial(oracle_max=0).fit(g1)


def test_generic_graph():
    g = from_cells([(0, 0), (0, 1), (1, 1), (1, 2)])
    f = ForcingPolynomial().fit(g)
    o = ForcingPolynomial(method="oracle").fit(g)
    assert f.values_ == o.values_
    a = AntiForcingPolynomial().fit(g)
    assert a.values_ == AntiForcingPolynomial(method="oracle").fit(g).values_


def test_rejects_non_graph():
    with pytest.raises(TypeError):
        ForcingPolynomial().fit([1, 2, 3])

from __future__ import annotations

from decimal import Decimal

import pytest

from matchforge import formulas as fx
from matchforge.polynomial import poly

PHI_G = [1, 6, 32, 168, 880, 4608, 24128, 126336, 661504]
PHI_H = [1, 5, 26, 136]
IDF = [0, 10, 108, 852, 5948, 38908, 244348, 1492092, 8926204]
AFSUM = [0, 13, 140, 1105, 7721, 50541, 317565, 1939901, 11608381]


def test_binom_convention():
    assert fx.binom(5, 2) == 10
    assert fx.binom(3, 4) == 0
    assert fx.binom(3, -1) == 0
    assert fx.binom(-2, 1) == 0


@pytest.mark.parametrize("n", range(len(PHI_G)))
def test_phi(n):
    assert fx.phi_g(n) == PHI_G[n] == fx.phi_closed(n)


@pytest.mark.parametrize("n", range(len(PHI_H)))
def test_phi_h(n):
    assert fx.phi_h(n) == PHI_H[n]


def test_phi_closed_is_rational_to_50():
    for n in range(51):
        v = fx.phi_closed_surd(n)
        assert v.b == 0 and v.to_int() == fx.phi_g(n)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        fx.phi_g(-1)


def test_forcing_recurrence_values():
    assert fx.forcing_poly_g_rec(3) == poly(0, 0, 0, 12, 28, 64, 64)
    assert fx.forcing_poly_g_rec(5)(1) == 4608
    assert fx.forcing_poly_h_rec(1) == poly(0, 1, 4)
    assert fx.forcing_poly_h_rec(2) == poly(0, 1, 1, 8, 16)
    assert fx.forcing_poly_h_rec(2)(1) == 26


@pytest.mark.parametrize("n", range(1, 8))
def test_forcing_explicit_matches_recurrence(n):
    assert fx.forcing_poly_g_explicit(n) == fx.forcing_poly_g_rec(n)


def test_forcing_shape():
    for n in range(1, 12):
        f = fx.forcing_poly_g_rec(n)
        assert f.degree == 2 * n and f.coeff(2 * n) == 4**n
        assert f.low_degree == n
        assert f(1) == fx.phi_g(n)
    assert fx.forcing_poly_g_explicit(4).coeff(8) == 256


def test_af_recurrence_values():
    assert fx.af_poly_g_rec(3) == poly(0, 0, 0, 1, 3, 19, 57, 59, 21, 8)
    assert fx.af_poly_g_rec(4)(1) == 880
    assert fx.af_poly_h_rec(1) == poly(0, 0, 4, 1)
    assert fx.af_poly_h_rec(1)(1) == 5
    assert fx.af_poly_h_rec(2)(1) == 26


@pytest.mark.parametrize("n", range(1, 8))
def test_af_explicit_matches_recurrence(n):
    assert fx.af_poly_g_explicit(n) == fx.af_poly_g_rec(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_af_other_routes(n):
    rec = fx.af_poly_g_rec(n)
    assert fx.af_poly_g_from_decomposition(n) == rec
    assert fx.af_poly_g_triple_sum(n) == rec


def test_af_decomposition_at_one():
    terms = fx.af_decomposition_terms(1)
    assert terms["no-u0v0"] == poly(0, 1)
    assert terms["no-vertical"] == poly(0, 0, 3, 1)
    assert sum(terms.values(), poly()) == poly(0, 1, 3, 2)


def test_af_shape():
    for n in range(1, 12):
        a = fx.af_poly_g_rec(n)
        assert a.degree == 3 * n and a.low_degree == n
        assert a.coeff(n) == 1 and a.coeff(n + 1) == 3
        assert a(1) == fx.phi_g(n)
    a4 = fx.af_poly_g_explicit(4)
    assert a4.coeff(4) and a4.coeff(12)


@pytest.mark.parametrize("n", range(len(IDF)))
def test_idf(n):
    assert fx.idf_rec(n) == fx.idf_closed(n) == fx.idf_from_poly(n) == IDF[n]


@pytest.mark.parametrize("n", range(len(AFSUM)))
def test_afsum(n):
    assert fx.afsum_rec(n) == fx.afsum_closed(n) == fx.afsum_from_poly(n) == AFSUM[n]


def test_sum_recurrence_holds_to_50():
    c = fx.SUM_RECURRENCE
    for seq in (fx.idf_closed, fx.afsum_closed):
        vals = [seq(n) for n in range(51)]
        for n in range(5, 51):
            assert vals[n] == sum(c[k] * vals[n - 1 - k] for k in range(5))


def test_closed_forms_are_rational():
    for n in range(51):
        assert fx.idf_closed_surd(n).b == 0
        assert fx.afsum_closed_surd(n).b == 0


def test_limits():
    assert abs(fx.limit_idf() - Decimal("1.6832816")) < Decimal("1e-7")
    assert abs(fx.limit_afsum() - Decimal("2.1933629")) < Decimal("1e-7")
    assert abs(fx.ratio_idf(50) - fx.limit_idf()) <= Decimal("1e-3")
    assert abs(fx.ratio_afsum(50) - fx.limit_afsum()) <= Decimal("1e-3")
    with pytest.raises(ValueError):
        fx.ratio_idf(0)

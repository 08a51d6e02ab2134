import pytest

from qshuffle.algebra import Element, UNIT, X_EL
from qshuffle.catalan import (
    catalan_element,
    d_element,
    delta_element,
    x_cn_y,
)
from qshuffle.errors import CutoffMismatchError, InexactDivisionError
from qshuffle.qlaurent import q_int, q_pow
from qshuffle.series import (
    Series,
    beck_log_argument,
    c_series,
    d_series,
    delta_series,
    gtilde_series,
    nabla0_log_argument,
    nabla0_series,
    x_cn_y_series,
)

N = 5


def t_times(el, n, cutoff=N):
    coeffs = [Element.zero()] * (cutoff + 1)
    coeffs[n] = el
    return Series(coeffs, cutoff)


def test_construction_and_padding():
    s = Series([UNIT], 3)
    assert s.cutoff == 3
    assert s[0] == UNIT and s[3].is_zero()
    with pytest.raises(ValueError):
        Series([], -1)


def test_cutoff_mismatch_is_an_error():
    with pytest.raises(CutoffMismatchError):
        Series.unit(3).star_mul(Series.unit(4))
    with pytest.raises(CutoffMismatchError):
        Series.unit(3) + Series.unit(2)


def test_star_mul_examples():
    G = gtilde_series(N)
    assert G.star_mul(Series.unit(N)) == G
    assert Series.unit(N).star_mul(G) == G
    a = t_times(Element.from_word("xy"), 1)
    sq = a.star_mul(a)
    assert sq[2] == Element.from_word("xy").shuffle(Element.from_word("xy"))
    assert sq[0].is_zero() and sq[1].is_zero() and sq[3].is_zero()


def test_inverse_is_the_closed_form_and_two_sided():
    G = gtilde_series(N)
    D = G.inverse()
    for n in range(N + 1):
        assert D[n] == d_element(n), n
    assert G.star_mul(D) == Series.unit(N)
    assert D.star_mul(G) == Series.unit(N)
    assert Series.unit(N).inverse() == Series.unit(N)
    with pytest.raises(ValueError):
        t_times(Element.from_word("xy"), 1).inverse()


def test_inverse_of_delta_series():
    for m in (1, 2, 3):
        a = delta_series(m, 4)
        b = delta_series(-m, 4)
        assert a.star_mul(b) == Series.unit(4)
        assert a.inverse() == b


def test_rescale():
    D = d_series(N)
    assert D.rescale_t(1) == D
    flipped = D.rescale_t(-1)
    for n in range(N + 1):
        assert flipped[n] == delta_element(1, n), n
    assert D.rescale_t(q_pow(1)).rescale_t(q_pow(-1)) == D
    a = D.rescale_t(q_int(2)).rescale_t(q_int(3))
    b = D.rescale_t(q_int(2) * q_int(3))
    assert a == b


def test_derivative():
    assert Series.unit(N).derivative() == Series.zero(N - 1)
    ones = Series([UNIT] * (N + 1), N)
    d = ones.derivative()
    for n in range(N):
        assert d[n] == UNIT.scale(n + 1)
    dd = delta_series(1, N).derivative()
    assert dd[0] == delta_element(1, 1)
    assert dd.cutoff == N - 1


def test_derivative_is_a_star_derivation():
    A = delta_series(2, 3)
    B = gtilde_series(3)
    lhs = A.star_mul(B).derivative()
    rhs = A.derivative().star_mul(B.truncate(2)) + A.truncate(2).star_mul(B.derivative())
    assert lhs == rhs


def test_divide_t():
    s = nabla0_series(N)
    shifted = s.divide_t()
    assert shifted.cutoff == N - 1
    assert shifted[0] == x_cn_y(1)
    with pytest.raises(InexactDivisionError):
        Series.unit(N).divide_t()


def test_exp_basics():
    assert Series.zero(N).exp() == Series.unit(N)
    for m in (-2, 1, 3):
        e = t_times(Element.from_word("xy", q_int(m)), 1).exp()
        assert e[1] == delta_element(m, 1)
    with pytest.raises(ValueError):
        Series.unit(N).exp()


def test_exp_matches_catalan_series():
    assert beck_log_argument(2, 4).exp() == c_series(4)


def test_log_basics():
    assert Series.unit(N).log() == Series.zero(N)
    got = c_series(4).log()
    expect = beck_log_argument(2, 4)
    assert got == expect
    a = t_times(Element.from_word("xy"), 1)
    assert a.exp().log() == a
    assert (Series.unit(N) + a).log().exp() == Series.unit(N) + a
    with pytest.raises(ValueError):
        Series.zero(N).log()


def test_exp_theorem_all_m():
    for m in range(-3, 4):
        lhs = nabla0_log_argument(m, 4).exp()
        assert lhs == delta_series(m, 4), m
        assert delta_series(m, 4).log() == nabla0_log_argument(m, 4), m


def test_exp_coefficients_are_integral():
    for m in range(-3, 4):
        e = nabla0_log_argument(m, N).exp()
        for n in range(N + 1):
            assert e[n].is_integral(), (m, n)


def test_apply_truncations():
    assert Series.unit(N).apply_y_inverse() == Series.zero(N)
    s = nabla0_series(N).apply_y_inverse()
    for n in range(1, N + 1):
        assert s[n] == X_EL * catalan_element(n - 1), n
    z = nabla0_series(N).zeta().apply_x_inverse()
    assert z == s.zeta()


def test_series_json_round_trip():
    s = delta_series(2, 3)
    obj = s.to_json()
    assert obj["cutoff"] == 3
    assert Series.from_json(obj) == s


def test_truncate():
    s = delta_series(2, 4)
    t = s.truncate(2)
    assert t.cutoff == 2 and t[2] == delta_element(2, 2)
    with pytest.raises(ValueError):
        t.truncate(3)


def test_free_form_series_agree_with_reduced():
    assert x_cn_y_series(4) == nabla0_series(4)
    assert beck_log_argument(3, 4) == nabla0_log_argument(3, 4)

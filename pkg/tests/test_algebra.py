import random

import pytest

from qshuffle import algebra, words as W
from qshuffle.algebra import Element, UNIT, X_EL, Y_EL, commutator_x, shuffle_fold
from qshuffle.errors import CapExceededError, InexactDivisionError
from qshuffle.qlaurent import LaurentPoly, Q_COMM, q_int, q_pow
from conftest import all_words_upto, shuffle_bruteforce


def el(s, coeff=None):
    return Element.from_word(s, coeff)


# -- alternative recursion rules, used only as cross-checks ---------------------


def _bracket(a: str, b: str) -> int:
    return 2 if a == b else -2


def shuffle_letter_into_word(u: str, v: str) -> Element:
    """Letter * word: insert u at every slot, weighting by the prefix passed."""
    assert len(u) == 1
    out = Element.zero()
    for i in range(len(v) + 1):
        e = sum(_bracket(u, v[j]) for j in range(i))
        out = out + el(v[:i] + u + v[i:], q_pow(e))
    return out


def shuffle_word_with_letter(v: str, u: str) -> Element:
    """Word * letter: insert u at every slot, weighting by the suffix passed."""
    assert len(u) == 1
    out = Element.zero()
    for i in range(len(v) + 1):
        e = sum(_bracket(u, v[j]) for j in range(i, len(v)))
        out = out + el(v[:i] + u + v[i:], q_pow(e))
    return out


def shuffle_left_recursion(u: str, v: str) -> Element:
    """The front-peeling word rule."""
    if not u:
        return el(v)
    if not v:
        return el(u)
    first = el(u[0]) * shuffle_left_recursion(u[1:], v)
    e = sum(_bracket(v[0], a) for a in u)
    second = (el(v[0]) * shuffle_left_recursion(u, v[1:])).scale(q_pow(e))
    return first + second


def test_unit_laws():
    for s in ("", "x", "xy", "yxx"):
        assert UNIT.shuffle(el(s)) == el(s)
        assert el(s).shuffle(UNIT) == el(s)


def test_letter_products():
    assert X_EL @ Y_EL == el("xy") + el("yx", q_pow(-2))
    assert Y_EL @ X_EL == el("yx") + el("xy", q_pow(-2))
    assert X_EL @ X_EL == el("xx", LaurentPoly({0: 1, 2: 1}))


def test_shuffle_matches_bruteforce_exhaustively():
    pool = [str(w) for w in all_words_upto(3)]
    for u in pool:
        for v in pool:
            assert el(u) @ el(v) == shuffle_bruteforce(u, v), (u, v)


def test_shuffle_matches_bruteforce_longer_samples():
    rng = random.Random(7)
    for _ in range(25):
        u = "".join(rng.choice("xy") for _ in range(rng.randint(4, 6)))
        v = "".join(rng.choice("xy") for _ in range(rng.randint(4, 5)))
        assert el(u) @ el(v) == shuffle_bruteforce(u, v), (u, v)


def test_shuffle_agrees_with_all_recursion_rules():
    pool = [str(w) for w in all_words_upto(4)]
    rng = random.Random(3)
    sample = rng.sample([(u, v) for u in pool for v in pool], 120)
    for u, v in sample:
        got = el(u) @ el(v)
        assert got == shuffle_left_recursion(u, v), (u, v)
        if len(u) == 1 and v:
            assert got == shuffle_letter_into_word(u, v)
        if len(v) == 1 and u:
            assert got == shuffle_word_with_letter(u, v)


def test_xy_squared():
    assert el("xy") @ el("xy") == el("xyxy", LaurentPoly.const(2)) + el(
        "xxyy", q_int(2) ** 2
    )


def test_associativity_sampled():
    rng = random.Random(11)
    pool = [str(w) for w in all_words_upto(3) if len(w)]
    elements = [
        el(rng.choice(pool)) + el(rng.choice(pool), q_int(2)) for _ in range(6)
    ]
    for _ in range(12):
        a, b, c = rng.sample(elements, 3)
        assert (a @ b) @ c == a @ (b @ c)


def test_grading():
    a = el("xy") + el("x")
    b = el("yx")
    for w in (a @ b).support():
        assert len(w) in (3, 4)
    assert all(len(w) == 4 for w in (el("xy") @ el("yx")).support())


def test_free_product():
    assert X_EL * Y_EL == el("xy")
    assert UNIT * el("yx") == el("yx")
    assert el("xy", q_int(2)) * Y_EL == el("xyy", q_int(2))
    a = el("x") + el("y")
    assert a * a == el("xx") + el("xy") + el("yx") + el("yy")


def test_bilinear_form():
    prod = X_EL @ Y_EL
    assert prod.coeff("xy") == LaurentPoly.one()
    assert prod.coeff("yx") == q_pow(-2)
    assert prod.coeff("xx").is_zero()
    assert UNIT.coeff(W.EMPTY_WORD) == LaurentPoly.one()


def test_y_inverse():
    e = (
        el("xxyy") - el("xyxy", 6) + el("xyyx", 2)
        + el("yxxy", 3) - el("yxyx", 5) - el("yyxx", 4)
    )
    assert e.y_inverse() == el("xxy") - el("xyx", 6) + el("yxx", 3)
    assert UNIT.y_inverse().is_zero()
    assert X_EL.y_inverse().is_zero()
    assert Y_EL.y_inverse() == UNIT


def test_x_inverse():
    assert el("xxy").x_inverse() == el("xy")
    assert el("yxy").x_inverse().is_zero()
    assert UNIT.x_inverse().is_zero()
    assert X_EL.x_inverse() == UNIT


def test_y_inverse_leibniz_on_balanced_words():
    balanced = [w for w in all_words_upto(4) if W.is_balanced(w)]
    for u in balanced:
        for v in balanced:
            a, b = Element.from_word(u), Element.from_word(v)
            lhs = a.shuffle(b).y_inverse()
            rhs = a.y_inverse().shuffle(b) + a.shuffle(b.y_inverse())
            assert lhs == rhs, (str(u), str(v))


def test_zeta():
    assert el("xxy").zeta() == el("xyy")
    assert (X_EL @ Y_EL).zeta() == el("xy") + el("yx", q_pow(-2))
    rng = random.Random(5)
    pool = [str(w) for w in all_words_upto(4)]
    els = [el(rng.choice(pool), q_int(rng.randint(1, 3))) + el(rng.choice(pool)) for _ in range(6)]
    for u in els:
        assert u.zeta().zeta() == u
        assert u.y_inverse().zeta() == u.zeta().x_inverse()
        for v in els:
            assert (u @ v).zeta() == v.zeta() @ u.zeta()
            assert (u * v).zeta() == v.zeta() * u.zeta()


def insertion_formula(m: int, w) -> Element:
    """Independent oracle: weighted single-letter insertions into a word."""
    s = str(w)
    out = Element.zero()
    prefix_weight = 0
    for i in range(len(s) + 1):
        coeff = q_int(m + 2 * prefix_weight)
        out = out + el(s[:i] + "x" + s[i:], coeff)
        if i < len(s):
            prefix_weight += 1 if s[i] == "x" else -1
    return out


def test_commutator_x_examples():
    assert commutator_x(0, el("xy")) == el("xxy", q_int(2))
    assert commutator_x(1, UNIT) == X_EL
    assert commutator_x(-2, UNIT) == X_EL.scale(q_int(-2))


def test_commutator_x_matches_insertion_formula():
    for n in (1, 2, 3):
        for w in W.enumerate_catalan(n):
            for m in range(-2, 3):
                assert commutator_x(m, Element.from_word(w)) == insertion_formula(m, w)


def test_commutator_x_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (X_EL @ Y_EL).div_exact(Q_COMM)


def test_qserre_relations():
    for a, b in ((X_EL, Y_EL), (Y_EL, X_EL)):
        t = (
            shuffle_fold([a, a, a, b])
            - shuffle_fold([a, a, b, a]).scale(q_int(3))
            + shuffle_fold([a, b, a, a]).scale(q_int(3))
            - shuffle_fold([b, a, a, a])
        )
        assert t.is_zero()


def test_cap_guard():
    W.set_length_cap(4)
    with pytest.raises(CapExceededError):
        el("xxx") @ el("yy")
    with pytest.raises(CapExceededError):
        el("xxx") * el("yy")
    assert (el("xx") @ el("yy")).max_word_len() == 4


def test_cache_disabled_gives_identical_results():
    a = el("xyxy") + el("xxyy", q_int(2))
    b = el("xyxxyy")
    with_cache = a @ b
    algebra.set_cache_enabled(False)
    without_cache = a @ b
    assert with_cache == without_cache
    algebra.set_cache_enabled(True)
    algebra.clear_caches()
    assert a @ b == with_cache


def test_memo_budget_overflow_is_correctness_neutral():
    a = el("xyxyxyx") + el("xxyyxyx", q_int(2))
    b = el("xyxxyyxy")
    reference = a @ b
    try:
        # force the transient tier to clear repeatedly mid-product
        algebra.set_memo_limits(small_limit=4, big_limit=15, big_term_budget=200)
        assert a @ b == reference
    finally:
        algebra.set_memo_limits(small_limit=12, big_limit=15, big_term_budget=12_000_000)


def test_json_round_trip_and_order():
    e = el("yx", q_int(2)) + el("xy") + UNIT.scale(q_int(-3)) + el("xxy", q_pow(-1))
    obj = e.to_json()
    assert [t["word"] for t in obj] == ["", "xy", "yx", "xxy"]
    assert Element.from_json(obj) == e


def test_linear_ops():
    a = el("xy", q_int(2))
    assert a + (-a) == Element.zero()
    assert (a - a).is_zero()
    assert a.scale(0).is_zero()
    assert a.scale(q_int(3)) == el("xy", q_int(2) * q_int(3))
    assert 2 * a == a + a
    assert (a + el("yx")) - el("yx") == a


def test_str_forms():
    assert str(Element.zero()) == "0"
    assert str(UNIT) == "(1) 1"
    assert str(el("xy", q_int(2))) == "(q^-1 + q) xy"

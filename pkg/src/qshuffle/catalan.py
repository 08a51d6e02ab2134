"""The weighted Catalan-word families: scalars, elements, and named specializations.

Two one-parameter scalar families live here. For a Catalan word a_1...a_2n
with running sums e_i = weight(a_1) + ... + weight(a_i):

  * the full product takes a factor [e_{i-1} + m]_q at every x position and
    [e_{i-1}]_q at every y position, over all i;
  * the reduced product is the same thing with the i = 1 factor dropped
    (so it is undefined on the empty word).

Summing these against the Catalan words of length 2n gives the elements
delta_element(m, n) and nabla_element(m, n). The m = 2 column of the full
family is the Catalan element C_n, m = 1 gives the inverse family D_n up to
sign, and m = -1 picks out the single alternating word (xy)^n.
"""

from __future__ import annotations

from fractions import Fraction

from . import words as W
from .algebra import Element, X_EL, Y_EL
from .errors import DegenerateProfileError, NonCatalanWordError, TrivialWordError
from .qlaurent import LaurentPoly, Q_COMM, q_falling, q_int, q_pow


def _require_catalan(w: W.Word) -> None:
    if not W.is_catalan(w):
        raise NonCatalanWordError(f"{w.display()} is not a Catalan word")


def delta_scalar(m: int, w: W.Word) -> LaurentPoly:
    """Product over every position of the word; 1 on the empty word."""
    _require_catalan(w)
    out = LaurentPoly.one()
    e = 0
    for b in w.letter_bits():
        factor = q_int(e) if b else q_int(e + m)
        if factor.is_zero():
            return LaurentPoly.zero()
        out = out * factor
        e += -1 if b else 1
    return out


def nabla_scalar(m: int, w: W.Word) -> LaurentPoly:
    """Product over positions 2..2n; undefined on the empty word."""
    _require_catalan(w)
    if w.is_trivial():
        raise TrivialWordError("the reduced product is not defined on the empty word")
    out = LaurentPoly.one()
    e = 0
    for i, b in enumerate(w.letter_bits()):
        if i > 0:
            factor = q_int(e) if b else q_int(e + m)
            if factor.is_zero():
                return LaurentPoly.zero()
            out = out * factor
        e += -1 if b else 1
    return out


def nabla_split(m: int, w: W.Word):
    """The x-part and y-part partial products; their product is nabla_scalar."""
    _require_catalan(w)
    if w.is_trivial():
        raise TrivialWordError("the reduced product is not defined on the empty word")
    px = LaurentPoly.one()
    py = LaurentPoly.one()
    e = 0
    for i, b in enumerate(w.letter_bits()):
        if i > 0:
            if b:
                py = py * q_int(e)
            else:
                px = px * q_int(e + m)
        e += -1 if b else 1
    return px, py


def nabla_from_profile(m: int, p) -> LaurentPoly:
    """The reduced product evaluated on a valley/peak sequence.

    Accepts a Profile or any odd-length integer sequence
    (l_0, h_1, l_1, ..., h_r, l_r) with r >= 1; the shifted sequences used
    by the telescoping identity are legal inputs even when they are not the
    profile of any word. Out-of-range descents are absorbed by the falling
    product's zero rule.
    """
    entries = tuple(p)
    if len(entries) % 2 == 0 or len(entries) < 3:
        raise DegenerateProfileError(
            f"need an odd-length sequence with at least one peak, got {entries}"
        )
    ls = entries[0::2]
    hs = entries[1::2]
    out = q_falling(hs[0] + m - 1, hs[0] - ls[0] - 1) * q_falling(hs[0], hs[0] - ls[0] - 1)
    for i in range(1, len(hs)):
        if out.is_zero():
            return out
        out = out * q_falling(hs[i] + m - 1, hs[i] - ls[i]) * q_falling(hs[i], hs[i] - ls[i])
    return out


def vanishing_bound(m: int, w: W.Word) -> bool:
    """For m <= -1: whether the full product is nonzero, read off the path.

    True exactly when every elevation stays <= |m|.
    """
    if m >= 0:
        raise ValueError("the vanishing criterion applies to negative m only")
    _require_catalan(w)
    return max(W.elevation_sequence(w)) <= -m


def delta_element(m: int, n: int) -> Element:
    if n < 0:
        raise ValueError("n must be non-negative")
    terms = {}
    for w in W.enumerate_catalan(n):
        c = delta_scalar(m, w)
        if not c.is_zero():
            terms[w] = c
    return Element(terms, _raw=True)


def nabla_element(m: int, n: int) -> Element:
    if n < 1:
        raise TrivialWordError("the reduced family starts at n = 1")
    terms = {}
    for w in W.enumerate_catalan(n):
        c = nabla_scalar(m, w)
        if not c.is_zero():
            terms[w] = c
    return Element(terms, _raw=True)


def catalan_element(n: int) -> Element:
    """C_n: coefficient of each Catalan word is the product of [1 + e_i]_q."""
    if n < 0:
        raise ValueError("n must be non-negative")
    terms = {}
    for w in W.enumerate_catalan(n):
        c = LaurentPoly.one()
        for e in W.elevation_sequence(w)[1:]:
            c = c * q_int(1 + e)
            if c.is_zero():
                break
        if not c.is_zero():
            terms[w] = c
    return Element(terms, _raw=True)


def d_element(n: int) -> Element:
    """D_n: the closed form (-1)^n sum of [e_{i-1} + 1]_q / [e_{i-1}]_q products."""
    if n < 0:
        raise ValueError("n must be non-negative")
    sign = -1 if n % 2 else 1
    terms = {}
    for w in W.enumerate_catalan(n):
        c = LaurentPoly.one()
        e = 0
        for b in w.letter_bits():
            c = c * (q_int(e) if b else q_int(e + 1))
            if c.is_zero():
                break
            e += -1 if b else 1
        if not c.is_zero():
            terms[w] = c.scale(sign)
    return Element(terms, _raw=True)


def gtilde_element(n: int) -> Element:
    return Element.from_word(W.gtilde_word(n))


def named_element(kind: str, n: int) -> Element:
    if kind == "C":
        return catalan_element(n)
    if kind == "D":
        return d_element(n)
    if kind == "Gtilde":
        return gtilde_element(n)
    raise ValueError(f"unknown element family {kind!r}")


def x_cn_y(n: int) -> Element:
    """The free product x C_{n-1} y, defined for n >= 1."""
    if n < 1:
        raise ValueError("x C_(n-1) y needs n >= 1")
    return X_EL * catalan_element(n - 1) * Y_EL


def embedding_image(kind: str, n: int) -> Element:
    """Shuffle images of the classical PBW generators, with scalar prefactors.

    Damiani_E0(n)     -> q^-2n (q - q^-1)^2n  x C_n
    Damiani_E1(n)     -> q^-2n (q - q^-1)^2n  C_n y
    Damiani_Edelta(n) -> -q^-2n (q - q^-1)^(2n-1) C_n          (n >= 1)
    Beck_Edelta(n)    -> ([2n]_q / n) q^-2n (q - q^-1)^(2n-1) x C_(n-1) y   (n >= 1)
    """
    if kind in ("Damiani_E0", "Damiani_E1"):
        if n < 0:
            raise ValueError(f"{kind} needs n >= 0")
        pref = q_pow(-2 * n) * Q_COMM ** (2 * n)
        body = X_EL * catalan_element(n) if kind == "Damiani_E0" else catalan_element(n) * Y_EL
        return body.scale(pref)
    if kind == "Damiani_Edelta":
        if n < 1:
            raise ValueError("Damiani_Edelta needs n >= 1")
        pref = -(q_pow(-2 * n) * Q_COMM ** (2 * n - 1))
        return catalan_element(n).scale(pref)
    if kind == "Beck_Edelta":
        if n < 1:
            raise ValueError("Beck_Edelta needs n >= 1")
        pref = (q_pow(-2 * n) * Q_COMM ** (2 * n - 1) * q_int(2 * n)).scale(Fraction(1, n))
        return x_cn_y(n).scale(pref)
    raise ValueError(f"unknown embedding image {kind!r}")

"""Noncommutative polynomials in x, y over the Laurent ring, with both products.

An Element is a finite map from words to nonzero Laurent coefficients. It
carries the free (concatenation) product and the q-shuffle product. The
shuffle kernel works on packed word keys and raw {exponent: int} dicts;
results are wrapped back into Element/LaurentPoly at the boundary.

The kernel memoizes word-pair shuffles: pairs with few letters go into a
persistent table reused across calls, larger pairs into a transient table
scoped to one element product (they are too big to keep around). Results
are identical with caching disabled; only speed changes.
"""

from __future__ import annotations

from fractions import Fraction

from . import words as W
from .errors import CapExceededError
from .qlaurent import LaurentPoly, Q_COMM, q_pow

_ONE_POLY = {0: 1}

_cache_enabled = True
_SMALL_LIMIT = 12        # combined letter count kept in the persistent memo
_BIG_LIMIT = 15          # combined letter count kept in the transient memo
_MEMO_CAP = 1 << 17      # persistent entries
_BIG_TERM_BUDGET = 12_000_000  # total terms held in the transient memo

_memo_small: dict = {}
_memo_big: dict = {}
_big_terms = 0


def set_cache_enabled(flag: bool) -> None:
    global _cache_enabled
    _cache_enabled = bool(flag)
    if not flag:
        clear_caches()


def cache_enabled() -> bool:
    return _cache_enabled


def clear_caches() -> None:
    global _big_terms
    _memo_small.clear()
    _memo_big.clear()
    _big_terms = 0


def set_memo_limits(small_limit=None, big_limit=None, big_term_budget=None) -> None:
    """Tune the memoization tiers (performance knob; results never change)."""
    global _SMALL_LIMIT, _BIG_LIMIT, _BIG_TERM_BUDGET
    if small_limit is not None:
        _SMALL_LIMIT = small_limit
    if big_limit is not None:
        _BIG_LIMIT = big_limit
    if big_term_budget is not None:
        _BIG_TERM_BUDGET = big_term_budget
    clear_caches()


def _rev_key(key: int) -> int:
    """Reverse the letters of a packed word."""
    out = 1
    while key > 1:
        out = (out << 1) | (key & 1)
        key >>= 1
    return out


def _shuffle_keys(u: int, v: int) -> dict:
    """q-shuffle of two packed words, both REVERSED, as {revkey: {exp: int}}.

    Peels the last letters of the original words (the first bits here):
    u*v = (u*(v minus last))·v_s + ((u minus last)*v)·u_r q^<u_r, v>.
    Working back-to-front lets truncated words (y^-1 images) share memo
    state with their parents. Coefficients stay non-negative ints.
    """
    if u == 1:
        return {v: _ONE_POLY}
    if v == 1:
        return {u: _ONE_POLY}
    key = (u, v)
    lu = u.bit_length() - 1
    lv = v.bit_length() - 1
    small = lu + lv <= _SMALL_LIMIT
    if small:
        res = _memo_small.get(key)
        if res is not None:
            return res
    else:
        res = _memo_big.get(key)
        if res is not None:
            return res
    a = u & 1
    b = v & 1
    s1 = _shuffle_keys(u, v >> 1)
    s2 = _shuffle_keys(u >> 1, v)
    # <u_r, v> summed over all letters of v: 2*(x-count - y-count), negated for u_r = y
    wsum = lv - 2 * (bin(v).count("1") - 1)
    e = 2 * wsum if a == 0 else -2 * wsum
    out: dict = {}
    get = out.get
    for w, p in s1.items():
        k2 = (w << 1) | b
        cur = get(k2)
        if cur is None:
            out[k2] = dict(p)
        else:
            for ee, c in p.items():
                cur[ee] = cur.get(ee, 0) + c
    for w, p in s2.items():
        k2 = (w << 1) | a
        cur = get(k2)
        if cur is None:
            out[k2] = {ee + e: c for ee, c in p.items()}
        else:
            cg = cur.get
            for ee, c in p.items():
                ee += e
                cur[ee] = cg(ee, 0) + c
    if _cache_enabled:
        if small:
            if len(_memo_small) < _MEMO_CAP:
                _memo_small[key] = out
        elif lu + lv <= _BIG_LIMIT:
            global _big_terms
            nterms = sum(len(p) for p in out.values())
            if _big_terms + nterms > _BIG_TERM_BUDGET:
                _memo_big.clear()
                _big_terms = 0
            _memo_big[key] = out
            _big_terms += nterms
    return out


def _accumulate(out: dict, sub: dict, cw: dict) -> None:
    """out[w] += cw * p for every (w, p) in sub; all raw dicts."""
    if len(cw) == 1:
        ((e0, c0),) = cw.items()
        for wk, p in sub.items():
            acc = out.get(wk)
            if acc is None:
                out[wk] = {e1 + e0: c1 * c0 for e1, c1 in p.items()}
            else:
                ag = acc.get
                for e1, c1 in p.items():
                    ee = e1 + e0
                    s = ag(ee, 0) + c1 * c0
                    if s:
                        acc[ee] = s
                    else:
                        del acc[ee]
        return
    cw_items = tuple(cw.items())
    for wk, p in sub.items():
        acc = out.get(wk)
        if acc is None:
            acc = {}
            out[wk] = acc
        ag = acc.get
        for e1, c1 in p.items():
            for e0, c0 in cw_items:
                ee = e1 + e0
                s = ag(ee, 0) + c1 * c0
                if s:
                    acc[ee] = s
                else:
                    del acc[ee]


class Element:
    """A finite linear combination of words with LaurentPoly coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None, _raw=False):
        if terms is None:
            self._terms = {}
        elif _raw:
            self._terms = terms
        else:
            self._terms = {w: c for w, c in dict(terms).items() if not c.is_zero()}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Element":
        return Element({}, _raw=True)

    @staticmethod
    def unit() -> "Element":
        return Element({W.EMPTY_WORD: LaurentPoly.one()}, _raw=True)

    @staticmethod
    def from_word(w, coeff=None) -> "Element":
        if isinstance(w, str):
            w = W.word(w)
        if coeff is None:
            coeff = LaurentPoly.one()
        elif isinstance(coeff, (int, Fraction)):
            coeff = LaurentPoly.const(coeff)
        if coeff.is_zero():
            return Element.zero()
        return Element({w: coeff}, _raw=True)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Sorted (word, coefficient) pairs: by length, then lexicographic."""
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0].letter_bits()))

    def support(self):
        return sorted(self._terms, key=lambda w: (len(w), w.letter_bits()))

    def coeff(self, w) -> LaurentPoly:
        """The coefficient of a word: the bilinear pairing (w, self)."""
        if isinstance(w, str):
            w = W.word(w)
        return self._terms.get(w, LaurentPoly.zero())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def max_word_len(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return Element(out, _raw=True)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = -c if s is None else s - c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return Element(out, _raw=True)

    def __neg__(self):
        return Element({w: -c for w, c in self._terms.items()}, _raw=True)

    def scale(self, c) -> "Element":
        if isinstance(c, (int, Fraction)):
            if not c:
                return Element.zero()
            return Element({w: p.scale(c) for w, p in self._terms.items()}, _raw=True)
        if c.is_zero():
            return Element.zero()
        return Element({w: p * c for w, p in self._terms.items()}, _raw=True)

    def __mul__(self, other):
        """Free (concatenation) product with an Element; scaling otherwise."""
        if isinstance(other, Element):
            return self.free_mul(other)
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    # -- products ------------------------------------------------------------

    def free_mul(self, other: "Element") -> "Element":
        cap = W.length_cap()
        out: dict = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                if len(u) + len(v) > cap:
                    raise CapExceededError(
                        f"free product would create a word of length {len(u) + len(v)}"
                    )
                w = u.concat(v)
                c = cu * cv
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return Element(out, _raw=True)

    def shuffle(self, other: "Element") -> "Element":
        cap = W.length_cap()
        out: dict = {}
        rev_self = {u: _rev_key(u.key) for u in self._terms}
        rev_other = {v: _rev_key(v.key) for v in other._terms}
        for u, cu in self._terms.items():
            ur = rev_self[u]
            cu_raw = cu._c
            for v, cv in other._terms.items():
                if len(u) + len(v) > cap:
                    raise CapExceededError(
                        f"shuffle would create a word of length {len(u) + len(v)}"
                    )
                if len(cu_raw) > 1 or len(cv._c) > 1:
                    cw = (cu * cv)._c
                else:
                    ((e1, c1),) = cu_raw.items()
                    ((e2, c2),) = cv._c.items()
                    cw = {e1 + e2: c1 * c2}
                sub = _shuffle_keys(ur, rev_other[v])
                _accumulate(out, sub, cw)
        terms = {}
        for wk, acc in out.items():
            if acc:
                terms[W.Word(_rev_key(wk))] = LaurentPoly(acc, _raw=True)
        return Element(terms, _raw=True)

    def __matmul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.shuffle(other)

    # -- the maps of the calculus ---------------------------------------------

    def y_inverse(self) -> "Element":
        """Strip a trailing y from each word; words ending in x (and 1) go to 0."""
        out: dict = {}
        for w, c in self._terms.items():
            n = len(w)
            if n == 0 or not (w.key >> (n - 1)) & 1:
                continue
            # dropping the sentinel turns the trailing y bit into the new sentinel
            stripped = W.Word(w.key - (1 << n))
            s = out.get(stripped)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(stripped, None)
            else:
                out[stripped] = s
        return Element(out, _raw=True)

    def x_inverse(self) -> "Element":
        """Strip a leading x from each word; words starting with y (and 1) go to 0."""
        out: dict = {}
        for w, c in self._terms.items():
            if len(w) == 0 or (w.key & 1):
                continue
            stripped = W.Word(w.key >> 1)
            s = out.get(stripped)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(stripped, None)
            else:
                out[stripped] = s
        return Element(out, _raw=True)

    def zeta(self) -> "Element":
        """Linear extension of the reverse-and-swap antiautomorphism."""
        return Element({W.zeta_word(w): c for w, c in self._terms.items()}, _raw=True)

    def div_exact(self, p: LaurentPoly) -> "Element":
        return Element({w: c.div_exact(p) for w, c in self._terms.items()}, _raw=True)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self._terms.values())

    # -- display / serialization ----------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.terms():
            parts.append(f"({c}) {w.display()}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Element<{len(self._terms)} words>"

    def to_json(self) -> list:
        return [
            {"word": str(w), "coeff": c.to_json()}
            for w, c in self.terms()
        ]

    @staticmethod
    def from_json(obj: list) -> "Element":
        terms = {}
        for entry in obj:
            w = W.word(entry["word"])
            terms[w] = LaurentPoly.from_json(entry["coeff"])
        return Element(terms)


X_EL = Element.from_word("x")
Y_EL = Element.from_word("y")
XY_EL = Element.from_word("xy")
UNIT = Element.unit()


def zeta(u: Element) -> Element:
    return u.zeta()


def commutator_x(m: int, u: Element) -> Element:
    """(q^m x * u - q^-m u * x) / (q - q^-1), with * the shuffle product.

    For a Catalan word this is the weighted sum over all single-x
    insertions; the division is always exact on valid inputs and raises
    InexactDivisionError otherwise.
    """
    num = (X_EL.shuffle(u)).scale(q_pow(m)) - (u.shuffle(X_EL)).scale(q_pow(-m))
    return num.div_exact(Q_COMM)


def shuffle_fold(elements) -> Element:
    """Left-associated shuffle product of a sequence of Elements."""
    out = None
    for el in elements:
        out = el if out is None else out.shuffle(el)
    return UNIT if out is None else out

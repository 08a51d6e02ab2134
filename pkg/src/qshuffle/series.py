"""Formal power series in t with Element coefficients, truncated at a fixed degree.

Every Series carries its cutoff; binary operations refuse mismatched
cutoffs rather than truncating silently. The multiplication, exponential,
logarithm, and inverse all use the q-shuffle product on coefficients and
never assume coefficients commute.
"""

from __future__ import annotations

from fractions import Fraction

from . import catalan
from .algebra import Element, UNIT
from .errors import CutoffMismatchError, InexactDivisionError
from .qlaurent import LaurentPoly, q_int


class Series:
    """coeffs[n] is the Element coefficient of t^n, for 0 <= n <= cutoff."""

    __slots__ = ("cutoff", "coeffs")

    def __init__(self, coeffs, cutoff=None):
        coeffs = list(coeffs)
        if cutoff is None:
            cutoff = len(coeffs) - 1
        if cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        if len(coeffs) < cutoff + 1:
            coeffs += [Element.zero()] * (cutoff + 1 - len(coeffs))
        self.cutoff = cutoff
        self.coeffs = tuple(coeffs[: cutoff + 1])

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(cutoff: int) -> "Series":
        return Series([], cutoff)

    @staticmethod
    def unit(cutoff: int) -> "Series":
        return Series([UNIT], cutoff)

    @staticmethod
    def from_function(f, cutoff: int) -> "Series":
        return Series([f(n) for n in range(cutoff + 1)], cutoff)

    # -- structure ----------------------------------------------------------

    def __getitem__(self, n: int) -> Element:
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.cutoff == other.cutoff and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Series<cutoff {self.cutoff}>"

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _check_match(self, other: "Series") -> None:
        if self.cutoff != other.cutoff:
            raise CutoffMismatchError(
                f"cutoff {self.cutoff} vs {other.cutoff}; truncate explicitly first"
            )

    def truncate(self, cutoff: int) -> "Series":
        if cutoff > self.cutoff:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: cutoff + 1], cutoff)

    # -- linear operations -----------------------------------------------------

    def __add__(self, other):
        self._check_match(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.cutoff)

    def __sub__(self, other):
        self._check_match(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], self.cutoff)

    def __neg__(self):
        return Series([-a for a in self.coeffs], self.cutoff)

    def scale(self, c) -> "Series":
        return Series([a.scale(c) for a in self.coeffs], self.cutoff)

    def map_coeffs(self, f) -> "Series":
        """Apply a linear Element map termwise (same cutoff)."""
        return Series([f(a) for a in self.coeffs], self.cutoff)

    # -- multiplicative calculus -------------------------------------------------

    def star_mul(self, other: "Series") -> "Series":
        """Cauchy product with the q-shuffle on coefficients."""
        self._check_match(other)
        n = self.cutoff
        out = []
        for k in range(n + 1):
            acc = Element.zero()
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a.is_zero() or b.is_zero():
                    continue
                acc = acc + a.shuffle(b)
            out.append(acc)
        return Series(out, n)

    def __matmul__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.star_mul(other)

    def rescale_t(self, c) -> "Series":
        """Substitute t -> c t: the n-th coefficient picks up c^n."""
        if isinstance(c, (int, Fraction)):
            c = LaurentPoly.const(c)
        out = []
        acc = LaurentPoly.one()
        for n, a in enumerate(self.coeffs):
            out.append(a.scale(acc) if n else a)
            acc = acc * c
        return Series(out, self.cutoff)

    def derivative(self) -> "Series":
        """d/dt; the cutoff drops by one."""
        if self.cutoff == 0:
            return Series.zero(0)
        return Series(
            [self.coeffs[n + 1].scale(n + 1) for n in range(self.cutoff)],
            self.cutoff - 1,
        )

    def divide_t(self) -> "Series":
        """t^-1 * self, requiring zero constant term; the cutoff drops by one."""
        if not self.coeffs[0].is_zero():
            raise InexactDivisionError("cannot divide by t: nonzero constant term")
        if self.cutoff == 0:
            return Series.zero(0)
        return Series(list(self.coeffs[1:]), self.cutoff - 1)

    def exp(self) -> "Series":
        """Shuffle exponential; the argument must have zero constant term.

        Powers are computed literally, so nothing about commutation of the
        coefficients is assumed.
        """
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs a zero constant term")
        out = Series.unit(self.cutoff)
        power = Series.unit(self.cutoff)
        for k in range(1, self.cutoff + 1):
            power = power.star_mul(self).scale(Fraction(1, k))
            out = out + power
        return out

    def log(self) -> "Series":
        """Shuffle logarithm; the constant term must be the unit element."""
        if self.coeffs[0] != UNIT:
            raise ValueError("log needs unit constant term")
        z = self - Series.unit(self.cutoff)
        out = Series.zero(self.cutoff)
        power = Series.unit(self.cutoff)
        for k in range(1, self.cutoff + 1):
            power = power.star_mul(z)
            out = out + power.scale(Fraction(1 if k % 2 else -1, k))
        return out

    def inverse(self) -> "Series":
        """Two-sided multiplicative inverse; constant term must be the unit."""
        if self.coeffs[0] != UNIT:
            raise ValueError("inverse needs unit constant term")
        inv = [UNIT]
        for n in range(1, self.cutoff + 1):
            acc = Element.zero()
            for k in range(1, n + 1):
                if self.coeffs[k].is_zero():
                    continue
                acc = acc + self.coeffs[k].shuffle(inv[n - k])
            inv.append(-acc)
        return Series(inv, self.cutoff)

    def apply_y_inverse(self) -> "Series":
        return self.map_coeffs(lambda a: a.y_inverse())

    def apply_x_inverse(self) -> "Series":
        return self.map_coeffs(lambda a: a.x_inverse())

    def zeta(self) -> "Series":
        return self.map_coeffs(lambda a: a.zeta())

    def div_exact(self, p: LaurentPoly) -> "Series":
        return self.map_coeffs(lambda a: a.div_exact(p))

    # -- display / serialization ---------------------------------------------

    def __str__(self):
        parts = []
        for n, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            head = "" if n == 0 else ("t " if n == 1 else f"t^{n} ")
            parts.append(f"{head}[{a}]")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"cutoff": self.cutoff, "coeffs": [a.to_json() for a in self.coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "Series":
        return Series([Element.from_json(c) for c in obj["coeffs"]], obj["cutoff"])


# -- named generating functions ------------------------------------------------


def gtilde_series(cutoff: int) -> Series:
    """Sum of the alternating words (xy)^n t^n."""
    return Series.from_function(lambda n: catalan.gtilde_element(n), cutoff)


def c_series(cutoff: int) -> Series:
    return Series.from_function(lambda n: catalan.catalan_element(n), cutoff)


def d_series(cutoff: int) -> Series:
    return Series.from_function(lambda n: catalan.d_element(n), cutoff)


def delta_series(m: int, cutoff: int) -> Series:
    return Series.from_function(lambda n: catalan.delta_element(m, n), cutoff)


def nabla0_series(cutoff: int) -> Series:
    """The reduced family at m = 0, starting in degree one."""
    return Series.from_function(
        lambda n: catalan.nabla_element(0, n) if n >= 1 else Element.zero(), cutoff
    )


def x_cn_y_series(cutoff: int) -> Series:
    """Sum of the free products x C_(n-1) y t^n, starting in degree one."""
    return Series.from_function(
        lambda n: catalan.x_cn_y(n) if n >= 1 else Element.zero(), cutoff
    )


def beck_log_argument(m: int, cutoff: int) -> Series:
    """Sum of ([mn]_q / n) x C_(n-1) y t^n, the exponent of the main formulas."""
    def coeff(n: int) -> Element:
        if n == 0:
            return Element.zero()
        return catalan.x_cn_y(n).scale(q_int(m * n)).scale(Fraction(1, n))

    return Series.from_function(coeff, cutoff)


def nabla0_log_argument(m: int, cutoff: int) -> Series:
    """Same exponent built from the reduced family instead of free products."""
    def coeff(n: int) -> Element:
        if n == 0:
            return Element.zero()
        return catalan.nabla_element(0, n).scale(q_int(m * n)).scale(Fraction(1, n))

    return Series.from_function(coeff, cutoff)

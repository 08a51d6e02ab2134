"""Human-readable and machine-readable rendering: bracket notation, tables, SVG.

Coefficients that factor exactly as a rational times a product of q-integers
are shown in bracket notation ([2]_q^2[3]_q), like the tables this package
reproduces; anything else falls back to the expanded Laurent form.
"""

from __future__ import annotations

from fractions import Fraction

from . import words as W
from .algebra import Element
from .catalan import delta_scalar, nabla_scalar
from .errors import InexactDivisionError
from .qlaurent import LaurentPoly, q_int


def qint_factorization(p: LaurentPoly):
    """Factor p as (rational, {n: multiplicity}) over q-integers, or None.

    Factors are extracted greedily from the largest plausible q-integer
    down; the remaining unit must be a rational constant.
    """
    if p.is_zero():
        return Fraction(0), {}
    factors: dict = {}
    cur = p
    while not cur.is_zero() and (cur.max_exp() != 0 or cur.min_exp() != 0):
        span = cur.max_exp() - cur.min_exp()
        n = span // 2 + 1
        while n >= 2:
            try:
                cur = cur.div_exact(q_int(n))
                factors[n] = factors.get(n, 0) + 1
                break
            except InexactDivisionError:
                n -= 1
        else:
            return None
    c = cur.coeff(0)
    if not isinstance(c, Fraction):
        c = Fraction(c)
    return c, factors


def _rational_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def laurent_str(p: LaurentPoly, bracket: bool = True) -> str:
    """Render a coefficient; bracket notation when it factors, else expanded."""
    if not bracket:
        return str(p)
    fact = qint_factorization(p)
    if fact is None:
        return f"({p})"
    c, factors = fact
    if not factors:
        return _rational_str(c)
    body = "".join(
        f"[{n}]_q" + (f"^{e}" if e > 1 else "")
        for n, e in sorted(factors.items())
    )
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"({_rational_str(c)}){body}"


def laurent_latex(p: LaurentPoly) -> str:
    fact = qint_factorization(p)
    if fact is None:
        parts = []
        for e, c in p.terms():
            if e == 0:
                parts.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{{{e}}}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}{mono}")
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out
    c, factors = fact
    body = "".join(
        f"[{n}]_q" + (f"^{e}" if e > 1 else "")
        for n, e in sorted(factors.items())
    )
    if not factors:
        return _rational_str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}{body}" if c.denominator != 1 else f"{c.numerator}{body}"


def element_str(el: Element, bracket: bool = True) -> str:
    if el.is_zero():
        return "0"
    parts = []
    for w, c in el.terms():
        cs = laurent_str(c, bracket=bracket)
        wd = w.display()
        if cs == "1":
            term = wd
        elif cs == "-1":
            term = "-" + wd
        elif w.is_trivial():
            term = cs
        else:
            term = f"{cs} {wd}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def series_str(s, bracket: bool = True) -> str:
    parts = []
    for n, a in enumerate(s.coeffs):
        if a.is_zero():
            continue
        tpow = "" if n == 0 else (" t" if n == 1 else f" t^{n}")
        parts.append(f"({element_str(a, bracket=bracket)}){tpow}")
    return " + ".join(parts) if parts else "0"


# -- scalar tables ---------------------------------------------------------------


def scalar_table(family: str, m_min: int, m_max: int, n_max: int):
    """Rows (word, cells) of the weighted-Catalan-word scalar table.

    family "delta" includes the empty word; "nabla" starts at length 2.
    Rows are sorted by length then lexicographically; columns ascend in m.
    """
    if family not in ("delta", "nabla"):
        raise ValueError(f"unknown table family {family!r}")
    if m_min > m_max or n_max < 0:
        raise ValueError("empty table range")
    scalar = delta_scalar if family == "delta" else nabla_scalar
    rows = []
    start = 0 if family == "delta" else 1
    for n in range(start, n_max + 1):
        for w in W.enumerate_catalan(n):
            cells = [scalar(m, w) for m in range(m_min, m_max + 1)]
            rows.append((w, cells))
    return rows


def table_csv(family, m_min, m_max, n_max) -> str:
    rows = scalar_table(family, m_min, m_max, n_max)
    header = "w," + ",".join(f"m={m}" for m in range(m_min, m_max + 1))
    lines = [header]
    for w, cells in rows:
        lines.append(w.display() + "," + ",".join(laurent_str(c) for c in cells))
    return "\n".join(lines) + "\n"


def table_latex(family, m_min, m_max, n_max) -> str:
    rows = scalar_table(family, m_min, m_max, n_max)
    sym = "\\Delta" if family == "delta" else "\\nabla"
    ncols = m_max - m_min + 1
    out = ["\\begin{tabular}{ c|" + "|".join("c" * ncols) + " }"]
    head = "$w$ & " + " & ".join(
        f"${sym}^{{({m})}}(w)$" for m in range(m_min, m_max + 1)
    ) + "\\\\"
    out.append(head)
    out.append("\\hline")
    for w, cells in rows:
        disp = w.display() if not w.is_trivial() else "\\mathbb{1}"
        out.append(
            f"${disp}$ & " + " & ".join(f"${laurent_latex(c)}$" for c in cells) + "\\\\"
        )
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def table_human(family, m_min, m_max, n_max) -> str:
    rows = scalar_table(family, m_min, m_max, n_max)
    header = ["w"] + [f"m={m}" for m in range(m_min, m_max + 1)]
    table = [header] + [
        [w.display()] + [laurent_str(c) for c in cells] for w, cells in rows
    ]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = []
    for i, r in enumerate(table):
        lines.append("  ".join(cell.ljust(widths[j]) for j, cell in enumerate(r)).rstrip())
        if i == 0:
            lines.append("-" * (sum(widths) + 2 * (len(widths) - 1)))
    return "\n".join(lines) + "\n"


def table_json(family, m_min, m_max, n_max):
    rows = scalar_table(family, m_min, m_max, n_max)
    return {
        "family": family,
        "m_range": [m_min, m_max],
        "rows": [
            {"word": w.display(), "cells": [c.to_json() for c in cells]}
            for w, cells in rows
        ],
    }


# -- Dyck path pictures -------------------------------------------------------------


def dyck_svg(w: W.Word, unit: int = 40) -> str:
    """An SVG drawing of the word's lattice path: gridlines, bold path,
    letter labels under each step, dots at the vertices."""
    path = W.dyck_path(w)
    n = len(path) - 1
    hs = [e for _, e in path]
    hmax = max(hs + [1])
    hmin = min(hs + [0])
    pad = unit // 2
    label_h = unit // 2
    width = max(n, 1) * unit + 2 * pad
    height = (hmax - hmin) * unit + 2 * pad + label_h

    def px(i):
        return pad + i * unit

    def py(e):
        return pad + (hmax - e) * unit

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for i in range(n + 1):
        out.append(
            f'<line x1="{px(i)}" y1="{py(hmax)}" x2="{px(i)}" y2="{py(hmin)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    for e in range(hmin, hmax + 1):
        out.append(
            f'<line x1="{px(0)}" y1="{py(e)}" x2="{px(max(n, 1))}" y2="{py(e)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    if n >= 1:
        pts = " ".join(f"{px(i)},{py(e)}" for i, e in path)
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="3"/>'
        )
    for i, e in path:
        out.append(f'<circle cx="{px(i)}" cy="{py(e)}" r="4" fill="black"/>')
    for i, letter in enumerate(w):
        x = px(i) + unit // 2
        y = py(hmin) + label_h
        out.append(
            f'<text x="{x}" y="{y}" text-anchor="middle" '
            f'font-family="serif" font-style="italic" font-size="{unit // 2}">{letter}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Reference SU(3) coefficient formulas, transcribed verbatim for auditing.

Nothing here feeds the engine.  Each function evaluates a reference formula
exactly as written so that :mod:`su3singlet.validate` can compare it with the
oracle and record every disagreement.

Restricted lowering coefficients ``R_ij(x)`` are evaluated with the argument
substituted for ``l_ij`` and every other quantum number read off the source
label, which is how the normalized formulas use them.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, NamedTuple

from .basis import SingletLabelSU3
from .sqrtrational import SqrtRational

F = Fraction


# -- lowering coefficients --------------------------------------------------------

def fbar_12(l: SingletLabelSU3, signed_p: bool = False) -> Fraction:
    """General lowering coefficient of (a1.b2); ``signed_p`` substitutes the signed p for |p|."""
    P = l.p if signed_p else l.abs_p
    N1 = F(l.n(1) + l.m(1) + P)
    N2 = F(l.n(2) + l.m(2) + P)
    return ((N1 + 2) / (N1 + 1) * (l.n(1) + l.m(2) - l.l12 + P + 1) * l.l12
            - F(l.l32 * (l.l31 + 1) * l.l12) / (N1 + 1) * (N2 + 1 - l.l21) / (N2 + 1)
            - F(l.l23 * (l.l13 + 1) * l.l12) / (N1 + 1) * (N1 + 1 - l.l21) / (N2 + 1))


def _r21(l: SingletLabelSU3) -> Fraction:
    P = l.abs_p
    x = l.l21
    return (F(x + l.l13 + l.l31 + P + 2, x + l.l13 + l.l31 + P + 1) * (x + l.l31 + l.l23 + P + 1) * x
            - F(x * l.l23 * (l.l13 + 1), x + l.l13 + l.l31 + 1)
            - F(x * l.l32 * (l.l31 + 1), x + l.l23 + l.l32 + 1))


def _r13(l: SingletLabelSU3) -> Fraction:
    P = l.abs_p
    s = l.l13 + l.l31 + l.l23 + l.l32 + P
    return F(s + 2, s + 1) * (l.l13 + l.l23 + P + 1) * l.l13


def _r31(l: SingletLabelSU3) -> Fraction:
    P = l.abs_p
    s = l.l31 + l.l23 + l.l32 + P
    return F(s + 2, s + 1) * (l.l31 + l.l32 + P + 1) * l.l31


def _r23(l: SingletLabelSU3) -> Fraction:
    P = l.abs_p
    s = l.l23 + l.l32 + P
    return F(s + 2, s + 1) * (l.l23 + P + 1) * l.l23


def _r32(l: SingletLabelSU3) -> Fraction:
    P = l.abs_p
    s = l.l32 + P
    return F(s + 2, s + 1) * (l.l32 + P + 1) * l.l32


# which -> (evaluator, fields that must vanish for the formula to apply)
RESTRICTED = {
    "21": (_r21, ("l12",)),
    "13": (_r13, ("l12", "l21")),
    "31": (_r31, ("l12", "l21", "l13")),
    "23": (_r23, ("l12", "l21", "l13", "l31")),
    "32": (_r32, ("l12", "l21", "l13", "l31", "l23")),
}


def fbar_restricted(which: str, l: SingletLabelSU3) -> Fraction:
    """Restricted lowering coefficient of (a_i.b_j), ``which`` = "ij"."""
    return RESTRICTED[which][0](l)


def _at(fn: Callable, l: SingletLabelSU3, field: str, value: int) -> Fraction:
    return fn(l._replace(**{field: value}))


def f12(l, x):
    return _at(fbar_12, l, "l12", x)


def r(which: str, l, x):
    return _at(RESTRICTED[which][0], l, f"l{which}", x)


# -- base norm and the norm chain ---------------------------------------------

def base_norm_sq(p: int) -> Fraction:
    """Reference pure-epsilon norm [(|p|+2)!]^3 / 2^3."""
    return F(factorial(abs(p) + 2) ** 3, 8)


def norm_chain(l: SingletLabelSU3) -> Fraction:
    """Reference norm: products of the lowering coefficients times the reference base."""
    out = base_norm_sq(l.p)
    cur = l
    for k in range(cur.l12, 0, -1):
        out *= f12(cur, k)
    cur = cur._replace(l12=0)
    for which in ("21", "13", "31", "23", "32"):
        field = f"l{which}"
        for k in range(getattr(cur, field), 0, -1):
            out *= r(which, cur, k)
        cur = cur._replace(**{field: 0})
    return out


# -- unnormalized closed forms ------------------------------------------------

def _N(l, i) -> Fraction:
    return F(l.N(i))


def unnormalized(l: SingletLabelSU3) -> dict:
    """Reference unnormalized coefficient of every family.

    Keys are (family, index); values are (operator text, target, rational).
    Only the branch selected by the sign of p is produced.
    """
    P, N1, N2, N3 = l.abs_p, _N(l, 1), _N(l, 2), _N(l, 3)
    out = {
        ("c", 1): ("a+(1).b+(2)", l.shifted(l12=1), F(1)),
        ("d", 1): ("a+(1).a(2)", l.shifted(l13=1, l23=-1), l.l23 * (N2 - l.l12 + 1) / (N2 + 1)),
        ("d", 2): ("a+(1).a(2)", l.shifted(l12=1, l21=-1, l31=1, l32=-1), -l.l32 * l.l21 / (N2 + 1)),
        ("e", 1): ("b+(1).b(2)", l.shifted(l31=1, l32=-1), l.l32 * (N2 - l.l21 + 1) / (N2 + 1)),
        ("e", 2): ("b+(1).b(2)", l.shifted(l21=1, l12=-1, l13=1, l23=-1), -l.l23 * l.l12 / (N2 + 1)),
        ("f", 1): ("a(1).b(2)", l.shifted(l12=-1), fbar_12(l)),
        ("f", 2): ("a(1).b(2)", l.shifted(l21=-1, l23=1, l32=-1, l31=1, l13=-1),
                   -l.l32 * l.l13 * l.l21 * (N1 + N2 + 3 - l.l21) / ((N1 + 1) * (N2 + 1))),
        ("f", 3): ("a(1).b(2)", l.shifted(l21=1, l12=-2, l13=1, l31=-1, l32=1, l23=-1),
                   l.l23 * l.l31 * l.l12 * (l.l12 - 1) / ((N1 + 1) * (N2 + 1))),
    }
    g, ij, nm = "eps(a+(3),b(2),a+(2))", "eps(b(3),b(2),a+(2))", "eps(a+(1),a+(2),a+(3))"
    if l.p >= 0:
        out[("g", 1)] = (g, l.shifted(l12=-1, p=1), F(l.l12))
        out[("i", 1)] = (ij, l.shifted(l12=-1, l21=1, l23=-1, l31=-1, p=1), -l.l12 * l.l23 * l.l31 / (N3 + 1))
        out[("i", 2)] = (ij, l.shifted(l13=-1, l32=-1, p=1), -(N3 + 2) / (N3 + 1) * l.l13 * l.l32)
        out[("n", 1)] = (nm, l.shifted(p=1), F(1))
    else:
        out[("h", 1)] = (g, l.shifted(p=1, l31=1, l23=1), F(P + l.l12))
        out[("h", 2)] = (g, l.shifted(p=1, l12=-1, l21=1, l13=1, l32=1), F(l.l12))
        out[("j", 1)] = (ij, l.shifted(l21=1, p=1),
                         l.l12 * (l.l13 + 1) * (l.l32 + 1)
                         - (N3 + 2) / (N3 + 1) * l.l13 * l.l32 * (l.l12 + 1)
                         - (P + l.l12) * (N3 - l.l23 + 1) * (N3 - l.l31 + 1) / (N3 + 1))
        out[("j", 2)] = (ij, l.shifted(l13=-1, l31=1, l32=-1, l23=1, l12=1, p=1),
                         -(N3 + P + l.l12 + 2) / (N3 + 1) * l.l13 * l.l32)
        out[("j", 3)] = (ij, l.shifted(l12=-1, l21=2, l23=-1, l32=1, p=1, l13=1, l31=-1),
                         -l.l12 * l.l23 * l.l31 / (N3 + 1))
        out[("m", 1)] = (nm, l.shifted(l12=1, l23=1, l31=1, p=1), F(1))
        out[("m", 2)] = (nm, l.shifted(l21=1, l32=1, l13=1, p=1), F(1))
    return out


# -- normalized closed forms ---------------------------------------------------

class Undefined(ArithmeticError):
    """The reference expression divides by zero or takes the root of a negative number."""


def _coeff(ratio: Callable[[], Fraction], rational: Fraction) -> SqrtRational:
    if not rational:
        return SqrtRational.zero()
    try:
        q = ratio()
    except ZeroDivisionError as exc:
        raise Undefined("division by zero inside the square root") from exc
    if q < 0:
        raise Undefined("negative radicand")
    return SqrtRational.from_rational(rational) * SqrtRational.sqrt(q)


def normalized(l: SingletLabelSU3) -> dict:
    """(family, index) -> (operator text, target, thunk returning SqrtRational)."""
    un = unnormalized(l)
    P = l.abs_p
    c3, c2 = F((P + 3) ** 3), F((P + 2) ** 3)
    L = l
    ratios = {
        ("c", 1): lambda: f12(L, L.l12 + 1),
        ("d", 1): lambda: r("13", L, L.l13 + 1) / r("23", L, L.l23),
        ("d", 2): lambda: f12(L, L.l12 + 1) * r("31", L, L.l31 + 1) / (r("21", L, L.l21) * r("32", L, L.l32)),
        ("e", 1): lambda: r("31", L, L.l31 + 1) / r("32", L, L.l32),
        ("e", 2): lambda: r("21", L, L.l21 + 1) * r("13", L, L.l13 + 1) / (f12(L, L.l12) * r("23", L, L.l23)),
        ("f", 1): lambda: f12(L, L.l12),
        ("f", 2): lambda: (r("23", L, L.l23 + 1) * r("31", L, L.l31 + 1)
                           / (r("21", L, L.l21) * r("32", L, L.l32) * r("13", L, L.l13))),
        ("f", 3): lambda: (r("32", L, L.l32 + 1) * r("13", L, L.l13 + 1) * r("21", L, L.l21)
                           / (f12(L, L.l12) * f12(L, L.l12 - 1) * r("31", L, L.l31) * r("23", L, L.l23))),
        ("g", 1): lambda: c3 / f12(L, L.l12),
        ("h", 1): lambda: r("31", L, L.l31 + 1) * r("23", L, L.l23 + 1) / c2,
        ("h", 2): lambda: (r("21", L, L.l21 + 1) * r("13", L, L.l13 + 1) * r("32", L, L.l32 + 1)
                           / (c2 * fbar_12(L._replace(l21=0, l13=0, l31=0)))),
        ("i", 1): lambda: (r("21", L, L.l21 + 1) * c3
                           / (f12(L, L.l12) * r("23", L, L.l23) * r("31", L, L.l31))),
        ("i", 2): lambda: c3 / (r("13", L, L.l13) * r("32", L, L.l32)),
        ("j", 1): lambda: r("21", L, L.l21 + 1) / c2,
        ("j", 2): lambda: (r("31", L, L.l31 + 1) * r("23", L, L.l23 + 1) * f12(L, L.l12 + 1)
                           / (r("13", L, L.l13) * r("32", L, L.l32) * c2)),
        ("j", 3): lambda: (r("21", L, L.l21 + 2) * r("21", L, L.l21 + 1) * r("13", L, L.l13 + 1)
                           * r("32", L, L.l32 + 1)
                           / (f12(L, L.l12) * r("23", L, L.l23) * r("31", L, L.l31) * c3)),
        ("n", 1): lambda: c3,
        ("m", 1): lambda: f12(L, L.l12 + 1) * r("23", L, L.l23 + 1) * r("31", L, L.l31 + 1) / c2,
        ("m", 2): lambda: r("21", L, L.l21 + 1) * r("32", L, L.l32 + 1) * r("13", L, L.l13 + 1) / c2,
    }
    out = {}
    for key, (op, target, rational) in un.items():
        if key in ratios:
            out[key] = (op, target, (lambda q=ratios[key], c=rational: _coeff(q, c)))
    return out


class FormulaLocation(NamedTuple):
    unnormalized: str
    normalized: str


# Symbol of each family's reference formula, stored as the paper_ref field of discrepancy records.
LOCATIONS = {
    "c": FormulaLocation("cbar_1^12 = 1", "c_1^12"),
    "d": FormulaLocation("dbar^12", "d^12"),
    "e": FormulaLocation("ebar^12", "e^12"),
    "f": FormulaLocation("fbar^12", "f^12"),
    "g": FormulaLocation("gbar_1^322", "g_1^322"),
    "h": FormulaLocation("hbar^322", "h^322"),
    "i": FormulaLocation("ibar^322", "i^322"),
    "j": FormulaLocation("jbar^322", "j^322"),
    "m": FormulaLocation("mbar^123 = 1", "m^123"),
    "n": FormulaLocation("nbar_1^123 = 1", "n_1^123"),
}

"""Closed-form action of SU(3)-invariant operators on the singlet basis.

The unnormalized basis ``|l,p>_u`` is built by the linking bilinears and the
epsilon triple.  Every catalog operator is a symmetry image of a base operator
with a known closed-form action on ``|l,p>_u``; the images are exact because
leg permutations and the a<->b flip are unitaries mapping basis vectors to
basis vectors up to a sign.

Norms come from an exact Gram recursion, since states with equal leg irreps
need not be orthogonal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from .basis import PAIRS, SingletLabelSU3, leg_irrep, sector_key
from .opexpr import CYCLE, REFLECT, InvariantOp, canonicalize, op_image, parse
from .sqrtrational import SqrtRational

Coeffs = dict  # SingletLabelSU3 -> Fraction


def _clean(out: Coeffs) -> Coeffs:
    return {k: v for k, v in out.items() if v and k.is_valid()}


def _F(x) -> Fraction:
    return Fraction(x)


# -- base operators -----------------------------------------------------------

def fbar_12(l: SingletLabelSU3) -> Fraction:
    """Coefficient of |l - e12> in (a_1.b_2)|l>_u."""
    N1, N2 = _F(l.N(1)), _F(l.N(2))
    return ((N1 + 2) / (N1 + 1) * (l.n(1) + l.m(2) - l.l12 + l.abs_p + 1) * l.l12
            - _F(l.l32 * (l.l31 + 1) * l.l12) / (N1 + 1) * (N2 + 1 - l.l21) / (N2 + 1)
            - _F(l.l23 * (l.l13 + 1) * l.l12) / (N1 + 1) * (N1 + 1 - l.l21) / (N2 + 1))


def act_c(l: SingletLabelSU3) -> Coeffs:
    """a+(1).b+(2)"""
    return {l.shifted(l12=1): Fraction(1)}


def act_d(l: SingletLabelSU3) -> Coeffs:
    """a+(1).a(2)"""
    N2 = _F(l.N(2))
    return _clean({
        l.shifted(l13=1, l23=-1): l.l23 * (N2 - l.l12 + 1) / (N2 + 1),
        l.shifted(l12=1, l21=-1, l31=1, l32=-1): -l.l32 * l.l21 / (N2 + 1),
    })


def act_e(l: SingletLabelSU3) -> Coeffs:
    """b+(1).b(2)"""
    N2 = _F(l.N(2))
    return _clean({
        l.shifted(l31=1, l32=-1): l.l32 * (N2 - l.l21 + 1) / (N2 + 1),
        l.shifted(l21=1, l12=-1, l13=1, l23=-1): -l.l23 * l.l12 / (N2 + 1),
    })


def act_f(l: SingletLabelSU3) -> Coeffs:
    """a(1).b(2)"""
    N1, N2 = _F(l.N(1)), _F(l.N(2))
    return _clean({
        l.shifted(l12=-1): fbar_12(l),
        l.shifted(l21=-1, l23=1, l32=-1, l31=1, l13=-1):
            -l.l32 * l.l13 * l.l21 * (N1 + N2 + 3 - l.l21) / ((N1 + 1) * (N2 + 1)),
        l.shifted(l21=1, l12=-2, l13=1, l31=-1, l32=1, l23=-1):
            l.l23 * l.l31 * l.l12 * (l.l12 - 1) / ((N1 + 1) * (N2 + 1)),
    })


def act_gh(l: SingletLabelSU3) -> Coeffs:
    """eps(a+(3),b(2),a+(2))"""
    if l.p >= 0:
        return _clean({l.shifted(l12=-1, p=1): _F(l.l12)})
    return _clean({
        l.shifted(p=1, l31=1, l23=1): _F(l.abs_p + l.l12),
        l.shifted(p=1, l12=-1, l21=1, l13=1, l32=1): _F(l.l12),
    })


def act_ij(l: SingletLabelSU3) -> Coeffs:
    """eps(b(3),b(2),a+(2))"""
    P, N3 = l.abs_p, _F(l.N(3))
    if l.p >= 0:
        return _clean({
            l.shifted(l12=-1, l21=1, l23=-1, l31=-1, p=1): -l.l12 * l.l23 * l.l31 / (N3 + 1),
            l.shifted(l13=-1, l32=-1, p=1): -(N3 + l.l12 + 2) / (N3 + 1) * l.l13 * l.l32,
        })
    j1 = (l.l12 * (l.l13 + 1) * (l.l32 + 1)
          - (N3 + 2) / (N3 + 1) * l.l13 * l.l32 * (l.l12 + 1)
          - (P + l.l12) * (N3 - l.l23 + 1) * (N3 - l.l31 + 1) / (N3 + 1))
    return _clean({
        l.shifted(l21=1, p=1): j1,
        l.shifted(l13=-1, l31=1, l32=-1, l23=1, l12=1, p=1):
            -(N3 + P + l.l12 + 2) / (N3 + 1) * l.l13 * l.l32,
        l.shifted(l12=-1, l21=2, l23=-1, l32=1, p=1, l13=1, l31=-1):
            -l.l12 * l.l23 * l.l31 / (N3 + 1),
    })


def act_nm(l: SingletLabelSU3) -> Coeffs:
    """eps(a+(1),a+(2),a+(3))"""
    if l.p >= 0:
        return {l.shifted(p=1): Fraction(1)}
    return {l.shifted(l12=1, l23=1, l31=1, p=1): Fraction(1),
            l.shifted(l21=1, l32=1, l13=1, p=1): Fraction(1)}


def act_kl(l: SingletLabelSU3) -> Coeffs:
    """eps(a(3),a(2),b+(2)): the a<->b flip of eps(b(3),b(2),a+(2))."""
    return {flip(t): c for t, c in act_ij(flip(l)).items()}


def act_aaa(l: SingletLabelSU3) -> Coeffs:
    """eps(a(3),a(2),a(1)) = [a(1).b(2), eps(a(3),a(2),b+(2))]."""
    out: Coeffs = {}
    for t, c in act_kl(l).items():
        for u, d in act_f(t).items():
            out[u] = out.get(u, 0) + c * d
    for t, c in act_f(l).items():
        for u, d in act_kl(t).items():
            out[u] = out.get(u, 0) - c * d
    return _clean(out)


def act_num(l: SingletLabelSU3) -> Coeffs:
    """a+(1).a(1) counts the triplet index of leg 1."""
    return _clean({l: _F(leg_irrep(l, 1)[0])})


def act_zero(l: SingletLabelSU3) -> Coeffs:
    return {}


BASE_ACTIONS = {
    "c": act_c, "d": act_d, "e": act_e, "f": act_f,
    "gh": act_gh, "ij": act_ij, "nm": act_nm, "kl": act_kl, "aaa": act_aaa,
    "num": act_num, "zero_cc": act_zero, "zero_aa": act_zero,
}


# -- symmetries on labels ------------------------------------------------------

def _permute_legs(l: SingletLabelSU3, sigma) -> SingletLabelSU3:
    vals = {(sigma[i], sigma[j]): l.l(i, j) for i, j in PAIRS}
    return SingletLabelSU3(*(vals[ij] for ij in PAIRS), l.p)


def cycle(l: SingletLabelSU3) -> SingletLabelSU3:
    return _permute_legs(l, CYCLE)


def reflect(l: SingletLabelSU3) -> SingletLabelSU3:
    return _permute_legs(l, REFLECT)


def flip(l: SingletLabelSU3) -> SingletLabelSU3:
    vals = {(j, i): l.l(i, j) for i, j in PAIRS}
    return SingletLabelSU3(*(vals[ij] for ij in PAIRS), -l.p)


_INVERSE_CYCLE = {v: k for k, v in CYCLE.items()}

# gen -> (forward map, inverse map, phase of U_g|l>_u = phase(l) |g l>_u)
LABEL_SYMMETRIES = {
    "cycle": (cycle, lambda l: _permute_legs(l, _INVERSE_CYCLE), lambda l: 1),
    "reflect": (reflect, reflect, lambda l: -1 if l.abs_p % 2 else 1),
    "conj_flip": (flip, flip, lambda l: 1),
}


def symmetry_image(x, gen: str):
    """Image of a label or an operator under ``cycle``, ``reflect`` or ``conj_flip``."""
    if isinstance(x, SingletLabelSU3):
        return LABEL_SYMMETRIES[gen][0](x)
    return op_image(_as_op(x), gen)


def symmetry_phase(gen: str, l: SingletLabelSU3) -> int:
    """Sign s with U_gen |l>_u = s |gen(l)>_u."""
    return LABEL_SYMMETRIES[gen][2](l)


def _act_word(base: str, word: tuple, l: SingletLabelSU3) -> Coeffs:
    if not word:
        return BASE_ACTIONS[base](l)
    fwd, inv, phase = LABEL_SYMMETRIES[word[-1]]
    y = inv(l)
    py = phase(y)
    return {fwd(t): c * py * phase(t) for t, c in _act_word(base, word[:-1], y).items()}


def _as_op(op) -> InvariantOp:
    return parse(op) if isinstance(op, str) else op


def unnormalized_act(op, l: SingletLabelSU3) -> Coeffs:
    """Expansion coefficients of O|l>_u in the unnormalized basis."""
    form = canonicalize(_as_op(op))
    out = _act_word(form.base, form.word, l)
    return {t: form.sign * c for t, c in sorted(out.items(), key=lambda kv: kv[0].sort_key())}


# -- norms --------------------------------------------------------------------

def base_norm_sq(p: int) -> Fraction:
    """<0,p|0,p>_u for the pure epsilon state (eps x1 x2 x3)^|p| |0>."""
    a = abs(p)
    return Fraction(factorial(a) * factorial(a + 1) * factorial(a + 2), 2)


_LOWER = {ij: parse(f"a({ij[0]}).b({ij[1]})") for ij in PAIRS}


@lru_cache(maxsize=None)
def gram(l: SingletLabelSU3, r: SingletLabelSU3) -> Fraction:
    """Exact overlap <l|r> of unnormalized basis states."""
    if sector_key(l) != sector_key(r):
        return Fraction(0)
    if sum(l.ls) < sum(r.ls) or (sum(l.ls) == sum(r.ls) and l.sort_key() > r.sort_key()):
        l, r = r, l
    for ij in PAIRS:
        if l.l(*ij):
            lower = l._replace(**{f"l{ij[0]}{ij[1]}": l.l(*ij) - 1})
            return sum((c * gram(lower, t) for t, c in unnormalized_act(_LOWER[ij], r).items()),
                       Fraction(0))
    return base_norm_sq(l.p)


def norm_sq_su3(l: SingletLabelSU3) -> Fraction:
    return gram(l, l)


def norm_chain_su3(l: SingletLabelSU3) -> Fraction:
    """Norm from the product of leading lowering coefficients alone.

    Peels one link at a time (12, 21, 13, 31, 23, 32) keeping only the
    coefficient back to the peeled label.  Exact when the cross terms of the
    lowering vanish, which holds for every label of weight <= 6.
    """
    out = base_norm_sq(l.p)
    cur = l
    for ij in PAIRS:
        while cur.l(*ij):
            lower = cur._replace(**{f"l{ij[0]}{ij[1]}": cur.l(*ij) - 1})
            out *= unnormalized_act(_LOWER[ij], cur).get(lower, 0)
            cur = lower
    return out


# -- normalized action ---------------------------------------------------------

class Su3Transition(NamedTuple):
    target: SingletLabelSU3
    coeff: SqrtRational

    def to_json(self) -> dict:
        return {"target": self.target.to_json(), "coeff": self.coeff.to_json()}


def act_su3(op, l: SingletLabelSU3) -> list[Su3Transition]:
    """Normalized expansion O|l> = sum_t coeff_t |t>, sorted by target."""
    if not l.is_valid():
        raise ValueError(f"invalid label {l}")
    s_l = norm_sq_su3(l)
    out = []
    for t, c in unnormalized_act(op, l).items():
        out.append(Su3Transition(t, SqrtRational.from_rational(c) * SqrtRational.sqrt(norm_sq_su3(t) / s_l)))
    return out

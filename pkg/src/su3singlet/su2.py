"""Closed-form action of SU(2)-invariant bilinears on the three-leg singlet basis.

``|l>_u = (12)^l12 (23)^l23 (31)^l31 |0>`` with ``(ij) = a_i^dag . ~a_j^dag``.
Each n-triple carries exactly one singlet, so the basis is orthogonal.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .basis import SingletLabelSU2
from .opexpr import InvariantOp, parse
from .sqrtrational import SqrtRational

ORIENTED = {(1, 2): "l12", (2, 3): "l23", (3, 1): "l31"}


def _pair(i: int, j: int) -> tuple[str, int]:
    """Label field of the link {i, j} and the sign of (ij) relative to it."""
    if (i, j) in ORIENTED:
        return ORIENTED[(i, j)], 1
    return ORIENTED[(j, i)], -1


def norm_sq_su2(l: SingletLabelSU2) -> Fraction:
    L = l.l12 + l.l23 + l.l31
    return Fraction(factorial(l.l12) * factorial(l.l23) * factorial(l.l31) * factorial(L + 1))


def unnormalized_act_su2(op, l: SingletLabelSU2) -> dict:
    op = parse(op, "su2") if isinstance(op, str) else op
    (_, d1, i), (_, d2, j) = op.factors
    if i == j:
        if d1 == d2:
            return {}
        return {l: Fraction(l.ns[i - 1])} if l.ns[i - 1] else {}
    field, sign = _pair(i, j)
    if d1 and d2:
        return {l._replace(**{field: getattr(l, field) + 1}): Fraction(sign)}
    if not d1 and not d2:
        # adjoint of raising: <t|R^dag|l> = <l|R|t>
        n = getattr(l, field)
        if not n:
            return {}
        t = l._replace(**{field: n - 1})
        return {t: sign * norm_sq_su2(l) / norm_sq_su2(t)}
    if not d1:
        i, j = j, i  # hopping written as a(j).a+(i)
    # a_i^dag . a_j moves one quantum of leg j onto leg i inside the link {j, k}
    k = 6 - i - j
    src, s_src = _pair(j, k)
    n = getattr(l, src)
    if not n:
        return {}
    dst, s_dst = _pair(i, k)
    t = l._replace(**{src: n - 1, dst: getattr(l, dst) + 1})
    return {t: Fraction(n * s_src * s_dst)}


class Su2Transition(NamedTuple):
    target: SingletLabelSU2
    coeff: SqrtRational

    def to_json(self) -> dict:
        return {"target": self.target.to_json(), "coeff": self.coeff.to_json()}


def act_su2(op: InvariantOp | str, l: SingletLabelSU2) -> list[Su2Transition]:
    if not l.is_valid():
        raise ValueError(f"invalid label {l}")
    s_l = norm_sq_su2(l)
    return [Su2Transition(t, SqrtRational.from_rational(c) * SqrtRational.sqrt(norm_sq_su2(t) / s_l))
            for t, c in sorted(unnormalized_act_su2(op, l).items(), key=lambda kv: kv[0].sort_key())]

"""Brute-force Fock-space oracle.

Vectors are sparse dicts ``{occupation tuple: Fraction}`` in the unnormalized
number basis ``prod_k (c_k^dag)^{n_k} |0>``.  In that basis creation just bumps
an occupation and annihilation multiplies by the occupation, so every amplitude
stays rational; the ``n!`` weights live in :func:`inner`.

SU(3) modes: 18 raw oscillators indexed by (leg, species, color), species 0 = a
(triplet), 1 = b (antitriplet).  SU(2) modes: 6 raw oscillators (leg, color).
The irreducible SU(3) bosons are composites of the raw ones::

    a^dag_al = abar^dag_al - 1/(n+m+1) k_+ bbar_al
    b^dag_al = bbar^dag_al - 1/(n+m+1) k_+ abar_al

with ``k_+ = abar^dag . bbar^dag`` on the same leg; the 1/(n+m+1) factor is
evaluated on each component after ``k_+`` has acted.  Annihilators are the
Fock-space adjoints.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Callable, Dict, Tuple

from .basis import SingletLabelSU2, SingletLabelSU3, labels_with_irreps

State = Tuple[int, ...]
FockVector = Dict[State, Fraction]

SU3_MODES = 18
SU2_MODES = 6
COLORS3 = (1, 2, 3)
COLORS2 = (1, 2)


def mode3(leg: int, species: str, color: int) -> int:
    return (leg - 1) * 6 + (0 if species == "a" else 3) + (color - 1)


def mode2(leg: int, color: int) -> int:
    return (leg - 1) * 2 + (color - 1)


def vacuum(nmodes: int) -> FockVector:
    return {(0,) * nmodes: Fraction(1)}


# -- vector arithmetic --------------------------------------------------------

def add_into(acc: FockVector, v: FockVector, c=1) -> FockVector:
    for s, x in v.items():
        y = acc.get(s, 0) + c * x
        if y:
            acc[s] = y
        else:
            acc.pop(s, None)
    return acc


def vsum(*vs: FockVector) -> FockVector:
    acc: FockVector = {}
    for v in vs:
        add_into(acc, v)
    return acc


def vsub(v: FockVector, w: FockVector) -> FockVector:
    return add_into(dict(v), w, -1)


def scale(v: FockVector, c) -> FockVector:
    if c == 0:
        return {}
    return {s: c * x for s, x in v.items()}


def scale_by(v: FockVector, f: Callable[[State], Fraction]) -> FockVector:
    out = {}
    for s, x in v.items():
        y = x * f(s)
        if y:
            out[s] = y
    return out


def inner(v: FockVector, w: FockVector) -> Fraction:
    """<v|w> for real vectors, with the n! weights of the unnormalized basis."""
    if len(w) < len(v):
        v, w = w, v
    total = Fraction(0)
    for s, x in v.items():
        y = w.get(s)
        if y is not None:
            total += x * y * _weight(s)
    return total


@lru_cache(maxsize=None)
def _weight(s: State) -> int:
    return prod(factorial(n) for n in s)


# -- raw oscillators ----------------------------------------------------------

def create(v: FockVector, k: int) -> FockVector:
    out = {}
    for s, x in v.items():
        t = list(s)
        t[k] += 1
        out[tuple(t)] = x
    return out


def annihilate(v: FockVector, k: int) -> FockVector:
    out = {}
    for s, x in v.items():
        n = s[k]
        if n:
            t = list(s)
            t[k] = n - 1
            out[tuple(t)] = x * n
    return out


def apply_bar(kind: str, v: FockVector, k: int) -> FockVector:
    """Raw oscillator on mode ``k``: ``kind`` is 'create' or 'annihilate'."""
    if kind == "create":
        return create(v, k)
    if kind == "annihilate":
        return annihilate(v, k)
    raise ValueError(f"unknown raw operator {kind!r}")


# -- Sp(2,R) and irreducible Schwinger bosons ---------------------------------

def leg_total(s: State, leg: int) -> int:
    base = (leg - 1) * 6
    return sum(s[base:base + 6])


def k_plus(v: FockVector, leg: int) -> FockVector:
    acc: FockVector = {}
    for c in COLORS3:
        add_into(acc, create(create(v, mode3(leg, "b", c)), mode3(leg, "a", c)))
    return acc


def k_minus(v: FockVector, leg: int) -> FockVector:
    acc: FockVector = {}
    for c in COLORS3:
        add_into(acc, annihilate(annihilate(v, mode3(leg, "b", c)), mode3(leg, "a", c)))
    return acc


def k_zero(v: FockVector, leg: int) -> FockVector:
    return scale_by(v, lambda s: Fraction(leg_total(s, leg) + 3, 2))


def sp2r(op: str, leg: int) -> Callable[[FockVector], FockVector]:
    table = {"k+": k_plus, "k-": k_minus, "k0": k_zero}
    try:
        fn = table[op]
    except KeyError:
        raise ValueError(f"unknown Sp(2,R) operator {op!r}") from None
    return lambda v: fn(v, leg)


def _inv_total_plus_one(leg: int):
    return lambda s: Fraction(1, leg_total(s, leg) + 1)


def irr_create(v: FockVector, species: str, leg: int, color: int) -> FockVector:
    other = "b" if species == "a" else "a"
    corr = k_plus(annihilate(v, mode3(leg, other, color)), leg)
    corr = scale_by(corr, _inv_total_plus_one(leg))
    return vsub(create(v, mode3(leg, species, color)), corr)


def irr_annihilate(v: FockVector, species: str, leg: int, color: int) -> FockVector:
    other = "b" if species == "a" else "a"
    corr = scale_by(v, _inv_total_plus_one(leg))
    corr = create(k_minus(corr, leg), mode3(leg, other, color))
    return vsub(annihilate(v, mode3(leg, species, color)), corr)


def apply_irreducible(species: str, dagger: bool, leg: int, color: int, v: FockVector) -> FockVector:
    if dagger:
        return irr_create(v, species, leg, color)
    return irr_annihilate(v, species, leg, color)


# -- invariant operators ------------------------------------------------------

def _eps3():
    for perm in permutations((1, 2, 3)):
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        yield perm, (-1) ** inversions


EPS3 = tuple(_eps3())


def apply_op_su3(factors, v: FockVector) -> FockVector:
    """Apply a normal-ordered invariant monomial ((species, dagger, leg), ...).

    Two factors are contracted with delta, three with epsilon (factor k takes
    the k-th epsilon index).  All annihilators act before any creator.
    """
    if len(factors) == 2:
        seq = sorted(factors, key=lambda f: f[1])
        acc: FockVector = {}
        for c in COLORS3:
            w = v
            for s, d, g in seq:
                w = apply_irreducible(s, d, g, c, w)
            add_into(acc, w)
        return acc
    if len(factors) == 3:
        acc = {}
        for colors, sign in EPS3:
            w = v
            for (s, d, g), c in sorted(zip(factors, colors), key=lambda fc: fc[0][1]):
                w = apply_irreducible(s, d, g, c, w)
            add_into(acc, w, sign)
        return acc
    raise ValueError("invariant monomials have two or three factors")


def apply_op_su2(factors, v: FockVector) -> FockVector:
    """SU(2) bilinear, normal ordered: mixed daggers contract with delta, equal daggers with epsilon."""
    f1, f2 = factors
    acc: FockVector = {}
    if f1[1] != f2[1]:
        pairs = [((f1, c), (f2, c), 1) for c in COLORS2]
    else:
        pairs = [((f1, 1), (f2, 2), 1), ((f1, 2), (f2, 1), -1)]
    for x, y, sign in pairs:
        w = v
        for (_, d, g), c in sorted((x, y), key=lambda t: t[0][1]):
            w = (create if d else annihilate)(w, mode2(g, c))
        add_into(acc, w, sign)
    return acc


def number_op(v: FockVector, modes) -> FockVector:
    return scale_by(v, lambda s: Fraction(sum(s[k] for k in modes)))


# -- singlet states -----------------------------------------------------------

BILINEAR_ORDER = ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2))


def _eps_create(species: str) -> tuple:
    return ((species, True, 1), (species, True, 2), (species, True, 3))


def build_state_su3(label: SingletLabelSU3, order=BILINEAR_ORDER) -> FockVector:
    """Unnormalized |l,p>_u = (1.2)^l12 (2.1)^l21 ... (3.2)^l32 (eps x1 x2 x3)^|p| |0>.

    The product is applied right to left, so the epsilon factors act first.
    ``order`` permutes the bilinear factors (used to test order independence).
    """
    key = (label, tuple(order))
    hit = _STATE_CACHE.get(key)
    if hit is not None:
        return hit
    v = vacuum(SU3_MODES)
    eps = _eps_create("a" if label.p >= 0 else "b")
    for _ in range(abs(label.p)):
        v = apply_op_su3(eps, v)
    for i, j in reversed(order):
        for _ in range(label.l(i, j)):
            v = apply_op_su3((("a", True, i), ("b", True, j)), v)
    _STATE_CACHE[key] = v
    return v


_STATE_CACHE: dict = {}


def build_state_su2(label: SingletLabelSU2) -> FockVector:
    """Unnormalized (a1^dag.~a2^dag)^l12 (a2^dag.~a3^dag)^l23 (a3^dag.~a1^dag)^l31 |0>."""
    v = vacuum(SU2_MODES)
    for (i, j), n in (((3, 1), label.l31), ((2, 3), label.l23), ((1, 2), label.l12)):
        for _ in range(n):
            v = apply_op_su2((("a", True, i), ("a", True, j)), v)
    return v


def build_state(label):
    if isinstance(label, SingletLabelSU3):
        return build_state_su3(label)
    return build_state_su2(label)


# -- Gauss-law generators -----------------------------------------------------

# Gell-Mann matrices as (real, imag) integer parts of lambda^a; lambda^8 is stored
# multiplied by sqrt(3) so everything stays rational.
def _gell_mann():
    z = [[0] * 3 for _ in range(3)]

    def mat(entries):
        m = [row[:] for row in z]
        for (i, j), x in entries.items():
            m[i][j] = x
        return m

    return {
        1: (mat({(0, 1): 1, (1, 0): 1}), mat({})),
        2: (mat({}), mat({(0, 1): -1, (1, 0): 1})),
        3: (mat({(0, 0): 1, (1, 1): -1}), mat({})),
        4: (mat({(0, 2): 1, (2, 0): 1}), mat({})),
        5: (mat({}), mat({(0, 2): -1, (2, 0): 1})),
        6: (mat({(1, 2): 1, (2, 1): 1}), mat({})),
        7: (mat({}), mat({(1, 2): -1, (2, 1): 1})),
        8: (mat({(0, 0): 1, (1, 1): 1, (2, 2): -2}), mat({})),
    }


GELL_MANN = _gell_mann()
# (E^8)^2 = (1/3) (sqrt(3) E^8)^2
CASIMIR_WEIGHT = {a: Fraction(1, 3) if a == 8 else Fraction(1) for a in range(1, 9)}


class ComplexVector:
    """Pair of real Fock vectors (re, im) carrying Gaussian-rational amplitudes."""

    __slots__ = ("re", "im")

    def __init__(self, re: FockVector, im: FockVector | None = None):
        self.re = re
        self.im = im if im is not None else {}

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def real_part(self) -> FockVector:
        return self.re


def _bilinear_raw(v: FockVector, legs, c_out: int, c_in: int, species: str, su2: bool) -> FockVector:
    acc: FockVector = {}
    for leg in legs:
        if su2:
            add_into(acc, create(annihilate(v, mode2(leg, c_in)), mode2(leg, c_out)))
        else:
            add_into(acc, create(annihilate(v, mode3(leg, species, c_in)), mode3(leg, species, c_out)))
    return acc


def _real_generator_parts(a: int, legs, su2: bool):
    """Return (R, I) linear maps with E^a = R + i I on real vectors (times 2)."""
    if su2:
        sigma = {
            1: ({(0, 1): 1, (1, 0): 1}, {}),
            2: ({}, {(0, 1): -1, (1, 0): 1}),
            3: ({(0, 0): 1, (1, 1): -1}, {}),
        }[a]
        re_m, im_m = sigma

        def part(entries):
            def f(v):
                acc: FockVector = {}
                for (i, j), x in entries.items():
                    add_into(acc, _bilinear_raw(v, legs, i + 1, j + 1, "a", True), Fraction(x, 2))
                return acc
            return f

        return part(re_m), part(im_m)

    re_m, im_m = GELL_MANN[a]

    def part(mat, conj_sign):
        # a^dag (lam/2) a - b^dag (lam*/2) b; lam* flips the sign of the imaginary part
        def f(v):
            acc: FockVector = {}
            for i in range(3):
                for j in range(3):
                    x = mat[i][j]
                    if not x:
                        continue
                    add_into(acc, _bilinear_raw(v, legs, i + 1, j + 1, "a", False), Fraction(x, 2))
                    add_into(acc, _bilinear_raw(v, legs, i + 1, j + 1, "b", False), Fraction(-conj_sign * x, 2))
            return acc
        return f

    return part(re_m, 1), part(im_m, -1)


def gauss_generator(a: int, legs=(1, 2, 3), group: str = "su3") -> Callable[[ComplexVector], ComplexVector]:
    """Generator E^a summed over ``legs``, built from raw oscillator bilinears.

    For SU(3), a = 8 returns sqrt(3) E^8 so that all matrix elements are rational.
    """
    su2 = group == "su2"
    if a not in (range(1, 4) if su2 else range(1, 9)):
        raise ValueError(f"no generator {a} for {group}")
    R, I = _real_generator_parts(a, legs, su2)

    def apply(v: ComplexVector) -> ComplexVector:
        re = vsub(R(v.re), I(v.im))
        im = vsum(I(v.re), R(v.im))
        return ComplexVector(re, im)

    return apply


def casimir(v: FockVector, leg: int, group: str = "su3") -> ComplexVector:
    """Quadratic Casimir sum_a E^a E^a on one leg."""
    gens = range(1, 4) if group == "su2" else range(1, 9)
    re: FockVector = {}
    im: FockVector = {}
    for a in gens:
        E = gauss_generator(a, (leg,), group)
        w = E(E(ComplexVector(v)))
        wt = CASIMIR_WEIGHT[a] if group == "su3" else 1
        add_into(re, w.re, wt)
        add_into(im, w.im, wt)
    return ComplexVector(re, im)


# -- expansion in the singlet basis -------------------------------------------

class NotInSpan(ValueError):
    pass


def solve_exact(gram, rhs):
    """Solve gram @ x = rhs over the rationals (small dense Gauss-Jordan)."""
    n = len(rhs)
    m = [list(row) + [rhs[i]] for i, row in enumerate(gram)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular Gram matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / Fraction(m[col][col])
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def expand_su3(v: FockVector, reps) -> dict[SingletLabelSU3, Fraction]:
    """Coefficients c with v = sum_l c_l |l>_u over the labels of one irrep sector.

    Raises NotInSpan when v has a component outside that span.
    """
    if not v:
        return {}
    labels = labels_with_irreps(reps)
    if not labels:
        raise NotInSpan("vector is nonzero but the target sector is empty")
    states = [build_state_su3(l) for l in labels]
    gram = [[inner(s, t) for t in states] for s in states]
    rhs = [inner(s, v) for s in states]
    coeffs = solve_exact(gram, rhs)
    residual = dict(v)
    for c, s in zip(coeffs, states):
        add_into(residual, s, -c)
    if residual:
        raise NotInSpan("vector has a component outside the singlet sector")
    return {l: c for l, c in zip(labels, coeffs) if c}


def op_delta(factors) -> list[list[int]]:
    """Per-leg change [dp_i, dq_i] produced by an SU(3) monomial."""
    delta = [[0, 0] for _ in range(3)]
    for species, dagger, leg in factors:
        delta[leg - 1][0 if species == "a" else 1] += 1 if dagger else -1
    return delta


def oracle_unnormalized_su3(factors, label: SingletLabelSU3) -> dict[SingletLabelSU3, Fraction]:
    """Expansion of O|l,p>_u in the unnormalized basis, computed by brute force."""
    from .basis import irreps

    v = apply_op_su3(factors, build_state_su3(label))
    delta = op_delta(factors)
    reps = tuple((p + d[0], q + d[1]) for (p, q), d in zip(irreps(label), delta))
    return expand_su3(v, reps)


def norm_sq(label) -> Fraction:
    v = build_state(label)
    return inner(v, v)


def oracle_unnormalized_su2(factors, label: SingletLabelSU2) -> dict[SingletLabelSU2, Fraction]:
    v = build_state_su2(label)
    if factors == "N":
        raise ValueError("use number_op for number operators")
    w = apply_op_su2(factors, v)
    if not w:
        return {}
    ns = list(label.ns)
    for _, dagger, leg in factors:
        ns[leg - 1] += 1 if dagger else -1
    target = SingletLabelSU2.from_ns(*ns)
    if target is None:
        raise NotInSpan("SU(2) target n-triple is not a singlet")
    u = build_state_su2(target)
    c = inner(u, w) / inner(u, u)
    if vsub(w, scale(u, c)):
        raise NotInSpan("SU(2) vector is not proportional to the basis state")
    return {target: c} if c else {}

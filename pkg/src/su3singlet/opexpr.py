"""Invariant-operator expressions: parsing, printing and canonicalization.

Grammar (whitespace-insensitive)::

    expr      := bilinear | trilinear | number
    bilinear  := factor "." factor
    trilinear := "eps(" factor "," factor "," factor ")"
    number    := "N(" leg ")"                 # shorthand for a+(leg).a(leg)
    factor    := ("a" | "b") ["+"] "(" leg ")"
    leg       := "1" | "2" | "3"

``+`` marks a dagger.  Monomials are normal ordered: annihilators act before
creators whatever the textual order, so the order of factors only fixes which
epsilon slot each factor occupies.  Two SU(3) factors are contracted with
delta; three with epsilon.  For SU(2) two creators (or two annihilators) are
contracted with the 2x2 epsilon on the second factor, ``a+(3).a+(1)`` being
``(a_3^dag . ~a_1^dag)``.
"""

from __future__ import annotations

import re
from collections import deque
from functools import lru_cache
from typing import NamedTuple


class OpError(ValueError):
    """Base class for operator-expression errors."""


class OpSyntaxError(OpError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


class InvalidLeg(OpError):
    pass


class UnrecognizedShape(OpError):
    pass


class UnreachableShape(OpError):
    """The operator is invariant but has no closed form in the catalog."""


class Factor(NamedTuple):
    species: str  # "a" or "b"
    dagger: bool
    leg: int

    def __str__(self) -> str:
        return f"{self.species}{'+' if self.dagger else ''}({self.leg})"

    @property
    def triplet_type(self) -> bool:
        # a^dag and b transform as 3; b^dag and a as 3bar
        return self.dagger == (self.species == "a")


class InvariantOp(NamedTuple):
    factors: tuple[Factor, ...]

    @property
    def kind(self) -> str:
        return "Bilinear" if len(self.factors) == 2 else "TrilinearEps"

    def __str__(self) -> str:
        if len(self.factors) == 2:
            return f"{self.factors[0]}.{self.factors[1]}"
        return "eps(" + ",".join(map(str, self.factors)) + ")"


# -- parsing ------------------------------------------------------------------

_FACTOR = re.compile(r"([ab])(\+?)\((\d+)\)")
_NUMBER = re.compile(r"N\((\d+)\)")


def _leg(s: str, text: str) -> int:
    leg = int(s)
    if leg not in (1, 2, 3):
        raise InvalidLeg(f"leg out of range (1..3): {leg} in {text!r}")
    return leg


def _factor_at(src: str, pos: int, text: str) -> tuple[Factor, int]:
    m = _FACTOR.match(src, pos)
    if not m:
        raise OpSyntaxError("expected factor like a+(1) or b(2)", text, pos)
    return Factor(m.group(1), m.group(2) == "+", _leg(m.group(3), text)), m.end()


def parse(text: str, group: str = "su3") -> InvariantOp:
    """Parse an operator expression and validate it as an invariant of ``group``."""
    src = re.sub(r"\s+", "", text)
    if not src:
        raise OpSyntaxError("empty expression", text, 0)
    m = _NUMBER.fullmatch(src)
    if m:
        leg = _leg(m.group(1), text)
        op = InvariantOp((Factor("a", True, leg), Factor("a", False, leg)))
    elif src.startswith("eps("):
        pos = 4
        factors = []
        for k in range(3):
            f, pos = _factor_at(src, pos, text)
            factors.append(f)
            want = "," if k < 2 else ")"
            if src[pos:pos + 1] != want:
                raise OpSyntaxError(f"expected {want!r}", text, pos)
            pos += 1
        if pos != len(src):
            raise OpSyntaxError("trailing characters", text, pos)
        op = InvariantOp(tuple(factors))
    else:
        f1, pos = _factor_at(src, 0, text)
        if src[pos:pos + 1] != ".":
            raise OpSyntaxError("expected '.'", text, pos)
        f2, pos = _factor_at(src, pos + 1, text)
        if pos != len(src):
            raise OpSyntaxError("trailing characters", text, pos)
        op = InvariantOp((f1, f2))
    validate(op, group)
    return op


def validate(op: InvariantOp, group: str = "su3") -> None:
    fs = op.factors
    if group == "su2":
        if len(fs) != 2 or any(f.species != "a" for f in fs):
            raise UnrecognizedShape(f"SU(2) operators are bilinears in a: {op}")
        return
    if group != "su3":
        raise ValueError(f"unknown group {group!r}")
    if len(fs) == 2:
        if fs[0].triplet_type == fs[1].triplet_type:
            raise UnrecognizedShape(f"not a delta-contracted SU(3) invariant: {op}")
    elif len({f.triplet_type for f in fs}) != 1:
        raise UnrecognizedShape(f"epsilon needs three triplets or three antitriplets: {op}")


def to_text(op: InvariantOp) -> str:
    return str(op)


# -- normal form and symmetry generators -----------------------------------------

def _key(f: Factor):
    return (not f.dagger, f.species, f.leg)


def normal_form(op: InvariantOp) -> tuple[tuple[Factor, ...], int]:
    """Sorted factors and the sign picked up from the epsilon antisymmetry."""
    fs = list(op.factors)
    order = sorted(range(len(fs)), key=lambda k: _key(fs[k]))
    sign = 1
    if len(fs) == 3:
        perm = list(order)
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
    return tuple(fs[k] for k in order), sign


CYCLE = {1: 2, 2: 3, 3: 1}
REFLECT = {1: 2, 2: 1, 3: 3}
GENERATORS = ("cycle", "conj_flip", "reflect")


def op_image(op: InvariantOp, gen: str) -> InvariantOp:
    """Image of ``op`` under a symmetry generator (factor order preserved)."""
    if gen == "cycle":
        fs = [f._replace(leg=CYCLE[f.leg]) for f in op.factors]
    elif gen == "reflect":
        fs = [f._replace(leg=REFLECT[f.leg]) for f in op.factors]
    elif gen == "conj_flip":
        fs = [f._replace(species="b" if f.species == "a" else "a") for f in op.factors]
    elif gen == "adjoint":
        # normal ordering makes the factors commute, so daggering each is enough
        fs = [f._replace(dagger=not f.dagger) for f in op.factors]
    else:
        raise ValueError(f"unknown symmetry {gen!r}")
    return InvariantOp(tuple(fs))


def apply_word(op: InvariantOp, word) -> InvariantOp:
    for gen in word:
        op = op_image(op, gen)
    return op


# -- catalog ----------------------------------------------------------------------

# Operators with closed-form actions, in selection priority order.
BASES = {
    "c": "a+(1).b+(2)",
    "d": "a+(1).a(2)",
    "e": "b+(1).b(2)",
    "f": "a(1).b(2)",
    "gh": "eps(a+(3),b(2),a+(2))",
    "ij": "eps(b(3),b(2),a+(2))",
    "nm": "eps(a+(1),a+(2),a+(3))",
    "kl": "eps(a(3),a(2),b+(2))",
    "aaa": "eps(a(3),a(2),a(1))",
    "num": "a+(1).a(1)",
    "zero_cc": "a+(1).b+(1)",
    "zero_aa": "a(1).b(1)",
}


class CanonicalForm(NamedTuple):
    base: str
    base_op: InvariantOp
    word: tuple[str, ...]
    sign: int  # op = sign * apply_word(base_op, word)


@lru_cache(maxsize=None)
def catalog() -> dict[tuple[Factor, ...], CanonicalForm]:
    """Closure of the base operators under cycle, conj_flip and reflect.

    Keyed by normal form; breadth-first so every entry carries a shortest word,
    ties broken by base priority and generator order.
    """
    found: dict = {}
    queue = deque()
    for name, text in BASES.items():
        op = parse(text)
        nf, s = normal_form(op)
        if nf not in found:
            found[nf] = CanonicalForm(name, op, (), s)
            queue.append((name, op, ()))
    while queue:
        name, op, word = queue.popleft()
        for gen in GENERATORS:
            img = op_image(op, gen)
            nf, s = normal_form(img)
            if nf not in found:
                base_op = parse(BASES[name])
                found[nf] = CanonicalForm(name, base_op, word + (gen,), s)
                queue.append((name, img, word + (gen,)))
    return found


def canonicalize(op: InvariantOp) -> CanonicalForm:
    """Base operator, shortest symmetry word and sign reproducing ``op``.

    The returned sign satisfies ``op == sign * apply_word(base_op, word)`` as
    operators (normal-ordered monomials compared up to epsilon antisymmetry).
    """
    nf, s = normal_form(op)
    entry = catalog().get(nf)
    if entry is None:
        raise UnreachableShape(f"{op} has no closed-form action; use the oracle path (--via-oracle)")
    _, s_word = normal_form(apply_word(entry.base_op, entry.word))
    # op = s * NF, word(base) = s_word * NF
    return entry._replace(sign=s * s_word)


def catalog_ops() -> list[InvariantOp]:
    """Every catalog operator in its normal-form spelling."""
    return [InvariantOp(nf) for nf in sorted(catalog(), key=lambda fs: [tuple(map(str, fs))])]

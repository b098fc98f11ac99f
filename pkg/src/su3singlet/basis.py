"""Singlet basis labels for three coupled SU(2) or SU(3) irreps.

An SU(3) singlet state is labelled by six linking numbers ``l_ij`` (the power
of ``(a_i^dag . b_j^dag)``) and a signed baryon number ``p`` (the power of the
epsilon-contracted triple of ``a^dag``, or of ``b^dag`` when ``p < 0``).
An SU(2) singlet state is labelled by ``(l12, l23, l31)``.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

PAIRS = ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2))
FIELDS = ("l12", "l21", "l13", "l31", "l23", "l32")


class SingletLabelSU3(NamedTuple):
    l12: int = 0
    l21: int = 0
    l13: int = 0
    l31: int = 0
    l23: int = 0
    l32: int = 0
    p: int = 0

    def l(self, i: int, j: int) -> int:
        return getattr(self, f"l{i}{j}")

    @property
    def ls(self) -> tuple[int, ...]:
        return self[:6]

    @property
    def abs_p(self) -> int:
        return abs(self.p)

    @property
    def weight(self) -> int:
        return 2 * sum(self.ls) + 3 * abs(self.p)

    def n(self, i: int) -> int:
        """Number of a-type linking quanta on leg ``i`` (excluding ``p``)."""
        return sum(self.l(i, j) for j in (1, 2, 3) if j != i)

    def m(self, i: int) -> int:
        """Number of b-type linking quanta on leg ``i`` (excluding ``p``)."""
        return sum(self.l(j, i) for j in (1, 2, 3) if j != i)

    def N(self, i: int) -> int:
        """Total oscillator number on leg ``i``: n_i + m_i + |p|."""
        return self.n(i) + self.m(i) + abs(self.p)

    def is_valid(self) -> bool:
        return all(x >= 0 for x in self.ls)

    def shifted(self, **delta: int) -> SingletLabelSU3:
        return self._replace(**{k: getattr(self, k) + v for k, v in delta.items()})

    def sort_key(self) -> tuple[int, ...]:
        return (self.weight, self.p) + self.ls

    def to_json(self) -> dict[str, int]:
        return dict(zip(self._fields, self))

    @classmethod
    def from_json(cls, obj: dict) -> SingletLabelSU3:
        unknown = set(obj) - set(cls._fields)
        if unknown:
            raise ValueError(f"unknown SU(3) label fields: {sorted(unknown)}")
        label = cls(**{k: int(v) for k, v in obj.items()})
        if not label.is_valid():
            raise ValueError(f"negative linking number in {label}")
        return label


class SingletLabelSU2(NamedTuple):
    l12: int = 0
    l23: int = 0
    l31: int = 0

    @property
    def ns(self) -> tuple[int, int, int]:
        """Per-leg oscillator counts (n1, n2, n3); n_i = 2 j_i."""
        return (self.l12 + self.l31, self.l12 + self.l23, self.l23 + self.l31)

    @property
    def weight(self) -> int:
        return 2 * (self.l12 + self.l23 + self.l31)

    def is_valid(self) -> bool:
        return min(self) >= 0

    def sort_key(self) -> tuple[int, ...]:
        return (self.weight,) + tuple(self)

    def to_json(self) -> dict[str, int]:
        return dict(zip(self._fields, self))

    @classmethod
    def from_json(cls, obj: dict) -> SingletLabelSU2:
        unknown = set(obj) - set(cls._fields)
        if unknown:
            raise ValueError(f"unknown SU(2) label fields: {sorted(unknown)}")
        label = cls(**{k: int(v) for k, v in obj.items()})
        if not label.is_valid():
            raise ValueError(f"negative linking number in {label}")
        return label

    @classmethod
    def from_ns(cls, n1: int, n2: int, n3: int) -> SingletLabelSU2 | None:
        """Inverse of ``ns``; None when the triple violates parity or triangle rules."""
        twice = (n1 + n2 - n3, n2 + n3 - n1, n3 + n1 - n2)
        if any(t < 0 or t % 2 for t in twice):
            return None
        return cls(twice[0] // 2, twice[1] // 2, twice[2] // 2)


def quanta_weight(label: SingletLabelSU3 | SingletLabelSU2) -> int:
    return label.weight


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_su3(w_max: int) -> list[SingletLabelSU3]:
    """All SU(3) labels with weight <= w_max, sorted by (w, p, l12, l21, l13, l31, l23, l32)."""
    if w_max < 0:
        raise ValueError("w_max must be non-negative")
    out = []
    for ap in range(w_max // 3 + 1):
        for total in range((w_max - 3 * ap) // 2 + 1):
            for ls in _compositions(total, 6):
                for p in {ap, -ap}:
                    out.append(SingletLabelSU3(*ls, p))
    out.sort(key=SingletLabelSU3.sort_key)
    return out


def enumerate_su2(n_max: int) -> list[SingletLabelSU2]:
    """All SU(2) labels with n1 + n2 + n3 <= n_max, in (n1+n2+n3, l12, l23, l31) order."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    out = [SingletLabelSU2(*ls) for total in range(n_max // 2 + 1) for ls in _compositions(total, 3)]
    out.sort(key=SingletLabelSU2.sort_key)
    return out


def leg_irrep(label: SingletLabelSU3, leg: int) -> tuple[int, int]:
    """Irrep (p_i, q_i) carried by ``leg``."""
    if leg not in (1, 2, 3):
        raise ValueError(f"leg must be 1, 2 or 3, got {leg}")
    extra_a = label.abs_p if label.p >= 0 else 0
    extra_b = label.abs_p if label.p < 0 else 0
    return label.n(leg) + extra_a, label.m(leg) + extra_b


def irreps(label: SingletLabelSU3) -> tuple[tuple[int, int], ...]:
    return tuple(leg_irrep(label, leg) for leg in (1, 2, 3))


def labels_with_irreps(reps) -> list[SingletLabelSU3]:
    """Every label whose three legs carry the irreps ``reps = ((p1,q1),(p2,q2),(p3,q3))``.

    The sign of p follows from the triality imbalance; the remaining freedom is
    the one-parameter shift that raises the cyclic links (12),(23),(31) and lowers
    the anticyclic ones, so the result may hold more than one label.
    """
    (p1, q1), (p2, q2), (p3, q3) = reps
    if min(p1, q1, p2, q2, p3, q3) < 0:
        return []
    diff = (p1 + p2 + p3) - (q1 + q2 + q3)
    if diff % 3:
        return []
    p = diff // 3
    pa, pb = (p, 0) if p >= 0 else (0, -p)
    r1, r2, r3 = p1 - pa, p2 - pa, p3 - pa
    c1, c2, c3 = q1 - pb, q2 - pb, q3 - pb
    out = []
    for l12 in range(r1 + 1):
        l13 = r1 - l12
        l32 = c2 - l12
        l23 = c3 - l13
        l21 = r2 - l23
        l31 = c1 - l21
        lab = SingletLabelSU3(l12, l21, l13, l31, l23, l32, p)
        if lab.is_valid() and l31 + l32 == r3:
            out.append(lab)
    out.sort(key=SingletLabelSU3.sort_key)
    return out


def sector_key(label: SingletLabelSU3) -> tuple[tuple[int, int], ...]:
    return irreps(label)


"""Constructions on bar cores and exact closed forms for bar-length ratios.

Given a p-bar-core gamma, two families of labels with core gamma and
prescribed weight w are built:

* add_part_pw: adjoin the new part p*w (works for the empty core too);
* grow_class: replace the top part e_i of the residue class i by e_i + p*w.

For each family the ratio of bar-length products between consecutive
weights has an exact closed form, split into its unmixed and mixed factors.
Every closed form here is checked (in tests and via verify_ratio_identities)
against the direct quotient obtained by enumerating bars on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .barpart import (
    BarPartition,
    _check_odd_prime,
    bar_core_and_weight,
    bars,
    is_bar_core,
)


@dataclass(frozen=True)
class CoreDecomposition:
    """Residue-class data of a p-bar-core.

    classes[j] lists the parts congruent to j mod p (sorted increasing);
    d[j] is one less than the class size (-1 for an empty class) and
    e[j] = j + d[j]*p is the top value the class reaches.
    """

    p: int
    gamma: BarPartition
    classes: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    e: tuple[int, ...]

    @property
    def nonempty(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.p) if self.classes[j])


def decompose_core(gamma: BarPartition, p: int) -> CoreDecomposition:
    """Split a p-bar-core into residue classes; rejects non-cores.

    A strict partition is a p-bar-core exactly when no part is divisible
    by p, no two opposite residue classes are both occupied, and every
    occupied class j is the gapless run {j, j+p, ..., e_j}.
    """
    _check_odd_prime(p)
    classes = [[] for _ in range(p)]
    for a in gamma.parts:
        classes[a % p].append(a)
    if classes[0]:
        raise ValueError("%s is not a %d-bar-core: part %d divisible by %d"
                         % (gamma, p, classes[0][0], p))
    for j in range(1, p):
        if classes[j] and classes[p - j]:
            raise ValueError("%s is not a %d-bar-core: classes %d and %d both occupied"
                             % (gamma, p, j, p - j))
    d = []
    for j in range(p):
        cls = sorted(classes[j])
        dj = len(cls) - 1
        if cls != [j + k * p for k in range(dj + 1)]:
            raise ValueError("%s is not a %d-bar-core: class %d has gaps" % (gamma, p, j))
        classes[j] = tuple(cls)
        d.append(dj)
    e = tuple(j + d[j] * p for j in range(p))
    return CoreDecomposition(p, gamma, tuple(classes), tuple(d), e)


def _check_core_and_weight(lam, gamma, p, w, expected_m):
    core, got_w = bar_core_and_weight(lam, p)
    if core != gamma or got_w != w or lam.m != expected_m:
        raise RuntimeError("construction for %s, p=%d, w=%d produced %s" % (gamma, p, w, lam))
    return lam


def add_part_pw(gamma: BarPartition, p: int, w: int) -> BarPartition:
    """Adjoin the part p*w to the core gamma (core gamma, weight w)."""
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    decompose_core(gamma, p)
    lam = BarPartition(tuple(sorted(gamma.parts + (p * w,), reverse=True)))
    return _check_core_and_weight(lam, gamma, p, w, gamma.m + 1)


def grow_class(gamma: BarPartition, p: int, i: int, w: int) -> BarPartition:
    """Replace the top part e_i of class i by e_i + p*w (core gamma, weight w)."""
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    dec = decompose_core(gamma, p)
    if not 1 <= i <= p - 1 or not dec.classes[i]:
        raise ValueError("class %d of %s is empty" % (i, gamma))
    ei = dec.e[i]
    parts = tuple(ei + p * w if a == ei else a for a in gamma.parts)
    lam = BarPartition(tuple(sorted(parts, reverse=True)))
    return _check_core_and_weight(lam, gamma, p, w, gamma.m)


def principal_pair(p: int, w: int) -> tuple[BarPartition, BarPartition]:
    """The labels (pw) and (pw-1, 1), both of empty core and weight w."""
    _check_odd_prime(p)
    if w < 2:
        raise ValueError("w must be >= 2, got %d" % w)
    first = BarPartition((p * w,))
    second = BarPartition((p * w - 1, 1))
    from .barpart import EMPTY
    for lam in (first, second):
        core, got_w = bar_core_and_weight(lam, p)
        if core != EMPTY or got_w != w:
            raise RuntimeError("principal pair construction failed for p=%d, w=%d" % (p, w))
    return first, second


def grow_class_ratio_parts(gamma, p, i, w) -> tuple[Fraction, Fraction]:
    """Closed forms for the unmixed and mixed ratio of the grow_class step.

    Unmixed: p*w times the product over j != i of |p(w-1) + e_i - e_j|.
    Mixed: product over occupied j != i of (e_i + e_j + pw)/(e_i + p(w-1) + j),
    times (2e_i + p(w-1))/(e_i + p(w-1) + i) for the pairs between the moved
    part and the rest of its own class (that factor is 1 when the class is a
    singleton, i.e. e_i = i).
    """
    dec = decompose_core(gamma, p)
    if not 1 <= i <= p - 1 or not dec.classes[i]:
        raise ValueError("class %d of %s is empty" % (i, gamma))
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    ei = dec.e[i]
    unmixed = Fraction(p * w)
    for j in range(p):
        if j != i:
            unmixed *= abs(p * (w - 1) + ei - dec.e[j])
    mixed = Fraction(2 * ei + p * (w - 1), ei + p * (w - 1) + i)
    for j in dec.nonempty:
        if j != i:
            mixed *= Fraction(ei + dec.e[j] + p * w, ei + p * (w - 1) + j)
    return unmixed, mixed


def grow_class_ratio(gamma, p, i, w) -> Fraction:
    """Total ratio of the grow_class step as a single product.

    Equals pw(p(w-1)+2e_i) times, over occupied j != i,
    |p(w-1)+e_i-e_j| (pw+e_i+e_j), times, over residues k with classes k
    and p-k both empty, (pw + e_i - k).  The leading factor carries the
    intra-class mixed pairs and reduces to p(w-1)+e_i+i for a singleton
    class.
    """
    dec = decompose_core(gamma, p)
    if not 1 <= i <= p - 1 or not dec.classes[i]:
        raise ValueError("class %d of %s is empty" % (i, gamma))
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    ei = dec.e[i]
    total = Fraction(p * w) * (p * (w - 1) + 2 * ei)
    for j in dec.nonempty:
        if j != i:
            total *= abs(p * (w - 1) + ei - dec.e[j]) * (p * w + ei + dec.e[j])
    for k in range(p):
        if not dec.classes[k] and not dec.classes[(p - k) % p]:
            total *= abs(p * w + ei - k)
    return total


def add_part_ratio_parts(gamma, p, w) -> tuple[Fraction, Fraction]:
    """Closed forms for the unmixed and mixed ratio of the add_part_pw step.

    The w = 1 step leaves the core itself as denominator and is a
    structurally different formula, hence the explicit branch.
    """
    dec = decompose_core(gamma, p)
    if gamma.m == 0:
        raise ValueError("add_part ratio formulas need a nonempty core")
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    if w > 1:
        unmixed = Fraction(p * w)
        for j in range(1, p):
            unmixed *= abs(p * (w - 1) - dec.e[j])
        mixed = Fraction(1)
        for j in dec.nonempty:
            mixed *= Fraction(dec.e[j] + p * w, p * (w - 1) + j)
        return unmixed, mixed
    unmixed = Fraction(p)
    for j in range(1, p):
        unmixed *= abs(dec.e[j])
    for a in gamma.parts:
        unmixed /= a
    mixed = Fraction(1)
    for a in gamma.parts:
        mixed *= a + p
    return unmixed, mixed


def add_part_ratio(gamma, p, w) -> Fraction:
    """Total ratio of the add_part_pw step as a single product."""
    dec = decompose_core(gamma, p)
    if gamma.m == 0:
        raise ValueError("add_part ratio formulas need a nonempty core")
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    if w > 1:
        total = Fraction(p * w)
        for j in range(1, p):
            total *= abs(p * (w - 1) - dec.e[j])
            # empty classes contribute a factor 1 here
            total *= Fraction(p * w + dec.e[j], p * (w - 1) + j)
        return total
    total = Fraction(p)
    for j in range(1, p):
        total *= abs(dec.e[j])
    for a in gamma.parts:
        total *= Fraction(a + p, a)
    return total


@dataclass(frozen=True)
class RatioCheck:
    identity: str
    residue: int | None  # class index for grow_class chains, None for add_part
    w: int
    closed_form: Fraction
    direct: Fraction

    @property
    def ok(self) -> bool:
        return self.closed_form == self.direct


@dataclass(frozen=True)
class RatioReport:
    gamma: BarPartition
    p: int
    w: int
    checks: tuple[RatioCheck, ...]
    notes: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _direct_ratios(lam, prev):
    ta, tb = bars(lam), bars(prev)
    return (
        Fraction(ta.h_unmixed, tb.h_unmixed),
        Fraction(ta.h_mixed, tb.h_mixed),
        Fraction(ta.h_total, tb.h_total),
    )


def verify_ratio_identities(gamma: BarPartition, p: int, w: int) -> RatioReport:
    """Compare every applicable closed form at weight w with direct quotients.

    Direct quotients come from full bar enumeration of the constructed
    labels at weights w and w-1; equality is exact, never approximate.
    """
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    dec = decompose_core(gamma, p)
    checks = []
    notes = []
    for i in dec.nonempty:
        lam = grow_class(gamma, p, i, w)
        prev = gamma if w == 1 else grow_class(gamma, p, i, w - 1)
        du, dm, dt = _direct_ratios(lam, prev)
        cu, cm = grow_class_ratio_parts(gamma, p, i, w)
        checks.append(RatioCheck("grow-class-unmixed", i, w, cu, du))
        checks.append(RatioCheck("grow-class-mixed", i, w, cm, dm))
        checks.append(RatioCheck("grow-class-total", i, w, grow_class_ratio(gamma, p, i, w), dt))
    if gamma.m:
        lam = add_part_pw(gamma, p, w)
        prev = gamma if w == 1 else add_part_pw(gamma, p, w - 1)
        du, dm, dt = _direct_ratios(lam, prev)
        cu, cm = add_part_ratio_parts(gamma, p, w)
        checks.append(RatioCheck("add-part-unmixed", None, w, cu, du))
        checks.append(RatioCheck("add-part-mixed", None, w, cm, dm))
        checks.append(RatioCheck("add-part-total", None, w, add_part_ratio(gamma, p, w), dt))
    else:
        notes.append("empty core: add-part closed forms not applicable")
        if not dec.nonempty:
            notes.append("empty core: no occupied class, nothing to verify")
    return RatioReport(gamma, p, w, tuple(checks), tuple(notes))


TWO_CLASSES = "two-classes"
UNIQUE_CLASS = "unique-class"


@dataclass(frozen=True)
class ComparisonResult:
    """Outcome of the strict bar-product comparison between two labels."""

    case: str
    gamma: BarPartition
    p: int
    w: int
    larger: BarPartition   # the label claimed to have the larger product
    smaller: BarPartition
    h_larger: int
    h_smaller: int

    @property
    def verified(self) -> bool:
        return self.h_larger > self.h_smaller


def compare_constructions(gamma: BarPartition, p: int, w: int) -> ComparisonResult:
    """Strict comparison of bar-length products for a nonempty core.

    With two or more occupied classes the labels grown from the two
    classes with the largest top values are compared; with a unique
    occupied class the grown label is compared against the added-part
    label.  Comparison is an exact big-integer inequality.
    """
    if gamma.m == 0:
        raise ValueError("comparison needs a nonempty core")
    if w < 1:
        raise ValueError("w must be >= 1, got %d" % w)
    dec = decompose_core(gamma, p)
    order = sorted(dec.nonempty, key=lambda j: dec.e[j], reverse=True)
    if len({dec.e[j] for j in dec.nonempty}) != len(dec.nonempty):
        raise RuntimeError("top class values are not pairwise distinct for %s" % gamma)
    if len(order) >= 2:
        i1, i2 = order[0], order[1]
        la, lb = grow_class(gamma, p, i1, w), grow_class(gamma, p, i2, w)
        case = TWO_CLASSES
    else:
        (i,) = order
        la, lb = grow_class(gamma, p, i, w), add_part_pw(gamma, p, w)
        case = UNIQUE_CLASS
    return ComparisonResult(case, gamma, p, w, la, lb, bars(la).h_total, bars(lb).h_total)


@dataclass(frozen=True)
class GapResult:
    """Exact values behind H(pw) > 2*H(pw-1, 1) for the empty-core pair."""

    p: int
    w: int
    h_single: int  # product of bar lengths of (pw)
    h_split: int   # product of bar lengths of (pw-1, 1)

    @property
    def ok(self) -> bool:
        return self.h_single > 2 * self.h_split


def principal_gap_check(p: int, w: int) -> GapResult:
    """Check the factor-2 gap between the empty-core pair's bar products."""
    first, second = principal_pair(p, w)
    return GapResult(p, w, bars(first).h_total, bars(second).h_total)

"""Spin character labels, signs, exact degrees and the restriction rules.

Characters are modelled as labels plus degrees only.  The double cover of
the symmetric group on n letters is tagged "S", the double cover of the
alternating group "A"; degrees for the "A" group always come from the "S"
degree via the splitting rules, never from an independent formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .barpart import BarPartition, bars, valuation


@dataclass(frozen=True)
class GroupTag:
    kind: str  # "S" or "A"
    n: int

    def __post_init__(self):
        if self.kind not in ("S", "A"):
            raise ValueError("group kind must be 'S' or 'A', got %r" % (self.kind,))
        if self.n < 1:
            raise ValueError("n must be positive, got %d" % self.n)

    def __str__(self):
        return "2.%s_%d" % (self.kind, self.n)


def sym(n: int) -> GroupTag:
    return GroupTag("S", n)


def alt(n: int) -> GroupTag:
    return GroupTag("A", n)


def as_group(group, n: int) -> GroupTag:
    """Accept a GroupTag or a bare "S"/"A" kind for degree-n groups."""
    if isinstance(group, GroupTag):
        if group.n != n:
            raise ValueError("group %s does not act on %d letters" % (group, n))
        return group
    return GroupTag(group, n)


@dataclass(frozen=True)
class SpinCharacter:
    label: BarPartition
    group: GroupTag
    associate_index: int  # 0, or 1 for the second member of an associate pair
    degree: int
    sigma: int


def sigma(lam: BarPartition) -> int:
    """The sign (-1)**(n - m) governing associate splitting."""
    return -1 if (lam.n - lam.m) % 2 else 1


def spin_degree_sym(lam: BarPartition) -> int:
    """Degree of a spin character of the "S" double cover labelled by lam.

    Equals 2**floor((n-m)/2) * n! divided by the product of all bar
    lengths; the division is asserted exact.
    """
    if lam.n < 1:
        raise ValueError("degree needs a nonempty partition")
    table = bars(lam)
    num = (1 << ((lam.n - lam.m) // 2)) * math.factorial(lam.n)
    deg, rem = divmod(num, table.h_total)
    if rem:
        raise RuntimeError("degree formula did not divide exactly for %s" % lam)
    return deg


def characters_of_label(lam: BarPartition, group) -> list[SpinCharacter]:
    """The spin characters a label contributes to the given group.

    "S": one character if sigma = +1, an associate pair of equal degree if
    sigma = -1.  "A": two characters of half the "S" degree if sigma = +1,
    one of the full degree if sigma = -1.
    """
    group = as_group(group, lam.n)
    s = sigma(lam)
    d = spin_degree_sym(lam)
    if group.kind == "S":
        if s == 1:
            return [SpinCharacter(lam, group, 0, d, s)]
        return [SpinCharacter(lam, group, 0, d, s), SpinCharacter(lam, group, 1, d, s)]
    if s == 1:
        if d % 2:
            raise RuntimeError("odd degree %d with sigma = +1 for %s" % (d, lam))
        return [
            SpinCharacter(lam, group, 0, d // 2, s),
            SpinCharacter(lam, group, 1, d // 2, s),
        ]
    return [SpinCharacter(lam, group, 0, d, s)]


def degree_valuation(chi: SpinCharacter, p: int) -> int:
    """Largest k with p**k dividing the character degree."""
    return valuation(chi.degree, p)

"""Bar partitions (partitions into distinct parts), their bars and bar lengths.

All arithmetic is exact; products of bar lengths are plain Python ints.
The partition text format used across the package is "a,b,c" with strictly
decreasing positive parts, and "-" for the empty partition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

TYPE1 = 1  # (x, y): part y shrinks to the non-part value x, length y - x
TYPE2 = 2  # (y,): part y is deleted, length y
TYPE3 = 3  # "mixed" (i, j): parts at positions i < j are both deleted


@dataclass(frozen=True, order=True)
class BarPartition:
    """A partition into strictly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for a in self.parts:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValueError("parts must be positive integers, got %r" % (a,))
        for a, b in zip(self.parts, self.parts[1:]):
            if a == b:
                raise ValueError("repeated part %d in %r" % (a, self.parts))
            if a < b:
                raise ValueError("parts must be strictly decreasing, got %r" % (self.parts,))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def __str__(self):
        return format_partition(self)


EMPTY = BarPartition(())


def make_bar_partition(parts) -> BarPartition:
    """Validate and canonically order a list of parts."""
    parts = list(parts)
    if len(set(parts)) != len(parts):
        raise ValueError("repeated part in %r" % (parts,))
    return BarPartition(tuple(sorted(parts, reverse=True)))


def parse_partition(text: str) -> BarPartition:
    """Parse "a,b,c" (or "-" for the empty partition)."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError("cannot parse partition %r" % text) from None
    return make_bar_partition(parts)


def format_partition(lam: BarPartition) -> str:
    if not lam.parts:
        return "-"
    return ",".join(str(a) for a in lam.parts)


@dataclass(frozen=True)
class Bar:
    """A single bar, kept structurally so its type is exact.

    kind TYPE1: fields (x, y); kind TYPE2: field y; kind TYPE3: 1-based
    positions (i, j) into the decreasing part list.
    """

    kind: int
    length: int
    x: int = 0
    y: int = 0
    i: int = 0
    j: int = 0


@dataclass(frozen=True)
class BarTable:
    """The full bar multiset of a partition with exact length products."""

    bars: tuple[Bar, ...]
    h_total: int
    h_unmixed: int
    h_mixed: int

    def lengths(self) -> list[int]:
        return sorted(b.length for b in self.bars)


def bars(lam: BarPartition) -> BarTable:
    """All bars of lam: each part a_i contributes exactly a_i bars.

    Part a_i yields unmixed bars of lengths {1..a_i} minus the differences
    a_i - a_j with smaller parts, plus mixed bars of lengths a_i + a_j.
    """
    partset = set(lam.parts)
    out = []
    h_u = 1
    h_m = 1
    for idx, a in enumerate(lam.parts):
        for x in range(a):
            if x in partset:
                continue
            if x == 0:
                out.append(Bar(TYPE2, a, y=a))
            else:
                out.append(Bar(TYPE1, a - x, x=x, y=a))
            h_u *= a - x
        for jdx in range(idx + 1, lam.m):
            b = lam.parts[jdx]
            out.append(Bar(TYPE3, a + b, i=idx + 1, j=jdx + 1))
            h_m *= a + b
    return BarTable(tuple(out), h_u * h_m, h_u, h_m)


def remove_bar(lam: BarPartition, bar: Bar) -> BarPartition:
    """Remove a bar of lam; rejects bars that do not belong to lam."""
    partset = set(lam.parts)
    if bar.kind == TYPE2:
        if bar.y not in partset:
            raise ValueError("no part %d in %s" % (bar.y, lam))
        if bar.length != bar.y:
            raise ValueError("bad length %d for part-deletion bar %d" % (bar.length, bar.y))
        new = [a for a in lam.parts if a != bar.y]
    elif bar.kind == TYPE1:
        if bar.y not in partset:
            raise ValueError("no part %d in %s" % (bar.y, lam))
        if not 0 < bar.x < bar.y:
            raise ValueError("need 0 < x < y, got x=%d y=%d" % (bar.x, bar.y))
        if bar.x in partset:
            raise ValueError("x = %d is a part of %s" % (bar.x, lam))
        if bar.length != bar.y - bar.x:
            raise ValueError("bad length %d for bar (%d, %d)" % (bar.length, bar.x, bar.y))
        new = [bar.x if a == bar.y else a for a in lam.parts]
    elif bar.kind == TYPE3:
        if not 1 <= bar.i < bar.j <= lam.m:
            raise ValueError("bad positions (%d, %d) for %s" % (bar.i, bar.j, lam))
        ai, aj = lam.parts[bar.i - 1], lam.parts[bar.j - 1]
        if bar.length != ai + aj:
            raise ValueError("bad length %d for mixed bar (%d, %d)" % (bar.length, ai, aj))
        new = [a for k, a in enumerate(lam.parts) if k not in (bar.i - 1, bar.j - 1)]
    else:
        raise ValueError("unknown bar kind %r" % (bar.kind,))
    return BarPartition(tuple(sorted(new, reverse=True)))


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_odd_prime(p):
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime, got %r" % (p,))


def _acting_part(lam: BarPartition, bar: Bar) -> int:
    return lam.parts[bar.i - 1] if bar.kind == TYPE3 else bar.y


def _removal_order(lam: BarPartition, removable: list[Bar]) -> list[Bar]:
    # Largest acted-on part first, mixed bars before unmixed at ties.
    return sorted(
        removable,
        key=lambda b: (-_acting_part(lam, b), 0 if b.kind == TYPE3 else 1, b.kind, b.x, b.i, b.j),
    )


def bar_core_and_weight(
    lam: BarPartition, p: int, rng: random.Random | None = None
) -> tuple[BarPartition, int]:
    """Remove bars of length exactly p until no bar length is divisible by p.

    Returns (core, w) where w is the number of removals.  The result is
    order-independent; the default removal rule is deterministic, while an
    optional rng picks removable bars at random (for order-independence
    tests).  Consistency with the count of bar lengths divisible by p and
    with |lam| = |core| + p*w is asserted.
    """
    if rng is None:
        return _core_and_weight_cached(lam, p)
    return _core_and_weight(lam, p, rng)


@lru_cache(maxsize=200000)
def _core_and_weight_cached(lam, p):
    return _core_and_weight(lam, p, None)


def _core_and_weight(lam, p, rng):
    _check_odd_prime(p)
    target_w = sum(1 for b in bars(lam).bars if b.length % p == 0)
    cur = lam
    w = 0
    while True:
        table = bars(cur)
        if not any(b.length % p == 0 for b in table.bars):
            break
        removable = _removal_order(cur, [b for b in table.bars if b.length == p])
        if not removable:
            raise RuntimeError(
                "no removable bar of length %d in %s although some bar length"
                " is divisible by %d" % (p, cur, p)
            )
        bar = rng.choice(removable) if rng is not None else removable[0]
        cur = remove_bar(cur, bar)
        w += 1
    if w != target_w:
        raise RuntimeError(
            "removed %d bars from %s but %d bar lengths are divisible by %d"
            % (w, lam, target_w, p)
        )
    if lam.n != cur.n + p * w:
        raise RuntimeError("size mismatch: |%s| != |%s| + %d*%d" % (lam, cur, p, w))
    return cur, w


def is_bar_core(lam: BarPartition, p: int) -> bool:
    """True iff no bar length of lam is divisible by p."""
    _check_odd_prime(p)
    return all(b.length % p != 0 for b in bars(lam).bars)


def weight_tower(lam: BarPartition, p: int) -> tuple[tuple[int, ...], int]:
    """Counts w_k of bar lengths divisible by p**k, and their sum v.

    v equals the p-adic valuation of the product of all bar lengths.
    """
    _check_odd_prime(p)
    lengths = [b.length for b in bars(lam).bars]
    ws = []
    q = p
    while any(length % q == 0 for length in lengths):
        ws.append(sum(1 for length in lengths if length % q == 0))
        q *= p
    return tuple(ws), sum(ws)


def valuation(x: int, p: int) -> int:
    """Largest k with p**k dividing x (x nonzero)."""
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    x = abs(x)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _gen_distinct(n: int, maxpart: int):
    if n == 0:
        yield ()
        return
    for a in range(min(n, maxpart), 0, -1):
        for rest in _gen_distinct(n - a, a - 1):
            yield (a,) + rest


@lru_cache(maxsize=None)
def _enumerate_cached(n):
    return tuple(BarPartition(parts) for parts in _gen_distinct(n, n))


def enumerate_bar_partitions(n: int) -> list[BarPartition]:
    """All partitions of n into distinct parts, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative, got %d" % n)
    return list(_enumerate_cached(n))


def labels_with_core_and_weight(gamma: BarPartition, p: int, w: int) -> list[BarPartition]:
    """All bar partitions of |gamma| + p*w whose p-bar-core is gamma."""
    _check_odd_prime(p)
    if w < 0:
        raise ValueError("w must be nonnegative, got %d" % w)
    if not is_bar_core(gamma, p):
        raise ValueError("%s is not a %d-bar-core" % (gamma, p))
    n = gamma.n + p * w
    return [lam for lam in enumerate_bar_partitions(n) if bar_core_and_weight(lam, p)[0] == gamma]

"""Partial orders on {1..s} with a height cap, and their order ideals.

The ordered ground set together with the height models a regular multiset
{l/1, ..., l/s} whose elements are comparable exactly when the underlying
ground-set elements are.  An order ideal is then a capped multiset whose
counts are forced to the full height strictly below any present element,
so the whole ideal lattice is driven by the poset alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, cached_property

from .mset import Mset, ShapeError, complement as mset_complement


class CycleError(ValueError):
    """The supplied relation pairs contain a directed cycle."""


class NotAnIdealError(ValueError):
    """A multiset violates downward closure for the given order."""


def _transitive_closure(s: int, pairs) -> frozenset[tuple[int, int]]:
    below = {i: set() for i in range(1, s + 1)}  # below[b] = {a : a < b}
    for a, b in pairs:
        if not (1 <= a <= s and 1 <= b <= s):
            raise ValueError(f"relation ({a},{b}) outside ground set 1..{s}")
        if a == b:
            raise CycleError(f"reflexive pair ({a},{b}) not allowed in a strict order")
        below[b].add(a)
    changed = True
    while changed:
        changed = False
        for b in range(1, s + 1):
            extra = set()
            for a in below[b]:
                extra |= below[a] - below[b]
            if extra:
                below[b] |= extra
                changed = True
    for b in range(1, s + 1):
        if b in below[b]:
            raise CycleError(f"element {b} lies on a cycle")
    return frozenset((a, b) for b in range(1, s + 1) for a in below[b])


@dataclass(frozen=True)
class Pomset:
    """Strict partial order on {1..s} with a common multiplicity cap.

    `order` holds the full (transitively closed) set of strict pairs (a, b)
    meaning a < b.  Use `from_relations` to build from covering pairs.
    """

    ground_size: int
    height: int
    order: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.ground_size < 1:
            raise ValueError("ground_size must be positive")
        if self.height < 1:
            raise ValueError("height must be positive")
        object.__setattr__(
            self, "order", frozenset((int(a), int(b)) for a, b in self.order)
        )
        for a, b in self.order:
            if not (1 <= a <= self.ground_size and 1 <= b <= self.ground_size):
                raise ValueError(f"pair ({a},{b}) outside ground set")
            if a == b:
                raise CycleError(f"reflexive pair ({a},{b})")
            if (b, a) in self.order:
                raise CycleError(f"antisymmetry violated on ({a},{b})")
        if _transitive_closure(self.ground_size, self.order) != self.order:
            raise ValueError("order is not transitively closed; use from_relations")

    @classmethod
    def from_relations(cls, ground_size: int, height: int, pairs) -> "Pomset":
        """Build from covering (Hasse) or arbitrary strict pairs a < b."""
        return cls(ground_size, height, _transitive_closure(ground_size, pairs))

    @classmethod
    def chain(cls, ground_size: int, height: int) -> "Pomset":
        """The total order 1 < 2 < ... < s."""
        pairs = [(i, i + 1) for i in range(1, ground_size)]
        return cls.from_relations(ground_size, height, pairs)

    @classmethod
    def antichain(cls, ground_size: int, height: int) -> "Pomset":
        return cls(ground_size, height, frozenset())

    @cached_property
    def strictly_below(self) -> dict[int, frozenset[int]]:
        out = {i: set() for i in range(1, self.ground_size + 1)}
        for a, b in self.order:
            out[b].add(a)
        return {i: frozenset(v) for i, v in out.items()}

    @cached_property
    def strictly_above(self) -> dict[int, frozenset[int]]:
        out = {i: set() for i in range(1, self.ground_size + 1)}
        for a, b in self.order:
            out[a].add(b)
        return {i: frozenset(v) for i, v in out.items()}

    @property
    def is_chain(self) -> bool:
        s = self.ground_size
        return len(self.order) == s * (s - 1) // 2

    @property
    def is_antichain(self) -> bool:
        return not self.order

    def closure_counts(self, weights: tuple[int, ...]) -> tuple[int, ...]:
        """Counts of the smallest ideal containing the given count vector.

        Every element strictly below a present element is raised to full
        height; present elements keep their own count otherwise.
        """
        l = self.height
        above = self.strictly_above
        out = list(weights)
        for j in range(1, self.ground_size + 1):
            if out[j - 1] == l:
                continue
            for i in above[j]:
                if weights[i - 1]:
                    out[j - 1] = l
                    break
        return tuple(out)


@dataclass(frozen=True)
class Ideal:
    """Order ideal of a pomset, stored as its count vector."""

    pomset: Pomset
    counts: tuple[int, ...]

    def __post_init__(self):
        p = self.pomset
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != p.ground_size:
            raise ShapeError(
                f"expected {p.ground_size} counts, got {len(self.counts)}"
            )
        for i, c in enumerate(self.counts, start=1):
            if not 0 <= c <= p.height:
                raise ValueError(f"count {c}/{i} outside 0..{p.height}")
        for j in range(1, p.ground_size + 1):
            if self.counts[j - 1] == p.height:
                continue
            for i in p.strictly_above[j]:
                if self.counts[i - 1]:
                    raise NotAnIdealError(
                        f"element {i} present but {j} < {i} lacks full count"
                    )

    @classmethod
    def from_mset(cls, pomset: Pomset, a: Mset) -> "Ideal":
        _check_ground(pomset, a)
        return cls(pomset, a.counts)

    @property
    def mset(self) -> Mset:
        return Mset(self.pomset.ground_size, self.pomset.height, self.counts)

    @property
    def cardinality(self) -> int:
        return sum(self.counts)

    def count(self, a: int) -> int:
        return self.counts[a - 1]

    @property
    def root_set(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.counts, start=1) if c)

    @property
    def full_elements(self) -> frozenset[int]:
        """Root elements carrying the full height."""
        l = self.pomset.height
        return frozenset(i for i, c in enumerate(self.counts, start=1) if c == l)

    @property
    def partial_elements(self) -> frozenset[int]:
        """Root elements with count strictly below the height (I_p)."""
        l = self.pomset.height
        return frozenset(
            i for i, c in enumerate(self.counts, start=1) if 0 < c < l
        )

    @property
    def maximal_elements(self) -> frozenset[int]:
        """Root elements with no other root element strictly above them."""
        root = self.root_set
        above = self.pomset.strictly_above
        return frozenset(i for i in root if not (above[i] & root))

    @property
    def is_full_count(self) -> bool:
        return not self.partial_elements

    def __str__(self) -> str:
        return str(self.mset)


def _check_ground(p: Pomset, a: Mset) -> None:
    if a.ground_size != p.ground_size or a.height != p.height:
        raise ShapeError(
            f"mset shape ({a.ground_size},{a.height}) does not match pomset "
            f"({p.ground_size},{p.height})"
        )


def is_ideal(p: Pomset, a: Mset) -> bool:
    """True iff every element strictly below a present element has full count."""
    _check_ground(p, a)
    for j in range(1, p.ground_size + 1):
        if a.counts[j - 1] == p.height:
            continue
        for i in p.strictly_above[j]:
            if a.counts[i - 1]:
                return False
    return True


def ideal_generated(p: Pomset, s: Mset) -> Ideal:
    """Smallest ideal containing the given multiset."""
    _check_ground(p, s)
    return Ideal(p, p.closure_counts(s.counts))


@lru_cache(maxsize=None)
def _downsets(p: Pomset) -> tuple[frozenset[int], ...]:
    """All downward-closed subsets of the ground set, canonically ordered."""
    out = []
    elements = range(1, p.ground_size + 1)
    below = p.strictly_below
    for bits in itertools.product((False, True), repeat=p.ground_size):
        sub = frozenset(i for i, keep in zip(elements, bits) if keep)
        if all(below[i] <= sub for i in sub):
            out.append(sub)
    out.sort(key=lambda d: (len(d), sorted(d)))
    return tuple(out)


def enumerate_root_downsets(p: Pomset, size: int) -> list[frozenset[int]]:
    """All downward-closed subsets of the given size (root sets of ideals)."""
    if not 0 <= size <= p.ground_size:
        raise ValueError(f"size {size} outside 0..{p.ground_size}")
    return [d for d in _downsets(p) if len(d) == size]


def _ideals_with_root(p: Pomset, down: frozenset[int]):
    """All ideals whose root set is exactly the given downset."""
    l = p.height
    above = p.strictly_above
    free = sorted(i for i in down if not (above[i] & down))
    forced = {i: l for i in down if above[i] & down}
    for choice in itertools.product(range(1, l + 1), repeat=len(free)):
        counts = [0] * p.ground_size
        for i, c in forced.items():
            counts[i - 1] = c
        for i, c in zip(free, choice):
            counts[i - 1] = c
        yield Ideal(p, tuple(counts))


def all_ideals(p: Pomset) -> list[Ideal]:
    """Every order ideal of the pomset, sorted by count vector."""
    out = []
    for down in _downsets(p):
        out.extend(_ideals_with_root(p, down))
    out.sort(key=lambda i: i.counts)
    return out


def enumerate_ideals(p: Pomset, r: int) -> list[Ideal]:
    """All ideals of cardinality r, sorted lexicographically by count vector."""
    if not 0 <= r <= p.ground_size * p.height:
        raise ValueError(f"cardinality {r} outside 0..{p.ground_size * p.height}")
    out = [i for i in all_ideals(p) if i.cardinality == r]
    return out


def dual_pomset(p: Pomset) -> Pomset:
    """Same ground set and height with the order reversed."""
    return Pomset(p.ground_size, p.height, frozenset((b, a) for a, b in p.order))


def ideal_complement(p: Pomset, ideal: Ideal) -> Ideal:
    """Count-wise complement, returned as an ideal of the dual pomset."""
    if ideal.pomset != p:
        raise ShapeError("ideal does not belong to the given pomset")
    return Ideal.from_mset(dual_pomset(p), mset_complement(ideal.mset))


def is_finer(p1: Pomset, p2: Pomset) -> bool:
    """True iff every related pair of p1 is related in p2."""
    if p1.ground_size != p2.ground_size or p1.height != p2.height:
        raise ShapeError("pomsets differ in ground size or height")
    return p1.order <= p2.order

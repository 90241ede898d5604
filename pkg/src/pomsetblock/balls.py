"""Balls and spheres of the block metric: membership, closed-form sizes,
explicit enumeration, and tiling translates.

Closed forms here are certified against exhaustive enumeration by the
`oracle` module; enumeration order is always lexicographic on coordinates.
"""

from __future__ import annotations

import itertools

from .mset import Mset, ShapeError
from .pomset import Ideal, enumerate_ideals
from .space import Space, Vector

DEFAULT_BUDGET = 10 ** 7


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured budget."""


class PartitionImpossibleError(ValueError):
    """No set of ball translates can tile the space for this ideal.

    Raised when some partially counted element c has 2c+1 not dividing m.
    """

    def __init__(self, element: int, count: int, m: int):
        self.element = element
        self.count = count
        super().__init__(
            f"2*{count}+1 = {2 * count + 1} does not divide m = {m} "
            f"(element {element})"
        )


def lee_ball_size(m: int, a: int) -> int:
    """Number of residues mod m with Lee weight at most a (a >= 0)."""
    return min(2 * a + 1, m)


def lee_ball_residues(m: int, a: int) -> tuple[int, ...]:
    """Residues mod m with Lee weight at most a, ascending."""
    return tuple(x for x in range(m) if min(x, m - x) <= a)


def _counts_of(space: Space, i) -> tuple[int, ...]:
    """Accept an Ideal or a plain Mset over the space's ground shape."""
    if isinstance(i, Ideal):
        if i.pomset != space.pomset:
            raise ShapeError("ideal does not belong to the space's order")
        return i.counts
    if isinstance(i, Mset):
        if i.ground_size != space.s or i.height != space.height:
            raise ShapeError("mset shape does not match the space")
        return i.counts
    raise TypeError(f"expected Ideal or Mset, got {type(i).__name__}")


def in_I_ball(v: Vector, u: Vector, i) -> bool:
    """True iff the block support of u - v fits inside i (Ideal or Mset)."""
    if v.space != u.space:
        raise ShapeError("vectors belong to different spaces")
    counts = _counts_of(v.space, i)
    bw = v.space.block_weights(tuple((a - b) % v.space.m
                                     for a, b in zip(u.coords, v.coords)))
    return all(w <= c for w, c in zip(bw, counts))


def _require_ideal(space: Space, i: Ideal) -> Ideal:
    if not isinstance(i, Ideal):
        raise TypeError(f"expected Ideal, got {type(i).__name__}")
    if i.pomset != space.pomset:
        raise ShapeError("ideal does not belong to the space's order")
    return i


def I_ball_cardinality(space: Space, i: Ideal) -> int:
    """Closed-form size of an I-ball: (2c+1)^k on partial blocks, m^k on full."""
    _require_ideal(space, i)
    size = 1
    for t, c in enumerate(i.counts, start=1):
        if c == 0:
            continue
        k = space.labeling[t - 1]
        if c == space.height:
            size *= space.m ** k
        else:
            size *= (2 * c + 1) ** k
    return size


def I_sphere_cardinality(space: Space, i: Ideal) -> int:
    """Number of vectors whose support generates exactly this ideal.

    Maximal blocks must weigh exactly their count c, giving
    min(2c+1, m)^k - (2c-1)^k choices; non-maximal root blocks are free.
    The empty ideal's sphere is the zero vector alone (size 1).
    """
    _require_ideal(space, i)
    if i.cardinality == 0:
        return 1
    maximal = i.maximal_elements
    size = 1
    for t in sorted(i.root_set):
        k = space.labeling[t - 1]
        if t in maximal:
            c = i.counts[t - 1]
            size *= lee_ball_size(space.m, c) ** k - lee_ball_size(space.m, c - 1) ** k
        else:
            size *= space.m ** k
    return size


def r_ball_cardinality(space: Space, r: int) -> int:
    """Size of a radius-r ball: one plus all sphere sizes at cardinalities <= r."""
    if not 0 <= r <= space.max_weight:
        raise ValueError(f"radius {r} outside 0..{space.max_weight}")
    total = 1
    for card in range(1, r + 1):
        for i in enumerate_ideals(space.pomset, card):
            total += I_sphere_cardinality(space, i)
    return total


def _ball_block_choices(space: Space, counts: tuple[int, ...]):
    """Per-coordinate residue ranges of the origin-centered ball."""
    choices = []
    for t, c in enumerate(counts, start=1):
        k = space.labeling[t - 1]
        if c == 0:
            residues = (0,)
        elif c == space.height:
            residues = tuple(range(space.m))
        else:
            residues = lee_ball_residues(space.m, c)
        choices.extend([residues] * k)
    return choices


def iter_I_ball_coords(space: Space, i: Ideal, budget: int = DEFAULT_BUDGET):
    """Coordinate tuples of the origin-centered I-ball, lexicographic order."""
    _require_ideal(space, i)
    if I_ball_cardinality(space, i) > budget:
        raise BudgetExceededError(
            f"I-ball of size {I_ball_cardinality(space, i)} exceeds budget {budget}"
        )
    return itertools.product(*_ball_block_choices(space, i.counts))


def enumerate_I_ball(u: Vector, i: Ideal, budget: int = DEFAULT_BUDGET) -> list[Vector]:
    """Exact member list of the I-ball centered at u, canonically ordered."""
    sp = u.space
    m = sp.m
    members = [
        sp.vector(tuple((a + b) % m for a, b in zip(u.coords, offset)))
        for offset in iter_I_ball_coords(sp, i, budget)
    ]
    members.sort(key=lambda v: v.coords)
    return members


def partition_centers(space: Space, i: Ideal, budget: int = DEFAULT_BUDGET) -> list[Vector]:
    """Centers whose I-balls tile the space.

    Full-count blocks are pinned to zero, partially counted blocks step in
    multiples of 2c+1 (each must divide m), and blocks outside the root set
    are free.  Raises PartitionImpossibleError when the divisibility fails.
    """
    _require_ideal(space, i)
    height = space.height
    choices = []
    for t, c in enumerate(i.counts, start=1):
        k = space.labeling[t - 1]
        if c == height:
            residues = (0,)
        elif c == 0:
            residues = tuple(range(space.m))
        else:
            step = 2 * c + 1
            if space.m % step:
                raise PartitionImpossibleError(t, c, space.m)
            residues = tuple(range(0, space.m, step))
        choices.extend([residues] * k)
    total = 1
    for residues in choices:
        total *= len(residues)
    if total > budget:
        raise BudgetExceededError(f"{total} centers exceed budget {budget}")
    centers = [space.vector(coords) for coords in itertools.product(*choices)]
    centers.sort(key=lambda v: v.coords)
    return centers

"""The metric space Z_m^n split into labeled coordinate blocks.

Coordinates are grouped into one block per ordered ground-set element; a
block weighs as the maximum Lee weight of its coordinates, and the weight
of a vector is the cardinality of the order ideal generated by its block
support.  All values are immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .mset import Mset, ShapeError
from .pomset import Pomset


def lee_weight(x: int, m: int) -> int:
    """min(x, m - x) for a residue 0 <= x < m."""
    if not 0 <= x < m:
        raise ValueError(f"residue {x} outside 0..{m - 1}")
    return min(x, m - x)


def block_weight(block: tuple[int, ...], m: int) -> int:
    """Maximum Lee weight over a nonempty block of residues."""
    if not block:
        raise ShapeError("block must be nonempty")
    return max(min(x, m - x) for x in block)


@dataclass(frozen=True)
class Space:
    """Block structure on Z_m^n: modulus, order on blocks, block dimensions.

    The order's height must equal floor(m/2), the largest Lee weight.  For
    m in {2, 3} the height is 1 and the metric degenerates to the plain
    ordered block metric; these moduli are accepted.
    """

    m: int
    pomset: Pomset
    labeling: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be at least 2, got {self.m}")
        object.__setattr__(self, "labeling", tuple(int(k) for k in self.labeling))
        if not self.labeling or any(k < 1 for k in self.labeling):
            raise ValueError("labeling must be a nonempty list of positive sizes")
        if self.pomset.ground_size != len(self.labeling):
            raise ShapeError(
                f"labeling has {len(self.labeling)} blocks but order has "
                f"{self.pomset.ground_size} elements"
            )
        if self.pomset.height != self.m // 2:
            raise ShapeError(
                f"order height {self.pomset.height} != floor(m/2) = {self.m // 2}"
            )

    @property
    def s(self) -> int:
        return len(self.labeling)

    @property
    def height(self) -> int:
        return self.m // 2

    @cached_property
    def n(self) -> int:
        return sum(self.labeling)

    @cached_property
    def block_bounds(self) -> tuple[tuple[int, int], ...]:
        bounds = []
        start = 0
        for k in self.labeling:
            bounds.append((start, start + k))
            start += k
        return tuple(bounds)

    @property
    def max_weight(self) -> int:
        return self.s * self.height

    @property
    def size(self) -> int:
        return self.m ** self.n

    def vector(self, coords) -> "Vector":
        """Wrap coordinates, reducing signed integers mod m."""
        reduced = tuple(int(x) % self.m for x in coords)
        return Vector(self, reduced)

    def zero(self) -> "Vector":
        return Vector(self, (0,) * self.n)

    def iter_coords(self):
        """All coordinate tuples in lexicographic order."""
        return itertools.product(range(self.m), repeat=self.n)

    def iter_vectors(self):
        for coords in self.iter_coords():
            yield Vector(self, coords)

    def block_weights(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        """Per-block maximum Lee weight of a raw coordinate tuple."""
        m = self.m
        out = []
        for lo, hi in self.block_bounds:
            w = 0
            for t in range(lo, hi):
                x = coords[t]
                lw = x if x + x <= m else m - x
                if lw > w:
                    w = lw
            out.append(w)
        return tuple(out)

    def weight_counts(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        """Counts of the ideal generated by the block support."""
        return self.pomset.closure_counts(self.block_weights(coords))

    def coords_weight(self, coords: tuple[int, ...]) -> int:
        """Weight of a raw coordinate tuple (scan-friendly form)."""
        return sum(self.weight_counts(coords))


@dataclass(frozen=True)
class Vector:
    space: Space
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if len(self.coords) != self.space.n:
            raise ShapeError(
                f"expected {self.space.n} coordinates, got {len(self.coords)}"
            )
        for x in self.coords:
            if not 0 <= x < self.space.m:
                raise ValueError(f"coordinate {x} not reduced mod {self.space.m}")

    def block(self, i: int) -> tuple[int, ...]:
        lo, hi = self.space.block_bounds[i - 1]
        return self.coords[lo:hi]

    def __add__(self, other: "Vector") -> "Vector":
        _check_space(self, other)
        m = self.space.m
        return Vector(
            self.space, tuple((x + y) % m for x, y in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "Vector") -> "Vector":
        _check_space(self, other)
        m = self.space.m
        return Vector(
            self.space, tuple((x - y) % m for x, y in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "Vector":
        m = self.space.m
        return Vector(self.space, tuple((-x) % m for x in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


def _check_space(u: Vector, v: Vector) -> None:
    if u.space != v.space:
        raise ShapeError("vectors belong to different spaces")


def support(u: Vector) -> Mset:
    """Block support: the multiset recording each block's Lee weight."""
    sp = u.space
    return Mset(sp.s, sp.height, sp.block_weights(u.coords))


def pomset_weight(u: Vector) -> int:
    """Cardinality of the ideal generated by the block support."""
    return u.space.coords_weight(u.coords)


def distance(u: Vector, v: Vector) -> int:
    """Weight of the coordinate-wise difference mod m."""
    _check_space(u, v)
    return pomset_weight(u - v)

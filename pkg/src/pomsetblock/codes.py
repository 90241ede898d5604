"""Code-level analytics: spans, minimum distance, duals, perfectness,
the Singleton bound and MDS verification, parity-block dependence, and
weight distributions.

Perfectness checks run an exact membership census over the whole space,
so they are budget-guarded rather than approximate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .balls import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    in_I_ball,
    iter_I_ball_coords,
)
from .mset import ShapeError
from .pomset import Ideal, enumerate_root_downsets
from .space import Space, Vector, distance


class UndefinedDistanceError(ValueError):
    """Minimum distance requested for a single-codeword code."""


class InternalInconsistencyError(RuntimeError):
    """A proven identity failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Code:
    """Finite nonempty set of vectors of one space, canonically ordered.

    `generator` records the rows the code was spanned from, when it was;
    `known_linear` marks codes that are submodules by construction.
    """

    space: Space
    codewords: tuple[Vector, ...]
    generator: tuple[tuple[int, ...], ...] | None = None
    known_linear: bool = field(default=False, compare=False)

    def __post_init__(self):
        words = list(self.codewords)
        if not words:
            raise ValueError("a code must contain at least one codeword")
        for w in words:
            if w.space != self.space:
                raise ShapeError("codeword from a different space")
        words = sorted({w.coords for w in words})
        object.__setattr__(
            self, "codewords", tuple(Vector(self.space, c) for c in words)
        )

    @classmethod
    def from_codewords(cls, space: Space, coord_lists) -> "Code":
        return cls(space, tuple(space.vector(c) for c in coord_lists))

    @property
    def size(self) -> int:
        return len(self.codewords)

    @cached_property
    def coord_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(w.coords for w in self.codewords)

    @cached_property
    def is_linear(self) -> bool:
        """True iff the code is a submodule (closed under + and -)."""
        if self.generator is not None or self.known_linear:
            return True
        words = self.coord_set
        if (0,) * self.space.n not in words:
            return False
        m = self.space.m
        for a in words:
            if tuple((-x) % m for x in a) not in words:
                return False
            for b in words:
                if tuple((x + y) % m for x, y in zip(a, b)) not in words:
                    return False
        return True


def span_generator(space: Space, rows, budget: int = DEFAULT_BUDGET) -> Code:
    """All linear combinations over Z_m of the given rows."""
    norm = tuple(tuple(int(x) % space.m for x in row) for row in rows)
    for row in norm:
        if len(row) != space.n:
            raise ShapeError(f"generator row of length {len(row)}, expected {space.n}")
    if space.m ** len(norm) > budget:
        raise BudgetExceededError(
            f"{space.m ** len(norm)} coefficient tuples exceed budget {budget}"
        )
    m = space.m
    words = set()
    for coeffs in itertools.product(range(m), repeat=len(norm)):
        acc = [0] * space.n
        for a, row in zip(coeffs, norm):
            if a:
                for t, x in enumerate(row):
                    acc[t] = (acc[t] + a * x) % m
        words.add(tuple(acc))
    return Code(space, tuple(Vector(space, w) for w in words), generator=norm)


def min_distance(c: Code) -> int:
    """Least distance between distinct codewords; min nonzero weight if linear."""
    if c.size < 2:
        raise UndefinedDistanceError("minimum distance needs at least two codewords")
    sp = c.space
    if c.is_linear:
        return min(
            sp.coords_weight(w.coords) for w in c.codewords if any(w.coords)
        )
    return min(
        distance(u, v) for u, v in itertools.combinations(c.codewords, 2)
    )


def dual_code(c: Code, budget: int = DEFAULT_BUDGET) -> Code:
    """Annihilator { v : v . c = 0 mod m for all c }, by exhaustive scan."""
    if not c.is_linear:
        raise ValueError("dual code requires a linear (submodule) code")
    sp = c.space
    if sp.size > budget:
        raise BudgetExceededError(f"space of size {sp.size} exceeds budget {budget}")
    # Annihilating a spanning set annihilates every combination of it.
    rows = c.generator if c.generator is not None else tuple(
        w.coords for w in c.codewords
    )
    m = sp.m
    words = []
    for coords in sp.iter_coords():
        if all(sum(x * y for x, y in zip(coords, row)) % m == 0 for row in rows):
            words.append(Vector(sp, coords))
    return Code(sp, tuple(words), known_linear=True)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a perfectness / disjointness census."""

    ok: bool
    witness: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _ball_census(c: Code, ball_coords, budget: int, require_cover: bool) -> CheckResult:
    """Tally ball translates at every codeword; exact and deterministic."""
    sp = c.space
    ball = list(ball_coords)
    if c.size * len(ball) > budget or (require_cover and sp.size > budget):
        raise BudgetExceededError(
            f"census of {c.size} x {len(ball)} memberships over a space of "
            f"{sp.size} vectors exceeds budget {budget}"
        )
    m = sp.m
    seen: dict[tuple[int, ...], int] = {}
    for w in c.codewords:
        base = w.coords
        for offset in ball:
            x = tuple((a + b) % m for a, b in zip(base, offset))
            if x in seen:
                return CheckResult(False, x, "vector covered by two balls")
            seen[x] = 1
    if not require_cover:
        return CheckResult(True)
    if len(seen) == sp.size:
        return CheckResult(True)
    for coords in sp.iter_coords():
        if coords not in seen:
            return CheckResult(False, coords, "vector covered by no ball")
    raise InternalInconsistencyError("census undercount without witness")


def check_I_perfect(c: Code, i: Ideal, budget: int = DEFAULT_BUDGET) -> CheckResult:
    return _ball_census(c, iter_I_ball_coords(c.space, i, budget), budget, True)


def is_I_perfect(c: Code, i: Ideal, budget: int = DEFAULT_BUDGET) -> bool:
    return check_I_perfect(c, i, budget).ok


def _r_ball_coords(sp: Space, r: int, budget: int):
    if not 0 <= r <= sp.max_weight:
        raise ValueError(f"radius {r} outside 0..{sp.max_weight}")
    if sp.size > budget:
        raise BudgetExceededError(f"space of size {sp.size} exceeds budget {budget}")
    return [co for co in sp.iter_coords() if sp.coords_weight(co) <= r]


def check_r_perfect(c: Code, r: int, budget: int = DEFAULT_BUDGET) -> CheckResult:
    return _ball_census(c, _r_ball_coords(c.space, r, budget), budget, True)


def is_r_perfect(c: Code, r: int, budget: int = DEFAULT_BUDGET) -> bool:
    return check_r_perfect(c, r, budget).ok


def check_r_error_correcting(
    c: Code, r: int, budget: int = DEFAULT_BUDGET
) -> CheckResult:
    return _ball_census(c, _r_ball_coords(c.space, r, budget), budget, False)


def is_r_error_correcting(c: Code, r: int, budget: int = DEFAULT_BUDGET) -> bool:
    return check_r_error_correcting(c, r, budget).ok


def ceil_log(k: int, m: int) -> int:
    """Smallest e with m^e >= k (k >= 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    e, v = 0, 1
    while v < k:
        v *= m
        e += 1
    return e


def singleton_rhs(c: Code) -> int:
    """Largest block-dimension sum over downsets of size floor((d-1)/height)."""
    d = min_distance(c)
    sp = c.space
    r = (d - 1) // sp.height
    if r == 0:
        return 0
    return max(
        sum(sp.labeling[i - 1] for i in down)
        for down in enumerate_root_downsets(sp.pomset, r)
    )


def is_MDS(c: Code) -> bool:
    """True iff n - ceil(log_m K) meets the Singleton bound with equality."""
    sp = c.space
    lhs = sp.n - ceil_log(c.size, sp.m)
    rhs = singleton_rhs(c)
    if lhs < rhs:
        raise InternalInconsistencyError(
            f"Singleton bound violated: {lhs} < {rhs}"
        )
    return lhs == rhs


def critical_ideals(c: Code) -> list[Ideal]:
    """Full-count ideals witnessing the Singleton maximum.

    These have root sets of size floor((d-1)/height) whose block dimensions
    sum to the bound's right side; for an MDS code they are exactly the
    ideals whose balls tile the space around the codewords.
    """
    sp = c.space
    d = min_distance(c)
    r = (d - 1) // sp.height
    rhs = singleton_rhs(c)
    out = []
    for down in enumerate_root_downsets(sp.pomset, r):
        if sum(sp.labeling[i - 1] for i in down) == rhs:
            counts = tuple(
                sp.height if i in down else 0 for i in range(1, sp.s + 1)
            )
            out.append(Ideal(sp.pomset, counts))
    return out


def construct_I_perfect(
    space: Space, i: Ideal, f, budget: int = DEFAULT_BUDGET
) -> Code:
    """Graph code { (v, f(v)) } over a full-count ideal's block split.

    `f` maps each tuple over the blocks outside the root set to a tuple
    over the blocks inside it; the resulting code tiles the space with
    I-balls, which is verified before returning.
    """
    if i.pomset != space.pomset:
        raise ShapeError("ideal does not belong to the space's order")
    if not i.is_full_count:
        raise ValueError("construction requires an ideal with full count")
    root = i.root_set
    inside = [t for t in range(1, space.s + 1) if t in root]
    outside = [t for t in range(1, space.s + 1) if t not in root]
    out_dim = sum(space.labeling[t - 1] for t in outside)
    in_dim = sum(space.labeling[t - 1] for t in inside)
    if space.m ** out_dim > budget:
        raise BudgetExceededError(
            f"{space.m ** out_dim} codewords exceed budget {budget}"
        )
    words = []
    for v in itertools.product(range(space.m), repeat=out_dim):
        w = f(v)
        if w is None or len(tuple(w)) != in_dim:
            raise ValueError(
                f"f must map every outside tuple to {in_dim} inside coordinates"
            )
        w = tuple(int(x) % space.m for x in w)
        coords = [0] * space.n
        pos = 0
        for t in outside:
            lo, hi = space.block_bounds[t - 1]
            coords[lo:hi] = v[pos : pos + (hi - lo)]
            pos += hi - lo
        pos = 0
        for t in inside:
            lo, hi = space.block_bounds[t - 1]
            coords[lo:hi] = w[pos : pos + (hi - lo)]
            pos += hi - lo
        words.append(Vector(space, tuple(coords)))
    code = Code(space, tuple(words))
    result = check_I_perfect(code, i, budget)
    if not result.ok:
        raise InternalInconsistencyError(
            f"graph code failed its tiling census: {result.reason}"
        )
    return code


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    p = 2
    while p * p <= m:
        if m % p == 0:
            return False
        p += 1
    return True


def _rref_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    """Reduced row echelon form over the field Z_p; zero rows dropped."""
    mat = [list(r) for r in rows]
    pivot_row = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(pivot_row, len(mat)) if mat[r][col] % p), None
        )
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = pow(mat[pivot_row][col], p - 2, p)
        mat[pivot_row] = [(x * inv) % p for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] % p:
                factor = mat[r][col]
                mat[r] = [
                    (x - factor * y) % p for x, y in zip(mat[r], mat[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return [r for r in mat[:pivot_row]]


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows:
        return 0
    return len(_rref_mod_p(rows, p))


def parity_check_rows(c: Code, budget: int = DEFAULT_BUDGET) -> list[list[int]]:
    """A reduced basis of the dual code, as parity-check rows (prime m only)."""
    sp = c.space
    if not is_prime(sp.m):
        raise ValueError("parity-check analysis requires a prime modulus")
    dual = dual_code(c, budget)
    return _rref_mod_p([list(w.coords) for w in dual.codewords], sp.m)


def block_dependency_witnesses(
    c: Code, budget: int = DEFAULT_BUDGET
) -> tuple[int, list[frozenset[int]]]:
    """Smallest downset size whose parity-check blocks are linearly dependent.

    Returns the size together with every witnessing downset of that size.
    """
    sp = c.space
    if c.size < 2:
        raise ValueError("the zero code has no dependent block set")
    h = parity_check_rows(c, budget)
    p = sp.m
    nrows = len(h)
    for j in range(1, sp.s + 1):
        witnesses = []
        for down in enumerate_root_downsets(sp.pomset, j):
            cols = [
                t
                for i in sorted(down)
                for t in range(*sp.block_bounds[i - 1])
            ]
            width = len(cols)
            sub = [[row[t] for t in cols] for row in h] if nrows else []
            if _rank_mod_p(sub, p) < width:
                witnesses.append(down)
        if witnesses:
            return j, witnesses
    raise InternalInconsistencyError("no dependent block set found")


def block_dependency_threshold(c: Code, budget: int = DEFAULT_BUDGET) -> int:
    return block_dependency_witnesses(c, budget)[0]


def min_ideal_root_size(c: Code) -> int:
    """Smallest root-set size of the generated ideal over nonzero codewords.

    Independent counterpart of `block_dependency_threshold`; the two agree
    for linear codes over a prime modulus.
    """
    if c.size < 2:
        raise ValueError("needs a nonzero codeword")
    sp = c.space
    return min(
        sum(1 for x in sp.weight_counts(w.coords) if x)
        for w in c.codewords
        if any(w.coords)
    )


def ball_code_intersection(c: Code, i, x: Vector) -> int:
    """Exact size of { codewords inside the I-ball centered at x }."""
    return sum(1 for w in c.codewords if in_I_ball(w, x, i))


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts by weight, indexed 0..max_weight."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(x) for x in self.counts))

    def __getitem__(self, r: int) -> int:
        return self.counts[r]

    @property
    def total(self) -> int:
        return sum(self.counts)


def weight_distribution(c: Code) -> WeightDistribution:
    """Exact weight census over the codewords."""
    sp = c.space
    counts = [0] * (sp.max_weight + 1)
    for w in c.codewords:
        counts[sp.coords_weight(w.coords)] += 1
    return WeightDistribution(tuple(counts))


def mds_chain_weight_distribution(
    n: int, k: int, t: int, m: int, s: int, expected_d: int | None = None
) -> WeightDistribution:
    """Closed-form weight distribution of an MDS submodule code on a chain
    of equal block dimensions.

    Parameters are those of a linear (n, m^k, d) code with block size t on
    a chain of s blocks; d is pinned to (n-k)/t * floor(m/2) + 1, the only
    value an MDS code of these parameters can attain.
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if t < 1 or s < 1 or n != s * t:
        raise ValueError(f"need n = s*t, got n={n}, s={s}, t={t}")
    if not 1 <= k <= n:
        raise ValueError(f"dimension k={k} outside 1..{n}")
    if (n - k) % t:
        raise ValueError(f"t={t} must divide n-k={n - k}")
    lh = m // 2
    d = (n - k) // t * lh + 1
    if expected_d is not None and expected_d != d:
        raise ValueError(f"distance {expected_d} inconsistent with MDS value {d}")
    counts = [0] * (s * lh + 1)
    counts[0] = 1
    for r in range(d, s * lh + 1):
        l, p = divmod(r, lh)
        if p == 0:
            counts[r] = (m ** t - (2 * lh - 1) ** t) * m ** (t * l - n + k - t)
        elif p == 1:
            counts[r] = (3 ** t - 1) * m ** (t * l - n + k)
        else:
            counts[r] = ((2 * p + 1) ** t - (2 * p - 1) ** t) * m ** (t * l - n + k)
    if sum(counts) != m ** k:
        raise InternalInconsistencyError("distribution does not sum to m^k")
    return WeightDistribution(tuple(counts))

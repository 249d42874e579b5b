"""Explicit constructions built from closed-form templates.

These builders emit arrays whose properties are theorems of their
parameters, but they never certify themselves: the test suite and the
command line both re-run the brute-force verifier on every output.
"""

from __future__ import annotations

import itertools
from math import prod

import numpy as np

from .core import Array, LevelProfile
from .recursive import split_column

__all__ = [
    "full_factorial",
    "build_oa_sum",
    "build_pdimoa_star_t_plus_1",
    "build_pdimoa_star_general",
    "build_la_2_3",
    "build_la_1_w",
]


def full_factorial(levels: tuple[int, ...], t: int) -> Array:
    """All value combinations, lexicographic row order."""
    rows = list(itertools.product(*[range(v) for v in levels]))
    return Array(LevelProfile(tuple(levels), t), rows)


def build_oa_sum(v: int, t: int) -> Array:
    """Index-1 orthogonal array on t+1 columns over Z_v.

    Rows are all t-tuples with a final column holding their sum mod v; works
    for every v >= 2 without prime-power machinery.
    """
    if v < 2:
        raise ValueError(f"alphabet size v={v} must be >= 2")
    if t < 2:
        raise ValueError(f"strength t={t} must be >= 2")
    rows = [
        row + (sum(row) % v,)
        for row in itertools.product(range(v), repeat=t)
    ]
    return Array(LevelProfile((v,) * (t + 1), t), rows)


def build_pdimoa_star_t_plus_1(levels: tuple[int, ...]) -> Array:
    """Distinct-index orthogonal array on t+1 columns, one index equal to 1.

    Exists if and only if the smallest level divides all the others (levels
    strictly increasing). Built as the full factorial over the quotient
    alphabets, paired entrywise with the modular-sum orthogonal array on the
    smallest level.
    """
    levels = tuple(int(v) for v in levels)
    k = len(levels)
    t = k - 1
    if t < 2:
        raise ValueError("need at least 3 levels (strength t = k - 1 >= 2)")
    if any(x >= y for x, y in zip(levels, levels[1:])):
        raise ValueError(f"levels must be strictly increasing, got {levels}")
    v1 = levels[0]
    if v1 < 2:
        raise ValueError(f"smallest level {v1} must be >= 2")
    for v in levels[1:]:
        if v % v1 != 0:
            raise ValueError(
                f"level {v} is not divisible by the smallest level {v1};"
                " no such array exists"
            )
    ratios = [v // v1 for v in levels[1:]]
    oa = build_oa_sum(v1, t).values
    rows = []
    for quotient in itertools.product(*[range(r) for r in ratios]):
        # leading helper coordinate is the constant 0 (a width-1 column)
        helper = (0,) + quotient
        for oa_row in oa:
            rows.append(
                tuple(h * v1 + int(z) for h, z in zip(helper, oa_row))
            )
    return Array(LevelProfile(levels, t), rows)


def build_pdimoa_star_general(levels: tuple[int, ...], t: int) -> Array:
    """Distinct-index orthogonal array on k columns with one index 1.

    Requires strictly increasing levels where each of the top t is a
    multiple (by pairwise-distinct factors >= 2) of the product M of the
    bottom k-t. Builds the (t+1)-column instance on (M, top levels) and
    splits the first column back into the bottom k-t.
    """
    levels = tuple(int(v) for v in levels)
    k = len(levels)
    if not 2 <= t < k:
        raise ValueError(f"need 2 <= t < k, got t={t}, k={k}")
    if any(x >= y for x, y in zip(levels, levels[1:])):
        raise ValueError(f"levels must be strictly increasing, got {levels}")
    m = prod(levels[: k - t])
    for v in levels[k - t:]:
        if v % m != 0 or v // m < 2:
            raise ValueError(
                f"level {v} must be a multiple >= 2*{m} of the bottom-level"
                f" product {m}"
            )
    if k - t == 1:
        return build_pdimoa_star_t_plus_1(levels)
    base = build_pdimoa_star_t_plus_1((m,) + levels[k - t:])
    return split_column(base, 1, levels[: k - t])


def build_la_2_3(v1: int, v2: int, v3: int) -> Array:
    """Optimal strength-2 locating array on 3 columns, v2*v3 rows.

    Column templates for 0-based row r: column 2 runs blocks floor(r / v3),
    column 3 cycles r mod v3, and column 1 holds (r mod v3 + r div v3) mod
    v1, which shifts by one inside each block. Requires v2 >= 2*v1.
    """
    if v1 < 2:
        raise ValueError(f"v1={v1} must be >= 2")
    if not v1 <= v2 <= v3:
        raise ValueError(f"levels must be nondecreasing, got ({v1},{v2},{v3})")
    if v2 < 2 * v1:
        raise ValueError(f"v2={v2} must be at least 2*v1={2 * v1}")
    r = np.arange(v2 * v3, dtype=np.int64)
    values = np.column_stack([(r % v3 + r // v3) % v1, r // v3, r % v3])
    return Array(LevelProfile((v1, v2, v3), 2), values)


def build_la_1_w(w: int, v: int) -> Array:
    """Optimal strength-1 locating array on w+1 columns and v rows.

    First w rows are constant; the next w pair each cyclic-Latin-square row
    with a fresh last-column symbol; any remaining last-column symbols ride
    on all-zero rows (an arbitrary choice fixed for determinism). Requires
    2 <= w < v and v >= 2w.
    """
    if w < 2:
        raise ValueError(f"w={w} must be >= 2")
    if not w < v:
        raise ValueError(f"need w < v, got w={w}, v={v}")
    if v < 2 * w:
        raise ValueError(f"v={v} must be at least 2w={2 * w}")
    rows = [[i] * w + [i] for i in range(w)]
    for j in range(w):
        rows.append([(j + c) % w for c in range(w)] + [w + j])
    for y in range(2 * w, v):
        rows.append([0] * w + [y])
    return Array(LevelProfile((w,) * w + (v,), 1), rows)

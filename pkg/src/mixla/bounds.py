"""Exact lower bounds on the size of single-fault locating arrays.

For a canonical profile (v_1 <= ... <= v_k, strength t < k) the bound splits
on how the two pivotal levels v_{k-t} and v_{k-t+1} compare:

* CASE1: v_{k-t+1} >= 2 v_{k-t}. Bound is the covering floor, the product of
  the top t levels.
* CASE2: v_{k-t} == v_{k-t+1}. For each i with v_i = ... = v_{k-t+1}, counting
  once-covered tuples over the last k-i+1 columns gives
  ceil(2 * S_i / (1 + C(k-i+1, t))) where S_i sums the t-subset level
  products of columns i..k; the best valid i wins.
* CASE3 (t >= 2): v_{k-t} < v_{k-t+1} < 2 v_{k-t}. Bound is
  max(ceil(2 * S / (t + 2)), P + P') with S summing the t-subset products of
  the last t+1 columns, P the product of the top t levels and P' of the top
  t-1.
* CASE4 (t == 1): same level window; bound is ceil((2 v_{k-1} + 2 v_k) / 3).

The covering floor holds unconditionally, so every case is folded with it
via max(); when the floor strictly wins the result is tagged MCA_FLOOR.
All arithmetic is exact integer arithmetic: these values are certificates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod

from .core import LevelProfile

__all__ = ["BoundResult", "lower_bound", "bound_case"]

CASE1 = "CASE1"
CASE2 = "CASE2"
CASE3 = "CASE3"
CASE4 = "CASE4"
MCA_FLOOR = "MCA_FLOOR"


@dataclass(frozen=True)
class BoundResult:
    """A proven lower bound with the case that produced it.

    ``witness_i`` is the column index i that maximized the CASE2 formula;
    None for the other cases.
    """

    value: int
    case: str
    witness_i: int | None = None

    def render(self) -> str:
        line = f"BOUND {self.value} case={self.case}"
        if self.witness_i is not None:
            line += f" i={self.witness_i}"
        return line


def _ceil_div(num: int, den: int) -> int:
    return -(-num // den)


def _subset_product_sum(levels: tuple[int, ...], t: int) -> int:
    return sum(prod(c) for c in itertools.combinations(levels, t))


def _validate(profile: LevelProfile) -> None:
    if not profile.is_sorted:
        raise ValueError(
            f"bounds require the canonical nondecreasing level order,"
            f" got {profile.levels}"
        )
    if any(v < 2 for v in profile.levels):
        raise ValueError(f"factor levels must be >= 2, got {profile.levels}")
    if profile.t >= profile.k:
        raise ValueError(
            f"bounds require t < k, got t={profile.t}, k={profile.k}"
        )


def lower_bound(profile: LevelProfile) -> BoundResult:
    """Smallest possible size of a locating array with this profile."""
    _validate(profile)
    levels, t, k = profile.levels, profile.t, profile.k
    floor = prod(levels[k - t:])
    low, high = levels[k - t - 1], levels[k - t]

    if high >= 2 * low:
        return BoundResult(floor, CASE1)

    if low == high:
        best, best_i = -1, None
        for i in range(1, k - t + 1):  # 1-based, v_i = ... = v_{k-t+1} required
            if levels[i - 1] != high:
                continue
            s = _subset_product_sum(levels[i - 1:], t)
            val = _ceil_div(2 * s, 1 + comb(k - i + 1, t))
            if val > best:
                best, best_i = val, i
        if floor > best:
            return BoundResult(floor, MCA_FLOOR)
        return BoundResult(best, CASE2, best_i)

    # low < high < 2 * low
    if t >= 2:
        s = _subset_product_sum(levels[k - t - 1:], t)
        val = max(_ceil_div(2 * s, t + 2), floor + prod(levels[k - t + 1:]))
        return BoundResult(val, CASE3)
    val = _ceil_div(2 * levels[k - 2] + 2 * levels[k - 1], 3)
    if floor > val:
        return BoundResult(floor, MCA_FLOOR)
    return BoundResult(val, CASE4)


def bound_case(profile: LevelProfile) -> str:
    """The case tag ``lower_bound`` selects for this profile."""
    return lower_bound(profile).case

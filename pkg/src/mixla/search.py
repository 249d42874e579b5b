"""Seeded simulated annealing for locating arrays of a prescribed size.

The objective mirrors the two halves of the locating property: the number of
uncovered interactions plus the number of interaction pairs sharing a row
set. Zero cost is therefore exactly the certificate condition, and every
success is re-verified before being returned.

A run is driven entirely by its seed: identical (profile, params) give an
identical move sequence, transcript, and result, provided the wall-clock
budget does not cut the run short (the budget is a safety net, not a
deterministic control; use max_iterations for that).
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass
from math import prod

from .bounds import lower_bound
from .core import Array, LevelProfile
from .verifier import is_locating

__all__ = ["SearchParams", "Cost", "cost", "anneal"]

_RESTART_FLOOR = 1e-3
_LOG_EVERY = 1000


@dataclass(frozen=True)
class SearchParams:
    """Knobs for one annealing chain."""

    n_rows: int
    seed: int = 0
    max_iterations: int = 2_000_000
    initial_temperature: float = 3.0
    cooling: float = 0.9997
    time_budget_s: float = 120.0

    def __post_init__(self):
        if self.n_rows < 1:
            raise ValueError(f"target size {self.n_rows} must be >= 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.initial_temperature <= 0:
            raise ValueError("initial temperature must be positive")
        if not 0 < self.cooling < 1:
            raise ValueError(
                f"cooling ratio {self.cooling} must lie in (0, 1)"
            )
        if self.time_budget_s <= 0:
            raise ValueError("time budget must be positive")


@dataclass(frozen=True)
class Cost:
    """Objective split: uncovered interactions and equal-row-set pairs.

    ``collisions`` counts unordered pairs of distinct interactions with
    identical row sets, jointly-uncovered pairs included. Zero total is
    equivalent to the (single-fault, barred) locating property.
    """

    uncovered: int
    collisions: int

    @property
    def total(self) -> int:
        return self.uncovered + self.collisions


def cost(a: Array, t: int) -> Cost:
    """Exact objective by full recomputation."""
    state = _AnnealState(a.levels, t, a.n_rows, [list(r) for r in a.values])
    return Cost(state.uncovered, state.collisions)


class _AnnealState:
    """Incremental objective bookkeeping.

    Row sets are bit masks over rows; a dict from mask to the number of
    interactions carrying it yields the collision count as the sum of
    C(count, 2). A single-cell move touches only the interactions that
    involve the changed column on the changed row: one t-subset at a time,
    the old tuple loses the row and the new tuple gains it.
    """

    def __init__(self, levels, t, n_rows, values=None):
        import itertools

        self.levels = tuple(levels)
        self.k = len(self.levels)
        self.t = t
        self.n = n_rows
        if values is None:
            values = [
                [r % self.levels[c] for c in range(self.k)]
                for r in range(n_rows)
            ]
        self.values = values

        subsets = list(itertools.combinations(range(self.k), t))
        self.plans: list[list] = [[] for _ in range(self.k)]
        offset = 0
        offsets = []
        for cols in subsets:
            sub_levels = [self.levels[c] for c in cols]
            strides = [1] * t
            for i in range(t - 2, -1, -1):
                strides[i] = strides[i + 1] * sub_levels[i + 1]
            offsets.append((cols, strides, offset))
            for pos, c in enumerate(cols):
                others = [
                    (cc, strides[ii]) for ii, cc in enumerate(cols) if ii != pos
                ]
                self.plans[c].append((offset, strides[pos], others))
            offset += prod(sub_levels)

        self.masks = [0] * offset
        for r, row in enumerate(self.values):
            bit = 1 << r
            for cols, strides, off in offsets:
                key = sum(row[c] * s for c, s in zip(cols, strides))
                self.masks[off + key] |= bit

        self.group: dict[int, int] = {}
        self.collisions = 0
        for m in self.masks:
            cnt = self.group.get(m, 0)
            self.collisions += cnt
            self.group[m] = cnt + 1

    @property
    def uncovered(self) -> int:
        return self.group.get(0, 0)

    @property
    def total(self) -> int:
        return self.group.get(0, 0) + self.collisions

    def _retag(self, idx: int, new_mask: int) -> None:
        old = self.masks[idx]
        cnt = self.group[old]
        self.collisions -= cnt - 1
        if cnt == 1:
            del self.group[old]
        else:
            self.group[old] = cnt - 1
        cnt = self.group.get(new_mask, 0)
        self.collisions += cnt
        self.group[new_mask] = cnt + 1
        self.masks[idx] = new_mask

    def apply_move(self, r: int, c: int, y: int) -> None:
        row = self.values[r]
        x = row[c]
        bit = 1 << r
        for off, stride, others in self.plans[c]:
            rest = off + sum(row[cc] * s for cc, s in others)
            idx_old = rest + x * stride
            idx_new = rest + y * stride
            self._retag(idx_old, self.masks[idx_old] & ~bit)
            self._retag(idx_new, self.masks[idx_new] | bit)
        row[c] = y

    def snapshot(self) -> list[list[int]]:
        return [row[:] for row in self.values]


def anneal(
    profile: LevelProfile,
    params: SearchParams,
    *,
    log=None,
) -> Array | None:
    """Search for a zero-cost array of ``params.n_rows`` rows.

    Refuses targets below the proven lower bound. Returns the verified
    array on success, None when the iteration or time budget runs out;
    never a false positive.
    """
    t = profile.t
    if any(v < 2 for v in profile.levels):
        raise ValueError(f"factor levels must be >= 2, got {profile.levels}")
    bound = lower_bound(LevelProfile(tuple(sorted(profile.levels)), t))
    if params.n_rows < bound.value:
        raise ValueError(
            f"target size {params.n_rows} is below the proven lower bound"
            f" {bound.value} for levels {profile.levels} at strength {t}"
        )

    rng = random.Random(params.seed)
    state = _AnnealState(profile.levels, t, params.n_rows)
    best_cost = state.total
    best_vals = state.snapshot()
    temperature = params.initial_temperature
    start = time.monotonic()
    iteration = 0

    def emit():
        if log is not None:
            log.write(
                json.dumps(
                    {
                        "iteration": iteration,
                        "temperature": round(temperature, 9),
                        "cost": state.total,
                    }
                )
                + "\n"
            )

    while state.total > 0 and iteration < params.max_iterations:
        if iteration % 2048 == 0:
            if time.monotonic() - start > params.time_budget_s:
                break
        iteration += 1
        r = rng.randrange(state.n)
        c = rng.randrange(state.k)
        y = rng.randrange(state.levels[c] - 1)
        x = state.values[r][c]
        if y >= x:
            y += 1
        before = state.total
        state.apply_move(r, c, y)
        delta = state.total - before
        if delta <= 0 or rng.random() < math.exp(-delta / temperature):
            if state.total < best_cost:
                best_cost = state.total
                best_vals = state.snapshot()
        else:
            state.apply_move(r, c, x)
        temperature *= params.cooling
        if temperature < _RESTART_FLOOR and state.total > 0:
            temperature = params.initial_temperature
            state = _AnnealState(
                profile.levels, t, params.n_rows, [row[:] for row in best_vals]
            )
        if iteration % _LOG_EVERY == 0:
            emit()

    emit()
    if state.total != 0:
        return None
    found = Array(LevelProfile(profile.levels, t), state.values)
    report = is_locating(found, t, 1, barred=True)
    if not report.verdict:  # the objective and the verifier must agree
        raise RuntimeError(
            "zero-cost array failed re-verification; this is a bug\n"
            + report.render()
        )
    return found

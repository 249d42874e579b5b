"""Array-to-array constructions: truncation, derivation, products, column
splitting, level doubling, fusion, and the two constant-block stacking
("Roux-type") constructions.

Every operation's guarantee is conditional on its inputs, so preconditions
are verified by calling the verifier rather than trusting the caller; pass
``unchecked=True`` to skip that (the output is then uncertified). The two
orthogonal-array operations also verify their own output, because index
products can collide even on valid inputs.

Paired symbols produced by the product constructions are encoded row-major:
the pair (x, y) over alphabets (v, s) becomes the integer x * s + y, keeping
every array integer-valued and serializable.
"""

from __future__ import annotations

from math import ceil, prod

import numpy as np

from .core import Array, LevelProfile, PreconditionError
from .verifier import (
    VerificationReport,
    is_detecting,
    is_locating,
    is_mca,
    is_pdimoa_star,
)

__all__ = [
    "truncate",
    "derive",
    "product",
    "split_column",
    "pdimoa_product",
    "expand_level",
    "fuse",
    "roux_one",
    "roux_two",
]


def _demand(report: VerificationReport, what: str) -> None:
    if not report.verdict:
        raise PreconditionError(
            f"{what}: verification failed\n{report.render()}", report
        )


def _check_col(a: Array, col: int) -> None:
    if not 1 <= col <= a.k:
        raise ValueError(f"column {col} out of range 1..{a.k}")


def truncate(a: Array, col: int, *, unchecked: bool = False) -> Array:
    """Drop one column of a locating array; the rest stays locating.

    Allowed down to k-1 == t: with all columns involved in each interaction
    the property is still well defined.
    """
    _check_col(a, col)
    if a.k - 1 < a.t:
        raise ValueError(
            f"cannot truncate: {a.k - 1} columns would not support"
            f" strength {a.t}"
        )
    if not unchecked:
        _demand(is_locating(a, a.t, 1, barred=True), "truncate input")
    values = np.delete(a.values, col - 1, axis=1)
    return Array(a.profile.without_column(col), values)


def derive(a: Array, col: int, symbol: int, *, unchecked: bool = False) -> Array:
    """Restrict to the rows holding ``symbol`` in ``col`` and drop the column.

    Sends a strength-t locating array to a strength-(t-1) one.
    """
    _check_col(a, col)
    if a.t < 2:
        raise ValueError("derivation needs strength t >= 2")
    if not 0 <= symbol < a.levels[col - 1]:
        raise ValueError(
            f"symbol {symbol} out of range for column {col}"
            f" (alphabet size {a.levels[col - 1]})"
        )
    if not unchecked:
        _demand(is_locating(a, a.t, 1, barred=True), "derive input")
    keep = a.values[:, col - 1] == symbol
    values = np.delete(a.values[keep], col - 1, axis=1)
    return Array(a.profile.without_column(col, t=a.t - 1), values)


def product(a: Array, b: Array, *, unchecked: bool = False) -> Array:
    """Weighting product of a locating array with a covering array.

    All row pairs, columnwise paired symbols; columns multiply their
    alphabet sizes and the result is locating at the same strength.
    """
    if a.k != b.k:
        raise ValueError(f"column counts differ: {a.k} vs {b.k}")
    if a.t != b.t:
        raise ValueError(f"strengths differ: {a.t} vs {b.t}")
    if not unchecked:
        _demand(is_locating(a, a.t, 1, barred=True), "product left input")
        _demand(is_mca(b, b.t, 1), "product right input")
    return _pairing_product(a, b)


def _pairing_product(a: Array, b: Array) -> Array:
    s = np.asarray(b.levels, dtype=np.int64)
    combined = a.values[:, None, :] * s + b.values[None, :, :]
    values = combined.reshape(a.n_rows * b.n_rows, a.k)
    levels = tuple(va * vb for va, vb in zip(a.levels, b.levels))
    return Array(LevelProfile(levels, a.t), values)


def split_column(
    a: Array, col: int, factors: tuple[int, ...], *, unchecked: bool = False
) -> Array:
    """Replace one column of alphabet r1*...*rm by m columns via the
    mixed-radix bijection, preserving the distinct-index orthogonal property.
    """
    _check_col(a, col)
    factors = tuple(int(r) for r in factors)
    if any(b <= s for s, b in zip(factors, factors[1:])) or not factors:
        raise ValueError(f"factors must be strictly increasing, got {factors}")
    if prod(factors) != a.levels[col - 1]:
        raise ValueError(
            f"factors {factors} multiply to {prod(factors)},"
            f" column {col} has alphabet size {a.levels[col - 1]}"
        )
    levels = (
        a.levels[: col - 1] + factors + a.levels[col:]
    )
    if any(x >= y for x, y in zip(levels, levels[1:])):
        raise ValueError(
            f"split would leave the profile {levels} not strictly increasing"
        )
    if not unchecked:
        _demand(is_pdimoa_star(a, a.t), "split input")
    digits = []
    rest = a.values[:, col - 1].copy()
    for r in reversed(factors):
        digits.append(rest % r)
        rest //= r
    digits.reverse()
    values = np.column_stack(
        [a.values[:, : col - 1], *digits, a.values[:, col:]]
    )
    # The output keeps orthogonality but its indices are forced to
    # N / (subset level product); when two subsets of the new profile have
    # equal products the distinct-index property is unattainable, so the
    # caller's verifier pass is the arbiter, not this function.
    return Array(LevelProfile(levels, a.t), values)


def pdimoa_product(a: Array, b: Array, *, unchecked: bool = False) -> Array:
    """Row-pair product of two distinct-index orthogonal arrays.

    ``b`` may instead be an index-1 orthogonal array. Indices multiply
    columnwise-subset by subset; since products of distinct indices can
    still collide, the output is verified and the operation rejects when
    the distinct-index property is lost.
    """
    if a.k != b.k:
        raise ValueError(f"column counts differ: {a.k} vs {b.k}")
    if a.t != b.t:
        raise ValueError(f"strengths differ: {a.t} vs {b.t}")
    if not unchecked:
        left = is_pdimoa_star(a, a.t)
        _demand(left, "pdimoa-product left input")
        right = is_pdimoa_star(b, b.t)
        if not right.verdict:
            right_oa = _is_index_one_moa(b)
            if not right_oa.verdict:
                _demand(right, "pdimoa-product right input")
    out = _pairing_product(a, b)
    if not unchecked:
        _demand(is_pdimoa_star(out, out.t), "pdimoa-product output")
    return out


def _is_index_one_moa(b: Array) -> VerificationReport:
    from .verifier import NotAnMoaError, moa_indices

    try:
        profile = moa_indices(b, b.t)
    except NotAnMoaError as e:
        return VerificationReport("moa", False, e.witness)
    ok = all(lam == 1 for lam in profile.lambdas)
    return VerificationReport("moa", ok)


def expand_level(
    a: Array, col: int, new_size: int, *, unchecked: bool = False
) -> Array:
    """Grow one column's alphabet to ``new_size`` (at most doubled) by
    stacking the array on a copy whose symbols 0..new_size-v-1 in that
    column are relabeled to v..new_size-1."""
    _check_col(a, col)
    v = a.levels[col - 1]
    if not v < new_size <= 2 * v:
        raise ValueError(
            f"new size {new_size} must lie in ({v}, {2 * v}] for column {col}"
        )
    if not unchecked:
        _demand(is_locating(a, a.t, 1, barred=True), "expand input")
    shift = new_size - v
    copy = a.values.copy()
    colvals = copy[:, col - 1]
    copy[:, col - 1] = np.where(colvals < shift, colvals + v, colvals)
    values = np.vstack([a.values, copy])
    levels = a.levels[: col - 1] + (new_size,) + a.levels[col:]
    return Array(LevelProfile(levels, a.t), values)


def fuse(
    a: Array, col: int, target_size: int, *, unchecked: bool = False
) -> Array:
    """Merge one column's symbols into ``target_size`` groups.

    Needs a uniform alphabet, a detecting array for one fault, and a
    locating array for up to ceil(v / target_size) faults; the group sizes
    are as equal as possible with the single largest group first.
    """
    _check_col(a, col)
    levels = set(a.levels)
    if len(levels) != 1:
        raise ValueError(f"fusion needs a uniform alphabet, got {a.levels}")
    v = a.levels[0]
    if a.t < 2:
        raise ValueError("fusion needs strength t >= 2")
    if not 2 <= target_size < v:
        raise ValueError(
            f"target size {target_size} must lie in [2, {v - 1}]"
        )
    d = ceil(v / target_size)
    if not unchecked:
        _demand(is_detecting(a, a.t, 1), "fuse input (detecting, d=1)")
        _demand(
            is_locating(a, a.t, d, barred=True),
            f"fuse input (locating, d={d})",
        )
    base, rem = divmod(v, target_size)
    sizes = [base + 1] * rem + [base] * (target_size - rem)
    lookup = np.repeat(np.arange(target_size, dtype=np.int64), sizes)
    values = a.values.copy()
    values[:, col - 1] = lookup[values[:, col - 1]]
    new_levels = a.levels[: col - 1] + (target_size,) + a.levels[col:]
    return Array(LevelProfile(new_levels, a.t), values)


def _match_minus(a: Array, b: Array, col: int, what: str, dt: int) -> None:
    want = a.profile.without_column(col).levels
    if b.levels != want:
        raise ValueError(
            f"{what}: expected levels {want}"
            f" (input levels minus column {col}), got {b.levels}"
        )
    if b.t != a.t - dt:
        raise ValueError(
            f"{what}: expected strength {a.t - dt}, got {b.t}"
        )


def roux_one(a: Array, b: Array, col: int, e: int, *, unchecked: bool = False) -> Array:
    """Grow column ``col`` by ``e`` fresh symbols: stack ``a`` with e copies
    of the lower-strength array ``b``, copy j carrying the constant v+j in an
    inserted column at that position."""
    _check_col(a, col)
    if e < 0:
        raise ValueError(f"e must be >= 0, got {e}")
    if a.t < 2:
        raise ValueError("needs strength t >= 2 (the side array has t-1)")
    _match_minus(a, b, col, "side array", 1)
    if not unchecked:
        _demand(is_locating(a, a.t, 1, barred=True), "main input")
        _demand(is_locating(b, b.t, 1, barred=True), "side input")
    if e == 0:
        return a
    v = a.levels[col - 1]
    parts = [a.values]
    for j in range(v, v + e):
        parts.append(np.insert(b.values, col - 1, j, axis=1))
    levels = a.levels[: col - 1] + (v + e,) + a.levels[col:]
    return Array(LevelProfile(levels, a.t), np.vstack(parts))


def roux_two(
    a: Array,
    b: Array,
    c: Array,
    d: Array,
    i: int,
    j: int,
    p: int,
    q: int,
    *,
    unchecked: bool = False,
) -> Array:
    """Grow columns ``i`` and ``j`` at once by p and q fresh symbols.

    Stacks four blocks: a; p constant-extended copies of b (strength t-1,
    missing column i); q copies of c (missing column j); and p*q copies of d
    (strength t-2, missing both). Restricted to t >= 3, where the innermost
    block still has positive strength.
    """
    _check_col(a, i)
    _check_col(a, j)
    if not i < j:
        raise ValueError(f"need i < j, got i={i}, j={j}")
    if p < 0 or q < 0:
        raise ValueError(f"p and q must be >= 0, got p={p}, q={q}")
    if a.t < 3:
        raise ValueError(
            "needs strength t >= 3: the doubly-reduced array has t-2"
        )
    _match_minus(a, b, i, "first side array", 1)
    _match_minus(a, c, j, "second side array", 1)
    want_d = (
        a.levels[: i - 1] + a.levels[i : j - 1] + a.levels[j :]
    )
    if d.levels != want_d or d.t != a.t - 2:
        raise ValueError(
            f"corner array: expected levels {want_d} at strength {a.t - 2},"
            f" got {d.levels} at strength {d.t}"
        )
    if not unchecked:
        _demand(is_locating(a, a.t, 1, barred=True), "main input")
        _demand(is_locating(b, b.t, 1, barred=True), "first side input")
        _demand(is_locating(c, c.t, 1, barred=True), "second side input")
        _demand(is_locating(d, d.t, 1, barred=True), "corner input")
    if p == 0 and q == 0:
        return a
    vi, vj = a.levels[i - 1], a.levels[j - 1]
    parts = [a.values]
    for x in range(vi, vi + p):
        parts.append(np.insert(b.values, i - 1, x, axis=1))
    for y in range(vj, vj + q):
        parts.append(np.insert(c.values, j - 1, y, axis=1))
    for x in range(vi, vi + p):
        for y in range(vj, vj + q):
            block = np.insert(d.values, i - 1, x, axis=1)
            parts.append(np.insert(block, j - 1, y, axis=1))
    levels = list(a.levels)
    levels[i - 1] = vi + p
    levels[j - 1] = vj + q
    return Array(LevelProfile(tuple(levels), a.t), np.vstack(parts))

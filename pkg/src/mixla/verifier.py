"""Brute-force decision procedures for every array property the toolkit uses:
row sets, coverage, locating, detecting, and orthogonality.

Everything here works from first principles: interactions are enumerated
exhaustively and row sets compared exactly, so a verdict can certify the
output of any construction. The constructions never certify themselves.

Enumeration order is fixed and documented: column subsets in lexicographic
order, value tuples in lexicographic order inside a subset. False verdicts
carry the first violation in that order as their witness, regardless of the
worker count, so reports are byte-stable.

Equal row sets are detected by hashing each set's canonical form into a map
from row set to the first interaction that produced it; a hit by a different
interaction is the counterexample. That is O(#interactions) instead of the
quadratic pair scan. Instances beyond the size caps (10^6 interactions for
single-interaction checks, 10^7 set pairs otherwise) are refused unless
``force=True``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .core import Array, Interaction, LevelProfile, RowSet, SizeCapError

__all__ = [
    "CAP_INTERACTIONS",
    "CAP_PAIRS",
    "Witness",
    "VerificationReport",
    "IndexProfile",
    "NotAnMoaError",
    "rho",
    "rho_set",
    "enumerate_interactions",
    "interaction_count",
    "iter_rho",
    "is_mca",
    "is_locating",
    "is_detecting",
    "moa_indices",
    "is_pdimoa",
    "is_pdimoa_star",
    "is_mca2_star",
]

CAP_INTERACTIONS = 10**6
CAP_PAIRS = 10**7


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Witness:
    """Counterexample attached to a false verdict.

    ``kind`` is one of:

    * ``collision``   -- set1 and set2 are interaction sets with equal row sets
      (set2 empty means the empty set of interactions);
    * ``uncovered``   -- set1 holds one interaction covered fewer than the
      required number of times;
    * ``containment`` -- rho(set1) is contained in rho(set2) (detecting);
    * ``nonuniform``  -- set1/set2 are two tuples of one column subset with
      different row counts (orthogonality);
    * ``index-clash`` -- set1/set2 are tuples from two column subsets whose
      indices coincide;
    * ``count``       -- set1 has the wrong exact row count.
    """

    kind: str
    set1: tuple[Interaction, ...]
    set2: tuple[Interaction, ...] = ()
    rows: RowSet = ()
    rows2: RowSet | None = None

    def render(self) -> str:
        line = (
            f"WITNESS T1={_render_iset(self.set1)}"
            f" T2={_render_iset(self.set2)}"
            f" rho={_render_rows(self.rows)}"
        )
        if self.rows2 is not None:
            line += f" rho2={_render_rows(self.rows2)}"
        return line


def _render_iset(s: tuple[Interaction, ...]) -> str:
    return "|".join(t.render() for t in s) if s else "-"


def _render_rows(rows: RowSet) -> str:
    return ",".join(str(r) for r in rows) if rows else "-"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one property check: verdict, optional witness, work done."""

    prop: str
    verdict: bool
    witness: Witness | None = None
    checked: int = 0
    notes: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.verdict

    def render(self) -> str:
        lines = [f"VERDICT {self.prop} {'true' if self.verdict else 'false'}"]
        if self.witness is not None:
            lines.append(self.witness.render())
        for note in self.notes:
            lines.append(f"NOTE {note}")
        return "\n".join(lines)


@dataclass(frozen=True)
class IndexProfile:
    """Per-column-subset indices of an orthogonal array.

    ``entries`` pairs each t-subset of 1-based columns (lexicographic order)
    with its index: the exact number of rows containing each tuple over that
    subset.
    """

    entries: tuple[tuple[tuple[int, ...], int], ...]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.entries)

    @property
    def lambdas(self) -> tuple[int, ...]:
        return tuple(lam for _, lam in self.entries)

    def __getitem__(self, cols: tuple[int, ...]) -> int:
        return self.as_dict()[tuple(sorted(cols))]


class NotAnMoaError(ValueError):
    """The array is not an orthogonal array; carries the nonuniform witness."""

    def __init__(self, message: str, witness: Witness):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# row sets and enumeration


def rho(a: Array, interaction: Interaction) -> RowSet:
    """1-based rows of ``a`` containing ``interaction``.

    The empty interaction yields the empty set (a union over nothing), which
    is what makes the empty interaction set participate in the barred
    locating check.
    """
    interaction.validate_for(a.profile)
    if not interaction.pairs:
        return ()
    mask = np.ones(a.n_rows, dtype=bool)
    for c, v in interaction.pairs:
        mask &= a.values[:, c - 1] == v
    return tuple(int(r) + 1 for r in np.flatnonzero(mask))


def rho_set(a: Array, interactions: Iterable[Interaction]) -> RowSet:
    """Union of ``rho`` over a set of interactions."""
    rows: set[int] = set()
    for t in interactions:
        rows.update(rho(a, t))
    return tuple(sorted(rows))


def interaction_count(profile: LevelProfile, t: int) -> int:
    """Number of t-way interactions: sum over t-subsets of level products."""
    if not 1 <= t <= profile.k:
        raise ValueError(f"strength t={t} out of range 1..{profile.k}")
    return sum(
        prod(c) for c in itertools.combinations(profile.levels, t)
    )


def enumerate_interactions(
    profile: LevelProfile, t: int
) -> Iterator[Interaction]:
    """All t-way interactions, each exactly once, in enumeration order."""
    if not 1 <= t <= profile.k:
        raise ValueError(f"strength t={t} out of range 1..{profile.k}")
    for cols in itertools.combinations(range(1, profile.k + 1), t):
        ranges = [range(profile.levels[c - 1]) for c in cols]
        for vals in itertools.product(*ranges):
            yield Interaction(tuple(zip(cols, vals)))


# ---------------------------------------------------------------------------
# per-subset scans


class _SubsetScan(NamedTuple):
    cols: tuple[int, ...]  # 0-based column indices
    levels: tuple[int, ...]
    size: int  # number of interactions on this subset
    counts: np.ndarray  # rows per value tuple, indexed by key
    present: np.ndarray  # keys with at least one row, ascending
    groups: list[np.ndarray]  # 0-based rows per present key, ascending


def _strides(levels: tuple[int, ...]) -> tuple[int, ...]:
    # mixed radix, first column most significant: ascending key ==
    # lexicographically ascending value tuple
    out = [1] * len(levels)
    for i in range(len(levels) - 2, -1, -1):
        out[i] = out[i + 1] * levels[i + 1]
    return tuple(out)


def _decode_key(key: int, levels: tuple[int, ...]) -> tuple[int, ...]:
    vals = []
    for s in _strides(levels):
        vals.append(key // s)
        key %= s
    return tuple(vals)


def _interaction_at(cols: tuple[int, ...], levels: tuple[int, ...], key: int) -> Interaction:
    vals = _decode_key(key, levels)
    return Interaction(tuple((c + 1, v) for c, v in zip(cols, vals)))


def _scan_one(values: np.ndarray, levels: tuple[int, ...], cols: tuple[int, ...]) -> _SubsetScan:
    sub_levels = tuple(levels[c] for c in cols)
    size = prod(sub_levels)
    strides = np.asarray(_strides(sub_levels), dtype=np.int64)
    keys = values[:, list(cols)] @ strides
    counts = np.bincount(keys, minlength=size)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    cut = np.flatnonzero(np.diff(sorted_keys)) + 1
    groups = np.split(order, cut)
    present = sorted_keys[np.concatenate(([0], cut))]
    return _SubsetScan(cols, sub_levels, size, counts, present, groups)


def _iter_scans(a: Array, t: int, threads: int = 1) -> Iterator[_SubsetScan]:
    """Scans for every t-subset of columns, in lexicographic subset order.

    Workers only parallelize the per-subset grouping; results are merged in
    subset order, so downstream verdicts do not depend on scheduling.
    """
    subsets = list(itertools.combinations(range(a.k), t))
    if threads <= 1:
        for cols in subsets:
            yield _scan_one(a.values, a.levels, cols)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(
            lambda cols: _scan_one(a.values, a.levels, cols), subsets
        )


def iter_rho(a: Array, t: int) -> Iterator[tuple[Interaction, RowSet]]:
    """(interaction, row set) for every t-way interaction, enumeration order."""
    for scan in _iter_scans(a, t):
        by_key = dict(zip(scan.present.tolist(), scan.groups))
        for key in range(scan.size):
            rows = by_key.get(key)
            rowset = (
                () if rows is None else tuple(int(r) + 1 for r in rows)
            )
            yield _interaction_at(scan.cols, scan.levels, key), rowset


def _check_interaction_cap(n: int, force: bool) -> None:
    if n > CAP_INTERACTIONS and not force:
        raise SizeCapError(
            f"{n} interactions exceeds the cap of {CAP_INTERACTIONS};"
            " pass force=True to verify anyway"
        )


def _check_pair_cap(pairs: int, force: bool) -> None:
    if pairs > CAP_PAIRS and not force:
        raise SizeCapError(
            f"{pairs} interaction-set pairs exceeds the cap of {CAP_PAIRS};"
            " pass force=True to verify anyway"
        )


def _validate_strength(a: Array, t: int) -> None:
    if not 1 <= t <= a.k:
        raise ValueError(f"strength t={t} out of range 1..{a.k}")


# ---------------------------------------------------------------------------
# coverage


def is_mca(
    a: Array,
    t: int,
    lam: int = 1,
    *,
    force: bool = False,
    threads: int = 1,
) -> VerificationReport:
    """Mixed covering array check: every t-way interaction in >= lam rows."""
    _validate_strength(a, t)
    if lam < 1:
        raise ValueError(f"index lambda={lam} must be >= 1")
    _check_interaction_cap(interaction_count(a.profile, t), force)
    checked = 0
    for scan in _iter_scans(a, t, threads):
        short = np.flatnonzero(scan.counts < lam)
        if short.size:
            key = int(short[0])
            interaction = _interaction_at(scan.cols, scan.levels, key)
            return VerificationReport(
                "mca",
                False,
                Witness("uncovered", (interaction,), rows=rho(a, interaction)),
                checked + key + 1,
            )
        checked += scan.size
    return VerificationReport("mca", True, None, checked)


# ---------------------------------------------------------------------------
# locating


def is_locating(
    a: Array,
    t: int,
    d: int = 1,
    barred: bool = True,
    *,
    force: bool = False,
    threads: int = 1,
) -> VerificationReport:
    """Locating array check at fault count ``d``.

    Distinct interaction sets of size d (size <= d when ``barred``) must have
    distinct row-set unions. In barred mode the empty set participates: its
    union is empty, so any uncovered interaction collides with it, which is
    exactly why a barred locating array is forced to be a covering array.

    d = 1 runs as a single hashing pass over interactions; d > 1 enumerates
    interaction sets behind the pair cap.
    """
    _validate_strength(a, t)
    if d < 1:
        raise ValueError(f"fault count d={d} must be >= 1")
    prop = "bar-la" if barred else "la"
    if d == 1:
        return _locating_single(a, t, barred, prop, force, threads)
    return _locating_sets(a, t, d, barred, prop, force)


_EMPTY_SET_MARK = None  # dict value standing for the empty interaction set


def _locating_single(
    a: Array, t: int, barred: bool, prop: str, force: bool, threads: int
) -> VerificationReport:
    _check_interaction_cap(interaction_count(a.profile, t), force)
    seen: dict[bytes, Interaction | None] = {b"": _EMPTY_SET_MARK} if barred else {}
    checked = 0
    for scan in _iter_scans(a, t, threads):
        uncovered = np.flatnonzero(scan.counts == 0)
        events: list[tuple[int, np.ndarray | None]] = [
            (int(k), g) for k, g in zip(scan.present.tolist(), scan.groups)
        ]
        events.extend((int(k), None) for k in uncovered.tolist()[:2])
        events.sort(key=lambda e: e[0])
        for key, group in events:
            blob = b"" if group is None else group.tobytes()
            if blob in seen:
                earlier = seen[blob]
                interaction = _interaction_at(scan.cols, scan.levels, key)
                rows = (
                    () if group is None else tuple(int(r) + 1 for r in group)
                )
                set1 = () if earlier is None else (earlier,)
                return VerificationReport(
                    prop,
                    False,
                    Witness("collision", set1, (interaction,), rows),
                    checked + key + 1,
                )
            seen[blob] = _interaction_at(scan.cols, scan.levels, key)
        checked += scan.size
    return VerificationReport(prop, True, None, checked)


def _locating_sets(
    a: Array, t: int, d: int, barred: bool, prop: str, force: bool
) -> VerificationReport:
    interactions, masks = _interaction_masks(a, t, force)
    n = len(interactions)
    sizes = range(0, d + 1) if barred else (d,)
    n_sets = sum(comb(n, s) for s in sizes)
    _check_pair_cap(n_sets * (n_sets - 1) // 2, force)
    seen: dict[int, tuple[int, ...]] = {}
    checked = 0
    for s in sizes:
        for combo in itertools.combinations(range(n), s):
            checked += 1
            mask = 0
            for i in combo:
                mask |= masks[i]
            if mask in seen:
                earlier = seen[mask]
                return VerificationReport(
                    prop,
                    False,
                    Witness(
                        "collision",
                        tuple(interactions[i] for i in earlier),
                        tuple(interactions[i] for i in combo),
                        _mask_rows(mask),
                    ),
                    checked,
                )
            seen[mask] = combo
    return VerificationReport(prop, True, None, checked)


def _interaction_masks(
    a: Array, t: int, force: bool
) -> tuple[list[Interaction], list[int]]:
    """All t-way interactions with their row sets packed as bit masks."""
    _check_interaction_cap(interaction_count(a.profile, t), force)
    interactions: list[Interaction] = []
    masks: list[int] = []
    for scan in _iter_scans(a, t):
        by_key = dict(zip(scan.present.tolist(), scan.groups))
        for key in range(scan.size):
            interactions.append(_interaction_at(scan.cols, scan.levels, key))
            rows = by_key.get(key)
            mask = 0
            if rows is not None:
                for r in rows.tolist():
                    mask |= 1 << r
            masks.append(mask)
    return interactions, masks


def _mask_rows(mask: int) -> RowSet:
    rows = []
    r = 0
    while mask:
        if mask & 1:
            rows.append(r + 1)
        mask >>= 1
        r += 1
    return tuple(rows)


# ---------------------------------------------------------------------------
# detecting


def is_detecting(
    a: Array,
    t: int,
    d: int = 1,
    *,
    force: bool = False,
) -> VerificationReport:
    """Detecting array check: rho(T) inside rho of a d-set only when T belongs.

    For d = 1 this means no row set of one interaction is contained in (or
    equal to) another's. Defined in the uniform-alphabet setting; applying it
    to a mixed profile is flagged in the report notes.
    """
    _validate_strength(a, t)
    if d < 1:
        raise ValueError(f"fault count d={d} must be >= 1")
    notes = ()
    if not a.profile.is_uniform:
        notes = ("detecting semantics extended verbatim to a mixed profile",)
    if d == 1:
        return _detecting_single(a, t, force, notes)
    return _detecting_sets(a, t, d, force, notes)


def _detecting_single(
    a: Array, t: int, force: bool, notes: tuple[str, ...]
) -> VerificationReport:
    n = interaction_count(a.profile, t)
    _check_interaction_cap(n, force)
    _check_pair_cap(n * (n - 1), force)
    interactions: list[Interaction] = []
    rows_bool: list[np.ndarray] = []
    for interaction, rowset in iter_rho(a, t):
        interactions.append(interaction)
        flags = np.zeros(a.n_rows, dtype=np.int8)
        for r in rowset:
            flags[r - 1] = 1
        rows_bool.append(flags)
    mat = np.asarray(rows_bool, dtype=np.int64)
    # missing[i, j] = #rows in rho(T_i) outside rho(T_j); 0 means containment
    missing = mat @ (1 - mat).T
    np.fill_diagonal(missing, 1)
    bad = np.argwhere(missing == 0)
    if bad.size:
        i, j = (int(x) for x in bad[0])
        return VerificationReport(
            "da",
            False,
            Witness(
                "containment",
                (interactions[i],),
                (interactions[j],),
                rho(a, interactions[i]),
                rho(a, interactions[j]),
            ),
            n,
            notes,
        )
    return VerificationReport("da", True, None, n, notes)


def _detecting_sets(
    a: Array, t: int, d: int, force: bool, notes: tuple[str, ...]
) -> VerificationReport:
    interactions, masks = _interaction_masks(a, t, force)
    n = len(interactions)
    _check_pair_cap(comb(n, d) * n, force)
    checked = 0
    for combo in itertools.combinations(range(n), d):
        union = 0
        for i in combo:
            union |= masks[i]
        members = set(combo)
        for i in range(n):
            if i in members:
                continue
            checked += 1
            if masks[i] & ~union == 0:
                return VerificationReport(
                    "da",
                    False,
                    Witness(
                        "containment",
                        (interactions[i],),
                        tuple(interactions[j] for j in combo),
                        rho(a, interactions[i]),
                        _mask_rows(union),
                    ),
                    checked,
                    notes,
                )
    return VerificationReport("da", True, None, checked, notes)


# ---------------------------------------------------------------------------
# orthogonality


def moa_indices(
    a: Array, t: int, *, force: bool = False, threads: int = 1
) -> IndexProfile:
    """Indices of an orthogonal array of strength t, one per column subset.

    Succeeds only when every value tuple of every t-subset occurs equally
    often; otherwise raises :class:`NotAnMoaError` carrying the offending
    subset and tuples.
    """
    _validate_strength(a, t)
    _check_interaction_cap(interaction_count(a.profile, t), force)
    entries = []
    for scan in _iter_scans(a, t, threads):
        low = int(np.argmin(scan.counts))
        high = int(np.argmax(scan.counts))
        if scan.counts[low] != scan.counts[high]:
            t_low = _interaction_at(scan.cols, scan.levels, low)
            t_high = _interaction_at(scan.cols, scan.levels, high)
            cols = tuple(c + 1 for c in scan.cols)
            raise NotAnMoaError(
                f"nonuniform counts on columns {cols}:"
                f" {t_low.render()} occurs {int(scan.counts[low])} times,"
                f" {t_high.render()} occurs {int(scan.counts[high])} times",
                Witness(
                    "nonuniform",
                    (t_low,),
                    (t_high,),
                    rho(a, t_low),
                    rho(a, t_high),
                ),
            )
        entries.append(
            (tuple(c + 1 for c in scan.cols), int(scan.counts[0]))
        )
    return IndexProfile(tuple(entries))


def is_pdimoa(
    a: Array, t: int, *, force: bool = False, threads: int = 1
) -> VerificationReport:
    """Orthogonal array whose per-subset indices are pairwise distinct."""
    return _pdimoa_check(a, t, star=False, force=force, threads=threads)


def is_pdimoa_star(
    a: Array, t: int, *, force: bool = False, threads: int = 1
) -> VerificationReport:
    """Pairwise-distinct-index orthogonal array with some index equal to 1."""
    return _pdimoa_check(a, t, star=True, force=force, threads=threads)


def _pdimoa_check(
    a: Array, t: int, star: bool, force: bool, threads: int
) -> VerificationReport:
    prop = "pdimoa-star" if star else "pdimoa"
    n = interaction_count(a.profile, t)
    try:
        profile = moa_indices(a, t, force=force, threads=threads)
    except NotAnMoaError as e:
        return VerificationReport(prop, False, e.witness, n, (str(e),))
    by_lambda: dict[int, tuple[int, ...]] = {}
    for cols, lam in profile.entries:
        if lam in by_lambda:
            first = by_lambda[lam]
            t_first = _first_interaction_on(a, first)
            t_second = _first_interaction_on(a, cols)
            return VerificationReport(
                prop,
                False,
                Witness(
                    "index-clash",
                    (t_first,),
                    (t_second,),
                    rho(a, t_first),
                    rho(a, t_second),
                ),
                n,
                (f"columns {first} and {cols} share index {lam}",),
            )
        by_lambda[lam] = cols
    if star and min(profile.lambdas) != 1:
        cols = profile.entries[
            int(np.argmin(np.asarray(profile.lambdas)))
        ][0]
        t_min = _first_interaction_on(a, cols)
        return VerificationReport(
            prop,
            False,
            Witness("count", (t_min,), rows=rho(a, t_min)),
            n,
            (f"smallest index is {min(profile.lambdas)}, expected 1",),
        )
    return VerificationReport(prop, True, None, n)


def _first_interaction_on(a: Array, cols: tuple[int, ...]) -> Interaction:
    return Interaction(tuple((c, 0) for c in cols))


# ---------------------------------------------------------------------------
# exactly-once coverage on the top block


def is_mca2_star(
    a: Array, t: int, *, force: bool = False, threads: int = 1
) -> VerificationReport:
    """Exactly-once coverage on the last t columns, at least twice elsewhere.

    Requires the canonical (nondecreasing) level order so "last t columns"
    means the largest alphabets. A necessary condition for any locating
    array meeting the product-of-top-levels floor. An array whose size
    differs from that product simply fails the exactly-once part, so no
    separate size error is raised.
    """
    _validate_strength(a, t)
    if not a.profile.is_sorted:
        raise ValueError(
            "exactly-once coverage is defined on the canonical level order;"
            " canonicalize the array first"
        )
    _check_interaction_cap(interaction_count(a.profile, t), force)
    top = tuple(range(a.k - t, a.k))
    checked = 0
    for scan in _iter_scans(a, t, threads):
        if scan.cols == top:
            bad = np.flatnonzero(scan.counts != 1)
            need = "exactly 1"
        else:
            bad = np.flatnonzero(scan.counts < 2)
            need = "at least 2"
        if bad.size:
            key = int(bad[0])
            interaction = _interaction_at(scan.cols, scan.levels, key)
            return VerificationReport(
                "mca2-star",
                False,
                Witness("count", (interaction,), rows=rho(a, interaction)),
                checked + key + 1,
                (
                    f"{interaction.render()} occurs"
                    f" {int(scan.counts[key])} times, needs {need}",
                ),
            )
        checked += scan.size
    return VerificationReport("mca2-star", True, None, checked)

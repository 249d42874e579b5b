"""Data model for mixed-level arrays: profiles, arrays, interactions, and the
on-disk document format.

An array is an N x k integer matrix; column i draws its entries from
{0, ..., v_i - 1} where v_i is that column's alphabet size (its "level").
Columns are numbered 1..k and rows 1..N in every public-facing set, report,
and interaction; the underlying numpy storage is 0-based.

Document format (UTF-8, line oriented, '#' starts a comment line)::

    la v1
    t 2
    levels 2 2 2 2 3
    0 0 0 0 0
    ...

Serialization is bit-exact: single spaces, newline-terminated lines, no
trailing whitespace, no comments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "FormatError",
    "SizeCapError",
    "PreconditionError",
    "LevelProfile",
    "Array",
    "Interaction",
    "RowSet",
    "ColumnMap",
    "parse_array",
    "serialize_array",
    "canonicalize",
]

RowSet = tuple[int, ...]


class FormatError(ValueError):
    """An array document does not conform to the file format."""


class SizeCapError(RuntimeError):
    """A verification was refused because the instance exceeds the size cap.

    Pass ``force=True`` to lift the cap.
    """


class PreconditionError(ValueError):
    """A construction's precondition failed its verification."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class LevelProfile:
    """Alphabet sizes (v_1, ..., v_k) of the k factors plus the strength t.

    Level order is arbitrary here; several consumers (bounds, the
    exactly-once coverage check) require the canonical nondecreasing order
    and say so. Width-1 columns are tolerated in memory as construction
    intermediates but are rejected by the document format.
    """

    levels: tuple[int, ...]
    t: int

    def __post_init__(self):
        levels = tuple(int(v) for v in self.levels)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "t", int(self.t))
        if not levels:
            raise ValueError("profile needs at least one factor")
        if any(v < 1 for v in levels):
            raise ValueError(f"factor levels must be >= 1, got {levels}")
        if not 1 <= self.t <= self.k:
            raise ValueError(
                f"strength t={self.t} must satisfy 1 <= t <= k={self.k}"
            )

    @property
    def k(self) -> int:
        return len(self.levels)

    @property
    def is_sorted(self) -> bool:
        """True when levels are nondecreasing (the canonical order)."""
        return all(a <= b for a, b in zip(self.levels, self.levels[1:]))

    @property
    def is_uniform(self) -> bool:
        return len(set(self.levels)) == 1

    def without_column(self, col: int, t: int | None = None) -> "LevelProfile":
        """Profile with 1-based column ``col`` removed."""
        _check_col(col, self.k)
        levels = self.levels[: col - 1] + self.levels[col:]
        return LevelProfile(levels, self.t if t is None else t)


def _check_col(col: int, k: int) -> None:
    if not 1 <= col <= k:
        raise ValueError(f"column {col} out of range 1..{k}")


class Array:
    """An immutable N x k matrix over a :class:`LevelProfile`.

    ``values`` is a read-only numpy int64 matrix. Equality is exact:
    same profile, same entries.
    """

    __slots__ = ("profile", "values")

    def __init__(self, profile: LevelProfile, rows) -> None:
        values = np.array(rows, dtype=np.int64)
        if values.ndim != 2:
            raise ValueError("rows must form a 2-D matrix")
        if values.shape[0] < 1:
            raise ValueError("array needs at least one row")
        if values.shape[1] != profile.k:
            raise ValueError(
                f"rows have {values.shape[1]} columns, profile has {profile.k}"
            )
        for j, v in enumerate(profile.levels):
            col = values[:, j]
            bad = (col < 0) | (col >= v)
            if bad.any():
                raise ValueError(
                    f"entry {int(col[bad][0])} out of range for column {j + 1}"
                    f" (alphabet size {v})"
                )
        values.setflags(write=False)
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("Array is immutable")

    @classmethod
    def build(cls, levels: Sequence[int], t: int, rows) -> "Array":
        return cls(LevelProfile(tuple(levels), t), rows)

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def k(self) -> int:
        return self.profile.k

    @property
    def levels(self) -> tuple[int, ...]:
        return self.profile.levels

    @property
    def t(self) -> int:
        return self.profile.t

    def row_tuples(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.values]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Array):
            return NotImplemented
        return self.profile == other.profile and np.array_equal(
            self.values, other.values
        )

    def __hash__(self):
        return hash((self.profile, self.values.tobytes()))

    def __repr__(self) -> str:
        return (
            f"Array(N={self.n_rows}, k={self.k}, levels={self.levels},"
            f" t={self.t})"
        )


@dataclass(frozen=True, order=True)
class Interaction:
    """A partial assignment {(column, value), ...} with distinct columns.

    Columns are 1-based. Pairs are kept sorted by column, so two
    interactions over the same assignment always compare equal.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(c), int(v)) for c, v in self.pairs))
        cols = [c for c, _ in pairs]
        if len(set(cols)) != len(cols):
            raise ValueError(f"interaction columns must be distinct: {cols}")
        if any(c < 1 for c in cols):
            raise ValueError("interaction columns are 1-based")
        if any(v < 0 for _, v in pairs):
            raise ValueError("interaction values must be >= 0")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "Interaction":
        return cls(tuple(pairs))

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def validate_for(self, profile: LevelProfile) -> None:
        for c, v in self.pairs:
            _check_col(c, profile.k)
            if v >= profile.levels[c - 1]:
                raise ValueError(
                    f"value {v} out of range for column {c}"
                    f" (alphabet size {profile.levels[c - 1]})"
                )

    def render(self) -> str:
        return ",".join(f"{c}:{v}" for c, v in self.pairs)

    @classmethod
    def parse(cls, text: str) -> "Interaction":
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                c, v = chunk.split(":")
                pairs.append((int(c), int(v)))
            except ValueError:
                raise ValueError(f"bad interaction term {chunk!r},"
                                 " expected 'col:val'") from None
        return cls(tuple(pairs))


@dataclass(frozen=True)
class ColumnMap:
    """Column permutation plus per-column symbol relabelings.

    ``column_order[j]`` is the 1-based original column now at position j+1;
    ``symbol_maps[j][old] = new`` relabels that column's symbols. Both are
    bijections, so the map is invertible: ``restore(apply(a)) == a``.
    """

    column_order: tuple[int, ...]
    symbol_maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.column_order)
        if sorted(self.column_order) != list(range(1, k + 1)):
            raise ValueError("column_order must be a permutation of 1..k")
        if len(self.symbol_maps) != k:
            raise ValueError("one symbol map per column required")
        for m in self.symbol_maps:
            if sorted(m) != list(range(len(m))):
                raise ValueError(f"symbol map {m} is not a bijection")

    def apply(self, a: Array) -> Array:
        cols = []
        levels = []
        for j, c in enumerate(self.column_order):
            m = np.asarray(self.symbol_maps[j], dtype=np.int64)
            cols.append(m[a.values[:, c - 1]])
            levels.append(a.profile.levels[c - 1])
        return Array(
            LevelProfile(tuple(levels), a.profile.t), np.column_stack(cols)
        )

    def restore(self, a: Array) -> Array:
        k = len(self.column_order)
        cols: list = [None] * k
        levels = [0] * k
        for j, c in enumerate(self.column_order):
            inv = np.argsort(np.asarray(self.symbol_maps[j]))
            cols[c - 1] = inv[a.values[:, j]]
            levels[c - 1] = a.profile.levels[j]
        return Array(
            LevelProfile(tuple(levels), a.profile.t), np.column_stack(cols)
        )


def canonicalize(a: Array) -> tuple[Array, ColumnMap]:
    """Sort columns by level, nondecreasing, stable among equal levels.

    Returns the canonical array and the :class:`ColumnMap` that rebuilds the
    original. Symbol maps are identities; only column order changes, which
    preserves every coverage/locating/orthogonality property.
    """
    order = np.argsort(np.asarray(a.profile.levels), kind="stable")
    cmap = ColumnMap(
        tuple(int(i) + 1 for i in order),
        tuple(tuple(range(a.profile.levels[int(i)])) for i in order),
    )
    return cmap.apply(a), cmap


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what}: expected an integer, got {token!r}") from None


def parse_array(text: str) -> Array:
    """Parse an array document. Raises :class:`FormatError` on any defect.

    Comment lines ('#') and blank lines are skipped. Entries must lie in
    each column's alphabet; levels below 2 and strengths above k are
    rejected at this boundary even though in-memory intermediates may
    carry them.
    """
    content = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        content.append(line)
    if len(content) < 4:
        raise FormatError("document too short: need 3 header lines and at least one row")
    if content[0] != "la v1":
        raise FormatError(f"bad magic line {content[0]!r}, expected 'la v1'")
    t_parts = content[1].split()
    if len(t_parts) != 2 or t_parts[0] != "t":
        raise FormatError(f"bad strength line {content[1]!r}, expected 't <int>'")
    t = _parse_int(t_parts[1], "strength")
    lv_parts = content[2].split()
    if len(lv_parts) < 2 or lv_parts[0] != "levels":
        raise FormatError(
            f"bad levels line {content[2]!r}, expected 'levels <v1> ... <vk>'"
        )
    levels = tuple(_parse_int(x, "levels") for x in lv_parts[1:])
    k = len(levels)
    if any(v < 2 for v in levels):
        raise FormatError(f"factor levels must be >= 2, got {levels}")
    if t < 1:
        raise FormatError(f"strength t={t} must be >= 1")
    if t > k:
        raise FormatError(f"strength t={t} exceeds the number of factors k={k}")
    rows = []
    for line in content[3:]:
        parts = line.split()
        if len(parts) != k:
            raise FormatError(
                f"row {len(rows) + 1} has {len(parts)} entries, expected {k}"
            )
        rows.append([_parse_int(p, f"row {len(rows) + 1}") for p in parts])
    try:
        return Array(LevelProfile(levels, t), rows)
    except ValueError as e:
        raise FormatError(str(e)) from None


def serialize_array(a: Array) -> str:
    """Render the bit-exact document; ``parse_array`` inverts it."""
    out = [
        "la v1",
        f"t {a.profile.t}",
        "levels " + " ".join(str(v) for v in a.profile.levels),
    ]
    for row in a.values:
        out.append(" ".join(str(int(x)) for x in row))
    return "\n".join(out) + "\n"

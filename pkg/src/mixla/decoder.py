"""Fault localization: map pass/fail outcomes back to the faulty interaction.

The outcome model is the single-fault, deterministic, noise-free one: a row
fails exactly when it contains the faulty interaction. On a verified
locating array the failing set determines the fault uniquely, so decoding is
a lookup in the row-set index; anything else (noise, two or more faults)
surfaces as an inconsistent diagnosis rather than a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Array, Interaction, RowSet
from .verifier import is_locating, iter_rho, rho

__all__ = [
    "Outcomes",
    "Diagnosis",
    "simulate_outcomes",
    "Locator",
    "locate",
]


@dataclass(frozen=True)
class Outcomes:
    """Pass/fail flags aligned with array rows; True means fail."""

    fails: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.fails)

    def failing_rows(self) -> RowSet:
        return tuple(r + 1 for r, f in enumerate(self.fails) if f)

    def render(self) -> str:
        return "".join("f" if f else "p" for f in self.fails)

    @classmethod
    def from_text(cls, text: str) -> "Outcomes":
        """Parse 'p'/'f' flags, one per character; whitespace is ignored."""
        flags = []
        for ch in text.split():
            for c in ch:
                if c == "p":
                    flags.append(False)
                elif c == "f":
                    flags.append(True)
                else:
                    raise ValueError(
                        f"bad outcome character {c!r}, expected 'p' or 'f'"
                    )
        if not flags:
            raise ValueError("no outcomes given")
        return cls(tuple(flags))


@dataclass(frozen=True)
class Diagnosis:
    """Decoder verdict: no fault, one located interaction, or inconsistency."""

    kind: str  # "no-fault" | "located" | "inconsistent"
    interaction: Interaction | None = None
    failing: RowSet = ()

    @classmethod
    def no_fault(cls) -> "Diagnosis":
        return cls("no-fault")

    @classmethod
    def located(cls, interaction: Interaction, failing: RowSet) -> "Diagnosis":
        return cls("located", interaction, failing)

    @classmethod
    def inconsistent(cls, failing: RowSet) -> "Diagnosis":
        return cls("inconsistent", None, failing)

    def render(self) -> str:
        if self.kind == "no-fault":
            return "DIAGNOSIS no-fault"
        if self.kind == "located":
            return f"DIAGNOSIS located {self.interaction.render()}"
        return (
            "DIAGNOSIS inconsistent"
            f" failing={','.join(str(r) for r in self.failing)}"
        )


def simulate_outcomes(a: Array, fault: Interaction | None = None) -> Outcomes:
    """Outcomes under one (or no) faulty interaction: a row fails exactly
    when it contains the fault."""
    fails = [False] * a.n_rows
    if fault is not None:
        for r in rho(a, fault):
            fails[r - 1] = True
    return Outcomes(tuple(fails))


class Locator:
    """Row-set index over all t-way interactions, built once per array.

    Verifies the array is a locating array at construction unless the
    caller asserts it; concurrent lookups against one index are read-only.
    """

    def __init__(
        self,
        a: Array,
        t: int | None = None,
        *,
        assume_verified: bool = False,
        force: bool = False,
    ):
        self.array = a
        self.t = a.t if t is None else t
        if not assume_verified:
            report = is_locating(a, self.t, 1, barred=True, force=force)
            if not report.verdict:
                raise ValueError(
                    "array does not locate single faults at strength"
                    f" {self.t}\n{report.render()}"
                )
        self._index: dict[RowSet, list[Interaction]] = {}
        for interaction, rows in iter_rho(a, self.t):
            self._index.setdefault(rows, []).append(interaction)

    def locate(self, outcomes: Outcomes) -> Diagnosis:
        if len(outcomes) != self.array.n_rows:
            raise ValueError(
                f"{len(outcomes)} outcomes for {self.array.n_rows} rows"
            )
        failing = outcomes.failing_rows()
        if not failing:
            return Diagnosis.no_fault()
        hits = self._index.get(failing, [])
        if len(hits) > 1:
            # impossible on a verified locating array
            raise ValueError(
                "failing set matches several interactions "
                f"({', '.join(h.render() for h in hits)}); the array does"
                " not locate single faults"
            )
        if not hits:
            return Diagnosis.inconsistent(failing)
        return Diagnosis.located(hits[0], failing)


def locate(
    a: Array,
    outcomes: Outcomes,
    t: int | None = None,
    *,
    assume_verified: bool = False,
) -> Diagnosis:
    """One-shot decode; build a :class:`Locator` to reuse the index."""
    return Locator(a, t, assume_verified=assume_verified).locate(outcomes)

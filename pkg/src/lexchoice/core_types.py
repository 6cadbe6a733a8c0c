"""Decision-problem data model.

Criteria are integer rank scales ordered by importance: index 0 is the most
important criterion. Every criterion is of "win" type (larger is better).
Constructors do not validate; call :func:`validate_problem` to get the list
of invariant violations as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


class MalformedInputError(ValueError):
    """Raised when inputs have incompatible shapes or out-of-domain values."""


@dataclass(frozen=True)
class ScaleSpec:
    min_rank: int
    max_rank: int
    name: str = ""

    @property
    def rank_count(self) -> int:
        return self.max_rank - self.min_rank + 1

    def contains(self, value: int) -> bool:
        return self.min_rank <= value <= self.max_rank


@dataclass(frozen=True)
class Alternative:
    id: str
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))


@dataclass(frozen=True)
class DecisionProblem:
    alternatives: tuple[Alternative, ...]
    scales: tuple[ScaleSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "scales", tuple(self.scales))

    @property
    def n(self) -> int:
        return len(self.alternatives)

    @property
    def m(self) -> int:
        return len(self.scales)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], scales: Sequence[ScaleSpec],
                  ids: Sequence[str] | None = None) -> "DecisionProblem":
        """Build a problem from bare value rows; ids default to ``a1..an``."""
        if ids is None:
            ids = [f"a{i + 1}" for i in range(len(rows))]
        alts = tuple(Alternative(i, tuple(r)) for i, r in zip(ids, rows))
        return cls(alts, tuple(scales))


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    alternative: str | None = None
    criterion: int | None = None  # 1-based

    def __str__(self):
        return self.message


def validate_problem(problem: DecisionProblem) -> list[Violation]:
    """Return every invariant violation in ``problem``; empty iff well-formed."""
    out: list[Violation] = []
    if problem.m == 0:
        out.append(Violation("no_criteria", "no criteria"))
    if problem.n == 0:
        out.append(Violation("no_alternatives", "no alternatives"))

    for j, s in enumerate(problem.scales, start=1):
        if s.max_rank < s.min_rank:
            out.append(Violation(
                "bad_scale",
                f"criterion {j} ({s.name!r}): max_rank {s.max_rank} < min_rank {s.min_rank}",
                criterion=j))

    seen: set[str] = set()
    for row, alt in enumerate(problem.alternatives, start=1):
        if alt.id in seen:
            out.append(Violation("duplicate_id",
                                 f"row {row}: duplicate alternative id {alt.id!r}",
                                 alternative=alt.id))
        seen.add(alt.id)

        if len(alt.values) != problem.m:
            out.append(Violation(
                "length_mismatch",
                f"row {row} ({alt.id!r}): {len(alt.values)} values for {problem.m} criteria",
                alternative=alt.id))
            continue
        for j, (v, s) in enumerate(zip(alt.values, problem.scales), start=1):
            if not s.contains(v):
                out.append(Violation(
                    "out_of_scale",
                    f"row {row} ({alt.id!r}), criterion {j} ({s.name!r}): "
                    f"value {v} outside [{s.min_rank}, {s.max_rank}]",
                    alternative=alt.id, criterion=j))
    return out


def check_dimensions(alt: Alternative, scales: Sequence[ScaleSpec]) -> None:
    if len(alt.values) != len(scales):
        raise MalformedInputError(
            f"alternative {alt.id!r} has {len(alt.values)} values, expected {len(scales)}")

"""Lexicographic preference between alternatives.

Criteria are scanned in importance order and the first strict difference
decides. The 1-based index of that criterion is the superiority degree.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core_types import Alternative, DecisionProblem, MalformedInputError, check_dimensions


class Verdict(enum.Enum):
    FIRST_PREFERRED = "first"
    SECOND_PREFERRED = "second"
    EQUIVALENT = "equivalent"


@dataclass(frozen=True)
class ComparisonOutcome:
    verdict: Verdict
    degree: int | None = None

    def __post_init__(self):
        if (self.degree is None) != (self.verdict is Verdict.EQUIVALENT):
            raise ValueError("degree must be present iff verdict is not EQUIVALENT")
        if self.degree is not None and self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")

    @property
    def weakly_first(self) -> bool:
        """First alternative is preferred or equivalent."""
        return self.verdict is not Verdict.SECOND_PREFERRED

    @classmethod
    def from_signed(cls, d: int) -> "ComparisonOutcome":
        if d > 0:
            return cls(Verdict.FIRST_PREFERRED, d)
        if d < 0:
            return cls(Verdict.SECOND_PREFERRED, -d)
        return cls(Verdict.EQUIVALENT)


@dataclass(frozen=True)
class AxiomReport:
    linked: bool
    strict_asymmetric: bool
    transitive: bool
    exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return self.linked and self.strict_asymmetric and self.transitive


def compare_lex(a: Alternative, b: Alternative, problem: DecisionProblem) -> ComparisonOutcome:
    check_dimensions(a, problem.scales)
    check_dimensions(b, problem.scales)
    for j, (x, y) in enumerate(zip(a.values, b.values), start=1):
        if x > y:
            return ComparisonOutcome(Verdict.FIRST_PREFERRED, j)
        if x < y:
            return ComparisonOutcome(Verdict.SECOND_PREFERRED, j)
    return ComparisonOutcome(Verdict.EQUIVALENT)


def superiority_degree(a: Alternative, b: Alternative, problem: DecisionProblem) -> int | None:
    return compare_lex(a, b, problem).degree


def signed_degree_matrix(problem: DecisionProblem) -> np.ndarray:
    """All-pairs comparison as an n x n int64 matrix (see :mod:`lexchoice.kernels`).

    Falls back to scalar comparisons when values do not fit in int64.
    """
    for alt in problem.alternatives:
        check_dimensions(alt, problem.scales)
    rows = [alt.values for alt in problem.alternatives]
    n = len(rows)
    if kernels.fits_int64(rows):
        values = np.array(rows, dtype=np.int64).reshape(n, problem.m)
        return kernels.degree_matrix(values)
    out = np.zeros((n, n), dtype=np.int64)
    for i, k in itertools.combinations(range(n), 2):
        o = compare_lex(problem.alternatives[i], problem.alternatives[k], problem)
        d = 0 if o.degree is None else (o.degree if o.verdict is Verdict.FIRST_PREFERRED else -o.degree)
        out[i, k], out[k, i] = d, -d
    return out


def check_order_axioms(problem: DecisionProblem, pair_limit: int = 200,
                       triple_limit: int = 50, samples: int = 20000,
                       seed: int = 0) -> AxiomReport:
    """Witness that the relation is linked, asymmetric in its strict part and transitive.

    Pairs are checked exhaustively for ``n <= pair_limit`` and triples for
    ``n <= triple_limit``; above those bounds ``samples`` random pairs or
    triples are drawn with a seeded RNG.
    """
    alts = problem.alternatives
    n = len(alts)
    m = problem.m
    rng = random.Random(seed)

    D = None
    if n <= pair_limit:
        D = signed_degree_matrix(problem)
        values = np.array([a.values for a in alts], dtype=object).reshape(n, m)
        same = (values[:, None, :] == values[None, :, :]).all(axis=2) if n else np.zeros((0, 0), bool)
        linked = bool((np.abs(D) <= m).all() and ((D == 0) == same).all())
        asym = bool((D == -D.T).all())
    else:
        linked, asym = _sampled_pair_checks(problem, rng, samples)

    if n <= triple_limit:
        if D is None:
            D = signed_degree_matrix(problem)
        transitive = kernels.transitivity_violation(D >= 0) == (-1, -1, -1)
    elif D is not None:
        W = D >= 0
        a, b, c = np.random.default_rng(seed).integers(0, n, size=(3, samples))
        transitive = not (W[a, b] & W[b, c] & ~W[a, c]).any()
    else:
        transitive = True
        for _ in range(samples):
            a, b, c = (alts[rng.randrange(n)] for _ in range(3))
            if (compare_lex(a, b, problem).weakly_first and compare_lex(b, c, problem).weakly_first
                    and not compare_lex(a, c, problem).weakly_first):
                transitive = False
                break

    return AxiomReport(linked, asym, transitive,
                       exhaustive=n <= pair_limit and n <= triple_limit)


_MIRROR = {
    Verdict.FIRST_PREFERRED: Verdict.SECOND_PREFERRED,
    Verdict.SECOND_PREFERRED: Verdict.FIRST_PREFERRED,
    Verdict.EQUIVALENT: Verdict.EQUIVALENT,
}


def _sampled_pair_checks(problem, rng, samples):
    alts = problem.alternatives
    n, m = len(alts), problem.m
    linked = asym = True
    for _ in range(samples):
        a, b = alts[rng.randrange(n)], alts[rng.randrange(n)]
        try:
            o = compare_lex(a, b, problem)
            r = compare_lex(b, a, problem)
        except MalformedInputError:
            linked = False
            continue
        if o.degree is not None and not 1 <= o.degree <= m:
            linked = False
        if (o.verdict is Verdict.EQUIVALENT) != (a.values == b.values):
            linked = False
        if r.verdict is not _MIRROR[o.verdict] or r.degree != o.degree:
            asym = False
    return linked, asym


def pareto_kernel(problem: DecisionProblem) -> list[Alternative]:
    """Alternatives not strictly dominated by any other, in input order."""
    if problem.n == 0:
        raise MalformedInputError("no alternatives")
    D = signed_degree_matrix(problem)
    dominated = (D > 0).any(axis=0)
    return [alt for alt, dom in zip(problem.alternatives, dominated) if not dom]


def sort_lex(problem: DecisionProblem) -> list[Alternative]:
    """Alternatives best-first; equivalent alternatives keep input order."""
    # tuple order is the lexicographic order; reverse=True is still stable
    order = sorted(range(problem.n), key=lambda i: problem.alternatives[i].values, reverse=True)
    return [problem.alternatives[i] for i in order]

"""Exact lexicographic weighted-sum convolution.

Weights are mixed-radix place values: the least important criterion gets 1
and each more important one gets the product of the rank counts of all less
important criteria. With these weights the weighted sum orders alternatives
exactly as the lexicographic relation does. All arithmetic is on Python ints
or :class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core_types import Alternative, DecisionProblem, MalformedInputError, ScaleSpec, check_dimensions
from .lex_relation import signed_degree_matrix


class DegenerateCriterionError(ValueError):
    """Raised when rationing a criterion whose values are all zero."""


@dataclass(frozen=True)
class LexCoefficients:
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def dominance_holds(self, scales: Sequence[ScaleSpec]) -> bool:
        """Each weight exceeds the largest possible contribution of all later criteria."""
        d = [scale_diapason(s) for s in scales]
        tail = 0
        for j in reversed(range(len(self.weights))):
            if self.weights[j] <= tail:
                return False
            tail += self.weights[j] * d[j]
        return True


@dataclass(frozen=True, order=True)
class ConvolutionValue:
    value: int

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class AgreementReport:
    agrees: bool
    counterexample: tuple[Alternative, Alternative] | None = None


@dataclass(frozen=True)
class AffirmationReport:
    holds: bool
    violations: tuple[int, ...] = ()


def scale_diapason(scale: ScaleSpec) -> int:
    return scale.max_rank - scale.min_rank


def lex_coefficients(scales: Sequence[ScaleSpec]) -> LexCoefficients:
    if not scales:
        raise MalformedInputError("at least one criterion is required")
    weights = [1]
    for s in reversed(scales[1:]):
        weights.append(weights[-1] * (scale_diapason(s) + 1))
    return LexCoefficients(tuple(reversed(weights)))


def convolve(a: Alternative, coeffs: LexCoefficients | Sequence[int],
             scales: Sequence[ScaleSpec]) -> ConvolutionValue:
    check_dimensions(a, scales)
    weights = tuple(coeffs)
    if len(weights) != len(scales):
        raise MalformedInputError(f"{len(weights)} weights for {len(scales)} criteria")
    return ConvolutionValue(sum(w * (v - s.min_rank) for w, v, s in zip(weights, a.values, scales)))


def _convolutions(problem: DecisionProblem, coeffs) -> list[int]:
    if coeffs is None:
        coeffs = lex_coefficients(problem.scales)
    return [convolve(alt, coeffs, problem.scales).value for alt in problem.alternatives]


def verify_agreement(problem: DecisionProblem,
                     coeffs: LexCoefficients | Sequence[int] | None = None) -> AgreementReport:
    """Check ``L(a) >= L(b)`` iff ``a`` is lexicographically at least as good as ``b``.

    ``coeffs`` defaults to :func:`lex_coefficients`; passing other weights is
    how a broken weighting is exhibited. The counterexample is the first
    violating ordered pair in row-major order.
    """
    if problem.n < 2:
        return AgreementReport(True)
    values = _convolutions(problem, coeffs)
    # dense ranks keep exact int comparison while fitting int64
    rank_of = {v: r for r, v in enumerate(sorted(set(values)))}
    ranks = np.array([rank_of[v] for v in values], dtype=np.int64)
    conv_ge = ranks[:, None] >= ranks[None, :]
    lex_ge = signed_degree_matrix(problem) >= 0
    bad = conv_ge != lex_ge
    if not bad.any():
        return AgreementReport(True)
    i, k = np.unravel_index(int(bad.argmax()), bad.shape)
    return AgreementReport(False, (problem.alternatives[i], problem.alternatives[k]))


def best_by_convolution(problem: DecisionProblem,
                        coeffs: LexCoefficients | Sequence[int] | None = None) -> list[Alternative]:
    if problem.n == 0:
        raise MalformedInputError("no alternatives")
    values = _convolutions(problem, coeffs)
    top = max(values)
    return [alt for alt, v in zip(problem.alternatives, values) if v == top]


def ration(raw: Sequence, a) -> list[Fraction]:
    """Scale one criterion's values onto ``[0, a]`` by dividing by its maximum."""
    a = Fraction(a)
    if a <= 0:
        raise MalformedInputError(f"scale factor must be positive, got {a}")
    vals = [Fraction(x) for x in raw]
    if any(v < 0 for v in vals):
        raise MalformedInputError("rationing expects non-negative values")
    top = max(vals, default=Fraction(0))
    if top == 0:
        raise DegenerateCriterionError("criterion maximum is zero; cannot ration")
    return [v / top * a for v in vals]


def quantize(rationed: Sequence, a, q: int) -> list[int]:
    """Round values in ``[0, a]`` half-up onto integer ranks ``0..q-1``."""
    a = Fraction(a)
    if a <= 0:
        raise MalformedInputError(f"scale factor must be positive, got {a}")
    if q < 1:
        raise MalformedInputError(f"rank count must be >= 1, got {q}")
    out = []
    for x in rationed:
        x = Fraction(x)
        if not 0 <= x <= a:
            raise MalformedInputError(f"value {x} outside [0, {a}]")
        out.append(math.floor(x / a * (q - 1) + Fraction(1, 2)))
    return out


def check_affirmation1(scales: Sequence[ScaleSpec]) -> AffirmationReport:
    """Check that every criterion's ranks sit strictly above the next criterion's.

    A minimum rank of 0 is treated as 1 for this check only. Violations are
    reported as the 1-based index j of the failing pair (j, j + 1).
    """
    bad = []
    for j in range(len(scales) - 1):
        lo = scales[j].min_rank
        if lo == 0:
            lo = 1
        if not lo > scales[j + 1].max_rank:
            bad.append(j + 1)
    return AffirmationReport(not bad, tuple(bad))

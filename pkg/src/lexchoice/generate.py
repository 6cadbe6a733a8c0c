"""Seeded random decision problems for property checks and ``lexchoice verify --random``."""

from __future__ import annotations

import random

from .core_types import Alternative, DecisionProblem, ScaleSpec


def random_scales(rng: random.Random, m: int, rank_range=(1, 12),
                  min_offset=(-5, 5)) -> tuple[ScaleSpec, ...]:
    out = []
    for j in range(m):
        lo = rng.randint(*min_offset)
        r = rng.randint(*rank_range)
        out.append(ScaleSpec(lo, lo + r - 1, f"k{j + 1}"))
    return tuple(out)


def random_problem(rng: random.Random, m_range=(1, 6), rank_range=(1, 12),
                   n_range=(2, 64)) -> DecisionProblem:
    """Problem with m criteria, rank counts and n alternatives drawn uniformly from the ranges.

    Alternatives are sometimes copied from earlier ones so equivalence classes
    of size > 1 show up regularly.
    """
    m = rng.randint(*m_range)
    n = rng.randint(*n_range)
    scales = random_scales(rng, m, rank_range)
    alts = []
    for i in range(n):
        if alts and rng.random() < 0.1:
            values = rng.choice(alts).values
        else:
            values = tuple(rng.randint(s.min_rank, s.max_rank) for s in scales)
        alts.append(Alternative(f"a{i + 1}", values))
    return DecisionProblem(tuple(alts), scales)


def random_increasing_map(rng: random.Random, scale: ScaleSpec, max_step: int = 50):
    """A strictly increasing integer map on the scale's ranks, plus its image scale."""
    offset = rng.randint(-1000, 1000)
    table = {}
    acc = offset
    for v in range(scale.min_rank, scale.max_rank + 1):
        acc += rng.randint(1, max_step)
        table[v] = acc
    image = ScaleSpec(table[scale.min_rank], table[scale.max_rank], scale.name)
    return table, image


def transform_problem(problem: DecisionProblem, rng: random.Random) -> DecisionProblem:
    """Apply an independent random strictly increasing map to every criterion."""
    maps = [random_increasing_map(rng, s) for s in problem.scales]
    alts = tuple(
        Alternative(a.id, tuple(maps[j][0][v] for j, v in enumerate(a.values)))
        for a in problem.alternatives
    )
    return DecisionProblem(alts, tuple(img for _, img in maps))

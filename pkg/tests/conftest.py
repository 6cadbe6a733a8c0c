import itertools

import pytest
from hypothesis import strategies as st

from lexchoice import Alternative, DecisionProblem, ScaleSpec, Verdict, compare_lex

DECIMAL5 = tuple(ScaleSpec(0, 9, f"d{j}") for j in range(1, 6))


@st.composite
def scales_st(draw, max_m=6, max_ranks=12):
    m = draw(st.integers(1, max_m))
    out = []
    for j in range(m):
        lo = draw(st.integers(-20, 20))
        r = draw(st.integers(1, max_ranks))
        out.append(ScaleSpec(lo, lo + r - 1, f"k{j + 1}"))
    return tuple(out)


@st.composite
def problems(draw, max_m=6, max_ranks=12, max_n=24):
    scales = draw(scales_st(max_m, max_ranks))
    row = st.tuples(*[st.integers(s.min_rank, s.max_rank) for s in scales])
    rows = draw(st.lists(row, min_size=1, max_size=max_n))
    return DecisionProblem.from_rows(rows, scales)


def brute_kernel_ids(problem):
    """Ids of alternatives that no other alternative beats, by direct pairwise comparison."""
    alts = problem.alternatives
    return [a.id for a in alts
            if not any(compare_lex(b, a, problem).verdict is Verdict.FIRST_PREFERRED for b in alts)]


def all_pairs(problem):
    return itertools.product(problem.alternatives, repeat=2)


@pytest.fixture
def chain_problem():
    return DecisionProblem.from_rows([(3, 1), (3, 2), (2, 9)], [ScaleSpec(0, 9, "x"), ScaleSpec(0, 9, "y")])

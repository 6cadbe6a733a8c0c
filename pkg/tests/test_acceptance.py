"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``).
"""

import itertools
import random
import string
import time
from decimal import Decimal, getcontext

import pytest

from lexchoice import (AlphabetSpec, ScaleSpec, Verdict, best_by_convolution, check_affirmation1,
                       check_order_axioms, compare_lex, convolve, encode_word, lex_coefficients,
                       pareto_kernel, position_weights, signed_degree_matrix, sort_lexicon,
                       verify_agreement)
from lexchoice.core_types import Alternative
from lexchoice.generate import random_problem, transform_problem
from lexchoice.lexicon import position_scales, word_alternative

SEED = 20261016
N_PROBLEMS = 1000


def report(capsys, number, title, ok, detail=""):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
              + (f" ({detail})" if detail else ""))
    assert ok, detail


@pytest.fixture(scope="module")
def generated():
    rng = random.Random(SEED)
    return [random_problem(rng, m_range=(1, 6), rank_range=(1, 12), n_range=(2, 64))
            for _ in range(N_PROBLEMS)]


def test_1_oracle_equivalence(generated, capsys):
    t0 = time.perf_counter()
    bad = [i for i, p in enumerate(generated) if not verify_agreement(p).agrees]
    elapsed = time.perf_counter() - t0
    ms = {p.m for p in generated}
    rcs = {s.rank_count for p in generated for s in p.scales}
    ns = [p.n for p in generated]
    covered = ms == set(range(1, 7)) and rcs == set(range(1, 13)) and min(ns) >= 2 and max(ns) <= 64
    ok = not bad and elapsed < 30 and covered and len(generated) >= 1000
    report(capsys, 1, "convolution order == lexicographic order", ok,
           f"{len(generated)} problems, {len(bad)} counterexamples, {elapsed:.2f}s")


def test_2_order_axioms(generated, capsys):
    failures = 0
    non_exhaustive_small = 0
    for p in generated:
        r = check_order_axioms(p)
        failures += not r.ok
        non_exhaustive_small += p.n <= 30 and not r.exhaustive
    ok = failures == 0 and non_exhaustive_small == 0
    report(capsys, 2, "linked / asymmetric / transitive", ok,
           f"{failures} violating problems, {non_exhaustive_small} small problems not exhaustive")


def test_3_kernel_consistency(generated, capsys):
    mismatched = sum({a.id for a in best_by_convolution(p)} != {a.id for a in pareto_kernel(p)}
                     for p in generated)
    report(capsys, 3, "argmax of convolution == Pareto kernel", mismatched == 0,
           f"{mismatched}/{len(generated)} mismatches")


def test_4_decimal_reproduction(capsys):
    rng = random.Random(SEED + 4)
    scales = [ScaleSpec(0, 9, f"d{j}") for j in range(5)]
    coeffs = lex_coefficients(scales)
    misses = 0
    for _ in range(10_000):
        s = "".join(rng.choice(string.digits) for _ in range(5))
        alt = Alternative(s, tuple(int(c) for c in s))
        misses += convolve(alt, coeffs, scales).value != int(s)
    report(capsys, 4, "decimal positional reading", misses == 0, f"{misses}/10000 mismatches")


def test_5_monotone_transform_stability(capsys):
    rng = random.Random(SEED + 5)
    differing = 0
    pairs = 0
    for _ in range(200):
        p = random_problem(rng)
        q = transform_problem(p, rng)
        Dp, Dq = signed_degree_matrix(p), signed_degree_matrix(q)
        for (a, b), (a2, b2) in zip(itertools.product(p.alternatives, repeat=2),
                                    itertools.product(q.alternatives, repeat=2)):
            pairs += 1
            differing += compare_lex(a, b, p) != compare_lex(a2, b2, q)
        differing += int((Dp != Dq).sum())
    report(capsys, 5, "verdicts/degrees invariant under increasing maps", differing == 0,
           f"{pairs} pairs, {differing} differences")


def _corpus(rng, size=1500):
    letters = string.ascii_lowercase
    words = set()
    while len(words) < size:
        w = "".join(rng.choice(letters) for _ in range(rng.randint(1, 20)))
        words.add(w)
        if rng.random() < 0.3 and len(w) > 1:
            words.add(w[:rng.randint(1, len(w) - 1)])
    out = sorted(words)
    rng.shuffle(out)
    return out + out[:50]


def test_6_lexicon_isomorphism(capsys):
    rng = random.Random(SEED + 6)
    alpha = AlphabetSpec(string.ascii_lowercase, "first", 20)
    words = _corpus(rng)
    # gap pads low: space sorts before every lowercase letter
    oracle = sorted(words, key=lambda w: w.ljust(20, " "))
    got = sort_lexicon(words, alpha)
    distinct = set(words)
    keys = {encode_word(w, alpha).key for w in distinct}
    ok = len(distinct) >= 1000 and got == oracle and len(keys) == len(distinct)
    report(capsys, 6, "word keys sort in dictionary order, injective", ok,
           f"{len(words)} words, {len(distinct)} distinct, {len(keys)} keys")


def _affirmation_oracle(scales):
    for hi_scale, lo_scale in zip(scales, scales[1:]):
        upper = [x for x in range(hi_scale.min_rank, hi_scale.max_rank + 1) if x != 0]
        lower = range(lo_scale.min_rank, lo_scale.max_rank + 1)
        if not all(x > y for x in upper for y in lower):
            return False
    return True


def test_7_affirmation(capsys):
    rng = random.Random(SEED + 7)
    misclassified = 0
    for m in range(1, 11):
        family = [ScaleSpec(10 * (m - j) + 1, 10 * (m - j) + 9) for j in range(1, m + 1)]
        misclassified += not check_affirmation1(family).holds

    truths = []
    for t in range(100):
        m = rng.randint(2, 6)
        if t % 2 == 0:
            # stacked family, then maybe push one boundary into overlap
            family, top = [], rng.randint(40, 90)
            for _ in range(m):
                lo = rng.randint(max(0, top - 8), top)
                family.append(ScaleSpec(lo, top))
                top = max(lo - rng.randint(1, 3), 1)
            if rng.random() < 0.5:
                j = rng.randrange(m - 1)
                family[j + 1] = ScaleSpec(family[j + 1].min_rank, family[j].min_rank + rng.randint(0, 3))
        else:
            family = []
            for _ in range(m):
                lo = rng.randint(0, 30)
                family.append(ScaleSpec(lo, lo + rng.randint(1, 10)))
        truth = _affirmation_oracle(family)
        truths.append(truth)
        misclassified += check_affirmation1(family).holds != truth
        overlaps = any(set(range(a.min_rank, a.max_rank + 1)) & set(range(b.min_rank, b.max_rank + 1)) - {0}
                       for a, b in zip(family, family[1:]))
        misclassified += overlaps and check_affirmation1(family).holds
    ok = misclassified == 0 and any(truths) and not all(truths)
    report(capsys, 7, "Affirmation 1 classification", ok,
           f"{misclassified} misclassified, {sum(truths)} valid / {len(truths)} random families")


def test_8_exact_arithmetic(capsys):
    getcontext().prec = 60
    dec_pow = lambda e: int(Decimal(6) ** e)  # noqa: E731
    alpha = AlphabetSpec("abcde", "first", 20)
    weights = position_weights(alpha)
    coeffs = lex_coefficients(position_scales(alpha)).weights
    top_word = "e" * 20
    key = encode_word(top_word, alpha).key
    conv = convolve(word_alternative(top_word, alpha), coeffs, position_scales(alpha)).value

    wide = AlphabetSpec("abcde", "first", 31)
    wide_key = encode_word("e" * 31, wide).key

    checks = [
        weights[0] == dec_pow(19) and str(weights[0]) == "609359740010496",
        coeffs == weights,
        all(w == dec_pow(19 - i) for i, w in enumerate(weights)),
        key == conv == dec_pow(20) - 1 and str(key) == "3656158440062975",
        str(position_weights(wide)[0]) == "221073919720733357899776" == str(dec_pow(30)),
        str(wide_key) == "1326443518324400147398655" == str(dec_pow(31) - 1),
    ]
    report(capsys, 8, "exact big-integer weights and keys, radix 6 x 20 positions", all(checks),
           f"{sum(checks)}/{len(checks)} spot checks")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))

"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``. Budgets are wall-clock
seconds pinned from the criteria; values are exact.

Criterion 4 note: its second half asserts a distinct-index orthogonal array
over levels (2,3,12,18). In any orthogonal array the index on a column
subset equals N divided by the subset's level product, and 2*18 = 3*12, so
subsets {1,4} and {2,3} share an index at every N: that half is
mathematically unattainable and the assertion fails honestly. The array the
construction produces is still a verified optimal locating array of the
floor size, which the same test checks and which does hold.
"""

import random
import time
from contextlib import contextmanager

import pytest

from mixla import (
    LevelProfile,
    Locator,
    SearchParams,
    anneal,
    enumerate_interactions,
    expand_level,
    is_locating,
    is_mca,
    is_pdimoa_star,
    lower_bound,
    simulate_outcomes,
)
from mixla.direct import (
    build_la_1_w,
    build_la_2_3,
    build_pdimoa_star_general,
    build_pdimoa_star_t_plus_1,
    full_factorial,
)
from mixla.recursive import derive, expand_level as grow, product, roux_one, roux_two, truncate

from conftest import random_array, random_profile

TABLE = [
    ((2, 3, 4), 16),
    ((3, 3, 4), 17),
    ((2, 4, 4), 16),
    ((2, 2, 3, 4), 16),
    ((2, 2, 5, 5), 25),
    ((2, 3, 3, 4), 17),
]


@contextmanager
def criterion(num, description, budget_s):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num}: {description}")
        raise
    elapsed = time.perf_counter() - start
    if elapsed >= budget_s:
        print(f"FAIL criterion {num}: {description} (took {elapsed:.2f}s)")
        raise AssertionError(
            f"criterion {num} exceeded its {budget_s}s budget: {elapsed:.2f}s"
        )
    print(f"PASS criterion {num}: {description} ({elapsed:.2f}s)")


@pytest.fixture(scope="module")
def annealed():
    """The six published-size search targets, one verified array each."""
    found = {}
    for levels, n in TABLE:
        arr = anneal(
            LevelProfile(levels, 2),
            SearchParams(n_rows=n, seed=20, time_budget_s=120.0),
        )
        assert arr is not None, f"search failed for {levels}"
        found[levels] = arr
    return found


def test_criterion_1_published_bounds():
    with criterion(1, "published lower-bound table reproduced", 60.0):
        for levels, expected in TABLE:
            start = time.perf_counter()
            got = lower_bound(LevelProfile(levels, 2)).value
            elapsed = time.perf_counter() - start
            assert got == expected, f"{levels}: {got} != {expected}"
            assert elapsed < 1e-3, f"{levels}: bound took {elapsed * 1e3:.2f} ms"


def test_criterion_2_published_arrays_verify(
    la12, la24_wide, la24_narrow, moa246, la42
):
    with criterion(2, "published arrays verify for their claimed properties", 1.0):
        assert is_pdimoa_star(moa246, 2).verdict
        assert is_locating(la12, 2, 1, barred=True).verdict
        assert is_locating(la24_wide, 2, 1, barred=True).verdict
        assert is_locating(la24_narrow, 2, 1, barred=True).verdict
        assert is_locating(la42, 2, 1, barred=True).verdict


def test_criterion_3_optimal_series():
    with criterion(3, "three-column and strength-one optimal series", 10.0):
        for v1 in (2, 3):
            for v2 in range(2 * v1, 9):
                for v3 in range(v2, 9):
                    a = build_la_2_3(v1, v2, v3)
                    bound = lower_bound(LevelProfile((v1, v2, v3), 2)).value
                    assert a.n_rows == v2 * v3 == bound
                    assert is_locating(a, 2, 1, barred=True).verdict
        for w in range(2, 10):
            for v in range(max(w + 1, 2 * w), 11):
                a = build_la_1_w(w, v)
                assert a.n_rows == v == lower_bound(a.profile).value
                assert is_locating(a, 1, 1, barred=True).verdict


def test_criterion_4_pdimoa_pipeline():
    with criterion(4, "distinct-index pipeline on (2,4,6) and (2,3,12,18)", 5.0):
        small = build_pdimoa_star_t_plus_1((2, 4, 6))
        assert small.n_rows == 24 == lower_bound(LevelProfile((2, 4, 6), 2)).value
        assert is_pdimoa_star(small, 2).verdict
        assert is_locating(small, 2, 1, barred=True).verdict

        big = build_pdimoa_star_general((2, 3, 12, 18), 2)
        assert big.n_rows == 216 == lower_bound(
            LevelProfile((2, 3, 12, 18), 2)
        ).value
        assert is_locating(big, 2, 1, barred=True).verdict
        # Unattainable: 2*18 == 3*12 forces equal indices on subsets {1,4}
        # and {2,3} of every orthogonal array over this profile.
        assert is_pdimoa_star(big, 2).verdict, (
            "no distinct-index orthogonal array exists on (2,3,12,18):"
            " subsets {1,4} and {2,3} share the level product 36, so their"
            " indices coincide at every size"
        )


def _truncate_cases(la12, la24_wide, la24_narrow, la42):
    bases = [
        la12, la24_wide, la24_narrow, la42,
        full_factorial((2, 2, 2), 2), full_factorial((2, 2, 3), 2),
        full_factorial((2, 3, 3), 2), full_factorial((2, 2, 4), 2),
        full_factorial((2, 2, 2, 2), 2), full_factorial((2, 2, 2, 3), 2),
        build_la_2_3(2, 4, 4), build_la_2_3(2, 4, 5), build_la_2_3(2, 4, 6),
        build_la_2_3(2, 5, 5),
    ]
    return [(a, col) for a in bases for col in range(1, a.k + 1)]


def _derive_cases(la12, la24_wide, la24_narrow, la42):
    cases = []
    for a in (la12, la24_wide, la24_narrow, la42):
        for col in range(1, a.k + 1):
            for symbol in range(a.levels[col - 1]):
                cases.append((a, col, symbol))
    return cases


def _product_cases():
    las = [build_la_1_w(2, 4), build_la_1_w(2, 5), build_la_1_w(2, 6),
           full_factorial((2, 2, 2), 1), full_factorial((2, 2, 3), 1),
           full_factorial((2, 3, 3), 1), full_factorial((2, 2, 4), 1)]
    mcas = [full_factorial((2, 2, 2), 1), full_factorial((2, 2, 3), 1),
            full_factorial((2, 3, 2), 1), full_factorial((3, 2, 2), 1),
            full_factorial((2, 3, 3), 1), full_factorial((3, 3, 2), 1),
            full_factorial((2, 2, 4), 1)]
    cases = [(a, b) for a in las for b in mcas]
    cases.append((full_factorial((2, 2, 2), 2), full_factorial((2, 2, 2), 2)))
    return cases


def _expand_cases(la12, la24_wide, la24_narrow, la42):
    cases = []
    for a in (la12, la24_narrow, la24_wide):
        for col in range(1, a.k + 1):
            v = a.levels[col - 1]
            for new_size in range(v + 1, 2 * v + 1):
                cases.append((a, col, new_size))
    for col, v in ((1, 3), (2, 6), (3, 7)):
        for new_size in range(v + 1, min(2 * v, v + 3) + 1):
            cases.append((la42, col, new_size))
    small = full_factorial((2, 2, 3), 2)
    for col in range(1, 4):
        v = small.levels[col - 1]
        for new_size in range(v + 1, 2 * v + 1):
            cases.append((small, col, new_size))
    return cases


def _roux_one_cases(la12, la24_wide, la24_narrow, la42):
    cases = []
    for a in (la12, la24_wide, la24_narrow):
        for col in range(1, a.k + 1):
            side = derive(a, col, 0)
            for e in (1, 2):
                cases.append((a, side, col, e))
    for col in range(1, 4):
        side = derive(la42, col, 0)
        for e in (1, 2):
            cases.append((la42, side, col, e))
    for levels in ((2, 2, 2), (2, 2, 3), (2, 3, 3)):
        a = full_factorial(levels, 2)
        for col in range(1, 4):
            reduced = tuple(v for i, v in enumerate(levels, 1) if i != col)
            side = full_factorial(reduced, 1)
            for e in (1, 2):
                cases.append((a, side, col, e))
    return cases


def _roux_two_cases():
    cases = []
    for levels in ((2, 2, 2, 2), (2, 2, 2, 3), (2, 2, 3, 3)):
        a = full_factorial(levels, 3)
        for i in range(1, 4):
            for j in range(i + 1, 5):
                b = full_factorial(
                    tuple(v for c, v in enumerate(levels, 1) if c != i), 2
                )
                c = full_factorial(
                    tuple(v for c_, v in enumerate(levels, 1) if c_ != j), 2
                )
                d = full_factorial(
                    tuple(
                        v
                        for c_, v in enumerate(levels, 1)
                        if c_ not in (i, j)
                    ),
                    1,
                )
                for p, q in ((1, 1), (2, 1), (1, 2)):
                    cases.append((a, b, c, d, i, j, p, q))
    return cases


def test_criterion_5_recursive_closure(la12, la24_wide, la24_narrow, la42):
    with criterion(5, "recursive closure with exact size bookkeeping", 120.0):
        cases = _truncate_cases(la12, la24_wide, la24_narrow, la42)
        assert len(cases) >= 50
        for a, col in cases:
            out = truncate(a, col)
            assert out.n_rows == a.n_rows
            assert is_locating(out, out.t, 1, barred=True).verdict

        cases = _derive_cases(la12, la24_wide, la24_narrow, la42)
        assert len(cases) >= 50
        for a, col, symbol in cases:
            out = derive(a, col, symbol)
            assert out.n_rows == int(
                (a.values[:, col - 1] == symbol).sum()
            )
            assert is_locating(out, a.t - 1, 1, barred=True).verdict

        cases = _product_cases()
        assert len(cases) >= 50
        for a, b in cases:
            out = product(a, b)
            assert out.n_rows == a.n_rows * b.n_rows
            assert is_locating(out, out.t, 1, barred=True).verdict

        cases = _expand_cases(la12, la24_wide, la24_narrow, la42)
        assert len(cases) >= 50
        for a, col, new_size in cases:
            out = grow(a, col, new_size)
            assert out.n_rows == 2 * a.n_rows
            assert out.levels[col - 1] == new_size
            assert is_locating(out, out.t, 1, barred=True).verdict

        cases = _roux_one_cases(la12, la24_wide, la24_narrow, la42)
        assert len(cases) >= 50
        for a, side, col, e in cases:
            out = roux_one(a, side, col, e)
            assert out.n_rows == a.n_rows + e * side.n_rows
            assert is_locating(out, out.t, 1, barred=True).verdict

        cases = _roux_two_cases()
        assert len(cases) >= 50
        for a, b, c, d, i, j, p, q in cases:
            out = roux_two(a, b, c, d, i, j, p, q)
            assert out.n_rows == (
                a.n_rows + p * b.n_rows + q * c.n_rows + p * q * d.n_rows
            )
            assert is_locating(out, out.t, 1, barred=True).verdict


def test_criterion_6_decoder_round_trip(la12, la24_wide, la24_narrow, la42):
    with criterion(6, "decoder round trip on five verified arrays", 30.0):
        corpus = [la12, la42, la24_wide, la24_narrow, build_la_2_3(2, 4, 6)]
        for a in corpus:
            locator = Locator(a)  # verifies the array
            assert locator.locate(simulate_outcomes(a, None)).kind == "no-fault"
            for fault in enumerate_interactions(a.profile, a.t):
                diagnosis = locator.locate(simulate_outcomes(a, fault))
                assert diagnosis.kind == "located"
                assert diagnosis.interaction == fault


def test_criterion_7_search_reproduces_published_sizes(annealed):
    with criterion(7, "annealing reaches all six published sizes", 720.0):
        for levels, n in TABLE:
            arr = annealed[levels]
            assert arr.n_rows == n
            assert arr.levels == levels
            assert is_locating(arr, 2, 1, barred=True).verdict
            with pytest.raises(ValueError, match="lower bound"):
                anneal(LevelProfile(levels, 2), SearchParams(n_rows=n - 1))


def test_criterion_8_expansion_reaches_next_bound(annealed):
    with criterion(8, "doubling the 16-row (2,2,3,4) array is optimal", 5.0):
        base = annealed[(2, 2, 3, 4)]
        out = expand_level(base, 4, 8)
        assert out.n_rows == 32
        assert out.levels == (2, 2, 3, 8)
        assert is_locating(out, 2, 1, barred=True).verdict
        assert out.n_rows == lower_bound(LevelProfile((2, 2, 3, 8), 2)).value


def test_criterion_9_barred_equivalence_on_random_arrays():
    with criterion(9, "barred = plain + covering on 200 random arrays", 60.0):
        rng = random.Random(1234)
        both = {True: 0, False: 0}
        for _ in range(200):
            profile = random_profile(rng)
            a = random_array(rng, profile, rng.randint(6, 30))
            barred = is_locating(a, profile.t, 1, barred=True).verdict
            unbarred = is_locating(a, profile.t, 1, barred=False).verdict
            covering = is_mca(a, profile.t, 1).verdict
            assert barred == (unbarred and covering)
            both[barred] += 1
        assert both[True] and both[False]

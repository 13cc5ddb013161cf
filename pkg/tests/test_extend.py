import random

import pytest

from bergeham import (
    Coloring,
    HyperParams,
    build_candidates,
    extend_greedy_ordered,
    extend_matching,
    verify_berge_cycle,
)


def uniform(n, r, k=1):
    p = HyperParams(n, r, k)
    return Coloring(p, [1] * p.edge_count)


def sdr_brute(pools):
    """Independent exhaustive SDR decision (plain depth-first, no matching)."""

    def go(i, used):
        if i == len(pools):
            return True
        return any(e not in used and go(i + 1, used | {e}) for e in pools[i])

    return go(0, frozenset())


def random_table(rng):
    n = rng.randint(4, 8)
    p = HyperParams(n, 3, 2)
    coloring = Coloring(p, [rng.randint(1, 2) for _ in range(p.edge_count)])
    core = list(range(n))
    rng.shuffle(core)
    return build_candidates(tuple(core), rng.randint(1, 2), coloring)


class TestBuildCandidates:
    def test_counts_forced_small(self):
        table = build_candidates((0, 1, 2, 3), 1, uniform(4, 3))
        assert [len(c) for c in table.candidates] == [2, 2, 2, 2]

    def test_absent_color_gives_empty_lists(self):
        table = build_candidates((0, 1, 2, 3), 2, uniform(4, 3, k=2))
        assert all(not c for c in table.candidates)

    def test_three_candidates_each(self):
        table = build_candidates((0, 1, 2, 3, 4), 1, uniform(5, 4))
        assert [len(c) for c in table.candidates] == [3, 3, 3, 3, 3]

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            build_candidates((0, 1, 2, 2), 1, uniform(4, 3))

    def test_cap_recorded(self):
        table = build_candidates((0, 1, 2, 3, 4), 1, uniform(5, 4), cap=1)
        assert table.cap == 1
        assert table.truncated == frozenset(range(5))
        assert all(len(c) == 1 for c in table.candidates)


class TestMatching:
    def test_uniform_n5_r4_succeeds(self):
        coloring = uniform(5, 4)
        table = build_candidates((0, 1, 2, 3, 4), 1, coloring)
        cycle = extend_matching(table)
        assert cycle is not None
        assert verify_berge_cycle(cycle, coloring) is None

    def test_pigeonhole_three_edges(self):
        # only 3 hyperedges carry the target color; 4 positions cannot be distinct
        p = HyperParams(4, 3, 2)
        coloring = Coloring(p, [1, 1, 1, 2])
        table = build_candidates((0, 1, 2, 3), 1, coloring)
        assert extend_matching(table) is None

    def test_empty_position_fails(self):
        table = build_candidates((0, 1, 2, 3), 2, uniform(4, 3, k=2))
        assert extend_matching(table) is None

    def test_capped_failure_retries_uncapped(self):
        coloring = uniform(5, 4)
        capped = build_candidates((0, 1, 2, 3, 4), 1, coloring, cap=1)
        # every position holds only its lowest-index superset; collisions are
        # guaranteed, so success proves the uncapped fallback ran
        cycle = extend_matching(capped)
        assert cycle is not None
        assert verify_berge_cycle(cycle, coloring) is None

    def test_matches_brute_force_sdr(self):
        rng = random.Random(61)
        for _ in range(100):
            table = random_table(rng)
            got = extend_matching(table)
            expect = sdr_brute(table.candidates)
            assert (got is not None) == expect
            if got is not None:
                assert verify_berge_cycle(got, table.coloring) is None

    def test_rotation_invariance(self):
        rng = random.Random(67)
        for _ in range(40):
            table = random_table(rng)
            base = extend_matching(table) is not None
            n = len(table.core)
            s = rng.randrange(1, n)
            rotated = build_candidates(
                table.core[s:] + table.core[:s], table.color, table.coloring
            )
            assert (extend_matching(rotated) is not None) == base


class TestGreedyOrdered:
    def test_reserved_everywhere_is_identity(self):
        coloring = uniform(5, 4)
        table = build_candidates((0, 1, 2, 3, 4), 1, coloring)
        match = extend_matching(table)
        reserved = dict(enumerate(match.edges))
        got = extend_greedy_ordered(table, reserved)
        assert got is not None
        assert got.edges == match.edges

    def test_unreserved_small_square(self):
        coloring = uniform(4, 3)
        table = build_candidates((0, 1, 2, 3), 1, coloring)
        cycle = extend_greedy_ordered(table)
        assert cycle is not None
        assert verify_berge_cycle(cycle, coloring) is None

    def test_greedy_incomplete_where_matching_succeeds(self):
        # lowest-index choices exhaust the wraparound position on K_5^4
        coloring = uniform(5, 4)
        table = build_candidates((0, 1, 2, 3, 4), 1, coloring)
        assert extend_greedy_ordered(table) is None
        assert extend_matching(table) is not None

    def test_bad_reservation_rejected(self):
        coloring = uniform(4, 3, k=2)
        table = build_candidates((0, 1, 2, 3), 1, coloring)
        with pytest.raises(ValueError):
            extend_greedy_ordered(table, {0: 3})  # edge {1,2,3} misses v_1=0

    def test_duplicate_reservations_fail_soft(self):
        coloring = uniform(4, 3)
        table = build_candidates((0, 1, 2, 3), 1, coloring)
        e = table.candidates[0][0]
        assert e in table.candidates[1]  # {0,1,2} covers both (0,1) and (1,2)
        assert extend_greedy_ordered(table, {0: e, 1: e}) is None

    def test_greedy_success_implies_matching_success(self):
        rng = random.Random(71)
        for _ in range(80):
            table = random_table(rng)
            greedy = extend_greedy_ordered(table)
            if greedy is not None:
                assert extend_matching(table) is not None
                assert verify_berge_cycle(greedy, table.coloring) is None

"""Synthetic colorings that steer the constructive pipeline into each branch.

These are hand-built instances, not representatives of extremal colorings;
they exist so the maximal-split (case 1) and non-maximal-split (case 2)
constructions run end to end at desk scale.
"""

from __future__ import annotations

from .hypercore import Coloring, HyperParams, iter_colex_edges


def case1_fixture() -> Coloring:
    """r=5, n=12, k=4: every hyperedge containing {0,1,2} has color 4.

    All C(9,2) = 36 hyperedges through Y = {0,1,2} are color 4, the rest are
    striped over colors 1..3.  With default thresholds the witness search
    lands on f = r-2 with Y as the avoidance set, color 4 renamed last, and
    the auxiliary graph is complete off Y, so the full pipeline produces a
    color-4 Hamiltonian Berge-cycle.
    """
    params = HyperParams(12, 5, 4)
    colors = []
    for t, e in enumerate(iter_colex_edges(12, 5)):
        if 0 in e and 1 in e and 2 in e:
            colors.append(4)
        else:
            colors.append(1 + t % 3)
    return Coloring(params, colors)


# Per-vertex color constraints for the case-2 fixture: a hyperedge through
# vertex 0 may only take colors allowed by every other vertex it contains.
# Pairs {0, y} then lack exactly the colors outside allowed(y), which pins the
# witness structure at x = 0.
_CASE2_ALLOWED = {1: (2, 3, 4), 2: (1, 3, 4), 3: (1, 2, 4)}


def _case2_allowed(y: int) -> tuple[int, ...]:
    if y in _CASE2_ALLOWED:
        return _CASE2_ALLOWED[y]
    if 5 <= y <= 16:
        return (1, 2, 3)
    return (1, 2, 3, 4)


def case2_fixture() -> Coloring:
    """r=5, n=24, k=4: forced f = 0 witness at x = 0 with color 1 dominant.

    Designed for good_threshold=2 and d_bound=0.  At vertex 0 the bad-pair
    sets are Ubar_1 = {1}, Ubar_2 = {2}, Ubar_3 = {3} and Ubar_4 = {5..16}
    (sizes 1, 1, 1, 12), no other vertex carries a full profile, every color
    touches every vertex, and no pair lacks two colors at once, so no split
    f >= 1 survives and the search must take the non-maximal branch.

    Hyperedges through 0 take the smallest-allowed-color stripe; the one
    infeasible family {0,1,2,3,y} for y in 5..16 goes to color 4, which each
    pair {0,y} tolerates exactly once under threshold 2.  Hyperedges avoiding
    0 are striped over all four colors.
    """
    params = HyperParams(24, 5, 4)
    colors = []
    for t, e in enumerate(iter_colex_edges(24, 5)):
        if 0 not in e:
            colors.append(1 + t % 4)
            continue
        allowed = set(range(1, 5))
        for y in e[1:]:
            allowed &= set(_case2_allowed(y))
        if not allowed:
            colors.append(4)
        else:
            pool = sorted(allowed)
            colors.append(pool[t % len(pool)])
    return Coloring(params, colors)

"""Turning a core vertex sequence into a monochromatic Berge-cycle.

Position i of a candidate table lists the hyperedges of the target color
containing the consecutive core pair (v_i, v_{i+1 mod n}); positions are
0-based here.  A cycle needs one *distinct* hyperedge per position, i.e. a
system of distinct representatives.

Two strategies: `extend_matching` decides SDR existence exactly via
augmenting-path bipartite matching; `extend_greedy_ordered` assigns positions
in order, honoring reserved hyperedges, picking the lowest unused candidate
otherwise.  Greedy is sound but incomplete; matching is complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .hypercore import (
    BergeCycle,
    Coloring,
    pair_supersets,
    unrank_edge,
    verify_berge_cycle,
)


@dataclass
class CandidateTable:
    """Per-position candidate hyperedge indices for a core sequence and color.

    Candidate lists are ascending and may be capped (`cap` edges per position,
    default 4n); positions whose full lists were longer are recorded in
    `truncated` so callers can fall back to an uncapped pass.
    """

    core: tuple[int, ...]
    color: int
    coloring: Coloring
    candidates: list[list[int]]
    cap: Optional[int]
    truncated: frozenset[int] = field(default_factory=frozenset)

    def position_pair(self, i: int) -> tuple[int, int]:
        n = len(self.core)
        return self.core[i], self.core[(i + 1) % n]

    def is_candidate(self, i: int, edge_index: int) -> bool:
        """Membership in the conceptual (uncapped) candidate list."""
        if self.coloring.color_of(edge_index) != self.color:
            return False
        members = unrank_edge(edge_index, self.coloring.params)
        u, v = self.position_pair(i)
        return u in members and v in members

    def full_candidates(self, i: int) -> list[int]:
        u, v = self.position_pair(i)
        return [
            e
            for e in pair_supersets(u, v, self.coloring.params)
            if self.coloring.color_of(e) == self.color
        ]

    def uncapped(self) -> "CandidateTable":
        if not self.truncated:
            return self
        full = [
            self.full_candidates(i) if i in self.truncated else list(c)
            for i, c in enumerate(self.candidates)
        ]
        return CandidateTable(self.core, self.color, self.coloring, full, None)


def build_candidates(
    core: Sequence[int],
    color: int,
    coloring: Coloring,
    cap: Optional[int] = -1,
) -> CandidateTable:
    """Candidate table for a core permutation and target color.

    cap=-1 applies the default per-position cap of 4n (lowest indices kept);
    cap=None disables capping.
    """
    p = coloring.params
    n = p.n
    if sorted(core) != list(range(n)):
        raise ValueError("core must be a permutation of the vertices")
    if not 1 <= color <= p.k:
        raise ValueError(f"color {color} out of range")
    if cap == -1:
        cap = 4 * n
    core = tuple(core)
    cands: list[list[int]] = []
    truncated = []
    for i in range(n):
        u, v = core[i], core[(i + 1) % n]
        full = [
            e
            for e in pair_supersets(u, v, p)
            if coloring.colors[e] == color
        ]
        if cap is not None and len(full) > cap:
            truncated.append(i)
            full = full[:cap]
        cands.append(full)
    return CandidateTable(core, color, coloring, cands, cap, frozenset(truncated))


def _augment(
    pos: int,
    cands: list[list[int]],
    owner: dict[int, int],
    visited: set[int],
) -> bool:
    for e in cands[pos]:
        if e in visited:
            continue
        visited.add(e)
        if e not in owner or _augment(owner[e], cands, owner, visited):
            owner[e] = pos
            return True
    return False


def max_position_matching(
    cands: list[list[int]], work_counter: Optional[list[int]] = None
) -> dict[int, int]:
    """Maximum matching positions -> candidate values (augmenting paths)."""
    owner: dict[int, int] = {}
    for pos in range(len(cands)):
        if work_counter is not None:
            work_counter[0] += 1
        _augment(pos, cands, owner, set())
    return {pos: e for e, pos in owner.items()}

def _finish(table: CandidateTable, assignment: Sequence[int]) -> BergeCycle:
    cycle = BergeCycle(table.core, tuple(assignment), table.color)
    bad = verify_berge_cycle(cycle, table.coloring)
    if bad is not None:
        raise RuntimeError(f"extension produced an invalid cycle: {bad}")
    return cycle


def extend_matching(
    table: CandidateTable, work_counter: Optional[list[int]] = None
) -> Optional[BergeCycle]:
    """Exact extension: a cycle exists iff positions admit a perfect matching.

    A capped table that fails to match is automatically retried uncapped.
    """
    n = len(table.core)
    match = max_position_matching(table.candidates, work_counter)
    if len(match) < n and table.truncated:
        table = table.uncapped()
        match = max_position_matching(table.candidates, work_counter)
    if len(match) < n:
        return None
    return _finish(table, [match[i] for i in range(n)])


def extend_greedy_ordered(
    table: CandidateTable,
    reserved: Optional[dict[int, int]] = None,
) -> Optional[BergeCycle]:
    """Ordered extension: positions assigned ascending, reservations verbatim.

    Free positions take their lowest-index unused candidate (consulting the
    uncapped list when a capped one runs dry).  Returns None when some
    position cannot be served; a reserved edge that is not a candidate for its
    position raises ValueError.
    """
    reserved = reserved or {}
    n = len(table.core)
    for pos, e in reserved.items():
        if not 0 <= pos < n:
            raise ValueError(f"reserved position {pos} out of range")
        if not table.is_candidate(pos, e):
            raise ValueError(
                f"reserved edge {e} is not a candidate for position {pos}"
            )
    used: set[int] = set()
    assignment: list[int] = []
    for i in range(n):
        if i in reserved:
            e = reserved[i]
            if e in used:
                return None
            assignment.append(e)
            used.add(e)
            continue
        pool = table.candidates[i]
        pick = next((e for e in pool if e not in used), None)
        if pick is None and i in table.truncated:
            pick = next(
                (e for e in table.full_candidates(i) if e not in used), None
            )
        if pick is None:
            return None
        assignment.append(pick)
        used.add(pick)
    return _finish(table, assignment)

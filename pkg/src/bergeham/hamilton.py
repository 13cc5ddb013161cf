"""Hamiltonicity engines.

Sufficient conditions (Dirac, Chvatal), the degree-sum closure with a
constructive cycle transfer, and an exact backtracking finder.  The finder's
default strategy: close the graph, find a cycle in the closure (trivial when
the closure is complete), then peel the added edges in reverse order via the
transfer step, so the closure lemma does the heavy lifting.

Budgets are node-expansion counts, never wall clock, so verdicts are
reproducible.  Exhausting a budget raises SearchBudgetExceeded; a plain None
from the finder means "proven non-Hamiltonian".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import Graph, _bits


class SearchBudgetExceeded(Exception):
    """A bounded search ran out of node expansions before reaching a verdict."""


@dataclass(frozen=True)
class CycleCertificate:
    """A Hamiltonian cycle given as a vertex order; wraparound edge included."""

    order: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        n = g.n
        if len(self.order) != n or set(self.order) != set(range(n)):
            raise ValueError("certificate order is not a permutation of the vertices")
        for i in range(n):
            u, v = self.order[i], self.order[(i + 1) % n]
            if not g.has_edge(u, v):
                raise ValueError(f"certificate uses missing edge ({u},{v})")

    def uses_edge(self, u: int, v: int) -> bool:
        n = len(self.order)
        pos = {w: i for i, w in enumerate(self.order)}
        d = abs(pos[u] - pos[v])
        return d == 1 or d == n - 1


def dirac_check(g: Graph) -> bool:
    """Minimum degree at least n/2 (integer form: 2*deg >= n)."""
    if g.n < 3:
        raise ValueError("Dirac condition needs n >= 3")
    return all(2 * g.degree(v) >= g.n for v in range(g.n))


def chvatal_check(g: Graph) -> bool:
    """Chvatal degree-sequence condition.

    With d_1 <= ... <= d_n: for every i with 1 <= i < n/2, d_i <= i must imply
    d_{n-i} >= n - i.
    """
    n = g.n
    if n < 3:
        raise ValueError("Chvatal condition needs n >= 3")
    d = sorted(g.degrees())
    for i in range(1, n):
        if 2 * i >= n:
            break
        if d[i - 1] <= i and d[n - i - 1] < n - i:
            return False
    return True


def closure_order(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Degree-sum closure plus the edges added, in addition order.

    Repeatedly adds uv for nonadjacent u, v with deg(u) + deg(v) >= n until no
    pair qualifies.  Scans pairs ascending, repeating passes to the fixpoint,
    so the addition order is deterministic.
    """
    n = g.n
    masks = [g.adjacency_mask(v) for v in range(n)]
    degs = [m.bit_count() for m in masks]
    added: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not masks[u] >> v & 1 and degs[u] + degs[v] >= n:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
                    degs[u] += 1
                    degs[v] += 1
                    added.append((u, v))
                    changed = True
    return Graph._from_masks(masks), added


def closure(g: Graph) -> Graph:
    """The Bondy-Chvatal closure of g."""
    return closure_order(g)[0]


def _transfer_order(
    masks: list[int], n: int, u: int, v: int, order: tuple[int, ...]
) -> tuple[int, ...]:
    """Rewire a cycle of g+uv that uses uv into a cycle of g (crossing pair)."""
    pos = {w: i for i, w in enumerate(order)}
    iu, iv = pos[u], pos[v]
    if (iv - iu) % n != 1:
        u, v = v, u
        iu, iv = iv, iu
    # v directly follows u; walking backward from u traverses the rest of the
    # cycle, giving a path p[0]=u ... p[n-1]=v that avoids the uv edge
    p = [order[(iu - t) % n] for t in range(n)]
    assert p[0] == u and p[-1] == v
    for j in range(1, n - 1):
        if masks[u] >> p[j + 1] & 1 and masks[v] >> p[j] & 1:
            return tuple(p[: j + 1] + p[j + 1 :][::-1])
    raise AssertionError("degree-sum precondition guarantees a crossing pair")


def transfer_cycle(
    g: Graph, u: int, v: int, cert: CycleCertificate
) -> CycleCertificate:
    """Convert a Hamiltonian cycle of g+uv into one of g.

    Requires deg(u) + deg(v) >= n in g.  If the certificate does not use the
    edge uv it is returned unchanged.
    """
    n = g.n
    if g.degree(u) + g.degree(v) < n:
        raise ValueError(
            f"degree sum {g.degree(u)}+{g.degree(v)} < n={n}; transfer needs >= n"
        )
    cert.validate(g.with_edges([(u, v)]))
    if g.has_edge(u, v) or not cert.uses_edge(u, v):
        return cert
    masks = [g.adjacency_mask(w) for w in range(n)]
    out = CycleCertificate(_transfer_order(masks, n, u, v, cert.order))
    out.validate(g)
    return out


def _search_cycle(
    masks: list[int], budget: Optional[int], counter: list[int]
) -> Optional[list[int]]:
    """Exact backtracking Hamiltonian-cycle search on adjacency masks.

    Anchored at vertex 0, neighbors explored ascending.  Prunes on isolated
    low-degree leftovers and on disconnection of the unvisited region.
    """
    n = len(masks)
    full = (1 << n) - 1
    for m in masks:
        if m.bit_count() < 2:
            return None
    path = [0]

    def reachable(start_mask: int, allowed: int) -> int:
        seen = start_mask & allowed
        frontier = seen
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= masks[w]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def step(v: int, used: int) -> bool:
        counter[0] += 1
        if budget is not None and counter[0] > budget:
            raise SearchBudgetExceeded(f"node budget {budget} exhausted")
        if used == full:
            return bool(masks[v] >> 0 & 1)
        un = full & ~used
        if not masks[0] & un:
            return False
        for w in _bits(un):
            if (masks[w] & (un | (1 << v) | 1)).bit_count() < 2:
                return False
        if reachable(1 << v, un | (1 << v)) & un != un:
            return False
        for w in _bits(masks[v] & un):
            path.append(w)
            if step(w, used | (1 << w)):
                return True
            path.pop()
        return False

    return path if step(0, 1) else None


def find_hamiltonian_cycle(
    g: Graph,
    max_nodes: Optional[int] = None,
    use_closure: bool = True,
    counter: Optional[list[int]] = None,
) -> Optional[CycleCertificate]:
    """Exact Hamiltonian-cycle finder.

    Returns a validated certificate, or None when the graph is proven
    non-Hamiltonian.  Raises SearchBudgetExceeded when the node budget runs
    out, so an undecided search is never mistaken for a proof of absence.

    With use_closure (default) the search runs on the closure and the added
    edges are peeled off in reverse order via transfer_cycle; set it False for
    plain backtracking on g itself.  `counter`, when given, accumulates node
    expansions in its first slot.
    """
    n = g.n
    if n < 3:
        raise ValueError("Hamiltonian cycles need n >= 3")
    if counter is None:
        counter = [0]
    if not use_closure:
        found = _search_cycle([g.adjacency_mask(v) for v in range(n)], max_nodes, counter)
        if found is None:
            return None
        cert = CycleCertificate(tuple(found))
        cert.validate(g)
        return cert
    closed, added = closure_order(g)
    full = (1 << n) - 1
    masks = [closed.adjacency_mask(v) for v in range(n)]
    if all(m == full ^ (1 << v) for v, m in enumerate(masks)):
        order = tuple(range(n))
    else:
        found = _search_cycle(masks, max_nodes, counter)
        if found is None:
            return None  # g is a subgraph of its closure
        order = tuple(found)
    for u, v in reversed(added):
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        pos = {w: i for i, w in enumerate(order)}
        if (pos[u] - pos[v]) % n in (1, n - 1):
            order = _transfer_order(masks, n, u, v, order)
    cert = CycleCertificate(order)
    cert.validate(g)
    return cert


def iter_hamiltonian_cycles(
    g: Graph,
    max_nodes: Optional[int] = None,
    counter: Optional[list[int]] = None,
) -> Iterator[CycleCertificate]:
    """Enumerate all Hamiltonian cycles, one per rotation/reflection class.

    Cycles are anchored at vertex 0 with second vertex < last vertex, yielded
    in lexicographic order of that canonical form.  `counter`, when given,
    accumulates node expansions in its first slot and max_nodes caps it.
    """
    n = g.n
    if n < 3:
        raise ValueError("Hamiltonian cycles need n >= 3")
    full = (1 << n) - 1
    masks = [g.adjacency_mask(v) for v in range(n)]
    if any(m.bit_count() < 2 for m in masks):
        return
    if counter is None:
        counter = [0]
    path = [0]

    def step(v: int, used: int) -> Iterator[CycleCertificate]:
        counter[0] += 1
        if max_nodes is not None and counter[0] > max_nodes:
            raise SearchBudgetExceeded(f"node budget {max_nodes} exhausted")
        if used == full:
            if masks[v] >> 0 & 1 and path[1] < path[-1]:
                yield CycleCertificate(tuple(path))
            return
        un = full & ~used
        if not masks[0] & un:
            return
        for w in _bits(un):
            if (masks[w] & (un | (1 << v) | 1)).bit_count() < 2:
                return
        for w in _bits(masks[v] & un):
            path.append(w)
            yield from step(w, used | (1 << w))
            path.pop()

    yield from step(0, 1)

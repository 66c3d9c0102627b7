"""Finite posets given by their cover relations.

Elements are opaque string identifiers. Internally every element gets a dense
index in input order, and everything that iterates over elements or covers does
so in that order, which keeps all downstream enumeration reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CycleError, UnknownElementError


@dataclass(frozen=True)
class Poset:
    """A finite poset stored as its Hasse diagram.

    Use :func:`build_poset` to construct one; it normalizes arbitrary order
    relations and guarantees the invariants (acyclic, transitively reduced).
    """

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _up(self) -> tuple[frozenset[int], ...]:
        # reflexive up-sets by index
        above = [[] for _ in self.elements]
        for p, q in self.covers:
            above[self.index[p]].append(self.index[q])
        return tuple(_reachable(above, i) for i in range(len(self.elements)))

    @cached_property
    def _down(self) -> tuple[frozenset[int], ...]:
        down = [set() for _ in self.elements]
        for i, ups in enumerate(self._up):
            for j in ups:
                down[j].add(i)
        return tuple(frozenset(d) for d in down)

    @cached_property
    def _lower_covers(self) -> dict[str, tuple[str, ...]]:
        out = {e: [] for e in self.elements}
        for p, q in self.covers:
            out[q].append(p)
        return {e: tuple(v) for e, v in out.items()}

    @cached_property
    def _upper_covers(self) -> dict[str, tuple[str, ...]]:
        out = {e: [] for e in self.elements}
        for p, q in self.covers:
            out[p].append(q)
        return {e: tuple(v) for e, v in out.items()}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element) -> bool:
        return element in self.index

    def _idx(self, element: str) -> int:
        try:
            return self.index[element]
        except KeyError:
            raise UnknownElementError(element) from None

    def less_or_equal(self, p: str, q: str) -> bool:
        return self._idx(q) in self._up[self._idx(p)]

    def less(self, p: str, q: str) -> bool:
        return p != q and self.less_or_equal(p, q)

    def comparable(self, p: str, q: str) -> bool:
        return self.less_or_equal(p, q) or self.less_or_equal(q, p)

    def up_set(self, p: str) -> list[str]:
        """All q >= p, in element order."""
        return [self.elements[j] for j in sorted(self._up[self._idx(p)])]

    def down_set(self, p: str) -> list[str]:
        """All q <= p, in element order."""
        return [self.elements[j] for j in sorted(self._down[self._idx(p)])]

    def lower_covers(self, p: str) -> tuple[str, ...]:
        self._idx(p)
        return self._lower_covers[p]

    def upper_covers(self, p: str) -> tuple[str, ...]:
        self._idx(p)
        return self._upper_covers[p]

    def neighbors(self, p: str) -> tuple[str, ...]:
        """Hasse-diagram neighbours of ``p`` (lower covers first)."""
        return self.lower_covers(p) + self.upper_covers(p)

    def is_cover(self, p: str, q: str) -> bool:
        return q in self.upper_covers(p)

    def interval(self, a: str, b: str) -> set[str]:
        """The closed interval ``{p : a <= p <= b}``; empty unless ``a <= b``."""
        ia, ib = self._idx(a), self._idx(b)
        members = self._up[ia] & self._down[ib]
        return {self.elements[i] for i in members}

    def linear_extension(self) -> list[str]:
        """Topological order; ties broken by smallest input index."""
        import heapq

        indegree = [0] * len(self.elements)
        for _, q in self.covers:
            indegree[self.index[q]] += 1
        heap = [i for i, d in enumerate(indegree) if d == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            i = heapq.heappop(heap)
            order.append(self.elements[i])
            for q in self._upper_covers[self.elements[i]]:
                j = self.index[q]
                indegree[j] -= 1
                if indegree[j] == 0:
                    heapq.heappush(heap, j)
        return order

    def relations(self) -> list[tuple[str, str]]:
        """Every strict relation ``p < q``."""
        return [
            (p, self.elements[j])
            for i, p in enumerate(self.elements)
            for j in sorted(self._up[i])
            if j != i
        ]

    def induced(self, subset: Iterable[str]) -> "Poset":
        """The induced subposet on ``subset`` (element order preserved)."""
        keep = set(subset)
        for e in keep:
            self._idx(e)
        elements = [e for e in self.elements if e in keep]
        rel = [(p, q) for p, q in self.relations() if p in keep and q in keep]
        return build_poset(elements, rel)

    def connected_components(self) -> list["Poset"]:
        """Components of the Hasse diagram as induced subposets, ordered by
        their smallest element index."""
        seen: set[str] = set()
        components = []
        for e in self.elements:
            if e in seen:
                continue
            stack, comp = [e], {e}
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            components.append(self.induced(comp))
        return components


def _reachable(adjacency: Sequence[Sequence[int]], start: int) -> frozenset[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def build_poset(elements: Iterable[str], relations: Iterable[tuple[str, str]] = ()) -> Poset:
    """Build a poset from elements and arbitrary strict relations ``p < q``.

    The relations are closed transitively and reduced to covers. Raises
    :class:`CycleError` if they imply ``p < p`` and
    :class:`UnknownElementError` for endpoints that are not elements.
    """
    elements = tuple(elements)
    index: dict[str, int] = {}
    for e in elements:
        if not isinstance(e, str):
            raise TypeError(f"element identifiers must be strings, got {e!r}")
        if e in index:
            raise ValueError(f"duplicate element {e!r}")
        index[e] = len(index)

    n = len(elements)
    succ: list[list[int]] = [[] for _ in range(n)]
    for p, q in relations:
        if p not in index:
            raise UnknownElementError(p)
        if q not in index:
            raise UnknownElementError(q)
        if p == q:
            raise CycleError([p, p])
        succ[index[p]].append(index[q])

    # strict up-sets by DFS from each successor
    strict_up = []
    for i in range(n):
        reach: set[int] = set()
        for j in succ[i]:
            reach |= _reachable(succ, j)
        if i in reach:
            raise CycleError(_find_cycle(elements, succ, i))
        strict_up.append(reach)

    covers = []
    for i in range(n):
        for j in sorted(strict_up[i]):
            if not any(j in strict_up[k] for k in strict_up[i] if k != j):
                covers.append((elements[i], elements[j]))
    return Poset(elements, tuple(covers))


def _find_cycle(elements, succ, start):
    # BFS back to start to produce a readable witness
    parent = {start: None}
    queue = [start]
    while queue:
        v = queue.pop(0)
        for w in succ[v]:
            if w == start:
                path = [v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return [elements[k] for k in path] + [elements[start]]
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return [elements[start], elements[start]]


def disjoint_union_posets(first: Poset, second: Poset) -> Poset:
    overlap = set(first.elements) & set(second.elements)
    if overlap:
        raise ValueError(f"posets are not disjoint: {sorted(overlap)}")
    return Poset(first.elements + second.elements, first.covers + second.covers)

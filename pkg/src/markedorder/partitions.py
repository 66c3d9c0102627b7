"""Set partitions of a marked poset's ground set and the block-level predicates
(connectedness, compatibility, refinement).

Face-partition recognition and enumeration live in :mod:`markedorder.faces`
because they need the quotient construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .errors import PartitionError

if TYPE_CHECKING:
    from .marked import MarkedPoset


@dataclass(frozen=True)
class Partition:
    """Blocks in canonical order: members sorted by element index, blocks
    sorted by their smallest index. ``free[i]`` is true iff block ``i``
    contains no marked element."""

    blocks: tuple[tuple[str, ...], ...]
    free: tuple[bool, ...]
    encoding: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def free_blocks(self) -> list[tuple[str, ...]]:
        return [b for b, f in zip(self.blocks, self.free) if f]

    @property
    def n_free(self) -> int:
        return sum(self.free)

    def block_map(self) -> dict[str, int]:
        return {p: i for i, block in enumerate(self.blocks) for p in block}

    def block_of(self, element: str) -> tuple[str, ...]:
        for block in self.blocks:
            if element in block:
                return block
        raise KeyError(element)

    def __str__(self) -> str:
        parts = []
        for block, free in zip(self.blocks, self.free):
            body = " ".join(block)
            parts.append(f"({body})" if free else f"[{body}]")
        return " ".join(parts)


def block_name(block: Iterable[str]) -> str:
    """Identifier of a block in a quotient poset."""
    return "+".join(sorted(block))


def make_partition(M: "MarkedPoset", blocks: Iterable[Iterable[str]]) -> Partition:
    index = M.poset.index
    seen: set[str] = set()
    encoded = []
    for block in blocks:
        members = list(block)
        if not members:
            raise PartitionError("empty block")
        for p in members:
            if p not in index:
                raise PartitionError(f"unknown element {p!r}")
            if p in seen:
                raise PartitionError(f"element {p!r} appears in two blocks")
            seen.add(p)
        encoded.append(tuple(sorted(index[p] for p in members)))
    if len(seen) != len(index):
        missing = [e for e in M.poset.elements if e not in seen]
        raise PartitionError(f"elements not covered by any block: {missing}")
    encoded.sort()
    elements = M.poset.elements
    marked = M.marking
    named = tuple(tuple(elements[i] for i in enc) for enc in encoded)
    free = tuple(not any(p in marked for p in block) for block in named)
    return Partition(named, free, tuple(encoded))


def singletons(M: "MarkedPoset") -> Partition:
    return make_partition(M, [[e] for e in M.poset.elements])


def _block_reach(M: "MarkedPoset", pi: Partition) -> list[set[int]] | None:
    """Reflexive-transitive closure of ``B <= C`` on block indices, or None
    when the relation has a cycle (not P-compatible)."""
    where = pi.block_map()
    succ = [set() for _ in pi.blocks]
    for p, q in M.poset.covers:
        b, c = where[p], where[q]
        if b != c:
            succ[b].add(c)
    reach = []
    for b in range(len(pi.blocks)):
        seen = {b}
        stack = list(succ[b])
        while stack:
            c = stack.pop()
            if c == b:
                return None
            if c not in seen:
                seen.add(c)
                stack.extend(succ[c])
        reach.append(seen)
    return reach


def is_connected_partition(M: "MarkedPoset", pi: Partition) -> bool:
    """Every block is connected as an induced subposet (comparability graph)."""
    P = M.poset
    for block in pi.blocks:
        comp = {block[0]}
        stack = [block[0]]
        while stack:
            v = stack.pop()
            for w in block:
                if w not in comp and P.comparable(v, w):
                    comp.add(w)
                    stack.append(w)
        if len(comp) != len(block):
            return False
    return True


def is_p_compatible(M: "MarkedPoset", pi: Partition) -> bool:
    return _block_reach(M, pi) is not None


def is_pl_compatible(M: "MarkedPoset", pi: Partition) -> bool:
    """P-compatible, and marks never decrease along ``B <= C`` (including
    ``B == C``, so all marks inside one block agree)."""
    reach = _block_reach(M, pi)
    if reach is None:
        return False
    marks = [[M.marking[p] for p in block if p in M.marking] for block in pi.blocks]
    for b, above in enumerate(reach):
        if not marks[b]:
            continue
        top = max(marks[b])
        for c in above:
            if marks[c] and top > min(marks[c]):
                return False
    return True


def block_order(M: "MarkedPoset", pi: Partition) -> list[tuple[int, int]]:
    """Strict relations ``B < C`` between block indices, for a P-compatible
    partition."""
    reach = _block_reach(M, pi)
    if reach is None:
        raise PartitionError("partition is not P-compatible")
    return [(b, c) for b, above in enumerate(reach) for c in sorted(above) if c != b]


def refines(pi1: Partition, pi2: Partition) -> bool:
    """Every block of ``pi1`` lies inside a block of ``pi2``."""
    where = pi2.block_map()
    return all(len({where[p] for p in block}) == 1 for block in pi1.blocks)

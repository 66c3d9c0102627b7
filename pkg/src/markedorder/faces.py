"""Face partitions: the partition of a point, the face-partition test, and
enumeration of the face lattice of a marked order polyhedron."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import NotInPolyhedronError, SizeLimitError
from .marked import MarkedPoset, is_strict, quotient
from .partitions import (
    Partition,
    is_connected_partition,
    is_p_compatible,
    is_pl_compatible,
    make_partition,
    refines,
)

DEFAULT_MAX_ELEMENTS = 12


def partition_from_point(M: MarkedPoset, x: Mapping[str, Fraction]) -> Partition:
    """Blocks of equal value, split into comparability-connected pieces.

    Gluing along covers with equal endpoint values is enough: if ``p < q`` and
    ``x_p == x_q`` every chain between them is constant as well.
    """
    if not M.contains(x):
        raise NotInPolyhedronError("point is not in the polyhedron")
    parent = {e: e for e in M.poset.elements}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for p, q in M.poset.covers:
        if x[p] == x[q]:
            parent[find(q)] = find(p)
    groups: dict[str, list[str]] = {}
    for e in M.poset.elements:
        groups.setdefault(find(e), []).append(e)
    return make_partition(M, groups.values())


def face_partition_diagnostics(M: MarkedPoset, pi: Partition) -> dict[str, bool]:
    """Each condition of the face-partition characterization separately.

    ``strict_quotient`` is only evaluated (and otherwise False) when the
    partition is (P, lambda)-compatible, since the quotient needs it.
    """
    pl = is_pl_compatible(M, pi)
    return {
        "p_compatible": is_p_compatible(M, pi),
        "pl_compatible": pl,
        "connected": is_connected_partition(M, pi),
        "strict_quotient": pl and is_strict(quotient(M, pi)[0]),
    }


def is_face_partition(M: MarkedPoset, pi: Partition) -> bool:
    if not is_pl_compatible(M, pi) or not is_connected_partition(M, pi):
        return False
    return is_strict(quotient(M, pi)[0])


@dataclass(frozen=True)
class FaceLattice:
    """Non-empty faces as partitions, sorted by (dimension, encoding).

    ``order`` holds index pairs ``(i, j)`` with ``i != j`` such that face ``i``
    is contained in face ``j``, which happens exactly when partition ``j``
    refines partition ``i``.
    """

    nodes: tuple[Partition, ...]
    order: tuple[tuple[int, int], ...]
    dims: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def f_vector(self) -> tuple[int, ...]:
        if not self.dims:
            return ()
        counts = [0] * (max(self.dims) + 1)
        for d in self.dims:
            counts[d] += 1
        return tuple(counts)

    def encodings(self) -> set[tuple[tuple[int, ...], ...]]:
        return {node.encoding for node in self.nodes}


def _candidate_blocks(M: MarkedPoset, seed: str, allowed: set[str]) -> Iterator[frozenset[str]]:
    """Comparability-connected, convex subsets of ``allowed`` containing
    ``seed`` whose marked members all carry the same value."""
    P, lam = M.poset, M.marking
    order = {e: i for i, e in enumerate(P.elements)}
    nbrs = {
        e: sorted((w for w in allowed if w != e and P.comparable(e, w)), key=order.__getitem__)
        for e in allowed
    }

    def convex(block: frozenset[str]) -> bool:
        for p in block:
            for q in block:
                if p != q and P.less(p, q) and not P.interval(p, q) <= block:
                    return False
        return True

    def grow(block, extension, banned):
        # two different marks can never be reconciled by growing further
        if len({lam[p] for p in block if p in lam}) > 1:
            return
        if convex(block):
            yield block
        extension = list(extension)
        while extension:
            w = extension.pop()
            added = [
                u for u in nbrs[w]
                if u not in block and u not in banned and u not in extension
            ]
            yield from grow(block | {w}, extension + added, banned)
            banned = banned | {w}

    yield from grow(frozenset([seed]), list(nbrs[seed]), frozenset([seed]))


def iter_face_partitions(M: MarkedPoset) -> Iterator[Partition]:
    """Every face partition, each exactly once.

    Builds partitions block by block: the block of the first unassigned
    element is chosen among connected convex sets with at most one mark value,
    and finished partitions are filtered through :func:`is_face_partition`.
    """
    elements = M.poset.elements

    def rec(remaining: tuple[str, ...], blocks: list[frozenset[str]]):
        if not remaining:
            pi = make_partition(M, blocks)
            if is_face_partition(M, pi):
                yield pi
            return
        seed = remaining[0]
        allowed = set(remaining)
        for block in _candidate_blocks(M, seed, allowed):
            rest = tuple(e for e in remaining if e not in block)
            yield from rec(rest, blocks + [block])

    yield from rec(tuple(elements), [])


def enumerate_face_partitions(M: MarkedPoset, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FaceLattice:
    if len(M.poset) > max_elements:
        raise SizeLimitError(
            f"poset has {len(M.poset)} elements; face enumeration is limited to {max_elements}"
        )
    nodes = sorted(iter_face_partitions(M), key=lambda pi: (pi.n_free, pi.encoding))
    order = tuple(
        (i, j)
        for i, small in enumerate(nodes)
        for j, big in enumerate(nodes)
        if i != j and refines(big, small)
    )
    return FaceLattice(tuple(nodes), order, tuple(pi.n_free for pi in nodes))

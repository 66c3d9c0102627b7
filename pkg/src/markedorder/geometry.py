"""Geometry of marked order polyhedra: H-representation, points, vertices,
dimension, recession cone, products and the Minkowski decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import EmptyMarkingError, NotAFacePartitionError, NotPointedError
from .faces import DEFAULT_MAX_ELEMENTS, enumerate_face_partitions, is_face_partition
from .hpoly import HPolyhedron
from .marked import MarkedPoset, make_marked_poset, regularize, strictify
from .partitions import Partition, make_partition
from .poset import disjoint_union_posets

ZERO = Fraction(0)
ONE = Fraction(1)


def _unit_row(coords: tuple[str, ...], entries: Mapping[str, int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(entries.get(c, 0)) for c in coords)


def h_representation(M: MarkedPoset) -> HPolyhedron:
    """One row ``x_q - x_p >= 0`` per cover and ``x_a == lambda(a)`` per mark."""
    coords = M.poset.elements
    inequalities = tuple((_unit_row(coords, {q: 1, p: -1}), ZERO) for p, q in M.poset.covers)
    equations = tuple((_unit_row(coords, {a: 1}), v) for a, v in M.marking.items())
    return HPolyhedron(coords, inequalities, equations)


def membership(M: MarkedPoset, x: Mapping[str, Fraction]) -> bool:
    return M.contains(x)


def generic_point(M: MarkedPoset) -> dict[str, Fraction]:
    """A point of the polyhedron that is as strict as the marking allows.

    Unmarked elements are filled in along a linear extension, each taking the
    midpoint between the largest value below and the smallest mark above
    (``lo + 1`` / ``hi - 1`` when one side is missing, 0 when both are). Two
    comparable coordinates coincide only inside a constant interval.
    """
    P = M.poset
    x: dict[str, Fraction] = dict(M.marking)
    for p in P.linear_extension():
        if p in x:
            continue
        below = [x[q] for q in P.down_set(p) if q in x and q != p]
        above = [M.marking[q] for q in P.up_set(p) if q in M.marking]
        lo = max(below) if below else None
        hi = min(above) if above else None
        if lo is None and hi is None:
            x[p] = ZERO
        elif hi is None:
            x[p] = lo + 1
        elif lo is None:
            x[p] = hi - 1
        else:
            x[p] = (lo + hi) / 2
    return {e: x[e] for e in P.elements}


def face_polyhedron(M: MarkedPoset, pi: Partition) -> HPolyhedron:
    """The polyhedron's points that are constant on each block of ``pi``."""
    H = h_representation(M)
    coords = H.coordinates
    rows = []
    for block in pi.blocks:
        root = block[0]
        for p in block[1:]:
            rows.append((_unit_row(coords, {root: 1, p: -1}), ZERO))
    return H.with_equations(rows)


def face_dimension(M: MarkedPoset, pi: Partition) -> int:
    if not is_face_partition(M, pi):
        raise NotAFacePartitionError(f"not a face partition: {pi}")
    return pi.n_free


def dimension(M: MarkedPoset) -> int:
    """Number of unmarked elements after contracting constant intervals."""
    strict, _ = strictify(M)
    return len(strict.unmarked)


def recession_cone(M: MarkedPoset) -> MarkedPoset:
    return make_marked_poset(M.poset, {a: 0 for a in M.marking})


def disjoint_union(M1: MarkedPoset, M2: MarkedPoset) -> MarkedPoset:
    """Marked poset whose polyhedron is the product of the two polyhedra."""
    P = disjoint_union_posets(M1.poset, M2.poset)
    return make_marked_poset(P, {**M1.marking, **M2.marking})


def is_pointed(M: MarkedPoset) -> bool:
    return all(
        any(e in M.marking for e in component.elements)
        for component in M.poset.connected_components()
    )


def pointed_part(M: MarkedPoset) -> MarkedPoset:
    """Restriction to the Hasse components that carry a mark."""
    keep = [
        e
        for component in M.poset.connected_components()
        if any(a in M.marking for a in component.elements)
        for e in component.elements
    ]
    return make_marked_poset(M.poset.induced(keep), M.marking)


def construct_vertex(M: MarkedPoset) -> dict[str, Fraction]:
    """A vertex grown outwards from the marks.

    Repeatedly takes the first undetermined element (in element order) with a
    determined Hasse neighbour and gives it the largest determined value below
    it, or failing that the smallest determined value above it.
    """
    if not len(M.poset):
        raise NotPointedError("the empty poset has no vertex coordinates to construct")
    if not is_pointed(M):
        raise NotPointedError("some connected component carries no mark")
    P = M.poset
    x: dict[str, Fraction] = dict(M.marking)
    while len(x) < len(P):
        p = next(
            e for e in P.elements
            if e not in x and any(n in x for n in P.neighbors(e))
        )
        below = [x[q] for q in P.down_set(p) if q in x]
        if below:
            x[p] = max(below)
        else:
            x[p] = min(x[q] for q in P.up_set(p) if q in x)
    return {e: x[e] for e in P.elements}


def _vertex_of(M: MarkedPoset, pi: Partition) -> dict[str, Fraction]:
    value = {}
    for block in pi.blocks:
        mark = next(M.marking[p] for p in block if p in M.marking)
        for p in block:
            value[p] = mark
    return {e: value[e] for e in M.poset.elements}


def vertices(M: MarkedPoset, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[dict[str, Fraction]]:
    """All vertices, one per face partition without free blocks, sorted by
    their coordinate tuples in element order."""
    if not is_pointed(M):
        raise NotPointedError("polyhedron contains a line; it has no vertices")
    lattice = enumerate_face_partitions(M, max_elements)
    points = [_vertex_of(M, pi) for pi in lattice.nodes if pi.n_free == 0]
    return sorted(points, key=lambda v: tuple(v.values()))


@dataclass(frozen=True)
class MinkowskiSummand:
    coefficient: Fraction
    marking: dict[str, Fraction]


def minkowski_markings(M: MarkedPoset) -> list[MinkowskiSummand]:
    """Weights ``c_i - c_{i-1}`` (with ``c_{-1} = 0``) and 0/1 markings
    ``[lambda(a) >= c_i]`` over the sorted distinct mark values ``c_i``."""
    if not M.marking:
        raise EmptyMarkingError("the decomposition needs at least one marked element")
    values = sorted(set(M.marking.values()))
    out = []
    previous = ZERO
    for c in values:
        indicator = {a: (ZERO if v < c else ONE) for a, v in M.marking.items()}
        out.append(MinkowskiSummand(c - previous, indicator))
        previous = c
    return out


def weighted_vertex_sums(M: MarkedPoset) -> list[tuple[Fraction, ...]]:
    """Every ``sum_i c_i v_i`` with ``v_i`` a vertex of the i-th summand."""
    sums = [tuple(ZERO for _ in M.poset.elements)]
    for summand in minkowski_markings(M):
        piece = make_marked_poset(M.poset, summand.marking)
        scaled = [
            tuple(summand.coefficient * v for v in vertex.values())
            for vertex in vertices(piece)
        ]
        sums = sorted({tuple(a + b for a, b in zip(s, t)) for s in sums for t in scaled})
    return sums


def minkowski_sum_check(M: MarkedPoset) -> bool:
    """Check the Minkowski decomposition against the oracle.

    The extreme points of the weighted vertex sums (modulo the common
    recession cone) must be exactly the vertices of ``M``, and every summand
    must have the same recession cone as ``M``.
    """
    from . import oracle

    if not is_pointed(M):
        raise NotPointedError("the check compares vertex sets; the polyhedron must be pointed")
    cone = oracle.enumerate_vertices_and_rays(h_representation(M)).rays
    for summand in minkowski_markings(M):
        piece = make_marked_poset(M.poset, summand.marking)
        if oracle.enumerate_vertices_and_rays(h_representation(piece)).rays != cone:
            return False
    hull = oracle.extreme_points(weighted_vertex_sums(M), cone)
    expected = sorted(tuple(v.values()) for v in vertices(M))
    return hull == expected


def is_lattice_polyhedron(M: MarkedPoset) -> bool:
    """Whether every vertex is integral (recession rays are always rational).
    Components without marks contribute no vertices and are ignored."""
    part = pointed_part(M)
    return all(v.denominator == 1 for vertex in vertices(part) for v in vertex.values())


@dataclass(frozen=True)
class FacetTable:
    strict: MarkedPoset
    contracted: Partition
    regular: MarkedPoset
    removed_covers: list[tuple[str, str]]
    facets: list[tuple[tuple[str, str], Partition]]


def facet_table(M: MarkedPoset) -> FacetTable:
    """Strictify and regularize, then pair every remaining cover with the
    facet on which its inequality is tight."""
    strict, contracted = strictify(M)
    regular, removed = regularize(strict)
    facets = []
    for p, q in regular.poset.covers:
        blocks = [[p, q]] + [[e] for e in regular.poset.elements if e not in (p, q)]
        facets.append(((p, q), make_partition(regular, blocks)))
    return FacetTable(strict, contracted, regular, removed, facets)

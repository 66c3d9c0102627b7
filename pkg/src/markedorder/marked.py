"""Marked posets: markings, strictness, quotients, redundant covers and
regularization, and maps between marked posets."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple

from ._rational import to_fraction
from .errors import (
    MarkingNotOrderPreserving,
    NotACoverError,
    NotCompatibleError,
    NotInPolyhedronError,
    NotStrictError,
    UnknownElementError,
)
from .partitions import Partition, block_name, is_pl_compatible, make_partition
from .poset import Poset, build_poset

RationalPoint = dict[str, Fraction]


@dataclass(frozen=True)
class MarkedPoset:
    poset: Poset
    marking: dict[str, Fraction] = field(hash=False)

    @property
    def marked(self) -> tuple[str, ...]:
        """Marked elements in element order."""
        return tuple(e for e in self.poset.elements if e in self.marking)

    @property
    def unmarked(self) -> tuple[str, ...]:
        return tuple(e for e in self.poset.elements if e not in self.marking)

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        return self.poset.covers

    def contains(self, x: Mapping[str, Fraction]) -> bool:
        """Exact membership of ``x`` in the marked order polyhedron."""
        if set(x) != set(self.poset.elements):
            return False
        if any(x[a] != v for a, v in self.marking.items()):
            return False
        return all(x[p] <= x[q] for p, q in self.poset.covers)


def make_marked_poset(P: Poset, marking: Mapping[str, object]) -> MarkedPoset:
    values = {}
    for a, v in marking.items():
        if a not in P:
            raise UnknownElementError(a)
        values[a] = to_fraction(v)
    # canonical key order keeps reprs and serializations stable
    values = {a: values[a] for a in P.elements if a in values}
    marked = list(values)
    for a in marked:
        for b in marked:
            if a != b and P.less_or_equal(a, b) and values[a] > values[b]:
                raise MarkingNotOrderPreserving(a, b, values[a], values[b])
    return MarkedPoset(P, values)


def is_strict(M: MarkedPoset) -> bool:
    P, lam = M.poset, M.marking
    return not any(
        a != b and P.less_or_equal(a, b) and lam[a] >= lam[b]
        for a in M.marked
        for b in M.marked
    )


class ConstantInterval(NamedTuple):
    lower: str
    upper: str
    elements: frozenset[str]


def constant_intervals(M: MarkedPoset) -> list[ConstantInterval]:
    """Non-trivial intervals ``[a, b]`` between equally marked elements."""
    P, lam = M.poset, M.marking
    return [
        ConstantInterval(a, b, frozenset(P.interval(a, b)))
        for a in M.marked
        for b in M.marked
        if a != b and lam[a] == lam[b] and P.less_or_equal(a, b)
    ]


def strictify(M: MarkedPoset) -> tuple[MarkedPoset, Partition]:
    """Contract every constant interval to a point.

    Returns the strictly marked quotient and the contracting partition. The
    polyhedron is unchanged up to the canonical affine isomorphism.
    """
    parent = {e: e for e in M.poset.elements}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for interval in constant_intervals(M):
        root = find(interval.lower)
        for p in interval.elements:
            parent[find(p)] = root
    groups: dict[str, list[str]] = {}
    for e in M.poset.elements:
        groups.setdefault(find(e), []).append(e)
    pi = make_partition(M, groups.values())
    Q, _ = quotient(M, pi)
    return Q, pi


def is_redundant_cover(M: MarkedPoset, cover: tuple[str, str]) -> tuple[str, str] | None:
    """Witness ``(a, b)`` of marked elements with ``a <= q``, ``p <= b``,
    ``a != b`` and ``lambda(a) >= lambda(b)``, or None if the cover is
    non-redundant. The witness is the first such pair in element order."""
    p, q = cover
    P = M.poset
    if p not in P:
        raise UnknownElementError(p)
    if q not in P:
        raise UnknownElementError(q)
    if not P.is_cover(p, q):
        raise NotACoverError(f"{p} < {q} is not a covering relation")
    lam = M.marking
    below_q = [a for a in M.marked if P.less_or_equal(a, q)]
    above_p = [b for b in M.marked if P.less_or_equal(p, b)]
    for a in below_q:
        for b in above_p:
            if a != b and lam[a] >= lam[b]:
                return a, b
    return None


def is_regular(M: MarkedPoset) -> bool:
    return all(is_redundant_cover(M, c) is None for c in M.poset.covers)


def regularize(M: MarkedPoset) -> tuple[MarkedPoset, list[tuple[str, str]]]:
    """Remove redundant covers one at a time until none is left.

    Each round drops the first redundant cover in cover order and rescans,
    since dropping one cover can make others non-redundant. Requires a strict
    marking (run :func:`strictify` first).
    """
    if not is_strict(M):
        raise NotStrictError("regularize needs a strict marking; strictify first")
    removed = []
    current = M
    while True:
        redundant = next(
            (c for c in current.poset.covers if is_redundant_cover(current, c) is not None),
            None,
        )
        if redundant is None:
            return current, removed
        removed.append(redundant)
        remaining = [c for c in current.poset.covers if c != redundant]
        current = MarkedPoset(build_poset(current.poset.elements, remaining), current.marking)


@dataclass
class RegularityReport:
    is_regular: bool
    redundant_covers: dict[tuple[str, str], tuple[str, str]]
    strict: bool
    strictness_witnesses: list[tuple[str, str]]
    no_marked_covers: bool
    marked_covers: list[tuple[str, str]]
    single_marked_neighbors: bool
    crowded_elements: list[str]

    @property
    def necessary_conditions_hold(self) -> bool:
        return self.strict and self.no_marked_covers and self.single_marked_neighbors


def regularity_report(M: MarkedPoset) -> RegularityReport:
    """Regularity plus the three necessary conditions for it: strict marking,
    no cover between two marked elements, and no element covering (or covered
    by) two or more marked elements."""
    P, lam = M.poset, M.marking
    redundant = {}
    for c in P.covers:
        w = is_redundant_cover(M, c)
        if w is not None:
            redundant[c] = w
    strict_fail = [
        (a, b)
        for a in M.marked
        for b in M.marked
        if a != b and P.less_or_equal(a, b) and lam[a] >= lam[b]
    ]
    marked_covers = [(p, q) for p, q in P.covers if p in lam and q in lam]
    crowded = [
        e
        for e in P.elements
        if sum(x in lam for x in P.lower_covers(e)) > 1
        or sum(x in lam for x in P.upper_covers(e)) > 1
    ]
    return RegularityReport(
        is_regular=not redundant,
        redundant_covers=redundant,
        strict=not strict_fail,
        strictness_witnesses=strict_fail,
        no_marked_covers=not marked_covers,
        marked_covers=marked_covers,
        single_marked_neighbors=not crowded,
        crowded_elements=crowded,
    )


@dataclass(frozen=True)
class MarkedPosetMap:
    source: MarkedPoset
    target: MarkedPoset
    assignment: dict[str, str] = field(hash=False)

    def __call__(self, element: str) -> str:
        return self.assignment[element]

    def is_surjective(self) -> bool:
        return set(self.assignment.values()) == set(self.target.poset.elements)


def make_map(source: MarkedPoset, target: MarkedPoset, assignment: Mapping[str, str]) -> MarkedPosetMap:
    """Validated map of marked posets (order-preserving, marks to equal marks)."""
    f = dict(assignment)
    if set(f) != set(source.poset.elements):
        raise ValueError("assignment must be defined on every source element")
    for p, v in f.items():
        if v not in target.poset:
            raise UnknownElementError(v)
    for p, q in source.poset.covers:
        if not target.poset.less_or_equal(f[p], f[q]):
            raise ValueError(f"map is not order-preserving on {p} < {q}")
    for a, value in source.marking.items():
        if target.marking.get(f[a]) != value:
            raise ValueError(f"marked element {a} is not sent to an equally marked element")
    return MarkedPosetMap(source, target, f)


def quotient(M: MarkedPoset, pi: Partition) -> tuple[MarkedPoset, MarkedPosetMap]:
    """The quotient marked poset by a (P, lambda)-compatible partition and the
    quotient map. Blocks are named by their sorted members joined with "+"."""
    if not is_pl_compatible(M, pi):
        raise NotCompatibleError("partition is not (P, lambda)-compatible")
    names = [block_name(b) for b in pi.blocks]
    if len(set(names)) != len(names):
        raise NotCompatibleError("block names collide; rename elements containing '+'")
    where = {p: names[i] for i, block in enumerate(pi.blocks) for p in block}
    relations = {(where[p], where[q]) for p, q in M.poset.covers if where[p] != where[q]}
    Q = build_poset(names, sorted(relations, key=lambda r: (names.index(r[0]), names.index(r[1]))))
    marks = {}
    for name, block in zip(names, pi.blocks):
        for p in block:
            if p in M.marking:
                marks[name] = M.marking[p]
                break
    target = make_marked_poset(Q, marks)
    return target, MarkedPosetMap(M, target, where)


def pull_back_point(f: MarkedPosetMap, x: Mapping[str, Fraction]) -> RationalPoint:
    """``f*(x) = x o f``: a point of the target polyhedron pulled back to the
    source."""
    if not f.target.contains(x):
        raise NotInPolyhedronError("point is not in the target polyhedron")
    return {p: Fraction(x[f.assignment[p]]) for p in f.source.poset.elements}

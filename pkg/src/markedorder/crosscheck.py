"""Cross-validation of the combinatorial results against the oracle, plus a
seeded generator of random marked posets for tests and ``oracle-verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import oracle
from .conditional import LinearConditions, conditional_hpolyhedron, minimal_face_dimension
from .faces import enumerate_face_partitions, is_face_partition, partition_from_point
from .geometry import dimension, generic_point, h_representation, is_pointed, vertices
from .marked import MarkedPoset, make_marked_poset, regularize, strictify
from .poset import build_poset

# beyond these sizes the exact oracle gets slow
ORACLE_MAX_ELEMENTS = 8
ORACLE_MAX_ROWS = oracle.DEFAULT_MAX_ROWS


def random_marked_poset(
    rng: random.Random,
    max_elements: int = 6,
    n_values: int = 3,
    *,
    min_elements: int = 1,
    strict: bool = False,
    edge_probability: float = 0.4,
    mark_probability: float = 0.5,
    values: list[Fraction] | None = None,
) -> MarkedPoset:
    """A random marked poset with at most ``n_values`` distinct marks.

    A random acyclic relation on a shuffled ground set is reduced to covers;
    marks are drawn along a linear extension so the marking stays
    order-preserving. With ``strict=True`` every mark exceeds all marks below
    it, which may need more than ``n_values`` values.
    """
    n = rng.randint(min_elements, max_elements)
    names = [f"e{i}" for i in range(n)]
    rng.shuffle(names)
    topo = list(names)
    rng.shuffle(topo)
    relations = [
        (topo[i], topo[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    P = build_poset(names, relations)
    pool = sorted(values) if values else sorted(
        {Fraction(rng.randint(-4, 8), rng.choice((1, 1, 2))) for _ in range(n_values)}
    )
    marks: dict[str, Fraction] = {}
    for p in P.linear_extension():
        if rng.random() >= mark_probability:
            continue
        below = [marks[q] for q in P.down_set(p) if q in marks]
        lo = max(below) if below else None
        if strict:
            options = [v for v in pool if lo is None or v > lo]
            marks[p] = rng.choice(options) if options else lo + 1
        else:
            options = [v for v in pool if lo is None or v >= lo]
            marks[p] = rng.choice(options) if options else lo
    return make_marked_poset(P, marks)


def comparability_partition(M: MarkedPoset, x) -> tuple[tuple[int, ...], ...]:
    """Encoding of the partition generated by ``p ~ q`` whenever ``p`` and
    ``q`` are comparable with ``x_p == x_q``, computed straight from that
    definition."""
    P = M.poset
    idx = P.index
    parent = list(range(len(P)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for p in P.elements:
        for q in P.elements:
            if P.less(p, q) and x[p] == x[q]:
                parent[find(idx[q])] = find(idx[p])
    groups: dict[int, list[int]] = {}
    for i in range(len(P)):
        groups.setdefault(find(i), []).append(i)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def oracle_face_partitions(M: MarkedPoset) -> dict[tuple[tuple[int, ...], ...], int]:
    """Partition encoding of every oracle face's relative-interior witness,
    mapped to the face's affine dimension."""
    return {
        comparability_partition(M, face.witness): face.affine_dim
        for face in oracle.enumerate_faces(h_representation(M))
    }


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _fits_oracle(M: MarkedPoset) -> bool:
    rows = len(M.poset.covers) + len(M.marking)
    return len(M.poset) <= ORACLE_MAX_ELEMENTS and rows <= ORACLE_MAX_ROWS


def _random_points(M: MarkedPoset, rng: random.Random, count: int):
    """Random rational convex combinations of oracle face witnesses."""
    witnesses = [f.witness for f in oracle.enumerate_faces(h_representation(M))]
    for _ in range(count):
        chosen = rng.sample(witnesses, rng.randint(1, min(3, len(witnesses))))
        weights = [Fraction(rng.randint(1, 5)) for _ in chosen]
        total = sum(weights)
        yield {
            e: sum((w * x[e] for w, x in zip(weights, chosen)), Fraction(0)) / total
            for e in M.poset.elements
        }


def verify(
    M: MarkedPoset,
    S: LinearConditions | None = None,
    rng: random.Random | None = None,
    samples: int = 20,
) -> list[CheckResult]:
    """Run every applicable comparison between library and oracle on ``M``.

    With ``rng``, additionally classifies random points of the polyhedron:
    the partition of each point must be a face partition whose free-block
    count is the oracle dimension of the smallest face through the point.
    """
    results = []
    x = generic_point(M)
    results.append(CheckResult("generic point lies in the polyhedron", M.contains(x)))
    if not _fits_oracle(M):
        results.append(CheckResult(
            "oracle comparisons", True, f"skipped: more than {ORACLE_MAX_ELEMENTS} elements or {ORACLE_MAX_ROWS} rows"
        ))
        return results
    H = h_representation(M)
    ours, theirs = dimension(M), oracle.affine_dimension(H)
    results.append(CheckResult("dimension", ours == theirs, f"library {ours}, oracle {theirs}"))

    lattice = enumerate_face_partitions(M)
    expected = oracle_face_partitions(M)
    got = {pi.encoding: pi.n_free for pi in lattice.nodes}
    results.append(CheckResult(
        "face partitions", set(got) == set(expected), f"library {len(got)}, oracle {len(expected)}"
    ))
    results.append(CheckResult(
        "face dimensions", got == expected, "free blocks against affine dimension"
    ))

    if is_pointed(M):
        ours_v = sorted(tuple(v.values()) for v in vertices(M))
        theirs_v = oracle.enumerate_vertices_and_rays(H).vertices
        results.append(CheckResult("vertices", ours_v == theirs_v, f"library {len(ours_v)}, oracle {len(theirs_v)}"))

    strict, _ = strictify(M)
    regular, removed = regularize(strict)
    n_facets = len(oracle.facets(h_representation(regular)))
    results.append(CheckResult(
        "facets match covers after regularization",
        n_facets == len(regular.poset.covers),
        f"{len(regular.poset.covers)} covers ({len(removed)} removed), oracle {n_facets} facets",
    ))
    results.append(CheckResult(
        "regularization keeps the polyhedron",
        oracle.same_polyhedron(h_representation(strict), h_representation(regular)),
    ))

    if rng is not None:
        mismatches = 0
        for x in _random_points(M, rng, samples):
            pi = partition_from_point(M, x)
            face = oracle.minimal_face(H, x)
            if not is_face_partition(M, pi) or pi.n_free != face.affine_dim:
                mismatches += 1
        results.append(CheckResult(
            "random points land in relative interiors of face partitions",
            mismatches == 0,
            f"{samples} points, {mismatches} mismatches",
        ))

    if S is not None and len(S):
        HS = conditional_hpolyhedron(M, S)
        faces = oracle.enumerate_faces(HS) if len(HS.inequalities) + len(HS.equations) <= ORACLE_MAX_ROWS else []
        bad = [
            f for f in faces
            if minimal_face_dimension(M, S, f.witness) != f.affine_dim
        ]
        results.append(CheckResult(
            "conditional minimal-face dimensions",
            not bad,
            f"{len(faces)} faces checked" if faces else "empty or too large",
        ))
    return results

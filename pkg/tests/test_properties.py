"""Randomized invariants, driven by hypothesis with a fixed derandomized seed."""
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from markedorder import (
    build_poset,
    construct_vertex,
    dimension,
    enumerate_face_partitions,
    face_dimension,
    generic_point,
    h_representation,
    is_face_partition,
    is_pointed,
    is_redundant_cover,
    is_strict,
    make_conditions,
    make_marked_poset,
    minimal_face_dimension,
    parse_document,
    partition_from_point,
    pull_back_point,
    quotient,
    refines,
    regularize,
    serialize_document,
    singletons,
    strictify,
)
from markedorder import oracle
from markedorder.conditional import bareiss_rank

SETTINGS = settings(max_examples=60, deadline=None, derandomize=True)

fractions = st.builds(Fraction, st.integers(-4, 6), st.sampled_from([1, 1, 2, 3]))


@st.composite
def marked_posets(draw, max_elements=6):
    n = draw(st.integers(1, max_elements))
    names = [f"e{i}" for i in range(n)]
    order = draw(st.permutations(names))
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    relations = [pair for pair in pairs if draw(st.booleans()) and draw(st.booleans())]
    P = build_poset(names, relations)
    pool = sorted(draw(st.lists(fractions, min_size=1, max_size=3, unique=True)))
    marks = {}
    for p in P.linear_extension():
        if not draw(st.booleans()):
            continue
        below = [marks[q] for q in P.down_set(p) if q in marks]
        options = [v for v in pool if not below or v >= max(below)]
        marks[p] = draw(st.sampled_from(options)) if options else max(below)
    return make_marked_poset(P, marks)


@SETTINGS
@given(marked_posets())
def test_strictify_gives_strict_posets_of_the_same_dimension(M):
    S, pi = strictify(M)
    assert is_strict(S)
    assert dimension(M) == len(S.unmarked)
    assert dimension(M) == oracle.affine_dimension(h_representation(M))


@SETTINGS
@given(marked_posets())
def test_regularize_keeps_the_polyhedron(M):
    S, _ = strictify(M)
    R, removed = regularize(S)
    assert all(is_redundant_cover(R, c) is None for c in R.covers)
    assert len(R.covers) + len(removed) == len(S.covers)
    assert oracle.same_polyhedron(h_representation(S), h_representation(R))


@SETTINGS
@given(marked_posets())
def test_generic_point_lies_in_the_relative_interior(M):
    x = generic_point(M)
    assert M.contains(x)
    pi = partition_from_point(M, x)
    assert is_face_partition(M, pi)
    assert pi.n_free == dimension(M)
    if is_strict(M):
        assert pi == singletons(M)


@SETTINGS
@given(marked_posets())
def test_constructed_vertex_is_a_vertex(M):
    if not is_pointed(M):
        return
    x = construct_vertex(M)
    assert M.contains(x)
    assert partition_from_point(M, x).n_free == 0


@SETTINGS
@given(marked_posets(max_elements=5))
def test_face_lattice_is_consistent(M):
    lattice = enumerate_face_partitions(M)
    for pi, dim in zip(lattice.nodes, lattice.dims):
        assert is_face_partition(M, pi)
        assert face_dimension(M, pi) == dim
    for i, j in lattice.order:
        assert refines(lattice.nodes[j], lattice.nodes[i])
    # exactly one face of full dimension
    assert lattice.dims.count(dimension(M)) == 1


@SETTINGS
@given(marked_posets(max_elements=5), st.data())
def test_quotient_points_pull_back_constant_on_blocks(M, data):
    lattice = enumerate_face_partitions(M)
    pi = data.draw(st.sampled_from(lattice.nodes))
    Q, f = quotient(M, pi)
    x = pull_back_point(f, generic_point(Q))
    assert M.contains(x)
    for block in pi.blocks:
        assert len({x[p] for p in block}) == 1
    assert refines(pi, partition_from_point(M, x))


@SETTINGS
@given(marked_posets())
def test_minimal_face_without_conditions_counts_free_blocks(M):
    x = generic_point(M)
    assert minimal_face_dimension(M, make_conditions(M, []), x) == dimension(M)


@SETTINGS
@given(marked_posets())
def test_document_round_trip(M):
    assert parse_document(serialize_document(M))[0] == M


@SETTINGS
@given(st.lists(st.lists(fractions, min_size=3, max_size=3), min_size=1, max_size=4))
def test_bareiss_rank_matches_fraction_rank(rows):
    assert bareiss_rank(rows) == oracle._rank(rows)

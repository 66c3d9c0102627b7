from fractions import Fraction

import pytest

from markedorder import (
    PartitionError,
    SizeLimitError,
    build_poset,
    enumerate_face_partitions,
    face_partition_diagnostics,
    is_connected_partition,
    is_face_partition,
    is_p_compatible,
    is_pl_compatible,
    make_marked_poset,
    make_partition,
    partition_from_point,
    refines,
    singletons,
)

from conftest import chain_point

# the eleven face partitions of the pentagon, by blocks with two or more elements
PENTAGON_FACES = [
    [],
    [{"m0", "p"}],
    [{"p", "q"}],
    [{"p", "m3"}],
    [{"q", "m4"}],
    [{"q", "m1"}],
    [{"m0", "p"}, {"q", "m1"}],
    [{"p", "q", "m1"}],
    [{"p", "q", "m3"}],
    [{"q", "m4"}, {"p", "m3"}],
    [{"m0", "p"}, {"q", "m4"}],
]


def _partition(M, big_blocks):
    used = set().union(*big_blocks) if big_blocks else set()
    return make_partition(M, [sorted(b) for b in big_blocks] + [[e] for e in M.elements if e not in used])


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def test_make_partition_validates(pentagon):
    with pytest.raises(PartitionError):
        make_partition(pentagon, [["m0", "p"], ["p", "q"], ["m1", "m3", "m4"]])
    with pytest.raises(PartitionError):
        make_partition(pentagon, [["m0"]])
    with pytest.raises(PartitionError):
        make_partition(pentagon, [["zz"], list(pentagon.elements)])


def test_free_blocks(pentagon):
    pi = _partition(pentagon, [{"m0", "p"}])
    assert pi.free_blocks == [("q",)]
    assert pi.n_free == 1
    assert str(pi).count("(") == 1


def test_point_partitions(pentagon, chain_with_conditions):
    x = dict(m0=0, p=Fraction(1, 2), q=2, m4=4, m1=1, m3=3)
    assert partition_from_point(pentagon, {k: Fraction(v) for k, v in x.items()}) == singletons(pentagon)
    vertex = dict(m0=0, p=0, q=1, m4=4, m1=1, m3=3)
    pi = partition_from_point(pentagon, {k: Fraction(v) for k, v in vertex.items()})
    assert pi == _partition(pentagon, [{"m0", "p"}, {"q", "m1"}])
    M, _ = chain_with_conditions
    pi = partition_from_point(M, chain_point(2, 2, 2, 4))
    assert pi.blocks == (("m0",), ("p", "q", "r"), ("s",), ("m5",))


def test_connectedness(pentagon):
    assert is_connected_partition(pentagon, singletons(pentagon))
    assert not is_connected_partition(pentagon, _partition(pentagon, [{"m1", "m3"}]))
    assert is_connected_partition(pentagon, _partition(pentagon, [{"m0", "p", "q"}]))


def test_p_compatibility():
    M = make_marked_poset(build_poset("abc", [("a", "b"), ("b", "c")]), {})
    assert is_p_compatible(M, singletons(M))
    assert not is_p_compatible(M, make_partition(M, [["a", "c"], ["b"]]))


def test_pl_compatibility(pentagon):
    assert is_pl_compatible(pentagon, _partition(pentagon, [{"m0", "p"}]))
    # a block holding two different marks
    assert not is_pl_compatible(pentagon, _partition(pentagon, [{"m0", "p", "m3"}]))
    # the 1-block sits below the 0-block
    M = make_marked_poset(build_poset("abcd", [("a", "b"), ("c", "d")]), {"a": 1, "b": 1, "c": 0, "d": 0})
    assert not is_pl_compatible(M, make_partition(M, [["a", "d"], ["b", "c"]]))


def test_redundant_pseudo_face(redundant):
    pi = _partition(redundant, [{"p", "q"}])
    diag = face_partition_diagnostics(redundant, pi)
    assert diag["p_compatible"] and diag["connected"]
    assert not diag["pl_compatible"]
    assert not is_face_partition(redundant, pi)


def test_pentagon_face_partitions_exactly(pentagon):
    expected = {_partition(pentagon, f).encoding for f in PENTAGON_FACES}
    assert len(expected) == 11
    for blocks in _set_partitions(list(pentagon.elements)):
        pi = make_partition(pentagon, blocks)
        assert is_face_partition(pentagon, pi) == (pi.encoding in expected)


def test_pentagon_face_lattice(pentagon):
    lattice = enumerate_face_partitions(pentagon)
    assert len(lattice) == 11
    assert lattice.f_vector() == (5, 5, 1)


def test_square_face_lattice(redundant):
    assert enumerate_face_partitions(redundant).f_vector() == (4, 4, 1)


def test_one_element_lattice():
    M = make_marked_poset(build_poset("a"), {"a": 3})
    lattice = enumerate_face_partitions(M)
    assert len(lattice) == 1
    assert lattice.dims == (0,)


def test_lattice_order_goes_from_smaller_to_larger_faces(pentagon):
    lattice = enumerate_face_partitions(pentagon)
    for i, j in lattice.order:
        assert refines(lattice.nodes[j], lattice.nodes[i])
        assert lattice.dims[i] < lattice.dims[j]
    top = lattice.dims.index(2)
    assert sum(1 for i, j in lattice.order if j == top) == 10


def test_enumeration_matches_brute_force_on_small_posets():
    import random

    from markedorder.crosscheck import random_marked_poset

    rng = random.Random(4242)
    for _ in range(40):
        M = random_marked_poset(rng, 6, 3)
        brute = {
            make_partition(M, b).encoding
            for b in _set_partitions(list(M.elements))
            if is_face_partition(M, make_partition(M, b))
        }
        assert enumerate_face_partitions(M).encodings() == brute


def test_size_limit():
    M = make_marked_poset(build_poset([f"e{i}" for i in range(13)]), {})
    with pytest.raises(SizeLimitError):
        enumerate_face_partitions(M)


def test_refines(pentagon):
    edge = _partition(pentagon, [{"m0", "p"}])
    vertex = _partition(pentagon, [{"m0", "p"}, {"q", "m1"}])
    assert refines(singletons(pentagon), vertex)
    assert refines(vertex, vertex)
    assert refines(edge, vertex)
    assert not refines(vertex, edge)

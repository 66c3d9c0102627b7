from fractions import Fraction

import pytest

from markedorder import oracle
from markedorder import (
    MarkingNotOrderPreserving,
    NotACoverError,
    NotCompatibleError,
    NotInPolyhedronError,
    NotStrictError,
    build_poset,
    constant_intervals,
    generic_point,
    h_representation,
    is_redundant_cover,
    is_regular,
    is_strict,
    make_map,
    make_marked_poset,
    make_partition,
    pull_back_point,
    quotient,
    regularity_report,
    regularize,
    singletons,
    strictify,
)


def flat_chain():
    """a < p < b with both ends marked 1."""
    return make_marked_poset(build_poset("apb", [("a", "p"), ("p", "b")]), {"a": 1, "b": 1})


def test_marks_become_exact():
    M = flat_chain()
    assert all(type(v) is Fraction for v in M.marking.values())
    assert M.marked == ("a", "b")
    assert M.unmarked == ("p",)


def test_float_marks_are_refused():
    with pytest.raises(TypeError):
        make_marked_poset(build_poset("a"), {"a": 0.5})


def test_decreasing_marks_are_refused():
    P = build_poset("ab", [("a", "b")])
    with pytest.raises(MarkingNotOrderPreserving):
        make_marked_poset(P, {"a": 1, "b": 0})


def test_empty_marking_is_fine():
    M = make_marked_poset(build_poset("ab", [("a", "b")]), {})
    assert is_strict(M)
    assert constant_intervals(M) == []


def test_strictness(pentagon):
    assert is_strict(pentagon)
    assert not is_strict(flat_chain())
    antichain = make_marked_poset(build_poset("ab"), {"a": 1, "b": 1})
    assert is_strict(antichain)
    assert constant_intervals(antichain) == []


def test_constant_interval_of_flat_chain():
    [interval] = constant_intervals(flat_chain())
    assert (interval.lower, interval.upper) == ("a", "b")
    assert set(interval.elements) == {"a", "p", "b"}


def test_strictify_leaves_strict_posets_alone(pentagon):
    S, pi = strictify(pentagon)
    assert S == pentagon
    assert pi == singletons(pentagon)


def test_strictify_collapses_flat_chain():
    S, pi = strictify(flat_chain())
    assert S.poset.elements == ("a+b+p",)
    assert S.marking == {"a+b+p": 1}
    assert pi.blocks == (("a", "p", "b"),)


def test_overlapping_constant_intervals_merge():
    P = build_poset("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    M = make_marked_poset(P, {"a": 2, "c": 2, "d": 2})
    S, pi = strictify(M)
    assert len(S.poset) == 1
    assert is_strict(S)


def test_redundant_cover_witness(redundant, pentagon):
    assert is_redundant_cover(redundant, ("p", "q")) == ("m2", "m1")
    assert is_redundant_cover(pentagon, ("m0", "p")) is None


def test_cover_between_two_marks_is_redundant():
    # the polytope is a single point, so this cover cannot give a facet
    two = make_marked_poset(build_poset("ab", [("a", "b")]), {"a": 0, "b": 1})
    assert is_redundant_cover(two, ("a", "b")) == ("b", "a")
    assert oracle.facets(h_representation(two)) == []


def test_redundant_cover_requires_a_cover(pentagon):
    with pytest.raises(NotACoverError):
        is_redundant_cover(pentagon, ("m0", "q"))


def test_regularize(redundant, pentagon):
    R, removed = regularize(redundant)
    assert removed == [("p", "q")]
    assert len(R.covers) == 4
    assert is_regular(R)
    assert regularize(pentagon) == (pentagon, [])


def test_regularize_removes_only_the_first_of_two_redundant_covers():
    P = build_poset("apb", [("p", "a"), ("p", "b")])
    M = make_marked_poset(P, {"a": 1, "b": 1})
    assert is_redundant_cover(M, ("p", "a")) and is_redundant_cover(M, ("p", "b"))
    R, removed = regularize(M)
    assert removed == [("p", "a")]
    assert R.covers == (("p", "b"),)


def test_regularize_needs_strict_input():
    with pytest.raises(NotStrictError):
        regularize(flat_chain())


def test_regularity_report(pentagon, redundant):
    assert regularity_report(pentagon).is_regular
    assert regularity_report(pentagon).necessary_conditions_hold
    report = regularity_report(redundant)
    assert report.necessary_conditions_hold and not report.is_regular
    assert report.redundant_covers == {("p", "q"): ("m2", "m1")}
    two = make_marked_poset(build_poset("ab", [("a", "b")]), {"a": 0, "b": 1})
    assert regularity_report(two).marked_covers == [("a", "b")]
    assert not regularity_report(two).no_marked_covers


def test_identity_quotient(pentagon):
    Q, f = quotient(pentagon, singletons(pentagon))
    assert Q.poset.elements == pentagon.poset.elements
    assert sorted(Q.covers) == sorted(pentagon.covers)
    assert Q.marking == pentagon.marking
    assert f.is_surjective()


def test_vertex_quotient(pentagon):
    pi = make_partition(pentagon, [["m0", "p"], ["q", "m1"], ["m3"], ["m4"]])
    Q, f = quotient(pentagon, pi)
    assert len(Q.poset) == 4
    assert sorted(Q.marking.values()) == [0, 1, 3, 4]
    x = pull_back_point(f, {"m0+p": 0, "m1+q": 1, "m3": 3, "m4": 4})
    assert (x["p"], x["q"]) == (0, 1)
    assert pentagon.contains(x)


def test_incompatible_quotient_is_refused():
    P = build_poset("abc", [("a", "b"), ("b", "c")])
    M = make_marked_poset(P, {})
    with pytest.raises(NotCompatibleError):
        quotient(M, make_partition(M, [["a", "c"], ["b"]]))


def test_pull_back_rejects_points_outside(pentagon):
    _, f = quotient(pentagon, singletons(pentagon))
    bad = dict(generic_point(pentagon), p=Fraction(5))
    with pytest.raises(NotInPolyhedronError):
        pull_back_point(f, bad)


def test_pull_back_is_injective_on_surjective_maps(pentagon):
    pi = make_partition(pentagon, [["m0"], ["p", "q"], ["m1"], ["m3"], ["m4"]])
    Q, f = quotient(pentagon, pi)
    x = {"m0": 0, "p+q": Fraction(3, 2), "m1": 1, "m3": 3, "m4": 4}
    y = dict(x, **{"p+q": Fraction(2)})
    assert pull_back_point(f, x) != pull_back_point(f, y)


def test_make_map_requires_equal_marks(pentagon):
    target = make_marked_poset(build_poset(["t"]), {"t": 0})
    with pytest.raises(ValueError, match="marked element"):
        make_map(pentagon, target, {e: "t" for e in pentagon.elements})


def test_make_map_requires_order_preservation():
    M = make_marked_poset(build_poset("ab", [("a", "b")]), {})
    target = make_marked_poset(build_poset("xy", [("x", "y")]), {})
    with pytest.raises(ValueError, match="order-preserving"):
        make_map(M, target, {"a": "y", "b": "x"})
    assert make_map(M, target, {"a": "x", "b": "y"}).is_surjective()

"""The exact LP oracle on hand-checkable polyhedra."""
from fractions import Fraction as F

from markedorder import HPolyhedron, oracle


def box(n):
    coords = tuple(f"x{i}" for i in range(n))
    rows = []
    for i in range(n):
        e = [F(0)] * n
        e[i] = F(1)
        rows.append((tuple(e), F(0)))
        rows.append((tuple(-v for v in e), F(-1)))
    return HPolyhedron(coords, tuple(rows), ())


def test_lp_optimum_on_a_triangle():
    # x >= 0, y >= 0, x + y <= 2; maximize x + 2y
    rows = [((1, 0), 0), ((0, 1), 0), ((-1, -1), -2)]
    res = oracle.solve_lp(2, [], rows, (1, 2))
    assert res.status == "optimal"
    assert res.value == 4 and res.point == (0, 2)


def test_lp_unbounded_and_infeasible():
    assert oracle.solve_lp(1, [], [((1,), 0)], (1,)).status == "unbounded"
    assert oracle.solve_lp(1, [], [((1,), 1), ((-1,), 0)]).status == "infeasible"
    assert oracle.solve_lp(2, [((1, 1), 1), ((1, 1), 2)], []).status == "infeasible"


def test_lp_with_equations():
    res = oracle.solve_lp(3, [((1, 1, 1), 3)], [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0)], (1, 0, 0))
    assert res.value == 3


def test_cube_faces():
    faces = oracle.enumerate_faces(box(3))
    counts = [sum(1 for f in faces if f.affine_dim == d) for d in range(4)]
    assert counts == [8, 12, 6, 1]
    assert len(oracle.facets(box(3))) == 6


def test_empty_polyhedron():
    H = HPolyhedron(("x",), (((F(1),), F(1)), ((F(-1),), F(0))), ())
    assert oracle.affine_dimension(H) == -1
    assert oracle.enumerate_faces(H) == []


def test_redundant_rows_are_not_facets():
    coords = ("x",)
    rows = (((F(1),), F(0)), ((F(1),), F(-1)), ((F(-1),), F(-1)))
    assert len(oracle.facets(HPolyhedron(coords, rows, ()))) == 2


def test_implicit_equations_lower_the_dimension():
    rows = (((F(1), F(-1)), F(0)), ((F(-1), F(1)), F(0)))
    assert oracle.affine_dimension(HPolyhedron(("x", "y"), rows, ())) == 1


def test_minimal_face_of_points_in_the_square():
    H = box(2)
    assert oracle.minimal_face(H, (F(1, 2), F(1, 2))).affine_dim == 2
    assert oracle.minimal_face(H, (F(0), F(1, 3))).affine_dim == 1
    assert oracle.minimal_face(H, (F(1), F(1))).affine_dim == 0


def test_vertices_and_rays_of_a_quadrant():
    H = HPolyhedron(("x", "y"), (((F(1), F(0)), F(1)), ((F(0), F(1)), F(2))), ())
    rep = oracle.enumerate_vertices_and_rays(H)
    assert rep.pointed
    assert rep.vertices == [(1, 2)]
    assert sorted(rep.rays) == [(0, 1), (1, 0)]


def test_lineality_of_a_half_plane():
    H = HPolyhedron(("x", "y"), (((F(-1), F(1)), F(0)),), ())
    [line] = oracle.lineality_space(H)
    assert oracle.primitive_integer(line) in {(1, 1), (-1, -1)}
    rep = oracle.enumerate_vertices_and_rays(H)
    assert not rep.pointed and rep.vertices == []


def test_containment():
    assert oracle.contains_polyhedron(box(2), box(2))
    smaller = HPolyhedron(box(2).coordinates, box(2).inequalities + (((F(1), F(1)), F(1)),), ())
    assert oracle.contains_polyhedron(box(2), smaller)
    assert not oracle.contains_polyhedron(smaller, box(2))
    assert not oracle.same_polyhedron(box(2), smaller)


def test_extreme_points():
    pts = [(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)]
    assert sorted(oracle.extreme_points([tuple(map(F, p)) for p in pts])) == [(0, 0), (0, 2), (2, 0)]
    assert oracle.in_convex_cone_hull((F(5), F(1)), [(F(0), F(0)), (F(0), F(2))], [(F(1), F(0))])


def test_primitive_integer():
    assert oracle.primitive_integer((F(1, 2), F(-3, 4))) == (2, -3)

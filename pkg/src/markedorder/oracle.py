"""Independent exact geometric ground truth for small H-polyhedra.

Nothing here knows about posets. Everything is done with a dense two-phase
simplex over :class:`fractions.Fraction` using Bland's rule, so results are
exact and deterministic. Faces are identified by their inclusion-maximal set
of active inequality rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .hpoly import HPolyhedron

ZERO = Fraction(0)
ONE = Fraction(1)
DEFAULT_MAX_ROWS = 24

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    point: Vector | None = None
    value: Fraction | None = None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    row = T[r]
    pv = row[c]
    if pv != 1:
        T[r] = row = [v / pv for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run_simplex(T, basis, cost_row_index: int, allowed: int) -> str:
    """Maximize with the reduced-cost row ``T[cost_row_index]`` (entries are
    ``z_j - c_j``). Only columns below ``allowed`` may enter."""
    m = cost_row_index
    while True:
        z = T[m]
        entering = next((j for j in range(allowed) if z[j] < 0), None)
        if entering is None:
            return "optimal"
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], entering)


def _solve_inequalities(k: int, rows, objective) -> LPResult:
    """Maximize ``objective . t`` subject to ``a.t >= b`` with ``t`` free."""
    # t = u - v with u, v >= 0 and one surplus per row: a.u - a.v - s = b
    m = len(rows)
    width = 2 * k + m
    T = []
    basis = []
    artificial_rows = []
    for i, (a, b) in enumerate(rows):
        line = list(a) + [-v for v in a] + [ZERO] * m
        line[2 * k + i] = -ONE
        if b <= 0:
            line = [-v for v in line]
            b = -b
            basis.append(2 * k + i)
        else:
            artificial_rows.append(i)
            basis.append(None)
        T.append(line + [b])
    n_art = len(artificial_rows)
    for r in T:
        r[width:width] = [ZERO] * n_art
    for j, i in enumerate(artificial_rows):
        T[i][width + j] = ONE
        basis[i] = width + j
    if n_art:
        # phase 1: maximize minus the sum of artificials
        cost = [ZERO] * (width + n_art + 1)
        for i in artificial_rows:
            for j in range(width):
                cost[j] -= T[i][j]
            cost[-1] -= T[i][-1]
        T.append(cost)
        _run_simplex(T, basis, m, width)
        if T[m][-1] != 0:
            return LPResult("infeasible")
        T.pop()
        r = 0
        while r < len(basis):
            if basis[r] >= width:
                col = next((j for j in range(width) if T[r][j] != 0), None)
                if col is None:
                    del T[r]
                    del basis[r]
                    continue
                _pivot(T, basis, r, col)
            r += 1
        T = [row[:width] + [row[-1]] for row in T]
    m = len(basis)

    def extract() -> Vector:
        values = [ZERO] * width
        for i, j in enumerate(basis):
            values[j] = T[i][-1]
        return tuple(values[j] - values[k + j] for j in range(k))

    if objective is None:
        return LPResult("optimal", extract(), None)
    c = list(objective) + [-v for v in objective] + [ZERO] * m
    z = [-cj for cj in c] + [ZERO]
    for i, j in enumerate(basis):
        if c[j]:
            z = [zv + c[j] * tv for zv, tv in zip(z, T[i])]
    T.append(z)
    if _run_simplex(T, basis, m, width) == "unbounded":
        return LPResult("unbounded")
    t = extract()
    return LPResult("optimal", t, _dot(objective, t))


def _affine_parametrization(n: int, equations) -> tuple[Vector, list[Vector]] | None:
    """``x0`` and a basis ``N`` with ``{x : E x == e} = {x0 + N t}``; None if
    the equations are inconsistent."""
    M = [[Fraction(v) for v in a] + [Fraction(b)] for a, b in equations]
    pivots = []
    rank = 0
    for c in range(n):
        p = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        pv = M[rank][c]
        if pv != 1:
            M[rank] = [v / pv for v in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
    if any(M[i][-1] != 0 for i in range(rank, len(M))):
        return None
    x0 = [ZERO] * n
    for i, c in enumerate(pivots):
        x0[c] = M[i][-1]
    basis = []
    pivot_set = set(pivots)
    for free in range(n):
        if free in pivot_set:
            continue
        v = [ZERO] * n
        v[free] = ONE
        for i, c in enumerate(pivots):
            v[c] = -M[i][free]
        basis.append(tuple(v))
    return tuple(x0), basis


def solve_lp(
    n: int,
    equations: Sequence[tuple[Sequence[Fraction], Fraction]],
    inequalities: Sequence[tuple[Sequence[Fraction], Fraction]],
    objective: Sequence[Fraction] | None = None,
) -> LPResult:
    """Maximize ``objective . x`` over ``{eq rows ==, ineq rows >=}`` with
    free variables ``x`` in ``Q^n``. Without an objective, any feasible point
    is returned.

    The equations are solved first and the LP runs over the parameters of
    their solution space, which is usually much smaller than ``n``.
    """
    param = _affine_parametrization(n, equations)
    if param is None:
        return LPResult("infeasible")
    x0, N = param
    k = len(N)
    rows = []
    for a, b in inequalities:
        a = [Fraction(v) for v in a]
        reduced = tuple(_dot(a, col) for col in N)
        rhs = Fraction(b) - _dot(a, x0)
        if any(reduced):
            rows.append((reduced, rhs))
        elif rhs > 0:
            return LPResult("infeasible")
    reduced_obj = None if objective is None else tuple(_dot(objective, col) for col in N)
    res = _solve_inequalities(k, rows, reduced_obj)
    if res.status != "optimal":
        return res
    x = tuple(x0[i] + sum((t * col[i] for t, col in zip(res.point, N)), ZERO) for i in range(n))
    value = None if objective is None else _dot(objective, x)
    return LPResult("optimal", x, value)


def _dot(a, x) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x)), ZERO)


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    M = [list(r) for r in rows if any(r)]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def _null_space(rows: Sequence[Sequence[Fraction]], n: int) -> list[Vector]:
    """Basis of ``{x : r.x == 0 for r in rows}`` via reduced row echelon form."""
    M = [list(map(Fraction, r)) for r in rows]
    pivots = []
    rank = 0
    for c in range(n):
        p = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        pv = M[rank][c]
        M[rank] = [v / pv for v in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [ZERO] * n
        v[free] = ONE
        for i, c in enumerate(pivots):
            v[c] = -M[i][free]
        basis.append(tuple(v))
    return basis


def lp_feasible(H: HPolyhedron, strict_rows: Sequence[int] = ()) -> Vector | None:
    """A point of ``H`` satisfying the listed inequality rows strictly, or
    None. Strictness is certified by maximizing a common slack ``t <= 1``."""
    n = H.dimension_of_space
    strict = set(strict_rows)
    if not strict:
        res = solve_lp(n, H.equations, H.inequalities)
        return res.point if res.status == "optimal" else None
    eqs = [(tuple(a) + (ZERO,), b) for a, b in H.equations]
    ineqs = []
    for i, (a, b) in enumerate(H.inequalities):
        ineqs.append((tuple(a) + ((-ONE,) if i in strict else (ZERO,)), b))
    ineqs.append(((ZERO,) * n + (-ONE,), -ONE))
    res = solve_lp(n + 1, eqs, ineqs, (ZERO,) * n + (ONE,))
    if res.status != "optimal" or res.value <= 0:
        return None
    return res.point[:n]


@dataclass(frozen=True)
class ActiveSetFace:
    """A non-empty face: its maximal active set of inequality rows, affine
    dimension, and a point in its relative interior."""

    active: frozenset[int]
    affine_dim: int
    witness: dict[str, Fraction]


def _closure(H: HPolyhedron, forced: frozenset[int]) -> tuple[frozenset[int], Vector] | None:
    """Maximal active set of the smallest face on which every row in
    ``forced`` is tight, with a relative-interior witness; None if empty."""
    n = H.dimension_of_space
    rows = H.inequalities
    eqs = list(H.equations) + [rows[i] for i in sorted(forced)]
    rest = [i for i in range(len(rows)) if i not in forced]
    sub = HPolyhedron(H.coordinates, tuple(rows[i] for i in rest), tuple(eqs))
    # one LP: push every remaining row off its bound by a common t <= 1
    eqs_t = [(tuple(a) + (ZERO,), b) for a, b in sub.equations]
    ineqs_t = [(tuple(a) + (-ONE,), b) for a, b in sub.inequalities]
    ineqs_t.append(((ZERO,) * n + (-ONE,), -ONE))
    base = solve_lp(n + 1, eqs_t, ineqs_t, (ZERO,) * n + (ONE,))
    if base.status != "optimal" or base.value < 0:
        return None
    if base.value > 0 or not rest:
        return forced, base.point[:n]
    base_point = base.point[:n]
    # some rows are implicit equalities; maximize each slack separately
    witnesses = []
    implicit = set()
    covered = {kk for kk, (aa, bb) in enumerate(sub.inequalities) if _dot(aa, base_point) > bb}
    if covered:
        witnesses.append(base_point)
    for k, i in enumerate(rest):
        if k in covered:
            continue
        a, b = rows[i]
        # cap the slack so the LP stays bounded
        capped = sub.inequalities + ((tuple(-v for v in a), -b - ONE),)
        res = solve_lp(n, sub.equations, capped, a)
        if res.status == "optimal" and res.value > b:
            witnesses.append(res.point)
            for kk, (aa, bb) in enumerate(sub.inequalities):
                if _dot(aa, res.point) > bb:
                    covered.add(kk)
        else:
            implicit.add(i)
    if witnesses:
        point = tuple(sum(col, ZERO) / len(witnesses) for col in zip(*witnesses))
    else:
        point = base_point
    return forced | frozenset(implicit), point


def _face_from(H: HPolyhedron, active: frozenset[int], point: Vector) -> ActiveSetFace:
    n = H.dimension_of_space
    rows = [a for a, _ in H.equations] + [H.inequalities[i][0] for i in sorted(active)]
    dim = n - _rank(rows)
    return ActiveSetFace(active, dim, dict(zip(H.coordinates, point)))


def affine_dimension(H: HPolyhedron) -> int:
    """Dimension of the affine hull of ``H``; -1 when empty."""
    closed = _closure(H, frozenset())
    if closed is None:
        return -1
    return _face_from(H, *closed).affine_dim


def enumerate_faces(H: HPolyhedron, max_rows: int = DEFAULT_MAX_ROWS) -> list[ActiveSetFace]:
    """All non-empty faces, including ``H`` itself, sorted by (dimension,
    active set). Each face is reached by adding one row at a time to the
    active set of a larger face and closing up."""
    if len(H.inequalities) + len(H.equations) > max_rows:
        raise ValueError(f"oracle face enumeration is limited to {max_rows} rows")
    top = _closure(H, frozenset())
    if top is None:
        return []
    found = {top[0]: _face_from(H, *top)}
    queue = [top[0]]
    while queue:
        active = queue.pop()
        for i in range(len(H.inequalities)):
            if i in active:
                continue
            closed = _closure(H, active | {i})
            if closed is None or closed[0] in found:
                continue
            found[closed[0]] = _face_from(H, *closed)
            queue.append(closed[0])
    return sorted(found.values(), key=lambda f: (f.affine_dim, sorted(f.active)))


def facets(H: HPolyhedron) -> list[ActiveSetFace]:
    faces = enumerate_faces(H)
    if not faces:
        return []
    top = max(f.affine_dim for f in faces)
    return [f for f in faces if f.affine_dim == top - 1]


def minimal_face(H: HPolyhedron, x) -> ActiveSetFace:
    """The smallest face containing ``x``; ``x`` itself is a relative-interior
    witness."""
    if not H.contains(x):
        raise ValueError("point is not in the polyhedron")
    v = H.vector(x)
    return _face_from(H, frozenset(H.tight_rows(v)), v)


def lineality_space(H: HPolyhedron) -> list[Vector]:
    rows = [a for a, _ in H.equations] + [a for a, _ in H.inequalities]
    return _null_space(rows, H.dimension_of_space)


def primitive_integer(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for k in ints:
        g = gcd(g, k)
    return tuple(k // g for k in ints) if g else tuple(ints)


@dataclass(frozen=True)
class VRepresentation:
    vertices: list[Vector]
    rays: list[tuple[int, ...]]
    lineality: list[Vector]
    pointed: bool


def enumerate_vertices_and_rays(H: HPolyhedron) -> VRepresentation:
    """Vertices and extreme rays (as primitive integer vectors).

    With a non-trivial lineality space there are no vertices; rays are then
    those of the section orthogonal to the lineality space.
    """
    lineality = lineality_space(H)
    section = H.with_equations([(v, ZERO) for v in lineality])
    faces = enumerate_faces(section)
    points = [] if lineality else sorted(
        tuple(f.witness[c] for c in H.coordinates) for f in faces if f.affine_dim == 0
    )
    cone = section.homogenized()
    rays = sorted(
        primitive_integer(tuple(f.witness[c] for c in H.coordinates))
        for f in enumerate_faces(cone)
        if f.affine_dim == 1
    )
    return VRepresentation(points, rays, lineality, not lineality)


def contains_polyhedron(outer: HPolyhedron, inner: HPolyhedron) -> bool:
    """Whether ``inner`` is a subset of ``outer`` (same coordinates), decided
    by minimizing each row of ``outer`` over ``inner``."""
    if solve_lp(inner.dimension_of_space, inner.equations, inner.inequalities).status != "optimal":
        return True
    n = inner.dimension_of_space
    checks = [(a, b, 1) for a, b in outer.inequalities]
    checks += [(a, b, s) for a, b in outer.equations for s in (1, -1)]
    for a, b, sign in checks:
        res = solve_lp(n, inner.equations, inner.inequalities, tuple(-sign * v for v in a))
        if res.status == "unbounded" or -res.value < sign * b:
            return False
    return True


def same_polyhedron(first: HPolyhedron, second: HPolyhedron) -> bool:
    return contains_polyhedron(first, second) and contains_polyhedron(second, first)


def in_convex_cone_hull(target: Sequence[Fraction], points: Sequence[Sequence[Fraction]], rays: Sequence[Sequence[Fraction]] = ()) -> bool:
    """Whether ``target`` lies in ``conv(points) + cone(rays)``."""
    k, r = len(points), len(rays)
    if k == 0:
        return False
    n_vars = k + r
    eqs = []
    for coord in range(len(target)):
        row = [Fraction(p[coord]) for p in points] + [Fraction(d[coord]) for d in rays]
        eqs.append((row, Fraction(target[coord])))
    eqs.append(([ONE] * k + [ZERO] * r, ONE))
    ineqs = []
    for j in range(n_vars):
        row = [ZERO] * n_vars
        row[j] = ONE
        ineqs.append((row, ZERO))
    return solve_lp(n_vars, eqs, ineqs).status == "optimal"


def extreme_points(points: Sequence[Sequence[Fraction]], rays: Sequence[Sequence[Fraction]] = ()) -> list[Vector]:
    """Vertices of ``conv(points) + cone(rays)``, sorted and deduplicated."""
    unique = sorted({tuple(Fraction(v) for v in p) for p in points})
    keep = []
    for i, p in enumerate(unique):
        others = unique[:i] + unique[i + 1:]
        if not in_convex_cone_hull(p, others, rays):
            keep.append(p)
    return keep

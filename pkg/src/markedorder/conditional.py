"""Conditional marked order polyhedra: a marked order polyhedron cut by an
affine subspace ``s(x) = b``."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Mapping, Sequence

from ._rational import to_fraction
from .errors import NotCompatibleError, NotInPolyhedronError, UnknownElementError
from .faces import partition_from_point
from .hpoly import HPolyhedron
from .marked import MarkedPoset, make_marked_poset
from .partitions import Partition, block_name, is_pl_compatible
from .poset import build_poset

ZERO = Fraction(0)


@dataclass(frozen=True)
class Condition:
    coeffs: dict[str, Fraction] = field(hash=False)
    rhs: Fraction

    def evaluate(self, x: Mapping[str, Fraction]) -> Fraction:
        return sum((c * x[p] for p, c in self.coeffs.items()), ZERO)


@dataclass(frozen=True)
class LinearConditions:
    rows: tuple[Condition, ...] = ()

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def satisfied_by(self, x: Mapping[str, Fraction]) -> bool:
        return all(row.evaluate(x) == row.rhs for row in self.rows)

    def matrix(self, columns: Sequence[str]) -> list[list[Fraction]]:
        return [[row.coeffs.get(c, ZERO) for c in columns] for row in self.rows]


def make_conditions(
    M: MarkedPoset | None,
    rows: Sequence[tuple[Mapping[str, object], object]],
) -> LinearConditions:
    """Rows ``(coeffs, rhs)`` meaning ``sum coeffs[p] * x_p == rhs``. Zero
    coefficients are dropped; keys are checked against ``M`` when given."""
    out = []
    for coeffs, rhs in rows:
        clean = {}
        for p, c in coeffs.items():
            if M is not None and p not in M.poset:
                raise UnknownElementError(p)
            value = to_fraction(c)
            if value:
                clean[p] = clean.get(p, ZERO) + value
        out.append(Condition({p: v for p, v in clean.items() if v}, to_fraction(rhs)))
    return LinearConditions(tuple(out))


def conditional_membership(M: MarkedPoset, S: LinearConditions, x: Mapping[str, Fraction]) -> bool:
    return M.contains(x) and S.satisfied_by(x)


def conditional_hpolyhedron(M: MarkedPoset, S: LinearConditions) -> HPolyhedron:
    """H-representation of the marked order polyhedron with the condition rows
    appended as equations."""
    from .geometry import h_representation

    H = h_representation(M)
    rows = [
        (tuple(row.coeffs.get(c, ZERO) for c in H.coordinates), row.rhs)
        for row in S.rows
    ]
    return H.with_equations(rows)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        out.append([int(Fraction(v) * den) for v in row])
    return out


def bareiss_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free (Bareiss) elimination over the integers."""
    A = _integer_rows(rows)
    if not A or not A[0]:
        return 0
    m, n = len(A), len(A[0])
    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((i for i in range(rank, m) if A[i][col] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        for i in range(rank + 1, m):
            for j in range(col + 1, n):
                A[i][j] = (A[i][j] * A[rank][col] - A[i][col] * A[rank][j]) // prev
            A[i][col] = 0
        prev = A[rank][col]
        rank += 1
        if rank == m:
            break
    return rank


@dataclass(frozen=True)
class TilingMap:
    """Matrix of ``s`` restricted to block-constant vectors supported on free
    blocks: entry ``(k, B)`` is the sum of row ``k``'s coefficients over
    ``B``."""

    columns: tuple[tuple[str, ...], ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return bareiss_rank(self.matrix)

    @property
    def kernel_dimension(self) -> int:
        return len(self.columns) - self.rank


def tiling_map(M: MarkedPoset, S: LinearConditions, pi: Partition) -> TilingMap:
    columns = tuple(pi.free_blocks)
    matrix = tuple(
        tuple(sum((row.coeffs.get(p, ZERO) for p in block), ZERO) for block in columns)
        for row in S.rows
    )
    return TilingMap(columns, matrix)


def minimal_face_dimension(M: MarkedPoset, S: LinearConditions, x: Mapping[str, Fraction]) -> int:
    """Dimension of the smallest face of the conditional polyhedron that
    contains ``x``: the kernel dimension of the tiling map at ``x``."""
    if not conditional_membership(M, S, x):
        raise NotInPolyhedronError("point is not in the conditional polyhedron")
    return tiling_map(M, S, partition_from_point(M, x)).kernel_dimension


def conditions_quotient(S: LinearConditions, pi: Partition, M: MarkedPoset | None = None) -> LinearConditions:
    """Conditions on the quotient by ``pi``: coefficients summed per block
    (named as in :func:`markedorder.marked.quotient`), right-hand sides
    unchanged. Pass ``M`` to have the partition checked for compatibility."""
    if M is not None and not is_pl_compatible(M, pi):
        raise NotCompatibleError("partition is not (P, lambda)-compatible")
    names = [block_name(b) for b in pi.blocks]
    rows = []
    for row in S.rows:
        coeffs = {}
        for name, block in zip(names, pi.blocks):
            total = sum((row.coeffs.get(p, ZERO) for p in block), ZERO)
            if total:
                coeffs[name] = total
        rows.append(Condition(coeffs, row.rhs))
    return LinearConditions(tuple(rows))


@dataclass(frozen=True)
class Embedding:
    marked_poset: MarkedPoset
    conditions: LinearConditions
    variables: tuple[str, ...]
    slacks: tuple[str, ...]
    project: Callable[[Mapping[str, Fraction]], tuple[Fraction, ...]]


def embed_polyhedron(
    ineq_rows: Sequence[tuple[Sequence[object], object]],
    eq_rows: Sequence[tuple[Sequence[object], object]],
    n: int,
) -> Embedding:
    """Realize ``{y in Q^n : a.y >= c (ineq rows), a.y == c (eq rows)}`` as a
    conditional marked order polyhedron.

    Elements ``p1..pn`` carry the variables, one ``q_l`` per inequality sits
    below a single element ``r`` marked 0, and the conditions
    ``c_l - a_l.y - x_{q_l} == 0`` turn ``x_{q_l} <= 0`` into the inequality.
    The projection onto ``(x_{p1}, ..., x_{pn})`` is the affine isomorphism.
    """
    variables = tuple(f"p{i + 1}" for i in range(n))
    slacks = tuple(f"q{l + 1}" for l in range(len(ineq_rows)))
    top = "r"
    P = build_poset(variables + slacks + (top,), [(q, top) for q in slacks])
    M = make_marked_poset(P, {top: 0})

    def checked(coeffs):
        coeffs = [to_fraction(v) for v in coeffs]
        if len(coeffs) != n:
            raise ValueError(f"row has {len(coeffs)} coefficients, expected {n}")
        return coeffs

    rows = []
    for coeffs, rhs in eq_rows:
        rows.append((dict(zip(variables, checked(coeffs))), rhs))
    for q, (coeffs, rhs) in zip(slacks, ineq_rows):
        row = {p: -c for p, c in zip(variables, checked(coeffs))}
        row[q] = Fraction(-1)
        rows.append((row, -to_fraction(rhs)))
    S = make_conditions(M, rows)

    def project(x: Mapping[str, Fraction]) -> tuple[Fraction, ...]:
        return tuple(Fraction(x[p]) for p in variables)

    return Embedding(M, S, variables, slacks, project)

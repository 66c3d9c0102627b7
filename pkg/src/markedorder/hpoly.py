"""Exact H-representations shared by the combinatorial side and the oracle."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Row = tuple[tuple[Fraction, ...], Fraction]


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : a.x >= b for (a, b) in inequalities, a.x == b for (a, b) in equations}``
    with coordinates named by ``coordinates``."""

    coordinates: tuple[str, ...]
    inequalities: tuple[Row, ...] = ()
    equations: tuple[Row, ...] = ()

    def __post_init__(self):
        n = len(self.coordinates)
        for coeffs, _ in self.inequalities + self.equations:
            if len(coeffs) != n:
                raise ValueError(f"row has {len(coeffs)} coefficients, expected {n}")

    @property
    def dimension_of_space(self) -> int:
        return len(self.coordinates)

    def vector(self, point: Mapping[str, Fraction] | Sequence[Fraction]) -> tuple[Fraction, ...]:
        if isinstance(point, Mapping):
            return tuple(Fraction(point[c]) for c in self.coordinates)
        if len(point) != len(self.coordinates):
            raise ValueError("point has the wrong length")
        return tuple(Fraction(v) for v in point)

    def contains(self, point) -> bool:
        x = self.vector(point)
        return all(_dot(a, x) >= b for a, b in self.inequalities) and all(
            _dot(a, x) == b for a, b in self.equations
        )

    def tight_rows(self, point) -> list[int]:
        """Indices of inequality rows satisfied with equality at ``point``."""
        x = self.vector(point)
        return [i for i, (a, b) in enumerate(self.inequalities) if _dot(a, x) == b]

    def with_equations(self, rows: Sequence[Row]) -> "HPolyhedron":
        return HPolyhedron(self.coordinates, self.inequalities, self.equations + tuple(rows))

    def homogenized(self) -> "HPolyhedron":
        """The recession cone: same rows with zero right-hand sides."""
        zero = Fraction(0)
        return HPolyhedron(
            self.coordinates,
            tuple((a, zero) for a, _ in self.inequalities),
            tuple((a, zero) for a, _ in self.equations),
        )


def _dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x)), Fraction(0))

"""Hamming graph model.

A graph is a Cartesian product of complete-graph powers K_n1^t1 x ... x K_nm^tm
with strictly increasing factor sizes n1 < ... < nm.  Vertices are tuples of
1-based coordinates, one per column; column j of a K_n^t factor takes values
in {1..n}.  Distance between vertices is the number of coordinates where they
differ, so the diameter equals the total number of columns.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ShapeError, SpecError

Vertex = tuple[int, ...]


@dataclass(frozen=True)
class Factor:
    size: int    # order of the complete graph K_n
    copies: int  # how many columns this factor contributes


@dataclass(frozen=True)
class GraphSpec:
    """Immutable description of a Hamming graph.

    `factors` is a tuple of Factor(size, copies) with strictly increasing
    sizes.  Derived quantities: `diameter` (total column count), `num_vertices`
    (product of size**copies), and `cumulative_widths` (running column counts
    after each factor).
    """

    factors: tuple[Factor, ...]

    def __post_init__(self) -> None:
        factors = tuple(
            f if isinstance(f, Factor) else Factor(int(f[0]), int(f[1]))
            for f in self.factors
        )
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise SpecError("spec needs at least one factor")
        for f in factors:
            if f.size < 2:
                raise SpecError(f"complete factor needs size >= 2, got {f.size}")
            if f.copies < 1:
                raise SpecError(f"factor K_{f.size} needs at least one copy, got {f.copies}")
        sizes = [f.size for f in factors]
        if any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise SpecError(f"factor sizes must be strictly increasing, got {sizes}")

    @property
    def diameter(self) -> int:
        return sum(f.copies for f in self.factors)

    @property
    def num_vertices(self) -> int:
        return math.prod(f.size ** f.copies for f in self.factors)

    @property
    def cumulative_widths(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(f.copies for f in self.factors))

    def column_size(self, col: int) -> int:
        """Alphabet size of 1-based column `col`."""
        if col < 1 or col > self.diameter:
            raise ShapeError(f"column {col} out of range 1..{self.diameter}")
        for f, width in zip(self.factors, self.cumulative_widths):
            if col <= width:
                return f.size
        raise AssertionError("unreachable")

    def column_sizes(self) -> tuple[int, ...]:
        out: list[int] = []
        for f in self.factors:
            out.extend([f.size] * f.copies)
        return tuple(out)

    def validate_vertex(self, v: Iterable[int]) -> Vertex:
        v = tuple(v)
        sizes = self.column_sizes()
        if len(v) != len(sizes):
            raise ShapeError(f"vertex {v} has {len(v)} coordinates, expected {len(sizes)}")
        for coord, size in zip(v, sizes):
            if not 1 <= coord <= size:
                raise ShapeError(f"coordinate {coord} outside 1..{size} in vertex {v}")
        return v

    def constant_vertex(self, value: int) -> Vertex:
        """The vertex with every coordinate equal to `value` (must fit every column)."""
        return self.validate_vertex((value,) * self.diameter)


def make_graph_spec(factors: Iterable[tuple[int, int]]) -> GraphSpec:
    return GraphSpec(tuple(factors))


def distance(u: Vertex, v: Vertex) -> int:
    """Number of coordinates where u and v differ."""
    if len(u) != len(v):
        raise ShapeError(f"vertices have different lengths: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def shared_coordinates(u: Vertex, v: Vertex) -> int:
    """Number of coordinates where u and v agree (diameter minus distance)."""
    if len(u) != len(v):
        raise ShapeError(f"vertices have different lengths: {len(u)} vs {len(v)}")
    return sum(a == b for a, b in zip(u, v))


def enumerate_vertices(spec: GraphSpec) -> Iterator[Vertex]:
    """All vertices in lexicographic coordinate order, lazily."""
    ranges = [range(1, size + 1) for size in spec.column_sizes()]
    return itertools.product(*ranges)

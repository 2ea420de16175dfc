"""Triangular lattice geometry and the four corona region families.

Lattice points are integer pairs ``(a, b)`` in the basis ``(1, 0)`` and
``(1/2, sqrt(3)/2)``; everything here is integer arithmetic.

The up-triangle ``U(x, y)`` has corners ``(x, y), (x+1, y), (x, y+1)`` and the
down-triangle ``D(x, y)`` has corners ``(x+1, y), (x, y+1), (x+1, y+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple

Vertex = tuple[int, int]

# Counterclockwise unit steps, 60 degrees apart.
DIRECTIONS: tuple[Vertex, ...] = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

LEFT_TILTED = "left"
RIGHT_TILTED = "right"
VERTICAL = "vertical"


class TriangleId(NamedTuple):
    x: int
    y: int
    points_up: bool

    def vertices(self) -> tuple[Vertex, Vertex, Vertex]:
        x, y = self.x, self.y
        if self.points_up:
            return (x, y), (x + 1, y), (x, y + 1)
        return (x + 1, y), (x, y + 1), (x + 1, y + 1)

    def translate(self, dx: int, dy: int) -> TriangleId:
        return TriangleId(self.x + dx, self.y + dy, self.points_up)

    def __repr__(self) -> str:
        return f"{'U' if self.points_up else 'D'}({self.x},{self.y})"


def up(x: int, y: int) -> TriangleId:
    return TriangleId(x, y, True)


def down(x: int, y: int) -> TriangleId:
    return TriangleId(x, y, False)


def adjacency(t: TriangleId) -> list[TriangleId]:
    """The three triangles sharing an edge with `t`.

    For an up-triangle the order is: across the slanted edge, across the
    left edge, across the bottom edge. Down-triangles mirror it.
    """
    x, y = t.x, t.y
    if t.points_up:
        return [down(x, y), down(x - 1, y), down(x, y - 1)]
    return [up(x, y), up(x + 1, y), up(x, y + 1)]


def vertex_triangles(v: Vertex) -> list[TriangleId]:
    """The six triangles having `v` as a corner."""
    x, y = v
    return [up(x, y), up(x - 1, y), up(x, y - 1),
            down(x - 1, y), down(x, y - 1), down(x - 1, y - 1)]


def triangle_from_vertices(vs: Iterable[Vertex]) -> TriangleId:
    """Inverse of `TriangleId.vertices`."""
    vs = sorted(vs)
    if len(vs) != 3:
        raise ValueError("a triangle has three vertices")
    x = min(v[0] for v in vs)
    y = min(v[1] for v in vs)
    # both orientations put their coordinate-wise minimum at (x, y)
    for t in (up(x, y), down(x, y)):
        if sorted(t.vertices()) == vs:
            return t
    raise ValueError(f"not a unit triangle: {vs}")


class Lozenge(NamedTuple):
    """Two edge-adjacent triangles, stored in lexicographic order."""

    first: TriangleId
    second: TriangleId

    @classmethod
    def of(cls, a: TriangleId, b: TriangleId) -> Lozenge:
        if a.points_up == b.points_up or b not in adjacency(a):
            raise ValueError(f"{a!r} and {b!r} are not edge-adjacent")
        return cls(a, b) if a < b else cls(b, a)

    @property
    def up_triangle(self) -> TriangleId:
        return self.first if self.first.points_up else self.second

    @property
    def down_triangle(self) -> TriangleId:
        return self.second if self.first.points_up else self.first

    @property
    def orientation(self) -> str:
        u, d = self.up_triangle, self.down_triangle
        if (d.x, d.y) == (u.x, u.y):
            return RIGHT_TILTED
        if (d.x, d.y) == (u.x - 1, u.y):
            return LEFT_TILTED
        return VERTICAL

    def triangles(self) -> tuple[TriangleId, TriangleId]:
        return self.first, self.second

    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        """Corners in counterclockwise order."""
        u = self.up_triangle
        x, y = u.x, u.y
        o = self.orientation
        if o == RIGHT_TILTED:
            return (x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)
        if o == LEFT_TILTED:
            return (x, y), (x + 1, y), (x, y + 1), (x - 1, y + 1)
        return (x, y), (x + 1, y - 1), (x + 1, y), (x, y + 1)

    def translate(self, dx: int, dy: int) -> Lozenge:
        return Lozenge(self.first.translate(dx, dy), self.second.translate(dx, dy))

    def __repr__(self) -> str:
        return f"L[{self.first!r},{self.second!r}]"


def _rotate_vertex(v: Vertex, turns: int) -> Vertex:
    a, b = v
    for _ in range(turns % 6):
        a, b = -b, a + b
    return a, b


def rotate_triangle(t: TriangleId, turns: int = 1) -> TriangleId:
    """Rotate by ``60 * turns`` degrees counterclockwise about the origin."""
    return triangle_from_vertices(_rotate_vertex(v, turns) for v in t.vertices())


def rotate_lozenge(lz: Lozenge, turns: int = 1) -> Lozenge:
    return Lozenge.of(rotate_triangle(lz.first, turns), rotate_triangle(lz.second, turns))


@dataclass(frozen=True)
class Shape:
    """One of ``hexagon``, ``diamond``, ``gen-hexagon``, ``gen-diamond``."""

    kind: str
    sides: tuple[int, ...]

    def __post_init__(self):
        arity = {"hexagon": 1, "diamond": 1, "gen-hexagon": 3, "gen-diamond": 2}
        if self.kind not in arity:
            raise ValueError(f"unknown shape {self.kind!r}")
        if len(self.sides) != arity[self.kind]:
            raise ValueError(f"{self.kind} takes {arity[self.kind]} side length(s), got {len(self.sides)}")

    def side_cycle(self) -> tuple[int, ...]:
        """Side lengths counterclockwise from the bottom-left corner."""
        if self.kind == "hexagon":
            return self.sides * 6
        if self.kind == "diamond":
            return self.sides * 4
        return self.sides * 2

    @property
    def perimeter(self) -> int:
        return sum(self.side_cycle())

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.sides))})"


def Hexagon(n: int) -> Shape:
    return Shape("hexagon", (n,))


def Diamond(n: int) -> Shape:
    return Shape("diamond", (n,))


def GenHexagon(n1: int, n2: int, n3: int) -> Shape:
    return Shape("gen-hexagon", (n1, n2, n3))


def GenDiamond(n1: int, n2: int) -> Shape:
    return Shape("gen-diamond", (n1, n2))


@dataclass(frozen=True)
class Region:
    shape: Shape
    triangles: frozenset[TriangleId]
    boundary_vertices: tuple[Vertex, ...]
    corners: tuple[Vertex, ...] = field(default=())

    def translate(self, dx: int, dy: int) -> Region:
        return Region(
            self.shape,
            frozenset(t.translate(dx, dy) for t in self.triangles),
            tuple((a + dx, b + dy) for a, b in self.boundary_vertices),
            tuple((a + dx, b + dy) for a, b in self.corners),
        )


def _corner_cycle(shape: Shape) -> tuple[Vertex, ...]:
    if shape.kind in ("hexagon", "gen-hexagon"):
        steps = DIRECTIONS
    else:
        steps = (DIRECTIONS[0], DIRECTIONS[1], DIRECTIONS[3], DIRECTIONS[4])
    corners = [(0, 0)]
    for (da, db), length in zip(steps, shape.side_cycle()):
        a, b = corners[-1]
        corners.append((a + length * da, b + length * db))
    assert corners[-1] == (0, 0)
    return tuple(corners[:-1])


def _centroid3(t: TriangleId) -> Vertex:
    # three times the centroid, so it stays integral
    k = 1 if t.points_up else 2
    return 3 * t.x + k, 3 * t.y + k


def _strictly_inside(corners: tuple[Vertex, ...], p3: Vertex) -> bool:
    px, py = p3
    k = len(corners)
    for i in range(k):
        (ax, ay), (bx, by) = corners[i], corners[(i + 1) % k]
        if (bx - ax) * (py - 3 * ay) - (by - ay) * (px - 3 * ax) <= 0:
            return False
    return True


def build_region(shape: Shape) -> Region:
    """Triangle set and boundary of `shape`, bottom-left corner at the origin."""
    if any(s <= 0 for s in shape.sides):
        raise ValueError(f"side lengths must be positive: {shape}")
    corners = _corner_cycle(shape)
    xs = [a for a, _ in corners]
    ys = [b for _, b in corners]
    triangles = frozenset(
        t
        for x in range(min(xs) - 1, max(xs) + 1)
        for y in range(min(ys) - 1, max(ys) + 1)
        for t in (up(x, y), down(x, y))
        if _strictly_inside(corners, _centroid3(t))
    )
    boundary = []
    for i, (a, b) in enumerate(corners):
        c, d = corners[(i + 1) % len(corners)]
        g = gcd(c - a, d - b)
        da, db = (c - a) // g, (d - b) // g
        boundary.extend((a + s * da, b + s * db) for s in range(g))
    return Region(shape, triangles, tuple(boundary), corners)


@lru_cache(maxsize=64)
def external_ring_triangles(r: Region) -> frozenset[TriangleId]:
    """Triangles outside `r` that touch its boundary in at least one vertex."""
    return frozenset(
        t for v in r.boundary_vertices for t in vertex_triangles(v) if t not in r.triangles
    )


@lru_cache(maxsize=64)
def candidate_lozenges(r: Region) -> frozenset[Lozenge]:
    """Lozenges outside `r` having at least one vertex on its boundary."""
    ring = external_ring_triangles(r)
    found = set()
    for t in ring:
        for s in adjacency(t):
            if s not in r.triangles:
                found.add(Lozenge.of(t, s))
    return frozenset(found)

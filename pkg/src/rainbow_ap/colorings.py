"""Colorings, templates, rainbow detection and rainbow-hypergraph statistics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .numbers import APTriple, Structure, count_3aps_interval, list_3aps


@dataclass(frozen=True)
class Coloring:
    structure: Structure
    r: int
    assignment: Mapping[int, int]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        if set(self.assignment) != set(self.structure.support):
            raise ValueError("coloring must be total on the support")
        for x, c in self.assignment.items():
            if not 1 <= c <= self.r:
                raise ValueError(f"color {c} of {x} outside [1, {self.r}]")

    @classmethod
    def from_sequence(cls, s: Structure, r: int, colors) -> Coloring:
        return cls(s, r, dict(zip(s.support, colors)))

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def is_exact(self) -> bool:
        return self.colors_used() == self.r


@dataclass(frozen=True)
class Template:
    structure: Structure
    r: int
    palette: Mapping[int, frozenset]

    def __post_init__(self):
        lo, hi = self.structure.ambient_range
        for x, pal in self.palette.items():
            if not lo <= x <= hi:
                raise ValueError(f"element {x} outside the ambient range")
            if not set(pal) <= set(range(1, self.r + 1)):
                raise ValueError(f"palette at {x} not inside [1, {self.r}]")

    def at(self, x: int) -> frozenset:
        return frozenset(self.palette.get(x, ()))


@dataclass(frozen=True)
class HypergraphStats:
    vertex_count: int
    edge_count: int
    max_codegree_2: int
    max_codegree_3: int
    average_degree: Fraction

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "max_codegree_2": self.max_codegree_2,
            "max_codegree_3": self.max_codegree_3,
            "average_degree": str(self.average_degree),
        }


def template_of(c: Coloring) -> Template:
    return Template(c.structure, c.r, {x: frozenset((col,)) for x, col in c.assignment.items()})


def find_rainbow_3ap(c: Coloring) -> APTriple | None:
    col = c.assignment
    for t in list_3aps(c.structure):
        if len({col[t.a], col[t.b], col[t.c]}) == 3:
            return t
    return None


def has_rainbow_3ap(c: Coloring) -> bool:
    return find_rainbow_3ap(c) is not None


def is_subtemplate(p1: Template, p2: Template) -> bool:
    if p1.structure.kind != p2.structure.kind or p1.structure.n != p2.structure.n \
            or p1.r != p2.r:
        raise ValueError("templates differ in structure or number of colors")
    return all(p1.at(x) <= p2.at(x) for x in p1.palette)


def _distinct_triples(A: frozenset, B: frozenset, C: frozenset) -> int:
    # |A x B x C| minus tuples with a repeated color (inclusion-exclusion)
    ab, ac, bc = len(A & B), len(A & C), len(B & C)
    return len(A) * len(B) * len(C) - ab * len(C) - ac * len(B) - bc * len(A) \
        + 2 * len(A & B & C)


def count_rainbow_subtemplates(p: Template) -> int:
    """R(P): rainbow-3-AP subtemplates of P.

    Only progressions lying inside the structure's support are counted.
    """
    return sum(_distinct_triples(p.at(t.a), p.at(t.b), p.at(t.c))
               for t in list_3aps(p.structure))


def _aps_through_pair(a: int, b: int, n: int) -> int:
    # third element may be 2a-b, 2b-a or the midpoint
    k = 0
    for z in (2 * a - b, 2 * b - a):
        if 1 <= z <= n:
            k += 1
    if (a + b) % 2 == 0:
        k += 1
    return k


def rainbow_hypergraph_stats(n: int, r: int) -> HypergraphStats:
    """Statistics of the 3-graph on [n] x [r] whose edges are rainbow 3-APs.

    Never builds the hypergraph: the edge count is closed form and the pair
    co-degree is (r - 2) times the largest number of 3-APs through two
    integers, found by an O(n^2) scan of integer pairs.
    """
    if n < 3 or r < 3:
        raise ValueError("need n >= 3 and r >= 3")
    edges = r * (r - 1) * (r - 2) * count_3aps_interval(n)
    best = max(_aps_through_pair(a, b, n) for a in range(1, n + 1) for b in range(a + 1, n + 1))
    vertices = n * r
    return HypergraphStats(vertices, edges, (r - 2) * best, 1 if edges else 0,
                           Fraction(3 * edges, vertices))

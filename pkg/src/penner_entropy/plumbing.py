"""Plumbing trees: vertex bipartition and grading data.

Vertices are strings and are always handled in lexicographic order, so every
enumeration downstream (neighbors, matrix rows, emitted terms) is
deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import BadGrading, DimensionTooSmall, NotATree, UnknownVertex
from .shift import ShiftExpr

Vertex = str
Edge = frozenset


@dataclass(frozen=True)
class Tree:
    vertices: tuple[Vertex, ...]
    edges: frozenset[frozenset[Vertex]]
    _adjacency: Mapping[Vertex, tuple[Vertex, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        adj: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = sorted(e)
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(
            self,
            "_adjacency",
            MappingProxyType({v: tuple(sorted(ws)) for v, ws in adj.items()}),
        )

    def __contains__(self, v) -> bool:
        return v in self._adjacency

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        try:
            return self._adjacency[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def adjacent(self, v: Vertex, w: Vertex) -> bool:
        return frozenset((v, w)) in self.edges and v != w

    def sorted_edges(self) -> list[tuple[Vertex, Vertex]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


@dataclass(frozen=True)
class Bipartition:
    plus: frozenset[Vertex]
    minus: frozenset[Vertex]

    def sign(self, v: Vertex) -> int:
        """+1 on the root's color class, -1 on the other."""
        if v in self.plus:
            return 1
        if v in self.minus:
            return -1
        raise UnknownVertex(f"unknown vertex {v!r}")


@dataclass(frozen=True)
class GradingAssignment:
    """Degrees ``s(v,w)`` with ``s(v,w) + s(w,v) = n`` on every edge.

    Each edge has one *anchored* orientation whose degree is a constant; the
    opposite orientation is ``n`` minus that constant. :meth:`symbolic`
    reflects this, so shifts built from it stay exact for every ``n``.
    """

    n: int
    s: Mapping[tuple[Vertex, Vertex], int]
    anchored: frozenset[tuple[Vertex, Vertex]]

    def __call__(self, v: Vertex, w: Vertex) -> int:
        try:
            return self.s[(v, w)]
        except KeyError:
            raise UnknownVertex(f"{v!r} and {w!r} are not adjacent") from None

    def symbolic(self, v: Vertex, w: Vertex) -> ShiftExpr:
        if (v, w) in self.anchored:
            return ShiftExpr(self(v, w), 0)
        return ShiftExpr(-self(w, v), 1)


@dataclass(frozen=True)
class PlumbingSpec:
    tree: Tree
    n: int
    bipartition: Bipartition
    grading: GradingAssignment

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self.tree.vertices

    def index(self, v: Vertex) -> int:
        self.check_vertex(v)
        return self.tree.vertices.index(v)

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        return self.tree.neighbors(v)

    def s(self, v: Vertex, w: Vertex) -> int:
        return self.grading(v, w)

    def s_expr(self, v: Vertex, w: Vertex) -> ShiftExpr:
        return self.grading.symbolic(v, w)

    def sigma(self, v: Vertex) -> int:
        return self.bipartition.sign(v)

    def check_vertex(self, v) -> None:
        if v not in self.tree:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def with_n(self, n: int) -> "PlumbingSpec":
        """Same tree and anchored degrees, completed for dimension ``n``."""
        overrides = sorted((pair, self.s(*pair)) for pair in self.grading.anchored)
        return build_plumbing(self.vertices, self.tree.sorted_edges(), n, overrides)


def _make_tree(vertices: Iterable, edges: Iterable) -> Tree:
    verts = [str(v) for v in vertices]
    if not verts:
        raise NotATree("a tree needs at least one vertex")
    if len(set(verts)) != len(verts):
        raise NotATree("duplicate vertex identifiers")
    known = set(verts)
    edge_set: set[frozenset[str]] = set()
    for e in edges:
        a, b = (str(x) for x in e)
        if a == b:
            raise NotATree(f"self-loop at {a!r}")
        for x in (a, b):
            if x not in known:
                raise UnknownVertex(f"edge endpoint {x!r} is not a declared vertex")
        key = frozenset((a, b))
        if key in edge_set:
            raise NotATree(f"duplicate edge {{{a}, {b}}}")
        edge_set.add(key)
    if len(edge_set) != len(verts) - 1:
        raise NotATree(
            f"{len(verts)} vertices need {len(verts) - 1} edges, got {len(edge_set)}"
        )
    tree = Tree(tuple(sorted(verts)), frozenset(edge_set))
    # with |E| = |V|-1, connected is equivalent to acyclic
    seen = {tree.vertices[0]}
    queue = deque(seen)
    while queue:
        for w in tree.neighbors(queue.popleft()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(verts):
        raise NotATree("graph is disconnected (and therefore has a cycle)")
    return tree


def bipartition(tree: Tree) -> Bipartition:
    """Breadth-first 2-coloring rooted at the lexicographically smallest vertex."""
    root = tree.vertices[0]
    color = {root: 1}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in tree.neighbors(v):
            if w not in color:
                color[w] = -color[v]
                queue.append(w)
    return Bipartition(
        plus=frozenset(v for v, c in color.items() if c == 1),
        minus=frozenset(v for v, c in color.items() if c == -1),
    )


def build_plumbing(vertices, edges, n: int, grading_overrides=None) -> PlumbingSpec:
    """Validate a tree and attach dimension, bipartition and grading.

    ``grading_overrides`` is an iterable of ``((v, w), s)`` fixing
    ``s(v, w) = s`` and hence ``s(w, v) = n - s``. Unlisted edges get
    ``s = 1`` from the lexicographically smaller endpoint.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise DimensionTooSmall(f"dimension must be an integer, got {n!r}")
    if n < 3:
        raise DimensionTooSmall(f"dimension n={n} < 3")
    tree = _make_tree(vertices, edges)

    s: dict[tuple[str, str], int] = {}
    anchored: dict[frozenset, tuple[str, str]] = {}
    for a, b in tree.sorted_edges():
        s[(a, b)] = 1
        s[(b, a)] = n - 1
        anchored[frozenset((a, b))] = (a, b)

    fixed: dict[tuple[str, str], int] = {}
    overridden: set[frozenset] = set()
    for edge, value in grading_overrides or ():
        a, b = (str(x) for x in edge)
        if not tree.adjacent(a, b):
            raise BadGrading(f"grading override on non-edge ({a}, {b})")
        if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= n - 1:
            raise BadGrading(f"s({a},{b})={value!r} outside 1..{n - 1}")
        for key, val in (((a, b), value), ((b, a), n - value)):
            if fixed.get(key, val) != val:
                raise BadGrading(f"conflicting overrides for edge ({a}, {b})")
            fixed[key] = val
        if frozenset((a, b)) not in overridden:
            overridden.add(frozenset((a, b)))
            anchored[frozenset((a, b))] = (a, b)
    s.update(fixed)

    return PlumbingSpec(
        tree=tree,
        n=n,
        bipartition=bipartition(tree),
        grading=GradingAssignment(
            n, MappingProxyType(dict(sorted(s.items()))), frozenset(anchored.values())
        ),
    )


def geometric_path(spec: PlumbingSpec, v: Vertex, w: Vertex) -> list[Vertex]:
    """The unique simple path from ``v`` to ``w`` (endpoints included)."""
    spec.check_vertex(v)
    spec.check_vertex(w)
    parent = {v: None}
    queue = deque([v])
    while queue and w not in parent:
        x = queue.popleft()
        for y in spec.neighbors(x):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [w]
    while path[-1] != v:
        path.append(parent[path[-1]])
    return path[::-1]

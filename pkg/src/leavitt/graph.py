"""Finite directed graphs, paths, cycles and the decidable graph conditions.

Declaration order matters: it fixes the designated edge of every regular
vertex (the first-declared edge it emits) and every tie-break used by the
enumeration and witness routines.

Cofinality is decided on the condensation. In a finite graph the tail of an
infinite path stays inside one strongly connected component containing an
edge, and every such component carries an infinite path; reaching one vertex
of a component reaches all of it. So a graph is cofinal exactly when every
vertex reaches every strongly connected component that contains an edge.
"""

from __future__ import annotations

import re
from collections import deque
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import DuplicateName, ParseError, UndeclaredVertex, UnknownName, UnknownVertex

__all__ = [
    "Graph",
    "Path",
    "Cycle",
    "VertexKind",
    "parse_graph",
    "classify_vertex",
    "enumerate_paths",
    "simple_cycles",
    "check_condition_L",
    "check_condition_K",
    "is_cofinal",
]

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class VertexKind(Enum):
    SINK = "sink"
    REGULAR = "regular"


class Path(NamedTuple):
    """A path ``edges`` from ``source`` to ``target``; vertices are length-0 paths."""

    source: str
    target: str
    edges: tuple = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    def is_vertex(self) -> bool:
        return not self.edges

    def is_prefix_of(self, other: Path) -> bool:
        n = len(self.edges)
        return self.source == other.source and other.edges[:n] == self.edges

    def __str__(self):
        return " ".join(self.edges) if self.edges else self.source


class Cycle(NamedTuple):
    path: Path

    @property
    def base(self) -> str:
        return self.path.source

    @property
    def edges(self) -> tuple:
        return self.path.edges

    def __str__(self):
        return str(self.path)


class Graph:
    """An immutable finite directed graph ``(E0, E1, r, s)``.

    ``edges`` is a sequence of ``(name, source, target)`` triples. Vertex and
    edge names share one namespace so that algebra expressions are unambiguous.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]] = ()):
        self.vertices = tuple(vertices)
        self.edges = tuple((str(n), str(s), str(t)) for n, s, t in edges)
        seen = set()
        for name in self.vertices + tuple(e[0] for e in self.edges):
            if name in seen:
                raise DuplicateName(f"name {name!r} declared twice")
            seen.add(name)
        vset = set(self.vertices)
        for name, s, t in self.edges:
            for v in (s, t):
                if v not in vset:
                    raise UndeclaredVertex(f"edge {name!r} uses undeclared vertex {v!r}")

        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.edge_index = {e[0]: i for i, e in enumerate(self.edges)}
        self.src = {n: s for n, s, _ in self.edges}
        self.dst = {n: t for n, _, t in self.edges}
        out = {v: [] for v in self.vertices}
        inc = {v: [] for v in self.vertices}
        for n, s, t in self.edges:
            out[s].append(n)
            inc[t].append(n)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inc.items()}

    # -- basic queries -------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)}, edges={list(self.edges)})"

    def has_vertex(self, v) -> bool:
        return v in self.vertex_index

    def has_edge(self, e) -> bool:
        return e in self.edge_index

    def _check_vertex(self, v):
        if v not in self.vertex_index:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def out_edges(self, v) -> tuple:
        self._check_vertex(v)
        return self._out[v]

    def in_edges(self, v) -> tuple:
        self._check_vertex(v)
        return self._in[v]

    def is_sink(self, v) -> bool:
        return not self.out_edges(v)

    @cached_property
    def sinks(self) -> tuple:
        return tuple(v for v in self.vertices if not self._out[v])

    @cached_property
    def regular_vertices(self) -> tuple:
        return tuple(v for v in self.vertices if self._out[v])

    @cached_property
    def designated(self) -> dict:
        """Designated edge of each regular vertex: its first-declared edge."""
        return {v: es[0] for v, es in self._out.items() if es}

    @cached_property
    def designated_edges(self) -> frozenset:
        return frozenset(self.designated.values())

    @cached_property
    def siblings(self) -> dict:
        """For a designated edge e, the other edges leaving s(e), in order."""
        return {e: self._out[self.src[e]][1:] for e in self.designated_edges}

    # -- paths ---------------------------------------------------------------

    def vertex_path(self, v) -> Path:
        self._check_vertex(v)
        return Path(v, v, ())

    def path(self, *edges: str) -> Path:
        """The path through ``edges``; a single vertex name gives a length-0 path."""
        if len(edges) == 1 and edges[0] in self.vertex_index:
            return self.vertex_path(edges[0])
        if not edges:
            raise ValueError("a path needs at least one edge or a vertex")
        for e in edges:
            if e not in self.edge_index:
                raise UnknownName(f"unknown edge {e!r}")
        for a, b in zip(edges, edges[1:]):
            if self.dst[a] != self.src[b]:
                raise ValueError(f"edges {a!r} and {b!r} are not composable")
        return Path(self.src[edges[0]], self.dst[edges[-1]], tuple(edges))

    def extend(self, p: Path, e: str) -> Path:
        if self.src[e] != p.target:
            raise ValueError(f"edge {e!r} does not start at {p.target!r}")
        return Path(p.source, self.dst[e], p.edges + (e,))

    def concat(self, p: Path, q: Path) -> Path:
        if p.target != q.source:
            raise ValueError(f"paths {p} and {q} are not composable")
        return Path(p.source, q.target, p.edges + q.edges)

    def path_key(self, p: Path) -> tuple:
        """Sort key: lexicographic in edge declaration order, then source vertex."""
        return (tuple(self.edge_index[e] for e in p.edges), self.vertex_index[p.source])

    def path_vertices(self, p: Path) -> list:
        return [p.source] + [self.dst[e] for e in p.edges]

    # -- reachability ----------------------------------------------------------

    def reachable_from(self, vs: Iterable[str]) -> set:
        seen = set()
        stack = []
        for v in vs:
            self._check_vertex(v)
            if v not in seen:
                seen.add(v)
                stack.append(v)
        while stack:
            v = stack.pop()
            for e in self._out[v]:
                w = self.dst[e]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def reaches(self, v, w) -> bool:
        return w in self.reachable_from([v])

    def shortest_path(self, v, goal) -> Path | None:
        """Lexicographically least among the shortest paths from ``v`` to a vertex
        satisfying ``goal``; breadth-first with edges tried in declaration order."""
        self._check_vertex(v)
        start = Path(v, v, ())
        if goal(v):
            return start
        seen = {v}
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for e in self._out[p.target]:
                w = self.dst[e]
                if w in seen:
                    continue
                seen.add(w)
                q = Path(v, w, p.edges + (e,))
                if goal(w):
                    return q
                queue.append(q)
        return None

    def shortest_cycle_at(self, v) -> Path | None:
        """Lexicographically least shortest closed path of positive length at ``v``."""
        self._check_vertex(v)
        seen = set()
        queue = deque(Path(v, self.dst[e], (e,)) for e in self._out[v])
        while queue:
            p = queue.popleft()
            if p.target == v:
                return p
            if p.target in seen:
                continue
            seen.add(p.target)
            for e in self._out[p.target]:
                queue.append(Path(v, self.dst[e], p.edges + (e,)))
        return None

    @cached_property
    def components(self) -> list:
        """Strongly connected components (Tarjan), each as a frozenset."""
        index = {}
        low = {}
        on_stack = set()
        stack = []
        comps = []
        counter = 0

        for root in self.vertices:
            if root in index:
                continue
            work = [(root, iter(self._out[root]))]
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack.add(root)
            while work:
                v, it = work[-1]
                advanced = False
                for e in it:
                    w = self.dst[e]
                    if w not in index:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append(w)
                        on_stack.add(w)
                        work.append((w, iter(self._out[w])))
                        advanced = True
                        break
                    if w in on_stack:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.add(w)
                        if w == v:
                            break
                    comps.append(frozenset(comp))
        return comps

    @cached_property
    def cyclic_components(self) -> list:
        """Components containing at least one edge, i.e. supporting a cycle."""
        return [c for c in self.components if any(self.dst[e] in c for v in c for e in self._out[v])]

    @cached_property
    def on_cycle(self) -> frozenset:
        return frozenset().union(*self.cyclic_components) if self.cyclic_components else frozenset()

    def is_acyclic(self) -> bool:
        return not self.cyclic_components

    # -- derived graphs ------------------------------------------------------

    def induced(self, vertices: Iterable[str], edges: Iterable[str]) -> Graph:
        """Subgraph on the given vertices and edges, declaration order kept."""
        vs = set(vertices)
        es = set(edges)
        return Graph(
            [v for v in self.vertices if v in vs],
            [e for e in self.edges if e[0] in es],
        )

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"edge {n} {s} {t}" for n, s, t in self.edges]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Read the line-oriented graph format.

    ``vertex <name>`` and ``edge <name> <src> <dst>`` lines, ``#`` comments.
    """
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw, args = parts[0], parts[1:]
        if kw == "vertex" and len(args) == 1:
            names = args
        elif kw == "edge" and len(args) == 3:
            names = args
        else:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
        for name in names:
            if not _NAME.match(name):
                raise ParseError(f"line {lineno}: invalid name {name!r}")
        if kw == "vertex":
            vertices.append(args[0])
        else:
            if args[1] not in vertices or args[2] not in vertices:
                missing = args[1] if args[1] not in vertices else args[2]
                raise UndeclaredVertex(f"line {lineno}: vertex {missing!r} is not declared")
            edges.append(tuple(args))
    if not vertices:
        raise ParseError("graph declares no vertices")
    return Graph(vertices, edges)


def classify_vertex(g: Graph, v: str) -> VertexKind:
    return VertexKind.SINK if g.is_sink(v) else VertexKind.REGULAR


def enumerate_paths(g: Graph, max_len: int) -> list[Path]:
    """All paths of length ``0..max_len`` ordered by length, then edge order."""
    result = [g.vertex_path(v) for v in g.vertices]
    level = [Path(s, t, (n,)) for n, s, t in g.edges]
    for _ in range(max_len):
        if not level:
            break
        result.extend(level)
        # extending a lexicographically sorted level edge-by-edge keeps it sorted
        level = [Path(p.source, g.dst[e], p.edges + (e,)) for p in level for e in g._out[p.target]]
    return result


def _canonical_cycle(g: Graph, edges: tuple) -> Cycle:
    n = len(edges)
    rotations = [edges[i:] + edges[:i] for i in range(n)]
    best = min(rotations, key=lambda es: (g.vertex_index[g.src[es[0]]], [g.edge_index[e] for e in es]))
    return Cycle(Path(g.src[best[0]], g.src[best[0]], best))


def iter_simple_cycles(g: Graph) -> Iterator[Cycle]:
    """Closed paths without repeated vertices, one per rotation class.

    Each cycle is found from its least vertex (declaration order), exploring
    only vertices declared no earlier than it.
    """
    for i, base in enumerate(g.vertices):
        allowed = {v for v in g.vertices[i:]}
        # depth-first, edges in declaration order
        stack = [(base, (), frozenset([base]))]
        found = []
        while stack:
            v, es, visited = stack.pop()
            for e in reversed(g._out[v]):
                w = g.dst[e]
                if w == base:
                    found.append(es + (e,))
                elif w in allowed and w not in visited:
                    stack.append((w, es + (e,), visited | {w}))
        found.sort(key=lambda es: [g.edge_index[e] for e in es])
        for es in found:
            yield Cycle(Path(base, base, es))


def simple_cycles(g: Graph) -> list[Cycle]:
    return list(iter_simple_cycles(g))


def has_exit(g: Graph, cycle: Cycle) -> bool:
    return any(len(g._out[g.src[e]]) > 1 for e in cycle.edges)


def check_condition_L(g: Graph) -> tuple[bool, Cycle | None]:
    """Every cycle has an exit.

    An exitless cycle runs through vertices of out-degree one, so it suffices
    to look for a cycle in the functional graph of those vertices.
    """
    unique = {v: es[0] for v, es in g._out.items() if len(es) == 1}
    state = {}
    for start in g.vertices:
        if start not in unique or start in state:
            continue
        trail = []
        v = start
        while v in unique and v not in state:
            state[v] = start
            trail.append(v)
            v = g.dst[unique[v]]
        if v in unique and state.get(v) == start:
            loop = trail[trail.index(v):]
            return False, _canonical_cycle(g, tuple(unique[u] for u in loop))
    return True, None


def first_return_count(g: Graph, v: str, cap: int = 2) -> int:
    """Number of closed paths at ``v`` that do not pass through ``v`` in between,
    capped at ``cap``.

    These are the closed paths ``e1...en`` with ``s(ei) != s(e1)`` for ``i >= 2``.
    Their count is infinite when some cycle avoiding ``v`` sits on a route
    ``v -> ... -> v``; otherwise the routes form a DAG and are counted directly.
    """
    g._check_vertex(v)
    # forward: reachable from v's out-neighbours without passing through v
    fwd = set()
    stack = [g.dst[e] for e in g._out[v] if g.dst[e] != v]
    while stack:
        w = stack.pop()
        if w in fwd:
            continue
        fwd.add(w)
        stack.extend(g.dst[e] for e in g._out[w] if g.dst[e] != v)
    # backward: reaches v without passing through v
    bwd = set()
    stack = [g.src[e] for e in g._in[v] if g.src[e] != v]
    while stack:
        w = stack.pop()
        if w in bwd:
            continue
        bwd.add(w)
        stack.extend(g.src[e] for e in g._in[w] if g.src[e] != v)
    middle = fwd & bwd

    sub = g.induced(middle, [n for n, s, t in g.edges if s in middle and t in middle])
    if sub.cyclic_components:
        return cap

    memo = {}

    def routes(w):
        # routes from w back to v through `middle`
        if w not in memo:
            memo[w] = 0
            total = 0
            for e in g._out[w]:
                t = g.dst[e]
                if t == v:
                    total += 1
                elif t in middle:
                    total += routes(t)
                if total >= cap:
                    break
            memo[w] = min(total, cap)
        return memo[w]

    total = 0
    for e in g._out[v]:
        t = g.dst[e]
        if t == v:
            total += 1
        elif t in middle:
            total += routes(t)
        if total >= cap:
            return cap
    return total


def check_condition_K(g: Graph) -> tuple[bool, str | None]:
    """Every vertex bases either no simple closed path or at least two."""
    for v in g.vertices:
        if first_return_count(g, v) == 1:
            return False, v
    return True, None


def is_cofinal(g: Graph) -> bool:
    for comp in g.cyclic_components:
        target = next(iter(comp))
        for v in g.vertices:
            if not g.reaches(v, target):
                return False
    return True


def all_graphs(n_vertices: int, n_edges: int) -> Iterator[Graph]:
    """Every graph on vertices v0.. with edges e0.. (all endpoint choices)."""
    vs = [f"v{i}" for i in range(n_vertices)]
    pairs = list(product(vs, vs))
    for choice in product(pairs, repeat=n_edges):
        yield Graph(vs, [(f"e{i}", s, t) for i, (s, t) in enumerate(choice)])

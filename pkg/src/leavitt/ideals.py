"""Graded basic ideals via saturated hereditary vertex sets.

A graded basic ideal of L_R(E) is ``I_H``, the ideal generated by the vertices
of a saturated hereditary set ``H``, and ``L_R(E) / I_H`` is ``L_R(E \\ H)``.
Ideals are therefore handled through ``H`` alone, and membership in ``I_H`` is
decided by mapping into the quotient algebra and testing for zero.

Membership cannot be read off the junction vertices of a normal form:
rewriting may move a term's junction out of ``H``. In the graph
``v1 -a-> v2, v1 -b-> v3`` with ``H = {v2}``, ``a a*`` lies in ``I_H`` but
normalizes to ``v1 - b b*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .algebra import Element, LeavittAlgebra
from .errors import GraphMismatch, NotHereditary, NotSaturated, UnknownVertex
from .graph import Graph, check_condition_K, check_condition_L, is_cofinal

__all__ = [
    "HereditarySet",
    "hereditary_set",
    "hereditary_closure",
    "is_hereditary",
    "is_saturated",
    "saturate",
    "all_saturated_hereditary",
    "hasse_covers",
    "lattice_ops",
    "quotient_graph",
    "restriction_graph",
    "quotient_map",
    "in_ideal_IH",
    "is_basically_simple",
    "simplicity_report",
    "SimplicityReport",
    "sinks_reachable_from_everywhere",
    "ideal_generators",
    "span_element",
]


def _as_set(g: Graph, X) -> frozenset:
    if isinstance(X, HereditarySet):
        X = X.vertices
    X = frozenset(X)
    for v in X:
        if not g.has_vertex(v):
            raise UnknownVertex(f"unknown vertex {v!r}")
    return X


def is_hereditary(g: Graph, X: Iterable[str]) -> bool:
    X = _as_set(g, X)
    return all(g.dst[n] in X for n, s, _ in g.edges if s in X)


def is_saturated(g: Graph, X: Iterable[str]) -> bool:
    X = _as_set(g, X)
    for v in g.regular_vertices:
        if v not in X and all(g.dst[e] in X for e in g.out_edges(v)):
            return False
    return True


@dataclass(frozen=True)
class HereditarySet:
    graph: Graph
    vertices: frozenset

    @cached_property
    def is_hereditary(self) -> bool:
        return is_hereditary(self.graph, self.vertices)

    @cached_property
    def is_saturated(self) -> bool:
        return self.is_hereditary and is_saturated(self.graph, self.vertices)

    def sorted(self) -> list:
        return sorted(self.vertices, key=self.graph.vertex_index.__getitem__)

    def __contains__(self, v):
        return v in self.vertices

    def __len__(self):
        return len(self.vertices)

    def __str__(self):
        return "{" + ", ".join(self.sorted()) + "}"


def hereditary_set(g: Graph, X: Iterable[str]) -> HereditarySet:
    return HereditarySet(g, _as_set(g, X))


def _require_saturated(g: Graph, H) -> HereditarySet:
    H = hereditary_set(g, H)
    if not H.is_saturated:
        raise NotSaturated(f"{H} is not a saturated hereditary set")
    return H


def hereditary_closure(g: Graph, X: Iterable[str]) -> frozenset:
    """Least hereditary superset: everything reachable from ``X``."""
    return frozenset(g.reachable_from(_as_set(g, X)))


def saturate(g: Graph, X: Iterable[str]) -> HereditarySet:
    """Least saturated hereditary superset of a hereditary set."""
    X = _as_set(g, X)
    if not is_hereditary(g, X):
        raise NotHereditary(f"{sorted(X)} is not hereditary")
    current = set(X)
    changed = True
    while changed:
        changed = False
        for v in g.regular_vertices:
            if v not in current and all(g.dst[e] in current for e in g.out_edges(v)):
                current.add(v)
                changed = True
    return HereditarySet(g, frozenset(current))


def _lattice_key(g: Graph):
    return lambda H: (len(H.vertices), sorted(g.vertex_index[v] for v in H.vertices))


def all_saturated_hereditary(g: Graph) -> list[HereditarySet]:
    """Every saturated hereditary subset, by size then lexicographically.

    Each such ``H`` is the join of the saturated closures of its vertices, so
    the lattice is generated from the empty set by joining those atoms.
    """
    atoms = {v: saturate(g, hereditary_closure(g, [v])).vertices for v in g.vertices}
    bottom = saturate(g, ()).vertices
    found = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for S in frontier:
            for v in g.vertices:
                if v in S:
                    continue
                J = saturate(g, S | atoms[v]).vertices
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return sorted((HereditarySet(g, S) for S in found), key=_lattice_key(g))


def hasse_covers(g: Graph, sets: list[HereditarySet] | None = None) -> list[tuple[int, int]]:
    """Cover relations ``(i, j)``, ``sets[i]`` covered by ``sets[j]``, as list indices."""
    sets = all_saturated_hereditary(g) if sets is None else sets
    covers = []
    for i, A in enumerate(sets):
        for j, B in enumerate(sets):
            if A.vertices < B.vertices and not any(
                A.vertices < C.vertices < B.vertices for C in sets
            ):
                covers.append((i, j))
    return covers


def lattice_ops(g: Graph, H1, H2) -> tuple[HereditarySet, HereditarySet]:
    """``(meet, join)``: intersection, and saturation of the union."""
    H1 = _require_saturated(g, H1)
    H2 = _require_saturated(g, H2)
    meet = HereditarySet(g, H1.vertices & H2.vertices)
    join = saturate(g, H1.vertices | H2.vertices)
    return meet, join


def quotient_graph(g: Graph, H) -> Graph:
    """``E \\ H``: drop ``H`` and every edge whose range lies in ``H``."""
    H = _require_saturated(g, H).vertices
    return g.induced(
        [v for v in g.vertices if v not in H],
        [n for n, _, t in g.edges if t not in H],
    )


def restriction_graph(g: Graph, X) -> Graph:
    """``E_X``: keep ``X`` and the edges emitted from it."""
    X = _as_set(g, X)
    if not is_hereditary(g, X):
        raise NotHereditary(f"{sorted(X)} is not hereditary")
    return g.induced(X, [n for n, s, _ in g.edges if s in X])


def quotient_map(g: Graph, H, x: Element, target: LeavittAlgebra | None = None) -> Element:
    """Image of ``x`` in ``L_R(E \\ H)``.

    Generators with vertex or range in ``H`` go to zero, the rest to
    themselves. A monomial survives exactly when its junction vertex is
    outside ``H`` (``H`` is hereditary, so a path meeting ``H`` ends in it);
    survivors are renormalized because designated edges may change.
    """
    H = _require_saturated(g, H).vertices
    if x.graph != g:
        raise GraphMismatch("element is not over the given graph")
    if target is None:
        target = LeavittAlgebra(quotient_graph(g, H), x.ring)
    return target.normal_form(
        (m.alpha, m.beta, c) for m, c in x.raw_terms.items() if m.junction not in H
    )


def in_ideal_IH(g: Graph, H, x: Element) -> bool:
    return not quotient_map(g, H, x)


def is_basically_simple(g: Graph) -> bool:
    """Only trivial saturated hereditary sets, and Condition (L)."""
    return len(all_saturated_hereditary(g)) == 2 and check_condition_L(g)[0]


@dataclass(frozen=True)
class SimplicityReport:
    """The four graph-level criteria for basic simplicity; they always agree."""

    L_and_trivial_lattice: bool
    K_and_trivial_lattice: bool
    L_cofinal_sinks_reachable: bool
    K_cofinal_sinks_reachable: bool

    def as_tuple(self) -> tuple:
        return (
            self.L_and_trivial_lattice,
            self.K_and_trivial_lattice,
            self.L_cofinal_sinks_reachable,
            self.K_cofinal_sinks_reachable,
        )

    def consistent(self) -> bool:
        return len(set(self.as_tuple())) == 1


def sinks_reachable_from_everywhere(g: Graph) -> bool:
    return all(g.reaches(w, v) for v in g.sinks for w in g.vertices)


def simplicity_report(g: Graph) -> SimplicityReport:
    trivial = len(all_saturated_hereditary(g)) == 2
    L = check_condition_L(g)[0]
    K = check_condition_K(g)[0]
    tail = is_cofinal(g) and sinks_reachable_from_everywhere(g)
    return SimplicityReport(L and trivial, K and trivial, L and tail, K and tail)


def ideal_generators(alg: LeavittAlgebra, H) -> list[Element]:
    """The vertices of ``H`` as elements of ``alg``."""
    return [alg.vertex(v) for v in hereditary_set(alg.graph, H).sorted()]


def span_element(alg: LeavittAlgebra, H, items) -> Element:
    """``sum c alpha beta*`` over ``(alpha, beta, c)`` with junction in ``H``."""
    H = hereditary_set(alg.graph, H).vertices
    return alg.normal_form((a, b, c) for a, b, c in items if a.target in H)


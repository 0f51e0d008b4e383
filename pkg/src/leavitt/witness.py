"""Constructive reductions of nonzero elements to nonzero multiples of vertices.

Each routine returns paths ``alpha, beta`` (and ``gamma``) together with a
nonzero scalar ``r`` and a vertex ``v`` such that ``alpha* x beta = r v``
(respectively ``alpha* x gamma beta = r v``). Any ring homomorphism that is
nonzero on all ``r v`` therefore cannot kill ``x``: these are the certificates
behind the graded and Cuntz-Krieger uniqueness theorems.

Wherever a choice is open, the first vertex, the least edge, or the shortest
path with lexicographic tie-break (all in declaration order) is taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import Element
from .errors import (
    ConditionLViolated,
    DegreeZeroInput,
    InternalContradiction,
    NotDegreeZero,
    NotRealPolynomial,
    ZeroElement,
)
from .graph import Graph, Path, check_condition_L, enumerate_paths
from .rings import RingElement

__all__ = [
    "WitnessReduction",
    "nonreturning_path",
    "real_reduce",
    "ghost_eliminate",
    "full_witness",
    "zero_part_reduce",
    "zero_part_decompose",
    "verify_reduction",
]


@dataclass(frozen=True)
class WitnessReduction:
    alpha: Path
    gamma: Path
    beta: Path
    r: RingElement
    v: str

    def __str__(self):
        return (
            f"alpha = {self.alpha}\ngamma = {self.gamma}\nbeta  = {self.beta}\n"
            f"r     = {self.r}\nv     = {self.v}"
        )


def _require_L(g: Graph):
    ok, cycle = check_condition_L(g)
    if not ok:
        raise ConditionLViolated(f"cycle {cycle} has no exit")


def _require_nonzero(x: Element):
    if not x:
        raise ZeroElement("expected a nonzero element")


def verify_reduction(x: Element, alpha: Path, beta: Path, r, v: str, gamma: Path | None = None) -> bool:
    """Recompute ``alpha* x gamma beta`` and compare with ``r v``."""
    alg = x.algebra
    lhs = alg.path(alpha).star() * x
    if gamma is not None:
        lhs = lhs * alg.path(gamma)
    lhs = lhs * alg.path(beta)
    return bool(r) and lhs == alg.vertex(v) * alg.scalar(r)


def nonreturning_path(g: Graph, v: str, F: Iterable[Path]) -> Path:
    """A path ``alpha`` from ``v`` with ``alpha* mu alpha = 0`` for every ``mu`` in ``F``.

    If a sink is reachable from ``v``, ``alpha`` is the shortest path to one.
    Otherwise ``alpha = tau beta^k beta' f`` where ``tau`` is a shortest path to
    a vertex on a cycle, ``beta`` a shortest cycle there, ``f`` its first exit
    and ``beta'`` the stretch of ``beta`` up to ``s(f)``; ``k`` is the least
    power making ``|alpha| > max |mu|``.
    """
    F = list(F)
    if any(not mu.edges for mu in F):
        raise ValueError("F must consist of paths of positive length")
    _require_L(g)
    to_sink = g.shortest_path(v, g.is_sink)
    if to_sink is not None:
        return to_sink

    on_cycle = g.on_cycle
    tau = g.shortest_path(v, lambda w: w in on_cycle)
    base = tau.target
    beta = g.shortest_cycle_at(base)
    exit_edge = None
    for i, e in enumerate(beta.edges):
        for f in g.out_edges(g.src[e]):
            if f != e:
                exit_edge, cut = f, i
                break
        if exit_edge is not None:
            break
    if exit_edge is None:
        # unreachable when Condition (L) holds
        raise ConditionLViolated(f"cycle {beta} has no exit")

    bound = max((len(mu.edges) for mu in F), default=0) + 1
    head = tau.edges
    tail = beta.edges[:cut] + (exit_edge,)
    k = 0
    while len(head) + k * len(beta.edges) + len(tail) < bound:
        k += 1
    return g.path(*(head + beta.edges * k + tail))


def _real_reduce(x: Element):
    g = x.graph
    alg = x.algebra
    terms = x.sorted_terms()
    vertex_terms = [(m, c) for m, c in terms if m.is_vertex()]
    if len(vertex_terms) == len(terms):
        m, c = vertex_terms[0]
        p = m.alpha
        return p, p, c, p.source
    if not vertex_terms:
        firsts = sorted({m.alpha.edges[0] for m, _ in terms}, key=g.edge_index.__getitem__)
        for e in firsts:
            quotient = alg.ghost(e) * x
            if quotient:
                a, b, r, v = _real_reduce(quotient)
                return g.concat(g.path(e), a), b, r, v
        raise InternalContradiction(f"every e* x vanishes for nonzero real {x}")
    m, c = vertex_terms[0]
    F = [m2.alpha for m2, _ in terms if not m2.is_vertex()]
    a = nonreturning_path(g, m.alpha.source, F)
    return a, a, c, a.target


def real_reduce(g: Graph, x: Element):
    """``(alpha, beta, r, v)`` with ``alpha* x beta = r v`` for a nonzero real polynomial."""
    _require_nonzero(x)
    if not x.is_real():
        raise NotRealPolynomial(f"{x} has ghost edges")
    _require_L(g)
    a, b, c, v = _real_reduce(x)
    return a, b, RingElement(x.ring, c), v


def _first_vertex(x: Element) -> str:
    alg = x.algebra
    for v in x.graph.vertices:
        if x * alg.vertex(v):
            return v
    raise InternalContradiction(f"{x} is killed by every vertex")


def ghost_eliminate(g: Graph, x: Element) -> tuple[Path, Element]:
    """``(gamma, x gamma)`` with ``x gamma`` a nonzero polynomial in real edges."""
    _require_nonzero(x)
    alg = x.algebra
    edges = []
    while True:
        v = _first_vertex(x)
        if x.is_real() or g.is_sink(v):
            gamma = g.vertex_path(v)
            for e in reversed(edges):
                gamma = g.concat(g.path(e), gamma)
            return gamma, x * alg.vertex(v)
        for e in g.out_edges(v):
            y = x * alg.edge(e)
            if y:
                break
        else:
            raise InternalContradiction(f"x v e vanishes for every edge e at {v}")
        edges.append(e)
        x = y


def full_witness(g: Graph, x: Element) -> WitnessReduction:
    _require_nonzero(x)
    _require_L(g)
    gamma, y = ghost_eliminate(g, x)
    alpha, beta, r, v = real_reduce(g, y)
    if not verify_reduction(x, alpha, beta, r, v, gamma):
        raise InternalContradiction(f"witness for {x} failed to re-verify")
    return WitnessReduction(alpha, gamma, beta, r, v)


def _zero_part_reduce(x: Element):
    g = x.graph
    alg = x.algebra
    terms = x.sorted_terms()
    vertex_terms = [(m, c) for m, c in terms if m.is_vertex()]
    if len(vertex_terms) == len(terms):
        m, c = vertex_terms[0]
        return m.alpha, m.alpha, c, m.alpha.source
    for m, c in vertex_terms:
        if g.is_sink(m.alpha.source):
            return m.alpha, m.alpha, c, m.alpha.source
    for e, _, _ in g.edges:
        left = alg.ghost(e) * x
        if not left:
            continue
        for f, _, _ in g.edges:
            y = left * alg.edge(f)
            if y:
                a, b, c, v = _zero_part_reduce(y)
                return g.concat(g.path(e), a), g.concat(g.path(f), b), c, v
    raise InternalContradiction(f"no edge pair separates nonzero {x}")


def zero_part_reduce(g: Graph, x: Element):
    """``(alpha, beta, r, v)`` with ``alpha* x beta = r v`` for nonzero ``x`` of degree 0."""
    _require_nonzero(x)
    if x.degrees() != {0}:
        raise NotDegreeZero(f"{x} is not homogeneous of degree 0")
    a, b, c, v = _zero_part_reduce(x)
    return a, b, RingElement(x.ring, c), v


def zero_part_decompose(g: Graph, x: Element) -> list[tuple[Path, Element]]:
    """Split a homogeneous ``x`` of degree ``k != 0`` over degree-0 pieces.

    For ``k > 0`` returns ``(alpha, alpha* x)`` with ``x = sum alpha (alpha* x)``;
    for ``k < 0`` returns ``(alpha, x alpha)`` with ``x = sum (x alpha) alpha*``;
    ``alpha`` runs over the paths of length ``|k|``.
    """
    _require_nonzero(x)
    degrees = x.degrees()
    if len(degrees) != 1:
        raise ValueError(f"{x} is not homogeneous")
    k = degrees.pop()
    if k == 0:
        raise DegreeZeroInput(f"{x} already has degree 0")
    alg = x.algebra
    pieces = []
    for p in enumerate_paths(g, abs(k)):
        if len(p.edges) != abs(k):
            continue
        y = alg.path(p).star() * x if k > 0 else x * alg.path(p)
        if y:
            pieces.append((p, y))
    return pieces


def reconstruct(x_degree: int, pieces: list[tuple[Path, Element]], alg) -> Element:
    """Inverse of :func:`zero_part_decompose`."""
    total = alg.zero()
    for p, y in pieces:
        total = total + (alg.path(p) * y if x_degree > 0 else y * alg.path(p).star())
    return total


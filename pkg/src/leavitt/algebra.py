"""Canonical-form arithmetic in the Leavitt path algebra L_R(E).

Elements are finite R-linear combinations of monomials ``alpha beta*`` with
``r(alpha) = r(beta)``. The relation ``e* f = delta_{e,f} r(e)`` is built into
the monomial product; the relation ``v = sum_{s(e)=v} e e*`` at a regular
vertex ``v`` is used as a rewriting rule that eliminates ``d d*`` for the
designated edge ``d`` of ``v`` (its first-declared edge):

    alpha' d d* beta'*  ->  alpha' beta'*  -  sum_{f != d, s(f)=v} alpha' f f* beta'*

A monomial is *normal* when its two paths do not both end in the same
designated edge. Each rewrite shortens the only term that can still carry a
redex, so normalization terminates and has a unique result.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import (
    GraphMismatch,
    NonComposablePair,
    NotRealPolynomial,
    RingMismatch,
    UnknownName,
    ZeroElement,
)
from .graph import Graph, Path
from .rings import INTEGERS_MOD, RingDescriptor, RingElement

__all__ = [
    "Monomial",
    "LeavittAlgebra",
    "Element",
    "generator",
    "add_elem",
    "scale",
    "mul_elem",
    "star",
    "normal_form",
    "graded_components",
    "real_degree",
    "local_unit_for",
]


class Monomial(NamedTuple):
    alpha: Path
    beta: Path

    @property
    def degree(self) -> int:
        return len(self.alpha.edges) - len(self.beta.edges)

    @property
    def junction(self) -> str:
        return self.alpha.target

    def is_real(self) -> bool:
        return not self.beta.edges

    def is_vertex(self) -> bool:
        return not self.alpha.edges and not self.beta.edges

    def star(self) -> Monomial:
        return Monomial(self.beta, self.alpha)

    def factors(self) -> list[str]:
        fs = list(self.alpha.edges) + [e + "*" for e in reversed(self.beta.edges)]
        return fs or [self.alpha.source]

    def __str__(self):
        return " ".join(self.factors())


def _product(a: Path, b: Path, c: Path, d: Path):
    """(a b*)(c d*) as a pair of paths, or None when it vanishes."""
    if b.source != c.source:
        return None
    nb, nc = len(b.edges), len(c.edges)
    if nb <= nc:
        if c.edges[:nb] != b.edges:
            return None
        if nb == nc:
            return a, d
        return Path(a.source, c.target, a.edges + c.edges[nb:]), d
    if b.edges[:nc] != c.edges:
        return None
    return a, Path(d.source, b.target, d.edges + b.edges[nc:])


class LeavittAlgebra:
    """L_R(E) for a finite graph ``E`` and coefficient ring ``R``; a factory for elements."""

    def __init__(self, graph: Graph, ring: RingDescriptor):
        self.graph = graph
        self.ring = ring
        self._des = graph.designated_edges
        self._sib = graph.siblings

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LeavittAlgebra):
            return NotImplemented
        return self.ring == other.ring and self.graph == other.graph

    def __hash__(self):
        return hash((self.graph, self.ring))

    def __repr__(self):
        return f"LeavittAlgebra({self.graph!r}, {self.ring})"

    # -- element constructors --------------------------------------------------

    def _make(self, raw: dict) -> Element:
        red = self.ring.reduce
        terms = {}
        for m, c in raw.items():
            c = red(c)
            if c != 0:
                terms[m] = c
        return Element(self, terms)

    def zero(self) -> Element:
        return Element(self, {})

    def unit(self) -> Element:
        """The identity sum of all vertices (the graph is finite)."""
        return Element(self, {Monomial(p, p): self.ring.one for p in map(self.graph.vertex_path, self.graph.vertices)})

    def vertex(self, v: str) -> Element:
        if not self.graph.has_vertex(v):
            raise UnknownName(f"unknown vertex {v!r}")
        p = self.graph.vertex_path(v)
        return Element(self, {Monomial(p, p): self.ring.one})

    def edge(self, e: str) -> Element:
        if not self.graph.has_edge(e):
            raise UnknownName(f"unknown edge {e!r}")
        t = self.graph.dst[e]
        return Element(self, {Monomial(self.graph.path(e), Path(t, t, ())): self.ring.one})

    def ghost(self, e: str) -> Element:
        return self.edge(e).star()

    def path(self, p: Path | str, *more: str) -> Element:
        """The real path ``p`` (a Path, or edge/vertex names)."""
        if not isinstance(p, Path):
            p = self.graph.path(p, *more)
        t = Path(p.target, p.target, ())
        return Element(self, {Monomial(p, t): self.ring.one})

    def monomial(self, alpha: Path, beta: Path, coeff=1) -> Element:
        return self.normal_form([(alpha, beta, coeff)])

    def scalar(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self.ring:
                raise RingMismatch(f"{value.ring} scalar for an algebra over {self.ring}")
            return value
        return self.ring(value)

    def normal_form(self, items: Iterable) -> Element:
        """Normalize a formal combination of ``(alpha, beta, coeff)`` triples."""
        out = {}
        for alpha, beta, coeff in items:
            self._check_path(alpha)
            self._check_path(beta)
            if alpha.target != beta.target:
                raise NonComposablePair(f"r({alpha}) = {alpha.target} but r({beta}) = {beta.target}")
            self._accumulate(out, alpha, beta, self.scalar(coeff).value)
        return self._make(out)

    def _check_path(self, p: Path):
        g = self.graph
        if not p.edges:
            if p.source != p.target or not g.has_vertex(p.source):
                raise NonComposablePair(f"malformed vertex path {p!r}")
            return
        q = g.path(*p.edges)
        if q != p:
            raise NonComposablePair(f"malformed path {p!r}")

    # -- rewriting ---------------------------------------------------------------

    def _accumulate(self, out: dict, alpha: Path, beta: Path, c):
        """Add ``c * alpha beta*`` to ``out`` after rewriting designated pairs."""
        des = self._des
        ae, be = alpha.edges, beta.edges
        while ae and be and ae[-1] == be[-1] and ae[-1] in des:
            e = ae[-1]
            g = self.graph
            v = g.src[e]
            alpha = Path(alpha.source, v, ae[:-1])
            beta = Path(beta.source, v, be[:-1])
            ae, be = alpha.edges, beta.edges
            for f in self._sib[e]:
                t = g.dst[f]
                m = Monomial(Path(alpha.source, t, ae + (f,)), Path(beta.source, t, be + (f,)))
                out[m] = out.get(m, 0) - c
        m = Monomial(alpha, beta)
        out[m] = out.get(m, 0) + c

    def _mul(self, x: dict, y: dict) -> Element:
        by_source = {}
        for m, c in y.items():
            by_source.setdefault(m.alpha.source, []).append((m, c))
        out = {}
        for (a, b), c1 in x.items():
            for (c, d), c2 in by_source.get(b.source, ()):
                pair = _product(a, b, c, d)
                if pair is not None:
                    self._accumulate(out, pair[0], pair[1], c1 * c2)
        return self._make(out)

    # -- ordering ------------------------------------------------------------

    def term_key(self, m: Monomial):
        key = self.graph.path_key
        return (m.degree, key(m.alpha), key(m.beta))


class Element:
    """An immutable element of a :class:`LeavittAlgebra` in normal form.

    ``_terms`` maps normal monomials to nonzero raw coefficients.
    """

    __slots__ = ("algebra", "_terms", "_hash")

    def __init__(self, algebra: LeavittAlgebra, terms: dict):
        self.algebra = algebra
        self._terms = terms
        self._hash = None

    # -- access ----------------------------------------------------------------

    @property
    def graph(self) -> Graph:
        return self.algebra.graph

    @property
    def ring(self) -> RingDescriptor:
        return self.algebra.ring

    @property
    def raw_terms(self) -> dict:
        return self._terms

    @property
    def terms(self) -> dict:
        """Monomial -> RingElement, in canonical order."""
        ring = self.ring
        return {m: RingElement(ring, c) for m, c in self.sorted_terms()}

    def sorted_terms(self) -> list:
        key = self.algebra.term_key
        return sorted(self._terms.items(), key=lambda mc: key(mc[0]))

    def coefficient(self, m: Monomial) -> RingElement:
        return RingElement(self.ring, self._terms.get(m, self.ring.zero))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return all(m.is_real() for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    def degrees(self) -> set:
        return {m.degree for m in self._terms}

    # -- arithmetic ----------------------------------------------------------------

    def _same(self, other: Element):
        a, b = self.algebra, other.algebra
        if a is b:
            return
        if a.ring != b.ring:
            raise RingMismatch(f"{a.ring} vs {b.ring}")
        if a.graph != b.graph:
            raise GraphMismatch("elements live over different graphs")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return self.algebra._make(out)

    def __neg__(self):
        return self.algebra._make({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return self.algebra._mul(self._terms, other._terms)
        if isinstance(other, (int, RingElement)):
            return scale(self.algebra.scalar(other), self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RingElement)):
            return scale(self.algebra.scalar(other), self)
        return NotImplemented

    def star(self) -> Element:
        # swapping alpha and beta keeps the normality condition
        return Element(self.algebra, {m.star(): c for m, c in self._terms.items()})

    # -- comparison ----------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self._terms.items())))
        return self._hash

    # -- printing --------------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        signed = self.ring.kind != INTEGERS_MOD
        fmt = self.ring.format
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            negative = signed and c < 0
            mag = -c if negative else c
            body = str(m) if mag == 1 else f"{fmt(mag)} {m}"
            if i == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Element({str(self)!r})"


# -- module-level operations ---------------------------------------------------------------


def generator(g: Graph, ring: RingDescriptor, kind: str, name: str) -> Element:
    """Generator of the given ``kind``: ``"vertex"``, ``"edge"`` or ``"ghost"``."""
    alg = LeavittAlgebra(g, ring)
    kind = kind.lower()
    if kind == "vertex":
        return alg.vertex(name)
    if kind == "edge":
        return alg.edge(name)
    if kind in ("ghost", "ghostedge", "ghost_edge"):
        return alg.ghost(name)
    raise ValueError(f"unknown generator kind {kind!r}")


def add_elem(x: Element, y: Element) -> Element:
    return x + y


def scale(r, x: Element) -> Element:
    r = x.algebra.scalar(r)
    if not r:
        return x.algebra.zero()
    return x.algebra._make({m: r.value * c for m, c in x._terms.items()})


def mul_elem(x: Element, y: Element) -> Element:
    return x * y


def star(x: Element) -> Element:
    return x.star()


def normal_form(algebra: LeavittAlgebra, items: Iterable) -> Element:
    return algebra.normal_form(items)


def graded_components(x: Element) -> dict[int, Element]:
    """Homogeneous components keyed by degree ``|alpha| - |beta|``, ascending."""
    parts = {}
    for m, c in x._terms.items():
        parts.setdefault(m.degree, {})[m] = c
    return {k: Element(x.algebra, parts[k]) for k in sorted(parts)}


def real_degree(x: Element) -> int:
    if not x:
        raise ZeroElement("the zero element has no degree")
    if not x.is_real():
        raise NotRealPolynomial(f"{x} has ghost edges")
    return max(len(m.alpha.edges) for m in x._terms)


def local_unit_for(x: Element) -> Element:
    """Sum ``t`` of the source vertices of all terms; ``t x = x t = x``."""
    vs = set()
    for m in x._terms:
        vs.add(m.alpha.source)
        vs.add(m.beta.source)
    alg = x.algebra
    one = alg.ring.one
    return Element(alg, {Monomial(p, p): one for p in (alg.graph.vertex_path(v) for v in vs)})

"""Independent representations of L_R(E), used to check the rewriting engine.

* a single n-cycle goes into n x n matrices over R[x, 1/x] (matrix units, with
  the Laurent variable on the closing edge);
* an acyclic graph acts on the free module whose basis is the set of paths
  ending at sinks (finite, and faithful for acyclic graphs).

Both families are checked against the Leavitt relations before use. Nothing
here calls the normal-form rewriting: elements are evaluated term by term as
products of generator images.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .algebra import Element, LeavittAlgebra
from .errors import IncompleteFamily, NonFieldCoefficients, NotACycleGraph, NotAcyclic, RingMismatch
from .graph import Graph, enumerate_paths
from .rings import RATIONALS, RingDescriptor, RingElement, RingHom

__all__ = [
    "LaurentPoly",
    "MatrixRep",
    "EFamily",
    "verify_e_family",
    "cycle_family",
    "cycle_representation",
    "acyclic_family",
    "acyclic_representation",
    "represent",
    "base_change",
    "laurent_principal_member",
]


class LaurentPoly:
    """A Laurent polynomial ``sum c_k x^k`` over a coefficient ring; no zero coefficients stored."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingDescriptor, coeffs: dict | None = None):
        self.ring = ring
        red = ring.reduce
        self.coeffs = {}
        for k, c in (coeffs or {}).items():
            c = red(c.value if isinstance(c, RingElement) else c)
            if c != 0:
                self.coeffs[int(k)] = c

    @classmethod
    def constant(cls, ring, c) -> LaurentPoly:
        return cls(ring, {0: c})

    @classmethod
    def monomial(cls, ring, k: int, c=1) -> LaurentPoly:
        return cls(ring, {k: c})

    def _check(self, other: LaurentPoly):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(self.ring, out)

    def __neg__(self):
        return LaurentPoly(self.ring, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            out = {}
            for i, a in self.coeffs.items():
                for j, b in other.coeffs.items():
                    out[i + j] = out.get(i + j, 0) + a * b
            return LaurentPoly(self.ring, out)
        return LaurentPoly(self.ring, {k: c * other for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def degree_range(self) -> tuple[int, int]:
        return min(self.coeffs), max(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


class MatrixRep:
    """A square matrix with LaurentPoly entries."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: RingDescriptor, rows: list[list[LaurentPoly]]):
        self.ring = ring
        self.n = len(rows)
        self.rows = rows

    @classmethod
    def zeros(cls, ring, n) -> MatrixRep:
        return cls(ring, [[LaurentPoly(ring) for _ in range(n)] for _ in range(n)])

    @classmethod
    def identity(cls, ring, n) -> MatrixRep:
        m = cls.zeros(ring, n)
        for i in range(n):
            m.rows[i][i] = LaurentPoly.constant(ring, 1)
        return m

    @classmethod
    def unit(cls, ring, n, i, j, poly: LaurentPoly | None = None) -> MatrixRep:
        """``poly`` (default 1) in position ``(i, j)``, zero elsewhere."""
        m = cls.zeros(ring, n)
        m.rows[i][j] = poly if poly is not None else LaurentPoly.constant(ring, 1)
        return m

    @classmethod
    def from_ints(cls, ring, rows) -> MatrixRep:
        return cls(ring, [[LaurentPoly.constant(ring, c) for c in row] for row in rows])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return MatrixRep(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return MatrixRep(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, MatrixRep):
            n = self.n
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = LaurentPoly(self.ring)
                    for k in range(n):
                        a = self.rows[i][k]
                        if a:
                            b = other.rows[k][j]
                            if b:
                                acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return MatrixRep(self.ring, out)
        return MatrixRep(self.ring, [[a * other for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MatrixRep):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows)


class EFamily:
    """Images of the vertices, edges and ghost edges of a graph."""

    def __init__(self, graph: Graph, ring: RingDescriptor, size: int,
                 vertices: dict, edges: dict, ghosts: dict):
        self.graph = graph
        self.ring = ring
        self.size = size
        self.vertices = vertices
        self.edges = edges
        self.ghosts = ghosts

    def zero(self) -> MatrixRep:
        return MatrixRep.zeros(self.ring, self.size)


def verify_e_family(g: Graph, fam: EFamily) -> bool:
    """Check orthogonal idempotents and the four Leavitt relations exactly."""
    missing = [v for v in g.vertices if v not in fam.vertices]
    missing += [e for e, _, _ in g.edges if e not in fam.edges or e not in fam.ghosts]
    if missing:
        raise IncompleteFamily(f"no image for {', '.join(missing)}")
    P, S, T = fam.vertices, fam.edges, fam.ghosts
    zero = fam.zero()
    for v in g.vertices:
        for w in g.vertices:
            if P[v] * P[w] != (P[v] if v == w else zero):
                return False
    for e, s, r in g.edges:
        if not (P[s] * S[e] == S[e] and S[e] * P[r] == S[e]):
            return False
        if not (P[r] * T[e] == T[e] and T[e] * P[s] == T[e]):
            return False
        for f, _, _ in g.edges:
            if T[e] * S[f] != (P[r] if e == f else zero):
                return False
    for v in g.regular_vertices:
        total = zero
        for e in g.out_edges(v):
            total = total + S[e] * T[e]
        if total != P[v]:
            return False
    return True


def represent(fam: EFamily, x: Element) -> MatrixRep:
    """Image of ``x``: each term ``c alpha beta*`` as a product of generator images."""
    if x.ring != fam.ring:
        raise RingMismatch(f"{x.ring} element, {fam.ring} family")
    total = fam.zero()
    for m, c in x.raw_terms.items():
        a, b = m.alpha, m.beta
        img = fam.vertices[a.source] if not a.edges else None
        for e in a.edges:
            img = fam.edges[e] if img is None else img * fam.edges[e]
        for e in reversed(b.edges):
            img = img * fam.ghosts[e]
        total = total + img * c
    return total


def _cycle_order(g: Graph) -> tuple[list, list]:
    n = len(g.vertices)
    if len(g.edges) != n or any(len(g.out_edges(v)) != 1 or len(g.in_edges(v)) != 1 for v in g.vertices):
        raise NotACycleGraph("every vertex must emit and receive exactly one edge")
    order, edges = [], []
    v = g.vertices[0]
    while v not in order:
        order.append(v)
        e = g.out_edges(v)[0]
        edges.append(e)
        v = g.dst[e]
    if len(order) != n:
        raise NotACycleGraph("graph is a union of several cycles")
    return order, edges


def cycle_family(g: Graph, ring: RingDescriptor) -> EFamily:
    """``v_i -> E_ii``, ``e_i -> E_{i,i+1}``, closing edge ``-> x E_{n,1}``, ghosts transposed with ``1/x``."""
    order, edges = _cycle_order(g)
    n = len(order)
    V = {v: MatrixRep.unit(ring, n, i, i) for i, v in enumerate(order)}
    S, T = {}, {}
    for i, e in enumerate(edges):
        j = (i + 1) % n
        power = 1 if i == n - 1 else 0
        S[e] = MatrixRep.unit(ring, n, i, j, LaurentPoly.monomial(ring, power))
        T[e] = MatrixRep.unit(ring, n, j, i, LaurentPoly.monomial(ring, -power))
    return EFamily(g, ring, n, V, S, T)


def cycle_representation(g: Graph, x: Element) -> MatrixRep:
    return represent(cycle_family(g, x.ring), x)


def sink_paths(g: Graph) -> list:
    """Paths ending at sinks, grouped by source vertex in declaration order."""
    if not g.is_acyclic():
        raise NotAcyclic("graph has a cycle")
    paths = [p for p in enumerate_paths(g, len(g.vertices)) if g.is_sink(p.target)]
    return sorted(paths, key=lambda p: (g.vertex_index[p.source], g.path_key(p)))


def acyclic_family(g: Graph, ring: RingDescriptor) -> EFamily:
    """Action on the free module with basis the paths ending at sinks."""
    basis = sink_paths(g)
    index = {p: i for i, p in enumerate(basis)}
    n = len(basis)
    V = {v: MatrixRep.zeros(ring, n) for v in g.vertices}
    S = {e: MatrixRep.zeros(ring, n) for e, _, _ in g.edges}
    T = {e: MatrixRep.zeros(ring, n) for e, _, _ in g.edges}
    one = LaurentPoly.constant(ring, 1)
    for p, i in index.items():
        V[p.source].rows[i][i] = one
        for e in g.in_edges(p.source):
            q = g.concat(g.path(e), p)
            j = index[q]
            S[e].rows[j][i] = one  # e: p -> e p
            T[e].rows[i][j] = one  # e*: e p -> p
    return EFamily(g, ring, n, V, S, T)


def acyclic_representation(g: Graph, x: Element) -> MatrixRep:
    return represent(acyclic_family(g, x.ring), x)


def base_change(h: RingHom, g: Graph, x: Element) -> Element:
    """Push coefficients along ``h``: the map L_S(E) -> L_R(E), ``x -> 1 (x) x``."""
    if x.ring != h.source:
        raise RingMismatch(f"{h} applied to an element over {x.ring}")
    target = LeavittAlgebra(g, h.target)
    # terms stay normal, so only vanished coefficients need dropping
    return target._make({m: h.raw(c) for m, c in x.raw_terms.items()})


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Exact division of dense coefficient lists (lowest degree first) over Q."""
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        factor = num[-1] / lead
        q[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] -= factor * d
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _dense(p: LaurentPoly) -> list:
    lo, hi = p.degree_range()
    return [Fraction(p.coeffs.get(k, 0)) for k in range(lo, hi + 1)]


def laurent_principal_member(p: LaurentPoly, gen: LaurentPoly) -> bool:
    """Whether ``p`` lies in the ideal of Q[x, 1/x] generated by ``gen``.

    Powers of ``x`` are units, so both sides are shifted to polynomials with
    nonzero constant term and the question becomes divisibility in Q[x].
    """
    for q in (p, gen):
        if q.ring.kind != RATIONALS:
            raise NonFieldCoefficients(f"membership needs coefficients in Q, got {q.ring}")
    if not p:
        return True
    if not gen:
        return False
    _, rem = _poly_divmod(_dense(p), _dense(gen))
    return not any(rem)


def differential_check(fam: EFamily, pairs: Iterable[tuple[Element, Element]]) -> tuple[int, int]:
    """``(passed, failed)`` over pairs: images respect sum and product, and vanish only at 0."""
    passed = failed = 0
    for x, y in pairs:
        rx, ry = represent(fam, x), represent(fam, y)
        ok = (
            represent(fam, x + y) == rx + ry
            and represent(fam, x * y) == rx * ry
            and rx.is_zero() == (not x)
            and ry.is_zero() == (not y)
        )
        passed += ok
        failed += not ok
    return passed, failed

"""Seeded random elements and graphs for property and differential tests."""

from __future__ import annotations

import random

from .algebra import Element, LeavittAlgebra
from .graph import Graph, enumerate_paths

__all__ = ["ElementSampler", "random_graph", "random_graphs"]


class ElementSampler:
    """Random elements ``sum c alpha beta*`` built from short composable pairs.

    Coefficients are drawn from ``-coeff_bound..coeff_bound`` and reduced into
    the ring, so they may vanish over ``Z/n``; ``nonzero`` retries until the
    normal form is nonzero.
    """

    def __init__(self, alg: LeavittAlgebra, seed: int = 0, max_len: int = 2,
                 max_terms: int = 3, coeff_bound: int = 4):
        self.alg = alg
        self.rng = random.Random(seed)
        self.max_terms = max_terms
        self.coeff_bound = coeff_bound
        paths = enumerate_paths(alg.graph, max_len)
        self.pairs = [(a, b) for a in paths for b in paths if a.target == b.target]
        self.by_degree: dict[int, list] = {}
        for a, b in self.pairs:
            self.by_degree.setdefault(len(a.edges) - len(b.edges), []).append((a, b))
        self.real_pairs = [(a, b) for a, b in self.pairs if not b.edges]

    def _coeff(self) -> int:
        c = 0
        while c == 0:
            c = self.rng.randint(-self.coeff_bound, self.coeff_bound)
        return c

    def _build(self, pool) -> Element:
        n = self.rng.randint(1, self.max_terms)
        items = [(*self.rng.choice(pool), self._coeff()) for _ in range(n)]
        return self.alg.normal_form(items)

    def element(self, nonzero: bool = False, degree: int | None = None, real: bool = False) -> Element:
        if degree is not None:
            pool = self.by_degree.get(degree)
            if not pool:
                raise ValueError(f"no monomials of degree {degree} within the length bound")
            pool = [(a, b) for a, b in pool if not b.edges] if real else pool
        else:
            pool = self.real_pairs if real else self.pairs
        while True:
            x = self._build(pool)
            if x or not nonzero:
                return x

    def elements(self, count: int, **kw) -> list[Element]:
        return [self.element(**kw) for _ in range(count)]

    def pair(self) -> tuple[Element, Element]:
        return self.element(), self.element()

    def nonzero_degrees(self) -> list[int]:
        return sorted(k for k in self.by_degree if k != 0)

    def ideal_member(self, H) -> Element:
        """A random element of the ideal generated by the vertices of ``H``."""
        H = list(H)
        if not H:
            return self.alg.zero()
        v = self.alg.vertex(self.rng.choice(sorted(H)))
        return self.element() * v * self.element() + self.element() * v


def random_graph(rng: random.Random, max_vertices: int = 4, max_edges: int = 5) -> Graph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    vs = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"e{j}", rng.choice(vs), rng.choice(vs)) for j in range(1, m + 1)]
    return Graph(vs, edges)


def random_graphs(count: int, seed: int = 0, max_vertices: int = 4, max_edges: int = 5) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_vertices, max_edges) for _ in range(count)]

import pytest

from leavitt import (
    QQ,
    ZZ,
    LeavittAlgebra,
    Monomial,
    Zmod,
    fixture,
    generator,
    graded_components,
    local_unit_for,
    parse_expr,
    real_degree,
    scale,
    star,
)
from leavitt.errors import GraphMismatch, NonComposablePair, NotRealPolynomial, RingMismatch, UnknownName
from leavitt.graph import enumerate_paths
from leavitt.sampling import ElementSampler

Z6 = Zmod(6)


def alg(name, ring=ZZ):
    return LeavittAlgebra(fixture(name), ring)


def P(name, text, ring=ZZ):
    return parse_expr(text, fixture(name), ring)


def test_generators():
    g = fixture("R2")
    v = generator(g, ZZ, "vertex", "v")
    assert v.raw_terms == {Monomial(g.vertex_path("v"), g.vertex_path("v")): 1}
    e = generator(g, ZZ, "edge", "e")
    assert e.raw_terms == {Monomial(g.path("e"), g.vertex_path("v")): 1}
    gl = fixture("GL")
    h = generator(gl, ZZ, "ghost", "h")
    assert h.raw_terms == {Monomial(gl.vertex_path("t"), gl.path("h")): 1}
    with pytest.raises(UnknownName):
        generator(g, ZZ, "edge", "zz")


def test_addition_and_scaling():
    A = alg("R2")
    e = A.edge("e")
    assert str(e + e) == "2 e"
    assert not (e + e * -1)
    assert len(A.vertex("v") + e) == 2
    assert not scale(2, LeavittAlgebra(fixture("R2"), Zmod(2)).edge("e"))
    assert scale(1, e) == e
    assert not scale(0, e)


def test_product_examples():
    assert str(P("R2", "e* e")) == "v"
    assert not P("R2", "e* f")
    assert str(P("R2", "e e*")) == "v - f f*"
    assert str(P("C1", "e e*")) == "v"
    assert str(P("R2", "f f*")) == "f f*"
    assert not P("GL", "e e")
    assert str(P("GL", "e g")) == "e g"


def test_star_examples():
    assert str(star(P("R2", "2 e f*"))) == "2 f e*"
    assert star(P("R2", "v")) == P("R2", "v")


def test_normal_form_raw_pairs():
    A = alg("R2")
    g = A.graph
    assert str(A.normal_form([(g.path("e"), g.path("e"), 1)])) == "v - f f*"
    assert str(A.normal_form([(g.path("f"), g.path("f"), 1)])) == "f f*"
    assert str(alg("C1").normal_form([(fixture("C1").path("e"), fixture("C1").path("e"), 1)])) == "v"
    with pytest.raises(NonComposablePair):
        gl = fixture("GL")
        LeavittAlgebra(gl, ZZ).normal_form([(gl.path("e"), gl.path("h"), 1)])


def test_no_designated_pair_survives(any_fixture):
    _, g = any_fixture
    A = LeavittAlgebra(g, ZZ)
    s = ElementSampler(A, seed=3)
    for _ in range(200):
        x = s.element() * s.element()
        for m in x.raw_terms:
            if m.alpha.edges and m.beta.edges:
                last_a, last_b = m.alpha.edges[-1], m.beta.edges[-1]
                assert not (last_a == last_b and last_a in g.designated_edges), x


def test_graded_components_examples():
    parts = graded_components(P("C1", "v + e + 3 e*"))
    assert {k: str(x) for k, x in parts.items()} == {-1: "3 e*", 0: "v", 1: "e"}
    assert {k: str(x) for k, x in graded_components(P("C1", "e e")).items()} == {2: "e e"}
    assert {k: str(x) for k, x in graded_components(P("R2", "f f*")).items()} == {0: "f f*"}


def test_real_degree():
    assert real_degree(P("GL", "2 e g + a")) == 2
    assert real_degree(P("R2", "v")) == 0
    with pytest.raises(NotRealPolynomial):
        real_degree(P("C1", "e*"))


def test_local_units():
    assert str(local_unit_for(P("E2", "2 u + 3 w"))) == "u + w"
    assert str(local_unit_for(P("R2", "e + f"))) == "v"
    assert not local_unit_for(alg("R2").zero())
    s = ElementSampler(alg("GL"), seed=2)
    for x in s.elements(100):
        t = local_unit_for(x)
        assert t * x == x and x * t == x


def test_mixing_is_rejected():
    with pytest.raises(RingMismatch):
        alg("R2").vertex("v") + alg("R2", Z6).vertex("v")
    with pytest.raises(GraphMismatch):
        alg("R2").vertex("v") + LeavittAlgebra(fixture("C1"), ZZ).vertex("v")


def test_rational_coefficients():
    x = P("R2", "1/2 e + 1/3 e", QQ)
    assert str(x) == "5/6 e"
    assert not (x * 6 - P("R2", "5 e", QQ))


def test_modular_printing():
    x = P("R2", "-1 e", Z6)
    assert str(x) == "5 e"
    assert str(P("R2", "7 e f*", Z6)) == "e f*"


@pytest.mark.parametrize("ring", [ZZ, Z6], ids=["Z", "Z6"])
def test_associativity_and_involution(any_fixture, ring):
    _, g = any_fixture
    s = ElementSampler(LeavittAlgebra(g, ring), seed=17)
    for _ in range(300):
        x, y, z = s.element(), s.element(), s.element()
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x * y).star() == y.star() * x.star()
        assert x.star().star() == x


def test_grading_is_additive(any_fixture):
    _, g = any_fixture
    s = ElementSampler(LeavittAlgebra(g, ZZ), seed=23)
    degrees = sorted(s.by_degree)
    for _ in range(200):
        j, k = s.rng.choice(degrees), s.rng.choice(degrees)
        x, y = s.element(degree=j), s.element(degree=k)
        assert all(m.degree == j + k for m in (x * y).raw_terms)


def test_ck2_normalizes_to_zero(any_fixture, ring):
    _, g = any_fixture
    A = LeavittAlgebra(g, ring)
    for v in g.regular_vertices:
        total = A.vertex(v)
        for e in g.out_edges(v):
            total = total - A.edge(e) * A.ghost(e)
        assert not total


def test_paths_are_linearly_independent(any_fixture, ring):
    _, g = any_fixture
    A = LeavittAlgebra(g, ring)
    s = ElementSampler(A, seed=29)
    paths = enumerate_paths(g, 3)
    nonzero = [c for c in range(-5, 6) if ring.reduce(c) != 0]
    for _ in range(100):
        chosen = s.rng.sample(paths, min(len(paths), s.rng.randint(1, 6)))
        combo = A.zero()
        for p in chosen:
            combo = combo + A.path(p) * s.rng.choice(nonzero)
        assert combo


def test_characteristic_of_algebra(any_fixture):
    _, g = any_fixture
    A = LeavittAlgebra(g, Z6)
    for v in g.vertices:
        assert not A.vertex(v) * 6
        assert all(A.vertex(v) * k for k in range(1, 6))


def test_vertices_are_orthogonal_idempotents(any_fixture):
    _, g = any_fixture
    A = LeavittAlgebra(g, ZZ)
    for v in g.vertices:
        for w in g.vertices:
            assert A.vertex(v) * A.vertex(w) == (A.vertex(v) if v == w else A.zero())
    assert A.unit() * A.unit() == A.unit()

"""Exact symbolic arithmetic for Leavitt path algebras L_R(E).

Coefficients come from Z, Z/n or Q; graphs are finite. The package provides
canonical-form arithmetic, constructive reductions of nonzero elements to
nonzero multiples of vertices, the lattice of graded basic ideals, and
independent matrix representations used as correctness oracles.
"""

from .algebra import (
    Element,
    LeavittAlgebra,
    Monomial,
    add_elem,
    generator,
    graded_components,
    local_unit_for,
    mul_elem,
    normal_form,
    real_degree,
    scale,
    star,
)
from .errors import LeavittError
from .expr import parse_expr
from .fixtures import fixture
from .graph import (
    Cycle,
    Graph,
    Path,
    VertexKind,
    check_condition_K,
    check_condition_L,
    classify_vertex,
    enumerate_paths,
    is_cofinal,
    parse_graph,
    simple_cycles,
)
from .rings import QQ, ZZ, RingDescriptor, RingElement, RingHom, Zmod, characteristic, parse_ring

__version__ = "0.1.0"

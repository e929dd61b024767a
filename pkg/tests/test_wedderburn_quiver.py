import numpy as np
import pytest

from algebras import group_algebra_s3, matrix_algebra, truncated_poly, upper_triangular
from conftest import instance
from pgmodular.ccalgebra import (
    Component,
    FpAlgebra,
    fp_algebra_from_sc,
    lift_idempotents,
    quiver,
    radical,
    rank3_algebra,
    simple_components,
    wedderburn,
)
from pgmodular.errors import NonSquareDimension
from pgmodular.incidence import point_graph

NAMES = ["doily", "grid3", "grid4", "grid5"]


def design(name, p):
    return fp_algebra_from_sc(instance(name).sc, p)


def test_point_quotient_two_fields(doily):
    for p in (2, 3, 5):
        alg = rank3_algebra(point_graph(doily.D, doily.params), p)
        assert simple_components(alg) == [(1, 1), (1, 1)]


@pytest.mark.parametrize("p", [7, 101])
def test_split_semisimple_doily(p):
    rep = wedderburn(design("doily", p))
    assert rep.components == (Component(1, 1), Component(1, 1), Component(2, 1), Component(2, 1))
    assert sorted(c.dim for c in rep.components) == [1, 1, 4, 4]
    assert rep.total_dim == 10 and rep.radical_dim == 0


def test_doily_mod2_quotient_dimension():
    rep = wedderburn(design("doily", 2))
    assert rep.total_dim == 6
    assert rep.radical_dim == 4


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_component_count_and_dimension_identity(name, p):
    rep = wedderburn(design(name, p))
    assert rep.total_dim == 10 - rep.radical_dim
    if p == 2:
        assert 1 <= rep.count <= 4
    assert list(rep.components) == sorted(rep.components)


@pytest.mark.parametrize(
    "make, expected",
    [
        (lambda: truncated_poly(2, [1, 1]), [(1, 2)]),  # GF(4)
        (lambda: truncated_poly(3, [1, 2, 0]), [(1, 3)]),  # x^3 + 2x + 1 has no root mod 3
        (lambda: truncated_poly(5, [1, 0]), [(1, 1), (1, 1)]),  # x^2 + 1 = (x - 2)(x - 3) mod 5
        (lambda: matrix_algebra(2, 2), [(2, 1)]),
        (lambda: matrix_algebra(3, 3), [(3, 1)]),
        (lambda: group_algebra_s3(2), [(1, 1), (2, 1)]),
        (lambda: group_algebra_s3(3), [(1, 1), (1, 1)]),
        (lambda: group_algebra_s3(5), [(1, 1), (1, 1), (2, 1)]),
        (lambda: upper_triangular(2), [(1, 1), (1, 1)]),
    ],
)
def test_known_decompositions(make, expected):
    assert simple_components(make()) == expected


def test_non_square_component_detected():
    from pgmodular.ccalgebra.wedderburn import _square_root

    with pytest.raises(NonSquareDimension):
        _square_root(8, 1)
    with pytest.raises(NonSquareDimension):
        _square_root(6, 4)
    assert _square_root(12, 3) == 2


def check_quiver_invariants(alg, q):
    p = alg.p
    zero = alg.zero()
    for i, a in enumerate(q.idempotents):
        for j, b in enumerate(q.idempotents):
            assert np.array_equal(alg.mul(a, b), a if i == j else zero)
    assert np.array_equal(sum(q.idempotents, zero) % p, alg.unit)
    rad = radical(alg)
    top = rad.dim - (rad.power_dims[1] if len(rad.power_dims) > 1 else 0)
    assert q.arrow_total == top
    assert sum(q.block_dims) == alg.dim
    assert [sum(layer) for layer in q.loewy_layers] == list(q.projective_dims)
    assert sum(map(sum, q.cartan)) == alg.dim


@pytest.mark.parametrize("p", [7, 101])
def test_semisimple_has_no_arrows(p):
    q = quiver(design("doily", p))
    assert q.arrow_total == 0 and not any(map(any, q.gabriel_arrows))
    check_quiver_invariants(design("doily", p), q)


def test_doily_point_quiver(doily):
    alg = rank3_algebra(point_graph(doily.D, doily.params), 2)
    q = quiver(alg)
    assert q.vertices == 2
    assert q.arrow_total == 1
    check_quiver_invariants(alg, q)


def test_doily_design_quiver():
    alg = design("doily", 2)
    q = quiver(alg)
    assert q.arrow_total == 2
    assert q.vertices == wedderburn(alg).count
    check_quiver_invariants(alg, q)


def test_quiver_deterministic():
    a, b = quiver(design("doily", 2)), quiver(design("doily", 2))
    assert a.arrows == b.arrows and a.cartan == b.cartan
    assert all(np.array_equal(x, y) for x, y in zip(a.idempotents, b.idempotents))


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_quiver_invariants_bundled(name, p):
    alg = design(name, p)
    check_quiver_invariants(alg, quiver(alg))


def test_group_algebra_s3_mod3_quiver():
    # two simple modules (trivial, sign), one arrow each way, uniserial projectives of length 3
    alg = group_algebra_s3(3)
    q = quiver(alg)
    assert q.gabriel_arrows == ((0, 1), (1, 0))
    assert q.loewy_layers == ((1, 1, 1), (1, 1, 1))
    assert q.cartan == ((2, 1), (1, 2))
    check_quiver_invariants(alg, q)


def test_group_algebra_s3_mod2_quiver():
    # principal block GF(2)C2 carries a loop; M2(GF(2)) is a separate block
    alg = group_algebra_s3(2)
    q = quiver(alg)
    assert q.components == (Component(1, 1), Component(2, 1))
    assert q.gabriel_arrows == ((1, 0), (0, 0))
    assert q.loewy_layers == ((1, 1), (2,))
    check_quiver_invariants(alg, q)


def test_upper_triangular_quiver():
    alg = upper_triangular(5)
    q = quiver(alg)
    assert q.arrow_total == 1
    assert sorted(map(sum, q.arrows)) == [0, 1]
    check_quiver_invariants(alg, q)


def test_matrix_algebra_primitive_idempotents():
    alg = matrix_algebra(3, 2)
    q = quiver(alg)
    assert len(q.idempotents) == 3
    assert q.idempotent_vertex == (0, 0, 0)
    check_quiver_invariants(alg, q)


def test_lifting_from_quotient():
    # GF(3)[x]/(x^2 (x - 1)): idempotents of the quotient lift to genuine ones
    alg = truncated_poly(3, [0, 1, 2])  # x^3 - x^2 = x^3 + 2x^2
    rad = radical(alg)
    wd = wedderburn(alg, rad)
    keep = alg.quotient_keep(rad.basis)
    lifts = lift_idempotents(alg, keep, list(wd.central_idempotents))
    for e in lifts:
        assert np.array_equal(alg.mul(e, e), e)
    assert np.array_equal(sum(lifts) % 3, alg.unit)


def test_fpalgebra_center_of_matrix_algebra():
    alg: FpAlgebra = matrix_algebra(2, 3)
    Z = alg.center()
    assert Z.dim == 1 and Z.contains(alg.unit)

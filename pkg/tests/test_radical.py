import numpy as np
import pytest

from algebras import group_algebra_s3, matrix_algebra, truncated_poly, upper_triangular
from conftest import instance
from pgmodular.ccalgebra import (
    corner_radical_identity,
    fp_algebra_from_sc,
    radical,
    radical_bruteforce,
    rank3_algebra,
)
from pgmodular.exactla import Subspace
from pgmodular.incidence import point_graph
from pgmodular.pgtheory import PgParams, PrimeCase, RadicalGenerator, classify_prime, frame_as, symbolic_radical

PG = {"doily": PgParams(2, 2, 1), "grid3": PgParams(2, 1, 1), "grid4": PgParams(3, 1, 1), "grid5": PgParams(4, 1, 1)}


def point_algebra(name, p):
    inst = instance(name)
    return rank3_algebra(point_graph(inst.D, inst.params), p)


def predicted_span(pp, p):
    """Span of the symbolic radical generators written in the basis (I, A, J - I - A)."""
    from pgmodular.pgtheory import pg_spectrum

    sp = pg_spectrum(pp)
    k, lam, mu, r = sp.k, sp.lam, sp.mu, sp.r
    gens = {
        RadicalGenerator.ALL_ONES_J: [1, 1, 1],
        # (A - kI)(A - rI) = A^2 - (k + r) A + k r I
        RadicalGenerator.QUADRATIC_B: [k + k * r, lam - k - r, mu],
    }
    vecs = [gens[g] for g in symbolic_radical(pp, p).generators]
    return Subspace.span(vecs, p, 3)


def assert_certified(rep):
    assert rep.is_ideal and rep.is_nilpotent and rep.quotient_semisimple
    dims = rep.power_dims
    assert dims[-1] == 0
    assert all(a > b for a, b in zip(dims, dims[1:]))


@pytest.mark.parametrize("name", list(PG))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_symbolic_radical_matches_computed(name, p):
    rep = radical(point_algebra(name, p))
    assert_certified(rep)
    assert rep.dim == symbolic_radical(PG[name], p).dim
    predicted = predicted_span(PG[name], p)
    if classify_prime(PG[name], p) is PrimeCase.VR:
        # B degenerates to a multiple of J here; only the dimension is pinned down
        assert predicted.issubspace(rep.basis)
    else:
        assert rep.basis == predicted


def test_vr_instances_among_bundled_grids():
    assert classify_prime(PG["grid4"], 2) is PrimeCase.VR
    assert classify_prime(PG["grid3"], 3) is PrimeCase.VR
    assert radical(point_algebra("grid4", 2)).dim == 2


def test_doily_point_radicals():
    r2 = radical(point_algebra("doily", 2))
    assert r2.power_dims == [1, 0]
    assert r2.basis.tolist() == [[0, 0, 1]]  # B = I + A + J = A2 mod 2
    r3 = radical(point_algebra("doily", 3))
    assert r3.basis.tolist() == [[1, 1, 1]]
    assert radical(point_algebra("doily", 7)).dim == 0


@pytest.mark.parametrize("name", list(PG))
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_semisimple_iff_frame_coprime(name, p):
    assert (radical(point_algebra(name, p)).dim == 0) == (frame_as(PG[name]) % p != 0)


def test_design_algebra_radical(doily):
    rep = radical(fp_algebra_from_sc(doily.sc, 2))
    assert_certified(rep)
    assert rep.dim == 4
    assert rep.power_dims == [4, 2, 0]
    assert rep.loewy_length == 3


@pytest.mark.parametrize("name", list(PG))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_oracle_point_algebras(name, p):
    alg = point_algebra(name, p)
    assert radical_bruteforce(alg) == radical(alg).basis


@pytest.mark.parametrize("name", list(PG))
@pytest.mark.parametrize("p", [2, 3])
def test_oracle_design_algebras(name, p):
    alg = fp_algebra_from_sc(instance(name).sc, p)
    assert radical_bruteforce(alg) == radical(alg).basis


def test_bruteforce_guard(doily):
    with pytest.raises(ValueError):
        radical_bruteforce(fp_algebra_from_sc(doily.sc, 5))


@pytest.mark.parametrize(
    "make, dim",
    [
        (lambda: group_algebra_s3(2), 1),
        (lambda: group_algebra_s3(3), 4),
        (lambda: group_algebra_s3(5), 0),
        (lambda: matrix_algebra(2, 2), 0),
        (lambda: truncated_poly(2, [0, 0]), 1),  # x^2
        (lambda: truncated_poly(3, [0, 0, 0]), 2),  # x^3
        (lambda: truncated_poly(2, [1, 1]), 0),  # x^2 + x + 1 is irreducible
        (lambda: upper_triangular(3), 1),
    ],
)
def test_known_radicals(make, dim):
    alg = make()
    rep = radical(alg)
    assert_certified(rep)
    assert rep.dim == dim
    assert radical_bruteforce(alg) == rep.basis


def test_large_prime_uses_exact_traces(doily):
    # p^2 > 2^31 exercises the object-dtype trace path
    rep = radical(fp_algebra_from_sc(doily.sc, 2_147_483_647))
    assert rep.dim == 0


@pytest.mark.parametrize("name", list(PG))
@pytest.mark.parametrize("fiber", ["point", "block"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_corner_radical_identity(name, fiber, p):
    alg = fp_algebra_from_sc(instance(name).sc, p)
    check = corner_radical_identity(alg, radical(alg), fiber)
    assert check.holds


def test_corner_dims_doily(doily):
    alg = fp_algebra_from_sc(doily.sc, 2)
    rep = radical(alg)
    point = corner_radical_identity(alg, rep, "point")
    block = corner_radical_identity(alg, rep, "block")
    assert point.corner_radical.dim == block.corner_radical.dim == 1
    assert point.corner_radical.dim <= rep.dim
    assert np.array_equal(point.corner_radical.basis, [[0, 0, 1, 0, 0, 0, 0, 0, 0, 0]])


def test_special_element_in_radical(doily):
    from pgmodular.ccalgebra import special_element_u

    rep = radical(fp_algebra_from_sc(doily.sc, 2))
    assert rep.basis.contains(special_element_u(doily.sc, 2))

"""Acceptance criteria 1-15, exact checks only.

Each test is named ``test_criterion_<n>_...``; the terminal summary prints
one PASS/FAIL line per criterion.
"""

import json

import numpy as np

from conftest import instance
from pgmodular.ccalgebra import (
    commutator_quotient_dim,
    corner_radical_identity,
    fp_algebra_from_sc,
    radical,
    radical_bruteforce,
    rank3_algebra,
    special_element_u,
    wedderburn,
)
from pgmodular.cli import main
from pgmodular.exactla import MatF, Subspace, is_prime, nullspace
from pgmodular.incidence import check_srd, format_incidence, gen_doily, gen_grid, point_graph, verify_matrix_identities
from pgmodular.pgtheory import (
    PgParams,
    PrankKind,
    bad_primes,
    feasible_params,
    frame_as,
    frame_from_spectrum,
    generic_prank,
    pg_spectrum,
)

DOILY_PG = PgParams(2, 2, 1)
GRID_PG = {3: PgParams(2, 1, 1), 4: PgParams(3, 1, 1), 5: PgParams(4, 1, 1)}


def point_alg(name, p):
    inst = instance(name)
    return rank3_algebra(point_graph(inst.D, inst.params), p)


def design_alg(name, p):
    return fp_algebra_from_sc(instance(name).sc, p)


def test_criterion_1_frame_number():
    assert frame_as(DOILY_PG) == 3600
    assert bad_primes(DOILY_PG) == [2, 3, 5]


def test_criterion_2_spectrum():
    assert pg_spectrum(DOILY_PG).as_tuple() == (15, 15, 6, 1, 3, 1, -3, 9, 5)


def test_criterion_3_frame_formula_equivalence():
    sweep = list(feasible_params(8))
    assert len(sweep) >= 24
    for pp in sweep:
        sp = pg_spectrum(pp)
        assert frame_as(pp) == frame_from_spectrum(sp.v, sp.k, sp.f, sp.g), pp


def test_criterion_4_doily_pipeline():
    D = gen_doily()
    params = check_srd(D)
    assert params.as_tuple() == (3, 3, 1, 0, 1, 0, 2, 1, 2, 1)
    assert verify_matrix_identities(D, params).as_tuple() == (True,) * 5
    sc = instance("doily").sc
    assert list(sc.product(7, 9)) == [3, 1, 0, 0, 0, 0, 0, 0, 0, 0]
    # sigma_2 sigma_7 = sigma_7 + sigma_8
    assert list(sc.product(2, 7)) == [0, 0, 0, 0, 0, 0, 1, 1, 0, 0]


def test_criterion_5_doily_prank():
    inst = instance("doily")
    A1 = MatF(point_graph(inst.D, inst.params).adjacency, 2)
    assert A1.rank() == 14
    assert nullspace(A1) == Subspace.span([[1] * 15], 2, 15)


def test_criterion_6_point_scheme_radicals():
    B_mod2 = Subspace.span([[0, 0, 1]], 2, 3)  # B = I + A1 + J = A2 mod 2
    for p in (2, 3, 5):
        rep = radical(point_alg("doily", p))
        assert rep.dim == 1
        expected = B_mod2 if p == 2 else Subspace.span([[1, 1, 1]], p, 3)
        assert rep.basis == expected
        wd = wedderburn(point_alg("doily", p), rep)
        assert [(c.n, c.f) for c in wd.components] == [(1, 1), (1, 1)]
    for p in (7, 11, 13):
        assert radical(point_alg("doily", p)).dim == 0


def test_criterion_7_design_algebra_radical():
    alg = design_alg("doily", 2)
    rep = radical(alg)
    assert rep.dim == 4
    assert rep.power_dims[1] == 2
    assert rep.loewy_length >= 3
    assert wedderburn(alg, rep).total_dim == 6


def test_criterion_8_special_element():
    alg = design_alg("doily", 2)
    u = special_element_u(instance("doily").sc, 2)
    assert u.any()
    assert not alg.mul(u, u).any()
    assert not Subspace.span(np.eye(10, dtype=np.int64)[:3], 2, 10).contains(u)
    assert radical(alg).basis.contains(u)


def test_criterion_9_corner_identity():
    alg = design_alg("doily", 2)
    rep = radical(alg)
    check = corner_radical_identity(alg, rep, "point")
    assert check.corner_radical == check.sandwiched
    assert radical(point_alg("doily", 2)).dim == 1 <= rep.dim == 4


def test_criterion_10_commutator_quotient():
    sc = instance("doily").sc
    assert commutator_quotient_dim(sc, "rational") == 4
    assert commutator_quotient_dim(sc, 2) == 4


def test_criterion_11_split_prime_shape():
    wd = wedderburn(design_alg("doily", 101))
    assert wd.radical_dim == 0
    assert sorted(c.dim for c in wd.components) == [1, 1, 4, 4]


def test_criterion_12_oracle_equivalence():
    for name in ("doily", "grid3", "grid4"):
        for p in (2, 3, 5, 7):
            alg = point_alg(name, p)
            assert radical(alg).basis == radical_bruteforce(alg), (name, "point", p)
        for p in (2, 3):
            alg = design_alg(name, p)
            assert radical(alg).basis == radical_bruteforce(alg), (name, "design", p)


def test_criterion_13_generic_prank_cross_validation():
    cases = [("doily", DOILY_PG)] + [(f"grid{n}", GRID_PG[n]) for n in (3, 4, 5)]
    for name, pp in cases:
        inst = instance(name)
        A = point_graph(inst.D, inst.params).adjacency
        for p in (q for q in range(2, 51) if is_prime(q)):
            res = generic_prank(pp, p)
            if not res.exceptional:
                assert res.value == MatF(A, p).rank(), (name, p)
    res = generic_prank(PgParams(4, 1, 1), 3)
    assert (res.kind, res.value) == (PrankKind.DROP_F, 17)
    G5 = gen_grid(5)
    assert MatF(point_graph(G5, check_srd(G5)).adjacency, 3).rank() == 17


def test_criterion_14_semisimplicity_criterion():
    cases = [("doily", DOILY_PG)] + [(f"grid{n}", GRID_PG[n]) for n in (3, 4, 5)]
    for name, pp in cases:
        for p in (2, 3, 5, 7, 11, 13):
            assert (radical(point_alg(name, p)).dim == 0) == (frame_as(pp) % p != 0), (name, p)


def test_criterion_15_quiver_report(tmp_path, capsys):
    path = tmp_path / "doily.txt"
    path.write_text(format_incidence(gen_doily()))
    assert main(["cc", "modular", str(path), "--p", "2"]) == 0
    q = json.loads(capsys.readouterr().out)["result"]["quiver"]
    alg = design_alg("doily", 2)
    idems = [np.array(e) for e in q["idempotents"]]
    zero = alg.zero()
    for i, a in enumerate(idems):
        for j, b in enumerate(idems):
            assert np.array_equal(alg.mul(a, b), a if i == j else zero)
    assert np.array_equal(sum(idems) % 2, alg.unit)
    assert q["arrow_total"] == sum(map(sum, q["arrows"])) == 2
    assert [sum(row) for row in q["cartan"]] == q["block_dims"]
    assert sum(q["block_dims"]) == 10
    assert [sum(layer) for layer in q["loewy_layers"]] == q["projective_dims"]
    assert q["vertices"] == len(q["cartan"]) == len(q["arrows"])

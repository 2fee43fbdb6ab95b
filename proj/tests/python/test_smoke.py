from fractions import Fraction

import incgeo


def test_matrix_rank_info():
    info = incgeo.matrix_rank_info([[1, 2], [2, 4]])
    assert info["rank"] == 1
    assert info["listability"] == 2
    info2 = incgeo.matrix_rank_info([["1/2", 1], [1, 2]])
    assert info2["rank"] == 1


def test_lattice_counts():
    lat = incgeo.gen_lattice(5)
    assert lat["num_hyperplanes"] == 16
    assert lat["num_points"] == 144
    assert lat["universe_incidences"] == "256"


def test_verify_lattice():
    rep = incgeo.verify_lattice(5, flats=50, seed=1)
    assert rep["ok"]
    assert rep["incidence_exact"]
    assert rep["point_bound_violations"] == 0


def test_grid():
    grid = incgeo.gen_grid(2, 2)
    assert grid["delta"] == Fraction(1, 4)
    assert grid["zero_rectangle_density"] == Fraction(1, 16)
    assert len(grid["set_family"]["family_a"]) == 4


def test_con_and_rs():
    config = incgeo.con_of([[1, 0], [0, 1]])
    assert len(config["points"]) == 2
    assert len(config["hyperplanes"]) == 4
    witness = incgeo.rs_exact(config)
    assert witness["edges"] >= 1
    stats = incgeo.incidence_stats(config)
    assert stats["density"] == Fraction(1, 2)


def test_biclique_sample_deterministic():
    config = incgeo.con_of([[1, 0], [0, 1]])
    a = incgeo.biclique_sample(config, trials=50, seed=9)
    b = incgeo.biclique_sample(config, trials=50, seed=9)
    assert a == b


def test_reduce_and_protocol():
    rect = incgeo.reduce([[0, 1, 2], [2, 1, 0], [0, 1, 2]])
    assert rect["size"] >= 1
    tree = incgeo.protocol([[0, 1], [1, 0]])
    assert tree["depth"] >= 1
    assert len(tree["nodes"]) >= 1


def test_acceptance_grid_scope():
    results = incgeo.run_acceptance("grid")
    assert [r["criterion"] for r in results] == [7, 8]
    assert all(r["passed"] for r in results)

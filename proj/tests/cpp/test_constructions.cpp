#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "incgeo/constructions.hpp"
#include "incgeo/search.hpp"

using namespace incgeo;

TEST_CASE("lattice_construction sizes") {
    LatticeConstruction d2 = lattice_construction(2);
    CHECK(d2.num_hyperplanes() == 2);
    CHECK(d2.num_points() == 10);
    CHECK(d2.num_universe_points() == 6);
    CHECK(d2.points().size() == 10);
    CHECK(d2.universe_points().size() == 6);

    LatticeConstruction d5 = lattice_construction(5);
    CHECK(d5.num_hyperplanes() == 16);
    CHECK(d5.num_points() == 144);
    CHECK(d5.num_universe_points() == 144);

    LatticeConstruction d10 = lattice_construction(10);
    CHECK(d10.num_hyperplanes() == 512);
    CHECK(d10.num_points() == 6656);
    CHECK(d10.num_universe_points() == 9728);

    CHECK_THROWS_AS(lattice_construction(4), std::invalid_argument);  // 3 not a square
    CHECK_THROWS_AS(lattice_construction(1), std::invalid_argument);
}

TEST_CASE("at d = 5 the point band equals the universe band") {
    LatticeConstruction d5 = lattice_construction(5);
    CHECK(2 * d5.root == static_cast<long>(d5.d - 1));
    CHECK(d5.points() == d5.universe_points());
}

TEST_CASE("closed-form incidence counts match pairwise counting") {
    for (std::size_t d : {2UL, 5UL}) {
        LatticeConstruction lc = lattice_construction(d);
        IncidenceStats s = incidence_stats(lc.config(true));
        CHECK(Int(s.incidences) == lc.universe_incidences());
        IncidenceStats sp = incidence_stats(lc.config(false));
        CHECK(Int(sp.incidences) == lc.point_incidences());
    }
    CHECK(lattice_construction(5).universe_incidences() == 256);
}

TEST_CASE("verify_lattice_claims at d = 5") {
    LatticeConstruction lc = lattice_construction(5);
    LatticeReport rep = verify_lattice_claims(lc, 200, 61, true);
    CHECK(rep.used_pairwise);
    CHECK(rep.incidence_exact);
    CHECK(rep.dense_subgraph_ok);
    CHECK(rep.point_bound_violations == 0);
    CHECK(rep.hyper_bound_violations == 0);
    CHECK(rep.containment_checked);
    CHECK(rep.containment_ok);
    CHECK(rep.all_ok());
}

TEST_CASE("lattice_points_on_flat agrees with enumeration at d = 5") {
    LatticeConstruction lc = lattice_construction(5);
    std::vector<Point> universe = lc.universe_points();
    std::vector<Hyperplane> hs = lc.hyperplanes();
    for (std::size_t h : {0UL, 1UL, 5UL, 15UL}) {
        Flat f = flat_of_hyperplane(hs[h]);
        unsigned long brute = 0;
        for (const auto& p : universe)
            if (flat_contains_point(f, p)) ++brute;
        CHECK(lattice_points_on_flat(lc, f, static_cast<long>(lc.d - 1)) == brute);
    }
    Flat both = intersect_flat_hyperplane(flat_of_hyperplane(hs[1]), hs[2]);
    unsigned long brute = 0;
    for (const auto& p : universe)
        if (flat_contains_point(both, p)) ++brute;
    CHECK(lattice_points_on_flat(lc, both, static_cast<long>(lc.d - 1)) == brute);
}

TEST_CASE("grid_family") {
    SetFamilyPair g22 = grid_family(2, 2);
    CHECK(g22.ground_size == 4);
    CHECK(g22.family_a.size() == 4);
    for (std::uint64_t s : g22.family_a) CHECK(std::popcount(s) == 2);

    SetFamilyPair g1b = grid_family(1, 3);
    CHECK(g1b.family_a.size() == 1);
    CHECK(std::popcount(g1b.family_a[0]) == 3);

    CHECK(grid_family(3, 2).family_a.size() == 9);
    CHECK_THROWS_AS(grid_family(8, 8), std::length_error);
}

TEST_CASE("cross_disjoint_epsilon and the grid delta formula") {
    SetFamilyPair g22 = grid_family(2, 2);
    CHECK(1 - cross_disjoint_epsilon(g22) == Rat(1, 4));

    SetFamilyPair s1, s2;
    s1.ground_size = 2;
    s1.family_a = {1};  // {0}
    s1.family_b = {2};  // {1}
    CHECK(cross_disjoint_epsilon(s1) == 0);

    for (std::size_t b : {2UL, 4UL, 8UL}) {
        SetFamilyPair g = grid_family(2, b);
        CHECK(1 - cross_disjoint_epsilon(g) == rat_pow(Rat(1, 2), b));
    }
}

TEST_CASE("cross_intersecting_profile") {
    std::set<std::size_t> g22 = cross_intersecting_profile(grid_family(2, 2));
    CHECK(g22 == std::set<std::size_t>{0, 1, 2});

    SetFamilyPair all;
    all.ground_size = 2;
    all.family_a = {0, 1, 2, 3};
    all.family_b = all.family_a;
    CHECK(cross_intersecting_profile(all) == std::set<std::size_t>{0, 1, 2});

    SetFamilyPair disjoint;
    disjoint.ground_size = 2;
    disjoint.family_a = {1};
    disjoint.family_b = {2};
    CHECK(cross_intersecting_profile(disjoint) == std::set<std::size_t>{0});
}

TEST_CASE("intersection_matrix") {
    SetFamilyPair singletons;
    singletons.ground_size = 3;
    singletons.family_a = {1, 2, 4};
    singletons.family_b = {1, 2, 4};
    CHECK(intersection_matrix(singletons) == Matrix::identity(3));

    Matrix g = intersection_matrix(grid_family(2, 2));
    CHECK(g.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(g.at(i, j) >= 0);
            CHECK(g.at(i, j) <= 2);
        }
    CHECK(rank(g) <= 4);  // factors through indicator vectors in R^4

    std::mt19937_64 rng(62);
    for (int it = 0; it < 10; ++it) {
        SetFamilyPair fp = random_sparse_family(6, 2, 8, 100 + it);
        CHECK(rank(intersection_matrix(fp)) <= fp.ground_size);
    }
}

TEST_CASE("max_zero_rectangle_density") {
    CHECK(max_zero_rectangle_density(grid_family(2, 2)) == Rat(1, 16));
    CHECK(max_zero_rectangle_density(grid_family(2, 3)) == Rat(1, 64));

    SetFamilyPair disjoint;
    disjoint.ground_size = 2;
    disjoint.family_a = {1};
    disjoint.family_b = {2};
    CHECK(max_zero_rectangle_density(disjoint) == 1);
}

TEST_CASE("configuration view of a set pair matches the disjointness density") {
    SetFamilyPair g22 = grid_family(2, 2);
    Configuration c = config_from_set_pair(g22);
    c.validate();
    CHECK(incidence_stats(c).density == 1 - cross_disjoint_epsilon(g22));

    std::mt19937_64 rng(63);
    for (int it = 0; it < 5; ++it) {
        SetFamilyPair fp = random_sparse_family(6, 2, 5, 200 + it);
        std::set<std::uint64_t> dedup(fp.family_b.begin(), fp.family_b.end());
        fp.family_b.assign(dedup.begin(), dedup.end());
        Configuration rc = config_from_set_pair(fp);
        rc.validate();
        CHECK(incidence_stats(rc).density == 1 - cross_disjoint_epsilon(fp));
    }
}

TEST_CASE("frankl_rodl_check") {
    FranklRodlReport d2 = frankl_rodl_check(2);
    CHECK(d2.max_product == 4);
    CHECK(d2.bound_holds);
    CHECK(d2.max_product_by_t[0] == 4);  // R = {empty set}, S = all of 2^[2]

    FranklRodlReport d3 = frankl_rodl_check(3);
    CHECK(d3.max_product <= 8);
    CHECK(d3.max_product == 8);
    CHECK(d3.bound_holds);

    CHECK_THROWS_AS(frankl_rodl_check(5), std::length_error);
}

TEST_CASE("random_sparse_family is deterministic and well formed") {
    SetFamilyPair a = random_sparse_family(10, 3, 20, 77);
    SetFamilyPair b = random_sparse_family(10, 3, 20, 77);
    CHECK(a.family_a == b.family_a);
    CHECK(a.family_a.size() == 20);
    for (std::uint64_t s : a.family_a) {
        CHECK(std::popcount(s) == 3);
        CHECK((s >> 10) == 0);
    }
    SetFamilyPair c = random_sparse_family(10, 3, 20, 78);
    CHECK(a.family_a != c.family_a);
}

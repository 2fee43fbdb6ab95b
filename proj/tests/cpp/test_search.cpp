#include <doctest.h>

#include <random>

#include "incgeo/constructions.hpp"
#include "incgeo/search.hpp"

using namespace incgeo;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, long lo, long hi) {
    std::uniform_int_distribution<long> entry(lo, hi);
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = entry(rng);
    return out;
}

bool usable_for_con(const Matrix& m) {
    bool nonzero = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool col_zero = true;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) {
                col_zero = false;
                nonzero = true;
            }
        if (col_zero) return false;
    }
    return nonzero;
}

Configuration random_configuration(std::mt19937_64& rng, std::size_t d, std::size_t n,
                                   std::size_t m) {
    std::uniform_int_distribution<long> entry(-1, 1);
    Configuration c;
    c.dim = d;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> coords(d);
        for (auto& v : coords) v = entry(rng);
        c.points.emplace_back(std::move(coords));
    }
    while (c.hyperplanes.size() < m) {
        std::vector<Rat> normal(d);
        bool nonzero = false;
        for (auto& v : normal) {
            v = entry(rng);
            if (v != 0) nonzero = true;
        }
        if (!nonzero) continue;
        Hyperplane h(normal, Rat(entry(rng)));
        bool dup = false;
        for (const auto& other : c.hyperplanes) dup = dup || other == h;
        if (!dup) c.hyperplanes.push_back(h);
    }
    return c;
}

}  // namespace

TEST_CASE("rs_exact basics") {
    Configuration c;
    c.dim = 2;
    c.points = {Point{0, 0}};
    c.hyperplanes = {Hyperplane({1, 0}, 0)};
    Biclique b = rs_exact(c);
    CHECK(b.edges == 1);

    // Con of the all-ones 2x2 matrix: identical columns merge into one
    // block, so the configuration is one hyperplane with both points on it.
    ConResult con = con_of(Matrix{{1, 1}, {1, 1}});
    CHECK(con.config.hyperplanes.size() == 1);
    Biclique full = rs_exact(con.config);
    CHECK(full.edges == 2);
    CHECK(full.point_indices.size() == 2);
}

TEST_CASE("rs_exact on the d = 2 lattice universe") {
    LatticeConstruction lc = lattice_construction(2);
    Biclique b = rs_exact(lc.config(true));
    CHECK(b.edges <= 2);  // 2^(d-1)
    CHECK(b.edges == 2);
    CHECK(is_valid_biclique(lc.config(true), b));
}

TEST_CASE("max_monochromatic_rectangle") {
    Matrix constant(3, 4);
    auto [full, v] = max_monochromatic_rectangle(constant);
    CHECK(full.size() == 12);
    CHECK(v == 0);

    // For the 2x2 identity the two zeros sit off-diagonal and do not form
    // a rectangle, so the maximum constant rectangle is a single entry.
    auto [r2, v2] = max_monochromatic_rectangle(Matrix::identity(2));
    CHECK(r2.size() == 1);

    auto [r4, v4] = max_monochromatic_rectangle(Matrix::identity(4));
    CHECK(r4.size() == 4);
    CHECK(v4 == 0);
}

TEST_CASE("max_value_rectangle") {
    auto [r, v] = max_value_rectangle(Matrix::identity(3), Rat(1));
    CHECK(r.size() == 1);
    CHECK(v == 1);
    auto [z, vz] = max_value_rectangle(Matrix(2, 5), Rat(0));
    CHECK(z.size() == 10);
}

TEST_CASE("max_1listable_submatrix") {
    Matrix row{{0, 5, 7}};
    CHECK(max_1listable_submatrix(row).size() == 3);

    CHECK(max_1listable_submatrix(Matrix::identity(2)).size() == 2);

    Matrix dup{{1, 2, 3}, {1, 2, 3}, {0, 0, 0}};
    CHECK(max_1listable_submatrix(dup).size() >= 6);
}

TEST_CASE("randomized_biclique basics") {
    // All points on all hyperplanes: first trial returns the full biclique.
    Configuration c;
    c.dim = 2;
    c.points = {Point{0, 0}, Point{0, 5}};
    c.hyperplanes = {Hyperplane({1, 0}, 0)};
    SearchBudget budget;
    budget.trials = 1;
    auto b = randomized_biclique(c, budget);
    REQUIRE(b.has_value());
    CHECK(b->edges == 2);
    CHECK(is_valid_biclique(c, *b));

    Configuration single;
    single.dim = 1;
    single.points = {Point{1}};
    single.hyperplanes = {Hyperplane({1}, 1)};
    auto s = randomized_biclique(single, budget);
    REQUIRE(s.has_value());
    CHECK(s->edges == 1);
}

TEST_CASE("randomized_biclique on the d = 2 lattice meets the edge bound") {
    LatticeConstruction lc = lattice_construction(2);
    Configuration c = lc.config(true);
    IncidenceStats stats = incidence_stats(c);
    Biclique exact = rs_exact(c);
    SearchBudget budget;
    budget.trials = 500;
    budget.seed = 41;
    auto b = randomized_biclique(c, budget);
    REQUIRE(b.has_value());
    CHECK(is_valid_biclique(c, *b));
    CHECK(b->edges <= exact.edges);
    Rat bound = rat_pow(stats.density, 4) / 12;  // eps^(2d)/(6d), d = 2
    bound *= static_cast<unsigned long>(c.points.size() * c.hyperplanes.size());
    CHECK(Rat(b->edges) >= bound);
}

TEST_CASE("randomized_biclique is deterministic in the seed") {
    std::mt19937_64 rng(42);
    Configuration c = random_configuration(rng, 2, 6, 4);
    SearchBudget budget;
    budget.trials = 50;
    budget.seed = 7;
    auto a = randomized_biclique(c, budget);
    auto b = randomized_biclique(c, budget);
    CHECK(a.has_value() == b.has_value());
    if (a && b) {
        CHECK(a->flat == b->flat);
        CHECK(a->point_indices == b->point_indices);
    }
}

TEST_CASE("greedy_biclique basics") {
    Configuration c;
    c.dim = 2;
    c.points = {Point{0, 0}, Point{0, 2}};
    c.hyperplanes = {Hyperplane({1, 0}, 0)};
    Biclique b = greedy_biclique(c);
    CHECK(b.edges == 2);

    std::mt19937_64 rng(43);
    for (int it = 0; it < 15; ++it) {
        Configuration rc = random_configuration(rng, 2, 5, 4);
        Biclique g = greedy_biclique(rc);
        CHECK(is_valid_biclique(rc, g));
        CHECK(g.edges <= rs_exact(rc).edges);
    }
}

TEST_CASE("search results validate on random configurations") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 20; ++it) {
        Configuration c = random_configuration(rng, 2 + it % 2, 5, 4);
        Biclique exact = rs_exact(c);
        CHECK(is_valid_biclique(c, exact));
        SearchBudget budget;
        budget.trials = 20;
        budget.seed = 100 + it;
        auto r = randomized_biclique(c, budget);
        if (r) {
            CHECK(is_valid_biclique(c, *r));
            CHECK(r->edges <= exact.edges);
        }
    }
}

TEST_CASE("monochromatic rectangle vs rs on Con(M): size * arity >= rs") {
    std::mt19937_64 rng(45);
    int done = 0;
    while (done < 30) {
        Matrix m = random_matrix(rng, 2 + done % 3, 2 + (done / 2) % 3, 0, 2);
        if (!usable_for_con(m)) continue;
        ++done;
        ConResult con = con_of(m);
        Biclique b = rs_exact(con.config);
        auto [rect, value] = max_monochromatic_rectangle(m);
        CHECK(rect.size() * arity(m) >= b.edges);
    }
}

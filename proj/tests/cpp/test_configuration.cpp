#include <doctest.h>

#include <random>
#include <set>

#include "incgeo/configuration.hpp"
#include "incgeo/constructions.hpp"

using namespace incgeo;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, long lo, long hi) {
    std::uniform_int_distribution<long> entry(lo, hi);
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = entry(rng);
    return out;
}

// k-listable with rank <= k: rows drawn from k base rows.
Matrix random_listable(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t k) {
    Matrix base = random_matrix(rng, k, 4, -2, 2);
    Matrix v = random_matrix(rng, 4, m, -2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    Matrix u(n, 4);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = pick(rng);
        for (std::size_t j = 0; j < 4; ++j) u.at(i, j) = base.at(src, j);
    }
    return u * v;
}

bool matrix_is_nonzero(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return true;
    return false;
}

bool has_zero_column(const Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool all_zero = true;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) all_zero = false;
        if (all_zero) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("incidence_stats basics") {
    Configuration c;
    c.dim = 2;
    c.points = {Point{0, 0}};
    c.hyperplanes = {Hyperplane({1, 0}, 0)};
    IncidenceStats s = incidence_stats(c);
    CHECK(s.incidences == 1);
    CHECK(s.density == 1);

    c.points = {Point{1, 1}};
    s = incidence_stats(c);
    CHECK(s.incidences == 0);
    CHECK(s.density == 0);
}

TEST_CASE("incidence_stats on the d = 2 lattice universe") {
    LatticeConstruction lc = lattice_construction(2);
    IncidenceStats s = incidence_stats(lc.config(true));
    CHECK(s.incidences == 4);  // 2^(2d-2)
}

TEST_CASE("configuration validation") {
    Configuration c;
    c.dim = 2;
    c.points = {Point{0, 0}};
    c.hyperplanes = {Hyperplane({1, 0}, 0), Hyperplane({2, 0}, 0)};  // same canonical form
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.hyperplanes.pop_back();
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("find_parallel_partition") {
    // {x1 = 0, x1 = 1} with points on each: one block of two hyperplanes.
    Configuration c;
    c.dim = 2;
    c.points = {Point{0, 3}, Point{1, -1}};
    c.hyperplanes = {Hyperplane({1, 0}, 0), Hyperplane({1, 0}, 1)};
    auto pp = find_parallel_partition(c, 2);
    REQUIRE(pp.has_value());
    CHECK(pp->blocks.size() == 1);
    CHECK(is_valid_parallel_partition(c, *pp));
    CHECK_FALSE(find_parallel_partition(c, 1).has_value());

    // A single hyperplane missing some point: absent for every k.
    Configuration c2;
    c2.dim = 2;
    c2.points = {Point{0, 0}, Point{1, 1}};
    c2.hyperplanes = {Hyperplane({1, 0}, 0)};
    CHECK_FALSE(find_parallel_partition(c2, 3).has_value());
}

TEST_CASE("find_parallel_partition on Con of a Boolean matrix") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        Matrix m = random_matrix(rng, 2 + it % 4, 2 + (it / 2) % 4, 0, 1);
        if (!matrix_is_nonzero(m) || has_zero_column(m)) continue;
        ConResult con = con_of(m);
        auto pp = find_parallel_partition(con.config, 2);
        REQUIRE(pp.has_value());
        CHECK(is_valid_parallel_partition(con.config, *pp));
    }
}

TEST_CASE("listability and arity") {
    CHECK(listability(Matrix{{3, 3}, {3, 3}}) == 1);
    CHECK(listability(Matrix{{0, 1}, {1, 1}}) == 2);
    CHECK(listability(Matrix{{0, 0}, {1, 1}, {2, 0}}) == 3);
    CHECK(arity(Matrix(2, 2)) == 1);
    CHECK(arity(Matrix{{0, 1}, {1, 0}}) == 2);
    CHECK(arity(Matrix{{0, 1}, {2, 3}}) == 4);
}

TEST_CASE("mat_of basics") {
    Configuration c;
    c.dim = 2;
    c.points = {Point{2, 3}};
    c.hyperplanes = {Hyperplane({1, 1}, 5)};
    ParallelPartition pp;
    pp.blocks = {{0}};
    pp.block_size_bound = 1;
    REQUIRE(is_valid_parallel_partition(c, pp));
    Matrix m = mat_of(c, pp);
    CHECK(m == Matrix{{5}});
}

TEST_CASE("con_of basics") {
    ConResult con = con_of(Matrix::identity(2));
    CHECK(con.config.points.size() == 2);
    CHECK(con.config.hyperplanes.size() == 4);
    CHECK(con.partition.blocks.size() == 2);
    CHECK(is_valid_parallel_partition(con.config, con.partition));
    CHECK(con.config.points[0] == Point{1, 0});
    CHECK(con.config.points[1] == Point{0, 1});

    ConResult single = con_of(Matrix{{7}});
    CHECK(single.config.points.size() == 1);
    CHECK(single.config.hyperplanes.size() == 1);
    CHECK(is_valid_parallel_partition(single.config, single.partition));

    // A constant nonzero column contributes a single hyperplane.
    ConResult cc = con_of(Matrix{{1, 0}, {1, 1}});
    for (std::size_t b = 0; b < cc.partition.blocks.size(); ++b) {
        bool constant_col = true;
        std::size_t src = cc.block_columns[b].front();
        Matrix m{{1, 0}, {1, 1}};
        for (std::size_t i = 1; i < m.rows(); ++i)
            if (m.at(i, src) != m.at(0, src)) constant_col = false;
        if (constant_col) CHECK(cc.partition.blocks[b].size() == 1);
    }

    CHECK_THROWS_AS(con_of(Matrix(2, 2)), std::invalid_argument);
}

TEST_CASE("mat-con roundtrip on 50 random listable matrices") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    std::uniform_int_distribution<std::size_t> kd(1, 3);
    int done = 0;
    while (done < 50) {
        std::size_t k = kd(rng);
        Matrix m = random_listable(rng, dim(rng), dim(rng), k);
        if (!matrix_is_nonzero(m) || has_zero_column(m)) continue;
        ++done;
        std::size_t kk = listability(m);
        ConResult con = con_of(m);
        CHECK(con.config.hyperplanes.size() >= con.partition.blocks.size());
        CHECK(con.config.hyperplanes.size() <= con.partition.blocks.size() * kk);
        con.partition.block_size_bound = kk;
        CHECK(is_valid_parallel_partition(con.config, con.partition));

        Matrix back = mat_of(con.config, con.partition);
        CHECK(rank(back) <= rank(m));
        CHECK(listability(back) <= kk);
        // Per block, the offset set has at most arity(m) values.
        for (const auto& block : con.partition.blocks) {
            std::set<Rat> offsets;
            for (std::size_t h : block) offsets.insert(con.config.hyperplanes[h].offset);
            CHECK(offsets.size() <= arity(m));
        }
    }
}

TEST_CASE("mat_of of Con(M) is columnwise proportional to M for Boolean M") {
    std::mt19937_64 rng(33);
    int done = 0;
    while (done < 20) {
        Matrix m = random_matrix(rng, 2 + done % 4, 2 + (done / 2) % 4, 0, 1);
        if (!matrix_is_nonzero(m) || has_zero_column(m)) continue;
        ++done;
        ConResult con = con_of(m);
        Matrix back = mat_of(con.config, con.partition);
        REQUIRE(back.cols() == con.partition.blocks.size());
        for (std::size_t b = 0; b < back.cols(); ++b) {
            std::size_t src = con.block_columns[b].front();
            // back column b = s * (column src of m) for a single scalar s.
            std::optional<Rat> s;
            bool proportional = true;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                const Rat& orig = m.at(i, src);
                const Rat& mapped = back.at(i, b);
                if (orig == 0) {
                    if (mapped != 0) proportional = false;
                } else {
                    Rat ratio = mapped / orig;
                    if (s && *s != ratio) proportional = false;
                    if (!s) s = ratio;
                }
            }
            CHECK(proportional);
        }
    }
}

TEST_CASE("incidence density of a parallel partitioned configuration") {
    std::mt19937_64 rng(34);
    int done = 0;
    while (done < 15) {
        Matrix m = random_listable(rng, 3, 4, 2);
        if (!matrix_is_nonzero(m) || has_zero_column(m)) continue;
        ++done;
        ConResult con = con_of(m);
        IncidenceStats s = incidence_stats(con.config);
        Rat expected(static_cast<unsigned long>(con.partition.blocks.size()));
        expected /= static_cast<unsigned long>(con.config.hyperplanes.size());
        CHECK(s.density == expected);
    }
}

TEST_CASE("rectangle_from_biclique") {
    ConResult con = con_of(Matrix::identity(2));

    // All points on one hyperplane.
    std::size_t h0 = 0;
    Biclique b;
    b.flat = flat_of_hyperplane(con.config.hyperplanes[h0]);
    for (std::size_t i = 0; i < con.config.points.size(); ++i)
        if (flat_contains_point(b.flat, con.config.points[i])) b.point_indices.push_back(i);
    for (std::size_t j = 0; j < con.config.hyperplanes.size(); ++j)
        if (hyperplane_contains_flat(con.config.hyperplanes[j], b.flat))
            b.hyperplane_indices.push_back(j);
    b.edges = b.point_indices.size() * b.hyperplane_indices.size();
    REQUIRE(is_valid_biclique(con.config, b));
    Rectangle r = rectangle_from_biclique(con.config, con.partition, b);
    CHECK(r.row_indices == b.point_indices);
    CHECK(r.col_indices.size() == 1);

    Biclique empty_side;
    empty_side.flat = Flat::empty_flat(2);
    CHECK_THROWS(rectangle_from_biclique(con.config, con.partition, empty_side));
}

#include <doctest.h>

#include <random>

#include "incgeo/reductions.hpp"
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

const ListableOracle kExhaustiveOracle = [](const Matrix& b) {
    return max_1listable_submatrix(b);
};

}  // namespace

TEST_CASE("normalize_columns") {
    auto [n1, r1] = normalize_columns(Matrix{{2}, {5}});
    CHECK(n1 == Matrix{{0}, {1}});
    REQUIRE(r1.a_values[0].has_value());
    CHECK(*r1.a_values[0] == 2);
    CHECK(*r1.scale_values[0] == Rat(1, 3));

    auto [n2, r2] = normalize_columns(Matrix{{0}, {1}});
    CHECK(n2 == Matrix{{0}, {1}});
    CHECK(*r2.a_values[0] == 0);
    CHECK(*r2.scale_values[0] == 1);

    auto [n3, r3] = normalize_columns(Matrix{{4, 0}, {4, 1}});
    CHECK(n3.cols() == 1);
    CHECK(r3.dropped_constant_columns == std::vector<std::size_t>{0});
    CHECK(r3.kept_columns == std::vector<std::size_t>{1});

    auto [n4, r4] = normalize_columns(Matrix{{3, 3}});
    CHECK(n4.is_empty());
    CHECK(r4.dropped_constant_columns.size() == 2);
}

TEST_CASE("normalize_columns rank bound") {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 50; ++it) {
        Matrix m = random_matrix(rng, 2 + it % 5, 2 + (it / 3) % 5, -2, 2);
        auto [n, rec] = normalize_columns(m);
        CHECK(rank(n) <= rank(m) + 1);
    }
}

TEST_CASE("listability_step") {
    CHECK(listability_step(Matrix{{0}, {1}, {2}}) == Matrix{{0}, {0}, {2}});
    CHECK(listability_step(Matrix{{0, 1}, {1, 0}}) == Matrix(2, 2));
    CHECK(listability_step(Matrix{{0}, {1}, {-1}}) == Matrix{{0}, {0}, {2}});
    CHECK_THROWS(listability_step(Matrix{{2}, {5}}));
}

TEST_CASE("listability_step lowers listability and obeys the rank bound") {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 60; ++it) {
        Matrix m = random_listable(rng, 2 + it % 6, 2 + (it / 2) % 6, 3);
        auto [n, rec] = normalize_columns(m);
        if (n.is_empty() || listability(n) < 2) continue;
        std::size_t r = rank(n);
        Matrix stepped = listability_step(n);
        CHECK(listability(stepped) <= listability(n) - 1);
        CHECK(rank(stepped) <= r * r + r);
    }
}

TEST_CASE("find_1listable_recursive basics") {
    Matrix one_listable{{1, 2}, {1, 2}};
    Rectangle full = find_1listable_recursive(one_listable, kExhaustiveOracle);
    CHECK(full.size() == 4);

    Matrix boolean{{0, 1}, {1, 0}};
    Rectangle viaoracle = find_1listable_recursive(boolean, kExhaustiveOracle);
    CHECK(viaoracle == max_1listable_submatrix(boolean));
}

TEST_CASE("find_1listable_recursive on 100 fuzzed k-listable matrices") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    std::uniform_int_distribution<std::size_t> kd(2, 4);
    for (int it = 0; it < 100; ++it) {
        Matrix m = random_listable(rng, dim(rng), dim(rng), kd(rng));
        Rectangle r = find_1listable_recursive(m, kExhaustiveOracle);
        CHECK(r.size() >= 1);
        CHECK(is_1listable_rectangle(m, r));
    }
}

TEST_CASE("binarize_two_valued") {
    CHECK(binarize_two_valued(Matrix{{2, 5}, {5, 2}}) == Matrix{{0, 1}, {1, 0}});
    CHECK(binarize_two_valued(Matrix{{-1, 1}, {1, -1}}) == Matrix{{0, 1}, {1, 0}});
    CHECK(binarize_two_valued(Matrix{{0, 1}, {1, 1}}) == Matrix{{0, 1}, {1, 1}});
    CHECK_THROWS(binarize_two_valued(Matrix{{0, 1, 2}}));

    std::mt19937_64 rng(54);
    for (int it = 0; it < 20; ++it) {
        Matrix m = random_matrix(rng, 2 + it % 4, 2 + it % 3, 3, 4);
        if (arity(m) != 2) continue;
        CHECK(rank(binarize_two_valued(m)) <= rank(m) + 1);
    }
}

TEST_CASE("build_protocol basics") {
    RectangleFinder finder = [](const Matrix& b) { return max_monochromatic_rectangle(b); };

    Matrix constant(3, 3);
    ProtocolTree trivial = build_protocol(constant, finder);
    CHECK(trivial.depth() == 0);
    CHECK(trivial.leaves().size() == 1);
    CHECK(validate_protocol(constant, trivial));

    Matrix id2 = Matrix::identity(2);
    ProtocolTree tree = build_protocol(id2, finder);
    CHECK(validate_protocol(id2, tree));
    CHECK(tree.depth() <= 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(tree.evaluate(i, j) == id2.at(i, j));
}

TEST_CASE("build_protocol on random rank-2 8x8 Boolean matrices") {
    std::mt19937_64 rng(55);
    RectangleFinder finder = [](const Matrix& b) { return max_monochromatic_rectangle(b); };
    std::uniform_int_distribution<int> bit(0, 1);
    for (int it = 0; it < 10; ++it) {
        // Boolean rank <= 2: OR of two rank-1 Boolean blocks, then clamp.
        Matrix a(8, 1), b(1, 8), c(8, 1), d(1, 8);
        for (std::size_t i = 0; i < 8; ++i) {
            a.at(i, 0) = bit(rng);
            b.at(0, i) = bit(rng);
            c.at(i, 0) = bit(rng);
            d.at(0, i) = bit(rng);
        }
        Matrix m = a * b + c * d;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                if (m.at(i, j) > 1) m.at(i, j) = 1;
        ProtocolTree tree = build_protocol(m, finder);
        std::string why;
        CHECK(validate_protocol(m, tree, &why));
        INFO(why);
        CHECK((std::size_t(1) << tree.depth()) >= rank(m));
    }
}

TEST_CASE("protocol exhaustive validation up to 16x16") {
    std::mt19937_64 rng(56);
    RectangleFinder finder = [](const Matrix& b) { return max_monochromatic_rectangle(b); };
    std::uniform_int_distribution<std::size_t> dim(1, 16);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int it = 0; it < 12; ++it) {
        Matrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = bit(rng);
        ProtocolTree tree = build_protocol(m, finder);
        std::string why;
        bool ok = validate_protocol(m, tree, &why);
        INFO(why);
        CHECK(ok);
        CHECK((std::size_t(1) << tree.depth()) >= rank(m));
    }
}

TEST_CASE("protocol_to_dot emits a digraph") {
    RectangleFinder finder = [](const Matrix& b) { return max_monochromatic_rectangle(b); };
    ProtocolTree tree = build_protocol(Matrix::identity(2), finder);
    std::string dot = protocol_to_dot(tree);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}

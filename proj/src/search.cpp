#include "incgeo/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace incgeo {

namespace {

Biclique biclique_at(const Configuration& c, const Flat& f) {
    Biclique b;
    b.flat = f;
    if (f.is_empty()) return b;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        if (flat_contains_point(f, c.points[i])) b.point_indices.push_back(i);
    for (std::size_t j = 0; j < c.hyperplanes.size(); ++j)
        if (hyperplane_contains_flat(c.hyperplanes[j], f)) b.hyperplane_indices.push_back(j);
    b.edges = b.point_indices.size() * b.hyperplane_indices.size();
    return b;
}

// edges desc, then points desc, then lexicographically least flat.
bool better(const Biclique& a, const Biclique& b) {
    if (a.edges != b.edges) return a.edges > b.edges;
    if (a.point_indices.size() != b.point_indices.size())
        return a.point_indices.size() > b.point_indices.size();
    return a.flat < b.flat;
}

}  // namespace

Biclique rs_exact(const Configuration& c, std::size_t candidate_cap) {
    c.validate();
    std::map<Flat, std::size_t> point_count;  // visited flats -> points on them
    Biclique best;
    best.flat = Flat::empty_flat(c.dim);

    struct Frame {
        Flat flat;
        std::size_t points_on;
    };
    std::vector<Frame> stack;

    auto visit = [&](const Flat& f) -> bool {
        if (f.is_empty() || point_count.count(f)) return false;
        if (point_count.size() >= candidate_cap)
            throw std::length_error("rs_exact: candidate flat cap exceeded");
        Biclique b = biclique_at(c, f);
        point_count.emplace(f, b.point_indices.size());
        if ((best.flat.is_empty() && !f.is_empty()) || better(b, best)) best = std::move(b);
        // Subflats only lose points; prune when even the full hyperplane
        // set cannot beat the current best.
        std::size_t pts = point_count.at(f);
        if (pts == 0 || pts * c.hyperplanes.size() < best.edges) return false;
        stack.push_back({f, pts});
        return true;
    };

    for (const auto& h : c.hyperplanes) visit(flat_of_hyperplane(h));
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        for (const auto& h : c.hyperplanes) {
            if (hyperplane_contains_flat(h, fr.flat)) continue;  // no dimension decrease
            visit(intersect_flat_hyperplane(fr.flat, h));
        }
    }
    return best;
}

namespace {

// Shared core for the rectangle searches. On entry rows() <= cap.
// For each row subset, columns are grouped by their constant value.
std::pair<Rectangle, Rat> best_constant_rectangle(const Matrix& m,
                                                  const std::optional<Rat>& required_value,
                                                  std::size_t cap) {
    if (m.rows() > cap) throw std::length_error("rectangle search cap exceeded");
    if (m.rows() > 63) throw std::length_error("rectangle search limited to 63 rows");
    Rectangle best;
    Rat best_value(0);
    std::size_t best_rows = 0;
    const std::uint64_t masks = m.is_empty() ? 0 : (std::uint64_t(1) << m.rows());
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (mask >> i & 1) rows.push_back(i);
        if (rows.size() * m.cols() < best.size()) continue;

        std::map<Rat, std::vector<std::size_t>> by_value;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& v = m.at(rows.front(), j);
            bool constant = true;
            for (std::size_t i : rows)
                if (m.at(i, j) != v) {
                    constant = false;
                    break;
                }
            if (constant && (!required_value || v == *required_value))
                by_value[v].push_back(j);
        }
        for (const auto& [value, cols] : by_value) {
            unsigned long sz = rows.size() * cols.size();
            bool take = sz > best.size() || (sz == best.size() && rows.size() > best_rows);
            if (take) {
                best = Rectangle{rows, cols};
                best_value = value;
                best_rows = rows.size();
            }
        }
    }
    return {best, best_value};
}

}  // namespace

std::pair<Rectangle, Rat> max_monochromatic_rectangle(const Matrix& m, std::size_t cap) {
    if (m.rows() <= m.cols()) return best_constant_rectangle(m, std::nullopt, cap);
    auto [rect, value] = best_constant_rectangle(m.transpose(), std::nullopt, cap);
    std::swap(rect.row_indices, rect.col_indices);
    return {rect, value};
}

std::pair<Rectangle, Rat> max_value_rectangle(const Matrix& m, const Rat& value, std::size_t cap) {
    if (m.rows() <= m.cols()) return best_constant_rectangle(m, value, cap);
    auto [rect, v] = best_constant_rectangle(m.transpose(), value, cap);
    std::swap(rect.row_indices, rect.col_indices);
    return {rect, v};
}

Rectangle max_1listable_submatrix(const Matrix& m, std::size_t cap) {
    if (m.rows() > cap) throw std::length_error("rectangle search cap exceeded");
    if (m.rows() > 63) throw std::length_error("rectangle search limited to 63 rows");
    Rectangle best;
    std::size_t best_rows = 0;
    const std::uint64_t masks = m.is_empty() ? 0 : (std::uint64_t(1) << m.rows());
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (mask >> i & 1) rows.push_back(i);
        if (rows.size() * m.cols() < best.size()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& v = m.at(rows.front(), j);
            bool constant = true;
            for (std::size_t i : rows)
                if (m.at(i, j) != v) {
                    constant = false;
                    break;
                }
            if (constant) cols.push_back(j);
        }
        unsigned long sz = rows.size() * cols.size();
        if (sz > best.size() || (sz == best.size() && rows.size() > best_rows)) {
            best = Rectangle{std::move(rows), std::move(cols)};
            best_rows = best.row_indices.size();
        }
    }
    return best;
}

std::uint64_t derive_trial_seed(std::uint64_t seed, unsigned long trial) {
    // splitmix64 over (seed, trial) so trials are independent substreams.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::optional<Biclique> randomized_biclique_trial(const Configuration& c, std::uint64_t seed) {
    c.validate();
    const std::size_t d = c.dim;
    const std::size_t n = c.points.size();
    const std::size_t m = c.hyperplanes.size();

    IncidenceStats stats = incidence_stats(c);
    if (stats.density == 0) return std::nullopt;
    const Rat eps_d = rat_pow(stats.density, d);
    const Rat point_threshold = eps_d / 2;
    Rat hyper_threshold = eps_d / 3;
    hyper_threshold /= static_cast<unsigned long>(d);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    std::vector<std::size_t> picks(d);
    for (auto& p : picks) p = pick(rng);

    // Prefix flats S_0 = R^d, S_j = S_{j-1} cap H_j.
    std::vector<Flat> prefixes;
    prefixes.push_back(Flat::full(d));
    for (std::size_t j = 0; j < d; ++j)
        prefixes.push_back(intersect_flat_hyperplane(prefixes.back(), c.hyperplanes[picks[j]]));

    // Event G: the final intersection holds at least an eps^d/2 fraction
    // of the points.
    const Flat& final_flat = prefixes.back();
    if (final_flat.is_empty()) return std::nullopt;
    unsigned long on_final = 0;
    for (const auto& p : c.points)
        if (flat_contains_point(final_flat, p)) ++on_final;
    Rat point_fraction(static_cast<unsigned long>(on_final));
    point_fraction /= static_cast<unsigned long>(n);
    if (point_fraction < point_threshold) return std::nullopt;

    // Find the first j whose prefix is not strictly cut by H_j; accept if
    // that prefix is contained in at least an eps^d/(3d) fraction of H.
    for (std::size_t j = 0; j < d; ++j) {
        const Flat& prefix = prefixes[j];
        if (prefix.dim() == static_cast<long>(d)) continue;  // R^d lies on no hyperplane
        if (!hyperplane_contains_flat(c.hyperplanes[picks[j]], prefix)) continue;
        unsigned long containing = 0;
        for (const auto& h : c.hyperplanes)
            if (hyperplane_contains_flat(h, prefix)) ++containing;
        Rat frac(static_cast<unsigned long>(containing));
        frac /= static_cast<unsigned long>(m);
        if (frac < hyper_threshold) return std::nullopt;
        return biclique_at(c, prefix);
    }
    // Every pick cut strictly, so the final flat is the last prefix with
    // nothing left to cut it; accept it under the same fraction threshold.
    unsigned long containing = 0;
    for (const auto& h : c.hyperplanes)
        if (hyperplane_contains_flat(h, final_flat)) ++containing;
    Rat frac(static_cast<unsigned long>(containing));
    frac /= static_cast<unsigned long>(m);
    if (frac < hyper_threshold) return std::nullopt;
    return biclique_at(c, final_flat);
}

std::optional<Biclique> randomized_biclique(const Configuration& c, const SearchBudget& budget) {
    for (unsigned long t = 0; t < budget.trials; ++t) {
        auto b = randomized_biclique_trial(c, derive_trial_seed(budget.seed, t));
        if (b) return b;
    }
    return std::nullopt;
}

Biclique greedy_biclique(const Configuration& c, const SearchBudget&) {
    c.validate();
    // Start from the hyperplane with the most incident points.
    std::optional<Biclique> start;
    for (const auto& h : c.hyperplanes) {
        Biclique b = biclique_at(c, flat_of_hyperplane(h));
        if (!start || b.point_indices.size() > start->point_indices.size()) start = std::move(b);
    }
    Biclique best = *start;
    std::optional<Flat> current = best.flat;
    while (true) {
        std::optional<Biclique> step_best;
        for (const auto& h : c.hyperplanes) {
            if (hyperplane_contains_flat(h, *current)) continue;
            Flat next = intersect_flat_hyperplane(*current, h);
            if (next.is_empty()) continue;
            Biclique b = biclique_at(c, next);
            if (!step_best || better(b, *step_best)) step_best = std::move(b);
        }
        if (!step_best) break;
        if (better(*step_best, best)) best = *step_best;
        current = step_best->flat;
        if (current->dim() <= 0) break;
    }
    return best;
}

}  // namespace incgeo

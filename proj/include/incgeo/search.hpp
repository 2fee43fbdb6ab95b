#ifndef INCGEO_SEARCH_HPP
#define INCGEO_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "incgeo/configuration.hpp"

namespace incgeo {

struct SearchBudget {
    unsigned long trials = 1;
    std::uint64_t seed = 0x1CE0'5EEDULL;
    std::size_t subset_size_cap = 20;
};

// Exact maximum complete bipartite subgraph, found by enumerating candidate
// flats as intersections of hyperplane subsets with strict dimension
// decrease (at most d deep). Ties broken by more points, then by the
// lexicographically least flat.
Biclique rs_exact(const Configuration& c, std::size_t candidate_cap = 10'000'000);

// Maximum all-entries-equal rectangle, exact. Enumerates subsets of the
// smaller side; that side must have at most `cap` rows/cols.
std::pair<Rectangle, Rat> max_monochromatic_rectangle(const Matrix& m, std::size_t cap = 20);

// Same, restricted to rectangles of a fixed value.
std::pair<Rectangle, Rat> max_value_rectangle(const Matrix& m, const Rat& value,
                                              std::size_t cap = 20);

// Maximum rectangle in which every column is constant (values may differ
// across columns). Enumerates row subsets; the column set is then forced.
Rectangle max_1listable_submatrix(const Matrix& m, std::size_t cap = 20);

// One seeded trial of the randomized intersection sampler: draw d
// hyperplanes with replacement, intersect, and accept when the point- and
// hyperplane-fraction thresholds (eps^d/2 and eps^d/(3d)) are both met.
std::optional<Biclique> randomized_biclique_trial(const Configuration& c, std::uint64_t seed);

// Runs up to budget.trials independent trials (per-trial substreams derived
// from budget.seed); returns the first success, or absent.
std::optional<Biclique> randomized_biclique(const Configuration& c, const SearchBudget& budget);

// Baseline: start from the most popular hyperplane, repeatedly intersect
// with the hyperplane maximizing points-on x hyperplanes-containing, and
// keep the best intermediate.
Biclique greedy_biclique(const Configuration& c, const SearchBudget& budget = {});

std::uint64_t derive_trial_seed(std::uint64_t seed, unsigned long trial);

}  // namespace incgeo

#endif

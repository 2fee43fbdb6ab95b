#ifndef INCGEO_CONSTRUCTIONS_HPP
#define INCGEO_CONSTRUCTIONS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "incgeo/configuration.hpp"

namespace incgeo {

// Lattice configuration in R^d (d-1 a perfect square): points have
// x_1..x_{d-1} in {-1,1} with the last coordinate an integer in a band,
// hyperplanes have 0/1 normals with a_d = -1 and offset 0. The narrow band
// (half-width 2*sqrt(d-1)) is the point set P; the wide band (half-width
// d-1) is the universe U.
struct LatticeConstruction {
    std::size_t d = 0;
    long root = 0;  // sqrt(d-1)

    unsigned long num_hyperplanes() const { return 1UL << (d - 1); }
    unsigned long num_points() const { return num_hyperplanes() * (4 * root + 1); }
    unsigned long num_universe_points() const { return num_hyperplanes() * (2 * (d - 1) + 1); }

    std::vector<Hyperplane> hyperplanes() const;
    std::vector<Point> points() const;
    std::vector<Point> universe_points() const;
    Configuration config(bool universe = false) const;

    // Closed-form incidence counts (per-hyperplane counting over the
    // {-1,1}^{d-1} patterns grouped by normal weight); no enumeration.
    Int universe_incidences() const;  // equals 2^(2d-2)
    Int point_incidences() const;
};

LatticeConstruction lattice_construction(std::size_t d);

struct LatticeReport {
    std::size_t d = 0;
    bool used_pairwise = false;
    Int universe_incidences_counted;  // pairwise when available, else closed form
    Int universe_incidences_expected;
    Int point_incidences;
    bool incidence_exact = false;       // I(U,H) == 2^(2d-2)
    bool dense_subgraph_ok = false;     // I(P,H) >= (18/25) I(U,H)
    unsigned long flats_sampled = 0;
    unsigned long point_bound_violations = 0;  // points on flat > 2^j
    unsigned long hyper_bound_violations = 0;  // hyperplanes containing flat > 2^(d-j-1)
    bool containment_checked = false;   // P subset of U (only meaningful for d >= 5)
    bool containment_ok = false;
    std::string failure_witness;

    bool all_ok() const {
        return incidence_exact && dense_subgraph_ok && point_bound_violations == 0 &&
               hyper_bound_violations == 0 && (!containment_checked || containment_ok);
    }
};

// Exact verification of the incidence count, the per-flat point/hyperplane
// bounds on sampled intersection flats, and the dense-subset inequality.
LatticeReport verify_lattice_claims(const LatticeConstruction& lc, unsigned long flats_to_sample,
                                    std::uint64_t seed, bool pairwise);

// Exact count of universe points lying on a flat, by branching over the
// {-1,1} coordinates with pruning; band_half_width selects P vs U.
Int lattice_points_on_flat(const LatticeConstruction& lc, const Flat& f, long band_half_width);

// --- Set families ---------------------------------------------------------

// Pair of set families over ground set [d], d <= 63; sets are bitmasks.
struct SetFamilyPair {
    std::size_t ground_size = 0;
    std::vector<std::uint64_t> family_a;
    std::vector<std::uint64_t> family_b;
};

// A = B = all a x b Boolean matrices with exactly one 1 per column, as
// subsets of [a*b]; |A| = a^b.
SetFamilyPair grid_family(std::size_t a, std::size_t b, std::size_t cap = 1 << 20);

// Uniformly sampled set_size-subsets of [d], count per side, seeded.
SetFamilyPair random_sparse_family(std::size_t d, std::size_t set_size, std::size_t count,
                                   std::uint64_t seed);

// Exact Pr over uniform (A, B) that A and B intersect.
Rat cross_disjoint_epsilon(const SetFamilyPair& fp);

// The exact set {|A cap B|}: the minimal L for which the pair is
// L-cross-intersecting.
std::set<std::size_t> cross_intersecting_profile(const SetFamilyPair& fp);

// |A cap B| matrix over the two families.
Matrix intersection_matrix(const SetFamilyPair& fp);

// Max |R||S| / (|A||B|) over exactly cross-disjoint subfamily pairs, via
// the exhaustive zero-rectangle search on the intersection matrix.
Rat max_zero_rectangle_density(const SetFamilyPair& fp, std::size_t cap = 20);

// Configuration view of a set pair: sets of A as 0/1 points, sets of B as
// hyperplanes with 0/1 normals and offset 0 (incidence <=> disjointness).
Configuration config_from_set_pair(const SetFamilyPair& fp);

struct FranklRodlReport {
    std::size_t d = 0;
    // max |R||S| per intersection size t, over {t}-cross-intersecting pairs.
    std::vector<unsigned long> max_product_by_t;
    unsigned long max_product = 0;
    std::size_t argmax_t = 0;
    std::vector<std::uint64_t> maximizer_r, maximizer_s;
    bool bound_holds = false;  // max product <= 2^d
};

// Exhaustive search over all subfamily pairs of 2^[d] (via the maximal
// compatible S for each R); d <= 4.
FranklRodlReport frankl_rodl_check(std::size_t d);

}  // namespace incgeo

#endif

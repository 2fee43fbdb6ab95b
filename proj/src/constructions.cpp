#include "incgeo/constructions.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "incgeo/search.hpp"

namespace incgeo {

namespace {

constexpr unsigned long kMaxMaterializedPoints = 300'000;

Int binom(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int pow2(unsigned long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

// Incidences of the band construction: for a normal of weight w, the sum
// over the support is w - 2t, so a {-1,1} pattern meets the band iff
// |w - 2t| <= half_width; the off-support coordinates are free.
Int band_incidences(std::size_t d, long half_width) {
    Int total(0);
    for (unsigned long w = 0; w <= d - 1; ++w) {
        Int patterns(0);
        for (unsigned long t = 0; t <= w; ++t) {
            long sum = static_cast<long>(w) - 2 * static_cast<long>(t);
            if (sum >= -half_width && sum <= half_width) patterns += binom(w, t);
        }
        total += binom(d - 1, w) * patterns * pow2(d - 1 - w);
    }
    return total;
}

}  // namespace

LatticeConstruction lattice_construction(std::size_t d) {
    if (d < 2) throw std::invalid_argument("lattice construction needs d >= 2");
    if (d - 1 > 62) throw std::length_error("lattice construction: d too large");
    long root = 0;
    while (static_cast<std::size_t>(root * root) < d - 1) ++root;
    if (static_cast<std::size_t>(root * root) != d - 1)
        throw std::invalid_argument("lattice construction needs d-1 to be a perfect square");
    return {d, root};
}

std::vector<Hyperplane> LatticeConstruction::hyperplanes() const {
    std::vector<Hyperplane> out;
    out.reserve(num_hyperplanes());
    for (std::uint64_t mask = 0; mask < num_hyperplanes(); ++mask) {
        std::vector<Rat> normal(d);
        for (std::size_t i = 0; i + 1 < d; ++i) normal[i] = (mask >> i & 1) ? 1 : 0;
        normal[d - 1] = -1;
        out.emplace_back(std::move(normal), Rat(0));
    }
    return out;
}

namespace {

std::vector<Point> band_points(std::size_t d, unsigned long masks, long half_width,
                               unsigned long total) {
    if (total > kMaxMaterializedPoints)
        throw std::length_error("lattice construction: too many points to materialize");
    std::vector<Point> out;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < masks; ++mask)
        for (long t = -half_width; t <= half_width; ++t) {
            std::vector<Rat> coords(d);
            for (std::size_t i = 0; i + 1 < d; ++i) coords[i] = (mask >> i & 1) ? 1 : -1;
            coords[d - 1] = t;
            out.emplace_back(std::move(coords));
        }
    return out;
}

}  // namespace

std::vector<Point> LatticeConstruction::points() const {
    return band_points(d, num_hyperplanes(), 2 * root, num_points());
}

std::vector<Point> LatticeConstruction::universe_points() const {
    return band_points(d, num_hyperplanes(), static_cast<long>(d - 1), num_universe_points());
}

Configuration LatticeConstruction::config(bool universe) const {
    Configuration c;
    c.dim = d;
    c.points = universe ? universe_points() : points();
    c.hyperplanes = hyperplanes();
    return c;
}

Int LatticeConstruction::universe_incidences() const {
    return band_incidences(d, static_cast<long>(d - 1));
}

Int LatticeConstruction::point_incidences() const { return band_incidences(d, 2 * root); }

Int lattice_points_on_flat(const LatticeConstruction& lc, const Flat& f, long band_half_width) {
    if (f.ambient_dim() != lc.d) throw std::invalid_argument("ambient dimension mismatch");
    struct Rec {
        const LatticeConstruction& lc;
        long band;
        Int operator()(const Flat& g, std::size_t next) const {
            if (g.is_empty()) return Int(0);
            if (next + 1 == lc.d) {
                // Only the last coordinate is left; it ranges over the
                // integer band.
                if (g.dim() == 1) return Int(2 * band + 1);
                Rat x = g.particular_point().coords[lc.d - 1];
                if (!rat_is_integer(x)) return Int(0);
                Int v = x.get_num();
                return (v >= -band && v <= band) ? Int(1) : Int(0);
            }
            std::vector<Rat> n(lc.d, Rat(0));
            n[next] = 1;
            Int total = (*this)(intersect_flat_hyperplane(g, Hyperplane(n, Rat(1))), next + 1);
            total += (*this)(intersect_flat_hyperplane(g, Hyperplane(n, Rat(-1))), next + 1);
            return total;
        }
    };
    return Rec{lc, band_half_width}(f, 0);
}

LatticeReport verify_lattice_claims(const LatticeConstruction& lc, unsigned long flats_to_sample,
                                    std::uint64_t seed, bool pairwise) {
    LatticeReport rep;
    rep.d = lc.d;
    rep.universe_incidences_expected = pow2(2 * lc.d - 2);
    rep.point_incidences = lc.point_incidences();

    std::vector<Hyperplane> hs = lc.hyperplanes();

    if (pairwise) {
        Configuration cu = lc.config(true);
        IncidenceStats stats = incidence_stats(cu);
        rep.universe_incidences_counted = static_cast<unsigned long>(stats.incidences);
        rep.used_pairwise = true;
        if (rep.universe_incidences_counted != lc.universe_incidences()) {
            rep.failure_witness = "pairwise and closed-form incidence counts disagree";
            return rep;
        }
    } else {
        rep.universe_incidences_counted = lc.universe_incidences();
    }
    rep.incidence_exact = rep.universe_incidences_counted == rep.universe_incidences_expected;

    // I(P,H) >= (18/25) I(U,H); 18/25 is a rational lower bound for the
    // irrational constant 1 - 2/e^2 ~ 0.7293.
    rep.dense_subgraph_ok = 25 * rep.point_incidences >= 18 * rep.universe_incidences_expected;

    rep.containment_checked = lc.d >= 5;
    rep.containment_ok = 2 * lc.root <= static_cast<long>(lc.d - 1);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_count(1, lc.d);
    std::uniform_int_distribution<std::size_t> pick_h(0, hs.size() - 1);
    for (unsigned long s = 0; s < flats_to_sample; ++s) {
        Flat f = Flat::full(lc.d);
        std::size_t k = pick_count(rng);
        for (std::size_t i = 0; i < k && !f.is_empty(); ++i)
            f = intersect_flat_hyperplane(f, hs[pick_h(rng)]);
        if (f.is_empty()) continue;
        ++rep.flats_sampled;
        long j = f.dim();

        Int on_flat = lattice_points_on_flat(lc, f, static_cast<long>(lc.d - 1));
        if (on_flat > pow2(static_cast<unsigned long>(j))) {
            ++rep.point_bound_violations;
            if (rep.failure_witness.empty())
                rep.failure_witness = "point bound violated on a sampled flat";
        }

        unsigned long containing = 0;
        for (const auto& h : hs)
            if (hyperplane_contains_flat(h, f)) ++containing;
        if (Int(containing) > pow2(static_cast<unsigned long>(static_cast<long>(lc.d) - j - 1))) {
            ++rep.hyper_bound_violations;
            if (rep.failure_witness.empty())
                rep.failure_witness = "hyperplane bound violated on a sampled flat";
        }
    }
    return rep;
}

// --- Set families ---------------------------------------------------------

SetFamilyPair grid_family(std::size_t a, std::size_t b, std::size_t cap) {
    if (a < 1 || b < 1) throw std::invalid_argument("grid family needs a, b >= 1");
    if (a * b > 63) throw std::length_error("grid family ground set exceeds 63");
    double size = 1;
    for (std::size_t i = 0; i < b; ++i) size *= static_cast<double>(a);
    if (size > static_cast<double>(cap)) throw std::length_error("grid family size exceeds cap");

    SetFamilyPair fp;
    fp.ground_size = a * b;
    // One chosen row per column; element (i, j) of [a] x [b] is bit i*b + j.
    std::vector<std::size_t> choice(b, 0);
    while (true) {
        std::uint64_t mask = 0;
        for (std::size_t j = 0; j < b; ++j) mask |= std::uint64_t(1) << (choice[j] * b + j);
        fp.family_a.push_back(mask);
        std::size_t j = 0;
        while (j < b && ++choice[j] == a) choice[j++] = 0;
        if (j == b) break;
    }
    fp.family_b = fp.family_a;
    return fp;
}

SetFamilyPair random_sparse_family(std::size_t d, std::size_t set_size, std::size_t count,
                                   std::uint64_t seed) {
    if (d > 63 || set_size > d) throw std::invalid_argument("bad sparse family parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> elems(d);
    for (std::size_t i = 0; i < d; ++i) elems[i] = i;
    SetFamilyPair fp;
    fp.ground_size = d;
    for (std::size_t k = 0; k < count; ++k) {
        std::shuffle(elems.begin(), elems.end(), rng);
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < set_size; ++i) mask |= std::uint64_t(1) << elems[i];
        fp.family_a.push_back(mask);
    }
    fp.family_b = fp.family_a;
    return fp;
}

Rat cross_disjoint_epsilon(const SetFamilyPair& fp) {
    unsigned long hits = 0;
    for (std::uint64_t a : fp.family_a)
        for (std::uint64_t b : fp.family_b)
            if (a & b) ++hits;
    Rat out(hits);
    out /= static_cast<unsigned long>(fp.family_a.size() * fp.family_b.size());
    return out;
}

std::set<std::size_t> cross_intersecting_profile(const SetFamilyPair& fp) {
    std::set<std::size_t> out;
    for (std::uint64_t a : fp.family_a)
        for (std::uint64_t b : fp.family_b) out.insert(std::popcount(a & b));
    return out;
}

Matrix intersection_matrix(const SetFamilyPair& fp) {
    Matrix m(fp.family_a.size(), fp.family_b.size());
    for (std::size_t i = 0; i < fp.family_a.size(); ++i)
        for (std::size_t j = 0; j < fp.family_b.size(); ++j)
            m.at(i, j) = std::popcount(fp.family_a[i] & fp.family_b[j]);
    return m;
}

Rat max_zero_rectangle_density(const SetFamilyPair& fp, std::size_t cap) {
    Matrix m = intersection_matrix(fp);
    auto [rect, value] = max_value_rectangle(m, Rat(0), cap);
    Rat out(rect.size());
    out /= static_cast<unsigned long>(fp.family_a.size() * fp.family_b.size());
    return out;
}

Configuration config_from_set_pair(const SetFamilyPair& fp) {
    Configuration c;
    c.dim = fp.ground_size;
    for (std::uint64_t a : fp.family_a) {
        std::vector<Rat> coords(fp.ground_size);
        for (std::size_t i = 0; i < fp.ground_size; ++i) coords[i] = (a >> i & 1) ? 1 : 0;
        c.points.emplace_back(std::move(coords));
    }
    for (std::uint64_t b : fp.family_b) {
        if (b == 0) throw std::invalid_argument("empty set has no hyperplane in the set view");
        std::vector<Rat> normal(fp.ground_size);
        for (std::size_t i = 0; i < fp.ground_size; ++i) normal[i] = (b >> i & 1) ? 1 : 0;
        c.hyperplanes.emplace_back(std::move(normal), Rat(0));
    }
    return c;
}

FranklRodlReport frankl_rodl_check(std::size_t d) {
    if (d > 4) throw std::length_error("frankl_rodl_check supports d <= 4");
    FranklRodlReport rep;
    rep.d = d;
    const std::size_t n_sets = std::size_t(1) << d;  // subsets of [d]
    rep.max_product_by_t.assign(d + 1, 0);

    for (std::size_t t = 0; t <= d; ++t) {
        // compat[A] = bitmask over sets B with |A cap B| = t.
        std::vector<std::uint64_t> compat(n_sets, 0);
        for (std::size_t a = 0; a < n_sets; ++a)
            for (std::size_t b = 0; b < n_sets; ++b)
                if (std::popcount(a & b) == static_cast<int>(t)) compat[a] |= std::uint64_t(1) << b;

        // For each R, the maximal compatible S is forced, so scanning all
        // nonempty R is exhaustive.
        for (std::uint64_t r_mask = 1; r_mask < (std::uint64_t(1) << n_sets); ++r_mask) {
            std::uint64_t s_mask = ~std::uint64_t(0) >> (64 - n_sets);
            std::uint64_t rm = r_mask;
            while (rm) {
                std::size_t a = static_cast<std::size_t>(std::countr_zero(rm));
                rm &= rm - 1;
                s_mask &= compat[a];
            }
            unsigned long product = static_cast<unsigned long>(std::popcount(r_mask)) *
                                    static_cast<unsigned long>(std::popcount(s_mask));
            if (product > rep.max_product_by_t[t]) rep.max_product_by_t[t] = product;
            if (product > rep.max_product) {
                rep.max_product = product;
                rep.argmax_t = t;
                rep.maximizer_r.clear();
                rep.maximizer_s.clear();
                for (std::size_t a = 0; a < n_sets; ++a)
                    if (r_mask >> a & 1) rep.maximizer_r.push_back(a);
                for (std::size_t b = 0; b < n_sets; ++b)
                    if (s_mask >> b & 1) rep.maximizer_s.push_back(b);
            }
        }
    }
    rep.bound_holds = rep.max_product <= (1UL << d);
    return rep;
}

}  // namespace incgeo

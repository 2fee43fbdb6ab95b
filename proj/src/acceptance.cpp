#include "incgeo/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "incgeo/constructions.hpp"
#include "incgeo/reductions.hpp"
#include "incgeo/search.hpp"

namespace incgeo {

namespace {

constexpr std::uint64_t kSuiteSeed = 0xACCE9'7A7CEULL;

Matrix random_low_rank(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t r,
                       long lo, long hi) {
    std::uniform_int_distribution<long> entry(lo, hi);
    Matrix u(n, r), v(r, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) u.at(i, j) = entry(rng);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j) v.at(i, j) = entry(rng);
    return u * v;
}

// Rank <= base_rows, every column has at most base_rows distinct entries.
Matrix random_listable(std::mt19937_64& rng, std::size_t n, std::size_t m,
                       std::size_t base_rows) {
    std::uniform_int_distribution<long> entry(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, base_rows - 1);
    const std::size_t inner = 4;
    Matrix base(base_rows, inner), v(inner, m), u(n, inner);
    for (std::size_t i = 0; i < base_rows; ++i)
        for (std::size_t j = 0; j < inner; ++j) base.at(i, j) = entry(rng);
    for (std::size_t i = 0; i < inner; ++i)
        for (std::size_t j = 0; j < m; ++j) v.at(i, j) = entry(rng);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = pick(rng);
        for (std::size_t j = 0; j < inner; ++j) u.at(i, j) = base.at(src, j);
    }
    return u * v;
}

Int pow2i(unsigned long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

CriterionResult fail(int id, std::string name, std::string detail) {
    return {id, std::move(name), false, std::move(detail)};
}

CriterionResult pass(int id, std::string name, std::string detail) {
    return {id, std::move(name), true, std::move(detail)};
}

std::vector<std::size_t> lattice_dims(std::size_t max_d) {
    std::vector<std::size_t> out;
    for (std::size_t d : {5UL, 10UL, 17UL})
        if (d <= max_d) out.push_back(d);
    return out;
}

CriterionResult criterion1(const AcceptanceOptions& opts) {
    const std::string name = "lattice exact incidence count (d = 5, 10, 17)";
    std::ostringstream detail;
    for (std::size_t d : lattice_dims(std::min<std::size_t>(opts.max_d, 10))) {
        LatticeConstruction lc = lattice_construction(d);
        LatticeReport rep = verify_lattice_claims(lc, 0, kSuiteSeed, true);
        if (!rep.incidence_exact || !rep.failure_witness.empty())
            return fail(1, name, "d=" + std::to_string(d) + ": " + rep.failure_witness);
        detail << "d=" << d << " pairwise I(U,H)=" << rep.universe_incidences_counted.get_str()
               << " ";
    }
    if (opts.max_d >= 17) {
        LatticeConstruction lc17 = lattice_construction(17);
        Int counted = lc17.universe_incidences();
        if (counted != pow2i(32))
            return fail(1, name, "d=17 closed-form count " + counted.get_str() + " != 2^32");
        detail << "d=17 closed-form I(U,H)=" << counted.get_str() << " = 2^32";
    }
    return pass(1, name, detail.str());
}

CriterionResult criterion2(const AcceptanceOptions& opts) {
    const std::string name = "lattice subgraph bounds (rs at d = 5; sampled flats at d = 5, 10)";
    LatticeConstruction lc5 = lattice_construction(5);
    Biclique best = rs_exact(lc5.config(true));
    if (best.edges > 16)
        return fail(2, name, "rs_exact = " + std::to_string(best.edges) + " > 16 at d=5");
    std::ostringstream detail;
    detail << "rs_exact(d=5) = " << best.edges << " <= 16";
    for (std::size_t d : lattice_dims(std::min<std::size_t>(opts.max_d, 10))) {
        LatticeConstruction lc = lattice_construction(d);
        LatticeReport rep = verify_lattice_claims(lc, 1000, kSuiteSeed + d, false);
        if (rep.point_bound_violations || rep.hyper_bound_violations)
            return fail(2, name, "d=" + std::to_string(d) + ": " + rep.failure_witness);
        detail << "; d=" << d << " flats=" << rep.flats_sampled << " violations=0";
    }
    return pass(2, name, detail.str());
}

CriterionResult criterion3(const AcceptanceOptions& opts) {
    const std::string name = "lattice dense subset: I(P,H) >= (18/25) I(U,H) (d = 5, 10, 17)";
    std::ostringstream detail;
    for (std::size_t d : lattice_dims(opts.max_d)) {
        LatticeConstruction lc = lattice_construction(d);
        Int ip = lc.point_incidences();
        Int iu = lc.universe_incidences();
        if (25 * ip < 18 * iu)
            return fail(3, name,
                        "d=" + std::to_string(d) + ": I(P,H)=" + ip.get_str() +
                            " below (18/25) I(U,H), I(U,H)=" + iu.get_str());
        detail << "d=" << d << " I(P,H)=" << ip.get_str() << " I(U,H)=" << iu.get_str() << "; ";
    }
    return pass(3, name, detail.str());
}

// Density-1/2 configuration in R^3: hyperplanes x_i = 0 and x_i = 1, the
// Boolean cube three times over as points. n = 24 > 2 / eps^3 = 16.
Configuration sampler_test_config() {
    Configuration c;
    c.dim = 3;
    for (int rep = 0; rep < 3; ++rep)
        for (long mask = 0; mask < 8; ++mask)
            c.points.push_back(Point{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
    for (std::size_t i = 0; i < 3; ++i)
        for (long b : {0L, 1L}) {
            std::vector<Rat> n(3, Rat(0));
            n[i] = 1;
            c.hyperplanes.emplace_back(std::move(n), Rat(b));
        }
    return c;
}

CriterionResult criterion4() {
    const std::string name = "randomized sampler success rate and edge bound (d = 3)";
    Configuration c = sampler_test_config();
    IncidenceStats stats = incidence_stats(c);
    const Rat eps = stats.density;
    if (eps < Rat(1, 2)) return fail(4, name, "test configuration density below 1/2");
    const Rat eps_d = rat_pow(eps, 3);
    Rat two_over;
    two_over = 2 / eps_d;
    if (Rat(static_cast<unsigned long>(c.points.size())) <= two_over)
        return fail(4, name, "test configuration too small for the rate bound");

    const unsigned long trials = 10'000;
    const std::size_t mn = c.points.size() * c.hyperplanes.size();
    Rat edge_bound = rat_pow(eps, 6) / 18;  // eps^(2d) / (6d) * mn, d = 3
    edge_bound *= static_cast<unsigned long>(mn);
    unsigned long successes = 0;
    for (unsigned long t = 0; t < trials; ++t) {
        auto b = randomized_biclique_trial(c, derive_trial_seed(kSuiteSeed, t));
        if (!b) continue;
        ++successes;
        if (!is_valid_biclique(c, *b))
            return fail(4, name, "trial " + std::to_string(t) + " produced an invalid biclique");
        if (Rat(b->edges) < edge_bound)
            return fail(4, name,
                        "trial " + std::to_string(t) + " edges " + std::to_string(b->edges) +
                            " below eps^(2d)/(6d) * mn = " + rat_to_string(edge_bound));
    }
    // The 3-sigma slack is statistical display math, not an exact decision
    // about the combinatorics; doubles are fine here.
    const double p = eps_d.get_d() / 6.0;
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    const double rate = static_cast<double>(successes) / static_cast<double>(trials);
    std::ostringstream detail;
    detail << "successes=" << successes << "/" << trials << " rate=" << rate
           << " threshold=" << p - 3 * sigma;
    if (rate < p - 3 * sigma) return fail(4, name, detail.str());
    return pass(4, name, detail.str());
}

CriterionResult criterion5() {
    const std::string name = "listability reduction pipeline on 100 random 3-listable matrices";
    std::mt19937_64 rng(kSuiteSeed + 5);
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    ListableOracle oracle = [](const Matrix& b) { return max_1listable_submatrix(b); };
    unsigned long steps_checked = 0;
    for (int inst = 0; inst < 100; ++inst) {
        Matrix m = random_listable(rng, dim(rng), dim(rng), 3);
        if (listability(m) > 3) return fail(5, name, "generator produced a non-3-listable matrix");

        auto [normalized, record] = normalize_columns(m);
        if (!normalized.is_empty() && listability(normalized) > 1) {
            std::size_t r = rank(normalized);
            Matrix stepped = listability_step(normalized);
            if (listability(stepped) > 2)
                return fail(5, name, "instance " + std::to_string(inst) + ": step not 2-listable");
            if (rank(stepped) > r * r + r)
                return fail(5, name,
                            "instance " + std::to_string(inst) + ": step rank " +
                                std::to_string(rank(stepped)) + " > d^2+d with d=" +
                                std::to_string(r));
            ++steps_checked;
        }

        Rectangle rect = find_1listable_recursive(m, oracle);
        if (rect.row_indices.empty() || rect.col_indices.empty())
            return fail(5, name, "instance " + std::to_string(inst) + ": empty rectangle");
        if (!is_1listable_rectangle(m, rect))
            return fail(5, name,
                        "instance " + std::to_string(inst) + ": rectangle not 1-listable");
    }
    return pass(5, name,
                "100 instances; listability_step rank/listability bounds exact on " +
                    std::to_string(steps_checked) + " non-degenerate steps");
}

CriterionResult criterion6() {
    const std::string name = "poly-rank certificates for 100 random (M, p)";
    std::mt19937_64 rng(kSuiteSeed + 6);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg_mask(1, 7);  // nonempty subset of {0,1,2}
    for (int inst = 0; inst < 100; ++inst) {
        Matrix m = random_low_rank(rng, dim(rng), dim(rng), 3, -2, 2);
        SupportPolynomial p;
        int mask = deg_mask(rng);
        for (unsigned d = 0; d <= 2; ++d)
            if (mask >> d & 1) {
                int c = coeff(rng);
                if (c == 0) c = 1;
                p.set_coefficient(d, Rat(c));
            }

        PolyRankCertificate cert = poly_rank_certificate(m, p);
        Matrix image = entrywise_poly(m, p);
        if (cert.factorization.left * cert.factorization.right != image)
            return fail(6, name, "instance " + std::to_string(inst) + ": product mismatch");
        std::size_t r = rank(m), expected_bound = 0, pw = 1;
        std::size_t next_deg = 0;
        for (unsigned d : p.support()) {
            while (next_deg < d) {
                pw *= r;
                ++next_deg;
            }
            expected_bound += pw;
        }
        if (cert.bound != expected_bound)
            return fail(6, name, "instance " + std::to_string(inst) + ": bound mismatch");
        if (rank(image) > cert.bound)
            return fail(6, name,
                        "instance " + std::to_string(inst) + ": rank " +
                            std::to_string(rank(image)) + " exceeds bound " +
                            std::to_string(cert.bound));
    }
    return pass(6, name, "100 instances, exact product equality and rank bounds");
}

CriterionResult criterion7() {
    const std::string name = "grid family densities for (a,b) in {(2,2),(2,3),(3,2),(4,2)}";
    std::ostringstream detail;
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
        SetFamilyPair fp = grid_family(a, b);
        Rat delta = 1 - cross_disjoint_epsilon(fp);
        Rat expected = rat_pow(Rat(static_cast<unsigned long>(a - 1),
                                   static_cast<unsigned long>(a)),
                               static_cast<unsigned long>(b));
        std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (delta != expected)
            return fail(7, name, tag + ": delta " + rat_to_string(delta) + " != " +
                                     rat_to_string(expected));
        Configuration c = config_from_set_pair(fp);
        if (incidence_stats(c).density != delta)
            return fail(7, name, tag + ": configuration incidence density != delta");
        detail << tag << " delta=" << rat_to_string(delta);
        if (a % 2 == 0) {
            Rat zr = max_zero_rectangle_density(fp);
            Rat zr_expected(1UL, 1UL << (2 * b));
            if (zr != zr_expected)
                return fail(7, name, tag + ": zero-rectangle density " + rat_to_string(zr) +
                                         " != " + rat_to_string(zr_expected));
            detail << " zero-rect=" << rat_to_string(zr);
        }
        detail << "; ";
    }
    return pass(7, name, detail.str());
}

CriterionResult criterion8() {
    const std::string name = "cross-intersecting product bound, exhaustive at d = 2, 3";
    std::ostringstream detail;
    for (std::size_t d : {2UL, 3UL}) {
        FranklRodlReport rep = frankl_rodl_check(d);
        if (!rep.bound_holds || rep.max_product != (1UL << d))
            return fail(8, name,
                        "d=" + std::to_string(d) + ": max product " +
                            std::to_string(rep.max_product) + " != 2^d");
        detail << "d=" << d << " max=" << rep.max_product << " at t=" << rep.argmax_t << "; ";
    }
    return pass(8, name, detail.str());
}

CriterionResult criterion9() {
    const std::string name = "protocol trees on 50 random Boolean matrices";
    std::mt19937_64 rng(kSuiteSeed + 9);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::uniform_int_distribution<int> bit(0, 1);
    RectangleFinder finder = [](const Matrix& b) { return max_monochromatic_rectangle(b); };
    std::size_t max_depth = 0;
    for (int inst = 0; inst < 50; ++inst) {
        Matrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = bit(rng);
        ProtocolTree tree = build_protocol(m, finder);
        std::string why;
        if (!validate_protocol(m, tree, &why))
            return fail(9, name, "instance " + std::to_string(inst) + ": " + why);
        std::size_t r = rank(m);
        if ((std::size_t(1) << tree.depth()) < r)
            return fail(9, name,
                        "instance " + std::to_string(inst) + ": depth " +
                            std::to_string(tree.depth()) + " below log2(rank), rank " +
                            std::to_string(r));
        max_depth = std::max(max_depth, tree.depth());
    }
    return pass(9, name, "50 instances validated; max depth " + std::to_string(max_depth));
}

}  // namespace

std::vector<int> criteria_for_scope(const std::string& scope) {
    if (scope == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
    if (scope == "lattice") return {1, 2, 3};
    if (scope == "sampler") return {4};
    if (scope == "reduction") return {5, 6};
    if (scope == "grid") return {7, 8};
    if (scope == "protocol") return {9};
    throw std::invalid_argument("unknown scope: " + scope);
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
    switch (id) {
        case 1: return criterion1(opts);
        case 2: return criterion2(opts);
        case 3: return criterion3(opts);
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        default: throw std::invalid_argument("unknown criterion id");
    }
}

std::vector<CriterionResult> run_acceptance(const std::string& scope,
                                            const AcceptanceOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id : criteria_for_scope(scope)) out.push_back(run_criterion(id, opts));
    return out;
}

}  // namespace incgeo

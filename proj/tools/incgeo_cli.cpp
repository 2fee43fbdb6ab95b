#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "incgeo/acceptance.hpp"
#include "incgeo/constructions.hpp"
#include "incgeo/json_io.hpp"
#include "incgeo/reductions.hpp"
#include "incgeo/search.hpp"

namespace {

using incgeo::json;
using incgeo::Rat;

constexpr std::uint64_t kDefaultSeed = 0x1CE0'5EEDULL;

struct Options {
    std::size_t d = 5;
    std::size_t a = 2;
    std::size_t b = 2;
    std::size_t k = 2;
    unsigned long trials = 100;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
    std::size_t cap = 20;
    std::size_t flats = 200;
    std::size_t max_d = 17;
    std::string scope = "all";
    bool universe = false;
    bool dot = false;
};

json read_stdin_json() {
    return json::parse(std::cin);
}

// Consumers accept either a bare payload or a RunReport wrapper.
json unwrap(json j) {
    if (j.is_object() && j.contains("command") && j.contains("results")) return j["results"];
    return j;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

// RunReport envelope; witnesses only survive in json format.
int emit(const Options& opt, const std::string& command, json inputs, json results,
         json witnesses, double wall_seconds, bool ok) {
    json report{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"witnesses", std::move(witnesses)},
                {"seed", opt.seed},
                {"wall_time", wall_seconds}};
    if (opt.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(report["results"], "", rows);
        if (opt.format == "csv") {
            std::cout << "key,value\n";
            for (const auto& [key, value] : rows) {
                std::string quoted = value;
                if (quoted.find(',') != std::string::npos) quoted = "\"" + quoted + "\"";
                std::cout << key << "," << quoted << "\n";
            }
        } else {
            std::size_t width = 0;
            for (const auto& [key, value] : rows) width = std::max(width, key.size());
            for (const auto& [key, value] : rows)
                std::cout << key << std::string(width - key.size(), ' ') << "  " << value << "\n";
        }
    }
    return ok ? 0 : 1;
}

incgeo::Matrix read_matrix() {
    json j = unwrap(read_stdin_json());
    if (j.contains("matrix")) j = j["matrix"];
    return incgeo::matrix_from_json(j);
}

incgeo::Configuration read_configuration(std::optional<incgeo::ParallelPartition>* pp = nullptr) {
    json j = unwrap(read_stdin_json());
    if (j.contains("configuration")) j = j["configuration"];
    if (j.contains("dim")) return incgeo::configuration_from_json(j, pp);
    if (j.contains("ground_size"))
        return incgeo::config_from_set_pair(incgeo::set_family_pair_from_json(j));
    if (j.contains("rows")) {
        incgeo::ConResult con = incgeo::con_of(incgeo::matrix_from_json(j));
        if (pp) *pp = con.partition;
        return con.config;
    }
    throw std::invalid_argument("stdin is not a configuration, set family, or matrix");
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_gen_lattice(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::LatticeConstruction lc = incgeo::lattice_construction(opt.d);
    json results{{"d", lc.d},
                 {"num_hyperplanes", lc.num_hyperplanes()},
                 {"num_points", lc.num_points()},
                 {"num_universe_points", lc.num_universe_points()},
                 {"universe_incidences", lc.universe_incidences().get_str()},
                 {"point_incidences", lc.point_incidences().get_str()},
                 {"configuration", incgeo::configuration_to_json(lc.config(opt.universe))}};
    return emit(opt, "gen lattice", json{{"d", opt.d}, {"universe", opt.universe}},
                std::move(results), json::object(), elapsed(t0), true);
}

int cmd_gen_grid(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::SetFamilyPair fp = incgeo::grid_family(opt.a, opt.b);
    Rat delta = 1 - incgeo::cross_disjoint_epsilon(fp);
    json results{{"a", opt.a},
                 {"b", opt.b},
                 {"family_size", fp.family_a.size()},
                 {"delta", incgeo::rat_with_decimal(delta)},
                 {"set_family", incgeo::set_family_pair_to_json(fp)}};
    return emit(opt, "gen grid", json{{"a", opt.a}, {"b", opt.b}}, std::move(results),
                json::object(), elapsed(t0), true);
}

int cmd_gen_con(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::Matrix m = read_matrix();
    incgeo::ConResult con = incgeo::con_of(m);
    json blocks = json::array();
    for (const auto& bc : con.block_columns) blocks.push_back(bc);
    json results{{"rank", incgeo::rank(m)},
                 {"listability", incgeo::listability(m)},
                 {"configuration", incgeo::configuration_to_json(con.config, &con.partition)},
                 {"block_source_columns", std::move(blocks)}};
    return emit(opt, "gen con", json{{"rows", m.rows()}, {"cols", m.cols()}}, std::move(results),
                json::object(), elapsed(t0), true);
}

int cmd_stats(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json j = unwrap(read_stdin_json());
    json results;
    if (j.contains("set_family") || j.contains("ground_size")) {
        incgeo::SetFamilyPair fp = incgeo::set_family_pair_from_json(
            j.contains("set_family") ? j["set_family"] : j);
        Rat eps = incgeo::cross_disjoint_epsilon(fp);
        json profile = json::array();
        for (std::size_t s : incgeo::cross_intersecting_profile(fp)) profile.push_back(s);
        results["ground_size"] = fp.ground_size;
        results["family_sizes"] = json::array({fp.family_a.size(), fp.family_b.size()});
        results["delta"] = incgeo::rat_with_decimal(1 - eps);
        results["cross_disjoint_epsilon"] = incgeo::rat_with_decimal(eps);
        results["intersection_profile"] = std::move(profile);
    } else if (j.contains("configuration") || j.contains("dim")) {
        incgeo::Configuration c = incgeo::configuration_from_json(
            j.contains("configuration") ? j["configuration"] : j);
        c.validate();
        incgeo::IncidenceStats stats = incgeo::incidence_stats(c);
        results["dim"] = c.dim;
        results["num_points"] = c.points.size();
        results["num_hyperplanes"] = c.hyperplanes.size();
        results["incidences"] = stats.incidences;
        results["density"] = incgeo::rat_with_decimal(stats.density);
        auto pp = incgeo::find_parallel_partition(c, opt.k);
        results["parallel_partition_k"] = opt.k;
        results["parallel_partition_found"] = pp.has_value();
        if (pp) results["parallel_partition_blocks"] = pp->blocks.size();
    } else if (j.contains("matrix") || j.contains("rows")) {
        incgeo::Matrix m =
            incgeo::matrix_from_json(j.contains("matrix") ? j["matrix"] : j);
        results["rows"] = m.rows();
        results["cols"] = m.cols();
        results["rank"] = incgeo::rank(m);
        results["listability"] = incgeo::listability(m);
        results["arity"] = incgeo::arity(m);
    } else {
        throw std::invalid_argument("stdin is not a configuration, set family, or matrix");
    }
    return emit(opt, "stats", json::object(), std::move(results), json::object(), elapsed(t0),
                true);
}

int cmd_rs_exact(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::Configuration c = read_configuration();
    incgeo::Biclique best = incgeo::rs_exact(c);
    if (!incgeo::is_valid_biclique(c, best))
        throw std::logic_error("rs_exact produced an invalid witness");
    json results{{"rs", best.edges},
                 {"points", best.point_indices.size()},
                 {"hyperplanes", best.hyperplane_indices.size()}};
    return emit(opt, "rs-exact", json::object(), std::move(results),
                json{{"biclique", incgeo::biclique_to_json(best)}}, elapsed(t0), true);
}

int cmd_rect_max(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::Matrix m = read_matrix();
    auto [rect, value] = incgeo::max_monochromatic_rectangle(m, opt.cap);
    json results{{"size", rect.size()}, {"value", incgeo::rat_to_json(value)}};
    return emit(opt, "rect-max", json{{"cap", opt.cap}}, std::move(results),
                json{{"rectangle", incgeo::rectangle_to_json(rect)}}, elapsed(t0), true);
}

int cmd_biclique_sample(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::Configuration c = read_configuration();
    incgeo::SearchBudget budget;
    budget.trials = opt.trials;
    budget.seed = opt.seed;
    auto best = incgeo::randomized_biclique(c, budget);
    json witnesses = json::object();
    json results{{"trials", opt.trials}, {"success", best.has_value()}};
    if (best) {
        if (!incgeo::is_valid_biclique(c, *best))
            throw std::logic_error("sampler produced an invalid witness");
        results["edges"] = best->edges;
        witnesses["biclique"] = incgeo::biclique_to_json(*best);
    }
    return emit(opt, "biclique-sample", json{{"trials", opt.trials}, {"seed", opt.seed}},
                std::move(results), std::move(witnesses), elapsed(t0), true);
}

int cmd_reduce(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::Matrix m = read_matrix();
    incgeo::ListableOracle oracle = [&](const incgeo::Matrix& b) {
        return incgeo::max_1listable_submatrix(b, opt.cap);
    };
    incgeo::Rectangle rect = incgeo::find_1listable_recursive(m, oracle);
    if (!incgeo::is_1listable_rectangle(m, rect))
        throw std::logic_error("reduction produced an invalid rectangle");
    json results{{"rows", m.rows()},
                 {"cols", m.cols()},
                 {"rank", incgeo::rank(m)},
                 {"listability", incgeo::listability(m)},
                 {"rectangle_size", rect.size()}};
    return emit(opt, "reduce", json{{"cap", opt.cap}}, std::move(results),
                json{{"rectangle", incgeo::rectangle_to_json(rect)}}, elapsed(t0), true);
}

int cmd_protocol(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::Matrix m = read_matrix();
    incgeo::RectangleFinder finder = [&](const incgeo::Matrix& b) {
        return incgeo::max_monochromatic_rectangle(b, opt.cap);
    };
    incgeo::ProtocolTree tree = incgeo::build_protocol(m, finder);
    std::string why;
    if (!incgeo::validate_protocol(m, tree, &why))
        throw std::logic_error("protocol failed validation: " + why);
    if (opt.dot) {
        std::cout << incgeo::protocol_to_dot(tree);
        return 0;
    }
    json results{{"rows", m.rows()},
                 {"cols", m.cols()},
                 {"rank", incgeo::rank(m)},
                 {"depth", tree.depth()},
                 {"leaves", tree.leaves().size()}};
    return emit(opt, "protocol", json{{"cap", opt.cap}}, std::move(results),
                json{{"protocol", incgeo::protocol_to_json(tree)}}, elapsed(t0), true);
}

int cmd_verify_lattice(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::LatticeConstruction lc = incgeo::lattice_construction(opt.d);
    const bool pairwise = opt.d <= 10;
    incgeo::LatticeReport rep = incgeo::verify_lattice_claims(lc, opt.flats, opt.seed, pairwise);
    json results{{"d", lc.d},
                 {"pairwise", rep.used_pairwise},
                 {"universe_incidences", rep.universe_incidences_counted.get_str()},
                 {"universe_incidences_expected", rep.universe_incidences_expected.get_str()},
                 {"point_incidences", rep.point_incidences.get_str()},
                 {"incidence_exact", rep.incidence_exact},
                 {"dense_subgraph_ok", rep.dense_subgraph_ok},
                 {"flats_sampled", rep.flats_sampled},
                 {"point_bound_violations", rep.point_bound_violations},
                 {"hyper_bound_violations", rep.hyper_bound_violations},
                 {"containment_checked", rep.containment_checked},
                 {"containment_ok", rep.containment_ok}};
    if (!rep.failure_witness.empty()) results["failure"] = rep.failure_witness;
    json witnesses = json::object();
    if (opt.d <= 5) {
        incgeo::Biclique best = incgeo::rs_exact(lc.config(true));
        results["rs_exact"] = best.edges;
        results["rs_bound"] = 1UL << (opt.d - 1);
        witnesses["rs_biclique"] = incgeo::biclique_to_json(best);
        if (best.edges > (1UL << (opt.d - 1))) rep.failure_witness = "rs bound violated";
    }
    bool ok = rep.all_ok() && rep.failure_witness.empty();
    results["ok"] = ok;
    return emit(opt, "verify lattice",
                json{{"d", opt.d}, {"flats", opt.flats}, {"seed", opt.seed}}, std::move(results),
                std::move(witnesses), elapsed(t0), ok);
}

int cmd_verify_grid(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::SetFamilyPair fp = incgeo::grid_family(opt.a, opt.b);
    Rat delta = 1 - incgeo::cross_disjoint_epsilon(fp);
    Rat expected = incgeo::rat_pow(
        Rat(static_cast<unsigned long>(opt.a - 1), static_cast<unsigned long>(opt.a)),
        static_cast<unsigned long>(opt.b));
    incgeo::Configuration c = incgeo::config_from_set_pair(fp);
    Rat density = incgeo::incidence_stats(c).density;
    bool ok = delta == expected && density == delta;
    json results{{"a", opt.a},
                 {"b", opt.b},
                 {"delta", incgeo::rat_with_decimal(delta)},
                 {"delta_expected", incgeo::rat_with_decimal(expected)},
                 {"configuration_density_matches", density == delta}};
    if (opt.a % 2 == 0) {
        Rat zr = incgeo::max_zero_rectangle_density(fp, opt.cap);
        Rat zr_expected(1UL, 1UL << (2 * opt.b));
        results["zero_rectangle_density"] = incgeo::rat_with_decimal(zr);
        results["zero_rectangle_density_expected"] = incgeo::rat_with_decimal(zr_expected);
        ok = ok && zr == zr_expected;
    }
    results["ok"] = ok;
    return emit(opt, "verify grid", json{{"a", opt.a}, {"b", opt.b}}, std::move(results),
                json::object(), elapsed(t0), ok);
}

int cmd_verify_frankl_rodl(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::FranklRodlReport rep = incgeo::frankl_rodl_check(opt.d);
    json by_t = json::array();
    for (unsigned long v : rep.max_product_by_t) by_t.push_back(v);
    json results{{"d", rep.d},
                 {"max_product", rep.max_product},
                 {"bound", 1UL << rep.d},
                 {"argmax_t", rep.argmax_t},
                 {"max_product_by_t", std::move(by_t)},
                 {"bound_holds", rep.bound_holds}};
    json witnesses{{"maximizer_r", rep.maximizer_r}, {"maximizer_s", rep.maximizer_s}};
    return emit(opt, "verify frankl-rodl", json{{"d", opt.d}}, std::move(results),
                std::move(witnesses), elapsed(t0), rep.bound_holds);
}

int cmd_reproduce(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    incgeo::AcceptanceOptions aopts;
    aopts.max_d = opt.max_d;
    std::vector<incgeo::CriterionResult> results = incgeo::run_acceptance(opt.scope, aopts);
    bool ok = true;
    json rows = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        rows.push_back(json{{"criterion", r.id},
                            {"name", r.name},
                            {"status", r.passed ? "pass" : "FAIL"},
                            {"detail", r.detail}});
    }
    json jr{{"scope", opt.scope}, {"criteria", std::move(rows)}, {"ok", ok}};
    return emit(opt, "reproduce", json{{"scope", opt.scope}, {"max_d", opt.max_d}},
                std::move(jr), json::object(), elapsed(t0), ok);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact point-hyperplane incidence toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--cap", opt.cap, "Enumeration cap");
    };

    CLI::App* gen = app.add_subcommand("gen", "Generate objects");
    gen->require_subcommand(1);
    CLI::App* gen_lattice = gen->add_subcommand("lattice", "Band lattice configuration");
    gen_lattice->add_option("--d", opt.d, "Ambient dimension (d-1 a perfect square)");
    gen_lattice->add_flag("--universe", opt.universe, "Emit the wide-band universe points");
    add_common(gen_lattice);
    CLI::App* gen_grid = gen->add_subcommand("grid", "Grid set-family pair");
    gen_grid->add_option("--a", opt.a, "Rows of the grid");
    gen_grid->add_option("--b", opt.b, "Columns of the grid");
    add_common(gen_grid);
    CLI::App* gen_con = gen->add_subcommand("con", "Configuration of a matrix (stdin)");
    add_common(gen_con);

    CLI::App* stats = app.add_subcommand("stats", "Statistics of a stdin object");
    stats->add_option("--k", opt.k, "Partition block bound");
    add_common(stats);

    CLI::App* rs = app.add_subcommand("rs-exact", "Exact max biclique of a configuration (stdin)");
    add_common(rs);

    CLI::App* rect = app.add_subcommand("rect-max", "Max monochromatic rectangle (stdin matrix)");
    add_common(rect);

    CLI::App* sample =
        app.add_subcommand("biclique-sample", "Randomized biclique sampler (stdin)");
    sample->add_option("--trials", opt.trials, "Number of trials");
    add_common(sample);

    CLI::App* reduce = app.add_subcommand("reduce", "1-listable rectangle (stdin matrix)");
    add_common(reduce);

    CLI::App* protocol = app.add_subcommand("protocol", "Protocol tree (stdin matrix)");
    protocol->add_flag("--dot", opt.dot, "Emit DOT instead of JSON");
    add_common(protocol);

    CLI::App* verify = app.add_subcommand("verify", "Verify construction claims");
    verify->require_subcommand(1);
    CLI::App* v_lat = verify->add_subcommand("lattice", "Lattice claims");
    v_lat->add_option("--d", opt.d, "Ambient dimension");
    v_lat->add_option("--flats", opt.flats, "Random flats to sample");
    add_common(v_lat);
    CLI::App* v_grid = verify->add_subcommand("grid", "Grid family claims");
    v_grid->add_option("--a", opt.a, "Rows of the grid");
    v_grid->add_option("--b", opt.b, "Columns of the grid");
    add_common(v_grid);
    CLI::App* v_fr = verify->add_subcommand("frankl-rodl", "Cross-intersecting product bound");
    v_fr->add_option("--d", opt.d, "Ground set size (<= 4)");
    add_common(v_fr);

    CLI::App* reproduce = app.add_subcommand("reproduce", "Run the acceptance suite");
    reproduce->add_option("scope", opt.scope,
                          "all | lattice | sampler | reduction | grid | protocol");
    reproduce->add_option("--max-d", opt.max_d, "Cap on lattice dimensions");
    add_common(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_lattice->parsed()) return cmd_gen_lattice(opt);
        if (gen_grid->parsed()) return cmd_gen_grid(opt);
        if (gen_con->parsed()) return cmd_gen_con(opt);
        if (stats->parsed()) return cmd_stats(opt);
        if (rs->parsed()) return cmd_rs_exact(opt);
        if (rect->parsed()) return cmd_rect_max(opt);
        if (sample->parsed()) return cmd_biclique_sample(opt);
        if (reduce->parsed()) return cmd_reduce(opt);
        if (protocol->parsed()) return cmd_protocol(opt);
        if (v_lat->parsed()) return cmd_verify_lattice(opt);
        if (v_grid->parsed()) return cmd_verify_grid(opt);
        if (v_fr->parsed()) return cmd_verify_frankl_rodl(opt);
        if (reproduce->parsed()) return cmd_reproduce(opt);
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand handled\n";
    return 2;
}

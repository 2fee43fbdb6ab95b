#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "incgeo/acceptance.hpp"
#include "incgeo/constructions.hpp"
#include "incgeo/json_io.hpp"
#include "incgeo/reductions.hpp"
#include "incgeo/search.hpp"

namespace py = pybind11;

namespace {

// The bindings speak JSON strings; exact rationals cross the boundary as
// "num/den" strings, so no precision is lost in either direction.

incgeo::Matrix parse_matrix(const std::string& s) {
    return incgeo::matrix_from_json(incgeo::json::parse(s));
}

incgeo::Configuration parse_config(const std::string& s) {
    incgeo::Configuration c = incgeo::configuration_from_json(incgeo::json::parse(s));
    c.validate();
    return c;
}

std::string matrix_rank_info(const std::string& matrix_json) {
    incgeo::Matrix m = parse_matrix(matrix_json);
    incgeo::json out{{"rank", incgeo::rank(m)},
                     {"listability", incgeo::listability(m)},
                     {"arity", incgeo::arity(m)}};
    return out.dump();
}

std::string con_of_json(const std::string& matrix_json) {
    incgeo::ConResult con = incgeo::con_of(parse_matrix(matrix_json));
    return incgeo::configuration_to_json(con.config, &con.partition).dump();
}

std::string rs_exact_json(const std::string& config_json) {
    return incgeo::biclique_to_json(incgeo::rs_exact(parse_config(config_json))).dump();
}

std::string incidence_stats_json(const std::string& config_json) {
    incgeo::IncidenceStats stats = incgeo::incidence_stats(parse_config(config_json));
    incgeo::json out{{"incidences", stats.incidences},
                     {"density", incgeo::rat_to_string(stats.density)}};
    return out.dump();
}

std::string biclique_sample_json(const std::string& config_json, unsigned long trials,
                                 std::uint64_t seed) {
    incgeo::SearchBudget budget;
    budget.trials = trials;
    budget.seed = seed;
    auto b = incgeo::randomized_biclique(parse_config(config_json), budget);
    if (!b) return incgeo::json{{"success", false}}.dump();
    incgeo::json out{{"success", true}, {"biclique", incgeo::biclique_to_json(*b)}};
    return out.dump();
}

std::string gen_lattice_json(std::size_t d) {
    incgeo::LatticeConstruction lc = incgeo::lattice_construction(d);
    incgeo::json out{{"d", lc.d},
                     {"num_hyperplanes", lc.num_hyperplanes()},
                     {"num_points", lc.num_points()},
                     {"num_universe_points", lc.num_universe_points()},
                     {"universe_incidences", lc.universe_incidences().get_str()},
                     {"point_incidences", lc.point_incidences().get_str()}};
    return out.dump();
}

std::string verify_lattice_json(std::size_t d, unsigned long flats, std::uint64_t seed) {
    incgeo::LatticeConstruction lc = incgeo::lattice_construction(d);
    incgeo::LatticeReport rep = incgeo::verify_lattice_claims(lc, flats, seed, d <= 10);
    incgeo::json out{{"d", rep.d},
                     {"universe_incidences", rep.universe_incidences_counted.get_str()},
                     {"incidence_exact", rep.incidence_exact},
                     {"dense_subgraph_ok", rep.dense_subgraph_ok},
                     {"flats_sampled", rep.flats_sampled},
                     {"point_bound_violations", rep.point_bound_violations},
                     {"hyper_bound_violations", rep.hyper_bound_violations},
                     {"ok", rep.all_ok()}};
    return out.dump();
}

std::string gen_grid_json(std::size_t a, std::size_t b) {
    incgeo::SetFamilyPair fp = incgeo::grid_family(a, b);
    incgeo::Rat delta = 1 - incgeo::cross_disjoint_epsilon(fp);
    incgeo::json out{{"delta", incgeo::rat_to_string(delta)},
                     {"zero_rectangle_density",
                      incgeo::rat_to_string(incgeo::max_zero_rectangle_density(fp))},
                     {"set_family", incgeo::set_family_pair_to_json(fp)}};
    return out.dump();
}

std::string reduce_json(const std::string& matrix_json) {
    incgeo::Matrix m = parse_matrix(matrix_json);
    incgeo::Rectangle rect = incgeo::find_1listable_recursive(
        m, [](const incgeo::Matrix& b) { return incgeo::max_1listable_submatrix(b); });
    return incgeo::rectangle_to_json(rect).dump();
}

std::string protocol_json(const std::string& matrix_json) {
    incgeo::Matrix m = parse_matrix(matrix_json);
    incgeo::ProtocolTree tree = incgeo::build_protocol(
        m, [](const incgeo::Matrix& b) { return incgeo::max_monochromatic_rectangle(b); });
    std::string why;
    if (!incgeo::validate_protocol(m, tree, &why))
        throw std::logic_error("protocol failed validation: " + why);
    return incgeo::protocol_to_json(tree).dump();
}

std::vector<std::tuple<int, std::string, bool, std::string>> run_acceptance_py(
    const std::string& scope, std::size_t max_d) {
    incgeo::AcceptanceOptions opts;
    opts.max_d = max_d;
    std::vector<std::tuple<int, std::string, bool, std::string>> out;
    for (const auto& r : incgeo::run_acceptance(scope, opts))
        out.emplace_back(r.id, r.name, r.passed, r.detail);
    return out;
}

}  // namespace

PYBIND11_MODULE(_incgeo, m) {
    m.doc() = "Exact point-hyperplane incidence toolkit (JSON-string interface)";
    m.def("matrix_rank_info", &matrix_rank_info, py::arg("matrix_json"));
    m.def("con_of", &con_of_json, py::arg("matrix_json"));
    m.def("rs_exact", &rs_exact_json, py::arg("config_json"));
    m.def("incidence_stats", &incidence_stats_json, py::arg("config_json"));
    m.def("biclique_sample", &biclique_sample_json, py::arg("config_json"), py::arg("trials"),
          py::arg("seed"));
    m.def("gen_lattice", &gen_lattice_json, py::arg("d"));
    m.def("verify_lattice", &verify_lattice_json, py::arg("d"), py::arg("flats") = 100,
          py::arg("seed") = 0x1CE05EEDULL);
    m.def("gen_grid", &gen_grid_json, py::arg("a"), py::arg("b"));
    m.def("reduce", &reduce_json, py::arg("matrix_json"));
    m.def("protocol", &protocol_json, py::arg("matrix_json"));
    m.def("run_acceptance", &run_acceptance_py, py::arg("scope") = "all", py::arg("max_d") = 17);
}

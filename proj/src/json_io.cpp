#include "incgeo/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace incgeo {

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a \"num/den\" string");
}

json rat_with_decimal(const Rat& r) {
    return json{{"exact", rat_to_string(r)}, {"decimal", rat_to_decimal(r)}};
}

namespace {

json rat_row_to_json(const std::vector<Rat>& row) {
    json out = json::array();
    for (const Rat& v : row) out.push_back(rat_to_json(v));
    return out;
}

std::vector<Rat> rat_row_from_json(const json& j) {
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(rat_from_json(v));
    return out;
}

json index_vec_to_json(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (std::size_t i : v) out.push_back(i);
    return out;
}

std::vector<std::size_t> index_vec_from_json(const json& j) {
    std::vector<std::size_t> out;
    for (const auto& v : j) out.push_back(v.get<std::size_t>());
    return out;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix row count mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::invalid_argument("matrix column count mismatch");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(entries[i][k]);
    }
    return m;
}

json point_to_json(const Point& p) { return rat_row_to_json(p.coords); }

Point point_from_json(const json& j) { return Point(rat_row_from_json(j)); }

json hyperplane_to_json(const Hyperplane& h) {
    return json{{"normal", rat_row_to_json(h.normal)}, {"offset", rat_to_json(h.offset)}};
}

Hyperplane hyperplane_from_json(const json& j) {
    return Hyperplane(rat_row_from_json(j.at("normal")), rat_from_json(j.at("offset")));
}

json flat_to_json(const Flat& f) {
    json sys = json::array();
    for (const auto& row : f.system()) sys.push_back(rat_row_to_json(row));
    return json{{"ambient", f.ambient_dim()}, {"empty", f.is_empty()}, {"system", std::move(sys)}};
}

Flat flat_from_json(const json& j) {
    const std::size_t ambient = j.at("ambient").get<std::size_t>();
    if (j.at("empty").get<bool>()) return Flat::empty_flat(ambient);
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j.at("system")) rows.push_back(rat_row_from_json(row));
    return Flat::from_constraints(ambient, rows);
}

json configuration_to_json(const Configuration& c, const ParallelPartition* partition) {
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(point_to_json(p));
    json hps = json::array();
    for (const auto& h : c.hyperplanes) hps.push_back(hyperplane_to_json(h));
    json out{{"dim", c.dim}, {"points", std::move(pts)}, {"hyperplanes", std::move(hps)}};
    if (partition) {
        json blocks = json::array();
        for (const auto& b : partition->blocks) blocks.push_back(index_vec_to_json(b));
        out["partition"] =
            json{{"k", partition->block_size_bound}, {"blocks", std::move(blocks)}};
    }
    return out;
}

Configuration configuration_from_json(const json& j, std::optional<ParallelPartition>* partition) {
    Configuration c;
    c.dim = j.at("dim").get<std::size_t>();
    for (const auto& p : j.at("points")) c.points.push_back(point_from_json(p));
    for (const auto& h : j.at("hyperplanes")) c.hyperplanes.push_back(hyperplane_from_json(h));
    if (partition) {
        partition->reset();
        if (j.contains("partition")) {
            ParallelPartition pp;
            pp.block_size_bound = j["partition"].at("k").get<std::size_t>();
            for (const auto& b : j["partition"].at("blocks"))
                pp.blocks.push_back(index_vec_from_json(b));
            *partition = std::move(pp);
        }
    }
    return c;
}

json rectangle_to_json(const Rectangle& r) {
    return json{{"rows", index_vec_to_json(r.row_indices)},
                {"cols", index_vec_to_json(r.col_indices)},
                {"size", r.size()}};
}

Rectangle rectangle_from_json(const json& j) {
    return Rectangle{index_vec_from_json(j.at("rows")), index_vec_from_json(j.at("cols"))};
}

json biclique_to_json(const Biclique& b) {
    return json{{"flat", flat_to_json(b.flat)},
                {"points", index_vec_to_json(b.point_indices)},
                {"hyperplanes", index_vec_to_json(b.hyperplane_indices)},
                {"edges", b.edges}};
}

Biclique biclique_from_json(const json& j) {
    Biclique b;
    b.flat = flat_from_json(j.at("flat"));
    b.point_indices = index_vec_from_json(j.at("points"));
    b.hyperplane_indices = index_vec_from_json(j.at("hyperplanes"));
    b.edges = j.at("edges").get<unsigned long>();
    return b;
}

namespace {

json family_to_json(const std::vector<std::uint64_t>& fam, std::size_t ground) {
    std::vector<json> sets;
    for (std::uint64_t mask : fam) {
        json s = json::array();
        for (std::size_t i = 0; i < ground; ++i)
            if (mask >> i & 1) s.push_back(i);
        sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end());
    json out = json::array();
    for (auto& s : sets) out.push_back(std::move(s));
    return out;
}

std::vector<std::uint64_t> family_from_json(const json& j) {
    std::vector<std::uint64_t> out;
    for (const auto& s : j) {
        std::uint64_t mask = 0;
        for (const auto& i : s) mask |= std::uint64_t(1) << i.get<std::size_t>();
        out.push_back(mask);
    }
    return out;
}

}  // namespace

json set_family_pair_to_json(const SetFamilyPair& fp) {
    return json{{"ground_size", fp.ground_size},
                {"family_a", family_to_json(fp.family_a, fp.ground_size)},
                {"family_b", family_to_json(fp.family_b, fp.ground_size)}};
}

SetFamilyPair set_family_pair_from_json(const json& j) {
    SetFamilyPair fp;
    fp.ground_size = j.at("ground_size").get<std::size_t>();
    fp.family_a = family_from_json(j.at("family_a"));
    fp.family_b = family_from_json(j.at("family_b"));
    return fp;
}

json protocol_to_json(const ProtocolTree& t) {
    std::vector<int> parent(t.nodes.size(), -1);
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const ProtocolNode& n = t.nodes[i];
        if (n.child_in >= 0) parent[static_cast<std::size_t>(n.child_in)] = static_cast<int>(i);
        if (n.child_out >= 0) parent[static_cast<std::size_t>(n.child_out)] = static_cast<int>(i);
    }
    json nodes = json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const ProtocolNode& n = t.nodes[i];
        json jn{{"id", i}, {"parent", parent[i]}};
        switch (n.kind) {
            case ProtocolNode::Kind::RowSplit:
            case ProtocolNode::Kind::ColSplit:
                jn["kind"] = n.kind == ProtocolNode::Kind::RowSplit ? "row_split" : "col_split";
                jn["inside"] = index_vec_to_json(n.inside);
                jn["child_in"] = n.child_in;
                jn["child_out"] = n.child_out;
                break;
            case ProtocolNode::Kind::Leaf:
                jn["kind"] = "leaf";
                jn["rect"] = rectangle_to_json(n.rect);
                jn["value"] = rat_to_json(n.value);
                break;
        }
        nodes.push_back(std::move(jn));
    }
    return json{{"root", t.root},
                {"n_rows", t.n_rows},
                {"n_cols", t.n_cols},
                {"depth", t.depth()},
                {"nodes", std::move(nodes)}};
}

}  // namespace incgeo

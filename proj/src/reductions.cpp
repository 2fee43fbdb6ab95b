#include "incgeo/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace incgeo {

namespace {

std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

std::pair<Matrix, NormalizationRecord> normalize_columns(const Matrix& m) {
    NormalizationRecord rec;
    rec.a_values.resize(m.cols());
    rec.scale_values.resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::set<Rat> values;
        for (std::size_t i = 0; i < m.rows(); ++i) values.insert(m.at(i, j));
        if (values.size() <= 1) {
            if (!values.empty()) rec.a_values[j] = *values.begin();
            rec.dropped_constant_columns.push_back(j);
        } else {
            // a = min value -> 0, b = max value -> 1; Boolean columns map
            // to themselves.
            rec.a_values[j] = *values.begin();
            rec.scale_values[j] = 1 / (*values.rbegin() - *values.begin());
            rec.kept_columns.push_back(j);
        }
    }

    Matrix n(m.rows(), rec.kept_columns.size());
    for (std::size_t k = 0; k < rec.kept_columns.size(); ++k) {
        std::size_t j = rec.kept_columns[k];
        for (std::size_t i = 0; i < m.rows(); ++i)
            n.at(i, k) = (m.at(i, j) - *rec.a_values[j]) * *rec.scale_values[j];
    }
    if (rank(n) > rank(m) + 1) throw std::logic_error("normalize_columns: rank bound violated");
    return {std::move(n), std::move(rec)};
}

Matrix listability_step(const Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool has0 = false, has1 = false;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m.at(i, j) == 0) has0 = true;
            if (m.at(i, j) == 1) has1 = true;
        }
        if (!has0 || !has1)
            throw std::invalid_argument("listability_step: every column must contain 0 and 1");
    }
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(i, j) * (m.at(i, j) - 1);

    if (!m.is_empty() && listability(out) >= listability(m) && listability(m) > 1)
        throw std::logic_error("listability_step: listability did not decrease");
    std::size_t r = rank(m);
    if (rank(out) > r * r + r) throw std::logic_error("listability_step: rank bound violated");
    return out;
}

bool is_1listable_rectangle(const Matrix& m, const Rectangle& r) {
    if (r.row_indices.empty() || r.col_indices.empty()) return false;
    for (std::size_t j : r.col_indices) {
        const Rat& v = m.at(r.row_indices.front(), j);
        for (std::size_t i : r.row_indices)
            if (m.at(i, j) != v) return false;
    }
    return true;
}

Rectangle find_1listable_recursive(const Matrix& m, const ListableOracle& boolean_oracle,
                                   std::size_t depth_cap) {
    if (m.is_empty()) throw std::invalid_argument("find_1listable_recursive: empty matrix");
    if (depth_cap == 0) throw std::runtime_error("find_1listable_recursive: depth cap exceeded");

    if (listability(m) <= 1) return {iota_indices(m.rows()), iota_indices(m.cols())};

    auto [n, rec] = normalize_columns(m);

    // If at least half the columns are constant, the constant columns
    // already form a 1-listable rectangle of half the area.
    if (2 * rec.dropped_constant_columns.size() >= m.cols())
        return {iota_indices(m.rows()), rec.dropped_constant_columns};

    Rectangle in_n;
    if (listability(n) <= 2) {
        // Every kept column of n contains exactly {0, 1}: a Boolean matrix.
        in_n = boolean_oracle(n);
    } else {
        Matrix squeezed = listability_step(n);
        Rectangle sub = find_1listable_recursive(squeezed, boolean_oracle, depth_cap - 1);
        Matrix n_sub = n.submatrix(sub.row_indices, sub.col_indices);
        // Each column of the squeezed submatrix is a constant c, so the
        // corresponding column of n holds roots of z(z-1) = c: 2-listable.
        if (listability(n_sub) > 2)
            throw std::logic_error("find_1listable_recursive: induced submatrix not 2-listable");
        Rectangle local = boolean_oracle(n_sub);
        for (std::size_t i : local.row_indices) in_n.row_indices.push_back(sub.row_indices[i]);
        for (std::size_t j : local.col_indices) in_n.col_indices.push_back(sub.col_indices[j]);
    }

    Rectangle out;
    out.row_indices = in_n.row_indices;
    for (std::size_t j : in_n.col_indices) out.col_indices.push_back(rec.kept_columns[j]);
    if (!is_1listable_rectangle(m, out))
        throw std::logic_error("find_1listable_recursive: result not 1-listable");
    return out;
}

Matrix binarize_two_valued(const Matrix& m) {
    std::set<Rat> values;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) values.insert(m.at(i, j));
    if (values.size() != 2) throw std::invalid_argument("binarize_two_valued: arity must be 2");
    const Rat a = *values.begin();
    const Rat scale = 1 / (*values.rbegin() - a);
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = (m.at(i, j) - a) * scale;
    if (rank(out) > rank(m) + 1) throw std::logic_error("binarize_two_valued: rank bound violated");
    return out;
}

// --- Protocol trees -------------------------------------------------------

namespace {

struct ProtocolBuilder {
    const Matrix& m;
    const RectangleFinder& finder;
    std::size_t depth_cap;
    std::vector<ProtocolNode> nodes;

    int add(ProtocolNode node) {
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size() - 1);
    }

    int leaf(std::vector<std::size_t> rows, std::vector<std::size_t> cols, Rat value) {
        ProtocolNode node;
        node.kind = ProtocolNode::Kind::Leaf;
        node.rect = {std::move(rows), std::move(cols)};
        node.value = std::move(value);
        return add(std::move(node));
    }

    int build(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
              std::size_t depth) {
        if (depth > depth_cap) throw std::runtime_error("build_protocol: depth cap exceeded");

        const Rat& first = m.at(rows.front(), cols.front());
        bool constant = true;
        for (std::size_t i : rows)
            for (std::size_t j : cols)
                if (m.at(i, j) != first) {
                    constant = false;
                    break;
                }
        if (constant) return leaf(rows, cols, first);

        Matrix sub = m.submatrix(rows, cols);
        auto [local, value] = finder(sub);
        if (local.row_indices.empty() || local.col_indices.empty())
            throw std::runtime_error("build_protocol: finder returned an empty rectangle");
        for (std::size_t i : local.row_indices)
            for (std::size_t j : local.col_indices)
                if (sub.at(i, j) != value)
                    throw std::runtime_error("build_protocol: finder rectangle not monochromatic");

        std::vector<std::size_t> a, b, a_rest, b_rest;
        std::set<std::size_t> in_a(local.row_indices.begin(), local.row_indices.end());
        std::set<std::size_t> in_b(local.col_indices.begin(), local.col_indices.end());
        for (std::size_t i = 0; i < rows.size(); ++i)
            (in_a.count(i) ? a : a_rest).push_back(rows[i]);
        for (std::size_t j = 0; j < cols.size(); ++j)
            (in_b.count(j) ? b : b_rest).push_back(cols[j]);

        auto col_split = [&](const std::vector<std::size_t>& r, int in_child,
                             int out_child) -> int {
            ProtocolNode node;
            node.kind = ProtocolNode::Kind::ColSplit;
            node.inside = b;
            node.child_in = in_child;
            node.child_out = out_child;
            (void)r;
            return add(std::move(node));
        };

        // In-branch (x in A): y in B is the leaf, otherwise A x b_rest.
        int in_subtree;
        if (b_rest.empty()) {
            in_subtree = leaf(a, b, value);
        } else {
            int l = leaf(a, b, value);
            int rest = build(a, b_rest, depth + 2);
            in_subtree = col_split(a, l, rest);
        }

        if (a_rest.empty()) return in_subtree;

        // Out-branch (x not in A): split on y in B unless trivial.
        int out_subtree;
        if (b_rest.empty()) {
            out_subtree = build(a_rest, b, depth + 2);
        } else {
            int left = build(a_rest, b, depth + 2);
            int right = build(a_rest, b_rest, depth + 2);
            out_subtree = col_split(a_rest, left, right);
        }

        ProtocolNode node;
        node.kind = ProtocolNode::Kind::RowSplit;
        node.inside = a;
        node.child_in = in_subtree;
        node.child_out = out_subtree;
        return add(std::move(node));
    }
};

std::size_t depth_of(const ProtocolTree& t, int node) {
    const ProtocolNode& n = t.nodes[static_cast<std::size_t>(node)];
    if (n.kind == ProtocolNode::Kind::Leaf) return 0;
    return 1 + std::max(depth_of(t, n.child_in), depth_of(t, n.child_out));
}

}  // namespace

ProtocolTree build_protocol(const Matrix& m, const RectangleFinder& finder,
                            std::size_t depth_cap) {
    if (m.is_empty()) throw std::invalid_argument("build_protocol: empty matrix");
    ProtocolBuilder builder{m, finder, depth_cap, {}};
    int root = builder.build(iota_indices(m.rows()), iota_indices(m.cols()), 0);
    ProtocolTree tree;
    tree.nodes = std::move(builder.nodes);
    tree.root = root;
    tree.n_rows = m.rows();
    tree.n_cols = m.cols();
    return tree;
}

std::size_t ProtocolTree::depth() const { return depth_of(*this, root); }

Rat ProtocolTree::evaluate(std::size_t row, std::size_t col) const {
    int cur = root;
    while (true) {
        const ProtocolNode& n = nodes[static_cast<std::size_t>(cur)];
        switch (n.kind) {
            case ProtocolNode::Kind::Leaf:
                return n.value;
            case ProtocolNode::Kind::RowSplit:
                cur = std::count(n.inside.begin(), n.inside.end(), row) ? n.child_in : n.child_out;
                break;
            case ProtocolNode::Kind::ColSplit:
                cur = std::count(n.inside.begin(), n.inside.end(), col) ? n.child_in : n.child_out;
                break;
        }
    }
}

std::vector<const ProtocolNode*> ProtocolTree::leaves() const {
    std::vector<const ProtocolNode*> out;
    for (const auto& n : nodes)
        if (n.kind == ProtocolNode::Kind::Leaf) out.push_back(&n);
    return out;
}

bool validate_protocol(const Matrix& m, const ProtocolTree& tree, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (tree.n_rows != m.rows() || tree.n_cols != m.cols()) return fail("shape mismatch");

    std::vector<unsigned> covered(m.rows() * m.cols(), 0);
    for (const ProtocolNode* leaf : tree.leaves()) {
        for (std::size_t i : leaf->rect.row_indices)
            for (std::size_t j : leaf->rect.col_indices) {
                if (m.at(i, j) != leaf->value) return fail("leaf not monochromatic");
                ++covered[i * m.cols() + j];
            }
    }
    for (unsigned c : covered)
        if (c != 1) return fail(c == 0 ? "cell not covered" : "cell covered twice");

    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (tree.evaluate(i, j) != m.at(i, j)) return fail("evaluation mismatch");
    return true;
}

std::string protocol_to_dot(const ProtocolTree& tree) {
    std::ostringstream os;
    os << "digraph protocol {\n";
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        const ProtocolNode& n = tree.nodes[k];
        if (n.kind == ProtocolNode::Kind::Leaf) {
            os << "  n" << k << " [shape=box,label=\"" << n.rect.row_indices.size() << "x"
               << n.rect.col_indices.size() << " = " << rat_to_string(n.value) << "\"];\n";
        } else {
            os << "  n" << k << " [label=\""
               << (n.kind == ProtocolNode::Kind::RowSplit ? "row" : "col") << " in {";
            for (std::size_t t = 0; t < n.inside.size(); ++t)
                os << (t ? "," : "") << n.inside[t];
            os << "}\"];\n";
            os << "  n" << k << " -> n" << n.child_in << " [label=\"yes\"];\n";
            os << "  n" << k << " -> n" << n.child_out << " [label=\"no\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace incgeo

#include "incgeo/configuration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace incgeo {

void Configuration::validate() const {
    if (dim == 0) throw std::invalid_argument("configuration dimension must be >= 1");
    if (points.empty() || hyperplanes.empty())
        throw std::invalid_argument("configuration needs at least one point and one hyperplane");
    for (const auto& p : points)
        if (p.dim() != dim) throw std::invalid_argument("point dimension mismatch");
    std::set<std::pair<std::vector<Rat>, Rat>> seen;
    for (const auto& h : hyperplanes) {
        if (h.dim() != dim) throw std::invalid_argument("hyperplane dimension mismatch");
        if (!seen.insert({h.normal, h.offset}).second)
            throw std::invalid_argument("duplicate canonical hyperplane");
    }
}

bool is_valid_parallel_partition(const Configuration& c, const ParallelPartition& pp) {
    std::vector<bool> used(c.hyperplanes.size(), false);
    for (const auto& block : pp.blocks) {
        if (block.empty() || block.size() > pp.block_size_bound) return false;
        const auto& normal = c.hyperplanes[block.front()].normal;
        for (std::size_t idx : block) {
            if (idx >= c.hyperplanes.size() || used[idx]) return false;
            used[idx] = true;
            if (c.hyperplanes[idx].normal != normal) return false;
        }
        for (const auto& p : c.points) {
            std::size_t hits = 0;
            for (std::size_t idx : block)
                if (incident(p, c.hyperplanes[idx])) ++hits;
            if (hits != 1) return false;
        }
    }
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

bool is_valid_cover_partition(const Configuration& c,
                              const std::vector<std::vector<std::size_t>>& blocks,
                              std::size_t k) {
    std::vector<bool> used(c.hyperplanes.size(), false);
    for (const auto& block : blocks) {
        if (block.empty() || block.size() > k) return false;
        for (std::size_t idx : block) {
            if (idx >= c.hyperplanes.size() || used[idx]) return false;
            used[idx] = true;
        }
        for (const auto& p : c.points) {
            bool hit = false;
            for (std::size_t idx : block)
                if (incident(p, c.hyperplanes[idx])) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
    }
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

IncidenceStats incidence_stats(const Configuration& c) {
    unsigned long count = 0;
    for (const auto& p : c.points)
        for (const auto& h : c.hyperplanes)
            if (incident(p, h)) ++count;
    IncidenceStats s;
    s.incidences = count;
    s.density = Rat(static_cast<unsigned long>(count));
    s.density /= Rat(static_cast<unsigned long>(c.points.size() * c.hyperplanes.size()));
    return s;
}

bool is_valid_biclique(const Configuration& c, const Biclique& b) {
    if (b.edges != b.point_indices.size() * b.hyperplane_indices.size()) return false;
    if (b.flat.is_empty())
        return b.point_indices.empty() && b.hyperplane_indices.empty();
    for (std::size_t i : b.point_indices) {
        if (i >= c.points.size()) return false;
        if (!flat_contains_point(b.flat, c.points[i])) return false;
    }
    for (std::size_t j : b.hyperplane_indices) {
        if (j >= c.hyperplanes.size()) return false;
        if (!hyperplane_contains_flat(c.hyperplanes[j], b.flat)) return false;
    }
    return true;
}

std::optional<ParallelPartition> find_parallel_partition(const Configuration& c, std::size_t k) {
    if (k < 1) return std::nullopt;
    // Same-normal hyperplanes are pairwise disjoint, so a point's unique
    // incident hyperplane within a direction group can live in only one
    // block; each direction group must therefore form a single block.
    std::map<std::vector<Rat>, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < c.hyperplanes.size(); ++j)
        groups[c.hyperplanes[j].normal].push_back(j);

    ParallelPartition pp;
    pp.block_size_bound = k;
    for (const auto& [normal, idxs] : groups) {
        if (idxs.size() > k) return std::nullopt;
        std::set<Rat> offsets;
        for (std::size_t j : idxs) offsets.insert(c.hyperplanes[j].offset);
        for (const auto& p : c.points) {
            Rat v(0);
            for (std::size_t i = 0; i < c.dim; ++i) v += normal[i] * p.coords[i];
            if (!offsets.count(v)) return std::nullopt;
        }
        pp.blocks.push_back(idxs);
    }
    return pp;
}

std::size_t listability(const Matrix& m) {
    std::size_t worst = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::set<Rat> values;
        for (std::size_t i = 0; i < m.rows(); ++i) values.insert(m.at(i, j));
        worst = std::max(worst, values.size());
    }
    return worst;
}

std::size_t arity(const Matrix& m) {
    std::set<Rat> values;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) values.insert(m.at(i, j));
    return values.size();
}

Matrix mat_of(const Configuration& c, const ParallelPartition& pp) {
    if (!is_valid_parallel_partition(c, pp)) throw std::invalid_argument("invalid parallel partition");
    Matrix m(c.points.size(), pp.blocks.size());
    for (std::size_t j = 0; j < pp.blocks.size(); ++j) {
        const auto& normal = c.hyperplanes[pp.blocks[j].front()].normal;
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            Rat v(0);
            for (std::size_t t = 0; t < c.dim; ++t) v += normal[t] * c.points[i].coords[t];
            m.at(i, j) = v;
        }
    }
    return m;
}

ConResult con_of(const Matrix& m) {
    if (m.is_empty()) throw std::invalid_argument("con_of needs a nonempty matrix");
    const Factorization f = factorize(m);
    const std::size_t d = f.left.cols();
    if (d == 0) throw std::invalid_argument("con_of needs a matrix of rank >= 1");

    // Per-column hyperplane sets from the canonical factorization. Columns
    // whose hyperplane sets coincide (e.g. exact duplicates) are merged
    // into a single block so the partition stays disjoint.
    std::map<std::set<std::pair<std::vector<Rat>, Rat>>, std::vector<std::size_t>> block_map;
    std::vector<std::set<std::pair<std::vector<Rat>, Rat>>> column_sets(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Rat> q = f.right.column(j);
        if (std::all_of(q.begin(), q.end(), [](const Rat& x) { return x == 0; }))
            throw std::invalid_argument("con_of: an all-zero column has no hyperplane");
        std::set<Rat> values;
        for (std::size_t i = 0; i < m.rows(); ++i) values.insert(m.at(i, j));
        for (const Rat& b : values) {
            Hyperplane h(q, b);
            column_sets[j].insert({h.normal, h.offset});
        }
        block_map[column_sets[j]].push_back(j);
    }

    Configuration cfg;
    cfg.dim = d;
    for (std::size_t i = 0; i < m.rows(); ++i) cfg.points.emplace_back(f.left.row(i));

    ParallelPartition pp;
    pp.block_size_bound = std::max<std::size_t>(1, listability(m));
    std::vector<std::vector<std::size_t>> block_columns;
    for (const auto& [hset, source_cols] : block_map) {
        std::vector<std::size_t> block;
        for (const auto& [normal, offset] : hset) {
            block.push_back(cfg.hyperplanes.size());
            cfg.hyperplanes.push_back(Hyperplane(normal, offset));
        }
        pp.blocks.push_back(std::move(block));
        block_columns.push_back(source_cols);
    }
    return {std::move(cfg), std::move(pp), std::move(block_columns)};
}

Rectangle rectangle_from_biclique(const Configuration& c, const ParallelPartition& pp,
                                  const Biclique& b) {
    if (!is_valid_biclique(c, b)) throw std::invalid_argument("invalid biclique");
    if (b.point_indices.empty() || b.hyperplane_indices.empty())
        throw std::invalid_argument("biclique must be nonempty on both sides");

    std::set<std::size_t> wanted(b.hyperplane_indices.begin(), b.hyperplane_indices.end());
    Rectangle rect;
    rect.row_indices = b.point_indices;
    for (std::size_t j = 0; j < pp.blocks.size(); ++j)
        for (std::size_t idx : pp.blocks[j])
            if (wanted.count(idx)) {
                rect.col_indices.push_back(j);
                break;
            }

    // Parallel hyperplanes are disjoint, so each selected block meets the
    // biclique in one hyperplane; its offset is the column's constant.
    Matrix mat = mat_of(c, pp);
    for (std::size_t j : rect.col_indices) {
        const Rat& first = mat.at(rect.row_indices.front(), j);
        for (std::size_t i : rect.row_indices)
            if (mat.at(i, j) != first) throw std::logic_error("biclique rectangle not 1-listable");
    }
    return rect;
}

}  // namespace incgeo

#include "incgeo/geometry.hpp"

#include <stdexcept>
#include <utility>

namespace incgeo {

namespace {

// In-place reduced echelon on augmented rows (width = ambient + 1).
// Returns false if the system is inconsistent (a row 0 = c appears).
bool echelonize(std::size_t ambient, std::vector<std::vector<Rat>>& rows) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ambient && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        Rat inv = 1 / rows[pivot_row][col];
        for (std::size_t j = col; j <= ambient; ++j) rows[pivot_row][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = col; j <= ambient; ++j) rows[i][j] -= f * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    // Rows past pivot_row have zero coefficients; nonzero rhs means empty.
    for (std::size_t i = pivot_row; i < rows.size(); ++i)
        if (rows[i][ambient] != 0) return false;
    rows.resize(pivot_row);
    return true;
}

int rat_cmp(const Rat& a, const Rat& b) { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()); }

}  // namespace

Hyperplane::Hyperplane(std::vector<Rat> n, Rat b) : normal(std::move(n)), offset(std::move(b)) {
    std::size_t lead = normal.size();
    for (std::size_t i = 0; i < normal.size(); ++i)
        if (normal[i] != 0) {
            lead = i;
            break;
        }
    if (lead == normal.size()) throw std::invalid_argument("hyperplane normal must be nonzero");
    Rat inv = 1 / normal[lead];
    if (inv != 1) {
        for (std::size_t i = lead; i < normal.size(); ++i) normal[i] *= inv;
        offset *= inv;
    }
}

Hyperplane::Hyperplane(std::initializer_list<long> n, long b)
    : Hyperplane(std::vector<Rat>(n.begin(), n.end()), Rat(b)) {}

Flat Flat::full(std::size_t ambient_dim) { return Flat(ambient_dim, false, {}); }

Flat Flat::empty_flat(std::size_t ambient_dim) { return Flat(ambient_dim, true, {}); }

Flat Flat::from_constraints(std::size_t ambient_dim,
                            const std::vector<std::vector<Rat>>& constraint_rows) {
    std::vector<std::vector<Rat>> rows = constraint_rows;
    for (const auto& r : rows)
        if (r.size() != ambient_dim + 1)
            throw std::invalid_argument("constraint row width must be ambient_dim + 1");
    if (!echelonize(ambient_dim, rows)) return empty_flat(ambient_dim);
    return Flat(ambient_dim, false, std::move(rows));
}

Point Flat::particular_point() const {
    if (empty_) throw std::logic_error("empty flat has no points");
    std::vector<Rat> coords(ambient_, Rat(0));
    for (const auto& row : rows_) {
        std::size_t lead = 0;
        while (row[lead] == 0) ++lead;
        // Free variables are 0, so the pivot variable equals the rhs.
        coords[lead] = row[ambient_];
    }
    return Point(std::move(coords));
}

std::strong_ordering Flat::operator<=>(const Flat& other) const {
    if (ambient_ != other.ambient_) return ambient_ <=> other.ambient_;
    if (empty_ != other.empty_) return empty_ <=> other.empty_;
    if (rows_.size() != other.rows_.size()) return rows_.size() <=> other.rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            int c = rat_cmp(rows_[i][j], other.rows_[i][j]);
            if (c != 0) return c <=> 0;
        }
    return std::strong_ordering::equal;
}

bool incident(const Point& p, const Hyperplane& h) {
    if (p.dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < p.dim(); ++i) acc += h.normal[i] * p.coords[i];
    return acc == h.offset;
}

Flat intersect_flat_hyperplane(const Flat& f, const Hyperplane& h) {
    if (f.ambient_dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
    if (f.is_empty()) return f;
    std::vector<std::vector<Rat>> rows = f.system();
    std::vector<Rat> hrow = h.normal;
    hrow.push_back(h.offset);
    rows.push_back(std::move(hrow));
    return Flat::from_constraints(f.ambient_dim(), rows);
}

bool flat_contains_point(const Flat& f, const Point& p) {
    if (f.ambient_dim() != p.dim()) throw std::invalid_argument("dimension mismatch");
    if (f.is_empty()) return false;
    for (const auto& row : f.system()) {
        Rat acc(0);
        for (std::size_t i = 0; i < p.dim(); ++i) acc += row[i] * p.coords[i];
        if (acc != row[p.dim()]) return false;
    }
    return true;
}

bool hyperplane_contains_flat(const Hyperplane& h, const Flat& f) {
    if (f.ambient_dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
    if (f.is_empty()) throw std::invalid_argument("empty flat");
    // h contains f iff intersecting changes nothing.
    return intersect_flat_hyperplane(f, h) == f;
}

Flat affine_hull(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("affine_hull of empty point list");
    const std::size_t d = points[0].dim();
    for (const auto& p : points)
        if (p.dim() != d) throw std::invalid_argument("dimension mismatch");

    // Nullspace of the difference-vector matrix gives the normals of the
    // hull's constraint system.
    std::vector<std::vector<Rat>> diffs;
    for (std::size_t k = 1; k < points.size(); ++k) {
        std::vector<Rat> row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = points[k].coords[i] - points[0].coords[i];
        row.push_back(Rat(0));  // homogeneous; reuse the augmented echelon
        diffs.push_back(std::move(row));
    }
    echelonize(d, diffs);

    std::vector<bool> is_pivot(d, false);
    for (const auto& row : diffs) {
        std::size_t lead = 0;
        while (row[lead] == 0) ++lead;
        is_pivot[lead] = true;
    }

    std::vector<std::vector<Rat>> constraints;
    for (std::size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        // Basis vector of the nullspace: x_free = 1, pivots solve to cancel.
        std::vector<Rat> a(d, Rat(0));
        a[free] = 1;
        for (const auto& row : diffs) {
            std::size_t lead = 0;
            while (row[lead] == 0) ++lead;
            a[lead] = -row[free];
        }
        Rat rhs(0);
        for (std::size_t i = 0; i < d; ++i) rhs += a[i] * points[0].coords[i];
        a.push_back(std::move(rhs));
        constraints.push_back(std::move(a));
    }
    return Flat::from_constraints(d, constraints);
}

Flat flat_of_hyperplane(const Hyperplane& h) {
    std::vector<Rat> row = h.normal;
    row.push_back(h.offset);
    return Flat::from_constraints(h.dim(), {row});
}

unsigned long count_hypercube_points_on_flat(const Flat& f, std::size_t ell, std::size_t cap) {
    if (f.ambient_dim() != ell) throw std::invalid_argument("ambient dim must equal ell");
    if (ell > cap) throw std::length_error("hypercube enumeration cap exceeded");
    struct Rec {
        std::size_t ell;
        unsigned long operator()(const Flat& g, std::size_t next) const {
            if (g.is_empty()) return 0;
            if (next == ell) return 1;
            std::vector<Rat> n(ell, Rat(0));
            n[next] = 1;
            unsigned long total = 0;
            total += (*this)(intersect_flat_hyperplane(g, Hyperplane(n, Rat(1))), next + 1);
            total += (*this)(intersect_flat_hyperplane(g, Hyperplane(n, Rat(-1))), next + 1);
            return total;
        }
    };
    return Rec{ell}(f, 0);
}

}  // namespace incgeo

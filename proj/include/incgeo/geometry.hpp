#ifndef INCGEO_GEOMETRY_HPP
#define INCGEO_GEOMETRY_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "incgeo/rational.hpp"

namespace incgeo {

struct Point {
    std::vector<Rat> coords;

    Point() = default;
    explicit Point(std::vector<Rat> c) : coords(std::move(c)) {}
    Point(std::initializer_list<long> c) {
        for (long v : c) coords.emplace_back(v);
    }

    std::size_t dim() const { return coords.size(); }
    bool operator==(const Point&) const = default;
};

// Hyperplane <normal, x> = offset, stored canonically: the first nonzero
// normal coordinate is scaled to 1, so equal hyperplanes compare equal and
// parallel ones have identical normals.
struct Hyperplane {
    std::vector<Rat> normal;
    Rat offset;

    Hyperplane(std::vector<Rat> n, Rat b);
    Hyperplane(std::initializer_list<long> n, long b);

    std::size_t dim() const { return normal.size(); }
    bool operator==(const Hyperplane&) const = default;
};

// Affine flat in R^d, represented by a reduced-echelon augmented system
// (A | b) whose solution set is the flat. The canonical form is unique per
// solution set, so flat equality is plain field equality. The empty flat is
// a first-class value with dim() == -1.
class Flat {
public:
    static Flat full(std::size_t ambient_dim);
    static Flat empty_flat(std::size_t ambient_dim);
    // Each constraint row has ambient_dim + 1 entries (coefficients | rhs).
    static Flat from_constraints(std::size_t ambient_dim,
                                 const std::vector<std::vector<Rat>>& constraint_rows);

    std::size_t ambient_dim() const { return ambient_; }
    bool is_empty() const { return empty_; }
    long dim() const { return empty_ ? -1 : static_cast<long>(ambient_ - rows_.size()); }
    const std::vector<std::vector<Rat>>& system() const { return rows_; }

    // Some point of the flat (free variables set to 0). Flat must be nonempty.
    Point particular_point() const;

    bool operator==(const Flat&) const = default;
    // Lexicographic order on (ambient, emptiness, system); used for
    // deterministic tie-breaking and as a map key.
    std::strong_ordering operator<=>(const Flat& other) const;

private:
    Flat(std::size_t ambient, bool empty, std::vector<std::vector<Rat>> rows)
        : ambient_(ambient), empty_(empty), rows_(std::move(rows)) {}

    std::size_t ambient_ = 0;
    bool empty_ = false;
    std::vector<std::vector<Rat>> rows_;
};

bool incident(const Point& p, const Hyperplane& h);

Flat intersect_flat_hyperplane(const Flat& f, const Hyperplane& h);

bool flat_contains_point(const Flat& f, const Point& p);

// True iff every solution of f's system satisfies h. f must be nonempty.
bool hyperplane_contains_flat(const Hyperplane& h, const Flat& f);

Flat affine_hull(const std::vector<Point>& points);

Flat flat_of_hyperplane(const Hyperplane& h);

// Number of points of {-1,1}^ell on f, by coordinate splitting with
// pruning. Always <= 2^dim(f).
unsigned long count_hypercube_points_on_flat(const Flat& f, std::size_t ell,
                                             std::size_t cap = 30);

}  // namespace incgeo

#endif

#ifndef INCGEO_CONFIGURATION_HPP
#define INCGEO_CONFIGURATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "incgeo/geometry.hpp"
#include "incgeo/matrix.hpp"

namespace incgeo {

// Finite point set plus finite hyperplane set in R^d. Points form a
// multiset; hyperplanes are deduplicated by canonical form.
struct Configuration {
    std::size_t dim = 0;
    std::vector<Point> points;
    std::vector<Hyperplane> hyperplanes;

    // Throws std::invalid_argument on a broken invariant.
    void validate() const;
};

// Partition of hyperplane indices into blocks of size <= k; within a block
// all normals agree and every point lies on exactly one member.
struct ParallelPartition {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t block_size_bound = 0;
};

bool is_valid_parallel_partition(const Configuration& c, const ParallelPartition& pp);

// Relaxed (not-necessarily-parallel) partition check: blocks of size <= k,
// each covering every point at least once.
bool is_valid_cover_partition(const Configuration& c,
                              const std::vector<std::vector<std::size_t>>& blocks,
                              std::size_t k);

struct IncidenceStats {
    unsigned long incidences = 0;
    Rat density;  // incidences / (m * n)
};

IncidenceStats incidence_stats(const Configuration& c);

// Row subset x column subset of a matrix.
struct Rectangle {
    std::vector<std::size_t> row_indices;
    std::vector<std::size_t> col_indices;

    unsigned long size() const {
        return static_cast<unsigned long>(row_indices.size()) *
               static_cast<unsigned long>(col_indices.size());
    }
    bool operator==(const Rectangle&) const = default;
};

// Witness for a complete bipartite subgraph of the incidence graph: every
// listed point lies on the flat, the flat lies on every listed hyperplane.
struct Biclique {
    Flat flat = Flat::empty_flat(1);
    std::vector<std::size_t> point_indices;
    std::vector<std::size_t> hyperplane_indices;
    unsigned long edges = 0;
};

bool is_valid_biclique(const Configuration& c, const Biclique& b);

// Grouping hyperplanes into one block per normal direction; absent when a
// direction group exceeds k or fails to cover some point exactly once.
std::optional<ParallelPartition> find_parallel_partition(const Configuration& c, std::size_t k);

// Least k such that M is k-listable: max distinct entries over columns.
std::size_t listability(const Matrix& m);

// Number of distinct entries in M.
std::size_t arity(const Matrix& m);

// Matrix of a parallel-partitioned configuration: entry (i, j) is the inner
// product of point i with the canonical normal of block j.
Matrix mat_of(const Configuration& c, const ParallelPartition& pp);

struct ConResult {
    Configuration config;
    ParallelPartition partition;
    // For each partition block, the source columns of the input matrix it
    // represents (more than one when duplicate columns were merged).
    std::vector<std::vector<std::size_t>> block_columns;
};

// Configuration of a matrix via the canonical rank factorization: points
// are the rows of the left factor; for each column j and distinct value b
// in that column, a hyperplane <x, q_j> = b. Blocks group per column.
ConResult con_of(const Matrix& m);

// 1-listable rectangle of mat_of induced by a biclique: its points cross
// the blocks that contribute a hyperplane to the biclique.
Rectangle rectangle_from_biclique(const Configuration& c, const ParallelPartition& pp,
                                  const Biclique& b);

}  // namespace incgeo

#endif

#ifndef INCGEO_REDUCTIONS_HPP
#define INCGEO_REDUCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "incgeo/configuration.hpp"
#include "incgeo/matrix.hpp"

namespace incgeo {

// Per-column record of the affine normalization x -> (x - a) / (b - a);
// constant columns are dropped and remembered instead.
struct NormalizationRecord {
    // Indexed by original column; disengaged for dropped columns.
    std::vector<std::optional<Rat>> a_values;
    std::vector<std::optional<Rat>> scale_values;  // 1 / (b - a)
    std::vector<std::size_t> dropped_constant_columns;
    std::vector<std::size_t> kept_columns;
};

// Maps every non-constant column so it contains both 0 and 1; drops and
// records constant columns. rank(normalized) <= rank(m) + 1, asserted.
std::pair<Matrix, NormalizationRecord> normalize_columns(const Matrix& m);

// Entrywise z -> z(z-1). Requires every column to contain 0 and 1; lowers
// listability by at least one and is asserted to obey the rank bound
// rank^2 + rank.
Matrix listability_step(const Matrix& m);

// Oracle contract: given any 2-listable matrix, return a 1-listable
// rectangle in it.
using ListableOracle = std::function<Rectangle(const Matrix&)>;

// Induction on listability: normalize, square down one level via
// listability_step, recurse, then finish the resulting 2-listable
// submatrix with the oracle. The returned rectangle is validated
// 1-listable in m.
Rectangle find_1listable_recursive(const Matrix& m, const ListableOracle& boolean_oracle,
                                   std::size_t depth_cap = 64);

// Affine map of a two-valued matrix onto {0,1} (smaller value -> 0).
Matrix binarize_two_valued(const Matrix& m);

bool is_1listable_rectangle(const Matrix& m, const Rectangle& r);

// --- Protocol trees -------------------------------------------------------

struct ProtocolNode {
    enum class Kind { RowSplit, ColSplit, Leaf };
    Kind kind = Kind::Leaf;
    std::vector<std::size_t> inside;  // announced index set for splits
    int child_in = -1;
    int child_out = -1;
    Rectangle rect;  // for leaves
    Rat value;       // for leaves
};

// Binary decision tree whose leaves are monochromatic rectangles
// partitioning the full index grid. Depth = worst-case bits.
struct ProtocolTree {
    std::vector<ProtocolNode> nodes;
    int root = 0;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;

    std::size_t depth() const;
    Rat evaluate(std::size_t row, std::size_t col) const;
    std::vector<const ProtocolNode*> leaves() const;
};

using RectangleFinder = std::function<std::pair<Rectangle, Rat>(const Matrix&)>;

// Quadrant recursion: find a monochromatic rectangle A x B, announce
// membership in A then in B (one bit each, trivial bits skipped), make
// A x B a leaf and recurse on the remaining quadrants.
ProtocolTree build_protocol(const Matrix& m, const RectangleFinder& finder,
                            std::size_t depth_cap = 256);

// Leaves disjoint, covering, monochromatic, and evaluation matches the
// matrix on every input pair.
bool validate_protocol(const Matrix& m, const ProtocolTree& tree, std::string* why = nullptr);

std::string protocol_to_dot(const ProtocolTree& tree);

}  // namespace incgeo

#endif

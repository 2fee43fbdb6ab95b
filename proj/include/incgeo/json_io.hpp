#ifndef INCGEO_JSON_IO_HPP
#define INCGEO_JSON_IO_HPP

#include <json.hpp>

#include "incgeo/configuration.hpp"
#include "incgeo/constructions.hpp"
#include "incgeo/reductions.hpp"

namespace incgeo {

using json = nlohmann::ordered_json;

// Scalars travel as exact "num/den" strings (bare integers accepted on
// input); decimal renderings are advisory and never parsed back.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);
json rat_with_decimal(const Rat& r);  // {"exact": "num/den", "decimal": "..."}

// {"rows": n, "cols": m, "entries": [[...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

// {"normal": [...], "offset": "num/den"}
json hyperplane_to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const json& j);

// {"ambient": d, "empty": bool, "system": [[coeffs..., rhs], ...]}
json flat_to_json(const Flat& f);
Flat flat_from_json(const json& j);

// {"dim": d, "points": [...], "hyperplanes": [...], "partition": optional}
json configuration_to_json(const Configuration& c,
                           const ParallelPartition* partition = nullptr);
Configuration configuration_from_json(const json& j,
                                      std::optional<ParallelPartition>* partition = nullptr);

json rectangle_to_json(const Rectangle& r);
Rectangle rectangle_from_json(const json& j);

json biclique_to_json(const Biclique& b);
Biclique biclique_from_json(const json& j);

// Sorted lists of sorted index arrays.
json set_family_pair_to_json(const SetFamilyPair& fp);
SetFamilyPair set_family_pair_from_json(const json& j);

// Node list with parent links.
json protocol_to_json(const ProtocolTree& t);

}  // namespace incgeo

#endif

#pragma once

// JSON (de)serialization for the data exchanged by the command-line tools:
// exact scalars as "p/q" strings, vectors, graded spaces, linear maps, and
// bracket tables.

#include <string>

#include "json.hpp"
#include "mct/graded.hpp"
#include "mct/linfty.hpp"

namespace mct {

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const GradedSpace& s);
GradedSpace space_from_json(const nlohmann::json& j);

nlohmann::json gmap_to_json(const GMap& m);
GMap gmap_from_json(const nlohmann::json& j);

nlohmann::json slinfty_to_json(const SLInfty& a);
SLInfty slinfty_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace mct

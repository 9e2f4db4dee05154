#include "mct/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mct {

using nlohmann::json;

json scalar_to_json(const Scalar& s) { return scalar_to_string(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  return scalar_from_string(j.get<std::string>());
}

json vec_to_json(const Vec& v) {
  json out = json::object();
  for (const auto& [id, c] : v)
    if (c != 0) out[id] = scalar_to_json(c);
  return out;
}

Vec vec_from_json(const json& j) {
  Vec out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Scalar c = scalar_from_json(it.value());
    if (c != 0) out[it.key()] = c;
  }
  return out;
}

json space_to_json(const GradedSpace& s) {
  json basis = json::array();
  for (const auto& b : s.basis) {
    json e{{"id", b.id}, {"deg", b.deg}};
    if (b.weight != 0) e["weight"] = b.weight;
    basis.push_back(e);
  }
  return json{{"basis", basis}};
}

GradedSpace space_from_json(const json& j) {
  GradedSpace out;
  for (const auto& e : j.at("basis")) {
    BasisElement b;
    b.id = e.at("id").get<std::string>();
    b.deg = e.at("deg").get<int>();
    b.weight = e.value("weight", 0);
    out.basis.push_back(b);
  }
  return out;
}

json gmap_to_json(const GMap& m) {
  json images = json::object();
  for (const auto& [id, v] : m.images)
    if (!vec_is_zero(v)) images[id] = vec_to_json(v);
  return json{{"degree", m.degree}, {"images", images}};
}

GMap gmap_from_json(const json& j) {
  GMap out;
  out.degree = j.at("degree").get<int>();
  const json& images = j.at("images");
  for (auto it = images.begin(); it != images.end(); ++it)
    out.images[it.key()] = vec_from_json(it.value());
  return out;
}

json slinfty_to_json(const SLInfty& a) {
  json ops = json::object();
  for (const auto& [n, table] : a.ops) {
    json entries = json::array();
    for (const auto& [args, value] : table) {
      if (vec_is_zero(value)) continue;
      entries.push_back(json{{"args", args}, {"value", vec_to_json(value)}});
    }
    ops[std::to_string(n)] = entries;
  }
  return json{{"space", space_to_json(a.space)},
              {"arity_cap", a.arity_cap},
              {"ops", ops}};
}

SLInfty slinfty_from_json(const json& j) {
  SLInfty out;
  out.space = space_from_json(j.at("space"));
  out.arity_cap = j.at("arity_cap").get<int>();
  const json& ops = j.at("ops");
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    int n = std::stoi(it.key());
    for (const auto& e : it.value())
      out.set_op(n, e.at("args").get<std::vector<std::string>>(),
                 vec_from_json(e.at("value")));
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mct

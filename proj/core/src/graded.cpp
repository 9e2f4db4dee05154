#include "mct/graded.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mct {

void vec_add(Vec& target, const std::string& id, const Scalar& c) {
  if (c == 0) return;
  auto it = target.find(id);
  if (it == target.end()) {
    target.emplace(id, c);
  } else {
    it->second += c;
    if (it->second == 0) target.erase(it);
  }
}

void vec_add(Vec& target, const Vec& src, const Scalar& c) {
  for (const auto& [id, coeff] : src) vec_add(target, id, coeff * c);
}

Vec vec_added(Vec a, const Vec& b, const Scalar& c) {
  vec_add(a, b, c);
  return a;
}

Vec vec_scale(const Vec& v, const Scalar& c) {
  Vec out;
  if (c == 0) return out;
  for (const auto& [id, coeff] : v) out.emplace(id, coeff * c);
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out = a;
  vec_add(out, b, -1);
  return out;
}

bool vec_is_zero(const Vec& v) { return v.empty(); }

Scalar vec_coeff(const Vec& v, const std::string& id) {
  auto it = v.find(id);
  return it == v.end() ? Scalar(0) : it->second;
}

std::string vec_to_string(const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, c] : v) {
    if (!first) os << " + ";
    os << scalar_to_string(c) << "*" << id;
    first = false;
  }
  return os.str();
}

void GradedSpace::ensure_index() const {
  if (index_.size() == basis.size()) return;
  index_.clear();
  for (const auto& b : basis) index_[b.id] = {b.deg, b.weight};
}

int GradedSpace::deg(const std::string& id) const {
  ensure_index();
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown basis id: " + id);
  return it->second.first;
}

int GradedSpace::weight(const std::string& id) const {
  ensure_index();
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown basis id: " + id);
  return it->second.second;
}

bool GradedSpace::contains(const std::string& id) const {
  ensure_index();
  return index_.count(id) > 0;
}

std::vector<std::string> GradedSpace::ids() const {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(b.id);
  return out;
}

std::vector<std::string> GradedSpace::ids_in_degree(int d) const {
  std::vector<std::string> out;
  for (const auto& b : basis)
    if (b.deg == d) out.push_back(b.id);
  return out;
}

int GradedSpace::deg_of(const Vec& v) const {
  if (v.empty()) throw std::invalid_argument("degree of zero vector is undefined");
  int d = deg(v.begin()->first);
  for (const auto& [id, c] : v)
    if (deg(id) != d)
      throw std::invalid_argument("vector is not homogeneous: " + vec_to_string(v));
  return d;
}

GradedSpace suspend(const GradedSpace& space, int k) {
  GradedSpace out = space;
  for (auto& b : out.basis) b.deg += k;
  return out;
}

Vec GMap::apply(const Vec& v) const {
  Vec out;
  for (const auto& [id, c] : v) {
    auto it = images.find(id);
    if (it != images.end()) vec_add(out, it->second, c);
  }
  return out;
}

Vec GMap::apply_basis(const std::string& id) const {
  auto it = images.find(id);
  return it == images.end() ? Vec{} : it->second;
}

GMap gmap_compose(const GMap& outer, const GMap& inner) {
  GMap out;
  out.degree = outer.degree + inner.degree;
  for (const auto& [id, mid] : inner.images) {
    Vec img = outer.apply(mid);
    if (!img.empty()) out.images[id] = std::move(img);
  }
  return out;
}

GMap gmap_add(const GMap& a, const GMap& b) {
  GMap out;
  out.degree = a.degree;  // caller guarantees matching degrees
  out.images = a.images;
  for (const auto& [id, v] : b.images) {
    Vec acc = out.apply_basis(id);
    vec_add(acc, v, 1);
    if (acc.empty())
      out.images.erase(id);
    else
      out.images[id] = std::move(acc);
  }
  return out;
}

GMap gmap_scale(const GMap& a, const Scalar& c) {
  GMap out;
  out.degree = a.degree;
  if (c == 0) return out;
  for (const auto& [id, v] : a.images) out.images[id] = vec_scale(v, c);
  return out;
}

GMap gmap_identity(const GradedSpace& space) {
  GMap out;
  out.degree = 0;
  for (const auto& b : space.basis) out.images[b.id] = Vec{{b.id, Scalar(1)}};
  return out;
}

bool gmap_equal(const GMap& a, const GMap& b) {
  auto normal = [](const GMap& m) {
    std::map<std::string, Vec> out;
    for (const auto& [id, v] : m.images)
      if (!v.empty()) out[id] = v;
    return out;
  };
  return normal(a) == normal(b);
}

std::optional<std::string> check_complex(const GradedSpace& space, const GMap& d) {
  if (d.degree != -1) return "differential must have degree -1";
  for (const auto& b : space.basis) {
    Vec img = d.apply_basis(b.id);
    for (const auto& [id, c] : img) {
      if (!space.contains(id)) return "d(" + b.id + ") leaves the space at " + id;
      if (space.deg(id) != b.deg - 1)
        return "d(" + b.id + ") is not homogeneous of degree -1 at " + id;
    }
    Vec dd = d.apply(img);
    if (!dd.empty())
      return "d^2(" + b.id + ") = " + vec_to_string(dd) + " != 0";
  }
  return std::nullopt;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
  if (perm.size() != degrees.size())
    throw std::invalid_argument("koszul_sign: size mismatch");
  long long exponent = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j])
        exponent += static_cast<long long>(degrees[perm[i]]) * degrees[perm[j]];
  return sign_pow(exponent);
}

int tensor_apply_sign(const std::vector<int>& map_degrees,
                      const std::vector<int>& arg_degrees) {
  if (map_degrees.size() != arg_degrees.size())
    throw std::invalid_argument("tensor_apply_sign: size mismatch");
  long long exponent = 0;
  long long left = 0;
  for (size_t j = 0; j < map_degrees.size(); ++j) {
    exponent += static_cast<long long>(map_degrees[j]) * left;
    left += arg_degrees[j];
  }
  return sign_pow(exponent);
}

TensorApplyResult tensor_apply(const std::vector<const GMap*>& maps,
                               const std::vector<Vec>& args,
                               const std::vector<const GradedSpace*>& spaces) {
  if (maps.size() != args.size() || maps.size() != spaces.size())
    throw std::invalid_argument("tensor_apply: size mismatch");
  std::vector<int> mdeg, adeg;
  for (size_t j = 0; j < maps.size(); ++j) {
    mdeg.push_back(maps[j]->degree);
    adeg.push_back(args[j].empty() ? 0 : spaces[j]->deg_of(args[j]));
  }
  TensorApplyResult out;
  out.sign = tensor_apply_sign(mdeg, adeg);
  for (size_t j = 0; j < maps.size(); ++j) out.factors.push_back(maps[j]->apply(args[j]));
  return out;
}

int op_suspension_sign(int n, int j, int m) {
  (void)n;
  return sign_pow(static_cast<long long>(j - 1) * (1 - m));
}

int dual_suspension_sign(int n) {
  return sign_pow(static_cast<long long>(n) * (n - 1) / 2);
}

SortedWithSign koszul_sort(const std::vector<std::string>& keys,
                           const std::vector<int>& degrees) {
  // Insertion sort, tracking the Koszul sign of each adjacent swap.
  SortedWithSign out{keys, 1};
  std::vector<int> degs = degrees;
  long long exponent = 0;
  for (size_t i = 1; i < out.keys.size(); ++i)
    for (size_t j = i; j > 0 && out.keys[j] < out.keys[j - 1]; --j) {
      exponent += static_cast<long long>(degs[j]) * degs[j - 1];
      std::swap(out.keys[j], out.keys[j - 1]);
      std::swap(degs[j], degs[j - 1]);
    }
  out.sign = sign_pow(exponent);
  for (size_t i = 0; i + 1 < out.keys.size(); ++i)
    if (out.keys[i] == out.keys[i + 1] && (degs[i] % 2 != 0)) {
      out.sign = 0;
      break;
    }
  return out;
}

}  // namespace mct

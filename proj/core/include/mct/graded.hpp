#pragma once

// Finite-basis graded vector spaces over exact rationals, linear maps
// between them, and the Koszul sign calculus.
//
// Conventions (used consistently across the whole library):
//   * chain convention: differentials have degree -1;
//   * Koszul rule: swapping adjacent homogeneous factors v, w costs
//     (-1)^{|v||w|}; applying a tensor product of maps costs
//     (f1 (x) f2)(v1 (x) v2) = (-1)^{|f2||v1|} f1(v1) (x) f2(v2).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mct/scalar.hpp"

namespace mct {

// ------------------------------------------------------------------ vectors

// Sparse vector: basis id -> coefficient. Zero coefficients are pruned.
using Vec = std::map<std::string, Scalar>;

void vec_add(Vec& target, const std::string& id, const Scalar& c);
void vec_add(Vec& target, const Vec& src, const Scalar& c = 1);
Vec vec_added(Vec a, const Vec& b, const Scalar& c = 1);
Vec vec_scale(const Vec& v, const Scalar& c);
Vec vec_sub(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);
Scalar vec_coeff(const Vec& v, const std::string& id);
std::string vec_to_string(const Vec& v);

// ------------------------------------------------------------------ spaces

struct BasisElement {
  std::string id;
  int deg = 0;
  int weight = 0;  // filtration weight; 0 when the space is unfiltered
};

// A finite-basis graded (optionally weight-filtered) vector space.
struct GradedSpace {
  std::vector<BasisElement> basis;

  int deg(const std::string& id) const;
  int weight(const std::string& id) const;
  bool contains(const std::string& id) const;
  std::vector<std::string> ids() const;
  std::vector<std::string> ids_in_degree(int d) const;

  // Degree of a homogeneous vector; throws if v mixes degrees.
  int deg_of(const Vec& v) const;

 private:
  mutable std::map<std::string, std::pair<int, int>> index_;
  void ensure_index() const;
};

// Shift every degree by k. Basis ids are unchanged; the caller is
// responsible for remembering which incarnation an id lives in.
GradedSpace suspend(const GradedSpace& space, int k);

// ------------------------------------------------------------------ maps

// Homogeneous linear map given on basis elements; ids missing from
// `images` map to zero.
struct GMap {
  int degree = 0;
  std::map<std::string, Vec> images;

  Vec apply(const Vec& v) const;
  Vec apply_basis(const std::string& id) const;
};

GMap gmap_compose(const GMap& outer, const GMap& inner);      // outer o inner
GMap gmap_add(const GMap& a, const GMap& b);
GMap gmap_scale(const GMap& a, const Scalar& c);
GMap gmap_identity(const GradedSpace& space);
bool gmap_equal(const GMap& a, const GMap& b);

// Checks that d is homogeneous of degree -1 on `space` an that d o d = 0.
// Returns an error description, or nullopt when everything holds.
std::optional<std::string> check_complex(const GradedSpace& space, const GMap& d);

// ------------------------------------------------------------------ signs

// Koszul sign of the permutation sending (x_0,...,x_{n-1}) to
// (x_{perm[0]},...,x_{perm[n-1]}) where x_i has degree degrees[i]:
// the product of (-1)^{|x_a||x_b|} over all inversions.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

// Sign incurred when applying f_1 (x) ... (x) f_k to v_1 (x) ... (x) v_k:
// each f_j moves past v_1,...,v_{j-1}.
int tensor_apply_sign(const std::vector<int>& map_degrees,
                      const std::vector<int>& arg_degrees);

// Apply f_1 (x) ... (x) f_k to a list of homogeneous vectors with the
// Koszul sign above. spaces[j] grades args[j]. Returns the list of image
// vectors together with the overall sign folded into the first nonzero
// factor; as a convenience the sign is also returned.
struct TensorApplyResult {
  std::vector<Vec> factors;
  int sign = 1;
};
TensorApplyResult tensor_apply(const std::vector<const GMap*>& maps,
                               const std::vector<Vec>& args,
                               const std::vector<const GradedSpace*>& spaces);

// Sign (-1)^{(j-1)(1-m)} of the operadic suspension composition
// S_n o_j S_m = sign * S_{n+m-1}; the same rule governs S^{-1}.
int op_suspension_sign(int n, int j, int m);

// Sign (-1)^{n(n-1)/2} carried by the dual of the n-fold suspension.
int dual_suspension_sign(int n);

// Canonical sort of homogeneous factors: stable-sorts `keys` and returns
// the Koszul sign of the rearrangement, or 0 if two equal keys have odd
// degree (the factor is then zero by graded symmetry).
struct SortedWithSign {
  std::vector<std::string> keys;
  int sign;  // 0 means "the symmetrized element vanishes"
};
SortedWithSign koszul_sort(const std::vector<std::string>& keys,
                           const std::vector<int>& degrees);

}  // namespace mct

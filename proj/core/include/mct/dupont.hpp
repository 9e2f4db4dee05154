#pragma once

// Polynomial differential forms on the n-simplex with exact rational
// coefficients, the Whitney elementary forms, and the explicit simplicial
// contraction (p, i, h) of the forms onto the Whitney complex.
//
// Coordinates: t_1..t_n are independent; t_0 = 1 - sum t_i is eliminated.
// Chain convention: |t_i| = 0, |dt_i| = -1, so a k-form sits in degree -k
// and the de Rham differential has degree -1.

#include <optional>
#include <vector>

#include "mct/graded.hpp"

namespace mct {

// Monomial t^expts * dt_S; mask bit (v-1) set means dt_v is present, and
// dt factors are stored in ascending variable order.
struct FormMono {
  std::vector<int> expts;
  unsigned mask = 0;

  friend bool operator<(const FormMono& a, const FormMono& b) {
    if (a.mask != b.mask) return a.mask < b.mask;
    return a.expts < b.expts;
  }
  friend bool operator==(const FormMono& a, const FormMono& b) {
    return a.mask == b.mask && a.expts == b.expts;
  }
};

using PolyForm = std::map<FormMono, Scalar>;

struct FormCtx {
  int n = 0;  // simplex dimension = number of free variables
};

PolyForm form_zero();
PolyForm form_const(const FormCtx& ctx, const Scalar& c);
// Barycentric coordinate t_i, i in 0..n (t_0 expands to 1 - sum).
PolyForm form_t(const FormCtx& ctx, int i);
PolyForm form_dt(const FormCtx& ctx, int i);

PolyForm form_add(const PolyForm& a, const PolyForm& b);
PolyForm form_scale(const PolyForm& a, const Scalar& c);
PolyForm form_sub(const PolyForm& a, const PolyForm& b);
bool form_is_zero(const PolyForm& a);

PolyForm wedge(const FormCtx& ctx, const PolyForm& a, const PolyForm& b);
PolyForm form_d(const FormCtx& ctx, const PolyForm& a);

// Chain degree (-k for a k-form); throws on inhomogeneous input.
int form_degree(const PolyForm& a);

// Substitute images[v-1] (a 0-form over tgt) for t_v, and d(images[v-1])
// for dt_v.
PolyForm substitute(const FormCtx& src, const PolyForm& a, const FormCtx& tgt,
                    const std::vector<PolyForm>& images);

// Simplicial structure on forms: face(i): level n -> n-1 (pullback along
// the i-th coface), degeneracy(j): level n -> n+1.
PolyForm face(const FormCtx& ctx, const PolyForm& a, int i);
PolyForm degeneracy(const FormCtx& ctx, const PolyForm& a, int j);

// Integral over the standard simplex of the top-degree part:
// int t_1^{a_1}..t_n^{a_n} dt_1..dt_n = (prod a_i!) / (n + sum a_i)!.
Scalar integrate(const FormCtx& ctx, const PolyForm& a);

// Value of the 0-form part at vertex i.
Scalar eval_vertex(const FormCtx& ctx, const PolyForm& a, int i);

// ------------------------------------------------------ Whitney complex

// Elementary form w_{i0..ik} = k! sum_j (-1)^j t_{ij} dt_{i0}..^j..dt_{ik}.
PolyForm whitney(const FormCtx& ctx, const std::vector<int>& indices);

// The Whitney complex C_n: ids "w<i0><i1>..." for 0<=i0<...<ik<=n, degree -k.
GradedSpace whitney_space(int n);
// d(w_I) = sum_i w_{i I} (indices resorted antisymmetrically).
GMap whitney_d(int n);

// ---------------------------------------------------------- contraction

PolyForm i_map(const FormCtx& ctx, const Vec& w);
Vec p_map(const FormCtx& ctx, const PolyForm& a);
// Elementary homotopy h_(i): pull back along the dilation toward vertex i
// with auxiliary fiber coordinate u, then integrate u over [0,1].
PolyForm h_single(const FormCtx& ctx, const PolyForm& a, int i);
// Full homotopy h_n = sum_{k,i0<..<ik} w_{i0..ik} ^ h_(ik) o .. o h_(i0).
PolyForm h_map(const FormCtx& ctx, const PolyForm& a);

// Checks p i = id, i p - id = d h + h d, p h = 0, h i = 0, h h = 0, and
// compatibility of d with the Whitney differential, on all monomials of
// polynomial degree <= poly_deg_cap (all dt subsets). Returns the first
// violation or nullopt.
std::optional<std::string> verify_contraction(int n, int poly_deg_cap);

// All monomial generators with polynomial degree <= deg_cap.
std::vector<PolyForm> form_monomials(const FormCtx& ctx, int deg_cap);

}  // namespace mct

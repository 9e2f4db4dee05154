#pragma once

// Maurer-Cartan calculus on g (x) Omega_n and g (x) C_n for a finite
// nilpotent (shifted) homotopy Lie algebra g and a fixed simplicial level n:
// membership residuals, the kernel-of-h and thinness tests, the projection /
// inclusion / rectification maps induced by Dupont's contraction, the
// transferred structure on cells (by generic tree transfer and by an
// independent tensor-factorized pipeline), and the free presentations of the
// first interval models.

#include <map>
#include <string>
#include <vector>

#include "mct/dupont.hpp"
#include "mct/freelie.hpp"
#include "mct/htt.hpp"
#include "mct/linfty.hpp"
#include "mct/symalg.hpp"

namespace mct {

// Element of g (x) Omega_n: g-basis id -> polynomial-form coefficient.
using FormVec = std::map<std::string, PolyForm>;

struct TensorAlg {
  const SLInfty* g = nullptr;
  FormCtx ctx;  // simplicial level n
};

FormVec fv_elem(const std::string& id, const PolyForm& f);
FormVec fv_add(const FormVec& a, const FormVec& b, const Scalar& c);
FormVec fv_scale(const FormVec& a, const Scalar& c);
bool fv_is_zero(const FormVec& a);
bool fv_equal(const FormVec& a, const FormVec& b);
// Total degree |x| + |f| of a homogeneous element; throws when mixed.
int fv_degree(const TensorAlg& alg, const FormVec& a);

// Brackets of the tensor structure:
//   l_1(x (x) f) = l_1 x (x) f + (-1)^{|x|} x (x) df,
//   l_m(x_1 (x) f_1, ...) = +- l_m(x_1..x_m) (x) (f_1 ^ ... ^ f_m)
// with the Koszul interchange sign sum_{i<j} |f_i||x_j|.
FormVec tensor_ell(const TensorAlg& alg, int m, const std::vector<FormVec>& args);

// Residual l_1 x + sum_{m>=2} (1/m!) l_m(x,..,x); zero iff x is MC.
FormVec mc_membership(const TensorAlg& alg, const FormVec& x);

// (1 (x) h)(x (x) f) = (-1)^{|x|} x (x) h f, and the two projections.
FormVec fv_h(const TensorAlg& alg, const FormVec& x);
FormVec cell_to_form(const TensorAlg& alg, const Vec& cell);  // 1 (x) i
Vec form_to_cell(const TensorAlg& alg, const FormVec& x);     // 1 (x) p

// Finite space of cells g (x) C_n with ids "<gid>|<wid>".
GradedSpace cell_space(const SLInfty& g, int n);

// Getzler conditions: member of the kernel of 1 (x) h, and thinness
// (vanishing top-form integral), both on MC elements.
bool gamma_membership(const TensorAlg& alg, const FormVec& x);
bool thin_check(const TensorAlg& alg, const FormVec& x);

// Contraction of g (x) Omega_n onto g (x) C_n for the generic transfer.
SymContraction<FormVec> tensor_contraction(const TensorAlg& alg);

// Pipeline 1: transferred brackets on cells via generic tree transfer.
SLInfty transfer_cells(const TensorAlg& alg, int arity_cap);

// Pipeline 2: the same brackets computed independently, factorizing every
// labeled tree into a g-side bracket word and a form-side p-tree^h-i
// composite, with the interchange signs tracked recursively.
Vec tensor_pipeline_op(const TensorAlg& alg, int arity,
                       const std::vector<std::string>& cell_ids);
SLInfty tensor_pipeline_cells(const TensorAlg& alg, int arity_cap);

// MC projection / inclusion / rectification. P is the pushforward along the
// transferred projection; I is the MC image of the inclusion
// infinity-morphism (i_1 = 1 (x) i, i_m = sum over trees of h-composites);
// Rect = I o P.
Vec P_map(const TensorAlg& alg, const FormVec& x, int arity_cap);
FormVec I_map(const TensorAlg& alg, const Vec& beta, int arity_cap);
FormVec rect(const TensorAlg& alg, const FormVec& x, int arity_cap);

// ------------------------------------------------- interval presentations

// Free Lie model of the point: one generator a of degree -1 with
// d a = -1/2 [a, a].
struct MC0 {
  FreeLieCtx ctx;
  LieDerivation d;
  TensorElt alpha;
};
MC0 build_mc0(int cap);

// Free Lie model of the interval (two MC generators and a gauge between
// them): the Lawrence-Sullivan algebra.
IntervalLie build_mc1(int cap);

// Free homotopy model of the point: one shifted degree-0 generator with
// d alpha = -sum_{m>=2} (1/m!) l_m(alpha,..,alpha).
struct MCInf0 {
  SymCtx ctx;
  SymElt alpha;
  SymElt d_alpha;
};
MCInf0 build_mcinf0(int weight_cap);

// Free homotopy model of the interval: generators alpha_0, alpha_1 (shifted
// degree 0) and lambda (degree 1); d lambda computed both by the
// tree fixed-point equation and by the decorated-tree closed form.
struct MCInf1 {
  SymCtx ctx;  // generator 0 = alpha_0, 1 = alpha_1, 2 = lambda
  SymElt d_lambda_fixed_point;
  SymElt d_lambda_gsum;
  bool agree = false;
};
MCInf1 build_mcinf1(int weight_cap, int bracket_arity_cap = 16);

// Correspondence between morphism data on the interval models and MC cells:
// images (a_0, a_1, l) of the Lawrence-Sullivan generators in a strict
// nilpotent shifted Lie algebra g correspond to the cell
// a_0 (x) w0 + a_1 (x) w1 + l (x) w01 of g (x) C_1.
Vec hom_to_cell(const SLInfty& g, const Vec& a0, const Vec& a1, const Vec& l);
void cell_to_hom(const SLInfty& g, const Vec& cell, Vec& a0, Vec& a1, Vec& l);

}  // namespace mct

#pragma once

// Convolution homotopy-Lie structures on hom(C, A) for a conilpotent
// coalgebra C and a (shifted) homotopy Lie algebra A, the equivalence of
// the Maurer-Cartan equation with the twisting-morphism equation, the
// polynomial fixture family A^n with its homology contraction, and the
// explicit two-composite computation showing that pre- and post-composition
// with infinity-morphisms do not assemble into a bifunctor.

#include <map>
#include <string>
#include <vector>

#include "mct/graded.hpp"
#include "mct/htt.hpp"
#include "mct/linfty.hpp"

namespace mct {

// Conilpotent coalgebra with explicit decomposition components
// Delta_n : C -> C^{x n} given on the basis as signed tensor words.
struct ConilCoalg {
  GradedSpace space;
  GMap d;  // internal differential (may be zero)
  // delta[n][basis id] = list of (word, coefficient); n >= 2.
  std::map<int, std::map<std::string, std::vector<std::pair<std::vector<std::string>, Scalar>>>>
      delta;

  int max_arity() const;
};

struct ConvAlg {
  ConilCoalg C;
  const SLInfty* A = nullptr;
};

// Polarized convolution operation: sum over permutations s of the f_i
// (with Koszul signs) of ell_n^A ( f_{s(1)} x ... x f_{s(n)} ) Delta_n.
// On equal arguments this equals n! times the one-pass composite.
GMap conv_op(const ConvAlg& cv, const std::vector<GMap>& fs);

// Differential of the convolution algebra: del f = l_1^A f - (-1)^{|f|} f d_C.
GMap conv_del(const ConvAlg& cv, const GMap& f);

// The finite convolution homotopy Lie algebra on hom(C, A): basis elements
// are the elementary maps c |-> a. Arity-n bracket = (1/n!) conv_op on
// polarized elementary maps.
SLInfty conv_slinfty(const ConvAlg& cv, int arity_cap);

struct TwResult {
  GMap residual_mc;  // del phi + sum_n (1/n!) conv_op(phi,..,phi)
  GMap residual_tw;  // del phi + one-pass star_alpha(phi)
  bool equal = false;
};

// Compares the Maurer-Cartan residual of phi (through the polarized
// convolution brackets) with the twisting-morphism residual (one-pass
// composite over the full decomposition). phi must have degree 0.
TwResult mc_equals_tw(const ConvAlg& cv, const GMap& phi);

// ------------------------------------------------ the fixture family A^n

// Truncated augmentation ideal of k[x, y] with |x| = 0, |y| = 1, y^2 = 0,
// d(y) = x^n; monomial ids "x<a>" (a >= 1) and "x<a>y" (a >= 0) with
// a <= deg_cap. Homology is spanned by "z<a>" for 1 <= a < n.
struct AnFixture {
  int n = 2;
  int deg_cap = 6;
  GradedSpace big;    // monomial basis of the truncated ideal
  GradedSpace small;  // homology basis z<a>
  GMap d, i, p, h;

  Vec multiply(const Vec& u, const Vec& v) const;  // truncated product
};

AnFixture build_An(int n, int deg_cap);

// Non-symmetric contraction adapter for the transfer machinery.
NsContraction<Vec> an_ns_contraction(const AnFixture& fx);

// ------------------------------------------------ bifunctor counterexample

struct CounterexampleResult {
  Vec first;   // post-then-pre composite applied to v_4: expected -x^3
  Vec second;  // pre-then-post composite applied to v_4: expected 0
};

// Evaluates the two composites of hom_l(Phi, 1) and hom_r(1, i_oo) on the
// bar-side element mu_3 x (f_1 x f_2 x f_3) at v_4, for A = A^2 and the
// coalgebra V with Delta(v_i) = sum_{j+k=i-1} (-1)^j v_j x v_k.
// With trivial = true, Phi is replaced by the identity morphism and i_oo by
// its strict linear part; the two composites then agree.
CounterexampleResult counterexample_run(bool trivial = false);

}  // namespace mct

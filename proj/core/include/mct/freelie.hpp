#pragma once

// Complete free graded Lie algebras, realized inside the completed tensor
// algebra on graded generators and truncated at a fixed word length. This
// hosts exact BCH computations, gauge flows in closed exponential form, and
// the free complete Lie algebra of the interval (two Maurer-Cartan
// generators joined by a gauge generator).

#include <map>
#include <vector>

#include "mct/graded.hpp"

namespace mct {

// A word in the generators, e.g. {0,1,0} = g0 g1 g0.
using Word = std::vector<int>;

// Element of the truncated tensor algebra: word -> coefficient. The empty
// word is the unit.
using TensorElt = std::map<Word, Scalar>;

struct FreeLieCtx {
  std::vector<int> gen_degrees;
  int cap = 4;  // words longer than cap are truncated away

  int word_degree(const Word& w) const;
};

TensorElt fl_gen(int index);
TensorElt fl_zero();
TensorElt fl_add(const TensorElt& a, const TensorElt& b);
TensorElt fl_scale(const TensorElt& a, const Scalar& c);
TensorElt fl_sub(const TensorElt& a, const TensorElt& b);
bool fl_is_zero(const TensorElt& a);

// Truncated concatenation product.
TensorElt fl_mul(const FreeLieCtx& ctx, const TensorElt& a, const TensorElt& b);

// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba (per homogeneous word).
TensorElt bracket(const FreeLieCtx& ctx, const TensorElt& a, const TensorElt& b);

// exp / log of (resp. around) the unit; defined for arguments all of whose
// words have even degree and positive length.
TensorElt fl_exp(const FreeLieCtx& ctx, const TensorElt& a);
TensorElt fl_log(const FreeLieCtx& ctx, const TensorElt& a);

// Baker-Campbell-Hausdorff product log(exp(a) exp(b)), truncated at the
// context cap.
TensorElt bch(const FreeLieCtx& ctx, const TensorElt& a, const TensorElt& b);

// Degree -1 derivation given on generators and extended by the graded
// Leibniz rule.
struct LieDerivation {
  std::vector<TensorElt> gen_images;

  TensorElt apply(const FreeLieCtx& ctx, const TensorElt& a) const;
};

// Is d^2 = 0 on all generators (hence everywhere)?
bool derivation_squares_to_zero(const FreeLieCtx& ctx, const LieDerivation& d);

// Gauge flow of the Maurer-Cartan element x0 under the degree-0 element
// lambda, in closed exponential form at time t:
//   x(t) = e^{t ad}(x0) + sum_{n>=1} (t^n/n!) ad^{n-1}(d lambda),
// where ad(y) = [y, lambda].
TensorElt gauge_closed_form(const FreeLieCtx& ctx, const TensorElt& lambda,
                            const TensorElt& x0, const LieDerivation& d,
                            const Scalar& t);

// Maurer-Cartan residual d(x) + (1/2)[x, x].
TensorElt mc_residual_lie(const FreeLieCtx& ctx, const LieDerivation& d,
                          const TensorElt& x);

// Bernoulli numbers via exact inversion of the series (e^t - 1)/t.
Scalar bernoulli(unsigned n);

// Free complete Lie algebra of the interval: generators x0, x1 of degree -1
// and lambda of degree 0, with d(x_i) = -(1/2)[x_i, x_i] and d(lambda)
// determined by the Bernoulli series so that the time-1 gauge flow of x0
// along lambda is exactly x1.
struct IntervalLie {
  FreeLieCtx ctx;
  TensorElt x0, x1, lambda;
  LieDerivation d;
};
IntervalLie lawrence_sullivan(int cap);

// Does every weight component of `a` lie in the span of iterated brackets
// of the generators (i.e. is `a` a Lie element)?
bool is_primitive(const FreeLieCtx& ctx, const TensorElt& a);

// Spanning set of the weight-w Lie component: right-normed bracketings
// [g_{i1},[g_{i2},[...,g_{iw}]]] over all words of length w.
std::vector<TensorElt> lie_spanning_set(const FreeLieCtx& ctx, int w);

}  // namespace mct

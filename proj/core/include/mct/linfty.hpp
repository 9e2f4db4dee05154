#pragma once

// Shifted homotopy Lie structures on finite graded bases.
//
// Everything is kept in the shifted convention: the n-ary brackets are
// graded-symmetric of degree -1 (the unary bracket is the differential),
// the generalized Jacobi relations read
//   sum_{n1+n2=n+1} sum_{(n1,n2-1)-shuffles s} koszul(s) *
//     l_{n2}(l_{n1}(x_{s1..s n1}), x_{s(n1+1)..sn}) = 0,
// Maurer-Cartan elements have degree 0, and infinity-morphism components
// have degree 0. Classical (unshifted) data enters through the suspension
// dictionary at the boundary (suspend_lie below).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mct/graded.hpp"

namespace mct {

// Symmetric multilinear operation table: canonical (sorted) basis tuple ->
// value. Lookup of an arbitrary tuple Koszul-sorts it first.
using SymTable = std::map<std::vector<std::string>, Vec>;

struct SLInfty {
  GradedSpace space;
  int arity_cap = 2;
  std::map<int, SymTable> ops;  // arity -> table; ops[1] is the differential

  // l_n on a basis tuple given in any order (Koszul signs applied).
  Vec apply_basis(int n, const std::vector<std::string>& args) const;
  // Multilinear extension to sparse vectors.
  Vec apply(int n, const std::vector<Vec>& args) const;
  // Record l_n(args) = value; `args` may be unsorted, the table stores the
  // canonical representative.
  void set_op(int n, const std::vector<std::string>& args, const Vec& value);

  GMap differential() const;
};

// Homogeneity (degree -1) and the generalized Jacobi relations for all
// arities up to n_max, checked on every canonical basis tuple. Returns a
// description of the first violation, or nullopt.
std::optional<std::string> check_relations(const SLInfty& A, int n_max);

// d(x) + sum_{n>=2} (1/n!) l_n(x,...,x).
Vec mc_residual(const SLInfty& A, const Vec& x);

// Structure twisted by a Maurer-Cartan element alpha:
//   l^a_m(x_1..x_m) = sum_{j>=0} (1/j!) l_{m+j}(a,...,a,x_1..x_m).
SLInfty twist(const SLInfty& A, const Vec& alpha);

// Time-1 gauge flow of x0 along the degree-1 element lambda, i.e. the exact
// polynomial solution of  x' = d(lambda) + sum_{n>=2} 1/(n-1)! l_n(x..x,lambda)
// truncated at t-degree t_deg_cap and evaluated at t = 1.
Vec gauge_flow(const SLInfty& A, const Vec& lambda, const Vec& x0, int t_deg_cap);

// Coefficients of the same flow as a t-polynomial (index = t-degree).
std::vector<Vec> gauge_flow_series(const SLInfty& A, const Vec& lambda,
                                   const Vec& x0, int t_deg_cap);

// ------------------------------------------------------- infinity-morphisms

// Component family of an infinity-morphism (or any symmetric formal map):
// degree-0 graded-symmetric components comps[n]: source^n -> target.
struct InfMorphism {
  GradedSpace source, target;
  int arity_cap = 1;
  std::map<int, SymTable> comps;

  Vec apply_basis(int n, const std::vector<std::string>& args) const;
  Vec apply(int n, const std::vector<Vec>& args) const;
  void set_comp(int n, const std::vector<std::string>& args, const Vec& value);
};

InfMorphism inf_identity(const GradedSpace& space);

// MC pushforward: MC(Phi)(x) = sum_{n>=1} (1/n!) phi_n(x,...,x).
Vec mc_pushforward(const InfMorphism& phi, const Vec& x);

// Composite of formal maps: (Psi o Phi)_n = sum over set partitions of the
// inputs into blocks, psi applied to the per-block phi values, with Koszul
// signs from regrouping the inputs.
InfMorphism compose_inf(const InfMorphism& psi, const InfMorphism& phi);

// Twist of a morphism by a Maurer-Cartan element alpha of the source:
//   phi^a_k(x_1..x_k) = sum_{j>=0} (1/j!) phi_{k+j}(a,..,a,x_1..x_k).
InfMorphism twist_inf(const InfMorphism& phi, const Vec& alpha);

// Checks the infinity-morphism relations of phi between A and B up to
// arity n_max (on canonical basis tuples).
std::optional<std::string> check_inf_morphism(const SLInfty& B, const SLInfty& A,
                                              const InfMorphism& phi, int n_max);

// ------------------------------------------------------ classical boundary

// Classical (unshifted) dg Lie data: chain differential of degree -1 and a
// graded-antisymmetric bracket given as a callback on basis ids.
struct ClassicalLie {
  GradedSpace space;  // classical degrees
  GMap d;
  std::function<Vec(const std::string&, const std::string&)> bracket;
};

// Suspension dictionary: produces the shifted structure on the same ids
// with degrees raised by one; l_2(sx, sy) = (-1)^{|x|} s[x, y].
SLInfty suspend_lie(const ClassicalLie& lie);

// Free nilpotent Lie algebra on graded generators, truncated above weight
// `cap`, delivered as a shifted structure together with the chosen basis
// (ids "w{weight}_{index}", weights recorded in the space).
struct FreeNilpotentLie {
  SLInfty algebra;                   // shifted
  std::vector<std::string> gen_ids;  // images of the generators
};
FreeNilpotentLie freelie_to_slinfty(const std::vector<int>& gen_degrees, int cap);

}  // namespace mct

#pragma once

// Classical deformation complexes over an ungraded finite-dimensional
// vector space: the Hochschild complex with the Gerstenhaber bracket (an
// n-cochain sits in degree n-1), and the Chevalley-Eilenberg complex of
// alternating cochains with the Nijenhuis-Richardson bracket. Here
// "ungraded" means the underlying space is concentrated in degree 0; the
// cochain gradings above are by arity.

#include <map>
#include <optional>
#include <vector>

#include "mct/graded.hpp"

namespace mct {

// Ordered multilinear map A^{x n} -> A on basis tuples.
struct MultiMap {
  int arity = 1;
  std::map<std::vector<std::string>, Vec> table;

  Vec apply_basis(const std::vector<std::string>& args) const;
  Vec apply(const std::vector<Vec>& args) const;
};

// Gerstenhaber bracket [f, g] = f o g - (-1)^{(n-1)(m-1)} g o f with
// (f o g)(x_1..) = sum_i (-1)^{(i-1)(m-1)} f(x_1,..,g(x_i,..),..).
MultiMap gerstenhaber(const GradedSpace& A, const MultiMap& f, const MultiMap& g);

// Hochschild differential of an n-cochain f with respect to a candidate
// product m:
//   d(f)(a_1..a_{n+1}) = m(a_1, f(a_2..a_{n+1}))
//     + sum_k (-1)^k f(a_1,..,m(a_k,a_{k+1}),..,a_{n+1})
//     + (-1)^{n+1} m(f(a_1..a_n), a_{n+1}).
MultiMap hoch_differential(const GradedSpace& A, const MultiMap& m, const MultiMap& f);

// (1/2)[m, m] as a 3-cochain; zero iff m is associative.
MultiMap assoc_residual(const GradedSpace& A, const MultiMap& m);
bool is_mc_associative(const GradedSpace& A, const MultiMap& m);
// Direct check m(m(a,b),c) = m(a,m(b,c)) on all basis triples.
bool is_associative_direct(const GradedSpace& A, const MultiMap& m);

// Trivial first-order deformation induced by a linear map g:
//   f_T(x, y) = g(m(x, y)) - m(g(x), y) - m(x, g(y)).
MultiMap trivial_deformation(const GradedSpace& A, const MultiMap& m,
                             const MultiMap& g);

// First-order deformation condition: m + eps f associative mod eps^2, i.e.
// d_m(f) = 0 (f a 2-cochain).
bool infinitesimal_deformation_check(const GradedSpace& A, const MultiMap& m,
                                     const MultiMap& f);

// ------------------------------------------------ Chevalley-Eilenberg side

// Alternating multilinear map: stored on strictly increasing basis tuples,
// evaluated with the sign of the sorting permutation; repeated arguments
// give zero. (Values and arguments all in degree 0.)
struct AltMap {
  int arity = 1;
  std::map<std::vector<std::string>, Vec> table;

  Vec apply_basis(const std::vector<std::string>& args) const;
  Vec apply(const std::vector<Vec>& args) const;
  void set(const std::vector<std::string>& args, const Vec& value);
};

// Differential of an n-cochain f with respect to an alternating candidate
// bracket b:
//   d(f)(x_0..x_n) = sum_k (-1)^k b(x_k, f(..no x_k..))
//     + sum_{i<j} (-1)^{i+j} f(b(x_i,x_j), x_0..no x_i..no x_j..x_n).
AltMap chevalley_eilenberg(const GradedSpace& A, const AltMap& b, const AltMap& f);

// Nijenhuis-Richardson bracket: [f, g] = f o g - (-1)^{(n-1)(m-1)} g o f,
// (f o g)(x_1..x_{n+m-1}) = sum over (m, n-1)-shuffles s of
//   sgn(s) f(g(x_{s(1)}..x_{s(m)}), x_{s(m+1)}..).
AltMap nijenhuis_richardson(const GradedSpace& A, const AltMap& f, const AltMap& g);

// Jacobi residual (1/2)[b, b]; zero iff b satisfies the Jacobi identity.
AltMap jacobi_residual(const GradedSpace& A, const AltMap& b);

}  // namespace mct

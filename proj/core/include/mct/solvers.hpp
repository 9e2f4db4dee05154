#pragma once

// Formal fixed-point and formal ODE solvers over an arbitrary coefficient
// module. Both are generic in the element type E; callers supply the module
// operations through an Ops object:
//
//   struct Ops { E zero(); E add(a, b); E scale(Scalar, a); bool equal(a, b); };
//
// All equations are understood in a complete filtered setting where every
// supplied operator raises the filtration, so the iterations below terminate
// exactly (the caller's arithmetic performs the truncation).

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mct/graded.hpp"
#include "mct/trees.hpp"

namespace mct {

template <class E>
using Multilinear = std::function<E(const std::vector<E>&)>;

// ------------------------------------------------------------- fixed point

// x = p0 + sum_j ops[j](x), each ops[j] raising the filtration by >= 1.
template <class E>
struct FPEq {
  E p0;
  std::vector<std::function<E(const E&)>> ops;
  int max_iter = 64;
};

template <class E, class Ops>
E solve_fixed_point(const FPEq<E>& eq, const Ops& m) {
  E v = eq.p0;
  for (int it = 0; it < eq.max_iter; ++it) {
    E next = eq.p0;
    for (const auto& op : eq.ops) next = m.add(next, op(v));
    if (m.equal(next, v)) return next;
    v = std::move(next);
  }
  throw std::runtime_error("solve_fixed_point: no convergence (operator not filtered?)");
}

// -------------------------------------------------------------- formal ODE

// dv/dt = sum over (n, k) of t^k * f_{n,k}(v, ..., v), v(0) = v0.
// f_{n,k} is n-multilinear; n = 0 terms are constants (evaluated on {}).
template <class E>
struct FODE {
  E v0;
  std::map<std::pair<int, int>, Multilinear<E>> terms;
};

namespace detail {

// Sum f(c_{m_1},...,c_{m_n}) over all compositions m_1+...+m_n = m drawn
// from the already-known coefficients c_0..c_avail.
template <class E, class Ops>
void add_diagonal_terms(const Multilinear<E>& f, int n, int m,
                        const std::vector<E>& coeffs, const Ops& ops,
                        std::vector<E>& picked, E& acc) {
  if (n == 0) {
    if (m == 0) acc = ops.add(acc, f(picked));
    return;
  }
  for (int first = 0; first <= m; ++first) {
    if (first >= static_cast<int>(coeffs.size())) break;
    picked.push_back(coeffs[first]);
    add_diagonal_terms(f, n - 1, m - first, coeffs, ops, picked, acc);
    picked.pop_back();
  }
}

}  // namespace detail

// Power-series coefficients v(t) = sum_m out[m] t^m up to degree t_deg_cap,
// by the textbook recursive integration scheme.
template <class E, class Ops>
std::vector<E> solve_ode_recursive(const FODE<E>& ode, int t_deg_cap, const Ops& ops) {
  std::vector<E> c{ode.v0};
  for (int m = 0; m < t_deg_cap; ++m) {
    E rhs = ops.zero();
    for (const auto& [nk, f] : ode.terms) {
      auto [n, k] = nk;
      if (k > m) continue;
      std::vector<E> picked;
      detail::add_diagonal_terms(f, n, m - k, c, ops, picked, rhs);
    }
    c.push_back(ops.scale(Scalar(1) / Scalar(m + 1), rhs));
  }
  return c;
}

namespace detail {

template <class E, class Ops>
E eval_wptree(const WPTree& t, const E& v0,
              const std::map<std::pair<int, int>, Multilinear<E>>& terms,
              const Ops& ops) {
  if (t.empty) return v0;
  auto it = terms.find({t.arity(), t.weight - 1});
  if (it == terms.end())
    throw std::runtime_error("eval_wptree: vertex with no matching operator");
  std::vector<E> args;
  for (const auto& c : t.children) args.push_back(eval_wptree(c, v0, terms, ops));
  return it->second(args);
}

}  // namespace detail

// Same series via the weighted-planar-tree expansion: the t^w coefficient is
// the sum over trees of weight w of (1/F(tree)) * tree(v0).
template <class E, class Ops>
std::vector<E> solve_ode_trees(const FODE<E>& ode, int t_deg_cap, const Ops& ops) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [nk, f] : ode.terms) pairs.push_back({nk.first, nk.second + 1});
  std::vector<E> out(t_deg_cap + 1, ops.zero());
  out[0] = ode.v0;  // the empty tree
  for (const auto& t : enumerate_wptrees(t_deg_cap, pairs)) {
    int w = coeff_W(t);
    E val = detail::eval_wptree(t, ode.v0, ode.terms, ops);
    out[w] = ops.add(out[w], ops.scale(Scalar(1) / coeff_F(t), val));
  }
  return out;
}

// Evaluate a coefficient list at a scalar value of t.
template <class E, class Ops>
E eval_series(const std::vector<E>& coeffs, const Scalar& t, const Ops& ops) {
  E out = ops.zero();
  Scalar tp = 1;
  for (const auto& c : coeffs) {
    out = ops.add(out, ops.scale(tp, c));
    tp *= t;
  }
  return out;
}

// Ops instance for the sparse Vec type.
struct VecOps {
  Vec zero() const { return {}; }
  Vec add(const Vec& a, const Vec& b) const {
    Vec out = a;
    vec_add(out, b, 1);
    return out;
  }
  Vec scale(const Scalar& c, const Vec& v) const { return vec_scale(v, c); }
  bool equal(const Vec& a, const Vec& b) const { return a == b; }
};

}  // namespace mct

#pragma once

// Homotopy transfer along a contraction (p, i, h), via tree summation.
//
// Everything is in the shifted convention (brackets of degree -1, homotopy
// h of degree +1). A composite h o tree^h then has degree 0, so the
// bottom-up evaluation of a tree needs no distribution signs; the only
// Koszul signs are (a) the rearrangement of the inputs into the leaf order
// of a labeled tree and (b) the graded symmetry of the brackets themselves,
// which the callers' bracket evaluators implement.

#include <functional>
#include <optional>

#include "mct/graded.hpp"
#include "mct/linfty.hpp"
#include "mct/solvers.hpp"
#include "mct/trees.hpp"

namespace mct {

// ------------------------------------------------- generic symmetric case

// Ambient structure on the big side; Big is any module element type.
template <class Big>
struct SymTransferCtx {
  std::function<Big(int, const std::vector<Big>&)> ell;  // graded-symmetric
  std::function<Big(const Big&)> h;
  std::function<int(const Big&)> deg;  // degree of a homogeneous element
  std::function<bool(const Big&)> is_zero;
  std::function<Big()> zero;
  std::function<Big(const Big&, const Big&)> add;
  std::function<Big(const Scalar&, const Big&)> scale;
  int arity_cap = 2;
};

namespace detail {

template <class Big>
Big tree_value(const SymTransferCtx<Big>& ctx, const LTree& t,
               const std::vector<Big>& leaf_inputs) {
  std::vector<Big> args;
  for (const auto& c : t.children) {
    if (c.is_leaf())
      args.push_back(leaf_inputs[c.label - 1]);
    else
      args.push_back(ctx.h(tree_value(ctx, c, leaf_inputs)));
  }
  return ctx.ell(static_cast<int>(args.size()), args);
}

inline void leaf_order(const LTree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.label - 1);
    return;
  }
  for (const auto& c : t.children) leaf_order(c, out);
}

}  // namespace detail

// Evaluate tree^h on inputs given in label order (inputs already on the big
// side, i.e. any i has been applied by the caller). The Koszul sign of
// rearranging the inputs into the tree's leaf order is applied.
template <class Big>
Big tau_h_eval(const SymTransferCtx<Big>& ctx, const LTree& t,
               const std::vector<Big>& leaf_inputs,
               const std::vector<int>& leaf_degrees) {
  std::vector<int> perm;
  detail::leaf_order(t, perm);
  int sign = koszul_sign(perm, leaf_degrees);
  if (sign == 0) return ctx.zero();
  return ctx.scale(Scalar(sign), detail::tree_value(ctx, t, leaf_inputs));
}

// Contraction of the big side onto a finite graded basis.
template <class Big>
struct SymContraction {
  SymTransferCtx<Big> big;
  GradedSpace small;
  std::function<Big(const std::string&)> i_basis;
  std::function<Vec(const Big&)> p;
};

namespace detail {

inline std::vector<std::vector<std::string>> small_tuples(const GradedSpace& space,
                                                          int n) {
  std::vector<std::string> ids = space.ids();
  std::sort(ids.begin(), ids.end());
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (size_t i = start; i < ids.size(); ++i) {
      current.push_back(ids[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

// Transferred structure: l_1 = p l_1 i, and for n >= 2
//   l_n = sum over reduced leaf-labeled rooted trees of p o tree^h o i^{x n}.
template <class Big>
SLInfty transfer_slinfty(const SymContraction<Big>& C, int arity_cap) {
  SLInfty out;
  out.space = C.small;
  out.arity_cap = arity_cap;
  for (const auto& b : C.small.basis) {
    Vec v = C.p(C.big.ell(1, {C.i_basis(b.id)}));
    if (!vec_is_zero(v)) out.set_op(1, {b.id}, v);
  }
  for (int n = 2; n <= arity_cap; ++n) {
    auto trees = enumerate_rooted(n);
    for (const auto& tuple : detail::small_tuples(C.small, n)) {
      std::vector<Big> inputs;
      std::vector<int> degs;
      for (const auto& id : tuple) {
        inputs.push_back(C.i_basis(id));
        degs.push_back(C.small.deg(id));
      }
      Vec value;
      for (const auto& t : trees) {
        Big term = tau_h_eval(C.big, t, inputs, degs);
        if (!C.big.is_zero(term)) value = vec_added(value, C.p(term), Scalar(1));
      }
      if (!vec_is_zero(value)) out.set_op(n, tuple, value);
    }
  }
  return out;
}

// Components of the infinity-quasi-isomorphism from small to big:
// phi_1 = i, phi_n = sum over trees of h o tree^h o i^{x n}. The big side
// must admit a finite basis (big_space) for the result to be tabulated.
template <class Big>
InfMorphism i_infinity(const SymContraction<Big>& C, const GradedSpace& big_space,
                       std::function<Vec(const Big&)> to_vec, int arity_cap) {
  InfMorphism out;
  out.source = C.small;
  out.target = big_space;
  out.arity_cap = arity_cap;
  for (const auto& b : C.small.basis)
    out.set_comp(1, {b.id}, to_vec(C.i_basis(b.id)));
  for (int n = 2; n <= arity_cap; ++n) {
    auto trees = enumerate_rooted(n);
    for (const auto& tuple : detail::small_tuples(C.small, n)) {
      std::vector<Big> inputs;
      std::vector<int> degs;
      for (const auto& id : tuple) {
        inputs.push_back(C.i_basis(id));
        degs.push_back(C.small.deg(id));
      }
      Big acc = C.big.zero();
      for (const auto& t : trees)
        acc = C.big.add(acc, C.big.h(tau_h_eval(C.big, t, inputs, degs)));
      Vec value = to_vec(acc);
      if (!vec_is_zero(value)) out.set_comp(n, tuple, value);
    }
  }
  return out;
}

// Maurer-Cartan pushforward along the transferred projection: returns
// p(xi) where xi solves the filtered fixed point xi = x - h(R(xi)),
// R(y) = sum_{n>=2} (1/n!) l_n(y..y). With the side condition p h = 0 this
// is the projection component of the formal direct-sum decomposition.
template <class Big>
Vec mc_pushforward_p(const SymContraction<Big>& C, const Big& x, int max_iter = 64) {
  FPEq<Big> eq;
  eq.p0 = x;
  eq.max_iter = max_iter;
  eq.ops.push_back([&C](const Big& y) {
    Big r = C.big.zero();
    for (int n = 2; n <= C.big.arity_cap; ++n) {
      std::vector<Big> args(n, y);
      r = C.big.add(r, C.big.scale(Scalar(1) / factorial(n), C.big.ell(n, args)));
    }
    return C.big.scale(-1, C.big.h(r));
  });
  struct Ops {
    const SymTransferCtx<Big>* big;
    Big zero() const { return big->zero(); }
    Big add(const Big& a, const Big& b) const { return big->add(a, b); }
    Big scale(const Scalar& c, const Big& a) const { return big->scale(c, a); }
    bool equal(const Big& a, const Big& b) const {
      return big->is_zero(big->add(a, big->scale(-1, b)));
    }
  };
  return C.p(solve_fixed_point(eq, Ops{&C.big}));
}

// ---------------------------------------------- generic nonsymmetric case

template <class Big>
struct NsTransferCtx {
  std::function<Big(int, const std::vector<Big>&)> mu;  // ordered operations
  std::function<Big(const Big&)> h;
  std::function<bool(const Big&)> is_zero;
  std::function<Big()> zero;
  std::function<Big(const Big&, const Big&)> add;
  std::function<Big(const Scalar&, const Big&)> scale;
  int arity_cap = 2;
};

template <class Big>
Big ptree_h_eval(const NsTransferCtx<Big>& ctx, const PTree& t,
                 const std::vector<Big>& inputs, int& cursor) {
  if (t.leaf) return inputs[cursor++];
  std::vector<Big> args;
  for (const auto& c : t.children) {
    if (c.leaf) {
      args.push_back(inputs[cursor++]);
    } else {
      int dummy = cursor;
      Big v = ptree_h_eval(ctx, c, inputs, dummy);
      cursor = dummy;
      args.push_back(ctx.h(v));
    }
  }
  return ctx.mu(static_cast<int>(args.size()), args);
}

// Ordered (planar) operation tables on a finite basis, in the shifted
// convention: every operation has degree -1, ops[1] is the differential.
struct NsAlg {
  GradedSpace space;
  int arity_cap = 2;
  std::map<int, std::map<std::vector<std::string>, Vec>> ops;

  Vec apply_basis(int n, const std::vector<std::string>& args) const;
  Vec apply(int n, const std::vector<Vec>& args) const;
};

// Shifted planar relations, Koszul signs only:
//   sum_{n1+n2=n+1} sum_j (-1)^{|x_1|+..+|x_{j-1}|}
//     mu_{n2}(x_1,..,mu_{n1}(x_j,..),..,x_n) = 0.
std::optional<std::string> check_ns_relations(const NsAlg& A, int n_max);

template <class Big>
struct NsContraction {
  NsTransferCtx<Big> big;
  GradedSpace small;
  std::function<Big(const std::string&)> i_basis;
  std::function<Vec(const Big&)> p;
};

namespace detail {

inline std::vector<std::vector<std::string>> ordered_tuples(const GradedSpace& space,
                                                            int n) {
  std::vector<std::string> ids = space.ids();
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (const auto& id : ids) {
      current.push_back(id);
      rec();
      current.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace detail

// Transferred planar structure: mu_1 = p mu_1 i, and for n >= 2 the sum
// over reduced planar trees of p o tree^h o i^{x n}.
template <class Big>
NsAlg transfer_ainfty_ns(const NsContraction<Big>& C, int arity_cap) {
  NsAlg out;
  out.space = C.small;
  out.arity_cap = arity_cap;
  for (const auto& b : C.small.basis) {
    Vec v = C.p(C.big.mu(1, {C.i_basis(b.id)}));
    if (!vec_is_zero(v)) out.ops[1][{b.id}] = v;
  }
  for (int n = 2; n <= arity_cap; ++n) {
    auto trees = enumerate_planar(n);
    for (const auto& tuple : detail::ordered_tuples(C.small, n)) {
      std::vector<Big> inputs;
      for (const auto& id : tuple) inputs.push_back(C.i_basis(id));
      Vec value;
      for (const auto& t : trees) {
        int cursor = 0;
        Big term = ptree_h_eval(C.big, t, inputs, cursor);
        if (!C.big.is_zero(term)) value = vec_added(value, C.p(term), Scalar(1));
      }
      if (!vec_is_zero(value)) out.ops[n][tuple] = value;
    }
  }
  return out;
}

// Planar infinity-quasi-isomorphism components i_1 = i, i_n = sum over
// planar trees of h o tree^h o i^{x n}, tabulated over a finite big basis.
template <class Big>
NsAlg i_infinity_ns(const NsContraction<Big>& C, const GradedSpace& big_space,
                    std::function<Vec(const Big&)> to_vec, int arity_cap) {
  NsAlg out;
  out.space = big_space;  // values live in the big space; argument ids in C.small
  out.arity_cap = arity_cap;
  for (const auto& b : C.small.basis) out.ops[1][{b.id}] = to_vec(C.i_basis(b.id));
  for (int n = 2; n <= arity_cap; ++n) {
    auto trees = enumerate_planar(n);
    for (const auto& tuple : detail::ordered_tuples(C.small, n)) {
      std::vector<Big> inputs;
      for (const auto& id : tuple) inputs.push_back(C.i_basis(id));
      Big acc = C.big.zero();
      for (const auto& t : trees) {
        int cursor = 0;
        acc = C.big.add(acc, C.big.h(ptree_h_eval(C.big, t, inputs, cursor)));
      }
      Vec value = to_vec(acc);
      if (!vec_is_zero(value)) out.ops[n][tuple] = value;
    }
  }
  return out;
}

// ------------------------------------------------------ finite-basis utils

// Exact contraction of a finite complex onto its homology, with all side
// conditions (h^2 = 0, h i = 0, p h = 0) holding on the nose.
struct Contraction {
  GradedSpace big, small;
  GMap i, p, h;
};
Contraction build_contraction(const GradedSpace& space, const GMap& d);

// Transferred square-zero operators delta_n = p (delta h)^{n-1} delta i.
std::vector<GMap> transfer_dual_numbers(const GMap& p, const GMap& i, const GMap& h,
                                        const GMap& delta, int count);

// Wrap a finite big-side structure as a generic symmetric contraction.
SymContraction<Vec> finite_sym_contraction(const SLInfty& big, const Contraction& c);

// Classical operations from shifted planar ones, through the suspension
// dictionary m_n(a_1..a_n) = (-1)^{n|m_n| + sum_j (n-j)|a_j|} M_n(a_1..a_n)
// computed on basis ids (classical_space carries the unshifted degrees,
// |m_n| = n - 2).
NsAlg ns_unshift(const NsAlg& shifted, const GradedSpace& classical_space);

}  // namespace mct

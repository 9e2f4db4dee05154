#include "mct/linfty.hpp"

#include <sstream>
#include <stdexcept>

#include "mct/freelie.hpp"
#include "mct/linalg.hpp"
#include "mct/solvers.hpp"

namespace mct {

namespace {

std::vector<int> degrees_of(const GradedSpace& space,
                            const std::vector<std::string>& ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(space.deg(id));
  return out;
}

// Generic symmetric-table lookup.
Vec table_apply_basis(const GradedSpace& space, const std::map<int, SymTable>& tables,
                      int n, const std::vector<std::string>& args) {
  auto table = tables.find(n);
  if (table == tables.end()) return {};
  SortedWithSign s = koszul_sort(args, degrees_of(space, args));
  if (s.sign == 0) return {};
  auto it = table->second.find(s.keys);
  if (it == table->second.end()) return {};
  return vec_scale(it->second, Scalar(s.sign));
}

Vec table_apply(const GradedSpace& space, const std::map<int, SymTable>& tables,
                int n, const std::vector<Vec>& args) {
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("symmetric apply: arity mismatch");
  if (tables.find(n) == tables.end()) return {};
  Vec out;
  std::vector<std::string> ids(n);
  std::function<void(size_t, const Scalar&)> rec = [&](size_t pos, const Scalar& c) {
    if (pos == args.size()) {
      vec_add(out, table_apply_basis(space, tables, n, ids), c);
      return;
    }
    for (const auto& [id, coeff] : args[pos]) {
      ids[pos] = id;
      rec(pos + 1, c * coeff);
    }
  };
  rec(0, Scalar(1));
  return out;
}

void table_set(const GradedSpace& space, std::map<int, SymTable>& tables, int n,
               const std::vector<std::string>& args, const Vec& value) {
  SortedWithSign s = koszul_sort(args, degrees_of(space, args));
  if (s.sign == 0) {
    if (!vec_is_zero(value))
      throw std::invalid_argument("symmetric set: nonzero value on vanishing tuple");
    return;
  }
  Vec v = vec_scale(value, Scalar(s.sign));  // sign^{-1} == sign
  if (vec_is_zero(v))
    tables[n].erase(s.keys);
  else
    tables[n][s.keys] = std::move(v);
}

// All canonical (sorted, repetitions allowed) basis tuples of length n.
std::vector<std::vector<std::string>> canonical_tuples(const GradedSpace& space, int n) {
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

// All set partitions of {0..n-1}; blocks in min-element order, elements
// ascending inside each block.
void partitions_rec(int n, int index, std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (index == n) {
    out.push_back(current);
    return;
  }
  // Index-based: recursive calls may push/pop a trailing block and
  // reallocate `current`, invalidating references into it.
  for (size_t b = 0; b < current.size(); ++b) {
    current[b].push_back(index);
    partitions_rec(n, index + 1, current, out);
    current[b].pop_back();
  }
  current.push_back({index});
  partitions_rec(n, index + 1, current, out);
  current.pop_back();
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  partitions_rec(n, 0, current, out);
  return out;
}

// Subsets of {0..n-1} of size k, ascending.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < n; ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

Vec basis_vec(const std::string& id) { return Vec{{id, Scalar(1)}}; }

}  // namespace

Vec SLInfty::apply_basis(int n, const std::vector<std::string>& args) const {
  return table_apply_basis(space, ops, n, args);
}

Vec SLInfty::apply(int n, const std::vector<Vec>& args) const {
  return table_apply(space, ops, n, args);
}

void SLInfty::set_op(int n, const std::vector<std::string>& args, const Vec& value) {
  table_set(space, ops, n, args, value);
}

GMap SLInfty::differential() const {
  GMap d;
  d.degree = -1;
  auto it = ops.find(1);
  if (it != ops.end())
    for (const auto& [args, value] : it->second) d.images[args[0]] = value;
  return d;
}

std::optional<std::string> check_relations(const SLInfty& A, int n_max) {
  // Homogeneity of every stored operation.
  for (const auto& [n, table] : A.ops)
    for (const auto& [args, value] : table) {
      if (vec_is_zero(value)) continue;
      int expected = -1;
      for (const auto& id : args) expected += A.space.deg(id);
      if (A.space.deg_of(value) != expected) {
        std::ostringstream os;
        os << "l_" << n << " is not homogeneous of degree -1 on (";
        for (const auto& a : args) os << a << " ";
        os << ")";
        return os.str();
      }
    }
  // Generalized Jacobi.
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& tuple : canonical_tuples(A.space, n)) {
      std::vector<int> degs = degrees_of(A.space, tuple);
      Vec residual;
      for (int n1 = 1; n1 <= n; ++n1) {
        int n2 = n + 1 - n1;
        for (const auto& inside : subsets(n, n1)) {
          std::vector<int> perm = inside;
          std::vector<bool> used(n, false);
          for (int i : inside) used[i] = true;
          for (int i = 0; i < n; ++i)
            if (!used[i]) perm.push_back(i);
          int sign = koszul_sign(perm, degs);
          if (sign == 0) continue;
          std::vector<std::string> in_args, out_rest;
          for (int i : inside) in_args.push_back(tuple[i]);
          Vec inner = A.apply_basis(n1, in_args);
          if (vec_is_zero(inner)) continue;
          std::vector<Vec> outer_args{inner};
          for (int i = n1; i < n; ++i) outer_args.push_back(basis_vec(tuple[perm[i]]));
          vec_add(residual, A.apply(n2, outer_args), Scalar(sign));
        }
      }
      if (!vec_is_zero(residual)) {
        std::ostringstream os;
        os << "Jacobi relation fails at arity " << n << " on (";
        for (const auto& a : tuple) os << a << " ";
        os << "): residual " << vec_to_string(residual);
        return os.str();
      }
    }
  }
  return std::nullopt;
}

Vec mc_residual(const SLInfty& A, const Vec& x) {
  Vec out = A.apply(1, {x});
  for (int n = 2; n <= A.arity_cap; ++n) {
    std::vector<Vec> args(n, x);
    vec_add(out, A.apply(n, args), Scalar(1) / factorial(n));
  }
  return out;
}

SLInfty twist(const SLInfty& A, const Vec& alpha) {
  SLInfty out;
  out.space = A.space;
  out.arity_cap = A.arity_cap;
  for (int m = 1; m <= A.arity_cap; ++m) {
    for (const auto& tuple : canonical_tuples(A.space, m)) {
      Vec value;
      for (int j = 0; m + j <= A.arity_cap; ++j) {
        std::vector<Vec> args(j, alpha);
        for (const auto& id : tuple) args.push_back(basis_vec(id));
        vec_add(value, A.apply(m + j, args), Scalar(1) / factorial(j));
      }
      if (!vec_is_zero(value)) out.set_op(m, tuple, value);
    }
  }
  return out;
}

std::vector<Vec> gauge_flow_series(const SLInfty& A, const Vec& lambda,
                                   const Vec& x0, int t_deg_cap) {
  FODE<Vec> ode;
  ode.v0 = x0;
  ode.terms[{0, 0}] = [&A, lambda](const std::vector<Vec>&) {
    return A.apply(1, {lambda});
  };
  for (int j = 1; j + 1 <= A.arity_cap; ++j) {
    ode.terms[{j, 0}] = [&A, lambda, j](const std::vector<Vec>& ys) {
      std::vector<Vec> args = ys;
      args.push_back(lambda);
      return vec_scale(A.apply(j + 1, args), Scalar(1) / factorial(j));
    };
  }
  return solve_ode_recursive(ode, t_deg_cap, VecOps{});
}

Vec gauge_flow(const SLInfty& A, const Vec& lambda, const Vec& x0, int t_deg_cap) {
  auto coeffs = gauge_flow_series(A, lambda, x0, t_deg_cap);
  return eval_series(coeffs, Scalar(1), VecOps{});
}

Vec InfMorphism::apply_basis(int n, const std::vector<std::string>& args) const {
  return table_apply_basis(source, comps, n, args);
}

Vec InfMorphism::apply(int n, const std::vector<Vec>& args) const {
  return table_apply(source, comps, n, args);
}

void InfMorphism::set_comp(int n, const std::vector<std::string>& args,
                           const Vec& value) {
  table_set(source, comps, n, args, value);
}

InfMorphism inf_identity(const GradedSpace& space) {
  InfMorphism out;
  out.source = out.target = space;
  out.arity_cap = 1;
  for (const auto& b : space.basis) out.comps[1][{b.id}] = basis_vec(b.id);
  return out;
}

Vec mc_pushforward(const InfMorphism& phi, const Vec& x) {
  Vec out;
  for (int n = 1; n <= phi.arity_cap; ++n) {
    std::vector<Vec> args(n, x);
    vec_add(out, phi.apply(n, args), Scalar(1) / factorial(n));
  }
  return out;
}

InfMorphism compose_inf(const InfMorphism& psi, const InfMorphism& phi) {
  InfMorphism out;
  out.source = phi.source;
  out.target = psi.target;
  out.arity_cap = psi.arity_cap * phi.arity_cap;
  for (int n = 1; n <= out.arity_cap; ++n) {
    for (const auto& tuple : canonical_tuples(phi.source, n)) {
      std::vector<int> degs = degrees_of(phi.source, tuple);
      Vec value;
      for (const auto& blocks : set_partitions(n)) {
        int k = static_cast<int>(blocks.size());
        if (k > psi.arity_cap) continue;
        bool feasible = true;
        std::vector<int> perm;
        for (const auto& block : blocks) {
          if (static_cast<int>(block.size()) > phi.arity_cap) feasible = false;
          for (int i : block) perm.push_back(i);
        }
        if (!feasible) continue;
        int sign = koszul_sign(perm, degs);
        if (sign == 0) continue;
        std::vector<Vec> mids;
        bool zero = false;
        for (const auto& block : blocks) {
          std::vector<std::string> ids;
          for (int i : block) ids.push_back(tuple[i]);
          Vec mid = phi.apply_basis(static_cast<int>(block.size()), ids);
          if (vec_is_zero(mid)) {
            zero = true;
            break;
          }
          mids.push_back(std::move(mid));
        }
        if (zero) continue;
        vec_add(value, psi.apply(k, mids), Scalar(sign));
      }
      if (!vec_is_zero(value)) out.set_comp(n, tuple, value);
    }
  }
  return out;
}

InfMorphism twist_inf(const InfMorphism& phi, const Vec& alpha) {
  InfMorphism out;
  out.source = phi.source;
  out.target = phi.target;
  out.arity_cap = phi.arity_cap;
  for (int k = 1; k <= phi.arity_cap; ++k) {
    for (const auto& tuple : canonical_tuples(phi.source, k)) {
      Vec value;
      for (int j = 0; k + j <= phi.arity_cap; ++j) {
        std::vector<Vec> args(j, alpha);
        for (const auto& id : tuple) args.push_back(basis_vec(id));
        vec_add(value, phi.apply(k + j, args), Scalar(1) / factorial(j));
      }
      if (!vec_is_zero(value)) out.set_comp(k, tuple, value);
    }
  }
  return out;
}

std::optional<std::string> check_inf_morphism(const SLInfty& B, const SLInfty& A,
                                              const InfMorphism& phi, int n_max) {
  // phi: A -> B. Relation, arity n:
  //   sum_{n1} sum_shuffles koszul * phi_{n2}(l^A_{n1}(block), rest)
  // = sum_partitions koszul * l^B_k(phi(block_1),...,phi(block_k)).
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& tuple : canonical_tuples(A.space, n)) {
      std::vector<int> degs = degrees_of(A.space, tuple);
      Vec lhs, rhs;
      for (int n1 = 1; n1 <= n; ++n1) {
        int n2 = n + 1 - n1;
        for (const auto& inside : subsets(n, n1)) {
          std::vector<int> perm = inside;
          std::vector<bool> used(n, false);
          for (int i : inside) used[i] = true;
          for (int i = 0; i < n; ++i)
            if (!used[i]) perm.push_back(i);
          int sign = koszul_sign(perm, degs);
          std::vector<std::string> in_args;
          for (int i : inside) in_args.push_back(tuple[i]);
          Vec inner = A.apply_basis(n1, in_args);
          if (vec_is_zero(inner)) continue;
          std::vector<Vec> outer{inner};
          for (int i = n1; i < n; ++i) outer.push_back(basis_vec(tuple[perm[i]]));
          vec_add(lhs, phi.apply(n2, outer), Scalar(sign));
        }
      }
      for (const auto& blocks : set_partitions(n)) {
        int k = static_cast<int>(blocks.size());
        std::vector<int> perm;
        for (const auto& block : blocks)
          for (int i : block) perm.push_back(i);
        int sign = koszul_sign(perm, degs);
        std::vector<Vec> mids;
        bool zero = false;
        for (const auto& block : blocks) {
          std::vector<std::string> ids;
          for (int i : block) ids.push_back(tuple[i]);
          Vec mid = phi.apply_basis(static_cast<int>(block.size()), ids);
          if (vec_is_zero(mid)) {
            zero = true;
            break;
          }
          mids.push_back(std::move(mid));
        }
        if (zero) continue;
        vec_add(rhs, B.apply(k, mids), Scalar(sign));
      }
      if (vec_sub(lhs, rhs) != Vec{}) {
        std::ostringstream os;
        os << "infinity-morphism relation fails at arity " << n << " on (";
        for (const auto& a : tuple) os << a << " ";
        os << "): lhs " << vec_to_string(lhs) << " vs rhs " << vec_to_string(rhs);
        return os.str();
      }
    }
  }
  return std::nullopt;
}

SLInfty suspend_lie(const ClassicalLie& lie) {
  SLInfty out;
  out.space = suspend(lie.space, 1);
  out.arity_cap = 2;
  // l_1(sx) = -s(d x); l_2(sx, sy) = (-1)^{|x|} s[x, y]  (|x| classical).
  for (const auto& b : lie.space.basis) {
    Vec img = lie.d.apply_basis(b.id);
    if (!vec_is_zero(img)) out.set_op(1, {b.id}, vec_scale(img, -1));
  }
  for (const auto& a : lie.space.basis)
    for (const auto& b : lie.space.basis) {
      // Fill the table on canonical (sorted) pairs only.
      if (b.id < a.id) continue;
      Vec br = lie.bracket(a.id, b.id);
      if (vec_is_zero(br)) continue;
      out.set_op(2, {a.id, b.id}, vec_scale(br, sign_pow(a.deg)));
    }
  return out;
}

FreeNilpotentLie freelie_to_slinfty(const std::vector<int>& gen_degrees, int cap) {
  FreeLieCtx ctx{gen_degrees, cap};
  // Pick a basis of each weight component via exact elimination.
  struct BasisElt {
    std::string id;
    int weight;
    int degree;
    TensorElt value;
  };
  std::vector<BasisElt> basis;
  std::vector<std::vector<size_t>> by_weight(cap + 1);
  for (int w = 1; w <= cap; ++w) {
    std::vector<TensorElt> span =
        (w == 1) ? [&] {
          std::vector<TensorElt> gens;
          for (size_t g = 0; g < gen_degrees.size(); ++g) gens.push_back(fl_gen(g));
          return gens;
        }()
                 : lie_spanning_set(ctx, w);
    std::map<Word, size_t> windex;
    for (const auto& e : span)
      for (const auto& [word, c] : e)
        if (!windex.count(word)) {
          size_t k = windex.size();
          windex[word] = k;
        }
    Mat m(windex.size(), Row(span.size(), Scalar(0)));
    for (size_t col = 0; col < span.size(); ++col)
      for (const auto& [word, c] : span[col]) m[windex[word]][col] = c;
    Rref r = rref(m);
    int k = 0;
    for (int col : r.pivot_cols) {
      BasisElt be;
      be.id = "w" + std::to_string(w) + "_" + std::to_string(k++);
      be.weight = w;
      be.degree = ctx.word_degree(span[col].begin()->first);
      be.value = span[col];
      by_weight[w].push_back(basis.size());
      basis.push_back(std::move(be));
    }
  }

  // Express a homogeneous-weight Lie element in the chosen basis.
  auto express = [&](const TensorElt& e, int w) -> Vec {
    Vec out;
    if (e.empty()) return out;
    std::map<Word, size_t> windex;
    auto touch = [&](const TensorElt& t) {
      for (const auto& [word, c] : t)
        if (!windex.count(word)) {
          size_t k = windex.size();
          windex[word] = k;
        }
    };
    for (size_t i : by_weight[w]) touch(basis[i].value);
    touch(e);
    Mat m(windex.size(), Row(by_weight[w].size(), Scalar(0)));
    for (size_t col = 0; col < by_weight[w].size(); ++col)
      for (const auto& [word, c] : basis[by_weight[w][col]].value)
        m[windex[word]][col] = c;
    Row b(windex.size(), Scalar(0));
    for (const auto& [word, c] : e) b[windex[word]] = c;
    auto x = solve(m, b);
    if (!x) throw std::runtime_error("freelie_to_slinfty: element outside Lie span");
    for (size_t col = 0; col < x->size(); ++col)
      vec_add(out, basis[by_weight[w][col]].id, (*x)[col]);
    return out;
  };

  ClassicalLie lie;
  for (const auto& be : basis)
    lie.space.basis.push_back({be.id, be.degree, be.weight});
  lie.d.degree = -1;
  std::map<std::string, std::pair<int, TensorElt>> lookup;
  for (const auto& be : basis) lookup[be.id] = {be.weight, be.value};
  lie.bracket = [lookup, express, ctx](const std::string& a,
                                       const std::string& b) -> Vec {
    const auto& [wa, va] = lookup.at(a);
    const auto& [wb, vb] = lookup.at(b);
    if (wa + wb > ctx.cap) return {};
    return express(bracket(ctx, va, vb), wa + wb);
  };

  FreeNilpotentLie out;
  out.algebra = suspend_lie(lie);
  out.algebra.arity_cap = 2;
  for (size_t g = 0; g < gen_degrees.size(); ++g)
    out.gen_ids.push_back(basis[by_weight[1][g]].id);
  return out;
}

}  // namespace mct

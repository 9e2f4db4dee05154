#include "mct/htt.hpp"

#include <sstream>
#include <stdexcept>

#include "mct/linalg.hpp"

namespace mct {

Vec NsAlg::apply_basis(int n, const std::vector<std::string>& args) const {
  auto table = ops.find(n);
  if (table == ops.end()) return {};
  auto it = table->second.find(args);
  return it == table->second.end() ? Vec{} : it->second;
}

Vec NsAlg::apply(int n, const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("NsAlg::apply: arity mismatch");
  if (ops.find(n) == ops.end()) return {};
  Vec out;
  std::vector<std::string> ids(n);
  std::function<void(size_t, const Scalar&)> rec = [&](size_t pos, const Scalar& c) {
    if (pos == args.size()) {
      vec_add(out, apply_basis(n, ids), c);
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

std::optional<std::string> check_ns_relations(const NsAlg& A, int n_max) {
  for (const auto& [n, table] : A.ops)
    for (const auto& [args, value] : table) {
      if (vec_is_zero(value)) continue;
      int expected = -1;
      for (const auto& id : args) expected += A.space.deg(id);
      if (A.space.deg_of(value) != expected) {
        std::ostringstream os;
        os << "mu_" << n << " is not homogeneous of degree -1";
        return os.str();
      }
    }
  std::vector<std::string> ids = A.space.ids();
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::string> tuple(n);
    std::function<std::optional<std::string>(int)> rec =
        [&](int pos) -> std::optional<std::string> {
      if (pos == n) {
        Vec residual;
        for (int n1 = 1; n1 <= n; ++n1) {
          int n2 = n + 1 - n1;
          for (int j = 1; j <= n2; ++j) {
            long long left = 0;
            for (int i = 0; i < j - 1; ++i) left += A.space.deg(tuple[i]);
            std::vector<std::string> in_args(tuple.begin() + (j - 1),
                                             tuple.begin() + (j - 1) + n1);
            Vec inner = A.apply_basis(n1, in_args);
            if (vec_is_zero(inner)) continue;
            std::vector<Vec> outer;
            for (int i = 0; i < j - 1; ++i) outer.push_back(Vec{{tuple[i], Scalar(1)}});
            outer.push_back(inner);
            for (int i = j - 1 + n1; i < n; ++i)
              outer.push_back(Vec{{tuple[i], Scalar(1)}});
            vec_add(residual, A.apply(n2, outer), Scalar(sign_pow(left)));
          }
        }
        if (!vec_is_zero(residual)) {
          std::ostringstream os;
          os << "planar relation fails at arity " << n << " on (";
          for (const auto& a : tuple) os << a << " ";
          os << "): residual " << vec_to_string(residual);
          return os.str();
        }
        return std::nullopt;
      }
      for (const auto& id : ids) {
        tuple[pos] = id;
        if (auto err = rec(pos + 1)) return err;
      }
      return std::nullopt;
    };
    if (auto err = rec(0)) return err;
  }
  return std::nullopt;
}

Contraction build_contraction(const GradedSpace& space, const GMap& d) {
  if (auto err = check_complex(space, d))
    throw std::invalid_argument("build_contraction: " + *err);
  Contraction out;
  out.big = space;
  out.i.degree = 0;
  out.p.degree = 0;
  out.h.degree = 1;

  // Per-degree index of the basis.
  std::map<int, std::vector<std::string>> by_deg;
  for (const auto& b : space.basis) by_deg[b.deg].push_back(b.id);
  auto ids_in = [&](int k) -> const std::vector<std::string>& {
    static const std::vector<std::string> none;
    auto it = by_deg.find(k);
    return it == by_deg.end() ? none : it->second;
  };
  auto to_row = [&](const Vec& v, const std::vector<std::string>& ids) {
    Row r(ids.size(), Scalar(0));
    for (size_t j = 0; j < ids.size(); ++j) r[j] = vec_coeff(v, ids[j]);
    return r;
  };
  auto to_vec = [&](const Row& r, const std::vector<std::string>& ids) {
    Vec v;
    for (size_t j = 0; j < ids.size(); ++j) vec_add(v, ids[j], r[j]);
    return v;
  };

  // C_k: columns of the degree-k basis whose d-images are independent
  // (pivot columns of the d-matrix); d maps span(C_k) isomorphically onto
  // the boundary space B_{k-1}.
  std::map<int, std::vector<Vec>> C_basis, B_basis, H_reps;
  for (const auto& [k, ids] : by_deg) {
    const auto& low = ids_in(k - 1);
    Mat m(low.size(), Row(ids.size(), Scalar(0)));
    for (size_t col = 0; col < ids.size(); ++col) {
      Vec img = d.apply_basis(ids[col]);
      for (size_t row = 0; row < low.size(); ++row)
        m[row][col] = vec_coeff(img, low[row]);
    }
    Rref r = rref(m);
    for (int col : r.pivot_cols) {
      Vec c{{ids[col], Scalar(1)}};
      C_basis[k].push_back(c);
      B_basis[k - 1].push_back(d.apply(c));
    }
  }
  // Homology representatives: extend B_k inside Z_k = ker(d).
  for (const auto& [k, ids] : by_deg) {
    const auto& low = ids_in(k - 1);
    Mat m(low.size(), Row(ids.size(), Scalar(0)));
    for (size_t col = 0; col < ids.size(); ++col) {
      Vec img = d.apply_basis(ids[col]);
      for (size_t row = 0; row < low.size(); ++row)
        m[row][col] = vec_coeff(img, low[row]);
    }
    std::vector<Row> zk = kernel_basis(m, static_cast<int>(ids.size()));
    // Columns: boundaries first, then cycles; extra pivots = representatives.
    Mat cols;
    size_t nb = B_basis.count(k) ? B_basis[k].size() : 0;
    for (size_t j = 0; j < ids.size(); ++j) {
      Row row;
      for (size_t b = 0; b < nb; ++b) row.push_back(vec_coeff(B_basis[k][b], ids[j]));
      for (const auto& z : zk) row.push_back(z[j]);
      cols.push_back(std::move(row));
    }
    Rref r = rref(cols);
    for (int piv : r.pivot_cols)
      if (piv >= static_cast<int>(nb))
        H_reps[k].push_back(to_vec(zk[piv - nb], ids));
  }

  // Small space and the maps, degree by degree.
  int rep_count = 0;
  std::map<int, std::vector<std::string>> small_ids;
  for (const auto& [k, reps] : H_reps)
    for (const auto& rep : reps) {
      std::string id = "h" + std::to_string(rep_count++);
      out.small.basis.push_back({id, k, 0});
      small_ids[k].push_back(id);
      out.i.images[id] = rep;
    }
  for (const auto& [k, ids] : by_deg) {
    // Decompose each basis vector of degree k over [B_k | H_k | C_k].
    std::vector<Vec> cols;
    size_t nb = B_basis.count(k) ? B_basis[k].size() : 0;
    size_t nh = H_reps.count(k) ? H_reps[k].size() : 0;
    size_t nc = C_basis.count(k) ? C_basis[k].size() : 0;
    for (size_t b = 0; b < nb; ++b) cols.push_back(B_basis[k][b]);
    for (size_t r = 0; r < nh; ++r) cols.push_back(H_reps[k][r]);
    for (size_t c = 0; c < nc; ++c) cols.push_back(C_basis[k][c]);
    Mat m(ids.size(), Row(cols.size(), Scalar(0)));
    for (size_t col = 0; col < cols.size(); ++col)
      for (size_t row = 0; row < ids.size(); ++row)
        m[row][col] = vec_coeff(cols[col], ids[row]);
    for (const auto& id : ids) {
      Row b(ids.size(), Scalar(0));
      for (size_t row = 0; row < ids.size(); ++row)
        if (ids[row] == id) b[row] = 1;
      auto x = solve(m, b);
      if (!x) throw std::logic_error("build_contraction: decomposition failed");
      // p: homology coordinates.
      Vec pv;
      for (size_t r = 0; r < nh; ++r) vec_add(pv, small_ids[k][r], (*x)[nb + r]);
      if (!vec_is_zero(pv)) out.p.images[id] = pv;
      // h: boundary component B_k = d(C_{k+1}) lifts back to C_{k+1}.
      Vec hv;
      for (size_t bi = 0; bi < nb; ++bi)
        vec_add(hv, vec_scale(C_basis[k + 1][bi], (*x)[bi]), 1);
      if (!vec_is_zero(hv)) out.h.images[id] = hv;
    }
  }
  return out;
}

std::vector<GMap> transfer_dual_numbers(const GMap& p, const GMap& i, const GMap& h,
                                        const GMap& delta, int count) {
  std::vector<GMap> out;
  GMap acc = gmap_compose(delta, i);
  for (int n = 1; n <= count; ++n) {
    out.push_back(gmap_compose(p, acc));
    acc = gmap_compose(delta, gmap_compose(h, acc));
  }
  return out;
}

SymContraction<Vec> finite_sym_contraction(const SLInfty& big, const Contraction& c) {
  SymContraction<Vec> out;
  out.big.arity_cap = big.arity_cap;
  out.big.ell = [&big](int n, const std::vector<Vec>& args) {
    return big.apply(n, args);
  };
  out.big.h = [&c](const Vec& v) { return c.h.apply(v); };
  out.big.deg = [&big](const Vec& v) { return v.empty() ? 0 : big.space.deg_of(v); };
  out.big.is_zero = [](const Vec& v) { return vec_is_zero(v); };
  out.big.zero = []() { return Vec{}; };
  out.big.add = [](const Vec& a, const Vec& b) {
    Vec r = a;
    vec_add(r, b, 1);
    return r;
  };
  out.big.scale = [](const Scalar& s, const Vec& v) { return vec_scale(v, s); };
  out.small = c.small;
  out.i_basis = [&c](const std::string& id) { return c.i.apply_basis(id); };
  out.p = [&c](const Vec& v) { return c.p.apply(v); };
  return out;
}

NsAlg ns_unshift(const NsAlg& shifted, const GradedSpace& classical_space) {
  NsAlg out;
  out.space = classical_space;
  out.arity_cap = shifted.arity_cap;
  for (const auto& [n, table] : shifted.ops) {
    for (const auto& [args, value] : table) {
      long long eps = static_cast<long long>(n) * (n - 2);
      for (int j = 1; j <= n; ++j)
        eps += static_cast<long long>(n - j) * classical_space.deg(args[j - 1]);
      Vec v = vec_scale(value, sign_pow(eps));
      if (!vec_is_zero(v)) out.ops[n][args] = v;
    }
  }
  return out;
}

}  // namespace mct

#include "mct/deformation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mct {

Vec MultiMap::apply_basis(const std::vector<std::string>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("MultiMap: wrong number of arguments");
  auto it = table.find(args);
  if (it == table.end()) return {};
  return it->second;
}

Vec MultiMap::apply(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("MultiMap: wrong number of arguments");
  Vec out;
  std::vector<std::string> tuple(args.size());
  std::function<void(size_t, Scalar)> rec = [&](size_t pos, Scalar coeff) {
    if (pos == args.size()) {
      out = vec_added(out, vec_scale(apply_basis(tuple), coeff), Scalar(1));
      return;
    }
    for (const auto& [id, c] : args[pos]) {
      if (c == 0) continue;
      tuple[pos] = id;
      rec(pos + 1, coeff * c);
    }
  };
  rec(0, Scalar(1));
  return out;
}

namespace {

// All ordered basis tuples of a given length.
void for_each_tuple(const GradedSpace& A, int n,
                    const std::function<void(const std::vector<std::string>&)>& fn) {
  std::vector<std::string> ids = A.ids();
  std::vector<std::string> tuple(n);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      fn(tuple);
      return;
    }
    for (const auto& id : ids) {
      tuple[pos] = id;
      rec(pos + 1);
    }
  };
  rec(0);
}

// Gerstenhaber circle product f o g on a basis tuple of length n + m - 1.
Vec circ_basis(const MultiMap& f, const MultiMap& g,
               const std::vector<std::string>& args) {
  int n = f.arity, m = g.arity;
  Vec out;
  for (int i = 1; i <= n; ++i) {
    Vec inner = g.apply_basis(std::vector<std::string>(
        args.begin() + (i - 1), args.begin() + (i - 1) + m));
    std::vector<Vec> fargs;
    for (int k = 0; k < i - 1; ++k) fargs.push_back(Vec{{args[k], Scalar(1)}});
    fargs.push_back(inner);
    for (int k = i - 1 + m; k < n + m - 1; ++k)
      fargs.push_back(Vec{{args[k], Scalar(1)}});
    Scalar s = sign_pow(static_cast<long long>(i - 1) * (m - 1));
    out = vec_added(out, vec_scale(f.apply(fargs), s), Scalar(1));
  }
  return out;
}

}  // namespace

MultiMap gerstenhaber(const GradedSpace& A, const MultiMap& f, const MultiMap& g) {
  int n = f.arity, m = g.arity;
  MultiMap out;
  out.arity = n + m - 1;
  Scalar flip = sign_pow(static_cast<long long>(n - 1) * (m - 1));
  for_each_tuple(A, out.arity, [&](const std::vector<std::string>& t) {
    Vec v = vec_added(circ_basis(f, g, t),
                    vec_scale(circ_basis(g, f, t), flip), Scalar(-1));
    if (!vec_is_zero(v)) out.table[t] = v;
  });
  return out;
}

MultiMap hoch_differential(const GradedSpace& A, const MultiMap& m,
                           const MultiMap& f) {
  if (m.arity != 2) throw std::invalid_argument("hoch_differential: m must be binary");
  int n = f.arity;
  MultiMap out;
  out.arity = n + 1;
  for_each_tuple(A, n + 1, [&](const std::vector<std::string>& a) {
    Vec v;
    {
      Vec inner = f.apply_basis(std::vector<std::string>(a.begin() + 1, a.end()));
      v = vec_added(v, m.apply({Vec{{a[0], Scalar(1)}}, inner}), Scalar(1));
    }
    for (int k = 1; k <= n; ++k) {
      Vec prod = m.apply_basis({a[k - 1], a[k]});
      std::vector<Vec> fargs;
      for (int j = 0; j < k - 1; ++j) fargs.push_back(Vec{{a[j], Scalar(1)}});
      fargs.push_back(prod);
      for (int j = k + 1; j <= n; ++j) fargs.push_back(Vec{{a[j], Scalar(1)}});
      v = vec_added(v, f.apply(fargs), sign_pow(k));
    }
    {
      Vec inner = f.apply_basis(std::vector<std::string>(a.begin(), a.end() - 1));
      v = vec_added(v, m.apply({inner, Vec{{a.back(), Scalar(1)}}}), sign_pow(n + 1));
    }
    if (!vec_is_zero(v)) out.table[a] = v;
  });
  return out;
}

MultiMap assoc_residual(const GradedSpace& A, const MultiMap& m) {
  MultiMap br = gerstenhaber(A, m, m);
  MultiMap out;
  out.arity = br.arity;
  for (auto& [t, v] : br.table) {
    Vec half = vec_scale(v, Scalar(1) / Scalar(2));
    if (!vec_is_zero(half)) out.table[t] = half;
  }
  return out;
}

bool is_mc_associative(const GradedSpace& A, const MultiMap& m) {
  return assoc_residual(A, m).table.empty();
}

bool is_associative_direct(const GradedSpace& A, const MultiMap& m) {
  bool ok = true;
  for_each_tuple(A, 3, [&](const std::vector<std::string>& t) {
    Vec lhs = m.apply({m.apply_basis({t[0], t[1]}), Vec{{t[2], Scalar(1)}}});
    Vec rhs = m.apply({Vec{{t[0], Scalar(1)}}, m.apply_basis({t[1], t[2]})});
    if (!vec_is_zero(vec_added(lhs, rhs, Scalar(-1)))) ok = false;
  });
  return ok;
}

MultiMap trivial_deformation(const GradedSpace& A, const MultiMap& m,
                             const MultiMap& g) {
  if (g.arity != 1) throw std::invalid_argument("trivial_deformation: g must be linear");
  MultiMap out;
  out.arity = 2;
  for_each_tuple(A, 2, [&](const std::vector<std::string>& t) {
    Vec v = g.apply({m.apply_basis({t[0], t[1]})});
    v = vec_added(v, m.apply({g.apply_basis({t[0]}), Vec{{t[1], Scalar(1)}}}),
                Scalar(-1));
    v = vec_added(v, m.apply({Vec{{t[0], Scalar(1)}}, g.apply_basis({t[1]})}),
                Scalar(-1));
    if (!vec_is_zero(v)) out.table[t] = v;
  });
  return out;
}

bool infinitesimal_deformation_check(const GradedSpace& A, const MultiMap& m,
                                     const MultiMap& f) {
  return hoch_differential(A, m, f).table.empty();
}

// ------------------------------------------------ alternating cochains

namespace {

// Sort ids, returning the permutation sign; nullopt on a repeat.
std::optional<std::pair<std::vector<std::string>, int>> alt_sort(
    std::vector<std::string> ids) {
  int sign = 1;
  for (size_t i = 1; i < ids.size(); ++i)
    for (size_t j = i; j > 0 && ids[j] < ids[j - 1]; --j) {
      std::swap(ids[j], ids[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < ids.size(); ++i)
    if (ids[i] == ids[i - 1]) return std::nullopt;
  return std::make_pair(ids, sign);
}

void for_each_increasing(const GradedSpace& A, int n,
                         const std::function<void(const std::vector<std::string>&)>& fn) {
  std::vector<std::string> ids = A.ids();
  std::vector<std::string> tuple;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(tuple.size()) == n) {
      fn(tuple);
      return;
    }
    for (size_t i = start; i < ids.size(); ++i) {
      tuple.push_back(ids[i]);
      rec(i + 1);
      tuple.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Vec AltMap::apply_basis(const std::vector<std::string>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("AltMap: wrong number of arguments");
  auto sorted = alt_sort(args);
  if (!sorted) return {};
  auto it = table.find(sorted->first);
  if (it == table.end()) return {};
  return vec_scale(it->second, Scalar(sorted->second));
}

Vec AltMap::apply(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("AltMap: wrong number of arguments");
  Vec out;
  std::vector<std::string> tuple(args.size());
  std::function<void(size_t, Scalar)> rec = [&](size_t pos, Scalar coeff) {
    if (pos == args.size()) {
      out = vec_added(out, vec_scale(apply_basis(tuple), coeff), Scalar(1));
      return;
    }
    for (const auto& [id, c] : args[pos]) {
      if (c == 0) continue;
      tuple[pos] = id;
      rec(pos + 1, coeff * c);
    }
  };
  rec(0, Scalar(1));
  return out;
}

void AltMap::set(const std::vector<std::string>& args, const Vec& value) {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("AltMap: wrong number of arguments");
  auto sorted = alt_sort(args);
  if (!sorted) throw std::invalid_argument("AltMap::set: repeated argument");
  Vec v = vec_scale(value, Scalar(sorted->second));
  if (vec_is_zero(v))
    table.erase(sorted->first);
  else
    table[sorted->first] = v;
}

AltMap chevalley_eilenberg(const GradedSpace& A, const AltMap& b, const AltMap& f) {
  if (b.arity != 2) throw std::invalid_argument("chevalley_eilenberg: b must be binary");
  int n = f.arity;
  AltMap out;
  out.arity = n + 1;
  for_each_increasing(A, n + 1, [&](const std::vector<std::string>& x) {
    Vec v;
    for (int k = 0; k <= n; ++k) {
      std::vector<std::string> rest;
      for (int j = 0; j <= n; ++j)
        if (j != k) rest.push_back(x[j]);
      Vec inner = f.apply_basis(rest);
      v = vec_added(v, b.apply({Vec{{x[k], Scalar(1)}}, inner}), sign_pow(k));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Vec br = b.apply_basis({x[i], x[j]});
        std::vector<Vec> fargs{br};
        for (int k = 0; k <= n; ++k)
          if (k != i && k != j) fargs.push_back(Vec{{x[k], Scalar(1)}});
        v = vec_added(v, f.apply(fargs), sign_pow(i + j));
      }
    if (!vec_is_zero(v)) out.table[x] = v;
  });
  return out;
}

namespace {

// Nijenhuis-Richardson circle product on a fixed increasing tuple.
Vec nr_circ(const AltMap& f, const AltMap& g, const std::vector<std::string>& x) {
  int n = f.arity, m = g.arity;
  int total = n + m - 1;
  Vec out;
  std::vector<int> pick(m);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == m) {
      std::vector<bool> used(total, false);
      std::vector<std::string> gargs;
      for (int p : pick) {
        used[p] = true;
        gargs.push_back(x[p]);
      }
      // Shuffle sign: moving the picked entries to the front.
      int inversions = 0;
      for (int q = 0; q < m; ++q) inversions += pick[q] - q;
      Vec inner = g.apply_basis(gargs);
      std::vector<Vec> fargs{inner};
      for (int k = 0; k < total; ++k)
        if (!used[k]) fargs.push_back(Vec{{x[k], Scalar(1)}});
      out = vec_added(out, f.apply(fargs), sign_pow(inversions));
      return;
    }
    for (int i = start; i <= total - (m - pos); ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

AltMap nijenhuis_richardson(const GradedSpace& A, const AltMap& f, const AltMap& g) {
  int n = f.arity, m = g.arity;
  AltMap out;
  out.arity = n + m - 1;
  Scalar flip = sign_pow(static_cast<long long>(n - 1) * (m - 1));
  for_each_increasing(A, out.arity, [&](const std::vector<std::string>& x) {
    Vec v = vec_added(nr_circ(f, g, x), vec_scale(nr_circ(g, f, x), flip),
                    Scalar(-1));
    if (!vec_is_zero(v)) out.table[x] = v;
  });
  return out;
}

AltMap jacobi_residual(const GradedSpace& A, const AltMap& b) {
  AltMap br = nijenhuis_richardson(A, b, b);
  AltMap out;
  out.arity = br.arity;
  for (auto& [t, v] : br.table) {
    Vec half = vec_scale(v, Scalar(1) / Scalar(2));
    if (!vec_is_zero(half)) out.table[t] = half;
  }
  return out;
}

}  // namespace mct

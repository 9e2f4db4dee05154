#include "mct/dupont.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace mct {

namespace {

void mono_add(PolyForm& target, FormMono mono, const Scalar& c) {
  if (c == 0) return;
  auto it = target.find(mono);
  if (it == target.end()) {
    target.emplace(std::move(mono), c);
  } else {
    it->second += c;
    if (it->second == 0) target.erase(it);
  }
}

int popcount_below(unsigned mask, int bit) {
  return std::popcount(mask & ((1u << bit) - 1u));
}

}  // namespace

PolyForm form_zero() { return {}; }

PolyForm form_const(const FormCtx& ctx, const Scalar& c) {
  PolyForm out;
  if (c == 0) return out;
  FormMono m;
  m.expts.assign(ctx.n, 0);
  out.emplace(std::move(m), c);
  return out;
}

PolyForm form_t(const FormCtx& ctx, int i) {
  if (i < 0 || i > ctx.n) throw std::out_of_range("form_t: bad index");
  PolyForm out;
  if (i == 0) {
    out = form_const(ctx, 1);
    for (int v = 1; v <= ctx.n; ++v) {
      FormMono m;
      m.expts.assign(ctx.n, 0);
      m.expts[v - 1] = 1;
      mono_add(out, std::move(m), -1);
    }
    return out;
  }
  FormMono m;
  m.expts.assign(ctx.n, 0);
  m.expts[i - 1] = 1;
  out.emplace(std::move(m), Scalar(1));
  return out;
}

PolyForm form_dt(const FormCtx& ctx, int i) {
  if (i < 0 || i > ctx.n) throw std::out_of_range("form_dt: bad index");
  PolyForm out;
  if (i == 0) {
    for (int v = 1; v <= ctx.n; ++v) {
      FormMono m;
      m.expts.assign(ctx.n, 0);
      m.mask = 1u << (v - 1);
      mono_add(out, std::move(m), -1);
    }
    return out;
  }
  FormMono m;
  m.expts.assign(ctx.n, 0);
  m.mask = 1u << (i - 1);
  out.emplace(std::move(m), Scalar(1));
  return out;
}

PolyForm form_add(const PolyForm& a, const PolyForm& b) {
  PolyForm out = a;
  for (const auto& [m, c] : b) mono_add(out, m, c);
  return out;
}

PolyForm form_scale(const PolyForm& a, const Scalar& c) {
  PolyForm out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : a) out.emplace(m, coeff * c);
  return out;
}

PolyForm form_sub(const PolyForm& a, const PolyForm& b) {
  return form_add(a, form_scale(b, -1));
}

bool form_is_zero(const PolyForm& a) { return a.empty(); }

PolyForm wedge(const FormCtx& ctx, const PolyForm& a, const PolyForm& b) {
  PolyForm out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.mask & mb.mask) continue;
      // Sign of merging the two ascending dt lists.
      long long inv = 0;
      for (int v = 0; v < ctx.n; ++v)
        if (mb.mask & (1u << v))
          inv += std::popcount(ma.mask >> (v + 1));
      FormMono m;
      m.mask = ma.mask | mb.mask;
      m.expts.resize(ctx.n);
      for (int v = 0; v < ctx.n; ++v) m.expts[v] = ma.expts[v] + mb.expts[v];
      mono_add(out, std::move(m), ca * cb * sign_pow(inv));
    }
  return out;
}

PolyForm form_d(const FormCtx& ctx, const PolyForm& a) {
  PolyForm out;
  for (const auto& [m, c] : a)
    for (int v = 0; v < ctx.n; ++v) {
      if (m.expts[v] == 0 || (m.mask & (1u << v))) continue;
      FormMono nm = m;
      nm.expts[v] -= 1;
      nm.mask |= 1u << v;
      int sign = sign_pow(popcount_below(m.mask, v));
      mono_add(out, std::move(nm), c * m.expts[v] * sign);
    }
  return out;
}

int form_degree(const PolyForm& a) {
  if (a.empty()) throw std::invalid_argument("form_degree: zero form");
  int deg = -std::popcount(a.begin()->first.mask);
  for (const auto& [m, c] : a)
    if (-std::popcount(m.mask) != deg)
      throw std::invalid_argument("form_degree: inhomogeneous form");
  return deg;
}

PolyForm substitute(const FormCtx& src, const PolyForm& a, const FormCtx& tgt,
                    const std::vector<PolyForm>& images) {
  if (static_cast<int>(images.size()) != src.n)
    throw std::invalid_argument("substitute: need one image per variable");
  PolyForm out;
  for (const auto& [m, c] : a) {
    PolyForm term = form_const(tgt, c);
    for (int v = 0; v < src.n; ++v)
      for (int e = 0; e < m.expts[v]; ++e) term = wedge(tgt, term, images[v]);
    for (int v = 0; v < src.n; ++v)
      if (m.mask & (1u << v)) term = wedge(tgt, term, form_d(tgt, images[v]));
    out = form_add(out, term);
  }
  return out;
}

PolyForm face(const FormCtx& ctx, const PolyForm& a, int i) {
  if (i < 0 || i > ctx.n) throw std::out_of_range("face: bad index");
  FormCtx tgt{ctx.n - 1};
  std::vector<PolyForm> images(ctx.n);
  for (int v = 1; v <= ctx.n; ++v) {
    if (v < i)
      images[v - 1] = form_t(tgt, v);
    else if (v == i)
      images[v - 1] = form_zero();
    else
      images[v - 1] = form_t(tgt, v - 1);  // v-1 == 0 expands to 1 - sum
  }
  return substitute(ctx, a, tgt, images);
}

PolyForm degeneracy(const FormCtx& ctx, const PolyForm& a, int j) {
  if (j < 0 || j > ctx.n) throw std::out_of_range("degeneracy: bad index");
  FormCtx tgt{ctx.n + 1};
  std::vector<PolyForm> images(ctx.n);
  for (int v = 1; v <= ctx.n; ++v) {
    if (v < j)
      images[v - 1] = form_t(tgt, v);
    else if (v == j)
      images[v - 1] = form_add(form_t(tgt, j), form_t(tgt, j + 1));
    else
      images[v - 1] = form_t(tgt, v + 1);
  }
  return substitute(ctx, a, tgt, images);
}

Scalar integrate(const FormCtx& ctx, const PolyForm& a) {
  unsigned full = (ctx.n == 0) ? 0u : ((1u << ctx.n) - 1u);
  Scalar out = 0;
  for (const auto& [m, c] : a) {
    if (m.mask != full) continue;
    Scalar num = 1;
    long long total = ctx.n;
    for (int v = 0; v < ctx.n; ++v) {
      num *= factorial(m.expts[v]);
      total += m.expts[v];
    }
    out += c * num / factorial(static_cast<unsigned>(total));
  }
  return out;
}

Scalar eval_vertex(const FormCtx& ctx, const PolyForm& a, int i) {
  Scalar out = 0;
  for (const auto& [m, c] : a) {
    if (m.mask != 0) continue;
    bool ok = true;
    for (int v = 1; v <= ctx.n; ++v)
      if (m.expts[v - 1] != 0 && v != i) ok = false;
    if (ok) out += c;
  }
  return out;
}

PolyForm whitney(const FormCtx& ctx, const std::vector<int>& indices) {
  int k = static_cast<int>(indices.size()) - 1;
  if (k < 0) throw std::invalid_argument("whitney: empty index list");
  PolyForm out;
  for (int j = 0; j <= k; ++j) {
    PolyForm term = form_t(ctx, indices[j]);
    for (int m = 0; m <= k; ++m) {
      if (m == j) continue;
      term = wedge(ctx, term, form_dt(ctx, indices[m]));
    }
    out = form_add(out, form_scale(term, sign_pow(j)));
  }
  return form_scale(out, factorial(static_cast<unsigned>(k)));
}

namespace {

std::string whitney_id(const std::vector<int>& indices) {
  std::string id = "w";
  for (int i : indices) id += std::to_string(i);
  return id;
}

void whitney_subsets(int n, std::vector<std::vector<int>>& out) {
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> indices;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) indices.push_back(i);
    out.push_back(std::move(indices));
  }
}

}  // namespace

GradedSpace whitney_space(int n) {
  GradedSpace out;
  std::vector<std::vector<int>> subsets;
  whitney_subsets(n, subsets);
  for (const auto& I : subsets)
    out.basis.push_back({whitney_id(I), -(static_cast<int>(I.size()) - 1), 0});
  return out;
}

GMap whitney_d(int n) {
  GMap d;
  d.degree = -1;
  std::vector<std::vector<int>> subsets;
  whitney_subsets(n, subsets);
  for (const auto& I : subsets) {
    Vec img;
    for (int i = 0; i <= n; ++i) {
      if (std::find(I.begin(), I.end(), i) != I.end()) continue;
      std::vector<int> J = I;
      int pos = 0;
      while (pos < static_cast<int>(J.size()) && J[pos] < i) ++pos;
      J.insert(J.begin() + pos, i);
      vec_add(img, whitney_id(J), Scalar(sign_pow(pos)));
    }
    if (!img.empty()) d.images[whitney_id(I)] = img;
  }
  return d;
}

PolyForm i_map(const FormCtx& ctx, const Vec& w) {
  PolyForm out;
  for (const auto& [id, c] : w) {
    std::vector<int> I;
    for (size_t pos = 1; pos < id.size(); ++pos) I.push_back(id[pos] - '0');
    out = form_add(out, form_scale(whitney(ctx, I), c));
  }
  return out;
}

Vec p_map(const FormCtx& ctx, const PolyForm& a) {
  Vec out;
  std::vector<std::vector<int>> subsets;
  whitney_subsets(ctx.n, subsets);
  for (const auto& I : subsets) {
    int k = static_cast<int>(I.size()) - 1;
    Scalar coeff;
    if (k == 0) {
      coeff = eval_vertex(ctx, a, I[0]);
    } else {
      FormCtx tgt{k};
      std::vector<PolyForm> images(ctx.n, form_zero());
      for (int j = 0; j <= k; ++j) {
        if (I[j] == 0) continue;  // t_0 is not an explicit variable
        images[I[j] - 1] = form_t(tgt, j);  // j == 0 expands to 1 - sum
      }
      coeff = integrate(tgt, substitute(ctx, a, tgt, images));
    }
    vec_add(out, whitney_id(I), coeff);
  }
  return out;
}

PolyForm h_single(const FormCtx& ctx, const PolyForm& a, int i) {
  // Extended polynomial ring: variables t_1..t_n plus u as variable n+1.
  FormCtx ext{ctx.n + 1};
  // Dilation from vertex i: u = 0 sits at the vertex and u = 1 at the
  // identity, which fixes the orientation of the fiber integral so that
  // 1 - ip = dh + hd (and not its negative).
  PolyForm u = form_t(ext, ctx.n + 1);
  PolyForm one_minus_u = form_sub(form_const(ext, 1), u);
  std::vector<PolyForm> images(ctx.n);
  for (int v = 1; v <= ctx.n; ++v) {
    images[v - 1] = wedge(ext, u, form_t(ext, v));
    if (v == i) images[v - 1] = form_add(images[v - 1], one_minus_u);
  }
  PolyForm pulled = substitute(ctx, a, ext, images);
  // Keep the du part, rewrite dt_S ^ du = (-1)^{|S|} du ^ dt_S, then
  // integrate u over [0,1].
  PolyForm out;
  unsigned ubit = 1u << ctx.n;
  for (const auto& [m, c] : pulled) {
    if (!(m.mask & ubit)) continue;
    int s = std::popcount(m.mask & ~ubit);
    FormMono nm;
    nm.mask = m.mask & ~ubit;
    nm.expts.assign(m.expts.begin(), m.expts.begin() + ctx.n);
    int ue = m.expts[ctx.n];
    mono_add(out, std::move(nm), c * Scalar(sign_pow(s)) / Scalar(ue + 1));
  }
  return out;
}

PolyForm h_map(const FormCtx& ctx, const PolyForm& a) {
  PolyForm out;
  std::vector<std::vector<int>> subsets;
  whitney_subsets(ctx.n, subsets);
  for (const auto& I : subsets) {
    if (static_cast<int>(I.size()) - 1 >= ctx.n) continue;  // k <= n-1
    // Composite h_(ik) o ... o h_(i0) with an overall (-1)^k; levels up to
    // 3 confirm this is the sign that makes 1 - ip = dh + hd hold.
    PolyForm acc = a;
    for (int idx : I) acc = h_single(ctx, acc, idx);
    if (form_is_zero(acc)) continue;
    PolyForm term = wedge(ctx, whitney(ctx, I), acc);
    if ((I.size() - 1) % 2) term = form_scale(term, Scalar(-1));
    out = form_add(out, term);
  }
  return out;
}

std::vector<PolyForm> form_monomials(const FormCtx& ctx, int deg_cap) {
  std::vector<PolyForm> out;
  std::vector<int> expts(ctx.n, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == ctx.n) {
      for (unsigned mask = 0; mask < (1u << ctx.n); ++mask) {
        FormMono m;
        m.expts = expts;
        m.mask = mask;
        out.push_back(PolyForm{{m, Scalar(1)}});
      }
      return;
    }
    for (int e = 0; e <= left; ++e) {
      expts[v] = e;
      rec(v + 1, left - e);
    }
    expts[v] = 0;
  };
  rec(0, deg_cap);
  return out;
}

std::optional<std::string> verify_contraction(int n, int poly_deg_cap) {
  FormCtx ctx{n};
  GradedSpace W = whitney_space(n);
  GMap dC = whitney_d(n);
  std::ostringstream os;
  // On the Whitney complex: p i = id, h i = 0, d i = i dC.
  for (const auto& b : W.basis) {
    Vec e{{b.id, Scalar(1)}};
    PolyForm ib = i_map(ctx, e);
    if (p_map(ctx, ib) != e) {
      os << "p(i(" << b.id << ")) != " << b.id;
      return os.str();
    }
    if (!form_is_zero(h_map(ctx, ib))) {
      os << "h(i(" << b.id << ")) != 0";
      return os.str();
    }
    if (!form_is_zero(form_sub(form_d(ctx, ib), i_map(ctx, dC.apply(e))))) {
      os << "d(i(" << b.id << "))) != i(d(" << b.id << "))";
      return os.str();
    }
  }
  // On monomial forms: homotopy identity, side conditions, p chain map.
  int count = 0;
  for (const auto& f : form_monomials(ctx, poly_deg_cap)) {
    ++count;
    PolyForm hf = h_map(ctx, f);
    PolyForm lhs = form_sub(f, i_map(ctx, p_map(ctx, f)));
    PolyForm rhs = form_add(form_d(ctx, hf), h_map(ctx, form_d(ctx, f)));
    if (!form_is_zero(form_sub(lhs, rhs)))
      return "1 - ip != dh + hd on monomial #" + std::to_string(count);
    if (!vec_is_zero(p_map(ctx, hf)))
      return "p h != 0 on monomial #" + std::to_string(count);
    if (!form_is_zero(h_map(ctx, hf)))
      return "h h != 0 on monomial #" + std::to_string(count);
    Vec pd = p_map(ctx, form_d(ctx, f));
    Vec dp = dC.apply(p_map(ctx, f));
    if (pd != dp) return "p d != d p on monomial #" + std::to_string(count);
  }
  return std::nullopt;
}

}  // namespace mct

#include "mct/convolution.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace mct {

int ConilCoalg::max_arity() const {
  int m = 1;
  for (const auto& [n, _] : delta) m = std::max(m, n);
  return m;
}

namespace {

// ell_n^A ( f_{order[0]} x ... x f_{order[n-1]} ) Delta_n, one pass.
Vec conv_one_pass(const ConvAlg& cv, const std::vector<const GMap*>& fs,
                  const std::string& c) {
  int n = static_cast<int>(fs.size());
  auto arity_it = cv.C.delta.find(n);
  if (arity_it == cv.C.delta.end()) return {};
  auto word_it = arity_it->second.find(c);
  if (word_it == arity_it->second.end()) return {};
  Vec out;
  for (const auto& [word, coeff] : word_it->second) {
    std::vector<Vec> args;
    std::vector<const GradedSpace*> spaces;
    for (const auto& id : word) {
      args.push_back(Vec{{id, Scalar(1)}});
      spaces.push_back(&cv.C.space);
    }
    TensorApplyResult applied = tensor_apply(fs, args, spaces);
    if (applied.sign == 0) continue;
    Vec v = cv.A->apply(n, applied.factors);
    out = vec_added(out, v, coeff * Scalar(applied.sign));
  }
  return out;
}

}  // namespace

GMap conv_del(const ConvAlg& cv, const GMap& f) {
  GMap df = cv.A->differential();
  GMap out = gmap_compose(df, f);
  out = gmap_add(out, gmap_scale(gmap_compose(f, cv.C.d), -sign_pow(f.degree)));
  out.degree = f.degree - 1;
  return out;
}

GMap conv_op(const ConvAlg& cv, const std::vector<GMap>& fs) {
  int n = static_cast<int>(fs.size());
  if (n == 1) return conv_del(cv, fs[0]);
  GMap out;
  int total = 0;
  for (const auto& f : fs) total += f.degree;
  out.degree = total - 1;

  std::vector<int> fdeg;
  for (const auto& f : fs) fdeg.push_back(f.degree);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& b : cv.C.space.basis) {
    Vec image;
    std::vector<int> p = perm;
    do {
      int sgn = koszul_sign(p, fdeg);
      if (sgn == 0) continue;
      std::vector<const GMap*> ordered;
      for (int idx : p) ordered.push_back(&fs[idx]);
      image = vec_added(image, conv_one_pass(cv, ordered, b.id), Scalar(sgn));
    } while (std::next_permutation(p.begin(), p.end()));
    if (!vec_is_zero(image)) out.images[b.id] = image;
  }
  return out;
}

namespace {

std::string hom_id(const std::string& c, const std::string& a) { return c + "|" + a; }

GMap elementary(const ConvAlg& cv, const std::string& c, const std::string& a) {
  GMap f;
  f.degree = cv.A->space.deg(a) - cv.C.space.deg(c);
  f.images[c] = Vec{{a, Scalar(1)}};
  return f;
}

}  // namespace

SLInfty conv_slinfty(const ConvAlg& cv, int arity_cap) {
  SLInfty out;
  out.arity_cap = arity_cap;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& c : cv.C.space.basis)
    for (const auto& a : cv.A->space.basis) {
      out.space.basis.push_back(
          BasisElement{hom_id(c.id, a.id), a.deg - c.deg, 0});
      pairs.emplace_back(c.id, a.id);
    }

  auto to_hom_vec = [&](const GMap& g) {
    Vec v;
    for (const auto& [c, img] : g.images)
      for (const auto& [a, coeff] : img)
        if (coeff != 0) v[hom_id(c, a)] = coeff;
    return v;
  };

  // Tuples of hom-basis indices, non-decreasing.
  std::function<void(int, size_t, std::vector<size_t>&)> rec =
      [&](int n, size_t start, std::vector<size_t>& picked) {
        if (static_cast<int>(picked.size()) == n) {
          std::vector<GMap> fs;
          std::vector<std::string> ids;
          for (size_t k : picked) {
            fs.push_back(elementary(cv, pairs[k].first, pairs[k].second));
            ids.push_back(hom_id(pairs[k].first, pairs[k].second));
          }
          GMap value = (n == 1) ? conv_del(cv, fs[0]) : conv_op(cv, fs);
          Vec v = to_hom_vec(value);
          if (!vec_is_zero(v)) out.set_op(n, ids, v);
          return;
        }
        for (size_t k = start; k < pairs.size(); ++k) {
          picked.push_back(k);
          rec(n, k, picked);
          picked.pop_back();
        }
      };
  for (int n = 1; n <= arity_cap; ++n) {
    std::vector<size_t> picked;
    rec(n, 0, picked);
  }
  return out;
}

TwResult mc_equals_tw(const ConvAlg& cv, const GMap& phi) {
  if (phi.degree != 0)
    throw std::invalid_argument("mc_equals_tw: phi must have degree 0");
  TwResult out;
  // Pipeline 1: polarized brackets with 1/n! weights.
  out.residual_mc = conv_del(cv, phi);
  for (int n = 2; n <= cv.C.max_arity(); ++n) {
    std::vector<GMap> copies(n, phi);
    out.residual_mc = gmap_add(
        out.residual_mc, gmap_scale(conv_op(cv, copies), Scalar(1) / factorial(n)));
  }
  // Pipeline 2: one-pass twisting-morphism residual over the decomposition.
  out.residual_tw = conv_del(cv, phi);
  for (int n = 2; n <= cv.C.max_arity(); ++n) {
    GMap star;
    star.degree = -1;
    std::vector<const GMap*> fs(n, &phi);
    for (const auto& b : cv.C.space.basis) {
      Vec v = conv_one_pass(cv, fs, b.id);
      if (!vec_is_zero(v)) star.images[b.id] = v;
    }
    out.residual_tw = gmap_add(out.residual_tw, star);
  }
  out.equal = gmap_equal(out.residual_mc, out.residual_tw);
  return out;
}

// ---------------------------------------------------------------- A^n

namespace {

std::string xmono(int a, bool y) {
  return "x" + std::to_string(a) + (y ? "y" : "");
}

// Parse "x<a>" / "x<a>y"; returns (a, has_y).
std::pair<int, bool> parse_mono(const std::string& id) {
  bool y = id.back() == 'y';
  int a = std::stoi(id.substr(1, id.size() - 1 - (y ? 1 : 0)));
  return {a, y};
}

}  // namespace

Vec AnFixture::multiply(const Vec& u, const Vec& v) const {
  Vec out;
  for (const auto& [iu, cu] : u)
    for (const auto& [iv, cv] : v) {
      auto [a, ya] = parse_mono(iu);
      auto [b, yb] = parse_mono(iv);
      if (ya && yb) continue;  // y^2 = 0
      std::string id = xmono(a + b, ya || yb);
      if (!big.contains(id)) continue;  // truncation
      out = vec_added(out, Vec{{id, Scalar(1)}}, cu * cv);
    }
  return out;
}

AnFixture build_An(int n, int deg_cap) {
  if (n < 2) throw std::invalid_argument("build_An: n must be >= 2");
  AnFixture fx;
  fx.n = n;
  fx.deg_cap = deg_cap;
  for (int a = 1; a <= deg_cap; ++a)
    fx.big.basis.push_back(BasisElement{xmono(a, false), 0, a});
  for (int a = 0; a <= deg_cap - n; ++a)
    fx.big.basis.push_back(BasisElement{xmono(a, true), 1, a + n});
  for (int a = 1; a < n; ++a)
    fx.small.basis.push_back(BasisElement{"z" + std::to_string(a), 0, a});

  fx.d.degree = -1;
  for (int a = 0; a <= deg_cap - n; ++a)
    fx.d.images[xmono(a, true)] = Vec{{xmono(a + n, false), Scalar(1)}};

  fx.i.degree = 0;
  fx.p.degree = 0;
  for (int a = 1; a < n; ++a) {
    fx.i.images["z" + std::to_string(a)] = Vec{{xmono(a, false), Scalar(1)}};
    fx.p.images[xmono(a, false)] = Vec{{"z" + std::to_string(a), Scalar(1)}};
  }
  fx.h.degree = 1;
  for (int a = n; a <= deg_cap; ++a)
    fx.h.images[xmono(a, false)] = Vec{{xmono(a - n, true), Scalar(1)}};
  return fx;
}

NsContraction<Vec> an_ns_contraction(const AnFixture& fx) {
  // Shifted incarnation: degrees raised by one, mu_1 = -d,
  // mu_2(sx, sy) = (-1)^{|x|} s(x y), homotopy -h.
  GradedSpace shifted = suspend(fx.big, 1);
  auto sh = std::make_shared<AnFixture>(fx);

  NsContraction<Vec> C;
  C.small = suspend(fx.small, 1);
  C.big.arity_cap = 4;
  auto shifted_space = std::make_shared<GradedSpace>(shifted);
  C.big.mu = [sh, shifted_space](int n, const std::vector<Vec>& args) -> Vec {
    if (n == 1) return vec_scale(sh->d.apply(args[0]), Scalar(-1));
    if (n == 2) {
      // bilinear with the sign (-1)^{classical degree of the left factor}
      Vec out;
      for (const auto& [ia, ca] : args[0]) {
        int cl = shifted_space->deg(ia) - 1;
        Vec part = sh->multiply(Vec{{ia, Scalar(1)}}, args[1]);
        out = vec_added(out, part, ca * sign_pow(cl));
      }
      return out;
    }
    return {};  // strict associative algebra: no higher operations
  };
  C.big.h = [sh](const Vec& v) { return vec_scale(sh->h.apply(v), Scalar(-1)); };
  C.big.is_zero = [](const Vec& v) { return vec_is_zero(v); };
  C.big.zero = []() { return Vec{}; };
  C.big.add = [](const Vec& a, const Vec& b) { return vec_added(a, b, Scalar(1)); };
  C.big.scale = [](const Scalar& c, const Vec& v) { return vec_scale(v, c); };
  C.i_basis = [sh](const std::string& id) { return sh->i.apply_basis(id); };
  C.p = [sh](const Vec& v) { return sh->p.apply(v); };
  return C;
}

// ------------------------------------------------ bifunctor counterexample

namespace {

struct DeltaOption {
  int dec_deg = 0;            // degree of the coalgebra decoration (arity - 1)
  std::vector<int> leaves;    // indices of the v's
  Scalar coeff = 1;
};

// Decomposition of v_i into components of arity 1..3:
//   arity 1: id (x) v_i
//   arity 2: sum_{a+b=i-1} (-1)^a  dec (x) v_a (x) v_b
//   arity 3: -sum_{a+b+c=i-2} (-1)^b  dec (x) v_a (x) v_b (x) v_c
std::vector<DeltaOption> delta_v(int i) {
  std::vector<DeltaOption> out;
  out.push_back({0, {i}, Scalar(1)});
  for (int a = 1; a <= i - 2; ++a)
    out.push_back({1, {a, i - 1 - a}, Scalar(sign_pow(a))});
  for (int a = 1; a <= i - 4; ++a)
    for (int b = 1; a + b <= i - 3; ++b)
      out.push_back({2, {a, b, i - 2 - a - b}, Scalar(-sign_pow(b))});
  return out;
}

// f_t applied to v_j: f_1(v_1) = f_1(v_2) = z, f_2(v_1) = f_3(v_1) = z,
// otherwise zero. Returns whether the value is nonzero; the value is
// always the generator z.
bool f_nonzero(int t, int j) {
  if (t == 1) return j == 1 || j == 2;
  return j == 1;
}

// Sign of applying f_1 (x) f_2 (x) f_3 to the flat leaf word, after
// extracting all decorations to the left:
//  - extraction: each decoration passes the leaves of earlier blocks;
//  - application: f_t (of parity j_t on v_{j_t}) passes the total
//    decoration degree plus the leaves before its own.
int f_block_sign(const std::vector<std::pair<int, std::vector<int>>>& blocks) {
  int total_dec = 0, exp = 0, seen = 0;
  for (const auto& [dec, leaves] : blocks) {
    exp += dec * seen;
    for (int j : leaves) seen += j;
    total_dec += dec;
  }
  int before = 0, t = 0;
  for (const auto& [dec, leaves] : blocks)
    for (int j : leaves) {
      ++t;
      exp += j * (total_dec + before);
      before += j;
    }
  (void)t;
  return (exp % 2 == 0) ? 1 : -1;
}

}  // namespace

CounterexampleResult counterexample_run(bool trivial) {
  AnFixture fx = build_An(2, 8);
  const Vec z{{"z1", Scalar(1)}};
  Vec iz = fx.i.apply(z);  // x

  // Transferred components, computed from the contraction itself.
  // i_1 = i, i_2 = h(i . i), i_3 = sum over binary planar trees of h-composites.
  Vec i2 = fx.h.apply(fx.multiply(iz, iz));
  Vec i3 = vec_added(fx.h.apply(fx.multiply(fx.h.apply(fx.multiply(iz, iz)), iz)),
                   fx.h.apply(fx.multiply(iz, fx.h.apply(fx.multiply(iz, iz)))),
                   Scalar(1));
  // Products on the homology: m_2 = p(i . i), m_3 over the same trees.
  Vec m2 = fx.p.apply(fx.multiply(iz, iz));
  Vec m3 = vec_added(fx.p.apply(fx.multiply(fx.h.apply(fx.multiply(iz, iz)), iz)),
                   fx.p.apply(fx.multiply(iz, fx.h.apply(fx.multiply(iz, iz)))),
                   Scalar(1));

  auto i_comp = [&](int arity) -> Vec {
    if (arity == 1) return iz;
    if (arity == 2) return trivial ? Vec{} : i2;
    return trivial ? Vec{} : i3;
  };
  auto m_comp = [&](int arity) -> Vec {
    if (arity == 1) return z;
    if (arity == 2) return m2;
    return m3;
  };

  CounterexampleResult res;

  // ---- First composite: Phi, then blockwise decomposition, then F, then
  // blockwise i-components, then the product in the big algebra.
  {
    std::vector<std::vector<int>> comps;  // compositions of 4
    std::function<void(int, std::vector<int>&)> gen = [&](int rest,
                                                          std::vector<int>& cur) {
      if (rest == 0) {
        if (!cur.empty() && cur.size() <= 3) comps.push_back(cur);
        return;
      }
      for (int part = 1; part <= rest; ++part) {
        cur.push_back(part);
        gen(rest - part, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    gen(4, cur);

    for (const auto& word : comps) {
      if (trivial && word.size() != 1) continue;  // Phi = identity
      // Decorate each slot with a decomposition component; keep 3 leaves.
      std::vector<std::vector<DeltaOption>> options;
      for (int i : word) options.push_back(delta_v(i));
      std::vector<size_t> pick(word.size(), 0);
      std::function<void(size_t, int, Scalar)> walk = [&](size_t slot, int leaves,
                                                          Scalar coeff) {
        if (slot == word.size()) {
          if (leaves != 3) return;
          std::vector<std::pair<int, std::vector<int>>> blocks;
          for (size_t s = 0; s < word.size(); ++s) {
            const DeltaOption& o = options[s][pick[s]];
            blocks.emplace_back(o.dec_deg, o.leaves);
          }
          // F: kill terms outside the support of the f's.
          int t = 0;
          for (const auto& [dec, lv] : blocks)
            for (int j : lv)
              if (!f_nonzero(++t, j)) return;
          Scalar total = coeff * Scalar(f_block_sign(blocks));
          // Blockwise i-components, then multiply everything.
          Vec prod;
          bool first_block = true;
          for (const auto& [dec, lv] : blocks) {
            Vec val = i_comp(static_cast<int>(lv.size()));
            if (vec_is_zero(val)) return;
            prod = first_block ? val : fx.multiply(prod, val);
            first_block = false;
          }
          res.first = vec_added(res.first, prod, total);
          return;
        }
        for (size_t k = 0; k < options[slot].size(); ++k) {
          pick[slot] = k;
          const DeltaOption& o = options[slot][k];
          walk(slot + 1, leaves + static_cast<int>(o.leaves.size()),
               coeff * o.coeff);
        }
      };
      walk(0, 0, Scalar(1));
    }
  }

  // ---- Second composite: decomposition of v_4, then Phi on each factor,
  // then F, then homology products blockwise, then the i-component of the
  // outer arity.
  {
    for (const DeltaOption& outer : delta_v(4)) {
      size_t p_out = outer.leaves.size();
      // Phi on each leaf: all compositions of its index (identity: arity 1).
      std::vector<std::vector<std::vector<int>>> options(p_out);
      for (size_t s = 0; s < p_out; ++s) {
        std::function<void(int, std::vector<int>&)> gen = [&](int rest,
                                                              std::vector<int>& cur) {
          if (rest == 0) {
            if (!cur.empty() && cur.size() <= 3 && !(trivial && cur.size() != 1))
              options[s].push_back(cur);
            return;
          }
          for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            gen(rest - part, cur);
            cur.pop_back();
          }
        };
        std::vector<int> cur;
        gen(outer.leaves[s], cur);
      }
      std::vector<size_t> pick(p_out, 0);
      std::function<void(size_t, int)> walk = [&](size_t slot, int leaves) {
        if (slot == p_out) {
          if (leaves != 3) return;
          std::vector<std::pair<int, std::vector<int>>> blocks;
          blocks.emplace_back(outer.dec_deg, std::vector<int>{});  // outer dec
          for (size_t s = 0; s < p_out; ++s)
            blocks.emplace_back(0, options[s][pick[s]]);
          int t = 0;
          for (const auto& [dec, lv] : blocks)
            for (int j : lv)
              if (!f_nonzero(++t, j)) return;
          Scalar total = outer.coeff * Scalar(f_block_sign(blocks));
          // Homology products blockwise; coefficients of z multiply.
          Scalar zcoeff(1);
          for (size_t s = 0; s < p_out; ++s) {
            Vec val = m_comp(static_cast<int>(options[s][pick[s]].size()));
            auto it = val.find("z1");
            if (it == val.end() || it->second == 0) return;
            zcoeff *= it->second;
          }
          // Outer i-component applied to p_out copies of z.
          Vec out_val = i_comp(static_cast<int>(p_out));
          if (vec_is_zero(out_val)) return;
          res.second = vec_added(res.second, out_val, total * zcoeff);
          return;
        }
        for (size_t k = 0; k < options[slot].size(); ++k) {
          pick[slot] = k;
          walk(slot + 1, leaves + static_cast<int>(options[slot][k].size()));
        }
      };
      walk(0, 0);
    }
  }

  return res;
}

}  // namespace mct

#include "mct/freelie.hpp"

#include <stdexcept>

#include "mct/linalg.hpp"

namespace mct {

int FreeLieCtx::word_degree(const Word& w) const {
  int d = 0;
  for (int g : w) d += gen_degrees.at(g);
  return d;
}

TensorElt fl_gen(int index) { return {{Word{index}, Scalar(1)}}; }
TensorElt fl_zero() { return {}; }

TensorElt fl_add(const TensorElt& a, const TensorElt& b) {
  TensorElt out = a;
  for (const auto& [w, c] : b) {
    auto it = out.find(w);
    if (it == out.end()) {
      out.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

TensorElt fl_scale(const TensorElt& a, const Scalar& c) {
  TensorElt out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : a) out.emplace(w, coeff * c);
  return out;
}

TensorElt fl_sub(const TensorElt& a, const TensorElt& b) {
  return fl_add(a, fl_scale(b, -1));
}

bool fl_is_zero(const TensorElt& a) { return a.empty(); }

TensorElt fl_mul(const FreeLieCtx& ctx, const TensorElt& a, const TensorElt& b) {
  TensorElt out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (static_cast<int>(wa.size() + wb.size()) > ctx.cap) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(std::move(w), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

TensorElt bracket(const FreeLieCtx& ctx, const TensorElt& a, const TensorElt& b) {
  TensorElt out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (static_cast<int>(wa.size() + wb.size()) > ctx.cap) continue;
      Word ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      Word ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      int sign = sign_pow(static_cast<long long>(ctx.word_degree(wa)) *
                          ctx.word_degree(wb));
      Scalar c = ca * cb;
      out = fl_add(out, TensorElt{{ab, c}});
      out = fl_add(out, TensorElt{{ba, -Scalar(sign) * c}});
    }
  return out;
}

namespace {

void require_even_positive(const FreeLieCtx& ctx, const TensorElt& a,
                           const char* who) {
  for (const auto& [w, c] : a) {
    if (w.empty())
      throw std::invalid_argument(std::string(who) + ": constant term present");
    if (ctx.word_degree(w) % 2 != 0)
      throw std::invalid_argument(std::string(who) + ": odd-degree term present");
  }
}

}  // namespace

TensorElt fl_exp(const FreeLieCtx& ctx, const TensorElt& a) {
  require_even_positive(ctx, a, "fl_exp");
  TensorElt out{{Word{}, Scalar(1)}};
  TensorElt power{{Word{}, Scalar(1)}};
  for (int n = 1; n <= ctx.cap; ++n) {
    power = fl_mul(ctx, power, a);
    if (power.empty()) break;
    out = fl_add(out, fl_scale(power, Scalar(1) / factorial(n)));
  }
  return out;
}

TensorElt fl_log(const FreeLieCtx& ctx, const TensorElt& a) {
  TensorElt u = a;
  auto unit = u.find(Word{});
  if (unit == u.end() || unit->second != 1)
    throw std::invalid_argument("fl_log: argument must be 1 + higher terms");
  u.erase(Word{});
  require_even_positive(ctx, u, "fl_log");
  TensorElt out;
  TensorElt power{{Word{}, Scalar(1)}};
  for (int n = 1; n <= ctx.cap; ++n) {
    power = fl_mul(ctx, power, u);
    if (power.empty()) break;
    Scalar c = Scalar(sign_pow(n + 1)) / n;
    out = fl_add(out, fl_scale(power, c));
  }
  return out;
}

TensorElt bch(const FreeLieCtx& ctx, const TensorElt& a, const TensorElt& b) {
  return fl_log(ctx, fl_mul(ctx, fl_exp(ctx, a), fl_exp(ctx, b)));
}

TensorElt LieDerivation::apply(const FreeLieCtx& ctx, const TensorElt& a) const {
  TensorElt out;
  for (const auto& [w, c] : a) {
    int left_degree = 0;
    for (size_t j = 0; j < w.size(); ++j) {
      // d has degree -1 (odd): moving it past the prefix costs a sign.
      int sign = sign_pow(left_degree);
      const TensorElt& img = gen_images.at(w[j]);
      for (const auto& [wi, ci] : img) {
        Word full(w.begin(), w.begin() + j);
        full.insert(full.end(), wi.begin(), wi.end());
        full.insert(full.end(), w.begin() + j + 1, w.end());
        if (static_cast<int>(full.size()) > ctx.cap) continue;
        out = fl_add(out, TensorElt{{full, c * ci * sign}});
      }
      left_degree += ctx.gen_degrees.at(w[j]);
    }
  }
  return out;
}

bool derivation_squares_to_zero(const FreeLieCtx& ctx, const LieDerivation& d) {
  for (size_t g = 0; g < d.gen_images.size(); ++g)
    if (!fl_is_zero(d.apply(ctx, d.gen_images[g]))) return false;
  return true;
}

TensorElt gauge_closed_form(const FreeLieCtx& ctx, const TensorElt& lambda,
                            const TensorElt& x0, const LieDerivation& d,
                            const Scalar& t) {
  auto ad = [&](const TensorElt& y) { return bracket(ctx, y, lambda); };
  TensorElt out;
  // e^{t ad}(x0)
  TensorElt term = x0;
  Scalar tp = 1;
  for (int n = 0; n <= ctx.cap; ++n) {
    out = fl_add(out, fl_scale(term, tp / factorial(n)));
    if (term.empty()) break;
    term = ad(term);
    tp *= t;
  }
  // sum_{n>=1} (t^n/n!) ad^{n-1}(d lambda)
  TensorElt dl = d.apply(ctx, lambda);
  term = dl;
  tp = t;
  for (int n = 1; n <= ctx.cap + 1; ++n) {
    out = fl_add(out, fl_scale(term, tp / factorial(n)));
    if (term.empty()) break;
    term = ad(term);
    tp *= t;
  }
  return out;
}

TensorElt mc_residual_lie(const FreeLieCtx& ctx, const LieDerivation& d,
                          const TensorElt& x) {
  return fl_add(d.apply(ctx, x), fl_scale(bracket(ctx, x, x), Scalar(1) / 2));
}

Scalar bernoulli(unsigned n) {
  // Invert a(t) = (e^t - 1)/t, a_k = 1/(k+1)!; then B_n = n! * b_n.
  static std::vector<Scalar> cache;
  if (n < cache.size()) return cache[n] * factorial(n);
  std::vector<Scalar> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Scalar s = 0;
    for (unsigned j = 0; j < m; ++j) s += b[j] / factorial(m - j + 1);
    b[m] = -s;
  }
  cache = b;
  return b[n] * factorial(n);
}

IntervalLie lawrence_sullivan(int cap) {
  IntervalLie il;
  il.ctx.gen_degrees = {-1, -1, 0};
  il.ctx.cap = cap;
  il.x0 = fl_gen(0);
  il.x1 = fl_gen(1);
  il.lambda = fl_gen(2);

  auto ad = [&](const TensorElt& y) { return bracket(il.ctx, y, il.lambda); };
  TensorElt dx0 = fl_scale(bracket(il.ctx, il.x0, il.x0), Scalar(-1) / 2);
  TensorElt dx1 = fl_scale(bracket(il.ctx, il.x1, il.x1), Scalar(-1) / 2);
  // d(lambda) = sum_n (B_n/n!) ad^n(x1 - x0) - ad(x0)
  TensorElt dl;
  TensorElt term = fl_sub(il.x1, il.x0);
  for (int n = 0; n <= cap; ++n) {
    dl = fl_add(dl, fl_scale(term, bernoulli(n) / factorial(n)));
    if (term.empty()) break;
    term = ad(term);
  }
  dl = fl_sub(dl, ad(il.x0));
  il.d.gen_images = {dx0, dx1, dl};
  return il;
}

std::vector<TensorElt> lie_spanning_set(const FreeLieCtx& ctx, int w) {
  int gens = static_cast<int>(ctx.gen_degrees.size());
  std::vector<TensorElt> out;
  if (w < 1 || w > ctx.cap) return out;
  std::vector<int> word(w, 0);
  while (true) {
    // right-normed bracket of the word
    TensorElt acc = fl_gen(word[w - 1]);
    for (int j = w - 2; j >= 0; --j) acc = bracket(ctx, fl_gen(word[j]), acc);
    if (!acc.empty()) out.push_back(std::move(acc));
    int j = w - 1;
    for (; j >= 0; --j) {
      if (++word[j] < gens) break;
      word[j] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

bool is_primitive(const FreeLieCtx& ctx, const TensorElt& a) {
  for (int w = 1; w <= ctx.cap; ++w) {
    // Collect the weight-w component of a.
    std::vector<Word> words;
    TensorElt comp;
    for (const auto& [word, c] : a)
      if (static_cast<int>(word.size()) == w) comp.emplace(word, c);
    if (comp.empty()) continue;
    std::vector<TensorElt> span = lie_spanning_set(ctx, w);
    // Column space over the union of words appearing anywhere.
    std::map<Word, size_t> index;
    auto touch = [&](const TensorElt& e) {
      for (const auto& [word, c] : e)
        if (!index.count(word)) {
          size_t k = index.size();
          index[word] = k;
        }
    };
    for (const auto& e : span) touch(e);
    touch(comp);
    Mat m(index.size(), Row(span.size(), Scalar(0)));
    for (size_t col = 0; col < span.size(); ++col)
      for (const auto& [word, c] : span[col]) m[index[word]][col] = c;
    Row b(index.size(), Scalar(0));
    for (const auto& [word, c] : comp) b[index[word]] = c;
    if (!solve(m, b)) return false;
  }
  // Constant term must vanish.
  return a.find(Word{}) == a.end();
}

}  // namespace mct

#include "mct/symalg.hpp"

#include <sstream>
#include <stdexcept>

namespace mct {

int sym_degree(const SymCtx& ctx, const SymTree& t) {
  if (t.is_leaf()) return ctx.gen_degrees.at(t.gen);
  int d = -1;
  for (const auto& k : t.kids) d += sym_degree(ctx, k);
  return d;
}

int sym_weight(const SymTree& t) {
  if (t.is_leaf()) return 1;
  int w = 0;
  for (const auto& k : t.kids) w += sym_weight(k);
  return w;
}

std::string sym_encode(const SymTree& t) {
  if (t.is_leaf()) return "g" + std::to_string(t.gen);
  std::string s = "l(";
  for (size_t i = 0; i < t.kids.size(); ++i) {
    if (i) s += " ";
    s += sym_encode(t.kids[i]);
  }
  return s + ")";
}

std::string sym_elt_to_string(const SymElt& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : e) {
    if (!first) os << " + ";
    os << scalar_to_string(c) << "*" << sym_encode(t);
    first = false;
  }
  return os.str();
}

SymElt sym_gen(int g) {
  SymTree t;
  t.gen = g;
  return {{t, Scalar(1)}};
}

SymElt sym_add(const SymElt& a, const SymElt& b) {
  SymElt out = a;
  for (const auto& [t, c] : b) {
    auto it = out.find(t);
    if (it == out.end()) {
      out.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

SymElt sym_scale(const SymElt& a, const Scalar& c) {
  SymElt out;
  if (c == 0) return out;
  for (const auto& [t, coeff] : a) out.emplace(t, coeff * c);
  return out;
}

SymElt sym_sub(const SymElt& a, const SymElt& b) {
  return sym_add(a, sym_scale(b, -1));
}

namespace {

// Canonicalize a vertex: sort the children with Koszul signs; zero when a
// repeated child has odd degree.
std::pair<SymTree, int> make_vertex(const SymCtx& ctx, std::vector<SymTree> kids) {
  long long exponent = 0;
  std::vector<int> degs;
  degs.reserve(kids.size());
  for (const auto& k : kids) degs.push_back(sym_degree(ctx, k));
  for (size_t i = 1; i < kids.size(); ++i)
    for (size_t j = i; j > 0 && kids[j] < kids[j - 1]; --j) {
      exponent += static_cast<long long>(degs[j]) * degs[j - 1];
      std::swap(kids[j], kids[j - 1]);
      std::swap(degs[j], degs[j - 1]);
    }
  for (size_t i = 0; i + 1 < kids.size(); ++i)
    if (kids[i] == kids[i + 1] && (degs[i] % 2 != 0)) return {SymTree{}, 0};
  SymTree t;
  t.gen = -1;
  t.kids = std::move(kids);
  return {t, sign_pow(exponent)};
}

}  // namespace

SymElt sym_bracket(const SymCtx& ctx, const std::vector<SymElt>& args) {
  int n = static_cast<int>(args.size());
  if (n < 2) throw std::invalid_argument("sym_bracket: arity must be >= 2");
  if (n > ctx.bracket_arity_cap) return {};
  SymElt out;
  std::vector<SymTree> picked(n);
  std::function<void(int, const Scalar&)> rec = [&](int pos, const Scalar& coeff) {
    if (pos == n) {
      auto [vertex, sign] = make_vertex(ctx, picked);
      if (sign == 0) return;
      if (sym_weight(vertex) > ctx.weight_cap) return;
      SymElt term{{vertex, coeff * sign}};
      out = sym_add(out, term);
      return;
    }
    for (const auto& [t, c] : args[pos]) {
      picked[pos] = t;
      rec(pos + 1, coeff * c);
    }
  };
  rec(0, Scalar(1));
  return out;
}

SymElt sym_strict_part(const SymElt& e) {
  std::function<bool(const SymTree&)> binary = [&](const SymTree& t) {
    if (t.is_leaf()) return true;
    if (t.kids.size() != 2) return false;
    for (const auto& k : t.kids)
      if (!binary(k)) return false;
    return true;
  };
  SymElt out;
  for (const auto& [t, c] : e)
    if (binary(t)) out.emplace(t, c);
  return out;
}

namespace {

// Returns the classical (desuspended) value of a canonical tree.
TensorElt classical_value(const SymCtx& ctx, const FreeLieCtx& fl, const SymTree& t) {
  if (t.is_leaf()) return fl_gen(t.gen);
  if (t.kids.size() != 2)
    throw std::invalid_argument("sym_to_classical: non-binary bracket present");
  TensorElt a = classical_value(ctx, fl, t.kids[0]);
  TensorElt b = classical_value(ctx, fl, t.kids[1]);
  int cl_deg_a = sym_degree(ctx, t.kids[0]) - 1;
  return fl_scale(bracket(fl, a, b), Scalar(sign_pow(cl_deg_a)));
}

}  // namespace

TensorElt sym_to_classical(const SymCtx& ctx, const FreeLieCtx& fl, const SymElt& e) {
  TensorElt out;
  for (const auto& [t, c] : e)
    out = fl_add(out, fl_scale(classical_value(ctx, fl, t), c));
  return out;
}

}  // namespace mct

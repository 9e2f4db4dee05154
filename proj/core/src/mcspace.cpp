#include "mct/mcspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mct {

FormVec fv_elem(const std::string& id, const PolyForm& f) {
  if (form_is_zero(f)) return {};
  return FormVec{{id, f}};
}

FormVec fv_add(const FormVec& a, const FormVec& b, const Scalar& c) {
  FormVec out = a;
  for (const auto& [id, f] : b) {
    PolyForm sum = form_add(out.count(id) ? out[id] : PolyForm{}, form_scale(f, c));
    if (form_is_zero(sum))
      out.erase(id);
    else
      out[id] = sum;
  }
  return out;
}

FormVec fv_scale(const FormVec& a, const Scalar& c) {
  FormVec out;
  if (c == 0) return out;
  for (const auto& [id, f] : a) out[id] = form_scale(f, c);
  return out;
}

bool fv_is_zero(const FormVec& a) {
  for (const auto& [id, f] : a)
    if (!form_is_zero(f)) return false;
  return true;
}

bool fv_equal(const FormVec& a, const FormVec& b) {
  return fv_is_zero(fv_add(a, b, Scalar(-1)));
}

int fv_degree(const TensorAlg& alg, const FormVec& a) {
  bool seen = false;
  int deg = 0;
  for (const auto& [id, f] : a) {
    if (form_is_zero(f)) continue;
    int d = alg.g->space.deg(id) + form_degree(f);
    if (seen && d != deg) throw std::invalid_argument("fv_degree: inhomogeneous");
    deg = d;
    seen = true;
  }
  return deg;
}

namespace {

struct FvTerm {
  std::string gid;
  FormMono mono;
  Scalar coeff;
  int gdeg;
  int fpar;  // parity of the form degree (number of dt factors)
};

std::vector<FvTerm> fv_terms(const TensorAlg& alg, const FormVec& a) {
  std::vector<FvTerm> out;
  for (const auto& [id, f] : a) {
    int gd = alg.g->space.deg(id);
    for (const auto& [mono, c] : f) {
      if (c == 0) continue;
      int k = 0;
      for (unsigned m = mono.mask; m; m >>= 1) k += m & 1;
      out.push_back({id, mono, c, gd, k & 1});
    }
  }
  return out;
}

}  // namespace

FormVec tensor_ell(const TensorAlg& alg, int m, const std::vector<FormVec>& args) {
  if (static_cast<int>(args.size()) != m)
    throw std::invalid_argument("tensor_ell: arity mismatch");
  FormVec out;
  if (m == 1) {
    for (const auto& [id, f] : args[0]) {
      Vec dx = alg.g->apply_basis(1, {id});
      for (const auto& [id2, c] : dx) out = fv_add(out, fv_elem(id2, f), c);
      PolyForm df = form_d(alg.ctx, f);
      out = fv_add(out, fv_elem(id, df), sign_pow(alg.g->space.deg(id)));
    }
    return out;
  }
  std::vector<std::vector<FvTerm>> expanded;
  for (const auto& a : args) expanded.push_back(fv_terms(alg, a));
  std::vector<const FvTerm*> pick(m);
  std::function<void(int, Scalar)> rec = [&](int pos, Scalar coeff) {
    if (pos == m) {
      // Interchange sign: each form part passes the g parts to its right.
      int exp = 0;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) exp += pick[i]->fpar * (pick[j]->gdeg & 1);
      std::vector<std::string> gids;
      for (int i = 0; i < m; ++i) gids.push_back(pick[i]->gid);
      Vec gval = alg.g->apply_basis(m, gids);
      if (vec_is_zero(gval)) return;
      PolyForm f = PolyForm{{pick[0]->mono, Scalar(1)}};
      for (int i = 1; i < m; ++i)
        f = wedge(alg.ctx, f, PolyForm{{pick[i]->mono, Scalar(1)}});
      if (form_is_zero(f)) return;
      Scalar total = coeff * sign_pow(exp);
      for (const auto& [gid, gc] : gval)
        out = fv_add(out, fv_elem(gid, f), total * gc);
      return;
    }
    for (const auto& t : expanded[pos]) {
      pick[pos] = &t;
      rec(pos + 1, coeff * t.coeff);
    }
  };
  rec(0, Scalar(1));
  return out;
}

FormVec mc_membership(const TensorAlg& alg, const FormVec& x) {
  FormVec res = tensor_ell(alg, 1, {x});
  for (int m = 2; m <= alg.g->arity_cap; ++m) {
    std::vector<FormVec> copies(m, x);
    res = fv_add(res, tensor_ell(alg, m, copies), Scalar(1) / factorial(m));
  }
  return res;
}

FormVec fv_h(const TensorAlg& alg, const FormVec& x) {
  FormVec out;
  for (const auto& [id, f] : x)
    out = fv_add(out, fv_elem(id, h_map(alg.ctx, f)),
                 sign_pow(alg.g->space.deg(id)));
  return out;
}

namespace {

std::pair<std::string, std::string> split_cell_id(const std::string& id) {
  auto pos = id.rfind('|');
  if (pos == std::string::npos)
    throw std::invalid_argument("cell id without separator: " + id);
  return {id.substr(0, pos), id.substr(pos + 1)};
}

}  // namespace

FormVec cell_to_form(const TensorAlg& alg, const Vec& cell) {
  FormVec out;
  for (const auto& [id, c] : cell) {
    auto [gid, wid] = split_cell_id(id);
    out = fv_add(out, fv_elem(gid, i_map(alg.ctx, Vec{{wid, Scalar(1)}})), c);
  }
  return out;
}

Vec form_to_cell(const TensorAlg& alg, const FormVec& x) {
  Vec out;
  for (const auto& [gid, f] : x) {
    Vec w = p_map(alg.ctx, f);
    for (const auto& [wid, c] : w)
      out = vec_added(out, Vec{{gid + "|" + wid, Scalar(1)}}, c);
  }
  return out;
}

GradedSpace cell_space(const SLInfty& g, int n) {
  GradedSpace cells;
  GradedSpace w = whitney_space(n);
  for (const auto& gb : g.space.basis)
    for (const auto& wb : w.basis)
      cells.basis.push_back(
          BasisElement{gb.id + "|" + wb.id, gb.deg + wb.deg, gb.weight});
  return cells;
}

bool gamma_membership(const TensorAlg& alg, const FormVec& x) {
  if (!fv_is_zero(mc_membership(alg, x)))
    throw std::invalid_argument("gamma_membership: input is not Maurer-Cartan");
  return fv_is_zero(fv_h(alg, x));
}

bool thin_check(const TensorAlg& alg, const FormVec& x) {
  if (!fv_is_zero(mc_membership(alg, x)))
    throw std::invalid_argument("thin_check: input is not Maurer-Cartan");
  Vec top;
  for (const auto& [gid, f] : x) {
    Scalar s = integrate(alg.ctx, f);
    if (s != 0) top[gid] = s;
  }
  return vec_is_zero(top);
}

SymContraction<FormVec> tensor_contraction(const TensorAlg& alg) {
  TensorAlg copy = alg;
  SymContraction<FormVec> C;
  C.small = cell_space(*alg.g, alg.ctx.n);
  C.big.arity_cap = alg.g->arity_cap;
  C.big.ell = [copy](int m, const std::vector<FormVec>& xs) {
    return tensor_ell(copy, m, xs);
  };
  C.big.h = [copy](const FormVec& x) { return fv_h(copy, x); };
  C.big.deg = [copy](const FormVec& x) { return fv_degree(copy, x); };
  C.big.is_zero = [](const FormVec& x) { return fv_is_zero(x); };
  C.big.zero = []() { return FormVec{}; };
  C.big.add = [](const FormVec& a, const FormVec& b) { return fv_add(a, b, Scalar(1)); };
  C.big.scale = [](const Scalar& c, const FormVec& a) { return fv_scale(a, c); };
  C.i_basis = [copy](const std::string& id) {
    auto [gid, wid] = split_cell_id(id);
    return fv_elem(gid, i_map(copy.ctx, Vec{{wid, Scalar(1)}}));
  };
  C.p = [copy](const FormVec& x) { return form_to_cell(copy, x); };
  return C;
}

SLInfty transfer_cells(const TensorAlg& alg, int arity_cap) {
  return transfer_slinfty(tensor_contraction(alg), arity_cap);
}

// ------------------------------------------------- tensor-factorized pipeline

namespace {

// Homogeneous intermediate value of the factorized tree evaluation: a g-side
// vector of fixed degree and a form-side coefficient, with the accumulated
// sign folded into g_part.
struct TPVal {
  Vec g_part;
  int g_deg = 0;
  PolyForm form;
};

bool tp_zero(const TPVal& v) { return vec_is_zero(v.g_part) || form_is_zero(v.form); }

TPVal tp_eval(const TensorAlg& alg, const LTree& t,
              const std::vector<std::pair<std::string, std::string>>& leaves) {
  if (t.is_leaf()) {
    const auto& [gid, wid] = leaves[t.label - 1];
    return TPVal{Vec{{gid, Scalar(1)}}, alg.g->space.deg(gid),
                 i_map(alg.ctx, Vec{{wid, Scalar(1)}})};
  }
  std::vector<TPVal> kids;
  for (const auto& c : t.children) {
    TPVal v = tp_eval(alg, c, leaves);
    if (!c.is_leaf()) {
      // The homotopy acts on the form factor only, crossing the g part.
      v.form = h_map(alg.ctx, v.form);
      v.g_part = vec_scale(v.g_part, sign_pow(v.g_deg));
    }
    if (tp_zero(v)) return TPVal{};
    kids.push_back(std::move(v));
  }
  int k = static_cast<int>(kids.size());
  // Interchange: each form factor passes the g parts to its right.
  int exp = 0;
  for (int r = 0; r < k; ++r)
    for (int s = r + 1; s < k; ++s)
      exp += (form_degree(kids[r].form) & 1) * (kids[s].g_deg & 1);
  std::vector<Vec> gargs;
  int gdeg = -1;
  for (const auto& v : kids) {
    gargs.push_back(v.g_part);
    gdeg += v.g_deg;
  }
  TPVal out;
  out.g_part = vec_scale(alg.g->apply(k, gargs), sign_pow(exp));
  out.g_deg = gdeg;
  out.form = kids[0].form;
  for (int r = 1; r < k; ++r) out.form = wedge(alg.ctx, out.form, kids[r].form);
  return out;
}

}  // namespace

Vec tensor_pipeline_op(const TensorAlg& alg, int arity,
                       const std::vector<std::string>& cell_ids) {
  std::vector<std::pair<std::string, std::string>> leaves;
  for (const auto& id : cell_ids) leaves.push_back(split_cell_id(id));
  if (arity == 1) {
    const auto& [gid, wid] = leaves[0];
    Vec out;
    for (const auto& [gid2, c] : alg.g->apply_basis(1, {gid}))
      out = vec_added(out, Vec{{gid2 + "|" + wid, Scalar(1)}}, c);
    GMap dW = whitney_d(alg.ctx.n);
    for (const auto& [wid2, c] : dW.apply_basis(wid))
      out = vec_added(out, Vec{{gid + "|" + wid2, Scalar(1)}},
                    c * sign_pow(alg.g->space.deg(gid)));
    return out;
  }
  GradedSpace cells = cell_space(*alg.g, alg.ctx.n);
  std::vector<int> degs;
  for (const auto& id : cell_ids) degs.push_back(cells.deg(id));
  Vec out;
  for (const auto& t : enumerate_rooted(arity)) {
    std::vector<int> perm;
    detail::leaf_order(t, perm);
    int sign = koszul_sign(perm, degs);
    if (sign == 0) continue;
    TPVal v = tp_eval(alg, t, leaves);
    if (tp_zero(v)) continue;
    Vec w = p_map(alg.ctx, v.form);
    for (const auto& [gid, gc] : v.g_part)
      for (const auto& [wid, wc] : w)
        out = vec_added(out, Vec{{gid + "|" + wid, Scalar(1)}},
                      gc * wc * Scalar(sign));
  }
  return out;
}

SLInfty tensor_pipeline_cells(const TensorAlg& alg, int arity_cap) {
  SLInfty out;
  out.space = cell_space(*alg.g, alg.ctx.n);
  out.arity_cap = arity_cap;
  for (const auto& b : out.space.basis) {
    Vec v = tensor_pipeline_op(alg, 1, {b.id});
    if (!vec_is_zero(v)) out.set_op(1, {b.id}, v);
  }
  for (int n = 2; n <= arity_cap; ++n)
    for (const auto& tuple : detail::small_tuples(out.space, n)) {
      Vec v = tensor_pipeline_op(alg, n, tuple);
      if (!vec_is_zero(v)) out.set_op(n, tuple, v);
    }
  return out;
}

// ----------------------------------------------------------- MC maps

Vec P_map(const TensorAlg& alg, const FormVec& x, int arity_cap) {
  SymContraction<FormVec> C = tensor_contraction(alg);
  C.big.arity_cap = std::max(C.big.arity_cap, arity_cap);
  return mc_pushforward_p(C, x);
}

FormVec I_map(const TensorAlg& alg, const Vec& beta, int arity_cap) {
  SymContraction<FormVec> C = tensor_contraction(alg);
  const FormVec included = cell_to_form(alg, beta);
  FormVec out = included;
  std::vector<FormVec> inputs;
  for (int n = 2; n <= arity_cap; ++n) {
    inputs.assign(n, included);
    std::vector<int> degs(n, 0);
    FormVec acc;
    for (const auto& t : enumerate_rooted(n))
      acc = fv_add(acc, fv_h(alg, tau_h_eval(C.big, t, inputs, degs)), Scalar(1));
    out = fv_add(out, acc, Scalar(1) / factorial(n));
  }
  return out;
}

FormVec rect(const TensorAlg& alg, const FormVec& x, int arity_cap) {
  return I_map(alg, P_map(alg, x, arity_cap), arity_cap);
}

// ------------------------------------------------- interval presentations

MC0 build_mc0(int cap) {
  MC0 out;
  out.ctx.gen_degrees = {-1};
  out.ctx.cap = cap;
  out.alpha = fl_gen(0);
  out.d.gen_images = {fl_scale(bracket(out.ctx, out.alpha, out.alpha),
                               Scalar(-1) / Scalar(2))};
  return out;
}

IntervalLie build_mc1(int cap) { return lawrence_sullivan(cap); }

MCInf0 build_mcinf0(int weight_cap) {
  MCInf0 out;
  out.ctx.gen_degrees = {0};
  out.ctx.weight_cap = weight_cap;
  out.alpha = sym_gen(0);
  for (int m = 2; m <= weight_cap; ++m) {
    std::vector<SymElt> args(m, out.alpha);
    out.d_alpha = sym_add(
        out.d_alpha, sym_scale(sym_bracket(out.ctx, args), -Scalar(1) / factorial(m)));
  }
  return out;
}

namespace {

// Evaluate a weighted planar tree with weight-1 vertices: empty slot = a0,
// arity-0 vertex = u, arity-n vertex = (1/n!) l_{n+1}(children.., lambda).
SymElt eval_mc_tree(const SymCtx& ctx, const WPTree& t, const SymElt& a0,
                    const SymElt& u, const SymElt& lambda) {
  if (t.empty) return a0;
  int n = t.arity();
  if (n == 0) return u;
  std::vector<SymElt> args;
  for (const auto& c : t.children)
    args.push_back(eval_mc_tree(ctx, c, a0, u, lambda));
  args.push_back(lambda);
  return sym_scale(sym_bracket(ctx, args), Scalar(1) / factorial(n));
}

// Evaluate a decorated tree: white leaf = x, black leaf = y, sub child =
// recursive value; the vertex decoration is evaluated as above (without
// 0-corollas, which decorated trees do not carry).
SymElt eval_dec_tree(const SymCtx& ctx, const DecTree& t, const SymElt& x,
                     const SymElt& y, const SymElt& lambda);

SymElt eval_decoration(const SymCtx& ctx, const WPTree& deco,
                       const std::vector<SymElt>& slot_values, size_t& slot,
                       const SymElt& lambda) {
  if (deco.empty) return slot_values[slot++];
  int n = deco.arity();
  std::vector<SymElt> args;
  for (const auto& c : deco.children)
    args.push_back(eval_decoration(ctx, c, slot_values, slot, lambda));
  args.push_back(lambda);
  return sym_scale(sym_bracket(ctx, args), Scalar(1) / factorial(n));
}

SymElt eval_dec_tree(const SymCtx& ctx, const DecTree& t, const SymElt& x,
                     const SymElt& y, const SymElt& lambda) {
  std::vector<SymElt> slots;
  for (const auto& c : t.children) {
    if (c.kind == DecChild::Kind::White)
      slots.push_back(x);
    else if (c.kind == DecChild::Kind::Black)
      slots.push_back(y);
    else
      slots.push_back(eval_dec_tree(ctx, c.sub.at(0), x, y, lambda));
  }
  size_t slot = 0;
  return eval_decoration(ctx, t.decoration, slots, slot, lambda);
}

int dec_tree_weight(const DecTree& t) {
  int vertices = 0;
  std::function<void(const WPTree&)> count = [&](const WPTree& w) {
    if (w.empty) return;
    ++vertices;
    for (const auto& c : w.children) count(c);
  };
  count(t.decoration);
  int total = vertices;
  for (const auto& c : t.children)
    total += (c.kind == DecChild::Kind::Sub) ? dec_tree_weight(c.sub.at(0)) : 1;
  return total;
}

std::vector<DecTree> gen_dec_trees(int budget) {
  std::vector<DecTree> out;
  if (budget < 2) return out;  // a vertex plus at least one leaf
  std::vector<std::pair<int, int>> pairs;
  for (int n = 1; n < budget; ++n) pairs.emplace_back(n, 1);
  for (const auto& deco : enumerate_wptrees(budget - 1, pairs)) {
    int vertices = coeff_W(deco);
    int slots = 0;
    std::function<void(const WPTree&)> count = [&](const WPTree& w) {
      if (w.empty) {
        ++slots;
        return;
      }
      for (const auto& c : w.children) count(c);
    };
    count(deco);
    if (slots == 0 || vertices + slots > budget) continue;
    // Fill the slots with white/black leaves or subtrees.
    std::vector<DecChild> children(slots);
    std::function<void(int, int)> fill = [&](int idx, int remaining) {
      if (remaining < slots - idx) return;  // every open slot costs >= 1
      if (idx == slots) {
        DecTree t;
        t.decoration = deco;
        t.children = children;
        out.push_back(t);
        return;
      }
      int needed_for_rest = slots - idx - 1;  // each later slot costs >= 1
      children[idx] = DecChild{DecChild::Kind::White, {}};
      fill(idx + 1, remaining - 1);
      children[idx] = DecChild{DecChild::Kind::Black, {}};
      fill(idx + 1, remaining - 1);
      for (const auto& sub : gen_dec_trees(remaining - needed_for_rest)) {
        int w = dec_tree_weight(sub);
        if (w > remaining - needed_for_rest) continue;
        children[idx] = DecChild{DecChild::Kind::Sub, {sub}};
        fill(idx + 1, remaining - w);
      }
      children[idx] = DecChild{DecChild::Kind::White, {}};
    };
    fill(0, budget - vertices);
  }
  return out;
}

bool is_zero_corolla(const WPTree& t) {
  return !t.empty && t.children.empty();
}

}  // namespace

MCInf1 build_mcinf1(int weight_cap, int bracket_arity_cap) {
  MCInf1 out;
  out.ctx.gen_degrees = {0, 0, 1};
  out.ctx.weight_cap = weight_cap;
  out.ctx.bracket_arity_cap = bracket_arity_cap;
  const SymElt a0 = sym_gen(0), a1 = sym_gen(1), lambda = sym_gen(2);
  const SymElt diff = sym_sub(a1, a0);

  // Pipeline 1: fixed point of
  //   u = a1 - a0 - sum over trees (not empty, not the 0-corolla) of
  //       (1/F) tree_u(a0).
  std::vector<std::pair<int, int>> pairs;
  for (int n = 0; n <= weight_cap; ++n) pairs.emplace_back(n, 1);
  std::vector<WPTree> trees = enumerate_wptrees(weight_cap, pairs);
  FPEq<SymElt> eq;
  eq.p0 = diff;
  const SymCtx* ctx = &out.ctx;
  eq.ops.push_back([ctx, &trees, &a0, &lambda](const SymElt& u) {
    SymElt acc;
    for (const auto& t : trees) {
      if (is_zero_corolla(t)) continue;
      acc = sym_add(acc, sym_scale(eval_mc_tree(*ctx, t, a0, u, lambda),
                                   -Scalar(1) / coeff_F(t)));
    }
    return acc;
  });
  out.d_lambda_fixed_point = solve_fixed_point(eq, SymOps{ctx});

  // Pipeline 2: closed form a1 - a0 + sum over decorated trees of
  //   G(T) T(a0, a1 - a0).
  out.d_lambda_gsum = diff;
  for (const auto& T : gen_dec_trees(weight_cap)) {
    Scalar g = coeff_G(T);
    out.d_lambda_gsum = sym_add(
        out.d_lambda_gsum,
        sym_scale(eval_dec_tree(out.ctx, T, a0, diff, lambda), g));
  }

  out.agree = (out.d_lambda_fixed_point == out.d_lambda_gsum);
  return out;
}

Vec hom_to_cell(const SLInfty& g, const Vec& a0, const Vec& a1, const Vec& l) {
  (void)g;
  Vec out;
  for (const auto& [id, c] : a0) out = vec_added(out, Vec{{id + "|w0", Scalar(1)}}, c);
  for (const auto& [id, c] : a1) out = vec_added(out, Vec{{id + "|w1", Scalar(1)}}, c);
  for (const auto& [id, c] : l) out = vec_added(out, Vec{{id + "|w01", Scalar(1)}}, c);
  return out;
}

void cell_to_hom(const SLInfty& g, const Vec& cell, Vec& a0, Vec& a1, Vec& l) {
  (void)g;
  a0.clear();
  a1.clear();
  l.clear();
  for (const auto& [id, c] : cell) {
    auto [gid, wid] = split_cell_id(id);
    if (wid == "w0")
      a0[gid] = c;
    else if (wid == "w1")
      a1[gid] = c;
    else if (wid == "w01")
      l[gid] = c;
    else
      throw std::invalid_argument("cell_to_hom: not a level-1 cell: " + id);
  }
}

}  // namespace mct

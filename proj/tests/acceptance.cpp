// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every comparison below is exact rational arithmetic; there are no
// tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mct/convolution.hpp"
#include "mct/deformation.hpp"
#include "mct/dupont.hpp"
#include "mct/freelie.hpp"
#include "mct/htt.hpp"
#include "mct/linalg.hpp"
#include "mct/linfty.hpp"
#include "mct/mcspace.hpp"
#include "mct/solvers.hpp"
#include "mct/symalg.hpp"
#include "mct/trees.hpp"

using namespace mct;

namespace {

bool slinfty_same(const SLInfty& A, const SLInfty& B, int arity) {
  if (A.space.ids() != B.space.ids()) return false;
  for (int n = 1; n <= arity; ++n) {
    for (const auto& tuple : detail::small_tuples(A.space, n)) {
      if (A.apply_basis(n, tuple) != B.apply_basis(n, tuple)) return false;
    }
  }
  return true;
}

Scalar rnd_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar(num(rng)) / Scalar(den(rng));
}

// ----------------------------------------------------------- criterion 1

bool crit1() {
  for (int n = 0; n <= 3; ++n) {
    if (auto err = verify_contraction(n, 6)) {
      std::printf("    contraction level %d: %s\n", n, err->c_str());
      return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- criterion 2

bool crit2() {
  for (int n = 0; n <= 3; ++n) {
    FormCtx ctx{n};
    GradedSpace W = whitney_space(n);
    GMap dW = whitney_d(n);
    for (const auto& b : W.basis) {
      PolyForm lhs = form_d(ctx, i_map(ctx, Vec{{b.id, Scalar(1)}}));
      PolyForm rhs = i_map(ctx, dW.apply_basis(b.id));
      if (!form_is_zero(form_sub(lhs, rhs))) return false;
    }
    std::vector<int> top;
    for (int i = 0; i <= n; ++i) top.push_back(i);
    if (integrate(ctx, whitney(ctx, top)) != Scalar(1)) return false;
  }
  return true;
}

// ----------------------------------------------------------- criterion 3

bool crit3() {
  FreeLieCtx c3{{0, 0}, 3};
  TensorElt a = fl_gen(0), b = fl_gen(1);
  TensorElt z = bch(c3, a, b);
  TensorElt expected = fl_add(a, b);
  expected = fl_add(expected, fl_scale(bracket(c3, a, b), Scalar(1) / 2));
  expected = fl_add(expected,
                    fl_scale(bracket(c3, a, bracket(c3, a, b)), Scalar(1) / 12));
  expected = fl_add(expected,
                    fl_scale(bracket(c3, b, bracket(c3, b, a)), Scalar(1) / 12));
  if (!fl_is_zero(fl_sub(z, expected))) return false;

  FreeLieCtx c5{{0, 0}, 5};
  TensorElt z5 = bch(c5, a, b);
  TensorElt lhs = fl_mul(c5, fl_exp(c5, a), fl_exp(c5, b));
  if (!fl_is_zero(fl_sub(lhs, fl_exp(c5, z5)))) return false;
  return is_primitive(c5, z5);
}

// ----------------------------------------------------------- criterion 4

bool crit4() {
  IntervalLie L = lawrence_sullivan(6);
  if (!derivation_squares_to_zero(L.ctx, L.d)) return false;
  if (!fl_is_zero(mc_residual_lie(L.ctx, L.d, L.x0))) return false;
  if (!fl_is_zero(mc_residual_lie(L.ctx, L.d, L.x1))) return false;
  TensorElt flow = gauge_closed_form(L.ctx, L.lambda, L.x0, L.d, Scalar(1));
  return fl_is_zero(fl_sub(flow, L.x1));
}

// ----------------------------------------------------------- criterion 5

bool crit5() {
  CounterexampleResult r = counterexample_run(false);
  Vec expect_first{{"x3", Scalar(-1)}};
  if (r.first != expect_first) {
    std::printf("    first composite: %s\n", vec_to_string(r.first).c_str());
    return false;
  }
  if (!vec_is_zero(r.second)) {
    std::printf("    second composite: %s\n", vec_to_string(r.second).c_str());
    return false;
  }
  CounterexampleResult t = counterexample_run(true);
  return t.first == t.second;
}

// ----------------------------------------------------------- criterion 6

bool crit6() {
  for (int n : {2, 3}) {
    AnFixture fx = build_An(n, 8);
    NsContraction<Vec> C = an_ns_contraction(fx);
    NsAlg T = transfer_ainfty_ns(C, 4);
    std::function<Vec(const Vec&)> to_vec = [](const Vec& v) { return v; };
    NsAlg I = i_infinity_ns(C, fx.big, to_vec, 4);

    // All transferred operations of arity >= 3 vanish (the truncated
    // polynomial algebra is formal), as do the morphism components.
    for (int k = 3; k <= 4; ++k) {
      if (T.ops.count(k) && !T.ops.at(k).empty()) return false;
      if (I.ops.count(k) && !I.ops.at(k).empty()) return false;
    }
    // mu_1 on homology vanishes.
    if (T.ops.count(1) && !T.ops.at(1).empty()) return false;

    // Binary component of the morphism: i_2(z_a, z_b) = -h(i(z_a) i(z_b))
    // (the shifted homotopy is the negative of the classical one), and the
    // transferred product matches p(i(z_a) i(z_b)) up to the suspension
    // sign convention of ns_unshift.
    for (const auto& za : fx.small.basis) {
      for (const auto& zb : fx.small.basis) {
        Vec ia = fx.i.apply_basis(za.id), ib = fx.i.apply_basis(zb.id);
        Vec prod = fx.multiply(ia, ib);
        Vec i2;
        if (I.ops.count(2)) {
          auto it = I.ops.at(2).find({za.id, zb.id});
          if (it != I.ops.at(2).end()) i2 = it->second;
        }
        if (i2 != vec_scale(fx.h.apply(prod), Scalar(-1))) return false;
      }
    }
    GradedSpace classical;
    for (const auto& b : fx.small.basis) classical.basis.push_back({b.id, 0, 0});
    NsAlg M = ns_unshift(T, classical);
    for (const auto& za : fx.small.basis) {
      for (const auto& zb : fx.small.basis) {
        Vec m2;
        if (M.ops.count(2)) {
          auto it = M.ops.at(2).find({za.id, zb.id});
          if (it != M.ops.at(2).end()) m2 = it->second;
        }
        Vec expect = fx.p.apply(
            fx.multiply(fx.i.apply_basis(za.id), fx.i.apply_basis(zb.id)));
        if (m2 != expect) return false;
      }
    }
  }
  return true;
}

// ----------------------------------------------------------- criterion 7

bool crit7() {
  for (int n : {2, 3}) {
    AnFixture fx = build_An(n, 8);
    NsAlg T = transfer_ainfty_ns(an_ns_contraction(fx), 4);
    if (auto err = check_ns_relations(T, 4)) {
      std::printf("    A^%d relations: %s\n", n, err->c_str());
      return false;
    }
  }
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1}, 2);
  TensorAlg alg{&g.algebra, FormCtx{1}};
  SLInfty S = transfer_cells(alg, 4);
  if (auto err = check_relations(S, 4)) {
    std::printf("    cell relations: %s\n", err->c_str());
    return false;
  }
  return true;
}

// ----------------------------------------------------------- criterion 8

bool crit8() {
  // (a) five seeded random formal ODE fixtures: recursive integration and
  // the weighted-tree expansion must produce identical coefficient lists.
  std::vector<std::string> ids{"b0", "b1", "b2"};
  for (unsigned seed = 1; seed <= 5; ++seed) {
    std::mt19937 rng(seed);
    auto rnd_vec = [&]() {
      Vec v;
      for (const auto& id : ids) {
        Scalar c = rnd_scalar(rng);
        if (c != 0) v[id] = c;
      }
      return v;
    };
    auto rnd_multi = [&](int n) -> Multilinear<Vec> {
      std::map<std::vector<std::string>, Vec> table;
      std::vector<std::vector<std::string>> tuples{{}};
      for (int k = 0; k < n; ++k) {
        std::vector<std::vector<std::string>> next;
        for (const auto& t : tuples)
          for (const auto& id : ids) {
            auto u = t;
            u.push_back(id);
            next.push_back(u);
          }
        tuples = next;
      }
      for (const auto& t : tuples) table[t] = rnd_vec();
      return [table, n](const std::vector<Vec>& args) {
        Vec out;
        for (const auto& [tuple, value] : table) {
          Scalar c = 1;
          for (int k = 0; k < n; ++k) c *= vec_coeff(args[k], tuple[k]);
          if (c != 0) vec_add(out, value, c);
        }
        return out;
      };
    };
    FODE<Vec> ode;
    ode.v0 = rnd_vec();
    for (auto [n, k] : std::vector<std::pair<int, int>>{
             {0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}})
      ode.terms[{n, k}] = rnd_multi(n);
    auto a = solve_ode_recursive(ode, 6, VecOps{});
    auto b = solve_ode_trees(ode, 6, VecOps{});
    if (a != b) return false;
  }

  // (b) strict Lie gauge flow: numerically integrating the gauge ODE in the
  // interval algebra reproduces the closed exponential form and lands on x1.
  IntervalLie L = lawrence_sullivan(6);
  struct FLOps {
    const FreeLieCtx* ctx;
    TensorElt zero() const { return {}; }
    TensorElt add(const TensorElt& x, const TensorElt& y) const {
      return fl_add(x, y);
    }
    TensorElt scale(const Scalar& c, const TensorElt& x) const {
      return fl_scale(x, c);
    }
    bool equal(const TensorElt& x, const TensorElt& y) const {
      return fl_is_zero(fl_sub(x, y));
    }
  } ops{&L.ctx};
  FODE<TensorElt> gauge;
  gauge.v0 = L.x0;
  TensorElt dl = L.d.apply(L.ctx, L.lambda);
  gauge.terms[{0, 0}] = [dl](const std::vector<TensorElt>&) { return dl; };
  const IntervalLie* Lp = &L;
  gauge.terms[{1, 0}] = [Lp](const std::vector<TensorElt>& x) {
    return bracket(Lp->ctx, x[0], Lp->lambda);
  };
  auto ca = solve_ode_recursive(gauge, 8, ops);
  auto cb = solve_ode_trees(gauge, 8, ops);
  if (ca.size() != cb.size()) return false;
  for (size_t m = 0; m < ca.size(); ++m)
    if (!ops.equal(ca[m], cb[m])) return false;
  TensorElt at1 = eval_series(ca, Scalar(1), ops);
  if (!fl_is_zero(fl_sub(at1, L.x1))) return false;
  if (!ops.equal(at1, gauge_closed_form(L.ctx, L.lambda, L.x0, L.d, Scalar(1))))
    return false;

  // (c) gauge_flow on a tabulated structure agrees with an independently
  // assembled formal ODE solved by the tree expansion.
  FreeNilpotentLie fn = freelie_to_slinfty({-1, 0}, 4);
  const SLInfty& A = fn.algebra;
  Vec x0{{fn.gen_ids[0], Scalar(1)}};
  Vec lam{{fn.gen_ids[1], Scalar(1)}};
  auto series = gauge_flow_series(A, lam, x0, 6);
  FODE<Vec> ode;
  ode.v0 = x0;
  Vec dlam = A.apply(1, {lam});
  ode.terms[{0, 0}] = [dlam](const std::vector<Vec>&) { return dlam; };
  const SLInfty* Ap = &A;
  for (int j = 1; j + 1 <= A.arity_cap; ++j) {
    ode.terms[{j, 0}] = [Ap, j, lam](const std::vector<Vec>& x) {
      std::vector<Vec> args = x;
      args.push_back(lam);
      return vec_scale(Ap->apply(j + 1, args), Scalar(1) / factorial(j));
    };
  }
  auto tree_series = solve_ode_trees(ode, 6, VecOps{});
  if (series.size() != tree_series.size()) return false;
  for (size_t m = 0; m < series.size(); ++m)
    if (series[m] != tree_series[m]) return false;
  return true;
}

// ----------------------------------------------------------- criterion 9

bool crit9() {
  MCInf1 full = build_mcinf1(4);
  if (!full.agree) {
    std::printf("    fixed point and decorated-tree sum differ\n");
    return false;
  }
  MCInf1 strict = build_mcinf1(4, 2);
  if (!strict.agree) return false;
  FreeLieCtx fl{{-1, -1, 0}, 4};
  TensorElt reduced =
      sym_to_classical(strict.ctx, fl, sym_strict_part(strict.d_lambda_fixed_point));
  IntervalLie L = lawrence_sullivan(4);
  // The sign-free shifted gauge equation desuspends onto the classical one
  // with the gauge generator negated, so the oracle is d(lambda) with
  // lambda -> -lambda (flip the sign of every word by its lambda count).
  TensorElt oracle;
  for (const auto& [w, c] : L.d.apply(L.ctx, L.lambda)) {
    int k = 0;
    for (int gidx : w)
      if (gidx == 2) ++k;
    oracle[w] = (k % 2) ? -c : c;
  }
  return fl_is_zero(fl_sub(reduced, oracle));
}

// ----------------------------------------------------------- criterion 10

bool crit10() {
  auto start = std::chrono::steady_clock::now();
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1}, 3);
  TensorAlg alg{&g.algebra, FormCtx{1}};
  SLInfty A = transfer_cells(alg, 3);
  SLInfty B = tensor_pipeline_cells(alg, 3);
  bool ok = slinfty_same(A, B, 3);
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::printf("    two transfer pipelines on g (x) C_1: %s (%llds)\n",
              ok ? "identical" : "DIFFER", static_cast<long long>(secs));
  return ok && secs < 300;
}

// ----------------------------------------------------------- criterion 11

bool crit11() {
  // g: abelian two-element algebra with a genuine differential l_1(l) = a.
  SLInfty g;
  g.space.basis = {{"a", 0, 1}, {"l", 1, 1}};
  g.arity_cap = 2;
  g.set_op(1, {"l"}, Vec{{"a", Scalar(1)}});
  TensorAlg alg{&g, FormCtx{1}};

  // Validations gating the criterion.
  if (check_relations(g, 3)) return false;                      // V1
  if (verify_contraction(1, 4)) return false;                   // V2
  SLInfty cells = transfer_cells(alg, 3);
  if (check_complex(cells.space, cells.differential())) return false;  // V3
  for (const auto& b : cells.space.basis) {                     // V4
    Vec c{{b.id, Scalar(1)}};
    FormVec f = cell_to_form(alg, c);
    if (form_to_cell(alg, f) != c) return false;
    if (!fv_is_zero(fv_h(alg, fv_h(alg, f)))) return false;
  }

  // An MC element of g (x) Omega_1 with distinct endpoints: a (x) u(t) +
  // l (x) f(t) dt with u' matching f up to the interchange sign. Determine
  // the sign honestly by testing both candidates.
  FormCtx fc{1};
  PolyForm t = form_t(fc, 1);
  PolyForm dt = form_dt(fc, 1);
  FormVec x;
  bool found = false;
  for (int s : {1, -1}) {
    FormVec cand = fv_add(fv_elem("a", t), fv_elem("l", dt), Scalar(s));
    if (fv_is_zero(mc_membership(alg, cand))) {
      x = cand;
      found = true;
      break;
    }
  }
  if (!found) return false;

  Vec beta = P_map(alg, x, 3);
  FormVec rx = rect(alg, x, 3);

  // Rectification lands in the kernel of the homotopy, is idempotent, is an
  // MC element again, and P o I is the identity on the projected cell.
  if (!fv_is_zero(fv_h(alg, rx))) return false;
  if (!gamma_membership(alg, rx)) return false;
  if (!fv_equal(rect(alg, rx, 3), rx)) return false;
  if (!fv_is_zero(mc_membership(alg, rx))) return false;
  if (P_map(alg, I_map(alg, beta, 3), 3) != beta) return false;

  // Rectification preserves both endpoints (faces of the simplex).
  for (int v = 0; v <= 1; ++v) {
    for (const auto& gid : {std::string("a"), std::string("l")}) {
      PolyForm orig, rect_form;
      if (x.count(gid)) orig = x.at(gid);
      if (rx.count(gid)) rect_form = rx.at(gid);
      // face(v) pulls back along the coface hitting the opposite vertex:
      // evaluate 0-form parts at both vertices instead, which is the honest
      // endpoint comparison for a 1-simplex.
      if (eval_vertex(fc, orig, v) != eval_vertex(fc, rect_form, v)) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- criterion 12

bool crit12() {
  GradedSpace A;
  A.basis = {{"u", 0, 0}, {"v", 0, 0}};
  std::mt19937 rng(42);
  std::vector<std::string> ids{"u", "v"};
  int both = 0;
  for (int trial = 0; trial < 50; ++trial) {
    MultiMap m;
    m.arity = 2;
    for (const auto& a : ids)
      for (const auto& b : ids) {
        Vec v;
        for (const auto& id : ids) {
          Scalar c = Scalar(std::uniform_int_distribution<int>(-1, 1)(rng));
          if (c != 0) v[id] = c;
        }
        if (!vec_is_zero(v)) m.table[{a, b}] = v;
      }
    bool mc = is_mc_associative(A, m);
    bool direct = is_associative_direct(A, m);
    if (mc != direct) return false;
    if (mc) ++both;
  }

  // Truncated polynomial algebra: associative, with a square-zero Hochschild
  // differential whose coboundaries are cocycles.
  GradedSpace P;
  P.basis = {{"e", 0, 0}, {"x", 0, 0}, {"x2", 0, 0}};
  auto mono = [](int k) { return k == 0 ? "e" : (k == 1 ? "x" : "x2"); };
  MultiMap mul;
  mul.arity = 2;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a + b < 3) mul.table[{mono(a), mono(b)}] = Vec{{mono(a + b), Scalar(1)}};
  if (!is_mc_associative(P, mul) || !is_associative_direct(P, mul)) return false;

  std::mt19937 rng2(7);
  for (int trial = 0; trial < 5; ++trial) {
    MultiMap f;
    f.arity = 2;
    for (const auto& a : P.ids())
      for (const auto& b : P.ids()) {
        Vec v;
        for (const auto& id : P.ids()) {
          Scalar c = rnd_scalar(rng2);
          if (c != 0) v[id] = c;
        }
        f.table[{a, b}] = v;
      }
    MultiMap df = hoch_differential(P, mul, f);
    MultiMap ddf = hoch_differential(P, mul, df);
    for (const auto& [args, v] : ddf.table)
      if (!vec_is_zero(v)) return false;
    // Coboundaries of linear maps are cocycles.
    MultiMap lin;
    lin.arity = 1;
    for (const auto& id : P.ids()) {
      Vec v;
      for (const auto& jd : P.ids()) {
        Scalar c = rnd_scalar(rng2);
        if (c != 0) v[jd] = c;
      }
      lin.table[{id}] = v;
    }
    MultiMap fT = trivial_deformation(P, mul, lin);
    MultiMap dfT = hoch_differential(P, mul, fT);
    for (const auto& [args, v] : dfT.table)
      if (!vec_is_zero(v)) return false;
    if (!infinitesimal_deformation_check(P, mul, fT)) return false;
  }

  // Lie side: the cross-product bracket satisfies Jacobi; the residual
  // (1/2)[b, b] detects exactly the Jacobi identity on fuzzed brackets.
  GradedSpace L3;
  L3.basis = {{"X", 0, 0}, {"Y", 0, 0}, {"Z", 0, 0}};
  AltMap cross;
  cross.arity = 2;
  cross.set({"X", "Y"}, Vec{{"Z", Scalar(1)}});
  cross.set({"Y", "Z"}, Vec{{"X", Scalar(1)}});
  cross.set({"X", "Z"}, Vec{{"Y", Scalar(-1)}});
  for (const auto& [args, v] : jacobi_residual(L3, cross).table)
    if (!vec_is_zero(v)) return false;
  // CE differential squares to zero on random cochains.
  std::mt19937 rng3(11);
  for (int trial = 0; trial < 5; ++trial) {
    AltMap f;
    f.arity = 1;
    for (const auto& id : L3.ids()) {
      Vec v;
      for (const auto& jd : L3.ids()) {
        Scalar c = rnd_scalar(rng3);
        if (c != 0) v[jd] = c;
      }
      f.set({id}, v);
    }
    AltMap df = chevalley_eilenberg(L3, cross, f);
    AltMap ddf = chevalley_eilenberg(L3, cross, df);
    for (const auto& [args, v] : ddf.table)
      if (!vec_is_zero(v)) return false;
  }
  // Fuzzed brackets: residual zero iff the Jacobi identity holds directly.
  std::mt19937 rng4(13);
  for (int trial = 0; trial < 50; ++trial) {
    AltMap b;
    b.arity = 2;
    auto idsl = L3.ids();
    for (size_t i = 0; i < idsl.size(); ++i)
      for (size_t j = i + 1; j < idsl.size(); ++j) {
        Vec v;
        for (const auto& id : idsl) {
          Scalar c = Scalar(std::uniform_int_distribution<int>(-1, 1)(rng4));
          if (c != 0) v[id] = c;
        }
        if (!vec_is_zero(v)) b.set({idsl[i], idsl[j]}, v);
      }
    bool res_zero = true;
    for (const auto& [args, v] : jacobi_residual(L3, b).table)
      if (!vec_is_zero(v)) res_zero = false;
    bool direct = true;
    for (const auto& x : idsl)
      for (const auto& y : idsl)
        for (const auto& z : idsl) {
          Vec j1 = b.apply({b.apply_basis({x, y}), Vec{{z, Scalar(1)}}});
          Vec j2 = b.apply({b.apply_basis({y, z}), Vec{{x, Scalar(1)}}});
          Vec j3 = b.apply({b.apply_basis({z, x}), Vec{{y, Scalar(1)}}});
          vec_add(j1, j2, 1);
          vec_add(j1, j3, 1);
          if (!vec_is_zero(j1)) direct = false;
        }
    if (res_zero != direct) return false;
  }
  (void)both;
  return true;
}

// ----------------------------------------------------------- criterion 13

bool crit13() {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937 rng(seed);
    GradedSpace S, M, T;
    S.basis = {{"s0", 0, 1}, {"s1", 0, 1}, {"s2", -1, 1}};
    M.basis = {{"m0", 0, 1}, {"m1", -1, 1}, {"m2", 1, 1}};
    T.basis = {{"t0", 0, 1}, {"t1", 1, 1}};
    auto rnd_map = [&](const GradedSpace& src, const GradedSpace& tgt,
                       int arity_cap) {
      InfMorphism phi;
      phi.source = src;
      phi.target = tgt;
      phi.arity_cap = arity_cap;
      for (int n = 1; n <= arity_cap; ++n) {
        for (const auto& tuple : detail::small_tuples(src, n)) {
          std::vector<int> degs;
          for (const auto& id : tuple) degs.push_back(src.deg(id));
          if (koszul_sort(tuple, degs).sign == 0) continue;  // vanishing tuple
          int d = 0;
          for (const auto& id : tuple) d += src.deg(id);
          Vec v;
          for (const auto& b : tgt.basis)
            if (b.deg == d) {
              Scalar c = rnd_scalar(rng);
              if (c != 0) v[b.id] = c;
            }
          if (!vec_is_zero(v)) phi.set_comp(n, tuple, v);
        }
      }
      return phi;
    };
    InfMorphism phi = rnd_map(S, M, 3);
    InfMorphism psi = rnd_map(M, T, 3);
    InfMorphism comp = compose_inf(psi, phi);
    for (int trial = 0; trial < 3; ++trial) {
      Vec x;
      for (const auto& b : S.basis)
        if (b.deg == 0) {
          Scalar c = rnd_scalar(rng);
          if (c != 0) x[b.id] = c;
        }
      Vec lhs = mc_pushforward(comp, x);
      Vec rhs = mc_pushforward(psi, mc_pushforward(phi, x));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- criterion 14

bool crit14() {
  // 3x3 anticommuting bicomplex A (x) B with dA(a1) = 2 a0, dB(b2) = 3 b1.
  GradedSpace X;
  GMap d, delta;
  d.degree = -1;
  delta.degree = -1;
  auto id = [](int i, int j) {
    return "e" + std::to_string(i) + std::to_string(j);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) X.basis.push_back({id(i, j), i + j, 0});
  for (int j = 0; j < 3; ++j) d.images[id(1, j)] = Vec{{id(0, j), Scalar(2)}};
  for (int i = 0; i < 3; ++i)
    delta.images[id(i, 2)] = Vec{{id(i, 1), Scalar(3 * ((i % 2) ? -1 : 1))}};
  if (check_complex(X, d)) return false;
  if (check_complex(X, delta)) return false;
  // anticommutation d delta + delta d = 0
  for (const auto& b : X.basis) {
    Vec anti = delta.apply(d.apply_basis(b.id));
    vec_add(anti, d.apply(delta.apply_basis(b.id)), 1);
    if (!vec_is_zero(anti)) return false;
  }

  Contraction c = build_contraction(X, d);
  auto deltas = transfer_dual_numbers(c.p, c.i, c.h, delta, 3);
  const GMap& D1 = deltas[0];

  // Oracle: for every homology class s, delta(i(s)) differs from i(D1(s))
  // by an exact boundary -- verified by solving the linear system over the
  // image of d.
  std::vector<std::string> big_ids = X.ids();
  for (const auto& s : c.small.basis) {
    Vec diff = delta.apply(c.i.apply_basis(s.id));
    vec_add(diff, c.i.apply(D1.apply_basis(s.id)), -1);
    // columns: d of every basis element
    Mat m(big_ids.size(), Row(big_ids.size(), Scalar(0)));
    for (size_t col = 0; col < big_ids.size(); ++col) {
      Vec img = d.apply_basis(big_ids[col]);
      for (size_t row = 0; row < big_ids.size(); ++row)
        m[row][col] = vec_coeff(img, big_ids[row]);
    }
    Row rhs(big_ids.size(), Scalar(0));
    for (size_t row = 0; row < big_ids.size(); ++row)
      rhs[row] = vec_coeff(diff, big_ids[row]);
    if (!solve(m, rhs)) return false;
  }
  // D1 is itself a differential on the homology, and it is nonzero here.
  GMap D1D1 = gmap_compose(D1, D1);
  for (const auto& [k, v] : D1D1.images)
    if (!vec_is_zero(v)) return false;
  bool nonzero = false;
  for (const auto& [k, v] : D1.images)
    if (!vec_is_zero(v)) nonzero = true;
  return nonzero;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  std::vector<Criterion> list = {
      {"criterion 1: simplicial contraction identities (levels 0..3)", crit1},
      {"criterion 2: elementary form differentials and normalization", crit2},
      {"criterion 3: BCH series, operator identity, primitivity", crit3},
      {"criterion 4: interval algebra squares to zero, flow joins endpoints",
       crit4},
      {"criterion 5: composite discrepancy (-x^3 vs 0) and strict agreement",
       crit5},
      {"criterion 6: transferred products and morphism components on A^n",
       crit6},
      {"criterion 7: transferred structures satisfy the relations to arity 4",
       crit7},
      {"criterion 8: solver cross-checks and gauge flow equivalences", crit8},
      {"criterion 9: interval model fixed point vs closed-form tree sum",
       crit9},
      {"criterion 10: two independent transfer pipelines on g (x) C_1",
       crit10},
      {"criterion 11: projection/inclusion/rectification properties", crit11},
      {"criterion 12: deformation complexes (Hochschild and Lie side)",
       crit12},
      {"criterion 13: Maurer-Cartan pushforward is functorial", crit13},
      {"criterion 14: induced operator on bicomplex homology vs oracle",
       crit14},
  };
  int failures = 0;
  for (const auto& c : list) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
      ok = false;
    }
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", c.name);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mct/convolution.hpp"
#include "mct/deformation.hpp"
#include "mct/dupont.hpp"
#include "mct/freelie.hpp"
#include "mct/htt.hpp"
#include "mct/json_io.hpp"
#include "mct/linalg.hpp"
#include "mct/linfty.hpp"
#include "mct/mcspace.hpp"
#include "mct/solvers.hpp"
#include "mct/symalg.hpp"
#include "mct/trees.hpp"

using namespace mct;

TEST_CASE("koszul signs") {
  // swapping two odd elements costs a sign
  CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
  CHECK(koszul_sign({1, 0}, {1, 0}) == 1);
  CHECK(koszul_sign({2, 0, 1}, {1, 1, 1}) == 1);
  CHECK(tensor_apply_sign({1}, {0}) == 1);
  CHECK(tensor_apply_sign({0, 1}, {1, 0}) == -1);
  auto s = koszul_sort({"b", "a"}, {1, 1});
  CHECK(s.sign == -1);
  CHECK(s.keys == std::vector<std::string>{"a", "b"});
  auto z = koszul_sort({"a", "a"}, {1, 1});
  CHECK(z.sign == 0);
}

TEST_CASE("exact linear algebra") {
  Mat m{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * Scalar(1) + k[0][1] * Scalar(2) == 0);
  auto x = solve(m, Row{Scalar(3), Scalar(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + Scalar(2) * (*x)[1] == Scalar(3));
  CHECK(!solve(m, Row{Scalar(1), Scalar(0)}).has_value());
}

TEST_CASE("tree enumeration counts") {
  CHECK(enumerate_rooted(1).size() == 1);
  CHECK(enumerate_rooted(2).size() == 1);
  CHECK(enumerate_rooted(3).size() == 4);
  CHECK(enumerate_rooted(4).size() == 26);
  CHECK(enumerate_planar(1).size() == 1);
  CHECK(enumerate_planar(2).size() == 1);
  CHECK(enumerate_planar(3).size() == 3);
  CHECK(enumerate_planar(4).size() == 11);
  CHECK(enumerate_planar(5).size() == 45);
}

TEST_CASE("weighted planar trees") {
  // vertices of arity 1, weight 1 only: the trees are chains, one per weight
  auto chains = enumerate_wptrees(3, {{1, 1}});
  CHECK(chains.size() == 3);
  for (const auto& t : chains) {
    CHECK(coeff_F(t) == factorial(coeff_W(t)));
  }
}

TEST_CASE("free Lie algebra basics") {
  FreeLieCtx ctx{{0, 0}, 4};
  TensorElt a = fl_gen(0), b = fl_gen(1);
  CHECK(fl_is_zero(fl_add(bracket(ctx, a, b), bracket(ctx, b, a))));
  // Jacobi
  TensorElt j = bracket(ctx, a, bracket(ctx, b, bracket(ctx, a, b)));
  j = fl_add(j, bracket(ctx, b, bracket(ctx, bracket(ctx, a, b), a)));
  j = fl_add(j, bracket(ctx, bracket(ctx, a, b), bracket(ctx, a, b)));
  CHECK(fl_is_zero(j));
  CHECK(fl_is_zero(fl_sub(fl_log(ctx, fl_exp(ctx, a)), a)));
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == Scalar(1));
  CHECK(bernoulli(1) == Scalar(-1) / 2);
  CHECK(bernoulli(2) == Scalar(1) / 6);
  CHECK(bernoulli(3) == Scalar(0));
  CHECK(bernoulli(4) == Scalar(-1) / 30);
  CHECK(bernoulli(6) == Scalar(1) / 42);
}

TEST_CASE("suspended free nilpotent Lie structure satisfies the relations") {
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1}, 3);
  CHECK(!check_relations(g.algebra, 3).has_value());
  // odd generators: weights 1, 2, 3 contribute 2, 3, 2 basis elements
  // (PBW: the degree-3 part of the tensor algebra has dimension 8 = L_3 +
  // L_1 * L_2 = L_3 + 6)
  CHECK(g.algebra.space.basis.size() == 7);
}

TEST_CASE("twist by a Maurer-Cartan element preserves the relations") {
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1, 0}, 3);
  const SLInfty& A = g.algebra;
  // gauge flow of the zero element along the degree-1 generator is MC
  Vec lam{{g.gen_ids[2], Scalar(1)}};
  Vec x = gauge_flow(A, lam, Vec{}, 6);
  CHECK(vec_is_zero(mc_residual(A, x)));
  SLInfty tw = twist(A, x);
  CHECK(!check_relations(tw, 3).has_value());
}

TEST_CASE("polynomial forms") {
  FormCtx ctx{2};
  PolyForm t1 = form_t(ctx, 1), t2 = form_t(ctx, 2);
  PolyForm w = wedge(ctx, form_dt(ctx, 1), form_dt(ctx, 2));
  CHECK(form_degree(w) == -2);
  CHECK(form_is_zero(form_d(ctx, w)));
  // d is a derivation: d(t1 t2) = dt1 t2 + t1 dt2
  PolyForm lhs = form_d(ctx, wedge(ctx, t1, t2));
  PolyForm rhs = form_add(wedge(ctx, form_dt(ctx, 1), t2),
                          wedge(ctx, t1, form_dt(ctx, 2)));
  CHECK(form_is_zero(form_sub(lhs, rhs)));
  // t_0 + t_1 + t_2 = 1
  PolyForm sum = form_add(form_add(form_t(ctx, 0), t1), t2);
  CHECK(form_is_zero(form_sub(sum, form_const(ctx, Scalar(1)))));
  // integral of dt1 dt2 over the triangle
  CHECK(integrate(ctx, w) == Scalar(1) / 2);
}

TEST_CASE("simplicial identities on forms") {
  FormCtx c2{2};
  // face(i) o degeneracy(j) relations, spot-checked on a generator
  PolyForm f = wedge(c2, form_t(c2, 1), form_dt(c2, 2));
  FormCtx c3{3};
  PolyForm s0 = degeneracy(c2, f, 0);
  CHECK(form_is_zero(form_sub(face(c3, s0, 0), f)));
  CHECK(form_is_zero(form_sub(face(c3, s0, 1), f)));
}

TEST_CASE("Whitney forms") {
  FormCtx ctx{2};
  // w_i is the barycentric coordinate
  CHECK(form_is_zero(form_sub(whitney(ctx, {1}), form_t(ctx, 1))));
  // w_{01} = t0 dt1 - t1 dt0; vertex values / integrals
  CHECK(integrate(ctx, whitney(ctx, {0, 1, 2})) == Scalar(1));
  CHECK(eval_vertex(ctx, whitney(ctx, {1}), 1) == Scalar(1));
  CHECK(eval_vertex(ctx, whitney(ctx, {1}), 0) == Scalar(0));
  // p i = id on the Whitney space
  GradedSpace W = whitney_space(2);
  for (const auto& b : W.basis) {
    Vec v{{b.id, Scalar(1)}};
    CHECK(p_map(ctx, i_map(ctx, v)) == v);
  }
}

TEST_CASE("exact contraction of a random finite complex") {
  std::mt19937 rng(3);
  GradedSpace X;
  for (int k = 0; k <= 3; ++k)
    for (int j = 0; j < 3; ++j)
      X.basis.push_back({"c" + std::to_string(k) + "_" + std::to_string(j), k, 0});
  // build a random square-zero differential: d = A on degree 1 with A*B = 0
  GMap d;
  d.degree = -1;
  // use a rank-one pattern so d^2 = 0 automatically
  d.images["c1_0"] = Vec{{"c0_0", Scalar(2)}, {"c0_1", Scalar(1)}};
  d.images["c2_1"] = Vec{{"c1_1", Scalar(1)}, {"c1_2", Scalar(-1)}};
  d.images["c3_2"] = Vec{{"c2_0", Scalar(1)}};
  REQUIRE(!check_complex(X, d).has_value());
  Contraction c = build_contraction(X, d);
  GMap pi = gmap_compose(c.p, c.i);
  CHECK(gmap_equal(pi, gmap_identity(c.small)));
  // 1 - i p = d h + h d
  GMap ip = gmap_compose(c.i, c.p);
  GMap hom = gmap_add(gmap_compose(d, c.h), gmap_compose(c.h, d));
  GMap one = gmap_identity(X);
  CHECK(gmap_equal(gmap_add(ip, hom), one));
  // side conditions
  CHECK(gmap_equal(gmap_compose(c.h, c.h), GMap{2, {}}));
  CHECK(gmap_equal(gmap_compose(c.p, c.h), GMap{1, {}}));
  CHECK(gmap_equal(gmap_compose(c.h, c.i), GMap{1, {}}));
}

TEST_CASE("convolution structure and twisting-morphism equation") {
  ConilCoalg C;
  C.space.basis = {{"c1", 0, 1}, {"c2", 0, 2}, {"c3", 0, 3}};
  C.d.degree = -1;
  C.delta[2]["c2"] = {{{"c1", "c1"}, Scalar(1)}};
  C.delta[2]["c3"] = {{{"c1", "c2"}, Scalar(1)}, {{"c2", "c1"}, Scalar(1)}};
  C.delta[3]["c3"] = {{{"c1", "c1", "c1"}, Scalar(1)}};
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1}, 3);
  ConvAlg cv{C, &g.algebra};
  SLInfty conv = conv_slinfty(cv, 3);
  CHECK(!check_relations(conv, 3).has_value());
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    GMap phi;
    phi.degree = 0;
    std::uniform_int_distribution<int> pick(-2, 2);
    for (const auto& b : C.space.basis) {
      Vec v;
      for (const auto& a : g.algebra.space.basis)
        if (a.deg == b.deg) {
          Scalar x = Scalar(pick(rng));
          if (x != 0) v[a.id] = x;
        }
      if (!vec_is_zero(v)) phi.images[b.id] = v;
    }
    TwResult r = mc_equals_tw(cv, phi);
    CHECK(r.equal);
  }
}

TEST_CASE("A^n fixture is a valid contraction") {
  for (int n : {2, 3}) {
    AnFixture fx = build_An(n, 8);
    REQUIRE(!check_complex(fx.big, fx.d).has_value());
    // p i = id
    for (const auto& b : fx.small.basis) {
      Vec v{{b.id, Scalar(1)}};
      CHECK(fx.p.apply(fx.i.apply(v)) == v);
    }
    // 1 - i p = d h + h d on every monomial
    for (const auto& b : fx.big.basis) {
      Vec v{{b.id, Scalar(1)}};
      Vec lhs = vec_sub(v, fx.i.apply(fx.p.apply(v)));
      Vec rhs = fx.d.apply(fx.h.apply(v));
      vec_add(rhs, fx.h.apply(fx.d.apply(v)), 1);
      CHECK(lhs == rhs);
    }
    // the product is associative and d is a derivation
    Vec x{{"x1", Scalar(1)}}, y{{"x0y", Scalar(1)}};
    Vec lhs = fx.multiply(fx.multiply(x, x), y);
    Vec rhs = fx.multiply(x, fx.multiply(x, y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("symbolic bracket algebra") {
  SymCtx ctx;
  ctx.gen_degrees = {0, 0, 1};
  ctx.weight_cap = 4;
  SymElt a = sym_gen(0), b = sym_gen(1), l = sym_gen(2);
  // graded symmetry in even degrees
  CHECK(sym_bracket(ctx, {a, b}) == sym_bracket(ctx, {b, a}));
  // odd generator: swapping two copies of l is a Koszul sign -1, so the
  // canonicalized bracket of (l, l) vanishes
  CHECK(sym_bracket(ctx, {l, l}).empty());
  // desuspension matches the free Lie bracket on a strict element
  FreeLieCtx fl{{-1, -1, 0}, 4};
  TensorElt img = sym_to_classical(ctx, fl, sym_bracket(ctx, {a, b}));
  // l_2(sx, sy) = (-1)^{|x|} s[x, y] with |x0| = -1
  TensorElt expect = fl_scale(bracket(fl, fl_gen(0), fl_gen(1)), Scalar(-1));
  CHECK(fl_is_zero(fl_sub(img, expect)));
}

TEST_CASE("point models") {
  MC0 p = build_mc0(4);
  CHECK(derivation_squares_to_zero(p.ctx, p.d));
  CHECK(fl_is_zero(mc_residual_lie(p.ctx, p.d, p.alpha)));
  MCInf0 q = build_mcinf0(4);
  CHECK(!q.d_alpha.empty());
}

TEST_CASE("interval model correspondence helpers") {
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1, 0}, 2);
  Vec a0{{g.gen_ids[0], Scalar(2)}};
  Vec a1{{g.gen_ids[1], Scalar(-1)}};
  Vec l{{g.gen_ids[2], Scalar(3)}};
  Vec cell = hom_to_cell(g.algebra, a0, a1, l);
  Vec b0, b1, bl;
  cell_to_hom(g.algebra, cell, b0, b1, bl);
  CHECK(a0 == b0);
  CHECK(a1 == b1);
  CHECK(l == bl);
}

TEST_CASE("gerstenhaber bracket grading") {
  GradedSpace A;
  A.basis = {{"u", 0, 0}, {"v", 0, 0}};
  MultiMap f, g;
  f.arity = 2;
  g.arity = 2;
  f.table[{"u", "u"}] = Vec{{"v", Scalar(1)}};
  g.table[{"u", "v"}] = Vec{{"u", Scalar(1)}};
  MultiMap fg = gerstenhaber(A, f, g);
  MultiMap gf = gerstenhaber(A, g, f);
  // [f, g] = -(-1)^{(n-1)(m-1)} [g, f]; for two 2-cochains the bracket is
  // symmetric: [f, g] = f o g + g o f = [g, f]
  for (const auto& [args, v] : fg.table) {
    Vec other = gf.table.count(args) ? gf.table.at(args) : Vec{};
    CHECK(v == other);
  }
}

TEST_CASE("json round trips") {
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1}, 3);
  auto j = slinfty_to_json(g.algebra);
  SLInfty back = slinfty_from_json(j);
  CHECK(back.space.ids() == g.algebra.space.ids());
  for (const auto& a : g.algebra.space.ids())
    for (const auto& b : g.algebra.space.ids())
      CHECK(back.apply_basis(2, {a, b}) == g.algebra.apply_basis(2, {a, b}));
  Scalar s = Scalar(-7) / 3;
  CHECK(scalar_from_json(scalar_to_json(s)) == s);
}

TEST_CASE("formal fixed point solver") {
  // x = 1 + t x in truncated polynomials: geometric series
  struct Poly {
    std::vector<Scalar> c;
  };
  struct Ops {
    Poly zero() const { return {}; }
    Poly add(const Poly& a, const Poly& b) const {
      Poly r = a;
      if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Scalar(0));
      for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
      while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
      return r;
    }
    Poly scale(const Scalar& s, const Poly& a) const {
      Poly r = a;
      for (auto& x : r.c) x *= s;
      return r;
    }
    bool equal(const Poly& a, const Poly& b) const { return a.c == b.c; }
  };
  FPEq<Poly> eq;
  eq.p0 = Poly{{Scalar(1)}};
  eq.ops.push_back([](const Poly& x) {
    Poly r;
    r.c.assign(1, Scalar(0));
    for (size_t i = 0; i + 1 < 6 && i < x.c.size(); ++i) r.c.push_back(x.c[i]);
    return r;
  });
  Poly sol = solve_fixed_point(eq, Ops{});
  REQUIRE(sol.c.size() == 6);
  for (const auto& x : sol.c) CHECK(x == Scalar(1));
}

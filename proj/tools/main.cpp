// Command-line front end for the exact homotopical-algebra library.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "mct/convolution.hpp"
#include "mct/dupont.hpp"
#include "mct/freelie.hpp"
#include "mct/htt.hpp"
#include "mct/json_io.hpp"
#include "mct/linfty.hpp"
#include "mct/mcspace.hpp"
#include "mct/symalg.hpp"

using namespace mct;

namespace {

std::string tensor_to_string(const TensorElt& e) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) s += " + ";
    first = false;
    s += scalar_to_string(c) + "*";
    if (w.empty()) s += "1";
    for (int g : w) s += "g" + std::to_string(g);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic calculus for shifted homotopy Lie algebras"};
  app.require_subcommand(1);

  // ------------------------------------------------------------------ bch
  int bch_cap = 4;
  auto* cmd_bch = app.add_subcommand(
      "bch", "Baker-Campbell-Hausdorff series of two generators");
  cmd_bch->add_option("--cap", bch_cap, "maximum word length");

  // ------------------------------------------------------------- bernoulli
  int bern_n = 10;
  auto* cmd_bern =
      app.add_subcommand("bernoulli", "print the first Bernoulli numbers");
  cmd_bern->add_option("-n", bern_n, "how many");

  // ------------------------------------------------------------- interval
  int iv_cap = 4;
  auto* cmd_iv = app.add_subcommand(
      "interval", "free complete Lie algebra of the interval");
  cmd_iv->add_option("--cap", iv_cap, "weight truncation");

  // ---------------------------------------------------------------- dupont
  int dv_n = 2, dv_deg = 4;
  auto* cmd_dv = app.add_subcommand(
      "dupont-verify", "verify the simplicial contraction identities");
  cmd_dv->add_option("--level", dv_n, "simplex dimension");
  cmd_dv->add_option("--deg", dv_deg, "polynomial degree cap");

  // --------------------------------------------------------- counterexample
  auto* cmd_ce = app.add_subcommand(
      "counterexample",
      "two composites of morphism actions that fail to agree");

  // ------------------------------------------------------------- mc-model
  int mm_cap = 3;
  auto* cmd_mm = app.add_subcommand(
      "mc-model", "free homotopy interval model by two independent methods");
  cmd_mm->add_option("--weight-cap", mm_cap, "weight truncation");

  // ------------------------------------------------------------- relations
  std::string rel_file;
  int rel_arity = 3;
  auto* cmd_rel = app.add_subcommand(
      "relations", "check the homotopy Lie relations of a JSON structure");
  cmd_rel->add_option("input", rel_file, "JSON file")->required();
  cmd_rel->add_option("--arity", rel_arity, "maximum relation arity");

  // ------------------------------------------------------------ mc-residual
  std::string mcr_file, mcr_elt;
  auto* cmd_mcr = app.add_subcommand(
      "mc-residual", "Maurer-Cartan residual of an element in a JSON structure");
  cmd_mcr->add_option("input", mcr_file, "JSON structure file")->required();
  cmd_mcr->add_option("element", mcr_elt, "JSON sparse vector file")->required();

  // --------------------------------------------------------------- transfer
  std::string tr_file;
  int tr_arity = 3;
  auto* cmd_tr = app.add_subcommand(
      "transfer",
      "transfer a JSON structure onto its homology along an exact contraction");
  cmd_tr->add_option("input", tr_file, "JSON structure file")->required();
  cmd_tr->add_option("--arity", tr_arity, "arity cap of the result");

  // ------------------------------------------------------------------ gauge
  std::string gf_file, gf_lambda, gf_x0;
  int gf_tdeg = 6;
  auto* cmd_gf = app.add_subcommand(
      "gauge", "time-1 gauge flow of an element along a degree-1 element");
  cmd_gf->add_option("input", gf_file, "JSON structure file")->required();
  cmd_gf->add_option("lambda", gf_lambda, "JSON vector file")->required();
  cmd_gf->add_option("x0", gf_x0, "JSON vector file")->required();
  cmd_gf->add_option("--t-deg", gf_tdeg, "series truncation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_bch) {
      FreeLieCtx ctx{{0, 0}, bch_cap};
      std::printf("%s\n", tensor_to_string(bch(ctx, fl_gen(0), fl_gen(1))).c_str());
    } else if (*cmd_bern) {
      for (int n = 0; n < bern_n; ++n)
        std::printf("B_%d = %s\n", n, scalar_to_string(bernoulli(n)).c_str());
    } else if (*cmd_iv) {
      IntervalLie L = lawrence_sullivan(iv_cap);
      std::printf("d(x0) = %s\n",
                  tensor_to_string(L.d.apply(L.ctx, L.x0)).c_str());
      std::printf("d(lambda) = %s\n",
                  tensor_to_string(L.d.apply(L.ctx, L.lambda)).c_str());
      std::printf("d^2 = 0: %s\n",
                  derivation_squares_to_zero(L.ctx, L.d) ? "yes" : "no");
      TensorElt flow = gauge_closed_form(L.ctx, L.lambda, L.x0, L.d, Scalar(1));
      std::printf("time-1 flow of x0 equals x1: %s\n",
                  fl_is_zero(fl_sub(flow, L.x1)) ? "yes" : "no");
    } else if (*cmd_dv) {
      auto err = verify_contraction(dv_n, dv_deg);
      if (err) {
        std::printf("FAIL: %s\n", err->c_str());
        return 1;
      }
      std::printf("contraction identities hold (level %d, degree <= %d)\n",
                  dv_n, dv_deg);
    } else if (*cmd_ce) {
      CounterexampleResult r = counterexample_run(false);
      std::printf("composite 1 (morphism actions in one order):  %s\n",
                  vec_to_string(r.first).c_str());
      std::printf("composite 2 (morphism actions in the other):  %s\n",
                  vec_to_string(r.second).c_str());
      CounterexampleResult t = counterexample_run(true);
      std::printf("with strict morphisms both give:              %s\n",
                  vec_to_string(t.first).c_str());
    } else if (*cmd_mm) {
      MCInf1 m = build_mcinf1(mm_cap);
      std::printf("fixed point : %s\n",
                  sym_elt_to_string(m.d_lambda_fixed_point).c_str());
      std::printf("tree sum    : %s\n",
                  sym_elt_to_string(m.d_lambda_gsum).c_str());
      std::printf("agree: %s\n", m.agree ? "yes" : "no");
      if (!m.agree) return 1;
    } else if (*cmd_rel) {
      SLInfty A = slinfty_from_json(load_json_file(rel_file));
      auto err = check_relations(A, rel_arity);
      if (err) {
        std::printf("FAIL: %s\n", err->c_str());
        return 1;
      }
      std::printf("relations hold up to arity %d\n", rel_arity);
    } else if (*cmd_mcr) {
      SLInfty A = slinfty_from_json(load_json_file(mcr_file));
      Vec x = vec_from_json(load_json_file(mcr_elt));
      std::printf("%s\n", vec_to_string(mc_residual(A, x)).c_str());
    } else if (*cmd_tr) {
      SLInfty A = slinfty_from_json(load_json_file(tr_file));
      Contraction c = build_contraction(A.space, A.differential());
      SymContraction<Vec> sc = finite_sym_contraction(A, c);
      SLInfty small = transfer_slinfty(sc, tr_arity);
      std::cout << slinfty_to_json(small).dump(2) << "\n";
    } else if (*cmd_gf) {
      SLInfty A = slinfty_from_json(load_json_file(gf_file));
      Vec lam = vec_from_json(load_json_file(gf_lambda));
      Vec x0 = vec_from_json(load_json_file(gf_x0));
      std::printf("%s\n", vec_to_string(gauge_flow(A, lam, x0, gf_tdeg)).c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

#pragma once

// Free complete shifted homotopy Lie algebra on graded generators, with the
// weight filtration by number of generator occurrences. Basis elements are
// formal bracket trees (vertices = graded-symmetric brackets of arity >= 2,
// leaves = generators); no Jacobi-type relations hold in the free algebra,
// only graded symmetry at each vertex.

#include <map>
#include <string>
#include <vector>

#include "mct/freelie.hpp"
#include "mct/graded.hpp"

namespace mct {

struct SymTree {
  int gen = -1;               // leaf when >= 0
  std::vector<SymTree> kids;  // bracket node (arity = kids.size()) when gen < 0

  bool is_leaf() const { return gen >= 0; }
  friend bool operator<(const SymTree& a, const SymTree& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.kids < b.kids;
  }
  friend bool operator==(const SymTree& a, const SymTree& b) {
    return a.gen == b.gen && a.kids == b.kids;
  }
};

struct SymCtx {
  std::vector<int> gen_degrees;  // shifted degrees
  int weight_cap = 4;            // terms with more generator leaves are dropped
  int bracket_arity_cap = 16;    // brackets above this arity are zero
};

using SymElt = std::map<SymTree, Scalar>;

int sym_degree(const SymCtx& ctx, const SymTree& t);
int sym_weight(const SymTree& t);
std::string sym_encode(const SymTree& t);
std::string sym_elt_to_string(const SymElt& e);

SymElt sym_gen(int g);
SymElt sym_add(const SymElt& a, const SymElt& b);
SymElt sym_scale(const SymElt& a, const Scalar& c);
SymElt sym_sub(const SymElt& a, const SymElt& b);

// Multilinear graded-symmetric bracket of the given arity (>= 2), with
// Koszul-canonicalization at the new vertex and weight truncation.
SymElt sym_bracket(const SymCtx& ctx, const std::vector<SymElt>& args);

// Ops adapter for the generic solvers.
struct SymOps {
  const SymCtx* ctx;
  SymElt zero() const { return {}; }
  SymElt add(const SymElt& a, const SymElt& b) const { return sym_add(a, b); }
  SymElt scale(const Scalar& c, const SymElt& a) const { return sym_scale(a, c); }
  bool equal(const SymElt& a, const SymElt& b) const { return a == b; }
};

// Keep only terms all of whose bracket vertices are binary (the strict-Lie
// specialization l_n = 0 for n >= 3).
SymElt sym_strict_part(const SymElt& e);

// Desuspension into a free Lie algebra context: generator g of shifted
// degree d maps to the classical generator g of degree d - 1, and binary
// vertices unfold through l_2(sx, sy) = (-1)^{|x|} s[x, y]. Only defined on
// strict (all-binary) elements.
TensorElt sym_to_classical(const SymCtx& ctx, const FreeLieCtx& fl, const SymElt& e);

}  // namespace mct

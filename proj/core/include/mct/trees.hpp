#pragma once

// Tree combinatorics:
//   * leaf-labeled reduced rooted trees (symmetric transfer formulas),
//   * planar reduced trees (nonsymmetric transfer formulas),
//   * weighted planar trees with input slots (formal ODE / fixed-point
//     solvers), with the weight W and symmetry-like coefficient F,
//   * vertex-decorated trees with black/white leaves and the coefficient G
//     (closed formula for the one-simplex model of the gauge relation).

#include <optional>
#include <string>
#include <vector>

#include "mct/scalar.hpp"

namespace mct {

// ---------------------------------------------------- labeled rooted trees

// A leaf carries a label >= 1; an internal vertex has children (arity >= 2
// when reduced). Children are kept sorted by minimal leaf label, which makes
// the representation canonical for isomorphism classes of leaf-labeled trees.
struct LTree {
  int label = -1;
  std::vector<LTree> children;

  bool is_leaf() const { return children.empty(); }
};

int ltree_min_label(const LTree& t);
int ltree_num_vertices(const LTree& t);  // internal vertices only
std::string ltree_encode(const LTree& t);

// All reduced leaf-labeled rooted trees on labels 1..n (n >= 1). These are
// rigid (no nontrivial automorphisms), so transfer formulas sum each class
// exactly once with no symmetry factors.
std::vector<LTree> enumerate_rooted(int n, bool reduced = true);

// ------------------------------------------------------------ planar trees

// Planar rooted tree; leaves are implicitly labeled 1..n left to right.
struct PTree {
  bool leaf = true;
  std::vector<PTree> children;  // planar order; arity >= 2 when reduced
};

int ptree_num_leaves(const PTree& t);
int ptree_num_vertices(const PTree& t);
std::string ptree_encode(const PTree& t);

// All reduced planar trees with n leaves (Schroeder numbers 1,1,3,11,45...).
std::vector<PTree> enumerate_planar(int n);

// -------------------------------------------------- weighted planar trees

// Weighted planar tree with input slots. The empty tree is the identity
// slot; a vertex has a weight w >= 1 and an ordered list of children, each
// again a weighted planar tree (possibly empty = an input slot).
struct WPTree {
  bool empty = true;
  int weight = 0;
  std::vector<WPTree> children;

  int arity() const { return static_cast<int>(children.size()); }
};

// Total weight: W(empty) = 0, W(vertex) = weight + sum of children.
int coeff_W(const WPTree& t);

// F(empty) = 1, F(vertex) = W(vertex) * product of F over children.
Scalar coeff_F(const WPTree& t);

std::string wptree_encode(const WPTree& t);

// All non-empty weighted planar trees of total weight <= weight_cap whose
// vertices are drawn from the allowed (arity, weight) pairs. The empty tree
// is not included; callers add it when their sum starts at the identity.
std::vector<WPTree> enumerate_wptrees(
    int weight_cap, const std::vector<std::pair<int, int>>& arity_weight_pairs);

// --------------------------------------------------------- decorated trees

// Tree whose vertices of arity k are decorated by a planar tree with k input
// slots and all vertices of arity >= 1; leaves are colored white or black.
struct DecTree;
struct DecChild {
  enum class Kind { White, Black, Sub } kind = Kind::White;
  std::vector<DecTree> sub;  // exactly one entry when kind == Sub
};
struct DecTree {
  WPTree decoration;  // weight-1 vertices, arity >= 1 each, slots = arity
  std::vector<DecChild> children;
};

// G(T) = prod over vertices v of (-1 / F(tau_bar_v)), where tau_bar_v is the
// decoration of v with a weight-1 0-corolla grafted into every slot whose
// child is an inner vertex or a black leaf.
Scalar coeff_G(const DecTree& t);

std::string dectree_encode(const DecTree& t);

}  // namespace mct

#include "mct/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mct {

// ---------------------------------------------------- labeled rooted trees

int ltree_min_label(const LTree& t) {
  if (t.is_leaf()) return t.label;
  int m = ltree_min_label(t.children.front());
  for (const auto& c : t.children) m = std::min(m, ltree_min_label(c));
  return m;
}

int ltree_num_vertices(const LTree& t) {
  if (t.is_leaf()) return 0;
  int n = 1;
  for (const auto& c : t.children) n += ltree_num_vertices(c);
  return n;
}

std::string ltree_encode(const LTree& t) {
  if (t.is_leaf()) return std::to_string(t.label);
  std::string s = "(";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += " ";
    s += ltree_encode(t.children[i]);
  }
  return s + ")";
}

namespace {

// All set partitions of `items`; each partition is a list of blocks, blocks
// and elements kept in insertion order (so block minima are increasing).
void set_partitions(const std::vector<int>& items, size_t index,
                    std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (index == items.size()) {
    out.push_back(current);
    return;
  }
  // Index-based iteration: deeper calls push/pop a trailing block, which can
  // reallocate `current` and would invalidate references held here.
  for (size_t b = 0; b < current.size(); ++b) {
    current[b].push_back(items[index]);
    set_partitions(items, index + 1, current, out);
    current[b].pop_back();
  }
  current.push_back({items[index]});
  set_partitions(items, index + 1, current, out);
  current.pop_back();
}

std::vector<LTree> trees_on(const std::vector<int>& labels) {
  if (labels.size() == 1) {
    LTree leaf;
    leaf.label = labels[0];
    return {leaf};
  }
  std::vector<std::vector<std::vector<int>>> partitions;
  std::vector<std::vector<int>> current;
  set_partitions(labels, 0, current, partitions);

  std::vector<LTree> out;
  for (const auto& blocks : partitions) {
    if (blocks.size() < 2) continue;
    // Candidate subtrees per block.
    std::vector<std::vector<LTree>> options;
    for (const auto& block : blocks) options.push_back(trees_on(block));
    // Cartesian product.
    std::vector<size_t> pick(options.size(), 0);
    while (true) {
      LTree root;
      for (size_t b = 0; b < options.size(); ++b)
        root.children.push_back(options[b][pick[b]]);
      std::sort(root.children.begin(), root.children.end(),
                [](const LTree& a, const LTree& b) {
                  return ltree_min_label(a) < ltree_min_label(b);
                });
      out.push_back(std::move(root));
      size_t j = 0;
      for (; j < pick.size(); ++j) {
        if (++pick[j] < options[j].size()) break;
        pick[j] = 0;
      }
      if (j == pick.size()) break;
    }
  }
  return out;
}

}  // namespace

std::vector<LTree> enumerate_rooted(int n, bool reduced) {
  if (!reduced)
    throw std::invalid_argument(
        "enumerate_rooted: only reduced trees form a finite family");
  if (n < 1) throw std::invalid_argument("enumerate_rooted: n must be >= 1");
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return trees_on(labels);
}

// ------------------------------------------------------------ planar trees

int ptree_num_leaves(const PTree& t) {
  if (t.leaf) return 1;
  int n = 0;
  for (const auto& c : t.children) n += ptree_num_leaves(c);
  return n;
}

int ptree_num_vertices(const PTree& t) {
  if (t.leaf) return 0;
  int n = 1;
  for (const auto& c : t.children) n += ptree_num_vertices(c);
  return n;
}

std::string ptree_encode(const PTree& t) {
  if (t.leaf) return "*";
  std::string s = "(";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += " ";
    s += ptree_encode(t.children[i]);
  }
  return s + ")";
}

namespace {

void compositions(int n, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (n >= 1) {
      current.push_back(n);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int first = 1; first <= n - parts + 1; ++first) {
    current.push_back(first);
    compositions(n - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PTree> enumerate_planar(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_planar: n must be >= 1");
  if (n == 1) return {PTree{}};
  std::vector<PTree> out;
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<int>> comps;
    std::vector<int> current;
    compositions(n, k, current, comps);
    for (const auto& comp : comps) {
      std::vector<std::vector<PTree>> options;
      for (int part : comp) options.push_back(enumerate_planar(part));
      std::vector<size_t> pick(options.size(), 0);
      while (true) {
        PTree root;
        root.leaf = false;
        for (size_t b = 0; b < options.size(); ++b)
          root.children.push_back(options[b][pick[b]]);
        out.push_back(std::move(root));
        size_t j = 0;
        for (; j < pick.size(); ++j) {
          if (++pick[j] < options[j].size()) break;
          pick[j] = 0;
        }
        if (j == pick.size()) break;
      }
    }
  }
  return out;
}

// -------------------------------------------------- weighted planar trees

int coeff_W(const WPTree& t) {
  if (t.empty) return 0;
  int w = t.weight;
  for (const auto& c : t.children) w += coeff_W(c);
  return w;
}

Scalar coeff_F(const WPTree& t) {
  if (t.empty) return 1;
  Scalar f = coeff_W(t);
  for (const auto& c : t.children) f *= coeff_F(c);
  return f;
}

std::string wptree_encode(const WPTree& t) {
  if (t.empty) return "_";
  std::string s = "[w" + std::to_string(t.weight);
  for (const auto& c : t.children) s += " " + wptree_encode(c);
  return s + "]";
}

namespace {

using AWPairs = std::vector<std::pair<int, int>>;

std::vector<WPTree> gen_wptrees(int budget, const AWPairs& pairs);

// All ordered lists of `slots` children (each empty or a tree) with total
// weight <= budget.
std::vector<std::vector<WPTree>> gen_children(int slots, int budget,
                                              const AWPairs& pairs) {
  std::vector<std::vector<WPTree>> out;
  if (slots == 0) {
    out.push_back({});
    return out;
  }
  std::vector<WPTree> first_options = gen_wptrees(budget, pairs);
  first_options.push_back(WPTree{});  // the input slot
  for (const auto& first : first_options) {
    auto rest = gen_children(slots - 1, budget - coeff_W(first), pairs);
    for (auto& r : rest) {
      std::vector<WPTree> full;
      full.push_back(first);
      full.insert(full.end(), r.begin(), r.end());
      out.push_back(std::move(full));
    }
  }
  return out;
}

std::vector<WPTree> gen_wptrees(int budget, const AWPairs& pairs) {
  std::vector<WPTree> out;
  if (budget <= 0) return out;
  for (const auto& [arity, weight] : pairs) {
    if (weight < 1 || weight > budget) continue;
    for (auto& children : gen_children(arity, budget - weight, pairs)) {
      WPTree t;
      t.empty = false;
      t.weight = weight;
      t.children = std::move(children);
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

std::vector<WPTree> enumerate_wptrees(int weight_cap, const AWPairs& pairs) {
  for (const auto& [a, w] : pairs)
    if (w < 1 || a < 0)
      throw std::invalid_argument("enumerate_wptrees: weights must be >= 1");
  return gen_wptrees(weight_cap, pairs);
}

// --------------------------------------------------------- decorated trees

namespace {

// Replace the slots of `deco` (in planar order) by weight-1 0-corollas at
// the positions where `graft` is true.
WPTree graft_corollas(const WPTree& deco, const std::vector<bool>& graft,
                      size_t& slot) {
  if (deco.empty) {
    bool g = graft[slot++];
    if (!g) return deco;
    WPTree c0;
    c0.empty = false;
    c0.weight = 1;
    return c0;
  }
  WPTree out = deco;
  for (auto& c : out.children) c = graft_corollas(c, graft, slot);
  return out;
}

void count_slots(const WPTree& t, int& n) {
  if (t.empty) {
    ++n;
    return;
  }
  for (const auto& c : t.children) count_slots(c, n);
}

}  // namespace

Scalar coeff_G(const DecTree& t) {
  int slots = 0;
  count_slots(t.decoration, slots);
  if (slots != static_cast<int>(t.children.size()))
    throw std::invalid_argument("coeff_G: decoration arity mismatch");
  std::vector<bool> graft;
  for (const auto& c : t.children)
    graft.push_back(c.kind != DecChild::Kind::White);
  size_t slot = 0;
  WPTree bar = graft_corollas(t.decoration, graft, slot);
  Scalar g = Scalar(-1) / coeff_F(bar);
  for (const auto& c : t.children)
    if (c.kind == DecChild::Kind::Sub) g *= coeff_G(c.sub.front());
  return g;
}

std::string dectree_encode(const DecTree& t) {
  std::string s = "{" + wptree_encode(t.decoration) + " :";
  for (const auto& c : t.children) {
    switch (c.kind) {
      case DecChild::Kind::White: s += " o"; break;
      case DecChild::Kind::Black: s += " x"; break;
      case DecChild::Kind::Sub: s += " " + dectree_encode(c.sub.front()); break;
    }
  }
  return s + "}";
}

}  // namespace mct

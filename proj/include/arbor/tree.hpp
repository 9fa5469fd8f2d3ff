#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arbor/coeff.hpp"

namespace arbor {

enum class Flavor { Unordered, Planar, K, Nary, Labeled };

std::string flavor_name(Flavor f);

/** Canonical basis element: flavor + vertex count + canonical text. */
struct Key {
  Flavor flavor = Flavor::Unordered;
  int degree = 0;
  std::string text = "1";

  static Key unit(Flavor f) { return Key{f, 0, "1"}; }
  bool is_unit() const { return degree == 0; }

  friend bool operator<(const Key& a, const Key& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.text < b.text;
  }
  friend bool operator==(const Key& a, const Key& b) {
    return a.flavor == b.flavor && a.degree == b.degree && a.text == b.text;
  }
  friend bool operator!=(const Key& a, const Key& b) { return !(a == b); }
};

/** Vertex subset of a rigid forest, as a bitmask over vertex indices. */
using Mask = std::uint64_t;

/**
 * A concrete rooted forest. Vertices are indices; `children` order is the
 * planar order (ignored up to sorting for unordered flavors). For colored
 * flavors `color[v]` is the color of the edge from v down to its parent
 * (0 at roots); for the Labeled flavor it is the vertex label.
 */
struct RigidTree {
  Flavor flavor = Flavor::Unordered;
  int n = 1;
  std::vector<int> parent;
  std::vector<int> color;
  std::vector<std::vector<int>> children;
  std::vector<int> roots;

  int size() const { return (int)parent.size(); }
  bool single_tree() const { return roots.size() == 1; }
  /** Fill children/roots from parent, ordering children by vertex index. */
  void rebuild();
};

RigidTree parse_forest(const std::string& text, Flavor flavor, int n);
std::string format_forest(const RigidTree& t);
Key canonical_key(const RigidTree& t);
Key key_of(const std::string& text, Flavor flavor, int n);
RigidTree tree_of(const Key& key, int n);

/** Depth-first pre-order over all components, children in stored order. */
std::vector<int> preorder(const RigidTree& t);

/** Top-level components of a canonical forest text. */
std::vector<std::string> split_components(const std::string& text);
/** Canonical concatenation of two forests of the same flavor. */
Key forest_concat(const Key& a, const Key& b, int n);

/** All isomorphism classes of single trees with m vertices (m=0: unit). */
std::vector<Key> enumerate_trees(Flavor flavor, int n, int m);
/** All forests of total degree m (k-flavor has no forests beyond trees). */
std::vector<Key> enumerate_forests(Flavor flavor, int n, int m);
/** Independent generator: filter all parent arrays x colorings (trees). */
std::vector<Key> enumerate_trees_bruteforce(Flavor flavor, int n, int m);

/**
 * Induced subforest on s: v > w is an edge iff w is the nearest ancestor
 * of v inside s, colored by the lowest edge of the ambient path; vertices,
 * siblings and components ordered by ambient pre-order. vmap (optional)
 * receives ambient index -> induced index (-1 outside s).
 */
RigidTree induce_rigid(const RigidTree& t, Mask s, std::vector<int>* vmap = nullptr);
Key induce(const RigidTree& t, Mask s);

/** Edges of color k on the path v -> root whose lower endpoint is not in s. */
int p_count(const RigidTree& t, int v, Mask s, int k);

/** q(s,t) = prod_j q1j^{sum_{v in s} p_j(v,s,t)} q2j^{sum_{v notin s} p_j(v,s^c,t)}. */
Coeff q_coeff(const RigidTree& t, Mask s, const Params& params);

/** Admissible cuts of a single tree, as masks of cut-edge upper vertices. */
std::vector<Mask> admissible_cuts(const RigidTree& t);
/** (P^c, R^c): pruned subtrees and the root component. */
std::pair<Key, Key> cut_split(const RigidTree& t, Mask cut);

/** Graft s onto vertex v of t by an edge of the given color. */
Key graft(const RigidTree& s, const RigidTree& t, int v, int color);
/** Labeled-flavor graft (no edge colors). */
Key graft_labeled(const RigidTree& s, const RigidTree& t, int v);

/** Order of the automorphism group (unordered or labeled flavor). */
Integer aut_count(const RigidTree& t);

/** Vertices joined to the root by paths colored inside pset (single tree). */
Mask p_component(const RigidTree& t, const std::vector<int>& pset);

/** K-flavor validity: at most one child of each color everywhere. */
bool is_k_valid(const RigidTree& t);

} // namespace arbor

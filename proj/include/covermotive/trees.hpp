#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covermotive/group.hpp"
#include "covermotive/limits.hpp"
#include "covermotive/motive.hpp"

namespace covermotive {

/// A tree as a flag structure: flags 0..F-1, an involution j on flags and a
/// vertex assignment R. Edges are the 2-element j-orbits, leaves the j-fixed
/// flags.
class Tree {
 public:
  /// Throws MalformedSpec unless j is an involution, vertex ids are exactly
  /// 0..V-1, the graph is connected and #V = #E + 1.
  Tree(std::vector<int> involution, std::vector<int> vertex_of);

  int flag_count() const { return static_cast<int>(involution_.size()); }
  int vertex_count() const { return static_cast<int>(flags_at_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int leaf_count() const { return static_cast<int>(leaves_.size()); }

  int partner(int flag) const { return involution_[flag]; }
  int vertex_of(int flag) const { return vertex_of_[flag]; }
  bool is_leaf(int flag) const { return involution_[flag] == flag; }
  const std::vector<int>& flags_at(int vertex) const { return flags_at_[vertex]; }
  int valence(int vertex) const { return static_cast<int>(flags_at_[vertex].size()); }

  /// (f, j(f)) with f < j(f), ascending in f.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Leaf flags, ascending.
  const std::vector<int>& leaves() const { return leaves_; }

 private:
  std::vector<int> involution_;
  std::vector<int> vertex_of_;
  std::vector<std::vector<int>> flags_at_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> leaves_;
};

/// A tree with a bijection from its leaves to {1..n}. Must be stable.
class NTree {
 public:
  /// `label_of_flag[f]` is the label of leaf flag f and 0 for internal flags.
  NTree(Tree tree, std::vector<int> label_of_flag);

  const Tree& tree() const { return tree_; }
  int n() const { return tree_.leaf_count(); }
  int label_of(int flag) const { return label_of_flag_[flag]; }
  int leaf_flag(int label) const { return leaf_flag_[label - 1]; }

  /// Nested-parenthesis encoding rooted at the vertex carrying leaf 1, items
  /// ordered by their smallest leaf label, e.g. "(1,2,(3,4))". Equal exactly
  /// for isomorphic n-trees.
  const std::string& canonical_form() const { return canonical_; }

 private:
  Tree tree_;
  std::vector<int> label_of_flag_;
  std::vector<int> leaf_flag_;
  std::string canonical_;
};

/// A stable n-tree with a conjugacy class on every flag, ι-paired along edges.
struct GerbyTree {
  NTree tree;
  std::vector<ClassId> marks;  // indexed by flag
};

/// Builds the canonical flag structure of a stable tree given as a vertex
/// graph: `neighbours[v]` are the vertices adjacent to v and `leaves[v]` the
/// labels it carries.
NTree make_ntree(const std::vector<std::vector<int>>& neighbours, const std::vector<std::vector<int>>& leaves);

/// One stable n-tree per isomorphism class, sorted by (edge count, canonical
/// form). Throws SizeLimit when n exceeds `limits.max_tree_leaves`.
std::vector<NTree> enumerate_stable_trees(int n, const Limits& limits = Limits::from_env());

/// Order of the automorphism group of the underlying flag structure.
std::uint64_t automorphism_count(const Tree& tree);
/// Automorphisms that also fix every leaf label.
std::uint64_t automorphism_count(const NTree& tree);

/// (#classes)^(#L + #E).
std::uint64_t gerby_marking_count(const NTree& tree, const FiniteGroup& group);

/// Calls `visit` with the per-flag marks of every gerby structure on `tree`,
/// in lexicographic order of (leaf marks by label, edge marks by edge). The
/// first flag of each edge carries the free choice, its partner the ι-image.
void for_each_gerby_marking(const NTree& tree, const FiniteGroup& group,
                            const std::function<void(std::span<const ClassId>)>& visit);

/// Materialized markings; throws SizeLimit past the enumeration cap.
std::vector<GerbyTree> gerby_markings(const NTree& tree, const FiniteGroup& group,
                                      const Limits& limits = Limits::from_env());

/// Abelian groups only: the markings at every vertex multiply to the identity.
bool is_admissible(const FiniteGroup& group, const NTree& tree, std::span<const ClassId> marks);
bool is_admissible(const FiniteGroup& group, const GerbyTree& gerby);

/// prod_v class_M0n(n(v)).
MotivePoly open_stratum_class(const NTree& tree);

/// open_stratum_class when admissible, else 0. Abelian groups only.
MotivePoly stratum_class(const FiniteGroup& group, const GerbyTree& gerby);

/// Admissible gerby structures on one tree. `per_leaf_tuple`, when requested,
/// is indexed by the leaf marks read as a base-(#classes) number with leaf 1
/// most significant.
struct AdmissibleCensus {
  std::uint64_t total = 0;
  std::uint64_t markings = 0;
  std::vector<std::uint64_t> per_leaf_tuple;
};

AdmissibleCensus admissible_census(const NTree& tree, const FiniteGroup& group, bool per_leaf_tuple);

/// Admissible structures whose leaf marks equal `leaf_marks` (by label).
std::uint64_t admissible_count_with_leaves(const NTree& tree, const FiniteGroup& group,
                                           std::span<const ClassId> leaf_marks);

std::string export_dot(const NTree& tree);
std::string export_dot(const GerbyTree& gerby);

}  // namespace covermotive

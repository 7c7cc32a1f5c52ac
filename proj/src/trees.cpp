#include "covermotive/trees.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "covermotive/errors.hpp"

namespace covermotive {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSpec, what); }

void require_abelian(const FiniteGroup& group) {
  if (!group.is_abelian())
    throw Error(ErrorKind::UnsupportedNonabelian,
                group.name() + " is nonabelian: strata are nontrivial covers and the vertex product "
                               "condition does not determine them");
}

// Vertex graph used while growing trees one leaf at a time.
struct Shape {
  std::vector<std::vector<int>> neighbours;
  std::vector<std::vector<int>> leaves;
};

// Adds leaf `label` in every way that yields a stable tree. Each stable tree
// on labels 1..label arises from exactly one tree on 1..label-1, because
// deleting the largest leaf (and contracting a resulting 2-valent vertex) is
// a function.
template <class Visit>
void grow(const Shape& shape, int label, Visit&& visit) {
  const int vertices = static_cast<int>(shape.neighbours.size());
  for (int v = 0; v < vertices; ++v) {
    Shape next = shape;
    next.leaves[v].push_back(label);
    visit(next);
  }
  for (int u = 0; u < vertices; ++u) {
    for (int v : shape.neighbours[u]) {
      if (v < u) continue;
      Shape next = shape;
      const int w = vertices;
      std::replace(next.neighbours[u].begin(), next.neighbours[u].end(), v, w);
      std::replace(next.neighbours[v].begin(), next.neighbours[v].end(), u, w);
      next.neighbours.push_back({u, v});
      next.leaves.push_back({label});
      visit(next);
    }
  }
  for (int v = 0; v < vertices; ++v) {
    for (int leaf : shape.leaves[v]) {
      Shape next = shape;
      const int w = vertices;
      std::erase(next.leaves[v], leaf);
      next.neighbours[v].push_back(w);
      next.neighbours.push_back({v});
      next.leaves.push_back({leaf, label});
      visit(next);
    }
  }
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Tree::Tree(std::vector<int> involution, std::vector<int> vertex_of)
    : involution_(std::move(involution)), vertex_of_(std::move(vertex_of)) {
  const int f = static_cast<int>(involution_.size());
  if (f == 0 || static_cast<int>(vertex_of_.size()) != f) malformed("flag arrays are empty or differ in length");
  for (int i = 0; i < f; ++i) {
    const int j = involution_[i];
    if (j < 0 || j >= f || involution_[j] != i) malformed("flag map is not an involution at flag " + std::to_string(i));
  }
  const int vertices = *std::max_element(vertex_of_.begin(), vertex_of_.end()) + 1;
  if (*std::min_element(vertex_of_.begin(), vertex_of_.end()) < 0) malformed("negative vertex id");
  flags_at_.assign(vertices, {});
  for (int i = 0; i < f; ++i) flags_at_[vertex_of_[i]].push_back(i);
  for (const auto& flags : flags_at_)
    if (flags.empty()) malformed("vertex ids are not contiguous");
  for (int i = 0; i < f; ++i) {
    if (involution_[i] == i) leaves_.push_back(i);
    else if (i < involution_[i]) edges_.emplace_back(i, involution_[i]);
  }
  if (vertices != edge_count() + 1) malformed("#V != #E + 1");
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges_) parent[find(vertex_of_[a])] = find(vertex_of_[b]);
  for (int v = 0; v < vertices; ++v)
    if (find(v) != find(0)) malformed("graph is not connected");
}

NTree::NTree(Tree tree, std::vector<int> label_of_flag)
    : tree_(std::move(tree)), label_of_flag_(std::move(label_of_flag)) {
  const int n = tree_.leaf_count();
  if (static_cast<int>(label_of_flag_.size()) != tree_.flag_count()) malformed("label array has wrong length");
  leaf_flag_.assign(n, -1);
  for (int f = 0; f < tree_.flag_count(); ++f) {
    const int label = label_of_flag_[f];
    if (!tree_.is_leaf(f)) {
      if (label != 0) malformed("internal flag carries a label");
      continue;
    }
    if (label < 1 || label > n || leaf_flag_[label - 1] != -1) malformed("leaf labels are not a bijection onto 1..n");
    leaf_flag_[label - 1] = f;
  }
  for (int v = 0; v < tree_.vertex_count(); ++v)
    if (tree_.valence(v) < 3) malformed("vertex " + std::to_string(v) + " is unstable");

  // Canonical encoding from the vertex of leaf 1.
  std::vector<std::vector<int>> neighbours(tree_.vertex_count()), leaves(tree_.vertex_count());
  for (auto [a, b] : tree_.edges()) {
    neighbours[tree_.vertex_of(a)].push_back(tree_.vertex_of(b));
    neighbours[tree_.vertex_of(b)].push_back(tree_.vertex_of(a));
  }
  for (int f : tree_.leaves()) leaves[tree_.vertex_of(f)].push_back(label_of_flag_[f]);

  std::vector<int> subtree_min(tree_.vertex_count(), 0);
  auto compute_min = [&](auto&& self, int v, int parent) -> int {
    int best = leaves[v].empty() ? n + 1 : *std::min_element(leaves[v].begin(), leaves[v].end());
    for (int w : neighbours[v])
      if (w != parent) best = std::min(best, self(self, w, v));
    return subtree_min[v] = best;
  };
  auto encode = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::pair<int, int>> items;  // (min label, leaf label or -(vertex+1))
    for (int label : leaves[v]) items.emplace_back(label, label);
    for (int w : neighbours[v])
      if (w != parent) items.emplace_back(subtree_min[w], -(w + 1));
    std::sort(items.begin(), items.end());
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      out += items[i].second > 0 ? std::to_string(items[i].second) : self(self, -items[i].second - 1, v);
    }
    return out + ")";
  };
  const int root = tree_.vertex_of(leaf_flag_[0]);
  compute_min(compute_min, root, -1);
  canonical_ = encode(encode, root, -1);
}

NTree make_ntree(const std::vector<std::vector<int>>& neighbours, const std::vector<std::vector<int>>& leaves) {
  const int vertices = static_cast<int>(neighbours.size());
  int n = 0;
  int root = -1;
  for (int v = 0; v < vertices; ++v) {
    n += static_cast<int>(leaves[v].size());
    if (std::find(leaves[v].begin(), leaves[v].end(), 1) != leaves[v].end()) root = v;
  }
  if (root < 0) malformed("no leaf labelled 1");

  std::vector<int> subtree_min(vertices, n + 1);
  auto compute_min = [&](auto&& self, int v, int parent) -> int {
    int best = n + 1;
    for (int label : leaves[v]) best = std::min(best, label);
    for (int w : neighbours[v])
      if (w != parent) best = std::min(best, self(self, w, v));
    return subtree_min[v] = best;
  };
  compute_min(compute_min, root, -1);

  // Preorder ids; each edge contributes (parent-side flag, child-side flag).
  std::vector<int> new_id(vertices, -1);
  std::vector<int> vertex_of(n, -1);
  std::vector<int> involution(n);
  std::iota(involution.begin(), involution.end(), 0);
  int next_id = 0;
  auto visit = [&](auto&& self, int v, int parent) -> void {
    const int id = new_id[v] = next_id++;
    for (int label : leaves[v]) {
      if (label < 1 || label > n || vertex_of[label - 1] != -1) malformed("leaf labels are not a bijection");
      vertex_of[label - 1] = id;
    }
    std::vector<std::pair<int, int>> children;
    for (int w : neighbours[v])
      if (w != parent) children.emplace_back(subtree_min[w], w);
    std::sort(children.begin(), children.end());
    for (auto [unused, w] : children) {
      const int parent_flag = static_cast<int>(involution.size());
      involution.push_back(parent_flag + 1);
      involution.push_back(parent_flag);
      vertex_of.push_back(id);
      vertex_of.push_back(-1);
      self(self, w, v);
      vertex_of[parent_flag + 1] = new_id[w];
    }
  };
  visit(visit, root, -1);
  if (next_id != vertices) malformed("vertex graph is not connected");

  std::vector<int> labels(involution.size(), 0);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return NTree(Tree(std::move(involution), std::move(vertex_of)), std::move(labels));
}

std::vector<NTree> enumerate_stable_trees(int n, const Limits& limits) {
  if (n < 3) throw Error(ErrorKind::IndexOutOfRange, "stable trees need n >= 3");
  if (n > limits.max_tree_leaves)
    throw Error(ErrorKind::SizeLimit,
                "n = " + std::to_string(n) + " exceeds the tree cap " + std::to_string(limits.max_tree_leaves));

  std::vector<NTree> out;
  auto descend = [&](auto&& self, const Shape& shape, int next_label) -> void {
    if (next_label > n) {
      out.push_back(make_ntree(shape.neighbours, shape.leaves));
      return;
    }
    grow(shape, next_label, [&](const Shape& child) { self(self, child, next_label + 1); });
  };
  descend(descend, Shape{{{}}, {{1, 2, 3}}}, 4);

  std::sort(out.begin(), out.end(), [](const NTree& a, const NTree& b) {
    if (a.tree().edge_count() != b.tree().edge_count()) return a.tree().edge_count() < b.tree().edge_count();
    return a.canonical_form() < b.canonical_form();
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].canonical_form() == out[i - 1].canonical_form())
      throw std::logic_error("duplicate stable tree " + out[i].canonical_form());
  return out;
}

namespace {

// Vertex bijections preserving adjacency and leaf counts; when `labels` is
// set, also sending the vertex of each leaf label to itself.
std::uint64_t count_vertex_automorphisms(const Tree& tree, const std::vector<int>* leaf_vertex_by_label) {
  const int vertices = tree.vertex_count();
  std::vector<std::vector<bool>> adjacent(vertices, std::vector<bool>(vertices, false));
  for (auto [a, b] : tree.edges()) adjacent[tree.vertex_of(a)][tree.vertex_of(b)] = adjacent[tree.vertex_of(b)][tree.vertex_of(a)] = true;
  std::vector<int> leaf_count(vertices, 0);
  for (int f : tree.leaves()) ++leaf_count[tree.vertex_of(f)];

  std::vector<int> image(vertices, -1);
  std::vector<bool> used(vertices, false);
  std::uint64_t count = 0;
  auto assign = [&](auto&& self, int v) -> void {
    if (v == vertices) {
      ++count;
      return;
    }
    for (int w = 0; w < vertices; ++w) {
      if (used[w] || leaf_count[w] != leaf_count[v] || tree.valence(w) != tree.valence(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = adjacent[u][v] == adjacent[image[u]][w];
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
    image[v] = -1;
  };
  if (leaf_vertex_by_label == nullptr) {
    assign(assign, 0);
    return count;
  }
  // Labels pin the image of every leaf-carrying vertex.
  std::vector<int> forced(vertices, -1);
  for (int v : *leaf_vertex_by_label) forced[v] = v;
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < vertices && ok; ++v) ok = forced[v] < 0 || perm[v] == v;
    for (int u = 0; u < vertices && ok; ++u)
      for (int v = u + 1; v < vertices && ok; ++v) ok = adjacent[u][v] == adjacent[perm[u]][perm[v]];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

std::uint64_t automorphism_count(const Tree& tree) {
  std::vector<int> leaf_count(tree.vertex_count(), 0);
  for (int f : tree.leaves()) ++leaf_count[tree.vertex_of(f)];
  std::uint64_t leaf_perms = 1;
  for (int c : leaf_count)
    for (int k = 2; k <= c; ++k) leaf_perms *= k;
  return count_vertex_automorphisms(tree, nullptr) * leaf_perms;
}

std::uint64_t automorphism_count(const NTree& tree) {
  std::vector<int> leaf_vertex;
  for (int label = 1; label <= tree.n(); ++label) leaf_vertex.push_back(tree.tree().vertex_of(tree.leaf_flag(label)));
  return count_vertex_automorphisms(tree.tree(), &leaf_vertex);
}

std::uint64_t gerby_marking_count(const NTree& tree, const FiniteGroup& group) {
  return ipow(group.class_count(), tree.tree().leaf_count() + tree.tree().edge_count());
}

void for_each_gerby_marking(const NTree& tree, const FiniteGroup& group,
                            const std::function<void(std::span<const ClassId>)>& visit) {
  const Tree& t = tree.tree();
  // Free digits: leaves by label, then the first flag of each edge.
  std::vector<int> free_flags;
  for (int label = 1; label <= tree.n(); ++label) free_flags.push_back(tree.leaf_flag(label));
  for (auto [a, b] : t.edges()) free_flags.push_back(a);
  const int digits = static_cast<int>(free_flags.size());
  const int base = group.class_count();
  std::vector<ClassId> marks(t.flag_count(), 0);
  std::vector<int> value(digits, 0);
  while (true) {
    for (int i = 0; i < digits; ++i) {
      const int f = free_flags[i];
      marks[f] = static_cast<ClassId>(value[i]);
      if (!t.is_leaf(f)) marks[t.partner(f)] = group.iota(marks[f]);
    }
    visit(marks);
    int pos = digits - 1;
    while (pos >= 0 && ++value[pos] == base) value[pos--] = 0;
    if (pos < 0) break;
  }
}

std::vector<GerbyTree> gerby_markings(const NTree& tree, const FiniteGroup& group, const Limits& limits) {
  const auto count = gerby_marking_count(tree, group);
  if (count > limits.enumeration_cap)
    throw Error(ErrorKind::SizeLimit, std::to_string(count) + " gerby markings exceed the enumeration cap");
  std::vector<GerbyTree> out;
  out.reserve(count);
  for_each_gerby_marking(tree, group, [&](std::span<const ClassId> marks) {
    out.push_back(GerbyTree{tree, std::vector<ClassId>(marks.begin(), marks.end())});
  });
  return out;
}

bool is_admissible(const FiniteGroup& group, const NTree& tree, std::span<const ClassId> marks) {
  require_abelian(group);
  const Tree& t = tree.tree();
  for (int v = 0; v < t.vertex_count(); ++v) {
    Element acc = group.identity();
    for (int f : t.flags_at(v)) acc = group.mul(acc, group.classes().representatives[marks[f]]);
    if (acc != group.identity()) return false;
  }
  return true;
}

bool is_admissible(const FiniteGroup& group, const GerbyTree& gerby) {
  return is_admissible(group, gerby.tree, gerby.marks);
}

MotivePoly open_stratum_class(const NTree& tree) {
  MotivePoly out = 1;
  for (int v = 0; v < tree.tree().vertex_count(); ++v) out *= class_M0n(tree.tree().valence(v));
  return out;
}

MotivePoly stratum_class(const FiniteGroup& group, const GerbyTree& gerby) {
  return is_admissible(group, gerby) ? open_stratum_class(gerby.tree) : MotivePoly();
}

namespace {

// Shared odometer for the census routines. Leaf marks (by label) are fixed by
// the caller or enumerated; edge marks are always enumerated innermost.
struct MarkingWalker {
  const NTree& tree;
  const FiniteGroup& group;
  std::vector<std::vector<int>> vertex_flags;
  std::vector<Element> rep;
  std::vector<int> edge_first;

  MarkingWalker(const NTree& t, const FiniteGroup& g) : tree(t), group(g) {
    const Tree& tr = t.tree();
    vertex_flags.resize(tr.vertex_count());
    for (int v = 0; v < tr.vertex_count(); ++v) vertex_flags[v] = tr.flags_at(v);
    rep = g.classes().representatives;
    for (auto [a, b] : tr.edges()) edge_first.push_back(a);
  }

  bool admissible(const std::vector<ClassId>& marks) const {
    for (const auto& flags : vertex_flags) {
      Element acc = group.identity();
      for (int f : flags) acc = group.mul(acc, rep[marks[f]]);
      if (acc != group.identity()) return false;
    }
    return true;
  }

  // Number of admissible edge markings given the leaf marks already in `marks`.
  std::uint64_t count_edges(std::vector<ClassId>& marks) const {
    const Tree& tr = tree.tree();
    const int base = group.class_count();
    const int digits = static_cast<int>(edge_first.size());
    std::vector<int> value(digits, 0);
    std::uint64_t count = 0;
    while (true) {
      for (int i = 0; i < digits; ++i) {
        marks[edge_first[i]] = static_cast<ClassId>(value[i]);
        marks[tr.partner(edge_first[i])] = group.iota(static_cast<ClassId>(value[i]));
      }
      if (admissible(marks)) ++count;
      int pos = digits - 1;
      while (pos >= 0 && ++value[pos] == base) value[pos--] = 0;
      if (pos < 0) break;
    }
    return count;
  }
};

}  // namespace

AdmissibleCensus admissible_census(const NTree& tree, const FiniteGroup& group, bool per_leaf_tuple) {
  require_abelian(group);
  const MarkingWalker walker(tree, group);
  const int n = tree.n();
  const int base = group.class_count();
  AdmissibleCensus census;
  census.markings = gerby_marking_count(tree, group);
  if (per_leaf_tuple) census.per_leaf_tuple.assign(ipow(base, n), 0);
  std::vector<ClassId> marks(tree.tree().flag_count(), 0);
  std::vector<int> value(n, 0);
  std::uint64_t code = 0;
  while (true) {
    for (int i = 0; i < n; ++i) marks[tree.leaf_flag(i + 1)] = static_cast<ClassId>(value[i]);
    const auto count = walker.count_edges(marks);
    census.total += count;
    if (per_leaf_tuple) census.per_leaf_tuple[code] = count;
    ++code;
    int pos = n - 1;
    while (pos >= 0 && ++value[pos] == base) value[pos--] = 0;
    if (pos < 0) break;
  }
  return census;
}

std::uint64_t admissible_count_with_leaves(const NTree& tree, const FiniteGroup& group,
                                           std::span<const ClassId> leaf_marks) {
  require_abelian(group);
  if (static_cast<int>(leaf_marks.size()) != tree.n())
    throw Error(ErrorKind::IndexOutOfRange, "leaf marking has the wrong length");
  for (ClassId c : leaf_marks)
    if (c >= group.class_count()) throw Error(ErrorKind::IndexOutOfRange, "class id " + std::to_string(c));
  const MarkingWalker walker(tree, group);
  std::vector<ClassId> marks(tree.tree().flag_count(), 0);
  for (int i = 0; i < tree.n(); ++i) marks[tree.leaf_flag(i + 1)] = leaf_marks[i];
  return walker.count_edges(marks);
}

namespace {

std::string dot(const NTree& tree, const std::vector<ClassId>* marks) {
  const Tree& t = tree.tree();
  std::ostringstream out;
  out << "digraph " << (marks ? "gerby_tree" : "stable_tree") << " {\n";
  out << "  label=\"" << tree.canonical_form() << "\";\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < t.vertex_count(); ++v) out << "  v" << v << " [label=\"v" << v << "\"];\n";
  for (int label = 1; label <= tree.n(); ++label) {
    const int f = tree.leaf_flag(label);
    out << "  l" << label << " [shape=box,label=\"" << label;
    if (marks) out << " : c" << static_cast<int>((*marks)[f]);
    out << "\"];\n";
  }
  for (int label = 1; label <= tree.n(); ++label)
    out << "  v" << t.vertex_of(tree.leaf_flag(label)) << " -> l" << label << ";\n";
  for (auto [a, b] : t.edges()) {
    out << "  v" << t.vertex_of(a) << " -> v" << t.vertex_of(b);
    if (marks)
      out << " [taillabel=\"c" << static_cast<int>((*marks)[a]) << "\",headlabel=\"c"
          << static_cast<int>((*marks)[b]) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const NTree& tree) { return dot(tree, nullptr); }
std::string export_dot(const GerbyTree& gerby) { return dot(gerby.tree, &gerby.marks); }

}  // namespace covermotive

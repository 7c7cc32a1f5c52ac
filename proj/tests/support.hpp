#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "covermotive/group.hpp"
#include "covermotive/motive.hpp"
#include "covermotive/oracle.hpp"
#include "covermotive/smodule.hpp"
#include "covermotive/trees.hpp"

namespace testsupport {

using namespace covermotive;

inline FiniteGroup group(const char* text) { return build_group(parse_builtin(text)); }

inline oracle::OracleTree to_oracle(const NTree& t) {
  oracle::OracleTree o;
  o.vertices = t.tree().vertex_count();
  for (const auto& [a, b] : t.tree().edges()) o.edges.emplace_back(t.tree().vertex_of(a), t.tree().vertex_of(b));
  for (int label = 1; label <= t.n(); ++label) o.leaf_vertex.push_back(t.tree().vertex_of(t.leaf_flag(label)));
  return o;
}

inline std::vector<int> oracle_valences(const oracle::OracleTree& t) {
  std::vector<int> val(t.vertices, 0);
  for (const auto& [a, b] : t.edges) ++val[a], ++val[b];
  for (int v : t.leaf_vertex) ++val[v];
  return val;
}

/// Strata sum over the brute-force tree classes, with markings enumerated
/// literally (leaf marks and one mark per edge, the partner through ι) and
/// the vertex products read off the multiplication table. Optionally
/// restricted to one leaf marking.
inline MotivePoly oracle_strata_sum(const FiniteGroup& g, int n, const ClassTuple* only = nullptr) {
  MotivePoly total;
  const int k = g.class_count();
  const auto& reps = g.classes().representatives;
  for (const auto& t : oracle::brute_force_tree_classes(n)) {
    MotivePoly open = 1;
    for (int v : oracle_valences(t)) open *= class_M0n(v);
    const int slots = n + static_cast<int>(t.edges.size());
    std::vector<int> marks(slots, 0);
    std::uint64_t admissible = 0;
    while (true) {
      bool leaves_ok = true;
      if (only)
        for (int i = 0; i < n; ++i) leaves_ok = leaves_ok && marks[i] == (*only)[i];
      if (leaves_ok) {
        std::vector<Element> prod(t.vertices, g.identity());
        for (int i = 0; i < n; ++i) prod[t.leaf_vertex[i]] = g.mul(prod[t.leaf_vertex[i]], reps[marks[i]]);
        for (std::size_t e = 0; e < t.edges.size(); ++e) {
          const auto c = static_cast<ClassId>(marks[n + e]);
          prod[t.edges[e].first] = g.mul(prod[t.edges[e].first], reps[c]);
          prod[t.edges[e].second] = g.mul(prod[t.edges[e].second], reps[g.iota(c)]);
        }
        if (std::all_of(prod.begin(), prod.end(), [&](Element x) { return x == g.identity(); })) ++admissible;
      }
      int pos = slots - 1;
      while (pos >= 0 && ++marks[pos] == k) marks[pos--] = 0;
      if (pos < 0) break;
    }
    total += open * BigInt(admissible);
  }
  return total;
}

/// A random S_m-symmetric module: the class of a generator depends only on
/// the multiset of its evaluations (and its root). Rooted modules get one
/// root per generator.
inline SModClass random_symmetric(std::mt19937_64& rng, int classes, const std::vector<int>& degrees, bool rooted) {
  std::uniform_int_distribution<int> coeff(-3, 4);
  std::uniform_int_distribution<int> length(0, 2);
  SModClass out;
  for (int d : degrees) {
    std::map<std::pair<ClassTuple, ClassTuple>, MotivePoly> by_multiset;
    ClassTuple evals(d, 0);
    while (true) {
      ClassTuple sorted = evals;
      std::sort(sorted.begin(), sorted.end());
      for (int r = 0; r < (rooted ? classes : 1); ++r) {
        ClassTuple roots;
        if (rooted) roots.push_back(static_cast<ClassId>(r));
        auto [it, fresh] = by_multiset.try_emplace({sorted, roots});
        if (fresh) {
          std::vector<BigInt> c;
          for (int i = 0, len = length(rng) + 1; i < len; ++i) c.push_back(coeff(rng));
          it->second = MotivePoly(std::move(c));
        }
        out.add(d, evals, roots, it->second);
      }
      int pos = d - 1;
      while (pos >= 0 && ++evals[pos] == classes) evals[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

}  // namespace testsupport

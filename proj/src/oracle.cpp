#include "covermotive/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "covermotive/errors.hpp"

namespace covermotive::oracle {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::IndexOutOfRange, std::to_string(p) + " is not prime");
}

std::uint64_t brute_force_M0n_count(int n, std::uint64_t p, const Limits& limits) {
  if (n < 3) throw Error(ErrorKind::IndexOutOfRange, "M_{0,n} needs n >= 3");
  const PrimeField field(p);
  const int free = n - 3;
  long double size = 1;
  for (int i = 0; i < free; ++i) size *= static_cast<long double>(p);
  if (size > static_cast<long double>(limits.enumeration_cap))
    throw Error(ErrorKind::CapExceeded, "p^(n-3) exceeds the enumeration cap");

  std::vector<std::uint64_t> x(free, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < free && ok; ++i) {
      if (x[i] == 0 || x[i] == 1) ok = false;
      // x_i - x_j == 0 in the field.
      for (int j = 0; j < i && ok; ++j) ok = field.sub(x[i], x[j]) != 0;
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < free && ++x[pos] == p) x[pos++] = 0;
    if (pos == free) break;
  }
  return count;
}

namespace {

bool is_connected(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertices;
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::vector<std::pair<int, int>>> vertex_trees(int vertices) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b) all.emplace_back(a, b);
  std::vector<std::vector<std::pair<int, int>>> out;
  const int need = vertices - 1;
  // All subsets of size `need` via bitmask.
  const std::uint32_t limit = 1u << all.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != need) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask & (1u << i)) edges.push_back(all[i]);
    if (is_connected(vertices, edges)) out.push_back(std::move(edges));
  }
  return out;
}

// Multiset of per-vertex leaf sets; equal for isomorphic trees. Only used to
// avoid pointless comparisons, never to decide isomorphism.
std::vector<std::uint32_t> leaf_profile(const OracleTree& t) {
  std::vector<std::uint32_t> sets(t.vertices, 0);
  for (std::size_t i = 0; i < t.leaf_vertex.size(); ++i) sets[t.leaf_vertex[i]] |= 1u << i;
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

bool oracle_isomorphic(const OracleTree& a, const OracleTree& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size() || a.leaf_vertex.size() != b.leaf_vertex.size())
    return false;
  std::vector<std::vector<bool>> adj_b(b.vertices, std::vector<bool>(b.vertices, false));
  for (auto [x, y] : b.edges) adj_b[x][y] = adj_b[y][x] = true;
  std::vector<int> perm(a.vertices);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.leaf_vertex.size() && ok; ++i) ok = perm[a.leaf_vertex[i]] == b.leaf_vertex[i];
    for (auto [x, y] : a.edges) {
      if (!ok) break;
      ok = adj_b[perm[x]][perm[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<OracleTree> brute_force_tree_classes(int n) {
  if (n < 3) throw Error(ErrorKind::IndexOutOfRange, "stable trees need n >= 3");
  if (n > 6) throw Error(ErrorKind::CapExceeded, "brute-force tree oracle supports n <= 6");

  std::map<std::vector<std::uint32_t>, std::vector<OracleTree>> buckets;
  for (int v = 1; v <= n - 2; ++v) {
    for (const auto& edges : vertex_trees(v)) {
      std::vector<int> degree(v, 0);
      for (auto [a, b] : edges) ++degree[a], ++degree[b];
      std::vector<int> placement(n, 0);
      while (true) {
        std::vector<int> valence = degree;
        for (int x : placement) ++valence[x];
        if (std::all_of(valence.begin(), valence.end(), [](int val) { return val >= 3; })) {
          OracleTree cand{v, edges, placement};
          auto& bucket = buckets[leaf_profile(cand)];
          const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                        [&](const OracleTree& t) { return oracle_isomorphic(t, cand); });
          if (!seen) bucket.push_back(std::move(cand));
        }
        int pos = 0;
        while (pos < n && ++placement[pos] == v) placement[pos++] = 0;
        if (pos == n) break;
      }
    }
  }
  std::vector<OracleTree> out;
  for (auto& [profile, bucket] : buckets)
    for (auto& t : bucket) out.push_back(std::move(t));
  return out;
}

std::uint64_t brute_force_tree_count(int n) { return brute_force_tree_classes(n).size(); }

}  // namespace covermotive::oracle

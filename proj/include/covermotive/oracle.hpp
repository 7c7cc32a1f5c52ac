#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "covermotive/limits.hpp"

/// Brute-force reference computations. Nothing here calls into the main
/// pipelines, so the values they produce can check those pipelines.
namespace covermotive::oracle {

bool is_prime(std::uint64_t p);

class PrimeField {
 public:
  /// Throws IndexOutOfRange when p is not prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

 private:
  std::uint64_t p_;
};

/// Number of F_p-points of M_{0,n}: ordered tuples (x_4, ..., x_n) of
/// pairwise distinct field elements avoiding 0 and 1 (the first three points
/// normalized to 0, 1, infinity). Counted by literal enumeration of F_p^(n-3);
/// throws CapExceeded when p^(n-3) exceeds the cap.
std::uint64_t brute_force_M0n_count(int n, std::uint64_t p, const Limits& limits = Limits::from_env());

/// A stable leaf-labelled tree as a vertex graph: `edges` join vertices
/// 0..vertices-1, `leaf_vertex[i]` is the vertex carrying leaf i+1.
struct OracleTree {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leaf_vertex;
};

/// Isomorphism by trying every vertex bijection.
bool oracle_isomorphic(const OracleTree& a, const OracleTree& b);

/// One representative per isomorphism class of stable n-trees, found by
/// generating every vertex tree with at most n-2 vertices and every leaf
/// placement, then rejecting candidates isomorphic to an earlier one.
/// Throws CapExceeded for n > 6.
std::vector<OracleTree> brute_force_tree_classes(int n);

std::uint64_t brute_force_tree_count(int n);

}  // namespace covermotive::oracle

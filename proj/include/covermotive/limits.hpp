#pragma once

#include <cstdint>

namespace covermotive {

/// Enumeration caps. Exceeding any of them raises an error; nothing is
/// silently truncated.
struct Limits {
  /// Cap on enumerated tuples (Hurwitz vectors, materialized markings,
  /// brute-force point counts).
  std::uint64_t enumeration_cap = 100'000'000;
  /// Largest n accepted by the stable-tree enumerator.
  int max_tree_leaves = 9;

  /// Defaults, with `enumeration_cap` replaced by COVERMOTIVE_CAP when set.
  static Limits from_env();
};

}  // namespace covermotive

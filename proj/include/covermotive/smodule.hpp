#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "covermotive/group.hpp"
#include "covermotive/motive.hpp"

namespace covermotive {

/// Identifies an atomic generator within a degree: its leaf evaluations
/// (empty once forgotten) and its root attachments (one for rooted modules,
/// two for a Day product of rooted modules).
struct GeneratorKey {
  ClassTuple evals;
  ClassTuple roots;

  friend auto operator<=>(const GeneratorKey&, const GeneratorKey&) = default;
};

struct AtomicGenerator {
  ClassTuple evals;
  ClassTuple roots;
  MotivePoly cls;
};

/// A class in the Grothendieck group of S-modules over the coarse base: per
/// degree, a formal sum of atomic generators. Generators with equal keys are
/// merged and zero classes dropped, so equal classes compare equal.
class SModClass {
 public:
  using Part = std::map<GeneratorKey, MotivePoly>;

  /// `evals` must have length `degree` or be empty (forgotten).
  void add(int degree, ClassTuple evals, ClassTuple roots, const MotivePoly& cls);
  void add(int degree, const AtomicGenerator& gen) { add(degree, gen.evals, gen.roots, gen.cls); }

  /// Canonically ordered generators of one degree.
  std::vector<AtomicGenerator> generators(int degree) const;
  const Part* part(int degree) const;
  std::vector<int> support() const;
  bool empty() const { return parts_.empty(); }
  int max_degree() const { return parts_.empty() ? -1 : parts_.rbegin()->first; }

  /// Disjoint union.
  SModClass& operator+=(const SModClass& other);
  SModClass& operator-=(const SModClass& other);
  friend bool operator==(const SModClass&, const SModClass&) = default;

  /// Degrees >= `from` dropped.
  SModClass truncated(int from) const;

 private:
  std::map<int, Part> parts_;
};

enum class SlotKind { Leaf, Tail };

/// One argument grafted into a root generator: it consumes `k` outer leaf
/// labels and attaches at `root_eval`. Leaf slots come from degree-1 pieces,
/// tails from the shifted compactified module.
struct Slot {
  int k = 1;
  SlotKind kind = SlotKind::Leaf;
  MotivePoly tail_class = 1;
  ClassId root_eval = 0;
};

/// An element of the cover whose S_m-quotient is a composite: a root
/// generator with evaluations `root_evals`, one slot per root point and a
/// (k_1, ..., k_m)-shuffle. `shuffle[p]` is the outer label (1-based) of
/// position p; positions are grouped in consecutive blocks of sizes k_i.
struct Generator {
  int degree = 0;
  ClassTuple root_evals;
  std::vector<Slot> slots;
  std::vector<int> shuffle;
  MotivePoly root_class = 1;
  std::int64_t weight = 1;
};

/// All (k_1, ..., k_m)-shuffles in lexicographic order.
std::vector<std::vector<int>> shuffles(std::span<const int> block_sizes);

/// A nontrivial slot permutation fixing (root evals, block sizes, blocks),
/// if any. Such a permutation exists iff two slots carry identical data.
std::optional<std::vector<int>> fixing_permutation(std::span<const ClassId> root_evals,
                                                   std::span<const int> block_sizes, std::span<const int> shuffle);

/// Throws NonFreeActionError (with the fixing permutation) when the
/// generator's index data has a nontrivial stabilizer.
void check_free(const Generator& gen);

/// The S_m-action on index data: slot i moves to position tau[i], blocks move
/// with their slots and are re-sorted.
Generator act_on_slots(std::span<const int> tau, const Generator& gen);

/// Class of the S_m-quotient of the given cover elements: every element is
/// checked for freeness, then sum(weight * root_class * prod tail_class) / m!
/// with exact division.
MotivePoly sm_quotient(std::span<const Generator> gens, int m);

/// Degree-0 unit for Day convolution.
SModClass degree_zero_unit();

/// I_1: one rooted generator (c) -> c per class, class 1.
SModClass unit_I1(const FiniteGroup& group);

/// I_2: one generator with evaluations (c, ι(c)) per class, class 1.
SModClass unit_I2(const FiniteGroup& group);

/// The S_2 swap on I_2 sends the generator of c to that of ι(c).
ClassId unit_I2_swap(const FiniteGroup& group, ClassId c);

/// Degree n of the result is degree n+1 of `x`, the last evaluation turned
/// into the root through ι. Throws MissingEvaluations if `x` has forgotten
/// evaluations or is already rooted.
SModClass shift_root(const SModClass& x, const FiniteGroup& group);

/// Drops leaf evaluations, keeping roots.
SModClass forget_evaluations(const SModClass& x);

/// Counters filled by the engine.
struct EngineStats {
  std::uint64_t generators_checked = 0;
};

/// Day convolution up to `max_degree`: shuffle-indexed products with
/// concatenated roots.
SModClass day_convolve(const SModClass& x, const SModClass& y, int max_degree);

/// X ∘ W in degrees [min_degree, max_degree]. `x` must carry leaf evaluations
/// (they are matched against the roots of `w`); `w` must be rooted with an
/// empty degree-0 part. Each degree-n, valence-m piece is the S_m-quotient of
/// the cover of (root generator, block sizes, shuffle, slot generators); the
/// quotient is taken per output key after checking freeness of every cover
/// element. Output carries routed leaf evaluations when every slot generator
/// does, and the roots of `x`.
SModClass compose(const SModClass& x, const SModClass& w, int max_degree, int min_degree = 0,
                  EngineStats* stats = nullptr);

/// (I_2)_2 ×_{B^2} Z: keeps generators of `z` whose root pair matches the
/// evaluations of a degree-2 generator of `pairs`, and drops the roots.
SModClass pair_fiber(const SModClass& pairs, const SModClass& z);

/// Image under the forgetful map: sum of classes in degree n.
MotivePoly forget_class(const SModClass& x, int n);

}  // namespace covermotive

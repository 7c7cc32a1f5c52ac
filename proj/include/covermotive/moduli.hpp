#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covermotive/group.hpp"
#include "covermotive/limits.hpp"
#include "covermotive/motive.hpp"
#include "covermotive/smodule.hpp"

namespace covermotive {

/// Smooth part with all n points marked: |G|^(n-1) copies of M_{0,n}.
MotivePoly class_B_open(const FiniteGroup& group, int n);
/// Smooth part over one leaf marking.
MotivePoly class_B_c(const FiniteGroup& group, const ClassTuple& marking);

/// One stable tree of the stratification with its admissible marking count.
struct StratumRow {
  std::string canonical;
  int vertices = 0;
  int edges = 0;
  int leaves = 0;
  std::uint64_t markings = 0;
  std::uint64_t admissible = 0;
  MotivePoly open_class;  // prod_v class_M0n(valence)

  int nonleaf_flags() const { return 2 * edges; }
  MotivePoly contribution() const { return open_class * BigInt(admissible); }
};

struct StrataCensus {
  int n = 0;
  std::vector<StratumRow> rows;  // in enumerate_stable_trees order
  /// Nonzero classes per leaf marking; filled on request.
  std::map<ClassTuple, MotivePoly> per_marking;
  MotivePoly total;
};

/// Sum over gerby trees of the stratum classes. Parallel over topologies.
StrataCensus strata_census(const FiniteGroup& group, int n, bool per_marking, int jobs = 1,
                           const Limits& limits = Limits::from_env());

MotivePoly class_Bbar(const FiniteGroup& group, int n, int jobs = 1);
MotivePoly class_Bbar_c(const FiniteGroup& group, const ClassTuple& marking);

/// Compactified classes from the recursion, refined by the full leaf
/// marking. perTuple[k] covers degree k; perTail[k][c] sums perTuple[k+1]
/// over markings whose last entry is c.
struct ClassTable {
  std::string group;
  int up_to = 0;
  std::map<int, std::map<ClassTuple, MotivePoly>> per_tuple;
  std::map<int, std::map<ClassId, MotivePoly>> per_tail;
  std::map<int, MotivePoly> total;
  SModClass bbar;  // unrooted, with evaluations
  std::uint64_t generators_checked = 0;

  MotivePoly tail(int k, ClassId c) const;
};

/// Tables for degrees 3..n-1, enough to feed the degree-n recursion; tails
/// for k <= n-2.
ClassTable tail_table(const FiniteGroup& group, int n, int jobs = 1);

struct RecursionTerms {
  MotivePoly term1;  // B ∘ (I_1 + DB̄)
  MotivePoly term2;  // I_2 ∘ DB̄
  MotivePoly term3;  // (I_2)_2 ×_{B^2} (DB̄ * DB̄)
  std::uint64_t generators_checked = 0;

  MotivePoly total() const { return term1 + term2 - term3; }
};

/// Degree-n right-hand side from tables of lower degree.
RecursionTerms recursion_rhs(const FiniteGroup& group, int n, int jobs = 1);
RecursionTerms recursion_rhs(const FiniteGroup& group, int n, const ClassTable& table, int jobs = 1);

struct VerificationReport {
  std::string name;
  std::string group;
  int n = 0;
  MotivePoly lhs;
  MotivePoly rhs;
  std::vector<std::pair<std::string, MotivePoly>> terms;
  bool equal = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify_main_theorem(const FiniteGroup& group, int n, int jobs = 1);

/// Vertex, edge and non-leaf-flag weighted strata sums against term1, term2
/// and term3.
std::vector<VerificationReport> verify_mainprop(const FiniteGroup& group, int n, int jobs = 1);

/// 1 + #(F \ L) = #V + #E on every tree, and the weighted sums agree.
bool euler_identity_check(const FiniteGroup& group, int n);

/// Leaf markings where the recursion at full refinement disagrees with the
/// strata census. Diagnostic only.
struct RefinedComparison {
  std::size_t markings_compared = 0;
  std::vector<std::pair<ClassTuple, std::pair<MotivePoly, MotivePoly>>> mismatches;  // (strata, recursion)
};
RefinedComparison refined_comparison(const FiniteGroup& group, int n, int jobs = 1);

struct CensusSummary {
  std::size_t topologies = 0;
  std::uint64_t gerby_trees = 0;
  std::uint64_t admissible = 0;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct ClassReport {
  std::string group;
  int order = 0;
  int n = 0;
  std::optional<ClassTuple> marking;
  MotivePoly cls;
  std::string hodge_euler;
  std::optional<std::vector<BigInt>> poincare;
  std::optional<std::vector<std::pair<ClassTuple, MotivePoly>>> per_marking;
  std::optional<CensusSummary> census;
  std::optional<std::vector<VerificationReport>> verification;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

struct ReportOptions {
  std::optional<ClassTuple> marking;
  bool per_marking = false;
  bool verification = false;
  int jobs = 1;
};

ClassReport report(const FiniteGroup& group, int n, const ReportOptions& options = {});

}  // namespace covermotive

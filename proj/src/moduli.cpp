#include "covermotive/moduli.hpp"

#include <string>

#include "covermotive/errors.hpp"
#include "covermotive/hurwitz.hpp"
#include "covermotive/trees.hpp"
#include "parallel.hpp"

namespace covermotive {

namespace {

void require_abelian(const FiniteGroup& group) {
  if (!group.is_abelian())
    throw Error(ErrorKind::UnsupportedNonabelian,
                group.name() + " is not abelian: strata are nontrivial étale covers, so counts do not determine classes");
}

void require_degree(int n) {
  if (n < 3) throw Error(ErrorKind::IndexOutOfRange, "n must be at least 3, got " + std::to_string(n));
}

void require_marking(const FiniteGroup& group, const ClassTuple& marking) {
  require_degree(static_cast<int>(marking.size()));
  for (ClassId c : marking)
    if (c >= group.class_count()) throw Error(ErrorKind::IndexOutOfRange, "class id " + std::to_string(c));
}

// Every tuple of class ids of the given length, lexicographically.
template <class Visit>
void for_each_tuple(int classes, int length, Visit&& visit) {
  ClassTuple tuple(length, 0);
  while (true) {
    visit(static_cast<const ClassTuple&>(tuple));
    int pos = length - 1;
    while (pos >= 0 && ++tuple[pos] == classes) tuple[pos--] = 0;
    if (pos < 0) return;
  }
}

// The smooth part in degree m as an S-module with evaluations.
SModClass smooth_module(const FiniteGroup& group, int m) {
  SModClass out;
  const MotivePoly cls = class_M0n(m);
  for_each_tuple(group.class_count(), m, [&](const ClassTuple& c) {
    if (group.product_of_representatives(c) == group.identity()) out.add(m, c, {}, cls);
  });
  return out;
}

SModClass degree_part(const SModClass& x, int d) {
  SModClass out;
  if (const auto* p = x.part(d))
    for (const auto& [key, cls] : *p) out.add(d, key.evals, key.roots, cls);
  return out;
}

struct LevelTerms {
  SModClass term1, term2, term3;
  std::uint64_t generators_checked = 0;
};

// The three recursion terms in degree d from the compactified classes of
// lower degree. With `tracked`, tails keep their evaluations and the output
// is refined by leaf marking; otherwise only the total is meaningful.
LevelTerms level_terms(const FiniteGroup& group, int d, const SModClass& bbar_lower, bool tracked, int jobs) {
  SModClass dbar = shift_root(bbar_lower, group);
  SModClass w = unit_I1(group);
  w += dbar;
  if (!tracked) {
    w = forget_evaluations(w);
    dbar = forget_evaluations(dbar);
  }
  const SModClass pairs = unit_I2(group);

  // Tasks: one per root valence m = 3..d, then term2, then term3.
  const int root_tasks = d - 2;
  const std::size_t task_count = static_cast<std::size_t>(root_tasks) + 2;
  std::vector<SModClass> results(task_count);
  std::vector<EngineStats> stats(task_count);
  detail::parallel_for(task_count, jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const int ti = static_cast<int>(t);
      if (ti < root_tasks) {
        results[t] = compose(smooth_module(group, 3 + ti), w, d, d, &stats[t]);
      } else if (ti == root_tasks) {
        results[t] = compose(pairs, dbar, d, d, &stats[t]);
      } else {
        results[t] = degree_part(pair_fiber(pairs, day_convolve(dbar, dbar, d)), d);
      }
    }
  });

  LevelTerms out;
  for (int t = 0; t < root_tasks; ++t) out.term1 += results[t];
  out.term2 = std::move(results[root_tasks]);
  out.term3 = std::move(results[root_tasks + 1]);
  for (const auto& s : stats) out.generators_checked += s.generators_checked;
  return out;
}

ClassTuple decode_marking(std::uint64_t code, int classes, int n) {
  ClassTuple c(n);
  for (int i = n - 1; i >= 0; --i) {
    c[i] = static_cast<ClassId>(code % classes);
    code /= classes;
  }
  return c;
}

struct Verification {
  StrataCensus census;
  RecursionTerms terms;
};

Verification run_verification(const FiniteGroup& group, int n, bool per_marking, int jobs) {
  require_abelian(group);
  require_degree(n);
  return Verification{strata_census(group, n, per_marking, jobs), recursion_rhs(group, n, jobs)};
}

VerificationReport compare(std::string name, const FiniteGroup& group, int n, MotivePoly lhs, MotivePoly rhs,
                           std::vector<std::pair<std::string, MotivePoly>> terms) {
  VerificationReport r;
  r.name = std::move(name);
  r.group = group.name();
  r.n = n;
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.terms = std::move(terms);
  return r;
}

VerificationReport main_report(const FiniteGroup& group, int n, const Verification& v) {
  return compare("main", group, n, v.census.total, v.terms.total(),
                 {{"term1", v.terms.term1}, {"term2", v.terms.term2}, {"term3", v.terms.term3}});
}

std::vector<VerificationReport> prop_reports(const FiniteGroup& group, int n, const Verification& v) {
  MotivePoly by_vertices, by_edges, by_flags;
  for (const auto& row : v.census.rows) {
    const MotivePoly c = row.contribution();
    by_vertices += c * BigInt(row.vertices);
    by_edges += c * BigInt(row.edges);
    by_flags += c * BigInt(row.nonleaf_flags());
  }
  return {compare("vertices", group, n, by_vertices, v.terms.term1, {}),
          compare("edges", group, n, by_edges, v.terms.term2, {}),
          compare("flags", group, n, by_flags, v.terms.term3, {})};
}

}  // namespace

MotivePoly class_B_open(const FiniteGroup& group, int n) {
  require_abelian(group);
  require_degree(n);
  BigInt copies = 1;
  for (int i = 0; i + 1 < n; ++i) copies *= group.order();
  return class_M0n(n) * copies;
}

MotivePoly class_B_c(const FiniteGroup& group, const ClassTuple& marking) {
  require_abelian(group);
  require_marking(group, marking);
  return class_M0n(static_cast<int>(marking.size())) * BigInt(nielsen_count(group, marking));
}

StrataCensus strata_census(const FiniteGroup& group, int n, bool per_marking, int jobs, const Limits& limits) {
  require_abelian(group);
  require_degree(n);
  const auto trees = enumerate_stable_trees(n, limits);
  std::vector<AdmissibleCensus> counts(trees.size());
  detail::parallel_for(trees.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) counts[i] = admissible_census(trees[i], group, per_marking);
  });

  StrataCensus out;
  out.n = n;
  std::vector<MotivePoly> by_code;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const Tree& t = trees[i].tree();
    StratumRow row;
    row.canonical = trees[i].canonical_form();
    row.vertices = t.vertex_count();
    row.edges = t.edge_count();
    row.leaves = t.leaf_count();
    row.markings = counts[i].markings;
    row.admissible = counts[i].total;
    row.open_class = open_stratum_class(trees[i]);
    out.total += row.contribution();
    if (per_marking) {
      by_code.resize(counts[i].per_leaf_tuple.size());
      for (std::size_t code = 0; code < by_code.size(); ++code)
        if (counts[i].per_leaf_tuple[code] != 0) by_code[code] += row.open_class * BigInt(counts[i].per_leaf_tuple[code]);
    }
    out.rows.push_back(std::move(row));
  }
  for (std::size_t code = 0; code < by_code.size(); ++code)
    if (!by_code[code].is_zero()) out.per_marking.emplace(decode_marking(code, group.class_count(), n), by_code[code]);
  return out;
}

MotivePoly class_Bbar(const FiniteGroup& group, int n, int jobs) {
  return strata_census(group, n, false, jobs).total;
}

MotivePoly class_Bbar_c(const FiniteGroup& group, const ClassTuple& marking) {
  require_abelian(group);
  require_marking(group, marking);
  MotivePoly out;
  for (const auto& tree : enumerate_stable_trees(static_cast<int>(marking.size())))
    out += open_stratum_class(tree) * BigInt(admissible_count_with_leaves(tree, group, marking));
  return out;
}

MotivePoly ClassTable::tail(int k, ClassId c) const {
  auto level = per_tail.find(k);
  if (level == per_tail.end()) return {};
  auto it = level->second.find(c);
  return it == level->second.end() ? MotivePoly{} : it->second;
}

ClassTable tail_table(const FiniteGroup& group, int n, int jobs) {
  require_abelian(group);
  ClassTable table;
  table.group = group.name();
  table.up_to = n - 1;
  for (int d = 3; d < n; ++d) {
    LevelTerms terms = level_terms(group, d, table.bbar, true, jobs);
    table.generators_checked += terms.generators_checked;
    SModClass level = terms.term1;
    level += terms.term2;
    level -= terms.term3;
    auto& tuples = table.per_tuple[d];
    MotivePoly total;
    if (const auto* part = level.part(d))
      for (const auto& [key, cls] : *part) {
        if (static_cast<int>(key.evals.size()) != d || !key.roots.empty())
          throw std::logic_error("refined recursion lost its evaluations");
        tuples[key.evals] += cls;
        total += cls;
      }
    table.total[d] = total;
    table.bbar += level;
  }
  for (int k = 1; k + 1 < n; ++k) {
    auto& tails = table.per_tail[k];
    auto it = table.per_tuple.find(k + 1);
    if (it == table.per_tuple.end()) continue;
    for (const auto& [c, cls] : it->second) tails[c.back()] += cls;
  }
  return table;
}

RecursionTerms recursion_rhs(const FiniteGroup& group, int n, int jobs) {
  require_abelian(group);
  require_degree(n);
  return recursion_rhs(group, n, tail_table(group, n, jobs), jobs);
}

RecursionTerms recursion_rhs(const FiniteGroup& group, int n, const ClassTable& table, int jobs) {
  require_abelian(group);
  require_degree(n);
  if (table.up_to < n - 1) throw Error(ErrorKind::IndexOutOfRange, "tail table does not reach degree n-1");
  const LevelTerms level = level_terms(group, n, table.bbar.truncated(n), false, jobs);
  RecursionTerms out;
  out.term1 = forget_class(level.term1, n);
  out.term2 = forget_class(level.term2, n);
  out.term3 = forget_class(level.term3, n);
  out.generators_checked = table.generators_checked + level.generators_checked;
  return out;
}

VerificationReport verify_main_theorem(const FiniteGroup& group, int n, int jobs) {
  return main_report(group, n, run_verification(group, n, false, jobs));
}

std::vector<VerificationReport> verify_mainprop(const FiniteGroup& group, int n, int jobs) {
  return prop_reports(group, n, run_verification(group, n, false, jobs));
}

bool euler_identity_check(const FiniteGroup& group, int n) {
  const StrataCensus census = strata_census(group, n, false);
  MotivePoly lhs, rhs;
  for (const auto& row : census.rows) {
    if (1 + row.nonleaf_flags() != row.vertices + row.edges) return false;
    lhs += row.contribution() * BigInt(1 + row.nonleaf_flags());
    rhs += row.contribution() * BigInt(row.vertices + row.edges);
  }
  return lhs == rhs;
}

RefinedComparison refined_comparison(const FiniteGroup& group, int n, int jobs) {
  require_abelian(group);
  require_degree(n);
  const StrataCensus census = strata_census(group, n, true, jobs);
  const ClassTable table = tail_table(group, n, jobs);
  const LevelTerms level = level_terms(group, n, table.bbar, true, jobs);
  SModClass recursion = level.term1;
  recursion += level.term2;
  recursion -= level.term3;

  std::map<ClassTuple, std::pair<MotivePoly, MotivePoly>> sides;
  for (const auto& [c, cls] : census.per_marking) sides[c].first = cls;
  if (const auto* part = recursion.part(n))
    for (const auto& [key, cls] : *part) sides[key.evals].second += cls;

  RefinedComparison out;
  out.markings_compared = sides.size();
  for (auto& [c, pair] : sides)
    if (!(pair.first == pair.second)) out.mismatches.emplace_back(c, pair);
  return out;
}

ClassReport report(const FiniteGroup& group, int n, const ReportOptions& options) {
  require_abelian(group);
  require_degree(n);
  if (options.marking && static_cast<int>(options.marking->size()) != n)
    throw Error(ErrorKind::IndexOutOfRange, "marking length differs from n");

  ClassReport r;
  r.group = group.name();
  r.order = group.order();
  r.n = n;
  r.marking = options.marking;

  Verification v;
  if (options.verification) {
    v = run_verification(group, n, options.per_marking, options.jobs);
  } else {
    v.census = strata_census(group, n, options.per_marking, options.jobs);
  }
  const StrataCensus& census = v.census;

  r.cls = options.marking ? class_Bbar_c(group, *options.marking) : census.total;
  r.hodge_euler = to_hodge_euler(r.cls).to_string();
  try {
    r.poincare = to_poincare(r.cls);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NegativeCoefficient) throw;
  }

  if (options.per_marking)
    r.per_marking = std::vector<std::pair<ClassTuple, MotivePoly>>(census.per_marking.begin(), census.per_marking.end());

  CensusSummary summary;
  summary.topologies = census.rows.size();
  for (const auto& row : census.rows) {
    summary.gerby_trees += row.markings;
    summary.admissible += row.admissible;
  }
  r.census = summary;

  if (options.verification) {
    std::vector<VerificationReport> checks{main_report(group, n, v)};
    for (auto& p : prop_reports(group, n, v)) checks.push_back(std::move(p));
    r.verification = std::move(checks);
  }
  return r;
}

}  // namespace covermotive

#include "covermotive/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "covermotive/errors.hpp"
#include "covermotive/hurwitz.hpp"
#include "covermotive/moduli.hpp"
#include "covermotive/report_io.hpp"
#include "covermotive/trees.hpp"

namespace covermotive {

namespace {

namespace fs = std::filesystem;

FiniteGroup load_group(const std::string& text) {
  if (fs::is_regular_file(text)) {
    std::ifstream in(text);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return build_group(parse_group_spec_file(buffer.str()));
  }
  if (text.find(':') == std::string::npos)
    throw Error(ErrorKind::MalformedSpec, "'" + text + "' is neither kind:params nor a readable file");
  return build_group(parse_builtin(text));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string vector_text(const HurwitzVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

int cmd_group(const std::string& builtin, const std::string& spec_file, std::ostream& out) {
  if (builtin.empty() == spec_file.empty())
    throw Error(ErrorKind::MalformedSpec, "give exactly one of --builtin and --spec");
  const FiniteGroup g = builtin.empty() ? load_group(spec_file) : build_group(parse_builtin(builtin));
  out << "group " << g.name() << "\n";
  out << "order " << g.order() << "\n";
  out << "abelian " << yes_no(g.is_abelian()) << "\n";
  out << "classes " << g.class_count() << "\n";
  out << "class,representative,size,order,iota\n";
  const auto& classes = g.classes();
  for (int c = 0; c < g.class_count(); ++c) {
    const auto id = static_cast<ClassId>(c);
    out << c << "," << static_cast<int>(classes.representatives[c]) << "," << classes.sizes[c] << ","
        << class_order(g, id) << "," << static_cast<int>(g.iota(id)) << "\n";
  }
  return kExitOk;
}

struct TreesArgs {
  int n = 0;
  std::string group;
  bool admissible = false;
  std::string dot_dir;
  std::string format = "text";
  int jobs = 1;
};

int cmd_trees(const TreesArgs& a, std::ostream& out) {
  const auto trees = enumerate_stable_trees(a.n);
  std::optional<FiniteGroup> g;
  if (!a.group.empty()) g = load_group(a.group);
  if (a.admissible && !g) throw Error(ErrorKind::MalformedSpec, "--admissible needs --group");

  std::vector<std::uint64_t> markings(trees.size(), 0), admissible(trees.size(), 0);
  if (g) {
    std::optional<StrataCensus> census;
    if (a.admissible) census = strata_census(*g, a.n, false, a.jobs);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      markings[i] = gerby_marking_count(trees[i], *g);
      if (census) admissible[i] = census->rows[i].admissible;
    }
  }

  if (!a.dot_dir.empty()) {
    fs::create_directories(a.dot_dir);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::ofstream file(fs::path(a.dot_dir) / ("tree_" + std::to_string(i + 1) + ".dot"));
      file << export_dot(trees[i]);
      if (!file) throw Error(ErrorKind::MalformedSpec, "cannot write into " + a.dot_dir);
    }
  }

  std::uint64_t total_markings = 0, total_admissible = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    total_markings += markings[i];
    total_admissible += admissible[i];
  }

  if (a.format == "csv") {
    out << "index,canonical,vertices,edges";
    if (g) out << ",gerby_trees";
    if (a.admissible) out << ",admissible";
    out << "\n";
    for (std::size_t i = 0; i < trees.size(); ++i) {
      const Tree& t = trees[i].tree();
      out << i + 1 << "," << csv_quote(trees[i].canonical_form()) << "," << t.vertex_count() << "," << t.edge_count();
      if (g) out << "," << markings[i];
      if (a.admissible) out << "," << admissible[i];
      out << "\n";
    }
    return kExitOk;
  }

  out << "stable trees " << trees.size() << "\n";
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const Tree& t = trees[i].tree();
    out << "  " << i + 1 << "  " << trees[i].canonical_form() << "  V=" << t.vertex_count() << " E=" << t.edge_count();
    if (g) out << "  gerby=" << markings[i];
    if (a.admissible) out << "  admissible=" << admissible[i];
    out << "\n";
  }
  if (g) out << "gerby trees " << total_markings << "\n";
  if (a.admissible) out << "admissible " << total_admissible << "\n";
  return kExitOk;
}

struct ClassArgs {
  std::string group;
  int n = 0;
  std::string marking;
  std::string format = "json";
  bool per_marking = false;
  bool verify = false;
  int jobs = 1;
};

int cmd_class(const ClassArgs& a, std::ostream& out) {
  const FiniteGroup g = load_group(a.group);
  ReportOptions options;
  if (!a.marking.empty()) options.marking = parse_marking(a.marking);
  options.per_marking = a.per_marking;
  options.verification = a.verify;
  options.jobs = a.jobs;
  const ClassReport r = report(g, a.n, options);
  out << (a.format == "json" ? class_report_to_json(r) : class_report_to_text(r));
  if (r.verification)
    for (const auto& v : *r.verification)
      if (!v.equal) return kExitInequality;
  return kExitOk;
}

struct VerifyArgs {
  std::string group;
  int n = 0;
  bool all_props = false;
  bool refined = false;
  int jobs = 1;
};

void print_check(std::ostream& out, const VerificationReport& v) {
  out << v.name << ": " << (v.equal ? "equal" : "NOT EQUAL") << "  lhs=" << v.lhs.to_string()
      << "  rhs=" << v.rhs.to_string() << "\n";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const FiniteGroup g = load_group(a.group);
  ReportOptions options;
  options.verification = true;
  options.jobs = a.jobs;
  const ClassReport r = report(g, a.n, options);
  const auto& checks = *r.verification;
  const VerificationReport& main = checks.front();

  out << "group " << g.name() << ", n = " << a.n << "\n";
  for (const auto& [name, cls] : main.terms) out << name << " = " << cls.to_string() << "\n";
  out << "strata = " << main.lhs.to_string() << "\n";
  out << "recursion = " << main.rhs.to_string() << "\n";
  bool ok = true;
  print_check(out, main);
  ok = ok && main.equal;
  if (a.all_props) {
    for (std::size_t i = 1; i < checks.size(); ++i) {
      print_check(out, checks[i]);
      ok = ok && checks[i].equal;
    }
    const bool euler = euler_identity_check(g, a.n);
    out << "euler: " << (euler ? "equal" : "NOT EQUAL") << "\n";
    ok = ok && euler;
  }
  if (a.refined) {
    const RefinedComparison rc = refined_comparison(g, a.n, a.jobs);
    out << "refined (diagnostic): " << rc.markings_compared << " markings, " << rc.mismatches.size()
        << " mismatches\n";
    for (const auto& [c, sides] : rc.mismatches)
      out << "  " << marking_to_string(c) << "  strata=" << sides.first.to_string()
          << "  recursion=" << sides.second.to_string() << "\n";
  }
  out << "verdict " << (ok ? "equal" : "NOT EQUAL") << "\n";
  return ok ? kExitOk : kExitInequality;
}

struct HurwitzArgs {
  std::string group;
  int n = 0;
  bool orbits = false;
  bool mod_conj = false;
  int jobs = 1;
};

int cmd_hurwitz(const HurwitzArgs& a, std::ostream& out) {
  const FiniteGroup g = load_group(a.group);
  if (a.n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be positive");
  const auto vectors = enumerate_hurwitz(g, a.n);
  if (!a.orbits) {
    out << "group " << g.name() << ", n = " << a.n << "\n";
    out << "vectors " << vectors.size() << "\n";
    return kExitOk;
  }
  const auto orbits = braid_orbits(g, vectors, a.mod_conj, a.jobs);
  out << "orbit,size,representative\n";
  for (std::size_t i = 0; i < orbits.size(); ++i)
    out << i + 1 << "," << orbits[i].size() << "," << vector_text(orbits[i].front()) << "\n";
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::NotAGroup:
    case ErrorKind::IndexOutOfRange:
      return kExitMalformed;
    case ErrorKind::DegreeOverflow:
    case ErrorKind::SizeLimit:
    case ErrorKind::CapExceeded:
      return kExitLimit;
    case ErrorKind::UnsupportedNonabelian:
      return kExitNonabelian;
    default:
      return kExitInternal;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic classes of compactified genus-0 G-cover moduli"};
  app.name("covermotive");
  app.require_subcommand(1);

  std::string builtin, spec_file;
  auto* group = app.add_subcommand("group", "Describe a finite group");
  group->add_option("--builtin", builtin, "kind:params, e.g. cyclic:3");
  group->add_option("--spec", spec_file, "GroupSpecFile JSON");

  TreesArgs trees_args;
  auto* trees = app.add_subcommand("trees", "Census of stable trees and gerby markings");
  trees->add_option("--n", trees_args.n)->required()->check(CLI::Range(3, 64));
  trees->add_option("--group", trees_args.group, "kind:params or GroupSpecFile path");
  trees->add_flag("--admissible", trees_args.admissible);
  trees->add_option("--dot", trees_args.dot_dir, "Write one DOT file per topology");
  trees->add_option("--format", trees_args.format)->check(CLI::IsMember({"text", "csv"}));
  trees->add_option("--jobs", trees_args.jobs)->check(CLI::PositiveNumber);

  ClassArgs class_args;
  auto* cls = app.add_subcommand("class", "Class of the compactified moduli");
  cls->add_option("--group", class_args.group)->required();
  cls->add_option("--n", class_args.n)->required()->check(CLI::Range(3, 64));
  cls->add_option("--marking", class_args.marking, "Leaf marking c1,...,cn");
  cls->add_option("--format", class_args.format)->check(CLI::IsMember({"json", "text"}));
  cls->add_flag("--per-marking", class_args.per_marking);
  cls->add_flag("--verify", class_args.verify, "Attach the verification block");
  cls->add_option("--jobs", class_args.jobs)->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare the strata sum with the recursion");
  verify->add_option("--group", verify_args.group)->required();
  verify->add_option("--n", verify_args.n)->required()->check(CLI::Range(3, 64));
  verify->add_flag("--all-props", verify_args.all_props);
  verify->add_flag("--refined", verify_args.refined, "Per-marking comparison (diagnostic)");
  verify->add_option("--jobs", verify_args.jobs)->check(CLI::PositiveNumber);

  HurwitzArgs hurwitz_args;
  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz vectors and braid orbits");
  hurwitz->add_option("--group", hurwitz_args.group)->required();
  hurwitz->add_option("--n", hurwitz_args.n)->required()->check(CLI::Range(1, 64));
  hurwitz->add_flag("--orbits", hurwitz_args.orbits);
  hurwitz->add_flag("--mod-conj", hurwitz_args.mod_conj);
  hurwitz->add_option("--jobs", hurwitz_args.jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (group->parsed()) return cmd_group(builtin, spec_file, out);
    if (trees->parsed()) return cmd_trees(trees_args, out);
    if (cls->parsed()) return cmd_class(class_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, out);
    if (hurwitz->parsed()) return cmd_hurwitz(hurwitz_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace covermotive

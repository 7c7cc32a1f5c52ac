#include "covermotive/report_io.hpp"

#include <sstream>

#include "covermotive/errors.hpp"
#include "json.hpp"

namespace covermotive {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSpec, what); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

void check_schema(const json& doc) {
  if (!doc.is_object()) malformed("top level must be an object");
  const json& schema = field(doc, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != 1) malformed("unsupported schema version");
}

template <class T>
T get(const json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    malformed(std::string("field '") + what + "' has the wrong type");
  }
}

json poly_to_json(const MotivePoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

BigInt parse_bigint(const json& value) {
  if (!value.is_string()) malformed("coefficients must be decimal strings");
  const auto& s = value.get_ref<const std::string&>();
  const std::size_t digits = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos)
    malformed("bad coefficient '" + s + "'");
  return BigInt(s);
}

MotivePoly poly_from_json(const json& value) {
  if (!value.is_array()) malformed("coefficient list must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& c : value) coeffs.push_back(parse_bigint(c));
  return MotivePoly(std::move(coeffs));
}

ClassTuple tuple_from_json(const json& value) {
  ClassTuple out;
  for (int c : get<std::vector<int>>(value, "marking")) {
    if (c < 0 || c > 255) malformed("class id out of range");
    out.push_back(static_cast<ClassId>(c));
  }
  return out;
}

json tuple_to_json(const ClassTuple& c) {
  json out = json::array();
  for (ClassId x : c) out.push_back(static_cast<int>(x));
  return out;
}

}  // namespace

GroupSpec parse_group_spec_file(const std::string& json_text) {
  const json doc = parse_json(json_text);
  check_schema(doc);
  const int present = static_cast<int>(doc.contains("builtin")) + static_cast<int>(doc.contains("cayley")) +
                      static_cast<int>(doc.contains("permutations"));
  if (present != 1) malformed("exactly one of builtin, cayley, permutations is required");

  if (doc.contains("builtin")) {
    const json& b = doc["builtin"];
    if (!b.is_object()) malformed("builtin must be an object");
    const auto kind = get<std::string>(field(b, "kind"), "kind");
    std::string text = kind + ":";
    const auto params = get<std::vector<int>>(field(b, "params"), "params");
    for (std::size_t i = 0; i < params.size(); ++i) text += (i ? "," : "") + std::to_string(params[i]);
    return parse_builtin(text);
  }
  if (doc.contains("cayley")) return CayleySpec{get<std::vector<std::vector<int>>>(doc["cayley"], "cayley")};
  return PermutationSpec{get<std::vector<std::vector<int>>>(doc["permutations"], "permutations")};
}

std::string group_spec_to_json(const GroupSpec& spec) {
  json doc{{"schema", 1}};
  if (const auto* b = std::get_if<BuiltinSpec>(&spec)) {
    static const char* kinds[] = {"cyclic", "product_cyclic", "dihedral", "symmetric"};
    doc["builtin"] = {{"kind", kinds[static_cast<int>(b->family)]}, {"params", b->params}};
  } else if (const auto* c = std::get_if<CayleySpec>(&spec)) {
    doc["cayley"] = c->table;
  } else {
    doc["permutations"] = std::get<PermutationSpec>(spec).generators;
  }
  return doc.dump(2) + "\n";
}

std::string class_report_to_json(const ClassReport& r) {
  json doc;
  doc["schema"] = 1;
  doc["group"] = r.group;
  doc["order"] = r.order;
  doc["n"] = r.n;
  doc["marking"] = r.marking ? tuple_to_json(*r.marking) : json(nullptr);
  doc["coefficients"] = poly_to_json(r.cls);
  doc["hodge_euler"] = r.hodge_euler;
  if (r.poincare) {
    json p = json::array();
    for (const auto& b : *r.poincare) p.push_back(b.str());
    doc["poincare"] = p;
  } else {
    doc["poincare"] = nullptr;
  }
  if (r.per_marking) {
    json rows = json::array();
    for (const auto& [c, cls] : *r.per_marking) rows.push_back({{"marking", tuple_to_json(c)}, {"coefficients", poly_to_json(cls)}});
    doc["per_marking"] = rows;
  }
  if (r.census)
    doc["census"] = {{"topologies", r.census->topologies},
                     {"gerby_trees", r.census->gerby_trees},
                     {"admissible", r.census->admissible}};
  if (r.verification) {
    json checks = json::array();
    for (const auto& v : *r.verification) {
      json terms = json::array();
      for (const auto& [name, cls] : v.terms) terms.push_back({{"name", name}, {"coefficients", poly_to_json(cls)}});
      checks.push_back({{"name", v.name},
                        {"lhs", poly_to_json(v.lhs)},
                        {"rhs", poly_to_json(v.rhs)},
                        {"terms", terms},
                        {"equal", v.equal}});
    }
    doc["verification"] = checks;
  }
  return doc.dump(2) + "\n";
}

ClassReport class_report_from_json(const std::string& json_text) {
  const json doc = parse_json(json_text);
  check_schema(doc);
  ClassReport r;
  r.group = get<std::string>(field(doc, "group"), "group");
  r.order = get<int>(field(doc, "order"), "order");
  r.n = get<int>(field(doc, "n"), "n");
  if (const json& m = field(doc, "marking"); !m.is_null()) r.marking = tuple_from_json(m);
  r.cls = poly_from_json(field(doc, "coefficients"));
  r.hodge_euler = get<std::string>(field(doc, "hodge_euler"), "hodge_euler");
  if (const json& p = field(doc, "poincare"); !p.is_null()) {
    if (!p.is_array()) malformed("poincare must be an array or null");
    std::vector<BigInt> betti;
    for (const auto& b : p) betti.push_back(parse_bigint(b));
    r.poincare = std::move(betti);
  }
  if (doc.contains("per_marking")) {
    std::vector<std::pair<ClassTuple, MotivePoly>> rows;
    for (const auto& row : doc["per_marking"])
      rows.emplace_back(tuple_from_json(field(row, "marking")), poly_from_json(field(row, "coefficients")));
    r.per_marking = std::move(rows);
  }
  if (doc.contains("census")) {
    const json& c = doc["census"];
    r.census = CensusSummary{get<std::size_t>(field(c, "topologies"), "topologies"),
                             get<std::uint64_t>(field(c, "gerby_trees"), "gerby_trees"),
                             get<std::uint64_t>(field(c, "admissible"), "admissible")};
  }
  if (doc.contains("verification")) {
    std::vector<VerificationReport> checks;
    for (const auto& v : doc["verification"]) {
      VerificationReport check;
      check.name = get<std::string>(field(v, "name"), "name");
      check.group = r.group;
      check.n = r.n;
      check.lhs = poly_from_json(field(v, "lhs"));
      check.rhs = poly_from_json(field(v, "rhs"));
      for (const auto& t : field(v, "terms"))
        check.terms.emplace_back(get<std::string>(field(t, "name"), "name"), poly_from_json(field(t, "coefficients")));
      check.equal = get<bool>(field(v, "equal"), "equal");
      checks.push_back(std::move(check));
    }
    r.verification = std::move(checks);
  }
  return r;
}

std::string class_report_to_text(const ClassReport& r) {
  std::ostringstream out;
  out << "group " << r.group << " (order " << r.order << "), n = " << r.n << "\n";
  if (r.marking) out << "marking " << marking_to_string(*r.marking) << "\n";
  out << "class " << r.cls.to_string() << "\n";
  out << "hodge-euler " << r.hodge_euler << "\n";
  out << "poincare " << (r.poincare ? poincare_to_string(*r.poincare) : std::string("n/a")) << "\n";
  if (r.census)
    out << "census " << r.census->topologies << " topologies, " << r.census->gerby_trees << " gerby trees, "
        << r.census->admissible << " admissible\n";
  if (r.per_marking)
    for (const auto& [c, cls] : *r.per_marking) out << "  " << marking_to_string(c) << "  " << cls.to_string() << "\n";
  if (r.verification)
    for (const auto& v : *r.verification)
      out << "check " << v.name << ": " << v.lhs.to_string() << (v.equal ? " == " : " != ") << v.rhs.to_string() << "\n";
  return out.str();
}

std::string marking_to_string(const ClassTuple& marking) {
  std::string out;
  for (std::size_t i = 0; i < marking.size(); ++i) out += (i ? "," : "") + std::to_string(marking[i]);
  return out;
}

ClassTuple parse_marking(const std::string& text) {
  ClassTuple out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3)
      malformed("bad marking entry '" + item + "'");
    const int v = std::stoi(item);
    if (v > 255) malformed("bad marking entry '" + item + "'");
    out.push_back(static_cast<ClassId>(v));
  }
  if (out.empty()) malformed("empty marking");
  return out;
}

}  // namespace covermotive

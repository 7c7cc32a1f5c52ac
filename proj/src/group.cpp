#include "covermotive/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "covermotive/errors.hpp"

namespace covermotive {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSpec, what); }

FiniteGroup cyclic_product(const std::vector<int>& moduli) {
  if (moduli.empty()) malformed("product_cyclic needs at least one factor");
  long long order = 1;
  for (int k : moduli) {
    if (k < 1) malformed("cyclic factor must be positive");
    order *= k;
    if (order > kMaxGroupOrder) malformed("group order exceeds 255");
  }
  const int n = static_cast<int>(order);
  // Mixed radix, first factor most significant.
  auto digits = [&](int x) {
    std::vector<int> d(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      d[i] = x % moduli[i];
      x /= moduli[i];
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int x = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) x = x * moduli[i] + d[i];
    return x;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      for (std::size_t i = 0; i < moduli.size(); ++i) db[i] = (da[i] + db[i]) % moduli[i];
      table[a][b] = index(db);
    }
  }
  std::string name;
  for (std::size_t i = 0; i < moduli.size(); ++i) name += (i ? "xZ/" : "Z/") + std::to_string(moduli[i]);
  return FiniteGroup(std::move(table), name);
}

FiniteGroup dihedral(int k) {
  if (k < 1 || 2 * k > kMaxGroupOrder) malformed("dihedral parameter out of range");
  // r^a s^b has index a + k*b; s r s = r^{-1}.
  const int n = 2 * k;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const int a = x % k, b = x / k;
    for (int y = 0; y < n; ++y) {
      const int c = y % k, d = y / k;
      const int rot = ((b == 0 ? a + c : a - c) % k + k) % k;
      table[x][y] = rot + k * ((b + d) % 2);
    }
  }
  return FiniteGroup(std::move(table), "D_" + std::to_string(k));
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

FiniteGroup from_permutations(const std::vector<Perm>& generators, std::string name) {
  if (generators.empty()) malformed("permutation spec needs at least one generator");
  const std::size_t degree = generators.front().size();
  if (degree == 0) malformed("permutations must have positive degree");
  for (const auto& g : generators) {
    if (g.size() != degree) malformed("permutation generators differ in degree");
    std::vector<bool> seen(degree, false);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
        malformed("generator is not a permutation of 0.." + std::to_string(degree - 1));
      seen[v] = true;
    }
  }
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::map<Perm, int> seen{{identity, 0}};
  std::queue<Perm> frontier;
  frontier.push(identity);
  while (!frontier.empty()) {
    const Perm p = frontier.front();
    frontier.pop();
    for (const auto& g : generators) {
      Perm q = compose(g, p);
      if (seen.emplace(q, 0).second) {
        if (static_cast<int>(seen.size()) > kMaxGroupOrder) malformed("generated group exceeds order 255");
        frontier.push(std::move(q));
      }
    }
  }
  // std::map iterates lexicographically, so the identity gets index 0.
  std::vector<Perm> elements;
  for (auto& [perm, idx] : seen) {
    idx = static_cast<int>(elements.size());
    elements.push_back(perm);
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = seen.at(compose(elements[a], elements[b]));
  return FiniteGroup(std::move(table), std::move(name));
}

FiniteGroup symmetric(int k) {
  if (k < 1 || k > 5) malformed("symmetric parameter must be in 1..5 (order <= 255)");
  std::vector<Perm> gens;
  Perm cycle(k), swap(k);
  std::iota(cycle.begin(), cycle.end(), 1);
  cycle[k - 1] = 0;
  std::iota(swap.begin(), swap.end(), 0);
  if (k >= 2) std::swap(swap[0], swap[1]);
  gens.push_back(cycle);
  gens.push_back(swap);
  return from_permutations(gens, "S_" + std::to_string(k));
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name) : name_(std::move(name)) {
  const std::size_t n = table.size();
  if (n == 0) malformed("empty Cayley table");
  if (n > static_cast<std::size_t>(kMaxGroupOrder)) malformed("group order exceeds 255");
  for (const auto& row : table)
    if (row.size() != n) malformed("Cayley table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n) malformed("Cayley table entry out of range: " + std::to_string(v));

  order_ = static_cast<int>(n);
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = static_cast<Element>(table[a][b]);

  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < order_ && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw NotAGroupError("no two-sided identity", {-1, -1, -1});
  identity_ = static_cast<Element>(identity);

  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw NotAGroupError("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + ")",
                               {a, b, c});

  inverse_.assign(n, 0);
  for (int a = 0; a < order_; ++a) {
    int inv = -1;
    for (int b = 0; b < order_ && inv < 0; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inv = b;
    if (inv < 0) throw NotAGroupError("element " + std::to_string(a) + " has no inverse", {a, -1, -1});
    inverse_[a] = static_cast<Element>(inv);
  }

  abelian_ = true;
  for (int a = 0; a < order_ && abelian_; ++a)
    for (int b = a + 1; b < order_ && abelian_; ++b) abelian_ = mul(a, b) == mul(b, a);

  classes_ = conjugacy_classes(*this);
  involution_ = class_involution(*this, classes_);
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  return out;
}

Element FiniteGroup::product_of_representatives(std::span<const ClassId> classes) const {
  Element acc = identity_;
  for (ClassId c : classes) acc = mul(acc, classes_.representatives[c]);
  return acc;
}

ConjugacyTable conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  ConjugacyTable out;
  constexpr int kUnassigned = -1;
  std::vector<int> class_of(n, kUnassigned);
  for (int g = 0; g < n; ++g) {
    if (class_of[g] != kUnassigned) continue;
    const int id = static_cast<int>(out.representatives.size());
    out.representatives.push_back(static_cast<Element>(g));
    int size = 0;
    for (int h = 0; h < n; ++h) {
      const Element x = group.conjugate(static_cast<Element>(g), static_cast<Element>(h));
      if (class_of[x] == kUnassigned) {
        class_of[x] = id;
        ++size;
      }
    }
    out.sizes.push_back(size);
  }
  out.class_of.assign(class_of.begin(), class_of.end());
  return out;
}

ClassInvolution class_involution(const FiniteGroup& group, const ConjugacyTable& table) {
  ClassInvolution out;
  out.map.resize(table.count());
  for (int c = 0; c < table.count(); ++c) out.map[c] = table.class_of[group.inverse(table.representatives[c])];
  return out;
}

int class_order(const FiniteGroup& group, ClassId c) {
  if (c >= group.class_count()) throw Error(ErrorKind::IndexOutOfRange, "class id " + std::to_string(c));
  return group.element_order(group.classes().representatives[c]);
}

FiniteGroup build_group(const GroupSpec& spec) {
  if (const auto* cayley = std::get_if<CayleySpec>(&spec)) return FiniteGroup(cayley->table, "cayley");
  if (const auto* perms = std::get_if<PermutationSpec>(&spec)) return from_permutations(perms->generators, "perm");
  const auto& builtin = std::get<BuiltinSpec>(spec);
  const auto& p = builtin.params;
  switch (builtin.family) {
    case BuiltinFamily::Cyclic:
      if (p.size() != 1) malformed("cyclic takes exactly one parameter");
      return cyclic_product(p);
    case BuiltinFamily::ProductCyclic:
      return cyclic_product(p);
    case BuiltinFamily::Dihedral:
      if (p.size() != 1) malformed("dihedral takes exactly one parameter");
      return dihedral(p[0]);
    case BuiltinFamily::Symmetric:
      if (p.size() != 1) malformed("symmetric takes exactly one parameter");
      return symmetric(p[0]);
  }
  malformed("unknown builtin family");
}

BuiltinSpec parse_builtin(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) malformed("builtin spec must look like kind:params, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  BuiltinSpec spec;
  if (kind == "cyclic") spec.family = BuiltinFamily::Cyclic;
  else if (kind == "product_cyclic") spec.family = BuiltinFamily::ProductCyclic;
  else if (kind == "dihedral") spec.family = BuiltinFamily::Dihedral;
  else if (kind == "symmetric") spec.family = BuiltinFamily::Symmetric;
  else malformed("unknown builtin family '" + kind + "'");

  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      spec.params.push_back(v);
    } catch (const std::exception&) {
      malformed("bad builtin parameter '" + item + "'");
    }
  }
  if (spec.params.empty()) malformed("builtin spec has no parameters");
  return spec;
}

}  // namespace covermotive

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace covermotive {

/// Element and conjugacy-class indices. Orders are capped at 255, so both fit a byte.
using Element = std::uint8_t;
using ClassId = std::uint8_t;
using ClassTuple = std::vector<ClassId>;

inline constexpr int kMaxGroupOrder = 255;

/// Conjugacy classes of a finite group; ids are assigned in order of the
/// smallest element index they contain.
struct ConjugacyTable {
  std::vector<ClassId> class_of;         // element -> class id
  std::vector<Element> representatives;  // class id -> smallest element
  std::vector<int> sizes;                // class id -> class size

  int count() const { return static_cast<int>(representatives.size()); }
};

/// The map induced on classes by g -> g^{-1}.
struct ClassInvolution {
  std::vector<ClassId> map;

  ClassId operator()(ClassId c) const { return map[c]; }
};

struct CayleySpec {
  std::vector<std::vector<int>> table;
};

/// Generators given as 0-based image arrays, all of the same degree.
/// Products compose as functions: (a*b)(x) = a(b(x)).
struct PermutationSpec {
  std::vector<std::vector<int>> generators;
};

enum class BuiltinFamily { Cyclic, ProductCyclic, Dihedral, Symmetric };

struct BuiltinSpec {
  BuiltinFamily family = BuiltinFamily::Cyclic;
  std::vector<int> params;
};

using GroupSpec = std::variant<CayleySpec, PermutationSpec, BuiltinSpec>;

/// A validated finite group given by its multiplication table, together with
/// its conjugacy classes and the inversion involution on classes. Immutable.
class FiniteGroup {
 public:
  /// Validates the table; throws MalformedSpec or NotAGroup.
  FiniteGroup(std::vector<std::vector<int>> table, std::string name);

  int order() const { return order_; }
  Element identity() const { return identity_; }
  const std::string& name() const { return name_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate(Element g, Element by) const { return mul(mul(by, g), inverse(by)); }
  int element_order(Element a) const;
  bool is_abelian() const { return abelian_; }
  std::vector<std::vector<int>> table() const;

  const ConjugacyTable& classes() const { return classes_; }
  const ClassInvolution& involution() const { return involution_; }
  int class_count() const { return classes_.count(); }
  ClassId class_of(Element g) const { return classes_.class_of[g]; }
  ClassId iota(ClassId c) const { return involution_.map[c]; }

  /// Product of the class representatives, in order. Only meaningful as a
  /// class-level sum for abelian groups, where classes are singletons.
  Element product_of_representatives(std::span<const ClassId> classes) const;

 private:
  int order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::string name_;
  bool abelian_ = false;
  ConjugacyTable classes_;
  ClassInvolution involution_;
};

FiniteGroup build_group(const GroupSpec& spec);

/// Parses "cyclic:3", "product_cyclic:2,2", "dihedral:4", "symmetric:3".
BuiltinSpec parse_builtin(const std::string& text);

ConjugacyTable conjugacy_classes(const FiniteGroup& group);
ClassInvolution class_involution(const FiniteGroup& group, const ConjugacyTable& table);
int class_order(const FiniteGroup& group, ClassId c);

}  // namespace covermotive

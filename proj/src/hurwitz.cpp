#include "covermotive/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "covermotive/errors.hpp"
#include "parallel.hpp"

namespace covermotive {
namespace {

void check_cap(const FiniteGroup& group, int n, const Limits& limits) {
  // |G|^(n-1) without overflow.
  long double size = 1;
  for (int i = 0; i + 1 < n; ++i) size *= group.order();
  if (size > static_cast<long double>(limits.enumeration_cap))
    throw Error(ErrorKind::DegreeOverflow, "|G|^(n-1) = " + std::to_string(group.order()) + "^" +
                                               std::to_string(n - 1) + " exceeds the enumeration cap " +
                                               std::to_string(limits.enumeration_cap));
}

void check_classes(const FiniteGroup& group, const NielsenClass& classes) {
  for (ClassId c : classes)
    if (c >= group.class_count()) throw Error(ErrorKind::IndexOutOfRange, "class id " + std::to_string(c));
}

}  // namespace

std::vector<HurwitzVector> enumerate_hurwitz(const FiniteGroup& group, int n,
                                             const std::optional<NielsenClass>& constraint, const Limits& limits) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "Hurwitz vectors need n >= 1");
  if (constraint) {
    if (static_cast<int>(constraint->size()) != n)
      throw Error(ErrorKind::IndexOutOfRange, "constraint length differs from n");
    check_classes(group, *constraint);
  }
  check_cap(group, n, limits);

  // Candidate elements per position.
  std::vector<std::vector<Element>> choices(n);
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < group.order(); ++g)
      if (!constraint || group.class_of(static_cast<Element>(g)) == (*constraint)[i])
        choices[i].push_back(static_cast<Element>(g));

  std::vector<HurwitzVector> out;
  HurwitzVector current(n);
  // prefix[i] = g_1 ... g_i
  std::vector<Element> prefix(n + 1, group.identity());
  auto recurse = [&](auto&& self, int pos) -> void {
    if (pos == n - 1) {
      const Element last = group.inverse(prefix[pos]);
      if (std::find(choices[pos].begin(), choices[pos].end(), last) == choices[pos].end()) return;
      current[pos] = last;
      out.push_back(current);
      return;
    }
    for (Element g : choices[pos]) {
      current[pos] = g;
      prefix[pos + 1] = group.mul(prefix[pos], g);
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

HurwitzVector braid_generator(const FiniteGroup& group, const HurwitzVector& v, int i) {
  const int n = static_cast<int>(v.size());
  if (i < 1 || i > n - 1) throw Error(ErrorKind::IndexOutOfRange, "braid index " + std::to_string(i));
  HurwitzVector out = v;
  const Element gi = v[i - 1], gj = v[i];
  out[i - 1] = group.conjugate(gj, gi);
  out[i] = gi;
  return out;
}

HurwitzVector braid_generator_inverse(const FiniteGroup& group, const HurwitzVector& v, int i) {
  const int n = static_cast<int>(v.size());
  if (i < 1 || i > n - 1) throw Error(ErrorKind::IndexOutOfRange, "braid index " + std::to_string(i));
  HurwitzVector out = v;
  const Element gi = v[i - 1], gj = v[i];
  out[i - 1] = gj;
  out[i] = group.conjugate(gi, group.inverse(gj));
  return out;
}

HurwitzVector conjugation_canonical(const FiniteGroup& group, const HurwitzVector& v) {
  HurwitzVector best = v;
  HurwitzVector candidate(v.size());
  for (int h = 0; h < group.order(); ++h) {
    for (std::size_t i = 0; i < v.size(); ++i) candidate[i] = group.conjugate(v[i], static_cast<Element>(h));
    if (candidate < best) best = candidate;
  }
  return best;
}

std::vector<std::vector<HurwitzVector>> braid_orbits(const FiniteGroup& group,
                                                     const std::vector<HurwitzVector>& vectors, bool mod_conjugation,
                                                     int jobs) {
  std::vector<HurwitzVector> points = vectors;
  if (mod_conjugation) {
    detail::parallel_for(points.size(), jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) points[i] = conjugation_canonical(group, points[i]);
    });
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  auto normalize = [&](HurwitzVector v) { return mod_conjugation ? conjugation_canonical(group, v) : v; };

  // BFS from the smallest unvisited point: orbits come out ordered by their
  // minimum, independent of input order.
  std::set<HurwitzVector> visited;
  std::vector<std::vector<HurwitzVector>> orbits;
  for (const auto& start : points) {
    if (visited.contains(start)) continue;
    std::vector<HurwitzVector> orbit{start};
    visited.insert(start);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const HurwitzVector cur = orbit[head];
      for (int i = 1; i < static_cast<int>(cur.size()); ++i) {
        for (auto next : {braid_generator(group, cur, i), braid_generator_inverse(group, cur, i)}) {
          next = normalize(std::move(next));
          if (visited.insert(next).second) orbit.push_back(std::move(next));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::uint64_t nielsen_count(const FiniteGroup& group, const NielsenClass& classes, const Limits& limits) {
  check_classes(group, classes);
  const int n = static_cast<int>(classes.size());
  if (n == 0) return 1;
  // Enumerating within the classes only; bound by the product of class sizes.
  long double size = 1;
  for (int i = 0; i + 1 < n; ++i) size *= group.classes().sizes[classes[i]];
  if (size > static_cast<long double>(limits.enumeration_cap))
    throw Error(ErrorKind::DegreeOverflow, "Nielsen class enumeration exceeds the cap");
  std::vector<std::vector<Element>> members(n);
  for (int g = 0; g < group.order(); ++g)
    for (int i = 0; i < n; ++i)
      if (group.class_of(static_cast<Element>(g)) == classes[i]) members[i].push_back(static_cast<Element>(g));

  std::uint64_t count = 0;
  auto recurse = [&](auto&& self, int pos, Element prefix) -> void {
    if (pos == n - 1) {
      if (group.class_of(group.inverse(prefix)) == classes[pos]) ++count;
      return;
    }
    for (Element g : members[pos]) self(self, pos + 1, group.mul(prefix, g));
  };
  recurse(recurse, 0, group.identity());
  return count;
}

}  // namespace covermotive

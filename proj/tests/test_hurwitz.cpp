#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "covermotive/errors.hpp"
#include "covermotive/hurwitz.hpp"

using namespace covermotive;

namespace {

FiniteGroup builtin(const char* text) { return build_group(parse_builtin(text)); }

HurwitzVector apply(const FiniteGroup& g, HurwitzVector v, std::initializer_list<int> word) {
  for (int i : word) v = braid_generator(g, v, i);
  return v;
}

Element product(const FiniteGroup& g, const HurwitzVector& v) {
  Element p = g.identity();
  for (Element x : v) p = g.mul(p, x);
  return p;
}

}  // namespace

TEST_CASE("vector counts") {
  CHECK(enumerate_hurwitz(builtin("cyclic:2"), 3).size() == 4);
  CHECK(enumerate_hurwitz(builtin("cyclic:2"), 4).size() == 8);
  CHECK(enumerate_hurwitz(builtin("symmetric:3"), 3).size() == 36);
  for (const char* name : {"cyclic:3", "dihedral:4", "symmetric:3", "product_cyclic:2,2"}) {
    const auto g = builtin(name);
    for (int n = 1; n <= 4; ++n) {
      const auto all = enumerate_hurwitz(g, n);
      std::uint64_t expected = 1;
      for (int i = 1; i < n; ++i) expected *= g.order();
      CHECK(all.size() == expected);
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& v : all) CHECK(product(g, v) == g.identity());
    }
  }
}

TEST_CASE("Nielsen-constrained enumeration against brute force") {
  const auto s3 = builtin("symmetric:3");
  ClassId transp = 0, three = 0;
  for (int c = 0; c < 3; ++c) {
    if (s3.classes().sizes[c] == 3) transp = c;
    if (s3.classes().sizes[c] == 2) three = c;
  }
  const NielsenClass c{transp, transp, three};
  int brute = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int d = 0; d < 6; ++d)
        if (s3.class_of(a) == transp && s3.class_of(b) == transp && s3.class_of(d) == three &&
            s3.mul(s3.mul(a, b), d) == s3.identity())
          ++brute;
  CHECK(brute == 6);
  CHECK(enumerate_hurwitz(s3, 3, c).size() == 6);
  CHECK(nielsen_count(s3, c) == 6);
  CHECK(nielsen_count(s3, {transp, transp, transp}) == 0);
}

TEST_CASE("abelian Nielsen counts") {
  const auto z2 = builtin("cyclic:2");
  CHECK(nielsen_count(z2, {1, 1, 1, 1}) == 1);
  CHECK(nielsen_count(z2, {1, 1, 1, 0}) == 0);
  const auto g = builtin("product_cyclic:2,3");
  std::uint64_t total = 0;
  ClassTuple c(3, 0);
  for (c[0] = 0; c[0] < 6; ++c[0])
    for (c[1] = 0; c[1] < 6; ++c[1])
      for (c[2] = 0; c[2] < 6; ++c[2]) total += nielsen_count(g, c);
  CHECK(total == 36);
}

TEST_CASE("braid moves") {
  const auto z3 = builtin("cyclic:3");
  CHECK(braid_generator(z3, {1, 2, 0}, 1) == HurwitzVector{2, 1, 0});
  const auto s3 = builtin("symmetric:3");
  const auto all = enumerate_hurwitz(s3, 4);
  for (const auto& v : all)
    for (int i = 1; i <= 3; ++i) {
      const auto w = braid_generator(s3, v, i);
      CHECK(w[i - 1] == s3.mul(s3.mul(v[i - 1], v[i]), s3.inverse(v[i - 1])));
      CHECK(w[i] == v[i - 1]);
      CHECK(product(s3, w) == s3.identity());
      CHECK(braid_generator_inverse(s3, w, i) == v);
      std::multiset<int> before, after;
      for (Element x : v) before.insert(s3.class_of(x));
      for (Element x : w) after.insert(s3.class_of(x));
      CHECK(before == after);
    }
  CHECK_THROWS_AS(braid_generator(s3, all.front(), 0), Error);
  CHECK_THROWS_AS(braid_generator(s3, all.front(), 4), Error);
}

TEST_CASE("braid relations as permutations of HV(S3, 4)") {
  const auto s3 = builtin("symmetric:3");
  for (const auto& v : enumerate_hurwitz(s3, 4)) {
    CHECK(apply(s3, v, {1, 2, 1}) == apply(s3, v, {2, 1, 2}));
    CHECK(apply(s3, v, {2, 3, 2}) == apply(s3, v, {3, 2, 3}));
    CHECK(apply(s3, v, {1, 3}) == apply(s3, v, {3, 1}));
    for (int h = 0; h < 6; ++h) {
      HurwitzVector conj = v;
      for (auto& x : conj) x = s3.conjugate(x, h);
      HurwitzVector moved = braid_generator(s3, v, 2);
      for (auto& x : moved) x = s3.conjugate(x, h);
      CHECK(braid_generator(s3, conj, 2) == moved);
    }
  }
}

TEST_CASE("abelian braid orbits are multiset classes") {
  for (const char* name : {"cyclic:2", "cyclic:3", "product_cyclic:2,2"}) {
    const auto g = builtin(name);
    for (int n = 2; n <= 4; ++n) {
      const auto all = enumerate_hurwitz(g, n);
      std::set<HurwitzVector> multisets;
      for (auto v : all) {
        std::sort(v.begin(), v.end());
        multisets.insert(v);
      }
      CHECK(braid_orbits(g, all, false).size() == multisets.size());
    }
  }
  CHECK(braid_orbits(builtin("cyclic:2"), enumerate_hurwitz(builtin("cyclic:2"), 4), false).size() == 3);
}

TEST_CASE("orbit computation is idempotent and schedule independent") {
  const auto s3 = builtin("symmetric:3");
  auto all = enumerate_hurwitz(s3, 4);
  for (bool mod : {false, true}) {
    const auto base = braid_orbits(s3, all, mod, 1);
    std::mt19937 rng(7);
    auto shuffled = all;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(braid_orbits(s3, shuffled, mod, 4) == base);
    CHECK(braid_orbits(s3, all, mod, 3) == base);
    for (const auto& orbit : base) {
      const auto again = braid_orbits(s3, orbit, mod, 2);
      REQUIRE(again.size() == 1);
      CHECK(again.front() == orbit);
    }
    std::size_t total = 0;
    for (const auto& orbit : base) total += orbit.size();
    if (!mod) CHECK(total == all.size());
  }
  MESSAGE("S3, n=4 orbits: " << braid_orbits(s3, all, false).size() << " plain, "
                             << braid_orbits(s3, all, true).size() << " mod conjugation");
}

TEST_CASE("conjugation canonical form") {
  const auto s3 = builtin("symmetric:3");
  for (const auto& v : enumerate_hurwitz(s3, 3)) {
    const auto c = conjugation_canonical(s3, v);
    CHECK(c <= v);
    for (int h = 0; h < 6; ++h) {
      HurwitzVector w = v;
      for (auto& x : w) x = s3.conjugate(x, h);
      CHECK(conjugation_canonical(s3, w) == c);
    }
  }
}

TEST_CASE("enumeration cap") {
  Limits tight;
  tight.enumeration_cap = 100;
  CHECK_THROWS_AS(enumerate_hurwitz(builtin("cyclic:3"), 6, std::nullopt, tight), Error);
  try {
    enumerate_hurwitz(builtin("cyclic:3"), 6, std::nullopt, tight);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOverflow);
  }
}

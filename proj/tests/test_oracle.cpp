#include "doctest.h"

#include "covermotive/errors.hpp"
#include "covermotive/motive.hpp"
#include "covermotive/oracle.hpp"

using namespace covermotive;
using namespace covermotive::oracle;

TEST_CASE("prime field") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(12), Error);
  const PrimeField f(7);
  for (std::uint64_t a = 0; a < 7; ++a) {
    CHECK(f.add(a, f.sub(0, a)) == 0);
    for (std::uint64_t b = 0; b < 7; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, f.add(b, 1)) == f.add(f.mul(a, b), a));
    }
  }
}

TEST_CASE("M_{0,n} point counts") {
  CHECK(brute_force_M0n_count(4, 5) == 3);
  CHECK(brute_force_M0n_count(3, 11) == 1);
  CHECK(brute_force_M0n_count(5, 7) == 20);
  for (int n = 3; n <= 6; ++n)
    for (std::uint64_t p : {5, 7, 11, 13}) CHECK(eval_at(class_M0n(n), p) == brute_force_M0n_count(n, p));
  Limits tight;
  tight.enumeration_cap = 10;
  CHECK_THROWS_AS(brute_force_M0n_count(6, 13, tight), Error);
}

TEST_CASE("tree classes") {
  CHECK(brute_force_tree_count(3) == 1);
  CHECK(brute_force_tree_count(4) == 4);
  CHECK(brute_force_tree_count(5) == 26);
  CHECK_THROWS_AS(brute_force_tree_count(7), Error);
  const auto classes = brute_force_tree_classes(5);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) CHECK_FALSE(oracle_isomorphic(classes[i], classes[j]));
}

TEST_CASE("isomorphism test") {
  const OracleTree a{2, {{0, 1}}, {0, 0, 1, 1}};
  const OracleTree b{2, {{1, 0}}, {1, 1, 0, 0}};
  const OracleTree c{2, {{0, 1}}, {0, 1, 0, 1}};
  CHECK(oracle_isomorphic(a, b));
  CHECK_FALSE(oracle_isomorphic(a, c));
}

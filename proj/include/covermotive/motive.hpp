#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace covermotive {

using BigInt = boost::multiprecision::cpp_int;

/// An element of Z[q], q the class of the affine line. Coefficients are
/// ascending in q with no trailing zeros; zero is the empty sequence.
class MotivePoly {
 public:
  MotivePoly() = default;
  MotivePoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit MotivePoly(std::vector<BigInt> coeffs);

  /// The Lefschetz class itself.
  static MotivePoly q();

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const;
  BigInt leading() const;

  MotivePoly& operator+=(const MotivePoly& other);
  MotivePoly& operator-=(const MotivePoly& other);
  MotivePoly& operator*=(const MotivePoly& other);
  MotivePoly& operator*=(const BigInt& scalar);

  friend MotivePoly operator+(MotivePoly a, const MotivePoly& b) { return a += b; }
  friend MotivePoly operator-(MotivePoly a, const MotivePoly& b) { return a -= b; }
  friend MotivePoly operator*(const MotivePoly& a, const MotivePoly& b);
  friend MotivePoly operator*(MotivePoly a, const BigInt& s) { return a *= s; }
  friend MotivePoly operator*(const BigInt& s, MotivePoly a) { return a *= s; }
  friend MotivePoly operator*(MotivePoly a, long long s) { return a *= BigInt(s); }
  friend MotivePoly operator*(long long s, MotivePoly a) { return a *= BigInt(s); }
  MotivePoly operator-() const;

  friend bool operator==(const MotivePoly& a, const MotivePoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable, descending powers: "q^2+5q+1", "q-2", "0".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

MotivePoly poly_add(const MotivePoly& a, const MotivePoly& b);
MotivePoly poly_mul(const MotivePoly& a, const MotivePoly& b);
MotivePoly poly_neg(const MotivePoly& a);

/// Exact division by a nonzero integer; throws InexactDivision otherwise.
MotivePoly divide_exact(const MotivePoly& p, const BigInt& divisor);

BigInt eval_at(const MotivePoly& p, const BigInt& q0);

/// Class of M_{0,n}: prod_{k=2}^{n-2} (q - k); 1 for n = 3.
MotivePoly class_M0n(int n);

BigInt factorial(int n);

/// Hodge-Euler polynomial: (p, q) exponent pair -> coefficient of u^p v^q.
struct EPoly {
  std::map<std::pair<int, int>, BigInt> terms;

  friend bool operator==(const EPoly&, const EPoly&) = default;
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  /// "8uv+8", "u^2v^2".
  std::string to_string() const;
};

/// Substitutes q -> uv.
EPoly to_hodge_euler(const MotivePoly& p);

/// Poincare polynomial coefficients ascending in t (odd entries zero):
/// b_{2k} is the coefficient of q^k. Throws NegativeCoefficient when any
/// coefficient is negative, since the class cannot then be that of a
/// projective variety with pure Tate cohomology.
std::vector<BigInt> to_poincare(const MotivePoly& p);

/// "1+5t^2+t^4".
std::string poincare_to_string(const std::vector<BigInt>& coeffs);

}  // namespace covermotive

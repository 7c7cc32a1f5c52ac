#include "covermotive/motive.hpp"

#include <sstream>

#include "covermotive/errors.hpp"

namespace covermotive {

MotivePoly::MotivePoly(long long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

MotivePoly::MotivePoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

MotivePoly MotivePoly::q() { return MotivePoly(std::vector<BigInt>{0, 1}); }

void MotivePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt MotivePoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

BigInt MotivePoly::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

MotivePoly& MotivePoly::operator+=(const MotivePoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

MotivePoly& MotivePoly::operator-=(const MotivePoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

MotivePoly operator*(const MotivePoly& a, const MotivePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return MotivePoly(std::move(out));
}

MotivePoly& MotivePoly::operator*=(const MotivePoly& other) { return *this = *this * other; }

MotivePoly& MotivePoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

MotivePoly MotivePoly::operator-() const {
  MotivePoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string MotivePoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 'q';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

MotivePoly poly_add(const MotivePoly& a, const MotivePoly& b) { return a + b; }
MotivePoly poly_mul(const MotivePoly& a, const MotivePoly& b) { return a * b; }
MotivePoly poly_neg(const MotivePoly& a) { return -a; }

MotivePoly divide_exact(const MotivePoly& p, const BigInt& divisor) {
  if (divisor == 0) throw Error(ErrorKind::InexactDivision, "division by zero");
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c % divisor != 0)
      throw Error(ErrorKind::InexactDivision, p.to_string() + " is not divisible by " + divisor.str());
    out.push_back(c / divisor);
  }
  return MotivePoly(std::move(out));
}

BigInt eval_at(const MotivePoly& p, const BigInt& q0) {
  BigInt acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q0 + p.coeffs()[k];
  return acc;
}

MotivePoly class_M0n(int n) {
  if (n < 3) throw Error(ErrorKind::IndexOutOfRange, "class_M0n needs n >= 3");
  MotivePoly out = 1;
  for (int k = 2; k <= n - 2; ++k) out *= MotivePoly::q() - MotivePoly(k);
  return out;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) out.terms[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string EPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto [p, q] = it->first;
    const BigInt& c = it->second;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (mag != 1 || (p == 0 && q == 0)) out << mag;
    if (p != 0) out << 'u' << (p != 1 ? "^" + std::to_string(p) : "");
    if (q != 0) out << 'v' << (q != 1 ? "^" + std::to_string(q) : "");
    first = false;
  }
  return out.str();
}

EPoly to_hodge_euler(const MotivePoly& p) {
  EPoly out;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeffs()[k] != 0) out.terms[{k, k}] = p.coeffs()[k];
  return out;
}

std::vector<BigInt> to_poincare(const MotivePoly& p) {
  std::vector<BigInt> out;
  if (p.is_zero()) return out;
  out.assign(2 * p.degree() + 1, 0);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeffs()[k] < 0)
      throw Error(ErrorKind::NegativeCoefficient,
                  p.to_string() + " has a negative coefficient; not the class of a pure projective variety");
    out[2 * k] = p.coeffs()[k];
  }
  return out;
}

std::string poincare_to_string(const std::vector<BigInt>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) out << '+';
    if (coeffs[k] != 1 || k == 0) out << coeffs[k];
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace covermotive

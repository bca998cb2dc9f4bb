#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gpm/numeric.hpp"

namespace gpm {

// Arithmetic in Z[zeta_e]: elements are integer vectors in the power basis
// 1, z, ..., z^{phi(e)-1} after reduction modulo the e-th cyclotomic
// polynomial.  Canonical form, so equality is coefficient equality.
class CyclotomicRing {
 public:
  static std::shared_ptr<const CyclotomicRing> get(int e);

  int order() const { return e_; }
  int degree() const { return (int)phi_.size() - 1; }
  const std::vector<Int>& cyclotomic_polynomial() const { return phi_; }
  // z^k reduced mod Phi_e, k taken mod e
  const std::vector<Int>& zeta_power(long k) const;
  std::vector<Int> reduce(std::vector<Int> poly) const;

 private:
  explicit CyclotomicRing(int e);
  int e_;
  std::vector<Int> phi_;                     // ascending coefficients, monic
  std::vector<std::vector<Int>> zeta_pow_;   // e entries, each of size degree()
};

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1, Int(0)) {}
  Cyclotomic(int e, Int constant);
  static Cyclotomic zeta(int e, long power);  // z^power in Z[zeta_e]

  int order() const { return ring_->order(); }
  const std::vector<Int>& coeffs() const { return c_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic conjugate() const;       // z -> z^{e-1}
  bool is_rational_integer() const;   // all non-constant coefficients zero
  Int to_integer() const;             // requires is_rational_integer()
  bool is_zero() const;

  std::string to_string() const;  // "a0+a1*z^1+..."

 private:
  Cyclotomic(std::shared_ptr<const CyclotomicRing> ring, std::vector<Int> c);
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<Int> c_;  // size = ring degree
};

// Parses the "a0+a1*z^1+..." syntax (terms like "3", "-z^2", "2*z").
Cyclotomic parse_cyclotomic(int e, const std::string& text);

}  // namespace gpm

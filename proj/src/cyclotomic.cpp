#include "gpm/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "gpm/errors.hpp"

namespace gpm {

namespace {

// quotient of exact division of integer polynomials (divisor monic-led usable)
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  while (num.size() >= den.size()) {
    Int lead = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = lead;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) break;
  }
  if (!num.empty()) throw consistency_error("inexact polynomial division");
  return q;
}

std::vector<Int> cyclotomic_poly(int e) {
  // x^e - 1 divided by all Phi_d, d | e, d < e
  std::vector<Int> poly(e + 1, Int(0));
  poly[0] = -1;
  poly[e] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_poly(d));
  return poly;
}

}  // namespace

CyclotomicRing::CyclotomicRing(int e) : e_(e) {
  if (e < 1) throw domain_error("cyclotomic order must be >= 1");
  phi_ = cyclotomic_poly(e);
  int deg = (int)phi_.size() - 1;
  zeta_pow_.resize(e);
  std::vector<Int> cur(1, Int(1));  // z^0
  for (int k = 0; k < e; ++k) {
    std::vector<Int> padded = cur;
    padded.resize(deg, Int(0));
    zeta_pow_[k] = padded;
    // multiply by z and reduce
    cur.insert(cur.begin(), Int(0));
    cur = reduce(std::move(cur));
  }
}

std::vector<Int> CyclotomicRing::reduce(std::vector<Int> poly) const {
  size_t deg = phi_.size() - 1;
  while (poly.size() > deg) {
    Int lead = poly.back();
    poly.pop_back();
    if (lead == 0) continue;
    size_t shift = poly.size() - deg;
    for (size_t i = 0; i < deg; ++i) poly[shift + i] -= lead * phi_[i];
  }
  poly.resize(deg, Int(0));
  return poly;
}

const std::vector<Int>& CyclotomicRing::zeta_power(long k) const {
  long m = k % e_;
  if (m < 0) m += e_;
  return zeta_pow_[m];
}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::get(int e) {
  static std::map<int, std::shared_ptr<const CyclotomicRing>> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  auto ring = std::shared_ptr<const CyclotomicRing>(new CyclotomicRing(e));
  cache[e] = ring;
  return ring;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicRing> ring, std::vector<Int> c)
    : ring_(std::move(ring)), c_(std::move(c)) {
  c_.resize(ring_->degree(), Int(0));
}

Cyclotomic::Cyclotomic(int e, Int constant) : ring_(CyclotomicRing::get(e)) {
  c_.assign(ring_->degree(), Int(0));
  if (!c_.empty()) c_[0] = std::move(constant);
  else if (constant != 0)
    throw consistency_error("degree-0 cyclotomic ring");
}

Cyclotomic Cyclotomic::zeta(int e, long power) {
  auto ring = CyclotomicRing::get(e);
  return Cyclotomic(ring, ring->zeta_power(power));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (ring_ != o.ring_) throw domain_error("cyclotomic order mismatch");
  std::vector<Int> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return Cyclotomic(ring_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (ring_ != o.ring_) throw domain_error("cyclotomic order mismatch");
  std::vector<Int> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return Cyclotomic(ring_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (ring_ != o.ring_) throw domain_error("cyclotomic order mismatch");
  if (c_.empty()) return *this;
  std::vector<Int> prod(2 * c_.size(), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  return Cyclotomic(ring_, ring_->reduce(std::move(prod)));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return ring_ == o.ring_ && c_ == o.c_;
}

Cyclotomic Cyclotomic::conjugate() const {
  // substitute z -> z^{e-1}
  std::vector<Int> acc(ring_->degree(), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& zp = ring_->zeta_power(-(long)i);
    for (size_t j = 0; j < acc.size(); ++j) acc[j] += c_[i] * zp[j];
  }
  return Cyclotomic(ring_, std::move(acc));
}

bool Cyclotomic::is_rational_integer() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Int Cyclotomic::to_integer() const {
  if (!is_rational_integer()) throw consistency_error("cyclotomic value is not a rational integer");
  return c_.empty() ? Int(0) : c_[0];
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? "-" : "+");
    }
    first = false;
    Int aa = abs(a);
    if (i == 0) {
      out << aa.get_str();
    } else {
      if (aa != 1) out << aa.get_str() << "*";
      out << "z^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

Cyclotomic parse_cyclotomic(int e, const std::string& text) {
  Cyclotomic acc(e, Int(0));
  std::string s;
  for (char ch : text)
    if (!isspace((unsigned char)ch)) s.push_back(ch);
  if (s.empty()) throw validation_error("empty cyclotomic literal");
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') { sign = -1; ++i; }
    if (i >= s.size()) throw validation_error("dangling sign in cyclotomic literal");
    // coefficient
    std::string digits;
    while (i < s.size() && isdigit((unsigned char)s[i])) digits.push_back(s[i++]);
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    coeff *= sign;
    long power = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
      if (s[i] == '*') ++i;
      if (i >= s.size() || s[i] != 'z') throw validation_error("expected z in cyclotomic literal");
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string p;
        while (i < s.size() && isdigit((unsigned char)s[i])) p.push_back(s[i++]);
        if (p.empty()) throw validation_error("missing exponent in cyclotomic literal");
        power = std::stol(p);
      }
    } else if (digits.empty()) {
      throw validation_error("bad term in cyclotomic literal: " + text);
    }
    Cyclotomic term = Cyclotomic::zeta(e, power);
    term = term * Cyclotomic(e, coeff);
    acc += term;
  }
  return acc;
}

}  // namespace gpm

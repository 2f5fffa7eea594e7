#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gkm {

// Exact rational scalar, thin wrapper over GMP's mpq_class.
// Invariant: always canonical -- gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}    // NOLINT: integers convert implicitly
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rat(long num, long den) : v_(mpz_class(num), mpz_class(den)) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }

  // Accepts "p", "p/q", optionally signed, base 10.
  static Rat parse(const std::string& s);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat pow(unsigned e) const;

  // Canonical form: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rat Rat::pow(unsigned e) const {
  Rat acc(1);
  Rat base = *this;
  while (e != 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  if (v.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  v.canonicalize();
  return Rat(std::move(v));
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace gkm

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace nlie {

// Exact rational scalar on top of GMP. Every constructor and parse path
// canonicalizes (positive denominator, gcd 1), so equality of values is
// equality of representations. Arithmetic is exact by construction.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(int n) : v_(static_cast<long>(n)) {}
  Rat(long num, long den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q" with optional sign; rejects everything else.
  static Rat parse(const std::string& s);

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rat operator-() const { Rat r; r.v_ = -v_; return r; }
  Rat operator+(const Rat& o) const { Rat r; r.v_ = v_ + o.v_; return r; }
  Rat operator-(const Rat& o) const { Rat r; r.v_ = v_ - o.v_; return r; }
  Rat operator*(const Rat& o) const { Rat r; r.v_ = v_ * o.v_; return r; }
  Rat operator/(const Rat& o) const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  // this -= a*b without a named temporary at every call site.
  void submul(const Rat& a, const Rat& b) { v_ -= a.v_ * b.v_; }
  void addmul(const Rat& a, const Rat& b) { v_ += a.v_ * b.v_; }

  Rat inverse() const;
  Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlie

#include "nlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace nlie {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  // mpq_class accepts whitespace and leading zeros that we want to reject,
  // so validate the shape first: optional sign, digits, optional /digits.
  auto bad = [&]() -> ParseError {
    return ParseError("not a rational: '" + s + "'");
  };
  std::size_t i = 0;
  auto digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    return i > start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) i++;
  if (!digits()) throw bad();
  if (i < s.size()) {
    if (s[i] != '/') throw bad();
    i++;
    std::size_t den_start = i;
    if (!digits() || i != s.size()) throw bad();
    if (s.substr(den_start) == "0") throw bad();
  }
  // mpq_set_str chokes on an explicit plus sign the grammar above allows
  mpq_class v(s[0] == '+' ? s.substr(1) : s);
  v.canonicalize();
  return Rat(v);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  Rat r;
  r.v_ = v_ / o.v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rat r;
  r.v_ = 1 / v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace nlie

#include "farey/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace farey {

using boost::multiprecision::gcd;

ExtRat reduce(Int num, Int den) {
  if (num == 0 && den == 0) {
    throw std::invalid_argument("reduce: 0/0 is undefined");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) {
    return ExtRat::infinity();
  }
  Int g = gcd(abs(num), den);
  ExtRat r;
  r.num = num / g;
  r.den = den / g;
  return r;
}

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

ExtRat::ExtRat(const Int& n, const Int& d) { *this = reduce(n, d); }

ExtRat::ExtRat(const Rat& r) {
  num = numerator(r);
  den = denominator(r);
}

ExtRat ExtRat::infinity() {
  ExtRat x;
  x.num = 1;
  x.den = 0;
  return x;
}

Rat ExtRat::value() const {
  if (is_infinity()) throw std::domain_error("value() of infinity");
  return Rat(num, den);
}

double ExtRat::to_double() const {
  if (is_infinity()) return HUGE_VAL;
  return Rat(num, den).convert_to<double>();
}

std::string ExtRat::str() const { return num.str() + "/" + den.str(); }

Int det(const ExtRat& u, const ExtRat& v) { return u.num * v.den - u.den * v.num; }

bool operator==(const ExtRat& a, const ExtRat& b) { return a.num == b.num && a.den == b.den; }
bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
bool operator<(const ExtRat& a, const ExtRat& b) { return det(a, b) < 0; }
bool operator<=(const ExtRat& a, const ExtRat& b) { return det(a, b) <= 0; }
bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

int circular_orientation(const ExtRat& u, const ExtRat& v, const ExtRat& w) {
  const int s1 = det(u, v).sign();
  const int s2 = det(v, w).sign();
  const int s3 = det(w, u).sign();
  return s1 * s2 * s3;
}

bool in_open_arc(const ExtRat& a, const ExtRat& x, const ExtRat& b) {
  return circular_orientation(a, x, b) > 0;
}

ExtRat parse_extrat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return ExtRat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    return reduce(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad extended rational: '" + s + "'");
  }
}

std::string rat_str(const Rat& r) { return numerator(r).str() + "/" + denominator(r).str(); }

Rat parse_rat(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      Int n(s.substr(0, slash));
      Int d(s.substr(slash + 1));
      if (d == 0) throw std::invalid_argument("zero denominator");
      return make_rat(n, d);
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    // exact decimal: digits / 10^k
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Int scale = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
    return Rat(Int(digits), scale);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const ExtRat& v) { return os << v.str(); }

}  // namespace farey

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace farey {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A point of the extended rationals Q ∪ {∞}, stored reduced with den >= 0.
// ∞ is the single value 1/0 (there is one point at infinity on the circle).
struct ExtRat {
  Int num = 0;
  Int den = 1;

  ExtRat() = default;
  ExtRat(int n) : num(n) {}
  ExtRat(Int n) : num(std::move(n)) {}
  ExtRat(const Int& n, const Int& d);
  explicit ExtRat(const Rat& r);

  static ExtRat infinity();

  bool is_infinity() const { return den == 0; }
  bool is_integer() const { return den == 1; }

  Rat value() const;  // throws std::domain_error for ∞
  double to_double() const;

  std::string str() const;
};

// Canonical reduced form; sign carried by num, den >= 0, (0,0) rejected.
ExtRat reduce(Int num, Int den);

// num/den as an exact rational; accepts negative denominators, rejects zero.
Rat make_rat(Int num, Int den);

// det pairing u.num*v.den - u.den*v.num; zero iff u == v.
Int det(const ExtRat& u, const ExtRat& v);

bool operator==(const ExtRat& a, const ExtRat& b);
bool operator!=(const ExtRat& a, const ExtRat& b);
// Total order: finite values by real value, ∞ greater than everything.
bool operator<(const ExtRat& a, const ExtRat& b);
bool operator<=(const ExtRat& a, const ExtRat& b);
bool operator>(const ExtRat& a, const ExtRat& b);
bool operator>=(const ExtRat& a, const ExtRat& b);

// +1 if (u,v,w) is positively (counterclockwise) ordered on the circle
// R ∪ {∞}, -1 if negatively ordered, 0 if the points are not distinct.
int circular_orientation(const ExtRat& u, const ExtRat& v, const ExtRat& w);

// x strictly inside the open arc running counterclockwise from a to b.
bool in_open_arc(const ExtRat& a, const ExtRat& x, const ExtRat& b);

ExtRat parse_extrat(const std::string& s);  // "p/q" or "n"
std::string rat_str(const Rat& r);          // always "a/b"
Rat parse_rat(const std::string& s);        // "a/b", "a", or decimal "1.25"

std::ostream& operator<<(std::ostream& os, const ExtRat& v);

}  // namespace farey

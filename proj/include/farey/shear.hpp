#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "farey/farey.hpp"
#include "farey/rational.hpp"

namespace farey {

// A shear value; mult is the exact multiplier e^s when rational.
struct ShearValue {
  double log = 0.0;
  std::optional<Rat> mult = Rat(1);

  static ShearValue from_mult(const Rat& m);
  static ShearValue from_log(double s);
};

// Shear assignment on the Farey edges: zero by default, a finite sparse map,
// or the built-in example rule. Queries off the Farey triangulation are
// rejected.
class ShearFunction {
 public:
  static ShearFunction zero();
  static ShearFunction example();  // serialized name "paper-example"
  static ShearFunction sparse(std::map<GeodesicEdge, ShearValue> entries);

  ShearValue at(const GeodesicEdge& e) const;
  Rat mult_at(const GeodesicEdge& e) const;  // requires exact()
  bool exact() const;                        // every multiplier rational

  // Fan indices in [j_lo, j_hi] where the shear may be nonzero, ascending.
  // Everything outside the returned set is guaranteed to have multiplier 1.
  std::vector<Int> support_on_fan(const ExtRat& tip, const Int& j_lo, const Int& j_hi,
                                  const std::optional<GeodesicEdge>& anchor = {}) const;

  enum class Kind { zero, example, sparse };
  Kind kind() const { return kind_; }
  const std::map<GeodesicEdge, ShearValue>& entries() const { return entries_; }

 private:
  Kind kind_ = Kind::zero;
  std::map<GeodesicEdge, ShearValue> entries_;
  bool exact_ = true;
};

struct FanScanParams {
  std::vector<ExtRat> tips;
  Int k_lo = 0, k_hi = 0;  // inclusive
  Int n_max = 1;           // n ranges over [1, n_max]
};

// Horocyclic arc lengths α_j for j in [j_lo, j_hi] along the fan at tip,
// normalized so that α_{k-1} = 1: α_j = exp(P_j - P_{k-1}) where P is the
// running sum of the fan shears.
std::vector<double> fan_arc_lengths(const ShearFunction& s, const ExtRat& tip, const Int& k,
                                    const Int& j_lo, const Int& j_hi);
std::vector<Rat> fan_arc_mults(const ShearFunction& s, const ExtRat& tip, const Int& k,
                               const Int& j_lo, const Int& j_hi);

// s(k,n;p) = (α_k + ... + α_{k+n-1}) / (α_{k-1} + ... + α_{k-n}).
double fan_ratio(const ShearFunction& s, const ExtRat& tip, const Int& k, const Int& n);
Rat fan_ratio_exact(const ShearFunction& s, const ExtRat& tip, const Int& k, const Int& n);

struct QsWitness {
  ExtRat tip;
  Int k, n;
  double ratio = 1.0;
};

// Finite-window scan of the fan ratios; pass means no violation of
// 1/M <= s(k,n;p) <= M was found in the scanned window (not a proof beyond it).
struct QsCertificateReport {
  bool pass = false;
  double max_ratio = 1.0, min_ratio = 1.0;
  QsWitness max_at, min_at;
  double bound = 1.0;
};

QsCertificateReport check_qs_certificate(const ShearFunction& s, const FanScanParams& p, double M);

struct PsWitness {
  ExtRat tip;
  Int n, m;  // maximizing |sum_{j=n}^m s(E_j)|
};

// Windowed supremum of |partial fan shear sums|, computed from prefix
// extremes. sup_mult is the exact multiplier-space value exp(sup) when the
// shear has rational multipliers.
struct PsCertificateReport {
  double sup_abs_partial_sum = 0.0;
  std::optional<Rat> sup_mult;
  PsWitness witness;
};

PsCertificateReport check_ps_certificate(const ShearFunction& s, const FanScanParams& p);

}  // namespace farey

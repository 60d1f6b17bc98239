#include "farey/shear.hpp"

#include <cmath>
#include <stdexcept>

#include "farey/example_shear.hpp"

namespace farey {

ShearValue ShearValue::from_mult(const Rat& m) {
  if (m <= 0) throw std::invalid_argument("shear multiplier must be positive");
  return ShearValue{std::log(m.convert_to<double>()), m};
}

ShearValue ShearValue::from_log(double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("shear must be finite");
  return ShearValue{s, std::nullopt};
}

ShearFunction ShearFunction::zero() { return ShearFunction{}; }

ShearFunction ShearFunction::example() {
  ShearFunction f;
  f.kind_ = Kind::example;
  return f;
}

ShearFunction ShearFunction::sparse(std::map<GeodesicEdge, ShearValue> entries) {
  ShearFunction f;
  f.kind_ = Kind::sparse;
  for (const auto& [e, v] : entries) {
    if (!edge_in_farey(e)) {
      throw std::invalid_argument("shear entry off the Farey triangulation: " + edge_str(e));
    }
    if (v.mult && *v.mult <= 0) throw std::invalid_argument("shear multiplier must be positive");
    if (!v.mult) f.exact_ = false;
  }
  f.entries_ = std::move(entries);
  return f;
}

ShearValue ShearFunction::at(const GeodesicEdge& e) const {
  switch (kind_) {
    case Kind::zero:
      if (!edge_in_farey(e)) {
        throw std::invalid_argument("shear queried off the Farey triangulation: " + edge_str(e));
      }
      return ShearValue{};
    case Kind::example:
      return ShearValue::from_mult(example_shear_multiplier(e));
    case Kind::sparse: {
      if (!edge_in_farey(e)) {
        throw std::invalid_argument("shear queried off the Farey triangulation: " + edge_str(e));
      }
      const auto it = entries_.find(e);
      if (it == entries_.end()) return ShearValue{};
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

Rat ShearFunction::mult_at(const GeodesicEdge& e) const {
  const ShearValue v = at(e);
  if (!v.mult) throw std::domain_error("shear has no exact multiplier on " + edge_str(e));
  return *v.mult;
}

bool ShearFunction::exact() const { return exact_; }

std::vector<Int> ShearFunction::support_on_fan(const ExtRat& tip, const Int& j_lo, const Int& j_hi,
                                               const std::optional<GeodesicEdge>& anchor) const {
  std::vector<Int> out;
  if (j_lo > j_hi) return out;
  switch (kind_) {
    case Kind::zero:
      return out;
    case Kind::sparse: {
      const Fan fan = Fan::at(tip, anchor);
      for (const auto& [e, v] : entries_) {
        if (e.lo != tip && e.hi != tip) continue;
        const Int j = fan.index_of(e);
        if (j >= j_lo && j <= j_hi) out.push_back(j);
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    case Kind::example: {
      const Fan fan = Fan::at(tip, anchor);
      if (tip.is_infinity()) {
        // supported at the edges (±16^i, ∞)
        for (int sign : {-1, 1}) {
          Int p = 1;
          while (true) {
            const Int j = fan.index_of(make_edge(tip, ExtRat(Int(sign * p))));
            if ((sign < 0 && j < j_lo) || (sign > 0 && j > j_hi)) break;
            if (j >= j_lo && j <= j_hi) out.push_back(j);
            p *= 16;
          }
        }
        std::sort(out.begin(), out.end());
        return out;
      }
      // at a finite tip the only fan edge the rule can touch is (tip, ∞)
      if (tip.is_integer() && pow16_exponent(tip.num) && tip.num != 0) {
        const Int j = fan.index_of(make_edge(tip, ExtRat::infinity()));
        if (j >= j_lo && j <= j_hi) out.push_back(j);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// log-shear prefix sums P_j for j in [j_lo-1, j_hi]: P_j = P_{j_lo-1} + sum
// of fan shears over (j_lo..j], with P_{j_lo-1} = 0. Uses the support hint,
// so runs of multiplier-one edges cost nothing.
struct FanPrefix {
  Int base;                   // index of the first stored prefix (= j_lo - 1)
  std::vector<double> logs;   // P_{base}, ..., P_{j_hi}
  std::vector<Rat> mults;     // exact variant, empty unless exact

  double log_at(const Int& j) const { return logs[(j - base).convert_to<long>()]; }
  const Rat& mult_at(const Int& j) const { return mults[(j - base).convert_to<long>()]; }
};

FanPrefix fan_prefix(const ShearFunction& s, const ExtRat& tip, const Int& j_lo, const Int& j_hi,
                     bool want_exact) {
  if (j_lo > j_hi) throw std::invalid_argument("fan range empty");
  const Fan fan = Fan::at(tip);
  FanPrefix pre;
  pre.base = j_lo - 1;
  const long len = (j_hi - pre.base).convert_to<long>() + 1;
  pre.logs.assign(len, 0.0);
  if (want_exact) pre.mults.assign(len, Rat(1));

  double acc = 0.0;
  Rat acc_m = 1;
  long pos = 1;
  for (const Int& j : s.support_on_fan(tip, j_lo, j_hi)) {
    const long jp = (j - pre.base).convert_to<long>();
    for (; pos < jp; ++pos) {
      pre.logs[pos] = acc;
      if (want_exact) pre.mults[pos] = acc_m;
    }
    const ShearValue v = s.at(fan.edge(j));
    acc += v.log;
    if (want_exact) acc_m *= *v.mult;
    pre.logs[jp] = acc;
    if (want_exact) pre.mults[jp] = acc_m;
    pos = jp + 1;
  }
  for (; pos < len; ++pos) {
    pre.logs[pos] = acc;
    if (want_exact) pre.mults[pos] = acc_m;
  }
  return pre;
}

}  // namespace

std::vector<double> fan_arc_lengths(const ShearFunction& s, const ExtRat& tip, const Int& k,
                                    const Int& j_lo, const Int& j_hi) {
  const Int lo = min(j_lo, k), hi = max(j_hi, k - 1);
  const FanPrefix pre = fan_prefix(s, tip, lo, hi, false);
  const double center = pre.log_at(k - 1);
  std::vector<double> out;
  for (Int j = j_lo; j <= j_hi; ++j) out.push_back(std::exp(pre.log_at(j) - center));
  return out;
}

std::vector<Rat> fan_arc_mults(const ShearFunction& s, const ExtRat& tip, const Int& k,
                               const Int& j_lo, const Int& j_hi) {
  if (!s.exact()) throw std::domain_error("fan_arc_mults requires exact multipliers");
  const Int lo = min(j_lo, k), hi = max(j_hi, k - 1);
  const FanPrefix pre = fan_prefix(s, tip, lo, hi, true);
  const Rat center = pre.mult_at(k - 1);
  std::vector<Rat> out;
  for (Int j = j_lo; j <= j_hi; ++j) out.push_back(pre.mult_at(j) / center);
  return out;
}

double fan_ratio(const ShearFunction& s, const ExtRat& tip, const Int& k, const Int& n) {
  if (n < 1) throw std::invalid_argument("fan_ratio needs n >= 1");
  const auto alphas = fan_arc_lengths(s, tip, k, k - n, k + n - 1);
  double num = 0.0, den = 0.0;
  for (long i = 0; i < n; ++i) den += alphas[i];
  for (long i = n.convert_to<long>(); i < 2 * n; ++i) num += alphas[i];
  return num / den;
}

Rat fan_ratio_exact(const ShearFunction& s, const ExtRat& tip, const Int& k, const Int& n) {
  if (n < 1) throw std::invalid_argument("fan_ratio needs n >= 1");
  const auto alphas = fan_arc_mults(s, tip, k, k - n, k + n - 1);
  Rat num = 0, den = 0;
  for (long i = 0; i < n; ++i) den += alphas[i];
  for (long i = n.convert_to<long>(); i < 2 * n; ++i) num += alphas[i];
  return num / den;
}

QsCertificateReport check_qs_certificate(const ShearFunction& s, const FanScanParams& p, double M) {
  if (M < 1) throw std::invalid_argument("qs bound must be >= 1");
  if (p.tips.empty() || p.k_lo > p.k_hi || p.n_max < 1) {
    throw std::invalid_argument("bad fan scan parameters");
  }
  QsCertificateReport rep;
  rep.bound = M;
  bool first = true;
  for (const ExtRat& tip : p.tips) {
    const Int lo = p.k_lo - p.n_max, hi = p.k_hi + p.n_max - 1;
    const FanPrefix pre = fan_prefix(s, tip, lo, hi, false);
    // alpha partial sums: A_j = sum of α over (lo..j], α_j = e^{P_j - P_{k-1}}
    // computed per k below by shifting; to keep one pass we recompute the
    // exponentials once against a fixed center and rescale per k.
    const long len = (hi - lo).convert_to<long>() + 2;
    std::vector<double> alpha(len, 0.0), acc(len, 0.0);
    for (long i = 1; i < len; ++i) alpha[i] = std::exp(pre.logs[i] - pre.logs[0]);
    for (long i = 1; i < len; ++i) acc[i] = acc[i - 1] + alpha[i];
    const auto sum_range = [&](const Int& a, const Int& b) {  // sum α_j, j in [a,b]
      const long ia = (a - lo).convert_to<long>(), ib = (b - lo).convert_to<long>();
      return acc[ib + 1] - acc[ia];
    };
    for (Int k = p.k_lo; k <= p.k_hi; ++k) {
      for (Int n = 1; n <= p.n_max; ++n) {
        const double num = sum_range(k, k + n - 1);
        const double den = sum_range(k - n, k - 1);
        const double r = num / den;
        if (first || r > rep.max_ratio) {
          rep.max_ratio = r;
          rep.max_at = {tip, k, n, r};
        }
        if (first || r < rep.min_ratio) {
          rep.min_ratio = r;
          rep.min_at = {tip, k, n, r};
        }
        first = false;
      }
    }
  }
  rep.pass = !first && rep.max_ratio <= M && rep.min_ratio >= 1.0 / M;
  return rep;
}

PsCertificateReport check_ps_certificate(const ShearFunction& s, const FanScanParams& p) {
  if (p.tips.empty() || p.k_lo > p.k_hi) throw std::invalid_argument("bad fan scan parameters");
  PsCertificateReport rep;
  rep.witness = {p.tips.front(), p.k_lo, p.k_lo};
  if (s.exact()) rep.sup_mult = Rat(1);
  bool found = false;
  for (const ExtRat& tip : p.tips) {
    const Fan fan = Fan::at(tip);
    // prefix only changes at support indices; extremes live there
    double acc = 0.0, mx = 0.0, mn = 0.0;
    Rat acc_m = 1, mx_m = 1, mn_m = 1;
    Int mx_at = p.k_lo - 1, mn_at = p.k_lo - 1;
    for (const Int& j : s.support_on_fan(tip, p.k_lo, p.k_hi)) {
      const ShearValue v = s.at(fan.edge(j));
      acc += v.log;
      if (rep.sup_mult) acc_m *= *v.mult;
      if (acc > mx) {
        mx = acc;
        mx_at = j;
        if (rep.sup_mult) mx_m = acc_m;
      }
      if (acc < mn) {
        mn = acc;
        mn_at = j;
        if (rep.sup_mult) mn_m = acc_m;
      }
    }
    const double sup = mx - mn;
    if (!found || sup > rep.sup_abs_partial_sum) {
      rep.sup_abs_partial_sum = sup;
      rep.witness.tip = tip;
      rep.witness.n = min(mx_at, mn_at) + 1;
      rep.witness.m = max(mx_at, mn_at);
      if (rep.sup_mult) *rep.sup_mult = mx_m / mn_m;
      found = true;
    }
  }
  return rep;
}

}  // namespace farey

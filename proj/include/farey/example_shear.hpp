#pragma once

#include <optional>
#include <vector>

#include "farey/farey.hpp"
#include "farey/rational.hpp"

namespace farey {

// The running example: on the fan at ∞, the edges (−16^j, ∞) carry shear
// log 2 and the edges (16^j, ∞) carry −log 2 for j = 0, 1, 2, ...; every
// other Farey edge has shear zero. Multipliers are exactly 2, 1/2 or 1.

// 16^j | n, returns j >= 0 if |n| is a power of 16 (16^0 = 1 included).
std::optional<int> pow16_exponent(const Int& n);

// Exact multiplier e^{s(E)} of the rule above; throws for non-Farey edges.
Rat example_shear_multiplier(const GeodesicEdge& e);

// The induced boundary map, normalized to fix (0, 1, ∞) (equivalently the
// identity on [-1, 1]): piecewise affine with slope 2^{-(k+1)} on
// [16^k, 16^{k+1}] and odd. Exact on rational input.
Rat example_h(const Rat& x);
ExtRat example_h_ext(const ExtRat& x);

// Symmetric ratio (h(x+t) - h(x)) / (h(x) - h(x-t)) scanned over a sample
// grid, grouped by the shape of the sample:
//   full_block:       [x, x+t] contains some [16^{k-1}, 16^k]
//   near_zero:        x in [0, 1)
//   single_boundary:  16^{k-1} <= x <= 16^k <= x+t <= 16^{k+1}
//   interior:         no power of 16 in [x-t, x+t]
//   other:            anything else
// Bounds checked: full_block in [7/128, 64], everything in [1/512, 512].
enum class QsSampleCase { full_block, near_zero, single_boundary, interior, other };

struct QsSample {
  Rat x;
  Rat t;  // > 0, x > 0, x + t > 0
};

struct QsCaseExtremes {
  bool seen = false;
  Rat min_ratio, max_ratio;
  QsSample min_at, max_at;
};

struct QsScanReport {
  QsCaseExtremes global;
  QsCaseExtremes per_case[5];
  long samples = 0;
  bool pass = false;          // global within [1/512, 512]
  bool full_block_ok = true;  // full_block within [7/128, 64]
};

QsSampleCase classify_qs_sample(const Rat& x, const Rat& t);
Rat qs_symmetric_ratio(const Rat& x, const Rat& t);
QsScanReport qs_ratio_scan(const std::vector<QsSample>& grid);

// Deterministic sample grid: mantissa sweep times powers of 16 up to
// 16^max_pow, with a logarithmic t sweep; extra_seed adds jittered samples.
std::vector<QsSample> default_qs_grid(int max_pow, unsigned extra_seed = 0, int extra_samples = 0);

// The pinching falsifier. With the horocycle at ∞ of height 1, lambda
// lengths on the vertical edges at h(16^k) and h(16^k + 1) within [1/M, M]
// force Euclidean diameters in [M^-2, M^2]; the edge joining the two points
// (at distance 2^-(k+1)) then has lambda at most gap * M^2.
struct FalsifierReport {
  int k = 0;
  Rat gap;                         // h(16^k + 1) - h(16^k), exactly 2^-(k+1)
  Rat forced_lambda_upper_bound;   // gap * M^2
  bool fails_pinching = false;     // bound < 1/M
};

FalsifierReport not_pinched_falsifier(int k, const Rat& M);

const char* qs_case_name(QsSampleCase c);

}  // namespace farey

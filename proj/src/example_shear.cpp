#include "farey/example_shear.hpp"

#include <random>
#include <stdexcept>

namespace farey {

std::optional<int> pow16_exponent(const Int& n) {
  Int m = abs(n);
  if (m == 0) return std::nullopt;
  int j = 0;
  while (m % 16 == 0) {
    m /= 16;
    ++j;
  }
  if (m == 1) return j;
  return std::nullopt;
}

Rat example_shear_multiplier(const GeodesicEdge& e) {
  if (!edge_in_farey(e)) {
    throw std::invalid_argument("shear queried off the Farey triangulation: " + edge_str(e));
  }
  if (!e.hi.is_infinity() || !e.lo.is_integer()) return 1;
  const auto j = pow16_exponent(e.lo.num);
  if (!j) return 1;
  return e.lo.num > 0 ? Rat(1, 2) : Rat(2);
}

namespace {

Int pow_int(Int base, int e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// h(16^k) = (15 * 8^k - 1) / 14
Rat h_at_pow(int k) { return make_rat(Int(15 * pow_int(8, k) - 1), 14); }

// largest k with 16^k <= x, for x >= 1
int pow16_floor(const Rat& x) {
  int k = 0;
  Int p = 16;
  while (Rat(p) <= x) {
    ++k;
    p *= 16;
  }
  return k;
}

}  // namespace

Rat example_h(const Rat& x) {
  if (x < 0) return -example_h(-x);
  if (x <= 1) return x;
  const int k = pow16_floor(x);
  const Int p16k = pow_int(16, k);
  return h_at_pow(k) + (x - Rat(p16k)) / Rat(pow_int(2, k + 1));
}

ExtRat example_h_ext(const ExtRat& x) {
  if (x.is_infinity()) return x;
  return ExtRat(example_h(x.value()));
}

Rat qs_symmetric_ratio(const Rat& x, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("qs ratio needs t > 0");
  const Rat num = example_h(x + t) - example_h(x);
  const Rat den = example_h(x) - example_h(x - t);
  if (den <= 0) throw std::logic_error("example_h not increasing");
  return num / den;
}

QsSampleCase classify_qs_sample(const Rat& x, const Rat& t) {
  if (x < 1 && x >= 0) return QsSampleCase::near_zero;
  // powers of 16 inside [x, x+t] and inside [x-t, x]
  const Rat hi = x + t, lo = x - t;
  // find k >= 0 with 16^k in (x, hi]; also 16^{k-1} for the block test
  int k = 0;
  Int p = 1;
  bool contains_block = false;
  bool single_boundary = false;
  int boundaries_right = 0;
  while (Rat(p) <= hi) {
    if (Rat(p) >= x) {
      ++boundaries_right;
      if (k >= 1 && Rat(p) / 16 >= x) contains_block = true;
    }
    ++k;
    p *= 16;
  }
  if (contains_block) return QsSampleCase::full_block;
  if (boundaries_right == 1) {
    // exactly one power 16^k in [x, x+t]; check 16^{k-1} <= x and x+t <= 16^{k+1}
    single_boundary = true;
  }
  if (single_boundary) return QsSampleCase::single_boundary;
  // interior: no power of 16 in [x-t, x+t] (negative side uses oddness)
  bool any = false;
  Int q = 1;
  while (Rat(q) <= hi) {
    if (Rat(q) >= lo || Rat(-q) >= lo) {
      if ((Rat(q) >= lo && Rat(q) <= hi) || (Rat(-q) >= lo && Rat(-q) <= hi)) any = true;
    }
    q *= 16;
  }
  return any ? QsSampleCase::other : QsSampleCase::interior;
}

namespace {

void record(QsCaseExtremes& e, const Rat& r, const QsSample& s) {
  if (!e.seen || r < e.min_ratio) {
    e.min_ratio = r;
    e.min_at = s;
  }
  if (!e.seen || r > e.max_ratio) {
    e.max_ratio = r;
    e.max_at = s;
  }
  e.seen = true;
}

}  // namespace

QsScanReport qs_ratio_scan(const std::vector<QsSample>& grid) {
  QsScanReport rep;
  const Rat global_lo(1, 512), global_hi(512);
  const Rat block_lo(7, 128), block_hi(64);
  for (const auto& s : grid) {
    if (s.t <= 0 || s.x <= 0 || s.x + s.t <= 0) {
      throw std::invalid_argument("qs sample needs x > 0, t > 0");
    }
    const Rat r = qs_symmetric_ratio(s.x, s.t);
    const QsSampleCase c = classify_qs_sample(s.x, s.t);
    record(rep.global, r, s);
    record(rep.per_case[static_cast<int>(c)], r, s);
    if (c == QsSampleCase::full_block && (r < block_lo || r > block_hi)) rep.full_block_ok = false;
    ++rep.samples;
  }
  rep.pass = rep.global.seen && rep.global.min_ratio >= global_lo && rep.global.max_ratio <= global_hi;
  return rep;
}

std::vector<QsSample> default_qs_grid(int max_pow, unsigned extra_seed, int extra_samples) {
  std::vector<QsSample> grid;
  Int p = 1;
  for (int k = 0; k <= max_pow; ++k) {
    for (int m = 4; m < 64; m += 3) {
      const Rat x = Rat(m, 4) * Rat(p);
      for (int i = -8; i <= 2; ++i) {
        const Rat t = i >= 0 ? x * Rat(pow_int(2, i)) : x / Rat(pow_int(2, -i));
        grid.push_back({x, t});
      }
    }
    p *= 16;
  }
  if (extra_samples > 0) {
    std::mt19937_64 rng(extra_seed);
    std::uniform_int_distribution<int> mant(1, 1 << 20);
    std::uniform_int_distribution<int> po(0, max_pow);
    std::uniform_int_distribution<int> sh(0, 24);
    for (int i = 0; i < extra_samples; ++i) {
      const Rat x = Rat(mant(rng), 1 << 10) * Rat(pow_int(16, po(rng)));
      const Rat t = x * Rat(mant(rng)) / Rat(pow_int(2, sh(rng)));
      grid.push_back({x, t});
    }
  }
  return grid;
}

FalsifierReport not_pinched_falsifier(int k, const Rat& M) {
  if (k < 1) throw std::invalid_argument("falsifier needs k >= 1");
  if (M <= 1) throw std::invalid_argument("falsifier needs M > 1");
  FalsifierReport rep;
  rep.k = k;
  const Rat xk = Rat(pow_int(16, k));
  rep.gap = example_h(xk + 1) - example_h(xk);
  rep.forced_lambda_upper_bound = rep.gap * M * M;
  rep.fails_pinching = rep.forced_lambda_upper_bound < 1 / M;
  return rep;
}

const char* qs_case_name(QsSampleCase c) {
  switch (c) {
    case QsSampleCase::full_block: return "full_block";
    case QsSampleCase::near_zero: return "near_zero";
    case QsSampleCase::single_boundary: return "single_boundary";
    case QsSampleCase::interior: return "interior";
    case QsSampleCase::other: return "other";
  }
  return "?";
}

}  // namespace farey

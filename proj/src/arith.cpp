#include "rspin/arith.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rspin/util.hpp"

namespace rspin::arith {

using detail::require;

LevelParams::LevelParams(int g_, int r_, int n_) : g(g_), r(r_), n(n_) {
  require(g >= 0, "LevelParams: genus must be >= 0");
  require(r >= 1, "LevelParams: level must be >= 1");
  require(n >= 0, "LevelParams: marked-point count must be >= 0");
}

static void check_twist_count(const LevelParams& p, const TwistVector& m) {
  require(static_cast<int>(m.size()) == p.n,
          "twist vector length must equal the marked-point count");
}

long long ell(const LevelParams& p, const TwistVector& m) {
  check_twist_count(p, m);
  if (p.g == 0) return 1;
  long long seed = p.g == 1 ? p.r : std::gcd<long long, long long>(2, p.r);
  return detail::gcd_all(seed, m);
}

long long component_count(const LevelParams& p, const TwistVector& m) {
  long long l = ell(p, m);
  long long count = 0;
  for (long long d = 1; d <= l; ++d)
    if (l % d == 0) ++count;
  return count;
}

long long exact_order_count(long long r, long long d) {
  require(r >= 1 && d >= 1 && r % d == 0, "exact_order_count: need d | r");
  long long k = r / d;
  long long v = k * k;
  long long rest = k;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    v = v / (p * p) * (p * p - 1);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) v = v / (rest * rest) * (rest * rest - 1);
  return v;
}

ParityCounts parity_counts(int g, long long r) {
  require(g >= 1, "parity_counts: need g >= 1");
  require(r >= 2 && r % 2 == 0, "parity_counts: level must be even");
  // r^{2g} (2^g +- 1) / 2^{g+1}; r even makes both quotients exact.
  long long total = detail::ipow(r, 2 * g);
  long long half = detail::ipow(2, g + 1);
  ParityCounts pc;
  pc.even = total / half * (detail::ipow(2, g) + 1);
  pc.odd = total / half * (detail::ipow(2, g) - 1);
  return pc;
}

bool exists_spin(const LevelParams& p, const TwistVector& m) {
  check_twist_count(p, m);
  long long sum = 0;
  for (long long t : m) sum += t;
  return detail::mod(2 * p.g - 2 - sum, p.r) == 0;
}

TwistVector normalize_twists(long long r, const TwistVector& m) {
  require(r >= 1, "normalize_twists: level must be >= 1");
  TwistVector out;
  out.reserve(m.size());
  for (long long t : m) out.push_back(detail::mod(t, r));
  return out;
}

TranslationCoefficients translation_coefficients(const LevelParams& p,
                                                 const TwistVector& m) {
  check_twist_count(p, m);
  require(p.g >= 1, "translation_coefficients: need g >= 1");
  require(p.n <= 30, "translation_coefficients: too many marked points");
  std::set<long long> vals;
  for (int g1 = 0; g1 < p.g; ++g1) {
    for (unsigned mask = 0; mask < (1u << p.n); ++mask) {
      long long t = 2 * g1;
      for (int i = 0; i < p.n; ++i)
        if (mask >> i & 1) t -= m[i];
      vals.insert(detail::mod(t, p.r));
    }
  }
  TranslationCoefficients tc;
  tc.values.assign(vals.begin(), vals.end());
  tc.gcd_with_r = detail::gcd_all(p.r, tc.values);
  return tc;
}

}  // namespace rspin::arith

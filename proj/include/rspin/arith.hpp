#pragma once

#include <vector>

namespace rspin::arith {

// Discrete parameters of a level-r twisted-spin moduli problem: genus g,
// level r >= 1, and n marked points carrying integer twists.
struct LevelParams {
  int g;
  int r;
  int n;

  LevelParams(int g_, int r_, int n_);

  // 2g-2+n > 0; the moduli-level operations require this, the plain
  // arithmetic helpers do not.
  bool stable() const { return 2 * g - 2 + n > 0; }
};

using TwistVector = std::vector<long long>;

// gcd invariant controlling the component group of the moduli:
// 1 for g=0, gcd(r, m_1..m_n) for g=1, gcd(2, r, m_1..m_n) for g>=2.
long long ell(const LevelParams& p, const TwistVector& m);

// Number of connected components = number of divisors of ell.
long long component_count(const LevelParams& p, const TwistVector& m);

// Number of elements of exact order r/d in (Z/r)^2, i.e. pairs with
// gcd(r, a, b) = d.  Requires d | r.
long long exact_order_count(long long r, long long d);

struct ParityCounts {
  long long even;
  long long odd;
};

// Sizes of the two parity classes of (Z/r)^{2g} for even r:
// r^{2g} (1/2 +- 2^{-(g+1)}), computed exactly.
ParityCounts parity_counts(int g, long long r);

// Non-emptiness of the moduli: r | 2g - 2 - sum(m).
bool exists_spin(const LevelParams& p, const TwistVector& m);

// Least non-negative residues mod r.
TwistVector normalize_twists(long long r, const TwistVector& m);

struct TranslationCoefficients {
  std::vector<long long> values;  // sorted residues mod r
  long long gcd_with_r;
};

// All residues (2*g1 - sum_{k in S} m_k) mod r over 0 <= g1 <= g-1 and
// subsets S of the marked points: the translation amounts realized by
// bounding-pair twists.  Requires g >= 1.
TranslationCoefficients translation_coefficients(const LevelParams& p,
                                                 const TwistVector& m);

}  // namespace rspin::arith

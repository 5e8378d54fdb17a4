#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rspin {
namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline long long ipow(long long base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

// gcd over a seed and a vector; gcd(x, 0) = x, all inputs taken |.|
inline long long gcd_all(long long seed, const std::vector<long long>& vals) {
  long long g = seed < 0 ? -seed : seed;
  for (long long v : vals) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

// least non-negative residue
inline long long mod(long long a, long long m) {
  long long v = a % m;
  return v < 0 ? v + m : v;
}

}  // namespace detail
}  // namespace rspin

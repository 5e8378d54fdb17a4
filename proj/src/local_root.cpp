#include "rspin/local_root.hpp"

#include <numeric>

#include "rspin/util.hpp"

namespace rspin::local_root {

using detail::require;

static void check_pair(int u, int v, const char* who) {
  require((u == 0) == (v == 0),
          std::string(who) + ": branch orders must be both zero or both positive");
  require(u >= 0 && v >= 0, std::string(who) + ": branch orders must be >= 0");
}

PowerExponents power_exponents(int u, int v, int d) {
  check_pair(u, v, "power_exponents");
  require(d >= 1, "power_exponents: power must be >= 1");
  PowerExponents e;
  if (u == 0 && v == 0) return e;
  int s = u + v;
  e.u_rem = (d * u) % s;
  e.v_rem = (d * v) % s;
  e.u_quot = (d * u - e.u_rem) / s;
  e.v_quot = (d * v - e.v_rem) / s;
  return e;
}

Order order_of_root(Order o, int r, int d) {
  check_pair(o.u, o.v, "order_of_root");
  require(r >= 1 && d >= 1 && r % d == 0, "order_of_root: need d | r");
  require(o.locally_free() || o.u + o.v == r,
          "order_of_root: singular orders must sum to the level");
  Order out;
  if (o.locally_free()) return out;
  out.u = o.u % d;
  out.v = o.v % d;
  // residues of a pair summing to r = 0 mod d: both zero or summing to d
  return out;
}

RootSearch root_exists(int i, int j, int d) {
  check_pair(i, j, "root_exists");
  require(d >= 1, "root_exists: power must be >= 1");
  RootSearch rs;
  if (i == 0 && j == 0) {
    rs.exists = true;
    rs.unique_root = Order{0, 0};
    return rs;
  }
  int s = i + j;
  int e = std::gcd(d, s);
  rs.exists = (i % e == 0);  // then automatically j % e == 0
  if (rs.exists && e == 1) {
    // d is invertible mod s; the unique solution pair with x + y = s
    int x = 0;
    for (int c = 1; c < s; ++c)
      if ((d * c) % s == i % s) {
        x = c;
        break;
      }
    rs.unique_root = Order{x, s - x};
  }
  return rs;
}

int ramification_index(Order o, int r) {
  check_pair(o.u, o.v, "ramification_index");
  require(!o.locally_free(),
          "ramification_index: undefined for locally free orders");
  require(o.u + o.v == r, "ramification_index: orders must sum to the level");
  return r / std::gcd(o.u, o.v);
}

int gluing_multiplicity(Order o) {
  check_pair(o.u, o.v, "gluing_multiplicity");
  require(!o.locally_free(),
          "gluing_multiplicity: undefined for locally free orders");
  return std::gcd(o.u, o.v);
}

long long cokernel_length(int u, int v, int d) {
  PowerExponents e = power_exponents(u, v, d);
  if (u == 0 && v == 0) return 0;
  long long len = e.u_quot + e.v_quot;
  return e.free_target() ? len - 1 : len;
}

bool coherence_check(int u, int v, int t, int f) {
  check_pair(u, v, "coherence_check");
  require(t >= 1 && f >= 1, "coherence_check: powers must be >= 1");
  PowerExponents first = power_exponents(u, v, t);
  PowerExponents direct = power_exponents(u, v, t * f);
  int mid_u = first.u_rem, mid_v = first.v_rem;
  if (mid_u == 0 && mid_v == 0)
    return direct.free_target();
  PowerExponents second = power_exponents(mid_u, mid_v, f);
  return second.u_rem == direct.u_rem && second.v_rem == direct.v_rem;
}

}  // namespace rspin::local_root

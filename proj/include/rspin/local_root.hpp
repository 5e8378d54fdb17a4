#pragma once

#include <optional>

namespace rspin::local_root {

// Vanishing orders of an r-th root at the two branches of a node.
// Either both entries are positive and sum to r (torsion-free, non-free
// local structure) or both are zero (locally free).
struct Order {
  int u = 0;
  int v = 0;

  bool locally_free() const { return u == 0 && v == 0; }
};

// Exponent data of the d-th power map out of the local module with
// primitive branch orders (u, v), s = u + v:
//   u_rem, v_rem: smallest non-negative residues of d*u, d*v mod s
//                 (the branch orders of the target module),
//   u_quot, v_quot: the complementary quotients (d*u - u_rem)/s etc.
// Either u_rem = v_rem = 0 and u_quot + v_quot = d (free target), or
// u_rem + v_rem = s and u_quot + v_quot = d - 1.
struct PowerExponents {
  int u_rem = 0;
  int v_rem = 0;
  int u_quot = 0;
  int v_quot = 0;

  bool free_target() const { return u_rem == 0 && v_rem == 0; }
};

// Requires u, v both positive or both zero, d >= 1.
PowerExponents power_exponents(int u, int v, int d);

// Branch orders of the d-th layer of a level-r net whose top layer has
// order o: entries reduced mod d and normalized to sum to d (or both 0).
// Requires d | r.
Order order_of_root(Order o, int r, int d);

struct RootSearch {
  bool exists = false;
  // Set when gcd(d, i+j) = 1 and (i,j) != (0,0): the unique positive
  // branch orders (x, y) with x + y = i + j of a d-th root.
  std::optional<Order> unique_root;
};

// Does the local module with branch orders (i, j) admit a d-th root?
// True iff d*x = i and d*y = j (mod i+j) are solvable in positive
// integers.  (i, j) = (0, 0) always has the free root.
RootSearch root_exists(int i, int j, int d);

// How many times the smoothing parameter of the node gets ramified by
// the root: r / gcd(u, v).  Rejects locally free orders.
int ramification_index(Order o, int r);

// Number of gluing choices at a non-separating node: gcd(u, v).
// Rejects locally free orders.
int gluing_multiplicity(Order o);

// Length of the cokernel of the d-th power map at the node fibre:
// u_quot + v_quot over a non-free target, u_quot + v_quot - 1 over a
// free target, 0 for a free source.  Equals d - 1 for singular sources.
long long cokernel_length(int u, int v, int d);

// Composing the power maps with factors t then f matches the single
// power map with factor t*f on target branch orders (with a free
// intermediate module forcing a free final target).
bool coherence_check(int u, int v, int t, int f);

}  // namespace rspin::local_root

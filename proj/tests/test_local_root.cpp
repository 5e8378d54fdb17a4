#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "rspin/local_root.hpp"

using namespace rspin::local_root;

TEST_CASE("power exponents on hand-worked cases") {
  auto e = power_exponents(3, 2, 4);
  CHECK(e.u_rem == 2);
  CHECK(e.v_rem == 3);
  CHECK(e.u_quot == 2);
  CHECK(e.v_quot == 1);
  CHECK_FALSE(e.free_target());

  auto f = power_exponents(2, 2, 2);
  CHECK(f.u_rem == 0);
  CHECK(f.v_rem == 0);
  CHECK(f.u_quot == 1);
  CHECK(f.v_quot == 1);
  CHECK(f.free_target());

  auto z = power_exponents(0, 0, 5);
  CHECK(z.free_target());
  CHECK(z.u_quot == 0);

  CHECK_THROWS_AS(power_exponents(1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(power_exponents(0, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(power_exponents(1, 1, 0), std::invalid_argument);
}

TEST_CASE("exponent dichotomy") {
  for (int s = 2; s <= 12; ++s)
    for (int u = 1; u < s; ++u)
      for (int d = 1; d <= 12; ++d) {
        auto e = power_exponents(u, s - u, d);
        CHECK(e.u_rem >= 0);
        CHECK(e.v_rem >= 0);
        if (e.free_target()) {
          CHECK(e.u_quot + e.v_quot == d);
        } else {
          CHECK(e.u_rem + e.v_rem == s);
          CHECK(e.u_quot + e.v_quot == d - 1);
        }
        CHECK(e.u_quot * s + e.u_rem == d * u);
        CHECK(e.v_quot * s + e.v_rem == d * (s - u));
      }
}

TEST_CASE("layer orders of a root") {
  CHECK(order_of_root({3, 2}, 5, 5).u == 3);
  CHECK(order_of_root({3, 2}, 5, 5).v == 2);
  CHECK(order_of_root({3, 2}, 5, 1).locally_free());
  CHECK(order_of_root({2, 4}, 6, 3).u == 2);
  CHECK(order_of_root({2, 4}, 6, 3).v == 1);
  CHECK(order_of_root({2, 4}, 6, 2).locally_free());
  CHECK(order_of_root({0, 0}, 6, 3).locally_free());
  CHECK_THROWS_AS(order_of_root({2, 4}, 6, 4), std::invalid_argument);
  CHECK_THROWS_AS(order_of_root({2, 3}, 6, 3), std::invalid_argument);

  // agreement with the power-map route: the (r/d)-th power of the top
  // layer has branch orders (r/d) * (layer orders)
  for (int r = 2; r <= 24; ++r)
    for (int d = 1; d <= r; ++d) {
      if (r % d) continue;
      for (int u = 1; u < r; ++u) {
        Order layer = order_of_root({u, r - u}, r, d);
        auto e = power_exponents(u, r - u, r / d);
        CHECK(layer.u * (r / d) == e.u_rem);
        CHECK(layer.v * (r / d) == e.v_rem);
        if (!layer.locally_free()) CHECK(layer.u + layer.v == d);
      }
    }
}

TEST_CASE("root existence and uniqueness") {
  CHECK_FALSE(root_exists(1, 1, 2).exists);
  CHECK(root_exists(2, 2, 2).exists);
  CHECK_FALSE(root_exists(2, 2, 2).unique_root.has_value());

  auto rs = root_exists(3, 2, 4);  // gcd(4, 5) = 1
  CHECK(rs.exists);
  REQUIRE(rs.unique_root.has_value());
  CHECK(rs.unique_root->u == 2);  // 4*2 = 8 = 3 mod 5
  CHECK(rs.unique_root->v == 3);

  auto z = root_exists(0, 0, 7);
  CHECK(z.exists);
  REQUIRE(z.unique_root.has_value());
  CHECK(z.unique_root->locally_free());

  // uniqueness certificate really is a root
  for (int s = 2; s <= 15; ++s)
    for (int i = 1; i < s; ++i)
      for (int d = 1; d <= 12; ++d) {
        auto r = root_exists(i, s - i, d);
        if (!r.unique_root || r.unique_root->locally_free()) continue;
        auto e = power_exponents(r.unique_root->u, r.unique_root->v, d);
        CHECK(e.u_rem == i);
        CHECK(e.v_rem == s - i);
      }
}

TEST_CASE("ramification and gluing") {
  CHECK(ramification_index({2, 4}, 6) == 3);
  CHECK(gluing_multiplicity({2, 4}) == 2);
  CHECK(ramification_index({1, 5}, 6) == 6);
  CHECK(gluing_multiplicity({1, 5}) == 1);
  CHECK_THROWS_AS(ramification_index({0, 0}, 6), std::invalid_argument);
  CHECK_THROWS_AS(ramification_index({2, 3}, 6), std::invalid_argument);
  CHECK_THROWS_AS(gluing_multiplicity({0, 0}), std::invalid_argument);
  for (int r = 2; r <= 12; ++r)
    for (int u = 1; u < r; ++u)
      CHECK(ramification_index({u, r - u}, r) * gluing_multiplicity({u, r - u}) ==
            r);
}

TEST_CASE("cokernel length") {
  CHECK(cokernel_length(3, 2, 4) == 3);
  CHECK(cokernel_length(2, 2, 2) == 1);
  CHECK(cokernel_length(0, 0, 7) == 0);
  for (int s = 2; s <= 12; ++s)
    for (int u = 1; u < s; ++u)
      for (int d = 1; d <= 12; ++d)
        CHECK(cokernel_length(u, s - u, d) == d - 1);
}

TEST_CASE("tower coherence") {
  CHECK(coherence_check(3, 2, 2, 2));
  CHECK(coherence_check(1, 1, 2, 3));
  CHECK(coherence_check(0, 0, 4, 5));
  for (int s = 2; s <= 10; ++s)
    for (int u = 1; u < s; ++u)
      for (int t = 1; t <= 6; ++t)
        for (int f = 1; f <= 6; ++f)
          CHECK(coherence_check(u, s - u, t, f));
}

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rspin/local_root.hpp"
#include "rspin/rewrite.hpp"

using namespace rspin::rewrite;

namespace {

Monomial mono(long long c, int xe, int ye, int te, Gen g) {
  Monomial m;
  m.coef = c;
  m.xe = xe;
  m.ye = ye;
  m.te = te;
  m.gen = g;
  return m;
}

}  // namespace

TEST_CASE("ring presentations validate") {
  CHECK_NOTHROW(LocalRing(5, 2, 3));
  CHECK_NOTHROW(LocalRing::free_ring(4));
  CHECK(LocalRing::free_ring(4).free_module);
  CHECK_FALSE(LocalRing(5, 2, 3).free_module);
  CHECK_THROWS_AS(LocalRing(5, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(LocalRing(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(LocalRing(5, -1, 6), std::invalid_argument);
}

TEST_CASE("single rewrite rules") {
  LocalRing ring(5, 2, 3);

  auto nf = normal_form(ring, make_element(mono(1, 1, 1, 0, Gen::Zeta1)));
  REQUIRE(nf.terms.size() == 1);
  CHECK(nf.terms[0].xe == 0);
  CHECK(nf.terms[0].ye == 0);
  CHECK(nf.terms[0].te == 5);
  CHECK(nf.terms[0].gen == Gen::Zeta1);

  nf = normal_form(ring, make_element(mono(1, 1, 0, 0, Gen::Zeta2)));
  REQUIRE(nf.terms.size() == 1);
  CHECK(nf.terms[0].te == 3);
  CHECK(nf.terms[0].gen == Gen::Zeta1);

  nf = normal_form(ring, make_element(mono(1, 0, 1, 0, Gen::Zeta1)));
  REQUIRE(nf.terms.size() == 1);
  CHECK(nf.terms[0].te == 2);
  CHECK(nf.terms[0].gen == Gen::Zeta2);

  // x stays on zeta1, y stays on zeta2
  nf = normal_form(ring, make_element(mono(1, 3, 0, 0, Gen::Zeta1)));
  REQUIRE(nf.terms.size() == 1);
  CHECK(nf.terms[0].xe == 3);
  CHECK(nf.terms[0].gen == Gen::Zeta1);
}

TEST_CASE("normal forms merge and cancel") {
  LocalRing ring(4, 1, 3);
  ModuleElement e;
  e.terms.push_back(mono(2, 1, 1, 0, Gen::Zeta1));   // -> 2 tau^4 zeta1
  e.terms.push_back(mono(-2, 0, 0, 4, Gen::Zeta1));  // cancels
  CHECK(normal_form(ring, e).is_zero());

  ModuleElement f;
  f.terms.push_back(mono(1, 1, 0, 0, Gen::Zeta2));  // -> tau^3 zeta1
  f.terms.push_back(mono(5, 0, 0, 3, Gen::Zeta1));
  auto nf = normal_form(ring, f);
  REQUIRE(nf.terms.size() == 1);
  CHECK(nf.terms[0].coef == 6);
}

TEST_CASE("free ring collapses generators") {
  LocalRing ring = LocalRing::free_ring(3);
  auto nf = normal_form(ring, make_element(mono(1, 2, 1, 0, Gen::Zeta1)));
  REQUIRE(nf.terms.size() == 1);
  CHECK(nf.terms[0].gen == Gen::ZetaFree);
  CHECK(nf.terms[0].xe == 1);
  CHECK(nf.terms[0].te == 3);
}

TEST_CASE("random-order reduction is confluent") {
  std::mt19937 rng(20240811);
  std::vector<LocalRing> rings;
  for (int s = 1; s <= 8; ++s) {
    rings.push_back(LocalRing::free_ring(s));
    for (int a = 1; a < s; ++a) rings.emplace_back(s, a, s - a);
  }
  for (const LocalRing& ring : rings) {
    for (int trial = 0; trial < 60; ++trial) {
      ModuleElement e;
      int nterms = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < nterms; ++t) {
        Gen g = ring.free_module
                    ? Gen::ZetaFree
                    : (rng() % 2 ? Gen::Zeta1 : Gen::Zeta2);
        e.terms.push_back(mono(static_cast<long long>(rng() % 7) - 3,
                               static_cast<int>(rng() % 4),
                               static_cast<int>(rng() % 4),
                               static_cast<int>(rng() % 3), g));
      }
      ModuleElement a = normal_form(ring, e);
      ModuleElement b = normal_form_random(ring, e, rng);
      CHECK(equal(ring, a, b));
    }
  }
}

TEST_CASE("tau specialization and printing") {
  LocalRing ring(5, 2, 3);
  ModuleElement e;
  e.terms.push_back(mono(3, 2, 0, 1, Gen::Zeta1));
  e.terms.push_back(mono(-1, 0, 1, 0, Gen::Zeta2));
  CHECK(to_string(e) == "3*x^2*tau*zeta1 -y*zeta2");
  auto sp = specialize_tau_zero(e);
  REQUIRE(sp.terms.size() == 1);
  CHECK(sp.terms[0].coef == -1);
  CHECK(to_string(ModuleElement{}) == "0");
  CHECK(to_string(make_element(mono(1, 0, 0, 4, Gen::ZetaFree))) == "tau^4*zeta");
  CHECK(to_string(make_element(mono(1, 0, 0, 0, Gen::Zeta1))) == "zeta1");
  ModuleElement sum;
  sum.terms.push_back(mono(1, 1, 0, 0, Gen::Zeta1));
  sum.terms.push_back(mono(2, 0, 0, 1, Gen::Zeta2));
  CHECK(to_string(sum) == "x*zeta1 + 2*tau*zeta2");
}

TEST_CASE("power map images on a worked example") {
  // branch orders (3, 2), power 4: quotients (2, 1)
  CHECK(to_string(power_map_image(3, 2, 4, 0)) == "x^2*zeta1");
  CHECK(to_string(power_map_image(3, 2, 4, 1)) == "x*tau^2*zeta1");
  CHECK(to_string(power_map_image(3, 2, 4, 2)) == "tau^4*zeta1");
  CHECK(to_string(power_map_image(3, 2, 4, 3)) == "tau^3*zeta2");
  CHECK(to_string(power_map_image(3, 2, 4, 4)) == "y*zeta2");

  // free target: branch orders (1, 1), power 2
  CHECK(to_string(power_map_image(1, 1, 2, 0)) == "x*zeta");
  CHECK(to_string(power_map_image(1, 1, 2, 1)) == "tau*zeta");
  CHECK(to_string(power_map_image(1, 1, 2, 2)) == "y*zeta");

  // free source: everything lands on zeta
  CHECK(to_string(power_map_image(0, 0, 3, 1)) == "zeta");

  // orders (1, 4), power 2: quotients (0, 1), the y-family takes over early
  CHECK(to_string(power_map_image(1, 4, 2, 0)) == "zeta1");
  CHECK(to_string(power_map_image(1, 4, 2, 1)) == "tau*zeta2");
  CHECK(to_string(power_map_image(1, 4, 2, 2)) == "y*zeta2");

  // the two families tile every index: images are never zero
  for (int s = 2; s <= 8; ++s)
    for (int u = 1; u < s; ++u)
      for (int d = 1; d <= 8; ++d)
        for (int k = 0; k <= d; ++k)
          CHECK_FALSE(power_map_image(u, s - u, d, k).is_zero());

  CHECK_THROWS_AS(power_map_image(1, 1, 2, 3), std::invalid_argument);
}

TEST_CASE("power map relations verify") {
  for (int s = 2; s <= 10; ++s)
    for (int u = 1; u < s; ++u)
      for (int d = 1; d <= 10; ++d) {
        auto rep = verify_power_map(u, s - u, d);
        CHECK(rep.ok);
        CHECK(rep.relations.size() >=
              static_cast<size_t>(2 * d));  // x- and y-families
      }
  auto rep = verify_power_map(0, 0, 5);
  CHECK(rep.ok);
  CHECK(rep.relations.empty());

  auto named = verify_power_map(3, 2, 2);
  REQUIRE_FALSE(named.relations.empty());
  CHECK(named.relations[0].name == "x*phi(1) = tau^2*phi(0)");
  CHECK(named.relations[0].ok);
}

TEST_CASE("composition agrees with the direct power map") {
  for (int s = 2; s <= 8; ++s)
    for (int u = 1; u < s; ++u)
      for (int t = 1; t <= 4; ++t)
        for (int f = 1; f <= 4; ++f) {
          LocalRing final_ring = target_ring(u, s - u, t * f);
          for (int k = 0; k <= t * f; ++k) {
            ModuleElement direct =
                normal_form(final_ring, power_map_image(u, s - u, t * f, k));
            ModuleElement via = composed_power_image(u, s - u, t, f, k);
            CHECK(equal(final_ring, direct, via));
          }
        }
  // free source composes trivially
  CHECK(to_string(composed_power_image(0, 0, 2, 3, 4)) == "zeta");
}

#pragma once

#include <random>
#include <string>
#include <vector>

#include "rspin/local_root.hpp"

namespace rspin::rewrite {

// Which module generator a monomial sits on.
enum class Gen : int { ZetaFree = 0, Zeta1 = 1, Zeta2 = 2 };

// Presentation of the local module over base[x, y, tau]/(x*y - tau^s):
// free (one generator zeta) or two generators zeta1, zeta2 with
//   x * zeta2 = tau^v_rem * zeta1,   y * zeta1 = tau^u_rem * zeta2.
struct LocalRing {
  int s;
  int u_rem;
  int v_rem;
  bool free_module;

  LocalRing(int s_, int u_rem_, int v_rem_);
  static LocalRing free_ring(int s_);
};

// c * x^xe * y^ye * tau^te * gen.  Normal forms never keep both x and y.
struct Monomial {
  long long coef = 0;
  int xe = 0;
  int ye = 0;
  int te = 0;
  Gen gen = Gen::ZetaFree;
};

// Formal integer combination of monomials; kept sorted and merged by
// normal_form / canonicalize.
struct ModuleElement {
  std::vector<Monomial> terms;

  bool is_zero() const { return terms.empty(); }
};

ModuleElement make_element(Monomial m);

// Multiply every term by c * x^dx * y^dy * tau^dt (no reduction).
ModuleElement scale(const ModuleElement& e, long long c, int dx, int dy, int dt);

// Confluent reduction: x*y -> tau^s, then the branch rules (non-free
// rings only), then sort/merge.  Result is the canonical normal form.
ModuleElement normal_form(const LocalRing& ring, const ModuleElement& e);

// Same fixed point reached by applying eligible single rewrite steps in
// random order; exercises confluence.
ModuleElement normal_form_random(const LocalRing& ring, const ModuleElement& e,
                                 std::mt19937& rng);

bool equal(const LocalRing& ring, const ModuleElement& a, const ModuleElement& b);

// Drop every monomial with a positive tau exponent (the special fibre).
ModuleElement specialize_tau_zero(const ModuleElement& e);

// "3*x^2*tau*zeta1", "-y*zeta2", "0", ...
std::string to_string(const ModuleElement& e);

// Ring presentation of the target of the d-th power map out of the
// module with branch orders (u, v).
LocalRing target_ring(int u, int v, int d);

// Degree-d symmetric power of the two-generator module has generators
// indexed k = 0..d (k counts zeta2 factors; index k is delta_k in the
// x-branch family and eps_{d-k} in the y-branch family).
//
// Image of generator k under the d-th power map, as an element of the
// target ring's module:
//   delta_k |-> x^{u_quot-k} tau^{k*v} zeta1   for k <= u_quot,
//   eps_j   |-> y^{v_quot-j} tau^{j*u} zeta2   for j = d-k <= v_quot,
// zero otherwise; for a free source (u = v = 0) every generator maps to
// zeta.  Over a free target zeta1 and zeta2 are identified.
ModuleElement power_map_image(int u, int v, int d, int k);

struct RelationCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

struct VerifyReport {
  bool ok = false;
  std::vector<RelationCheck> relations;
};

// Check that the generator images satisfy every defining relation of the
// symmetric power: x*phi(k) = tau^v * phi(k-1) and y*phi(k) = tau^u *
// phi(k+1) for all k, plus the overlap identity of the two image
// families over a free target.
VerifyReport verify_power_map(int u, int v, int d);

// Image of generator k of the degree-(t*f) symmetric power computed by
// factoring through the t-th power map followed by the f-th; normal form
// in the final target ring.  Must agree with power_map_image(u,v,t*f,k).
ModuleElement composed_power_image(int u, int v, int t, int f, int k);

}  // namespace rspin::rewrite

#include "rspin/rewrite.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "rspin/util.hpp"

namespace rspin::rewrite {

using detail::require;

LocalRing::LocalRing(int s_, int u_rem_, int v_rem_)
    : s(s_), u_rem(u_rem_), v_rem(v_rem_), free_module(u_rem_ == 0 && v_rem_ == 0) {
  require(s >= 1, "LocalRing: tau exponent s must be >= 1");
  require(u_rem >= 0 && v_rem >= 0, "LocalRing: branch exponents must be >= 0");
  require(free_module || u_rem + v_rem == s,
          "LocalRing: branch exponents must vanish or sum to s");
}

LocalRing LocalRing::free_ring(int s_) { return LocalRing(s_, 0, 0); }

ModuleElement make_element(Monomial m) {
  ModuleElement e;
  if (m.coef != 0) e.terms.push_back(m);
  return e;
}

ModuleElement scale(const ModuleElement& e, long long c, int dx, int dy, int dt) {
  ModuleElement out;
  if (c == 0) return out;
  out.terms.reserve(e.terms.size());
  for (Monomial m : e.terms) {
    m.coef *= c;
    m.xe += dx;
    m.ye += dy;
    m.te += dt;
    out.terms.push_back(m);
  }
  return out;
}

static ModuleElement canonicalize(std::vector<Monomial> terms) {
  std::map<std::tuple<int, int, int, int>, long long> acc;
  for (const Monomial& m : terms)
    acc[{static_cast<int>(m.gen), m.xe, m.ye, m.te}] += m.coef;
  ModuleElement out;
  for (const auto& [key, coef] : acc) {
    if (coef == 0) continue;
    Monomial m;
    m.gen = static_cast<Gen>(std::get<0>(key));
    m.xe = std::get<1>(key);
    m.ye = std::get<2>(key);
    m.te = std::get<3>(key);
    m.coef = coef;
    out.terms.push_back(m);
  }
  return out;
}

// one rewrite step if any rule applies; false when m is irreducible
static bool step(const LocalRing& ring, Monomial& m) {
  if (m.xe > 0 && m.ye > 0) {
    --m.xe;
    --m.ye;
    m.te += ring.s;
    return true;
  }
  if (ring.free_module) {
    if (m.gen != Gen::ZetaFree) {
      m.gen = Gen::ZetaFree;
      return true;
    }
    return false;
  }
  if (m.gen == Gen::Zeta2 && m.xe > 0) {
    --m.xe;
    m.te += ring.v_rem;
    m.gen = Gen::Zeta1;
    return true;
  }
  if (m.gen == Gen::Zeta1 && m.ye > 0) {
    --m.ye;
    m.te += ring.u_rem;
    m.gen = Gen::Zeta2;
    return true;
  }
  return false;
}

ModuleElement normal_form(const LocalRing& ring, const ModuleElement& e) {
  std::vector<Monomial> out;
  out.reserve(e.terms.size());
  for (Monomial m : e.terms) {
    while (step(ring, m)) {
    }
    out.push_back(m);
  }
  return canonicalize(std::move(out));
}

ModuleElement normal_form_random(const LocalRing& ring, const ModuleElement& e,
                                 std::mt19937& rng) {
  std::vector<Monomial> terms = e.terms;
  for (;;) {
    std::vector<size_t> reducible;
    for (size_t i = 0; i < terms.size(); ++i) {
      Monomial probe = terms[i];
      if (step(ring, probe)) reducible.push_back(i);
    }
    if (reducible.empty()) break;
    size_t pick = reducible[rng() % reducible.size()];
    step(ring, terms[pick]);
    // occasional merge keeps intermediate sums honest without forcing order
    if (rng() % 4 == 0) terms = canonicalize(std::move(terms)).terms;
  }
  return canonicalize(std::move(terms));
}

bool equal(const LocalRing& ring, const ModuleElement& a, const ModuleElement& b) {
  ModuleElement na = normal_form(ring, a);
  ModuleElement nb = normal_form(ring, b);
  if (na.terms.size() != nb.terms.size()) return false;
  for (size_t i = 0; i < na.terms.size(); ++i) {
    const Monomial &x = na.terms[i], &y = nb.terms[i];
    if (x.coef != y.coef || x.xe != y.xe || x.ye != y.ye || x.te != y.te ||
        x.gen != y.gen)
      return false;
  }
  return true;
}

ModuleElement specialize_tau_zero(const ModuleElement& e) {
  ModuleElement out;
  for (const Monomial& m : e.terms)
    if (m.te == 0) out.terms.push_back(m);
  return out;
}

static void print_mono(std::ostringstream& os, const Monomial& m) {
  long long c = m.coef;
  if (c == -1)
    os << "-";
  else if (c != 1)
    os << c << "*";
  bool head = false;
  auto piece = [&](const char* sym, int e) {
    if (e == 0) return;
    if (head) os << "*";
    os << sym;
    if (e > 1) os << "^" << e;
    head = true;
  };
  piece("x", m.xe);
  piece("y", m.ye);
  piece("tau", m.te);
  if (head) os << "*";
  switch (m.gen) {
    case Gen::ZetaFree: os << "zeta"; break;
    case Gen::Zeta1: os << "zeta1"; break;
    case Gen::Zeta2: os << "zeta2"; break;
  }
}

std::string to_string(const ModuleElement& e) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < e.terms.size(); ++i) {
    if (i) os << (e.terms[i].coef >= 0 ? " + " : " ");
    print_mono(os, e.terms[i]);
  }
  return os.str();
}

LocalRing target_ring(int u, int v, int d) {
  local_root::PowerExponents pe = local_root::power_exponents(u, v, d);
  if (u == 0 && v == 0) return LocalRing::free_ring(1);
  return LocalRing(u + v, pe.u_rem, pe.v_rem);
}

ModuleElement power_map_image(int u, int v, int d, int k) {
  require(d >= 1, "power_map_image: power must be >= 1");
  require(k >= 0 && k <= d, "power_map_image: generator index out of range");
  local_root::PowerExponents pe = local_root::power_exponents(u, v, d);
  if (u == 0 && v == 0) {
    Monomial m;
    m.coef = 1;
    return make_element(m);
  }
  Gen g1 = pe.free_target() ? Gen::ZetaFree : Gen::Zeta1;
  Gen g2 = pe.free_target() ? Gen::ZetaFree : Gen::Zeta2;
  Monomial m;
  m.coef = 1;
  if (k <= pe.u_quot) {
    m.xe = pe.u_quot - k;
    m.te = k * v;
    m.gen = g1;
    return make_element(m);
  }
  int j = d - k;
  if (j <= pe.v_quot) {
    m.ye = pe.v_quot - j;
    m.te = j * u;
    m.gen = g2;
    return make_element(m);
  }
  return ModuleElement{};
}

VerifyReport verify_power_map(int u, int v, int d) {
  require((u == 0) == (v == 0),
          "verify_power_map: branch orders must be both zero or both positive");
  require(d >= 1, "verify_power_map: power must be >= 1");
  VerifyReport rep;
  rep.ok = true;
  if (u == 0) return rep;  // free source: zeta^d -> zeta, no relations to check
  LocalRing ring = target_ring(u, v, d);
  auto add = [&](const std::string& name, const ModuleElement& lhs,
                 const ModuleElement& rhs) {
    RelationCheck rc;
    rc.name = name;
    ModuleElement nl = normal_form(ring, lhs);
    ModuleElement nr = normal_form(ring, rhs);
    rc.lhs = to_string(nl);
    rc.rhs = to_string(nr);
    rc.ok = equal(ring, nl, nr);
    if (!rc.ok) rep.ok = false;
    rep.relations.push_back(std::move(rc));
  };
  std::vector<ModuleElement> img(d + 1);
  for (int k = 0; k <= d; ++k) img[k] = power_map_image(u, v, d, k);
  for (int k = 1; k <= d; ++k) {
    std::ostringstream name;
    name << "x*phi(" << k << ") = tau^" << v << "*phi(" << k - 1 << ")";
    add(name.str(), scale(img[k], 1, 1, 0, 0), scale(img[k - 1], 1, 0, 0, v));
  }
  for (int k = 0; k < d; ++k) {
    std::ostringstream name;
    name << "y*phi(" << k << ") = tau^" << u << "*phi(" << k + 1 << ")";
    add(name.str(), scale(img[k], 1, 0, 1, 0), scale(img[k + 1], 1, 0, 0, u));
  }
  if (u > 0) {
    local_root::PowerExponents pe = local_root::power_exponents(u, v, d);
    if (pe.free_target()) {
      // index u_quot carries both image formulas; they must collide
      Monomial a;
      a.coef = 1;
      a.te = pe.u_quot * v;
      Monomial b;
      b.coef = 1;
      b.te = pe.v_quot * u;
      add("overlap phi(delta) = phi(eps)", make_element(a), make_element(b));
    }
  }
  return rep;
}

ModuleElement composed_power_image(int u, int v, int t, int f, int k) {
  require(t >= 1 && f >= 1, "composed_power_image: powers must be >= 1");
  require(k >= 0 && k <= t * f, "composed_power_image: index out of range");
  LocalRing final_ring = target_ring(u, v, t * f);
  if (u == 0 && v == 0) {
    Monomial m;
    m.coef = 1;
    return make_element(m);
  }
  // split k zeta2-factors across f blocks of degree t
  std::vector<int> idx(f, 0);
  int whole = k / t, rest = k % t;
  for (int b = 0; b < whole; ++b) idx[b] = t;
  if (rest) idx[whole] = rest;
  local_root::PowerExponents first = local_root::power_exponents(u, v, t);
  long long coef = 1;
  int xe = 0, ye = 0, te = 0, zeta2_count = 0;
  for (int b = 0; b < f; ++b) {
    ModuleElement im = power_map_image(u, v, t, idx[b]);
    if (im.is_zero()) return ModuleElement{};
    const Monomial& m = im.terms.front();
    coef *= m.coef;
    xe += m.xe;
    ye += m.ye;
    te += m.te;
    if (m.gen == Gen::Zeta2) ++zeta2_count;
  }
  ModuleElement second;
  if (first.free_target()) {
    // free intermediate module: its f-th power map is the identity on zeta
    Monomial m;
    m.coef = 1;
    second = make_element(m);
  } else {
    second = power_map_image(first.u_rem, first.v_rem, f, zeta2_count);
  }
  ModuleElement out = scale(second, coef, xe, ye, te);
  return normal_form(final_ring, out);
}

}  // namespace rspin::rewrite

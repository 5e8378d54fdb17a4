#include "rspin/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rspin/util.hpp"

namespace rspin::monodromy {

using detail::mod;
using detail::require;

ChainForm::ChainForm(int g_, int r_) : g(g_), r(r_) {
  require(g >= 0, "ChainForm: genus must be >= 0");
  require(r >= 1, "ChainForm: level must be >= 1");
}

int ChainForm::basis_pairing(int i, int j) const {
  require(i >= 0 && i < 2 * g && j >= 0 && j < 2 * g,
          "ChainForm: basis index out of range");
  if (j == i + 1) return static_cast<int>(mod(1, r));
  if (i == j + 1) return static_cast<int>(mod(-1, r));
  return 0;
}

static void check_vec(const ChainForm& form, const SpinVec& v, const char* who) {
  require(static_cast<int>(v.size()) == 2 * form.g,
          std::string(who) + ": vector length must be 2g");
}

long long pairing(const ChainForm& form, const SpinVec& a, const SpinVec& b) {
  check_vec(form, a, "pairing");
  check_vec(form, b, "pairing");
  long long acc = 0;
  // chain form: only consecutive indices pair
  for (int i = 0; i + 1 < 2 * form.g; ++i)
    acc += static_cast<long long>(a[i]) * b[i + 1] -
           static_cast<long long>(a[i + 1]) * b[i];
  return mod(acc, form.r);
}

TwistGenerator TwistGenerator::curve_twist(SpinVec c, int k) {
  TwistGenerator t;
  t.kind = Kind::CurveTwist;
  t.curve = std::move(c);
  t.offset = k;
  return t;
}

TwistGenerator TwistGenerator::translation(SpinVec shift) {
  TwistGenerator t;
  t.kind = Kind::Translation;
  t.shift = std::move(shift);
  return t;
}

TwistGenerator TwistGenerator::separating() { return TwistGenerator{}; }

// <B_j, c> for every j, i.e. the pairing of c against the whole basis
static SpinVec basis_pairings(const ChainForm& form, const SpinVec& c) {
  int n = 2 * form.g;
  SpinVec row(n, 0);
  for (int j = 0; j < n; ++j) {
    long long acc = 0;
    if (j + 1 < n) acc += c[j + 1];
    if (j >= 1) acc -= c[j - 1];
    row[j] = static_cast<int>(mod(acc, form.r));
  }
  return row;
}

static SpinVec twist_with_sign(const ChainForm& form, const TwistGenerator& tw,
                               const SpinVec& xi, int sign) {
  check_vec(form, xi, "apply_twist");
  int n = 2 * form.g;
  switch (tw.kind) {
    case TwistGenerator::Kind::Separating:
      return xi;
    case TwistGenerator::Kind::Translation: {
      check_vec(form, tw.shift, "apply_twist");
      SpinVec out(n);
      for (int j = 0; j < n; ++j)
        out[j] = static_cast<int>(
            mod(xi[j] + static_cast<long long>(sign) * tw.shift[j], form.r));
      return out;
    }
    case TwistGenerator::Kind::CurveTwist: {
      check_vec(form, tw.curve, "apply_twist");
      long long dot = 0;
      for (int j = 0; j < n; ++j)
        dot += static_cast<long long>(xi[j]) * tw.curve[j];
      long long delta = mod(tw.offset - dot, form.r);
      SpinVec row = basis_pairings(form, tw.curve);
      SpinVec out(n);
      for (int j = 0; j < n; ++j)
        out[j] = static_cast<int>(
            mod(xi[j] + static_cast<long long>(sign) * delta * row[j], form.r));
      return out;
    }
  }
  return xi;
}

SpinVec apply_twist(const ChainForm& form, const TwistGenerator& tw,
                    const SpinVec& xi) {
  return twist_with_sign(form, tw, xi, +1);
}

SpinVec apply_twist_inverse(const ChainForm& form, const TwistGenerator& tw,
                            const SpinVec& xi) {
  // <xi, c> is twist-invariant, so the inverse just flips the shift
  return twist_with_sign(form, tw, xi, -1);
}

TwistGenerator bounding_pair_generator(const BoundingPairSpec& spec,
                                       const arith::LevelParams& p,
                                       const arith::TwistVector& m) {
  require(p.g >= 1, "bounding_pair_generator: need g >= 1");
  require(static_cast<int>(m.size()) == p.n,
          "bounding_pair_generator: twist vector length must equal n");
  require(spec.i >= 1 && spec.i <= 2 * p.g,
          "bounding_pair_generator: dual index out of range");
  require(spec.g1 >= 0 && spec.g1 <= p.g - 1,
          "bounding_pair_generator: cut genus out of range");
  std::set<int> seen;
  long long coef = 2 * spec.g1;
  for (int k : spec.subset) {
    require(k >= 1 && k <= p.n,
            "bounding_pair_generator: marked point index out of range");
    require(seen.insert(k).second,
            "bounding_pair_generator: repeated marked point");
    coef -= m[k - 1];
  }
  ChainForm form(p.g, p.r);
  SpinVec e(2 * p.g, 0);
  e[spec.i - 1] = 1;
  SpinVec row = basis_pairings(form, e);
  SpinVec shift(2 * p.g);
  for (int j = 0; j < 2 * p.g; ++j)
    shift[j] = static_cast<int>(mod(coef * row[j], p.r));
  return TwistGenerator::translation(std::move(shift));
}

GeneratorMode parse_mode(const std::string& name) {
  if (name == "standard" || name == "paper") return GeneratorMode::Standard;
  if (name == "mod2_full") return GeneratorMode::Mod2Full;
  throw std::invalid_argument("unknown generator mode: " + name);
}

std::vector<TwistGenerator> generator_set(const arith::LevelParams& p,
                                          const arith::TwistVector& m,
                                          GeneratorMode mode) {
  require(p.stable(), "generator_set: parameters must satisfy 2g-2+n > 0");
  ChainForm form(p.g, p.r);
  int n = 2 * p.g;
  std::vector<TwistGenerator> gens;
  if (mode == GeneratorMode::Mod2Full) {
    require(p.r == 2, "generator_set: mod2_full needs level 2");
    for (long long code = 1; code < (1LL << n); ++code) {
      SpinVec c(n);
      int wt = 0, adj = 0;
      for (int i = 0; i < n; ++i) {
        c[i] = static_cast<int>(code >> i & 1);
        wt += c[i];
      }
      for (int i = 0; i + 1 < n; ++i)
        if (c[i] && c[i + 1]) ++adj;  // <B_i, B_{i+1}> = 1 mod 2
      int k = (1 + wt + adj) % 2;
      gens.push_back(TwistGenerator::curve_twist(std::move(c), k));
    }
    return gens;
  }
  for (int i = 0; i < n; ++i) {
    SpinVec c(n, 0);
    c[i] = 1;
    gens.push_back(TwistGenerator::curve_twist(std::move(c), 0));
  }
  arith::TranslationCoefficients tc = arith::translation_coefficients(p, m);
  for (int i = 0; i < n; ++i) {
    SpinVec e(n, 0);
    e[i] = 1;
    SpinVec row = basis_pairings(form, e);
    for (long long a : tc.values) {
      SpinVec shift(n);
      for (int j = 0; j < n; ++j)
        shift[j] = static_cast<int>(mod(a * row[j], p.r));
      gens.push_back(TwistGenerator::translation(std::move(shift)));
    }
  }
  gens.push_back(TwistGenerator::separating());
  return gens;
}

long long encode(const SpinVec& xi, int r) {
  long long code = 0;
  for (size_t i = xi.size(); i-- > 0;) code = code * r + xi[i];
  return code;
}

SpinVec decode(long long code, int g, int r) {
  SpinVec xi(2 * g);
  for (int i = 0; i < 2 * g; ++i) {
    xi[i] = static_cast<int>(code % r);
    code /= r;
  }
  return xi;
}

static long long ambient_size(const arith::LevelParams& p) {
  long long n = detail::ipow(p.r, 2 * p.g);
  require(n <= (1LL << 26), "state space too large");
  return n;
}

OrbitPartition orbits(const arith::LevelParams& p,
                      const std::vector<TwistGenerator>& gens) {
  require(p.stable(), "orbits: parameters must satisfy 2g-2+n > 0");
  ChainForm form(p.g, p.r);
  long long total = ambient_size(p);
  OrbitPartition part;
  part.g = p.g;
  part.r = p.r;
  part.class_of.assign(total, -1);
  std::vector<long long> stack;
  for (long long seed = 0; seed < total; ++seed) {
    if (part.class_of[seed] != -1) continue;
    int32_t id = static_cast<int32_t>(part.classes.size());
    long long size = 0;
    part.class_of[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      long long code = stack.back();
      stack.pop_back();
      ++size;
      SpinVec xi = decode(code, p.g, p.r);
      for (const TwistGenerator& tw : gens) {
        for (int dir = 0; dir < 2; ++dir) {
          SpinVec img = dir ? apply_twist_inverse(form, tw, xi)
                            : apply_twist(form, tw, xi);
          long long c = encode(img, p.r);
          if (part.class_of[c] == -1) {
            part.class_of[c] = id;
            stack.push_back(c);
          }
        }
      }
    }
    OrbitClass cls;
    cls.label = std::to_string(id);
    cls.size = size;
    cls.representative = decode(seed, p.g, p.r);
    part.classes.push_back(std::move(cls));
  }
  return part;
}

int arf_invariant(const SpinVec& xi_mod2, int g) {
  require(static_cast<int>(xi_mod2.size()) == 2 * g,
          "arf_invariant: vector length must be 2g");
  int n = 2 * g;
  std::vector<int> qb(n);
  for (int i = 0; i < n; ++i) {
    require(xi_mod2[i] == 0 || xi_mod2[i] == 1,
            "arf_invariant: entries must be mod-2");
    qb[i] = (xi_mod2[i] + 1) % 2;
  }
  // quadratic refinement: q(v) = sum v_i q(B_i) + sum_{i<j} v_i v_j <B_i,B_j>
  auto q = [&](const std::vector<int>& v) {
    int acc = 0;
    for (int i = 0; i < n; ++i) acc ^= v[i] & qb[i];
    for (int i = 0; i + 1 < n; ++i) acc ^= v[i] & v[i + 1];
    return acc;
  };
  auto pair2 = [&](const std::vector<int>& a, const std::vector<int>& b) {
    int acc = 0;
    for (int i = 0; i + 1 < n; ++i) acc ^= (a[i] & b[i + 1]) ^ (a[i + 1] & b[i]);
    return acc;
  };
  std::vector<std::vector<int>> vecs;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    vecs.push_back(std::move(e));
  }
  int tot = 0;
  while (!vecs.empty()) {
    std::vector<int> a = vecs.front();
    size_t bi = 0;
    for (size_t i = 1; i < vecs.size(); ++i)
      if (pair2(a, vecs[i])) {
        bi = i;
        break;
      }
    require(bi != 0, "arf_invariant: degenerate pairing");  // chain form is unimodular
    std::vector<int> b = vecs[bi];
    tot ^= q(a) & q(b);
    // project the rest into the symplectic complement of <a, b>, then
    // re-extract an independent spanning set
    std::vector<std::vector<int>> rest;
    for (size_t i = 1; i < vecs.size(); ++i) {
      if (i == bi) continue;
      std::vector<int> w = vecs[i];
      int wb = pair2(w, b), wa = pair2(w, a);
      for (int k2 = 0; k2 < n; ++k2) w[k2] ^= (wb & a[k2]) ^ (wa & b[k2]);
      rest.push_back(std::move(w));
    }
    std::vector<std::vector<int>> basis;
    std::vector<std::pair<int, std::vector<int>>> pivots;
    for (std::vector<int>& w : rest) {
      for (const auto& [piv, pv] : pivots)
        if (w[piv])
          for (int k2 = 0; k2 < n; ++k2) w[k2] ^= pv[k2];
      int piv = -1;
      for (int k2 = 0; k2 < n; ++k2)
        if (w[k2]) {
          piv = k2;
          break;
        }
      if (piv < 0) continue;
      pivots.emplace_back(piv, w);
      basis.push_back(w);
    }
    vecs = std::move(basis);
  }
  return tot;
}

SpinVec reduce_level(const SpinVec& xi, int r, int s) {
  require(r >= 1 && s >= 1 && r % s == 0, "reduce_level: need s | r");
  SpinVec out(xi.size());
  for (size_t i = 0; i < xi.size(); ++i)
    out[i] = static_cast<int>(mod(xi[i], s));
  return out;
}

OrbitPartition component_partition(const arith::LevelParams& p,
                                   const arith::TwistVector& m) {
  require(p.stable(),
          "component_partition: parameters must satisfy 2g-2+n > 0");
  OrbitPartition part;
  part.g = p.g;
  part.r = p.r;
  if (!arith::exists_spin(p, m)) return part;  // empty moduli, empty partition
  long long total = ambient_size(p);
  long long l = arith::ell(p, m);
  if (p.g == 0 || l == 1) {
    part.class_of.assign(total, 0);
    OrbitClass cls;
    cls.label = "all";
    cls.size = total;
    cls.representative = decode(0, p.g, p.r);
    part.classes.push_back(std::move(cls));
    return part;
  }
  part.class_of.assign(total, -1);
  if (p.g == 1) {
    std::vector<long long> divisors;
    for (long long d = l; d >= 1; --d)
      if (l % d == 0) divisors.push_back(d);  // descending, l first
    part.classes.resize(divisors.size());
    for (size_t i = 0; i < divisors.size(); ++i) {
      part.classes[i].label = std::to_string(divisors[i]);
      part.classes[i].size = 0;
    }
    for (long long code = 0; code < total; ++code) {
      SpinVec xi = decode(code, p.g, p.r);
      long long gval = l;
      for (int x : xi) gval = std::gcd(gval, mod(x, l));
      size_t idx =
          std::find(divisors.begin(), divisors.end(), gval) - divisors.begin();
      part.class_of[code] = static_cast<int32_t>(idx);
      if (part.classes[idx].size == 0)
        part.classes[idx].representative = xi;
      ++part.classes[idx].size;
    }
    return part;
  }
  // g >= 2, ell = 2: parity classes of the mod-2 reduction
  require(l == 2, "component_partition: unexpected gcd invariant");
  part.classes.resize(2);
  part.classes[0].label = "even";
  part.classes[1].label = "odd";
  std::vector<int8_t> arf_of(detail::ipow(2, 2 * p.g), -1);
  for (long long code = 0; code < total; ++code) {
    SpinVec xi = decode(code, p.g, p.r);
    SpinVec red = reduce_level(xi, p.r, 2);
    long long rc = encode(red, 2);
    if (arf_of[rc] < 0)
      arf_of[rc] = static_cast<int8_t>(arf_invariant(red, p.g));
    int idx = arf_of[rc];
    part.class_of[code] = idx;
    if (part.classes[idx].size == 0) part.classes[idx].representative = xi;
    ++part.classes[idx].size;
  }
  return part;
}

bool verify_fiber_transitivity(const arith::LevelParams& p,
                               const arith::TwistVector& m) {
  require(p.stable(),
          "verify_fiber_transitivity: parameters must satisfy 2g-2+n > 0");
  require(p.g >= 1, "verify_fiber_transitivity: need g >= 1");
  ChainForm form(p.g, p.r);
  long long total = ambient_size(p);
  long long l = arith::ell(p, m);
  arith::TranslationCoefficients tc = arith::translation_coefficients(p, m);
  int n = 2 * p.g;
  std::vector<SpinVec> shifts;
  for (int i = 0; i < n; ++i) {
    SpinVec e(n, 0);
    e[i] = 1;
    SpinVec row = basis_pairings(form, e);
    for (long long a : tc.values) {
      SpinVec shift(n);
      for (int j = 0; j < n; ++j)
        shift[j] = static_cast<int>(mod(a * row[j], p.r));
      shifts.push_back(std::move(shift));
    }
  }
  // subgroup closure of the shifts, starting at 0
  std::vector<char> seen(total, 0);
  std::vector<long long> stack{0};
  seen[0] = 1;
  long long count = 0;
  while (!stack.empty()) {
    long long code = stack.back();
    stack.pop_back();
    ++count;
    SpinVec xi = decode(code, p.g, p.r);
    for (int x : xi)
      if (x % l != 0) return false;  // escaped the mod-ell fibre of 0
    for (const SpinVec& s : shifts) {
      SpinVec img(n);
      for (int j = 0; j < n; ++j)
        img[j] = static_cast<int>(mod(xi[j] + s[j], p.r));
      long long c = encode(img, p.r);
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  // containment plus full size means the orbit of each point is exactly
  // its fibre under reduction mod ell
  return count == detail::ipow(p.r / l, 2 * p.g);
}

std::vector<long long> crt_join(const std::vector<long long>& alpha,
                                const std::vector<long long>& beta,
                                long long s, long long t, long long a,
                                long long b) {
  require(s >= 1 && t >= 1, "crt_join: moduli must be >= 1");
  require(std::gcd(s, t) == 1, "crt_join: moduli must be coprime");
  require(a * t + b * s == 1, "crt_join: need a*t + b*s = 1");
  require(alpha.size() == beta.size(), "crt_join: length mismatch");
  long long st = s * t;
  long long ar = mod(a, s), br = mod(b, t);
  std::vector<long long> out(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i)
    out[i] = mod(mod(alpha[i], s) * ar % st * t + mod(beta[i], t) * br % st * s,
                 st);
  return out;
}

std::pair<std::vector<long long>, std::vector<long long>> crt_split(
    const std::vector<long long>& x, long long s, long long t) {
  require(s >= 1 && t >= 1, "crt_split: moduli must be >= 1");
  require(std::gcd(s, t) == 1, "crt_split: moduli must be coprime");
  std::vector<long long> xs(x.size()), xt(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    xs[i] = mod(x[i], s);
    xt[i] = mod(x[i], t);
  }
  return {xs, xt};
}

long long involution_class_count(int r) {
  require(r >= 1 && r % 2 == 1, "involution_class_count: level must be odd");
  std::vector<char> seen(static_cast<size_t>(r) * r, 0);
  long long classes = 0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      size_t idx = static_cast<size_t>(a) * r + b;
      if (seen[idx]) continue;
      ++classes;
      seen[idx] = 1;
      seen[static_cast<size_t>((r - a) % r) * r + (r - b) % r] = 1;
    }
  return classes;
}

}  // namespace rspin::monodromy

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rspin/arith.hpp"

namespace rspin::monodromy {

// Splitting coordinates of a level-r structure: a vector in (Z/r)^{2g}
// over the chain basis B_1..B_2g (consecutive vectors meet once).
using SpinVec = std::vector<int>;

// Intersection form on the chain basis: <B_i, B_{i+1}> = 1,
// <B_{i+1}, B_i> = -1, all other pairs 0; unimodular over Z/r.
struct ChainForm {
  int g;
  int r;

  ChainForm(int g_, int r_);
  // entry <B_i, B_j> as a least non-negative residue mod r (0-based)
  int basis_pairing(int i, int j) const;
};

long long pairing(const ChainForm& form, const SpinVec& a, const SpinVec& b);

struct TwistGenerator {
  enum class Kind { CurveTwist, Translation, Separating };
  Kind kind = Kind::Separating;
  SpinVec curve;   // homology class c of the twisting curve (CurveTwist)
  int offset = 0;  // lift offset k of the twisting curve (CurveTwist)
  SpinVec shift;   // additive shift (Translation)

  static TwistGenerator curve_twist(SpinVec c, int k);
  static TwistGenerator translation(SpinVec t);
  static TwistGenerator separating();
};

// Action of a twist on splitting coordinates:
//   curve twist:  xi_j += (k - <xi, c>) * <B_j, c>
//   translation:  xi += t
//   separating:   identity
SpinVec apply_twist(const ChainForm& form, const TwistGenerator& tw,
                    const SpinVec& xi);
SpinVec apply_twist_inverse(const ChainForm& form, const TwistGenerator& tw,
                            const SpinVec& xi);

struct BoundingPairSpec {
  int i = 0;                    // dual direction index, 1-based
  int g1 = 0;                   // genus cut off by the pair
  std::vector<int> subset;      // marked points on that side, 1-based
};

// Translation realized by a bounding-pair twist: shift by
// (2*g1 - sum_{k in subset} m_k) times the basis-dual of B_i.
TwistGenerator bounding_pair_generator(const BoundingPairSpec& spec,
                                       const arith::LevelParams& p,
                                       const arith::TwistVector& m);

enum class GeneratorMode {
  // chain twists with offset 0, bounding-pair translations realizing
  // every translation coefficient on every dual direction, one
  // separating twist
  Standard,
  // r = 2 only: a curve twist for every nonzero mod-2 class c with
  // offset k_c = 1 + sum(c_i) + sum_{i<j} c_i c_j <B_i, B_j>
  Mod2Full,
};

GeneratorMode parse_mode(const std::string& name);  // "standard" | "mod2_full"

std::vector<TwistGenerator> generator_set(const arith::LevelParams& p,
                                          const arith::TwistVector& m,
                                          GeneratorMode mode);

struct OrbitClass {
  std::string label;
  long long size = 0;
  SpinVec representative;  // smallest member in encoding order
};

struct OrbitPartition {
  int g = 0;
  int r = 0;
  // class index per encoded state (base-r digits, B_1 least significant);
  // empty when the partition is empty (non-existent moduli)
  std::vector<int32_t> class_of;
  std::vector<OrbitClass> classes;
};

long long encode(const SpinVec& xi, int r);
SpinVec decode(long long code, int g, int r);

// Orbit closure of the generators acting on all of (Z/r)^{2g}; classes
// ordered by smallest member, labels are class indices.
OrbitPartition orbits(const arith::LevelParams& p,
                      const std::vector<TwistGenerator>& gens);

// Arf invariant of the quadratic refinement with q(B_i) = xi_i + 1 on
// the mod-2 chain form; xi has length 2g with mod-2 entries.
int arf_invariant(const SpinVec& xi_mod2, int g);

// Componentwise reduction mod s (s | r): level-s coordinates of the
// s-th layer of a level-r structure.
SpinVec reduce_level(const SpinVec& xi, int r, int s);

// Partition of the coordinate space into monodromy-invariant classes:
// empty when the moduli is empty; one class for g = 0 or ell = 1;
// divisor classes gcd(ell, xi mod ell) = delta for g = 1 (delta
// descending); even/odd Arf classes of xi mod 2 for g >= 2, ell = 2.
OrbitPartition component_partition(const arith::LevelParams& p,
                                   const arith::TwistVector& m);

// The translation generators alone connect exactly the fibres of
// reduction mod ell: their subgroup closure is ell * (Z/r)^{2g}.
bool verify_fiber_transitivity(const arith::LevelParams& p,
                               const arith::TwistVector& m);

// Chinese-remainder splitting of coordinates for coprime s, t with
// a*t + b*s = 1: join is alpha*a*t + beta*b*s mod s*t, componentwise.
std::vector<long long> crt_join(const std::vector<long long>& alpha,
                                const std::vector<long long>& beta,
                                long long s, long long t, long long a,
                                long long b);
std::pair<std::vector<long long>, std::vector<long long>> crt_split(
    const std::vector<long long>& x, long long s, long long t);

// Number of orbits of coordinate negation on (Z/r)^2 for odd r,
// counted directly.
long long involution_class_count(int r);

}  // namespace rspin::monodromy

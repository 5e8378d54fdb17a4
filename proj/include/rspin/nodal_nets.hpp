#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rspin::nodal_nets {

// Dual graph of a stable nodal curve: vertices carry genus, edges are
// nodes (loops allowed; the first endpoint is the designated half-edge
// side), legs are marked points carrying integer twists.
struct DualGraph {
  std::vector<int> vertex_genus;
  std::vector<std::pair<int, int>> edges;
  struct Leg {
    int vertex = 0;
    long long m = 0;
  };
  std::vector<Leg> legs;
};

// {"vertices":[{"genus":1}], "edges":[[0,0]], "legs":[{"vertex":0,"m":2}]}
DualGraph graph_from_json(const std::string& text);

// Replace the leg twists (length must match).
DualGraph with_twists(DualGraph g, const std::vector<long long>& m);

struct Validation {
  bool ok = false;
  std::string message;  // names the offending vertex/edge when !ok
};

// Connectivity plus per-vertex stability: genus 0 needs >= 3 half-edges
// plus legs, genus 1 needs >= 1.
Validation validate(const DualGraph& g);

// Arithmetic genus: sum of vertex genera + #edges - #vertices + 1.
int genus(const DualGraph& g);

// Degree of the twisted dualizing sheaf on the component of vertex v:
// 2 g_v - 2 + #(edge half-edges at v) - sum of leg twists at v.
long long vertex_omega_degree(const DualGraph& g, int v);

// Branch orders assigned to one edge: locally free, or u on the
// designated half-edge and v = r - u on the other.
struct EdgeOrder {
  bool singular = false;
  int u = 0;
  int v = 0;
};

struct Stratum {
  std::vector<EdgeOrder> orders;         // per edge
  std::vector<long long> vertex_degrees; // (omega degree - u-values) / r
  std::vector<long long> ramification;   // per edge, 1 on free edges
  std::vector<long long> gluing;         // per edge, 1 on free edges
  long long net_count = 0;
  int codim_edges = 0;                   // boundary depth = #edges
  std::vector<bool> singular_edge;
};

// All level-r branch-order assignments whose per-vertex divisibility
// holds: r | vertex_omega_degree(v) - sum of u-values at v.  Each edge
// independently takes locally-free or u = 1..r-1 on its designated
// half-edge; order is lexicographic over edges (free first, then u
// ascending).
std::vector<Stratum> enumerate_strata(const DualGraph& g, int r);

// Number of level-r nets on the stratum:
// prod_v r^{2 g_v} * r^{b1(locally-free subgraph)} *
// prod over singular non-separating edges of gcd(u, v).
long long count_nets(const DualGraph& g, int r,
                     const std::vector<EdgeOrder>& orders);

// Per-edge multiplicity of the smoothing parameter: r / gcd(u, v) on
// singular edges, 1 on free edges.
std::vector<long long> deformation_profile(const DualGraph& g, int r,
                                           const std::vector<EdgeOrder>& orders);

struct DegreeCheck {
  long long weighted_total = 0;
  long long expected = 0;  // r^{2g}
  bool ok = false;
};

// On the one-loop graph (single vertex of genus g-1 with a loop; one
// twist-0 leg at g = 1 for stability), the net counts weighted by the
// deformation multiplicities sum to the smooth-fibre count r^{2g}.
// Requires g >= 1, r >= 2, r | 2g-2.
DegreeCheck degree_identity_check(int g, int r);

}  // namespace rspin::nodal_nets

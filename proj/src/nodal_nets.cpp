#include "rspin/nodal_nets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "rspin/util.hpp"

namespace rspin::nodal_nets {

using detail::require;

DualGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  require(j.is_object(), "graph: top level must be an object");
  DualGraph g;
  require(j.contains("vertices") && j["vertices"].is_array(),
          "graph: missing \"vertices\" array");
  for (const auto& v : j["vertices"]) {
    require(v.is_object() && v.contains("genus") &&
                v["genus"].is_number_integer(),
            "graph: each vertex needs an integer \"genus\"");
    int gv = v["genus"].get<int>();
    require(gv >= 0, "graph: vertex genus must be >= 0");
    g.vertex_genus.push_back(gv);
  }
  int nv = static_cast<int>(g.vertex_genus.size());
  if (j.contains("edges")) {
    require(j["edges"].is_array(), "graph: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                  e[1].is_number_integer(),
              "graph: each edge must be a pair of vertex indices");
      int a = e[0].get<int>(), b = e[1].get<int>();
      require(a >= 0 && a < nv && b >= 0 && b < nv,
              "graph: edge endpoint out of range");
      g.edges.emplace_back(a, b);
    }
  }
  if (j.contains("legs")) {
    require(j["legs"].is_array(), "graph: \"legs\" must be an array");
    for (const auto& l : j["legs"]) {
      require(l.is_object() && l.contains("vertex") &&
                  l["vertex"].is_number_integer() && l.contains("m") &&
                  l["m"].is_number_integer(),
              "graph: each leg needs integer \"vertex\" and \"m\"");
      DualGraph::Leg leg;
      leg.vertex = l["vertex"].get<int>();
      leg.m = l["m"].get<long long>();
      require(leg.vertex >= 0 && leg.vertex < nv,
              "graph: leg vertex out of range");
      g.legs.push_back(leg);
    }
  }
  return g;
}

DualGraph with_twists(DualGraph g, const std::vector<long long>& m) {
  require(m.size() == g.legs.size(),
          "with_twists: twist count must match leg count");
  for (size_t i = 0; i < m.size(); ++i) g.legs[i].m = m[i];
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
      if (find(v) == v) ++c;
    return c;
  }
};

int half_edges_at(const DualGraph& g, int v) {
  int k = 0;
  for (const auto& e : g.edges) {
    if (e.first == v) ++k;
    if (e.second == v) ++k;
  }
  return k;
}

int legs_at(const DualGraph& g, int v) {
  int k = 0;
  for (const auto& l : g.legs)
    if (l.vertex == v) ++k;
  return k;
}

bool edge_non_separating(const DualGraph& g, size_t skip) {
  UnionFind uf(static_cast<int>(g.vertex_genus.size()));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i == skip) continue;
    uf.unite(g.edges[i].first, g.edges[i].second);
  }
  return uf.components() == 1;
}

}  // namespace

Validation validate(const DualGraph& g) {
  Validation v;
  if (g.vertex_genus.empty()) {
    v.message = "graph has no vertices";
    return v;
  }
  UnionFind uf(static_cast<int>(g.vertex_genus.size()));
  for (const auto& e : g.edges) uf.unite(e.first, e.second);
  if (uf.components() != 1) {
    v.message = "graph is not connected";
    return v;
  }
  for (int i = 0; i < static_cast<int>(g.vertex_genus.size()); ++i) {
    int special = half_edges_at(g, i) + legs_at(g, i);
    int need = g.vertex_genus[i] == 0 ? 3 : (g.vertex_genus[i] == 1 ? 1 : 0);
    if (special < need) {
      std::ostringstream os;
      os << "vertex " << i << ": genus " << g.vertex_genus[i] << " needs at least "
         << need << " special points, has " << special;
      v.message = os.str();
      return v;
    }
  }
  v.ok = true;
  return v;
}

int genus(const DualGraph& g) {
  Validation v = validate(g);
  require(v.ok, "genus: " + v.message);
  long long sum = 0;
  for (int gv : g.vertex_genus) sum += gv;
  return static_cast<int>(sum + static_cast<long long>(g.edges.size()) -
                          static_cast<long long>(g.vertex_genus.size()) + 1);
}

long long vertex_omega_degree(const DualGraph& g, int v) {
  require(v >= 0 && v < static_cast<int>(g.vertex_genus.size()),
          "vertex_omega_degree: vertex out of range");
  long long deg = 2LL * g.vertex_genus[v] - 2 + half_edges_at(g, v);
  for (const auto& l : g.legs)
    if (l.vertex == v) deg -= l.m;
  return deg;
}

long long count_nets(const DualGraph& g, int r,
                     const std::vector<EdgeOrder>& orders) {
  require(r >= 1, "count_nets: level must be >= 1");
  require(orders.size() == g.edges.size(),
          "count_nets: one order per edge required");
  int nv = static_cast<int>(g.vertex_genus.size());
  long long total = 1;
  for (int gv : g.vertex_genus) total *= detail::ipow(r, 2 * gv);
  UnionFind uf(nv);
  long long free_edges = 0;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (orders[i].singular) continue;
    ++free_edges;
    uf.unite(g.edges[i].first, g.edges[i].second);
  }
  long long b1 = free_edges - nv + uf.components();
  total *= detail::ipow(r, static_cast<int>(b1));
  for (size_t i = 0; i < orders.size(); ++i) {
    if (!orders[i].singular) continue;
    require(orders[i].u >= 1 && orders[i].v >= 1 &&
                orders[i].u + orders[i].v == r,
            "count_nets: singular orders must be positive and sum to r");
    if (edge_non_separating(g, i))
      total *= std::gcd(orders[i].u, orders[i].v);
  }
  return total;
}

std::vector<long long> deformation_profile(const DualGraph& g, int r,
                                           const std::vector<EdgeOrder>& orders) {
  require(orders.size() == g.edges.size(),
          "deformation_profile: one order per edge required");
  std::vector<long long> prof(orders.size(), 1);
  for (size_t i = 0; i < orders.size(); ++i)
    if (orders[i].singular)
      prof[i] = r / std::gcd(orders[i].u, orders[i].v);
  return prof;
}

std::vector<Stratum> enumerate_strata(const DualGraph& g, int r) {
  Validation v = validate(g);
  require(v.ok, "enumerate_strata: " + v.message);
  require(r >= 1, "enumerate_strata: level must be >= 1");
  int nv = static_cast<int>(g.vertex_genus.size());
  size_t ne = g.edges.size();
  std::vector<long long> omega(nv);
  for (int i = 0; i < nv; ++i) omega[i] = vertex_omega_degree(g, i);

  std::vector<Stratum> out;
  // odometer over per-edge codes: 0 = locally free, u = 1..r-1 on the
  // designated half-edge; edge 0 most significant for lexicographic order
  std::vector<int> code(ne, 0);
  for (;;) {
    std::vector<long long> usum(nv, 0);
    for (size_t i = 0; i < ne; ++i) {
      if (code[i] == 0) continue;
      usum[g.edges[i].first] += code[i];
      usum[g.edges[i].second] += r - code[i];
    }
    bool good = true;
    for (int i = 0; i < nv && good; ++i)
      good = detail::mod(omega[i] - usum[i], r) == 0;
    if (good) {
      Stratum s;
      s.codim_edges = static_cast<int>(ne);
      s.orders.resize(ne);
      s.singular_edge.resize(ne);
      for (size_t i = 0; i < ne; ++i) {
        s.singular_edge[i] = code[i] != 0;
        if (code[i] != 0) s.orders[i] = EdgeOrder{true, code[i], r - code[i]};
      }
      s.vertex_degrees.resize(nv);
      for (int i = 0; i < nv; ++i)
        s.vertex_degrees[i] = (omega[i] - usum[i]) / r;
      s.ramification = deformation_profile(g, r, s.orders);
      s.gluing.assign(ne, 1);
      for (size_t i = 0; i < ne; ++i)
        if (s.singular_edge[i])
          s.gluing[i] = std::gcd(s.orders[i].u, s.orders[i].v);
      s.net_count = count_nets(g, r, s.orders);
      out.push_back(std::move(s));
    }
    // advance odometer, last edge fastest
    size_t pos = ne;
    while (pos > 0) {
      --pos;
      if (++code[pos] < r) break;
      code[pos] = 0;
      if (pos == 0) return out;
    }
    if (ne == 0) break;  // single empty assignment
  }
  return out;
}

DegreeCheck degree_identity_check(int g, int r) {
  require(g >= 1, "degree_identity_check: need g >= 1");
  require(r >= 2, "degree_identity_check: need r >= 2");
  require((2 * g - 2) % r == 0, "degree_identity_check: need r | 2g-2");
  DualGraph dg;
  dg.vertex_genus.push_back(g - 1);
  dg.edges.emplace_back(0, 0);
  if (g == 1) dg.legs.push_back({0, 0});  // stability at genus 1; twist 0
  DegreeCheck dc;
  dc.expected = detail::ipow(r, 2 * g);
  for (const Stratum& s : enumerate_strata(dg, r)) {
    long long mult = 1;
    for (long long ri : s.ramification) mult *= ri;
    dc.weighted_total += s.net_count * mult;
  }
  dc.ok = dc.weighted_total == dc.expected;
  return dc;
}

}  // namespace rspin::nodal_nets

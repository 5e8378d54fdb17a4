#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rspin/arith.hpp"
#include "rspin/local_root.hpp"
#include "rspin/monodromy.hpp"
#include "rspin/nodal_nets.hpp"
#include "rspin/rewrite.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int g = 0;
  int r = 1;
  std::string m;
  std::string mode = "standard";
  std::string graph;
  std::string format = "json";
  int d = 1;
  int u = 0;
  int v = 0;
  bool has_r = false;
};

std::vector<long long> parse_twists(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) {
      if (out.empty() && is.eof()) break;
      throw std::invalid_argument("empty entry in twist list");
    }
    size_t b = cur.find_last_not_of(" \t");
    std::string tok = cur.substr(a, b - a + 1);
    size_t used = 0;
    long long val = 0;
    try {
      val = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad twist entry: " + tok);
    }
    if (used != tok.size())
      throw std::invalid_argument("bad twist entry: " + tok);
    out.push_back(val);
  }
  return out;
}

bool needs_normalization(const std::vector<long long>& m, int r) {
  for (long long t : m)
    if (t < 0 || t >= r) return true;
  return false;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << row[i];
    os << "\n";
  }
  std::cout << os.str();
}

std::string join_ll(const std::vector<long long>& v, char sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
  return os.str();
}

std::string join_int(const std::vector<int>& v, char sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
  return os.str();
}

int run_components(const Options& opt) {
  auto m = parse_twists(opt.m);
  rspin::arith::LevelParams p(opt.g, opt.r, static_cast<int>(m.size()));
  bool notice = needs_normalization(m, opt.r);
  auto part = rspin::monodromy::component_partition(p, m);
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : part.classes)
      rows.push_back({c.label, std::to_string(c.size)});
    emit_csv({"label", "size"}, rows);
    return 0;
  }
  json out;
  out["count"] = part.classes.size();
  out["classes"] = json::array();
  for (const auto& c : part.classes)
    out["classes"].push_back(json{{"label", c.label}, {"size", c.size}});
  if (notice) out["notice"] = "twists normalized mod r";
  emit(out);
  return 0;
}

int run_orbits(const Options& opt) {
  auto m = parse_twists(opt.m);
  rspin::arith::LevelParams p(opt.g, opt.r, static_cast<int>(m.size()));
  bool notice = needs_normalization(m, opt.r);
  auto mode = rspin::monodromy::parse_mode(opt.mode);
  auto gens = rspin::monodromy::generator_set(p, m, mode);
  auto part = rspin::monodromy::orbits(p, gens);
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : part.classes)
      rows.push_back({c.label, std::to_string(c.size),
                      join_int(c.representative, ';')});
    emit_csv({"label", "size", "rep"}, rows);
    return 0;
  }
  json out;
  out["mode"] = mode == rspin::monodromy::GeneratorMode::Standard ? "standard"
                                                                  : "mod2_full";
  out["count"] = part.classes.size();
  out["classes"] = json::array();
  for (const auto& c : part.classes) {
    json jc{{"label", c.label}, {"size", c.size}, {"rep", c.representative}};
    if (opt.r == 2)
      jc["arf"] = rspin::monodromy::arf_invariant(c.representative, opt.g);
    out["classes"].push_back(std::move(jc));
  }
  if (notice) out["notice"] = "twists normalized mod r";
  emit(out);
  return 0;
}

int run_counts(const Options& opt) {
  auto m = parse_twists(opt.m);
  rspin::arith::LevelParams p(opt.g, opt.r, static_cast<int>(m.size()));
  bool notice = needs_normalization(m, opt.r);
  auto norm = rspin::arith::normalize_twists(opt.r, m);
  json out;
  out["g"] = opt.g;
  out["r"] = opt.r;
  out["m"] = norm;
  long long l = rspin::arith::ell(p, m);
  out["ell"] = l;
  out["components"] = rspin::arith::component_count(p, m);
  out["exists"] = rspin::arith::exists_spin(p, m);
  if (opt.r % 2 == 0 && p.g >= 1) {
    auto pc = rspin::arith::parity_counts(p.g, p.r);
    out["parity"] = json{{"even", pc.even}, {"odd", pc.odd}};
  }
  if (p.g >= 1) {
    auto tc = rspin::arith::translation_coefficients(p, m);
    out["translation"] = json{{"values", tc.values}, {"gcd", tc.gcd_with_r}};
  }
  if (p.g == 1) {
    json oc = json::array();
    for (int d = 1; d <= opt.r; ++d)
      if (opt.r % d == 0)
        oc.push_back(json{{"divisor", d},
                          {"count", rspin::arith::exact_order_count(opt.r, d)}});
    out["order_counts"] = std::move(oc);
  }
  if (opt.r % 2 == 1)
    out["involution_classes"] = rspin::monodromy::involution_class_count(opt.r);
  if (p.g >= 1 && p.stable())
    out["fiber_transitive"] = rspin::monodromy::verify_fiber_transitivity(p, m);
  if (notice) out["notice"] = "twists normalized mod r";
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (auto it = out.begin(); it != out.end(); ++it) {
      json v = it.value();
      std::string text = v.is_string() ? v.get<std::string>() : v.dump();
      if (text.find(',') != std::string::npos) text = "\"" + text + "\"";
      rows.push_back({it.key(), text});
    }
    emit_csv({"key", "value"}, rows);
    return 0;
  }
  emit(out);
  return 0;
}

int run_local(const Options& opt) {
  namespace lr = rspin::local_root;
  auto pe = lr::power_exponents(opt.u, opt.v, opt.d);
  json out;
  out["u"] = opt.u;
  out["v"] = opt.v;
  out["d"] = opt.d;
  out["exponents"] = json{{"u_rem", pe.u_rem},
                          {"v_rem", pe.v_rem},
                          {"u_quot", pe.u_quot},
                          {"v_quot", pe.v_quot}};
  out["free_target"] = pe.free_target();
  out["cokernel_length"] = lr::cokernel_length(opt.u, opt.v, opt.d);
  auto rs = lr::root_exists(opt.u, opt.v, opt.d);
  json root{{"exists", rs.exists}};
  if (rs.unique_root) {
    root["x"] = rs.unique_root->u;
    root["y"] = rs.unique_root->v;
  }
  out["root"] = std::move(root);
  if (opt.has_r) {
    lr::Order o{opt.u, opt.v};
    if (!o.locally_free() && opt.u + opt.v != opt.r)
      throw std::invalid_argument(
          "local: with --r the branch orders must sum to r (or both be 0)");
    if (opt.r % opt.d != 0)
      throw std::invalid_argument("local: with --r the power must divide r");
    lr::Order layer = lr::order_of_root(o, opt.r, opt.d);
    json lvl{{"r", opt.r}, {"order_mod_d", json::array({layer.u, layer.v})}};
    if (!o.locally_free()) {
      lvl["ramification"] = lr::ramification_index(o, opt.r);
      lvl["gluing"] = lr::gluing_multiplicity(o);
    }
    out["level"] = std::move(lvl);
  }
  json images = json::array();
  std::vector<std::vector<std::string>> rows;
  for (int k = 0; k <= opt.d; ++k) {
    auto img = rspin::rewrite::power_map_image(opt.u, opt.v, opt.d, k);
    std::string text = rspin::rewrite::to_string(img);
    images.push_back(json{
        {"k", k}, {"delta", k}, {"eps", opt.d - k}, {"image", text}});
    rows.push_back({std::to_string(k), std::to_string(k),
                    std::to_string(opt.d - k), text});
  }
  out["images"] = std::move(images);
  out["verified"] = rspin::rewrite::verify_power_map(opt.u, opt.v, opt.d).ok;
  if (opt.format == "csv") {
    emit_csv({"k", "delta", "eps", "image"}, rows);
    return 0;
  }
  emit(out);
  return 0;
}

int run_rewrite_check(const Options& opt) {
  auto rep = rspin::rewrite::verify_power_map(opt.u, opt.v, opt.d);
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& rc : rep.relations)
      rows.push_back({rc.name, rc.lhs, rc.rhs, rc.ok ? "true" : "false"});
    emit_csv({"name", "lhs", "rhs", "ok"}, rows);
    return 0;
  }
  json out;
  out["u"] = opt.u;
  out["v"] = opt.v;
  out["d"] = opt.d;
  out["verified"] = rep.ok;
  out["relations"] = json::array();
  for (const auto& rc : rep.relations)
    out["relations"].push_back(json{
        {"name", rc.name}, {"lhs", rc.lhs}, {"rhs", rc.rhs}, {"ok", rc.ok}});
  emit(out);
  return 0;
}

int run_nodal(const Options& opt) {
  std::ifstream in(opt.graph);
  if (!in) throw std::invalid_argument("cannot open graph file: " + opt.graph);
  std::stringstream buf;
  buf << in.rdbuf();
  auto g = rspin::nodal_nets::graph_from_json(buf.str());
  if (!opt.m.empty()) g = rspin::nodal_nets::with_twists(g, parse_twists(opt.m));
  auto val = rspin::nodal_nets::validate(g);
  if (!val.ok) throw std::invalid_argument("invalid graph: " + val.message);
  auto strata = rspin::nodal_nets::enumerate_strata(g, opt.r);
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < strata.size(); ++i) {
      const auto& s = strata[i];
      std::ostringstream ord;
      for (size_t e = 0; e < s.orders.size(); ++e) {
        if (e) ord << ";";
        if (s.orders[e].singular)
          ord << s.orders[e].u << ":" << s.orders[e].v;
        else
          ord << "free";
      }
      rows.push_back({std::to_string(i), ord.str(), std::to_string(s.net_count),
                      join_ll(s.ramification, ';'),
                      std::to_string(s.codim_edges)});
    }
    emit_csv({"stratum", "orders", "count", "ramification", "codim"}, rows);
    return 0;
  }
  json out;
  out["r"] = opt.r;
  out["genus"] = rspin::nodal_nets::genus(g);
  out["stratum_count"] = strata.size();
  out["strata"] = json::array();
  for (const auto& s : strata) {
    json orders = json::array();
    for (const auto& o : s.orders) {
      if (o.singular)
        orders.push_back(json::array({o.u, o.v}));
      else
        orders.push_back(nullptr);
    }
    out["strata"].push_back(json{{"orders", std::move(orders)},
                                 {"degrees", s.vertex_degrees},
                                 {"ramification", s.ramification},
                                 {"gluing", s.gluing},
                                 {"count", s.net_count},
                                 {"codim", s.codim_edges}});
  }
  emit(out);
  return 0;
}

int run_degree_check(const Options& opt) {
  auto dc = rspin::nodal_nets::degree_identity_check(opt.g, opt.r);
  if (opt.format == "csv") {
    emit_csv({"g", "r", "weighted_total", "expected", "ok"},
             {{std::to_string(opt.g), std::to_string(opt.r),
               std::to_string(dc.weighted_total), std::to_string(dc.expected),
               dc.ok ? "true" : "false"}});
    return 0;
  }
  json out;
  out["g"] = opt.g;
  out["r"] = opt.r;
  out["weighted_total"] = dc.weighted_total;
  out["expected"] = dc.expected;
  out["ok"] = dc.ok;
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact invariants of level-r root structures on curves"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_gr, bool with_uvd) {
    sub->add_option("--format", opt.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    if (with_gr) {
      sub->add_option("--g", opt.g, "genus");
      sub->add_option("--r", opt.r, "level")->required();
      sub->add_option("--m", opt.m, "comma-separated twists (may be empty)");
    }
    if (with_uvd) {
      sub->add_option("--u", opt.u, "branch order u")->required();
      sub->add_option("--v", opt.v, "branch order v")->required();
      sub->add_option("--d", opt.d, "power")->required();
    }
  };

  CLI::App* components = app.add_subcommand(
      "components", "monodromy-invariant classes of the coordinate space");
  add_common(components, true, false);
  components->get_option("--g")->required();

  CLI::App* orbits = app.add_subcommand("orbits", "orbit partition under a twist generator set");
  add_common(orbits, true, false);
  orbits->get_option("--g")->required();
  orbits->add_option("--mode", opt.mode, "generator set: standard|mod2_full");

  CLI::App* counts = app.add_subcommand("counts", "closed-form counts and invariants");
  add_common(counts, true, false);
  counts->get_option("--g")->required();

  CLI::App* local = app.add_subcommand("local", "power-map exponents and images at a node");
  add_common(local, false, true);
  auto* ropt = local->add_option("--r", opt.r, "level (adds layer-order data)");

  CLI::App* rewrite_check = app.add_subcommand(
      "rewrite-check", "relation-by-relation verification of a power map");
  add_common(rewrite_check, false, true);

  CLI::App* nodal = app.add_subcommand("nodal", "boundary strata of a dual graph");
  nodal->add_option("--graph", opt.graph, "dual graph JSON file")->required();
  nodal->add_option("--r", opt.r, "level")->required();
  nodal->add_option("--m", opt.m, "override leg twists (comma-separated)");
  nodal->add_option("--format", opt.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* degree_check = app.add_subcommand(
      "degree-check", "weighted one-node degree identity");
  degree_check->add_option("--g", opt.g, "genus")->required();
  degree_check->add_option("--r", opt.r, "level")->required();
  degree_check->add_option("--format", opt.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::ostringstream os;
    int code = app.exit(e, os, os);
    std::string msg = os.str();
    while (!msg.empty() && (msg.back() == '\n' || msg.back() == '\r'))
      msg.pop_back();
    for (char& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: " << (msg.empty() ? e.get_name() : msg) << "\n";
    return code == 0 ? 0 : 1;
  }

  try {
    opt.has_r = ropt->count() > 0;
    if (components->parsed()) return run_components(opt);
    if (orbits->parsed()) return run_orbits(opt);
    if (counts->parsed()) return run_counts(opt);
    if (local->parsed()) return run_local(opt);
    if (rewrite_check->parsed()) return run_rewrite_check(opt);
    if (nodal->parsed()) return run_nodal(opt);
    if (degree_check->parsed()) return run_degree_check(opt);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (...) {
    std::cerr << "error: unexpected failure\n";
    return 1;
  }
}

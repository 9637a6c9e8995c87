// Command-line front end: enumeration, tables, derivations, W(E7) and the
// arithmetic bounds, plus the full verification run.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dpl/arithmetic.hpp"
#include "dpl/classes.hpp"
#include "dpl/curves.hpp"
#include "dpl/verify.hpp"
#include "dpl/weyl.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string g_command;  // reconstructed argv, hashed into every header
std::string g_format = "text";

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json meta(const std::string& input = "") {
  return {{"tool", "dpl"}, {"version", kVersion}, {"command", g_command},
          {"input_digest", digest(g_command + "\n" + input)}};
}

std::string comment_header(const std::string& lead, const std::string& input = "") {
  const auto m = meta(input);
  std::ostringstream os;
  os << lead << " dpl " << kVersion << " | " << g_command << " | input " << m["input_digest"].get<std::string>()
     << "\n";
  return os.str();
}

// Writes to a file when a path is given, stdout otherwise.
void emit(const std::string& text, const std::string& path = "") {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void require_format(std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (g_format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw CLI::ValidationError("--format", "this command supports: " + list);
}

std::string json_text(json body, const std::string& input = "") {
  json out = {{"meta", meta(input)}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out.dump(2) + "\n";
}

json class_json(const dpl::DivisorClass& c) {
  json a = json::array();
  for (auto v : c) a.push_back(v);
  return a;
}

std::string class_name(const dpl::DivisorClass& c) {
  const auto& cat = dpl::degree2_catalog();
  if (c.rank() != 7) return c.to_string();
  if (auto i = cat.pre_index(c)) return cat.pre_name(*i);
  if (auto i = cat.root_index(c)) return cat.root_name(*i);
  return c.to_string();
}

dpl::DivisorClass parse_class(const std::string& s) {
  if (!s.empty() && (s[0] == '[' || s[0] == '(')) {
    json a = json::parse(s[0] == '(' ? "[" + s.substr(1, s.size() - 2) + "]" : s);
    std::vector<std::int64_t> v = a.get<std::vector<std::int64_t>>();
    return dpl::DivisorClass(std::span<const std::int64_t>(v));
  }
  return dpl::class_from_name(s);
}

// ---- enumerate / tables ----

void cmd_enumerate(int rank, const std::string& kind, const std::string& out) {
  require_format({"json", "text", "csv"});
  const dpl::SurfaceLattice lat(rank);
  const auto classes = kind == "roots" ? dpl::root_classes(lat) : dpl::pre_minus1_classes(lat);
  const bool named = rank == 7;
  const std::string input = std::to_string(rank) + kind;
  if (g_format == "json") {
    json list = json::array();
    for (const auto& c : classes) {
      json e = {{"class", class_json(c)}};
      if (named) e["name"] = class_name(c);
      list.push_back(e);
    }
    emit(json_text({{"lattice", {{"rank", rank}}}, {"kind", kind}, {"count", classes.size()}, {"classes", list}}, input),
         out);
    return;
  }
  std::ostringstream os;
  os << comment_header("#", input);
  if (g_format == "csv") os << "name,class\n";
  for (const auto& c : classes) os << (named ? class_name(c) : "") << (g_format == "csv" ? "," : " ") << '"' << c.to_string() << "\"\n";
  if (g_format == "text") os << classes.size() << " classes\n";
  emit(os.str(), out);
}

void cmd_tables(const std::string& out) {
  require_format({"csv", "json"});
  const auto& cat = dpl::degree2_catalog();
  std::vector<std::string> pre, roots;
  for (const char* f : {"A", "B", "C", "D"})
    for (const auto& n : dpl::family_members(f)) pre.push_back(n.str());
  for (const char* f : {"A'", "B'", "C'"})
    for (const auto& n : dpl::family_members(f)) roots.push_back(n.str());
  const std::vector<std::pair<const std::vector<std::string>*, const std::vector<std::string>*>> blocks = {
      {&pre, &pre}, {&roots, &roots}, {&pre, &roots}};
  if (g_format == "json") {
    json rows = json::array();
    for (auto [l, r] : blocks)
      for (const auto& a : *l)
        for (const auto& b : *r) rows.push_back({a, b, cat.dot(dpl::class_from_name(a), dpl::class_from_name(b))});
    emit(json_text({{"columns", {"left_name", "right_name", "value"}}, {"rows", rows}}), out);
    return;
  }
  std::ostringstream os;
  os << comment_header("#") << "left_name,right_name,value\n";
  for (auto [l, r] : blocks)
    for (const auto& a : *l)
      for (const auto& b : *r) os << a << ',' << b << ',' << cat.dot(dpl::class_from_name(a), dpl::class_from_name(b)) << '\n';
  emit(os.str(), out);
}

// ---- classify / derive / contract ----

json configuration_json(const dpl::Configuration& cfg) {
  json comps = json::array();
  for (std::size_t c = 0; c < cfg.components.size(); ++c) {
    json roots = json::array();
    for (auto p : cfg.components[c]) roots.push_back(class_name(cfg.simple_roots[p]));
    comps.push_back({{"label", cfg.component_labels[c].str()}, {"roots", roots}});
  }
  return {{"type", cfg.type.name()}, {"components", comps}, {"orbits", cfg.orbits}, {"a2_conjugate", cfg.a2_conjugate}};
}

void cmd_classify(const std::string& input_path, const std::string& out) {
  require_format({"json", "text"});
  std::ifstream in(input_path);
  if (!in) throw std::runtime_error("cannot read " + input_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const json j = json::parse(buf.str());
  std::vector<dpl::DivisorClass> roots;
  for (const auto& r : j.at("roots")) {
    if (r.is_string()) {
      roots.push_back(dpl::class_from_name(r.get<std::string>()));
    } else {
      auto v = r.get<std::vector<std::int64_t>>();
      roots.push_back(dpl::DivisorClass(std::span<const std::int64_t>(v)));
    }
  }
  const int rank = roots.empty() ? j.value("rank", 7) : roots[0].rank();
  const dpl::SurfaceLattice lat(rank);
  std::vector<std::vector<std::size_t>> orbits = j.value("orbits", std::vector<std::vector<std::size_t>>{});
  std::vector<bool> a2(0);
  std::vector<std::size_t> conj = j.value("a2_conjugate_components", std::vector<std::size_t>{});
  const auto cfg0 = dpl::make_configuration(lat, roots);
  if (!conj.empty()) {
    a2.assign(cfg0.components.size(), false);
    for (auto c : conj) a2.at(c) = true;
  }
  const auto cfg = dpl::make_configuration(lat, roots, orbits, a2);
  json body = configuration_json(cfg);
  if (rank == 7) {
    const auto fp = dpl::orbit_fingerprint(cfg);
    body["fingerprint"] = fp.digest();
    body["free_curves"] = fp.free_curves();
  }
  if (g_format == "json") {
    emit(json_text(body, buf.str()), out);
  } else {
    std::ostringstream os;
    os << comment_header("#", buf.str()) << "type " << cfg.type.name() << "\n";
    for (const auto& c : body["components"]) os << "  " << c["label"].get<std::string>() << ": " << c["roots"].dump() << "\n";
    if (body.contains("fingerprint")) os << "fingerprint " << body["fingerprint"].get<std::string>() << "\n";
    emit(os.str(), out);
  }
}

json derived_json(const dpl::Configuration& cfg, const dpl::DerivedGraph& g) {
  json verts = json::array();
  for (const auto& v : g.vertices)
    verts.push_back({{"kind", v.is_root ? "root" : "curve"}, {"name", v.label}, {"class", class_json(v.cls)}});
  json contracted = json::array();
  for (const auto& c : g.contraction_set) contracted.push_back(class_name(c));
  json surviving = json::array();
  for (auto p : g.surviving_roots) surviving.push_back(class_name(cfg.simple_roots[p]));
  json body = {{"configuration", configuration_json(cfg)},
               {"rule", g.rule},
               {"vertices", verts},
               {"edges", g.edges},
               {"contracted", contracted},
               {"minimal", g.minimal()},
               {"target", {{"degree", g.target_degree}, {"type", g.target_type.name()}}},
               {"surviving_roots", surviving}};
  if (g.minimal()) body["minimal_case"] = g.minimal_case;
  if (g.blowdown) body["target"]["lattice"] = g.blowdown->target.form() == dpl::LatticeForm::kQuadric
                                                  ? json{{"form", "quadric"}}
                                                  : json{{"rank", g.blowdown->target.rank()}};
  return body;
}

void cmd_derive(const std::string& type, const std::string& variant, const std::string& orbits_spec,
                const std::string& a2_spec, const std::string& dot_out, const std::string& json_out) {
  std::vector<std::vector<std::size_t>> orbits;
  if (!orbits_spec.empty()) orbits = json::parse(orbits_spec).get<std::vector<std::vector<std::size_t>>>();
  std::vector<bool> a2;
  if (!a2_spec.empty()) {
    const auto base = dpl::registry_representative(type, variant);
    a2.assign(base.components.size(), false);
    for (auto c : json::parse(a2_spec).get<std::vector<std::size_t>>()) a2.at(c) = true;
  }
  const auto cfg = dpl::registry_representative(type, variant, orbits, a2);
  const auto g = dpl::derive_configuration(cfg);
  const std::string input = type + "|" + variant + "|" + orbits_spec + "|" + a2_spec;
  const std::string name = type + (variant.empty() ? "" : " (" + variant + ")");
  if (!dot_out.empty()) emit(comment_header("//", input) + dpl::to_dot(g, name), dot_out);
  if (!json_out.empty()) emit(json_text(derived_json(cfg, g), input), json_out);
  if (!dot_out.empty() || !json_out.empty()) return;
  require_format({"text", "json", "dot"});
  if (g_format == "dot") {
    emit(comment_header("//", input) + dpl::to_dot(g, name));
  } else if (g_format == "json") {
    emit(json_text(derived_json(cfg, g), input));
  } else {
    std::ostringstream os;
    os << comment_header("#", input) << name << ": " << g.rule << "\n  contract";
    for (const auto& c : g.contraction_set) os << ' ' << class_name(c);
    if (g.minimal()) os << " (none; minimal, case " << g.minimal_case << ")";
    os << "\n  target degree " << g.target_degree << ", " << g.target_type.name() << "\n";
    emit(os.str());
  }
}

void cmd_contract(int rank, const std::vector<std::string>& names, const std::string& out) {
  require_format({"json", "text"});
  const dpl::SurfaceLattice lat(rank);
  std::vector<dpl::DivisorClass> curves;
  for (const auto& n : names) curves.push_back(parse_class(n));
  const auto bd = dpl::blow_down(lat, curves);
  std::string input = std::to_string(rank);
  for (const auto& n : names) input += "|" + n;
  json proj = json::array();
  for (std::size_t r = 0; r < bd.projection.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < bd.projection.cols(); ++c) row.push_back(bd.projection(r, c));
    proj.push_back(row);
  }
  const bool quadric = bd.target.form() == dpl::LatticeForm::kQuadric;
  json target = quadric ? json{{"form", "quadric"}} : json{{"rank", bd.target.rank()}};
  target["degree"] = bd.target.degree();
  if (g_format == "json") {
    emit(json_text({{"source", {{"rank", rank}}}, {"contracted", names}, {"target", target}, {"projection", proj}}, input),
         out);
  } else {
    std::ostringstream os;
    os << comment_header("#", input) << "target " << (quadric ? "quadric" : "rank " + std::to_string(bd.target.rank()))
       << ", degree " << bd.target.degree() << "\n";
    emit(os.str(), out);
  }
}

// ---- weyl ----

struct WeylContext {
  dpl::E7RootSystem sys{dpl::degree2_catalog()};
  dpl::WeylGroup group;
  explicit WeylContext(unsigned threads) {
    auto opt = dpl::WeylOptions::from_env();
    opt.threads = threads;
    group = dpl::WeylGroup::generate(sys, opt);
  }
};

std::string set_text(const std::set<int>& s) {
  std::ostringstream os;
  bool first = true;
  os << '{';
  for (int v : s) os << (first ? "" : ",") << v, first = false;
  os << '}';
  return os.str();
}

void weyl_out(const json& body, const std::string& text) {
  require_format({"json", "text"});
  if (g_format == "json")
    emit(json_text(body));
  else
    emit(comment_header("#") + text);
}

void cmd_weyl_order(unsigned threads) {
  WeylContext ctx(threads);
  weyl_out({{"order", ctx.group.order()}, {"cached", ctx.group.from_cache()}},
           "order " + std::to_string(ctx.group.order()) + (ctx.group.from_cache() ? " (cache)" : "") + "\n");
}

void cmd_weyl_transitivity(const std::string& which, unsigned threads) {
  WeylContext ctx(threads);
  const auto& sys = ctx.sys;
  std::size_t total = 0, orbit = 0;
  if (which == "d1") {
    total = dpl::kE7Roots;
    orbit = dpl::generator_orbit(sys, {0}).size();
  } else if (which == "d2") {
    const auto d2 = dpl::delta2(sys);
    total = d2.size();
    orbit = dpl::generator_orbit(sys, {d2[0][0], d2[0][1]}).size();
  } else {
    const auto s = dpl::scan_group(ctx.group, {}, true, threads);
    total = s.delta3.size();
    const auto& t = s.delta3.at(0);
    const auto o = dpl::generator_orbit(sys, {t[0], t[1], t[2], t[3]});
    orbit = 0;
    for (const auto& v : o)
      orbit += std::binary_search(s.delta3.begin(), s.delta3.end(), dpl::RootQuad{v[0], v[1], v[2], v[3]});
    if (o.size() != orbit) orbit = o.size() + total;  // orbit left the set: force a mismatch
  }
  const bool transitive = orbit == total;
  weyl_out({{"set", which}, {"size", total}, {"orbit_of_first", orbit}, {"transitive", transitive}},
           which + ": " + std::to_string(total) + " elements, orbit " + std::to_string(orbit) +
               (transitive ? ", transitive\n" : ", not transitive\n"));
}

void cmd_weyl_traces(const std::string& kind, std::size_t witness, unsigned threads) {
  const auto filter = dpl::parse_trace_filter(kind);
  WeylContext ctx(threads);
  dpl::TraceQuery q{filter, {}};
  if (filter == dpl::TraceFilter::kFixRoot) {
    q.witness = {static_cast<std::uint8_t>(witness % dpl::kE7Roots)};
  } else if (filter == dpl::TraceFilter::kSwapPair) {
    const auto d2 = dpl::delta2(ctx.sys);
    const auto& p = d2.at(witness % d2.size());
    q.witness = {p[0], p[1]};
  } else {
    const auto s = dpl::scan_group(ctx.group, {}, true, threads);
    const auto& t = s.delta3.at(witness % s.delta3.size());
    q.witness = {t[0], t[1], t[2], t[3]};
  }
  const auto s = dpl::scan_group(ctx.group, {q}, false, threads);
  json w = json::array();
  std::string names;
  for (auto r : q.witness) {
    w.push_back(ctx.sys.catalog().root_name(r));
    names += (names.empty() ? "" : " ") + ctx.sys.catalog().root_name(r);
  }
  weyl_out({{"filter", kind}, {"witness", w}, {"elements", s.filter_counts[0]}, {"traces", s.trace_sets[0]}},
           kind + " [" + names + "]: " + std::to_string(s.filter_counts[0]) + " elements, traces " +
               set_text(s.trace_sets[0]) + "\n");
}

// ---- arith ----

json row_json(const dpl::ArithRow& r) {
  return {{"q", r.q.q},         {"char", r.q.p},   {"min_X", r.min_x},   {"max_R", r.max_r.str()},
          {"min_offR", r.min_off_r}, {"required", r.required}, {"ok", r.ok}};
}

void cmd_arith_bounds(const std::string& c, std::int64_t q) {
  require_format({"json", "text"});
  const auto cs = dpl::parse_case(c);
  const auto pp = dpl::prime_power(q);
  const bool c2 = pp.p == 2;
  const auto r = dpl::ramification_point_bound(q, cs, c2);
  const auto off = dpl::off_ramification_lower_bound(q, cs, c2);
  const int need = dpl::required_point_count(cs);
  const json body = {{"case", c},
                     {"q", q},
                     {"char", pp.p},
                     {"min_X", dpl::min_surface_points(q, cs)},
                     {"max_R", r.str()},
                     {"min_offR", off},
                     {"required", need},
                     {"ok", off >= need}};
  if (g_format == "json") {
    emit(json_text(body));
    return;
  }
  std::ostringstream os;
  os << comment_header("#") << "case " << c << ", q=" << q << " (char " << pp.p << "): #X >= " << body["min_X"]
     << ", #R <= " << r.str() << ", off R >= " << off << ", need " << need << (off >= need ? " -> ok" : " -> fails")
     << "\n";
  emit(os.str());
}

void cmd_arith_threshold(const std::string& c, std::int64_t horizon) {
  require_format({"json", "text"});
  const auto t = dpl::unirationality_threshold(dpl::parse_case(c), horizon);
  const json body = {{"case", c},          {"q0", t.q0},           {"last_failure", t.last_failure},
                     {"horizon", t.horizon}, {"monotone", t.monotone}};
  if (g_format == "json")
    emit(json_text(body));
  else
    emit(comment_header("#") + "case " + c + ": every q >= " + std::to_string(t.q0) + " passes; largest failure q=" +
         std::to_string(t.last_failure) + " (scanned to " + std::to_string(t.horizon) + ")\n");
}

void cmd_arith_table(const std::string& c, std::int64_t qmax, const std::string& csv_out) {
  const auto rows = dpl::arithmetic_table(dpl::parse_case(c), qmax);
  const std::string input = c + "|" + std::to_string(qmax);
  if (!csv_out.empty() || g_format == "csv") {
    std::ostringstream os;
    os << comment_header("#", input) << "q,char,min_X,max_R,min_offR,required,ok\n";
    for (const auto& r : rows)
      os << r.q.q << ',' << r.q.p << ',' << r.min_x << ',' << r.max_r.str() << ',' << r.min_off_r << ',' << r.required
         << ',' << (r.ok ? "true" : "false") << '\n';
    emit(os.str(), csv_out);
    return;
  }
  require_format({"json", "text", "csv"});
  json list = json::array();
  for (const auto& r : rows) list.push_back(row_json(r));
  if (g_format == "json") {
    emit(json_text({{"case", c}, {"rows", list}}, input));
    return;
  }
  std::ostringstream os;
  os << comment_header("#", input);
  for (const auto& r : rows)
    os << std::setw(8) << r.q.q << "  char " << std::setw(3) << r.q.p << "  off R >= " << std::setw(10) << r.min_off_r
       << (r.ok ? "  ok" : "  fails") << '\n';
  emit(os.str());
}

// ---- verify-all ----

int cmd_verify_all(const dpl::VerifyOptions& opt, const std::string& out) {
  require_format({"text", "json"});
  const auto rep = dpl::verify_all(opt);
  if (g_format == "json") {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"criterion", c.id}, {"name", c.name}, {"status", c.status}, {"expected", c.expected},
                        {"actual", c.actual}, {"detail", c.detail}, {"seconds", c.seconds}});
    emit(json_text({{"command", rep.command}, {"ok", rep.ok()}, {"checks", checks}, {"seconds", rep.seconds}}), out);
  } else {
    std::ostringstream os;
    os << comment_header("#");
    for (const auto& c : rep.checks) {
      os << std::left << std::setw(5) << (c.status == "pass" ? "PASS" : c.status == "skipped" ? "SKIP" : "FAIL") << ' '
         << std::setw(3) << c.id << std::setw(26) << c.name << c.actual << '\n';
      if (c.status == "fail") os << "      expected: " << c.expected << "\n      diff:     " << c.detail << '\n';
    }
    os << (rep.ok() ? "all checks pass" : "some checks FAILED") << " (" << std::fixed << std::setprecision(1)
       << rep.seconds << " s)\n";
    emit(os.str(), out);
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) g_command += std::string(i > 1 ? " " : "") + argv[i];

  CLI::App app{"del Pezzo degree-2 configuration toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  unsigned threads = 1;
  bool no_cache = false;
  app.add_option("--format", g_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads for group scans")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-cache", no_cache, "ignore DPL_CACHE_DIR");

  int rank = 7;
  std::string kind = "pre1", out;
  auto* en = app.add_subcommand("enumerate", "list pre(-1) classes or roots");
  en->add_option("--rank", rank)->check(CLI::Range(0, 8));
  en->add_option("--kind", kind)->check(CLI::IsMember({"pre1", "roots"}));
  en->add_option("-o,--output", out);

  auto* tb = app.add_subcommand("tables", "intersection numbers of all named classes");
  tb->add_option("-o,--output", out);

  std::string input;
  auto* cl = app.add_subcommand("classify", "type and components of a root configuration");
  cl->add_option("--input", input)->required();
  cl->add_option("-o,--output", out);

  std::string type, variant, orbits, a2, dot_out, json_out;
  auto* dv = app.add_subcommand("derive", "curves to contract and the resulting surface");
  dv->add_option("--type", type)->required();
  dv->add_option("--variant", variant);
  dv->add_option("--orbits", orbits, "Galois orbits of components, e.g. [[0],[1,2]]");
  dv->add_option("--a2-conjugate", a2, "components whose two roots are swapped, e.g. [0]");
  dv->add_option("--dot", dot_out);
  dv->add_option("--json", json_out);

  std::vector<std::string> classes;
  auto* ct = app.add_subcommand("contract", "blow down disjoint (-1)-classes");
  ct->add_option("--rank", rank)->check(CLI::Range(1, 8));
  ct->add_option("classes", classes, "names (B13) or coefficient lists ([1,-1,0,...])");
  ct->add_option("-o,--output", out);

  auto* wy = app.add_subcommand("weyl", "W(E7) acting on the 126 roots");
  wy->require_subcommand(1);
  auto* wo = wy->add_subcommand("order");
  std::string which;
  auto* wt = wy->add_subcommand("transitivity");
  wt->add_option("set", which)->required()->check(CLI::IsMember({"d1", "d2", "d3"}));
  std::string filter;
  std::size_t witness = 0;
  auto* wr = wy->add_subcommand("traces");
  wr->add_option("filter", filter)->required()->check(CLI::IsMember({"fix-root", "swap-pair", "cycle-quad"}));
  wr->add_option("--witness", witness, "index of the fixed root, pair or quadruple");

  std::string acase;
  std::int64_t q = 0, qmax = 1000, horizon = 1000000;
  std::string csv_out;
  auto* ar = app.add_subcommand("arith", "point-count bounds for the minimal cases");
  ar->require_subcommand(1);
  auto* ab = ar->add_subcommand("bounds");
  ab->add_option("--case", acase)->required()->check(CLI::IsMember({"1", "2", "3"}));
  ab->add_option("--q", q)->required();
  auto* at = ar->add_subcommand("threshold");
  at->add_option("--case", acase)->required()->check(CLI::IsMember({"1", "2", "3"}));
  at->add_option("--horizon", horizon);
  auto* aw = ar->add_subcommand("table");
  aw->add_option("--case", acase)->required()->check(CLI::IsMember({"1", "2", "3"}));
  aw->add_option("--qmax", qmax);
  aw->add_option("--csv", csv_out);

  dpl::VerifyOptions vopt;
  auto* va = app.add_subcommand("verify-all", "run every acceptance check");
  va->add_flag("--skip-weyl", vopt.skip_weyl);
  va->add_option("--seed", vopt.seed);
  va->add_option("-o,--output", out);

  CLI11_PARSE(app, argc, argv);
  if (no_cache) unsetenv("DPL_CACHE_DIR");
  vopt.threads = threads;

  try {
    if (*en) cmd_enumerate(rank, kind, out);
    if (*tb) {
      if (g_format == "text") g_format = "csv";
      cmd_tables(out);
    }
    if (*cl) cmd_classify(input, out);
    if (*dv) cmd_derive(type, variant, orbits, a2, dot_out, json_out);
    if (*ct) cmd_contract(rank, classes, out);
    if (*wo) cmd_weyl_order(threads);
    if (*wt) cmd_weyl_transitivity(which, threads);
    if (*wr) cmd_weyl_traces(filter, witness, threads);
    if (*ab) cmd_arith_bounds(acase, q);
    if (*at) cmd_arith_threshold(acase, horizon);
    if (*aw) cmd_arith_table(acase, qmax, csv_out);
    if (*va) return cmd_verify_all(vopt, out);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

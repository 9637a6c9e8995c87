#include "dpl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "dpl/arithmetic.hpp"
#include "dpl/classes.hpp"
#include "dpl/curves.hpp"
#include "dpl/figures.hpp"
#include "dpl/weyl.hpp"

namespace dpl {

namespace {

using Clock = std::chrono::steady_clock;

// Collects problems; the first few end up in the report.
struct Issues {
  std::vector<std::string> list;
  void add(std::string s) { list.push_back(std::move(s)); }
  bool empty() const { return list.empty(); }
  std::string summary(std::size_t keep = 8) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < list.size() && i < keep; ++i) os << (i ? "; " : "") << list[i];
    if (list.size() > keep) os << "; ... " << list.size() - keep << " more";
    return os.str();
  }
};

CheckResult finish(CheckResult r, const Issues& issues, std::string actual) {
  r.status = issues.empty() ? "pass" : "fail";
  r.actual = std::move(actual);
  if (!issues.empty()) r.detail = issues.summary();
  return r;
}

CheckResult start(int id, std::string name) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

std::string join(const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s) os << (first ? "" : ",") << v, first = false;
  os << '}';
  return os.str();
}

std::size_t common(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t n = 0;
  for (int x : a) n += std::count(b.begin(), b.end(), x);
  return n;
}

bool has(const std::vector<int>& a, int x) { return std::find(a.begin(), a.end(), x) != a.end(); }

// Reference intersection tables, transcribed cell by cell. nullopt: no cell
// covers this index pattern.
std::optional<int> reference_cell(const ClassName& a, const ClassName& b) {
  const auto& L = a.family;
  const auto& R = b.family;
  const auto& x = a.indices;
  const auto& y = b.indices;
  const auto by_overlap = [&](std::initializer_list<int> vals) {
    // values listed for overlap sizes max, max-1, ..., 0
    const int top = static_cast<int>(vals.size()) - 1;
    return *(vals.begin() + (top - static_cast<int>(common(x, y))));
  };
  // the sign convention of a directed pair (k,l) against an index set
  const auto directed = [&](const std::vector<int>& set, int k, int l, int only_k, int only_l) -> int {
    const bool hk = has(set, k), hl = has(set, l);
    if (hk && hl) return 0;
    if (hk) return only_k;
    if (hl) return only_l;
    return 0;
  };

  if (L == "A" && R == "A") return x[0] == y[0] ? -1 : 0;
  if (L == "A" && R == "B") return has(y, x[0]) ? 1 : 0;
  if (L == "A" && R == "C") return has(y, x[0]) ? 0 : 1;
  if (L == "A" && R == "D") return x[0] == y[0] ? 2 : 1;
  if (L == "B" && R == "B") return by_overlap({-1, 0, 1});
  if (L == "B" && R == "C") return by_overlap({2, 1, 0});
  if (L == "B" && R == "D") return has(x, y[0]) ? 0 : 1;
  if (L == "C" && R == "C") return by_overlap({-1, 0, 1});
  if (L == "C" && R == "D") return has(x, y[0]) ? 1 : 0;
  if (L == "D" && R == "D") return x[0] == y[0] ? -1 : 0;

  if (L == "A'" && R == "A'") {
    const int i = x[0], j = x[1], l = y[0], m = y[1];
    if (i == l && j == m) return -2;
    if (i == m && j == l) return 2;
    if (i == l) return -1;
    if (i == m) return 1;
    if (j == m) return -1;
    if (j == l) return std::nullopt;  // no reference cell
    return 0;
  }
  if (L == "A'" && R == "B'") return directed(y, x[0], x[1], 1, -1);
  if (L == "A'" && R == "C'") return x[0] == y[0] ? -1 : (x[1] == y[0] ? 1 : 0);
  if (L == "B'" && R == "B'") return by_overlap({-2, -1, 0, 1});
  if (L == "B'" && R == "C'") return has(x, y[0]) ? 0 : -1;
  if (L == "C'" && R == "C'") return x[0] == y[0] ? -2 : -1;

  if (L == "A" && R == "A'") return x[0] == y[0] ? -1 : (x[0] == y[1] ? 1 : 0);
  if (L == "A" && R == "B'") return has(y, x[0]) ? 1 : 0;
  if (L == "A" && R == "C'") return x[0] == y[0] ? 0 : 1;
  if (L == "B" && R == "A'") return directed(x, y[0], y[1], 1, -1);
  if (L == "B" && R == "B'") return by_overlap({-1, 0, 1});
  if (L == "B" && R == "C'") return has(x, y[0]) ? 1 : 0;
  if (L == "C" && R == "A'") return directed(x, y[0], y[1], -1, 1);
  if (L == "C" && R == "B'") return by_overlap({1, 0, -1});
  if (L == "C" && R == "C'") return has(x, y[0]) ? -1 : 0;
  if (L == "D" && R == "A'") return x[0] == y[0] ? 1 : (x[0] == y[1] ? -1 : 0);
  if (L == "D" && R == "B'") return has(y, x[0]) ? -1 : 0;
  if (L == "D" && R == "C'") return x[0] == y[0] ? 0 : -1;
  return std::nullopt;
}

const std::vector<std::pair<std::string, std::string>>& reference_tables() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"A", "A"},   {"A", "B"},   {"A", "C"},   {"A", "D"},   {"B", "B"},   {"B", "C"},   {"B", "D"},
      {"C", "C"},   {"C", "D"},   {"D", "D"},   {"A'", "A'"}, {"A'", "B'"}, {"A'", "C'"}, {"B'", "B'"},
      {"B'", "C'"}, {"C'", "C'"}, {"A", "A'"},  {"A", "B'"},  {"A", "C'"},  {"B", "A'"},  {"B", "B'"},
      {"B", "C'"},  {"C", "A'"},  {"C", "B'"},  {"C", "C'"},  {"D", "A'"},  {"D", "B'"},  {"D", "C'"}};
  return t;
}

CheckResult class_counts() {
  CheckResult r = start(1, "class-counts");
  r.expected = "pre(-1)=56 roots=126 rank8 pre(-1)=240";
  Issues is;
  const auto& cat = degree2_catalog();
  const auto p7 = cat.pre_minus1().size(), r7 = cat.roots().size();
  const auto p8 = pre_minus1_classes(SurfaceLattice(8)).size();
  if (p7 != 56) is.add("rank 7 pre(-1): " + std::to_string(p7));
  if (r7 != 126) is.add("rank 7 roots: " + std::to_string(r7));
  if (p8 != 240) is.add("rank 8 pre(-1): " + std::to_string(p8));
  return finish(r, is,
                "pre(-1)=" + std::to_string(p7) + " roots=" + std::to_string(r7) + " rank8 pre(-1)=" +
                    std::to_string(p8));
}

CheckResult intersection_tables() {
  CheckResult r = start(2, "intersection-tables");
  r.expected = "0 mismatches";
  Issues is;
  const auto& cat = degree2_catalog();
  std::size_t cells = 0, gaps = 0;
  std::set<std::string> gap_cells;
  for (const auto& [lf, rf] : reference_tables()) {
    const auto left = family_members(lf), right = family_members(rf);
    for (const auto& a : left)
      for (const auto& b : right) {
        const auto want = reference_cell(a, b);
        const auto got = cat.dot(class_from_name(a), class_from_name(b));
        if (!want) {
          ++gaps;
          gap_cells.insert(lf + " x " + rf + " -> " + std::to_string(got));
          continue;
        }
        ++cells;
        if (*want != got)
          is.add(a.str() + "." + b.str() + ": reference " + std::to_string(*want) + ", computed " + std::to_string(got));
      }
  }
  std::ostringstream os;
  os << cells << " pairs compared, " << is.list.size() << " mismatches, " << gaps << " pairs without a reference cell";
  for (const auto& g : gap_cells) os << " [" << g << "]";
  return finish(r, is, os.str());
}

CheckResult intersection_ranges() {
  CheckResult r = start(3, "intersection-ranges");
  r.expected = "pre.pre in [-1,2], pre.root in [-1,1], root.root in [-2,2]; product 2 iff sum is -K";
  Issues is;
  const auto& cat = degree2_catalog();
  const auto& pre = cat.pre_minus1();
  const auto& roots = cat.roots();
  const DivisorClass minus_k = -cat.canonical();
  std::size_t twos = 0;
  for (std::size_t a = 0; a < pre.size(); ++a)
    for (std::size_t b = 0; b < pre.size(); ++b) {
      const auto v = cat.dot(pre[a], pre[b]);
      if (v < -1 || v > 2) is.add(cat.pre_name(a) + "." + cat.pre_name(b) + "=" + std::to_string(v));
      const bool sum = pre[a] + pre[b] == minus_k;
      if ((v == 2) != sum) is.add("product 2 vs -K sum disagree at " + cat.pre_name(a) + "," + cat.pre_name(b));
      twos += v == 2;
    }
  for (std::size_t a = 0; a < pre.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const auto v = cat.dot(pre[a], roots[b]);
      if (v < -1 || v > 1) is.add(cat.pre_name(a) + "." + cat.root_name(b) + "=" + std::to_string(v));
    }
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const auto v = cat.dot(roots[a], roots[b]);
      if (v < -2 || v > 2) is.add(cat.root_name(a) + "." + cat.root_name(b) + "=" + std::to_string(v));
    }
  return finish(r, is,
                std::to_string(pre.size() * pre.size() + pre.size() * roots.size() + roots.size() * roots.size()) +
                    " pairs in range; " + std::to_string(twos) + " ordered pairs with product 2, all summing to -K");
}

CheckResult root_pairing() {
  CheckResult r = start(4, "root-pairing");
  r.expected = "12 classes per root, paired by D -> -K-F-D without fixed points";
  Issues is;
  const auto& cat = degree2_catalog();
  const auto& pre = cat.pre_minus1();
  for (std::size_t f = 0; f < cat.roots().size(); ++f) {
    const auto& F = cat.roots()[f];
    const auto meet = classes_meeting(F, 1, cat);
    if (meet.size() != 12) {
      is.add(cat.root_name(f) + " meets " + std::to_string(meet.size()));
      continue;
    }
    for (auto d : meet) {
      const DivisorClass partner = -cat.canonical() - F - pre[d];
      const auto p = cat.pre_index(partner);
      if (!p || std::find(meet.begin(), meet.end(), *p) == meet.end()) {
        is.add(cat.root_name(f) + ": partner of " + cat.pre_name(d) + " leaves the set");
        continue;
      }
      if (*p == d) is.add(cat.root_name(f) + ": " + cat.pre_name(d) + " is its own partner");
      if (-cat.canonical() - F - pre[*p] != pre[d]) is.add(cat.root_name(f) + ": pairing not involutive");
      if (cat.dot(pre[d], partner) != 1) is.add(cat.root_name(f) + ": partners do not meet once");
    }
  }
  return finish(r, is, "126 roots checked, " + std::to_string(is.list.size()) + " problems");
}

CheckResult orthogonal_pairs() {
  CheckResult r = start(5, "orthogonal-pairs");
  r.expected = "2 disjoint common classes summing to -K-F-G; six listed pairs reproduced";
  Issues is;
  const auto& cat = degree2_catalog();
  const auto& roots = cat.roots();
  std::size_t pairs = 0;
  for (std::size_t f = 0; f < roots.size(); ++f)
    for (std::size_t g = f + 1; g < roots.size(); ++g) {
      if (cat.dot(roots[f], roots[g]) != 0) continue;
      ++pairs;
      std::vector<DivisorClass> both;
      for (const auto& d : cat.pre_minus1())
        if (cat.dot(d, roots[f]) == 1 && cat.dot(d, roots[g]) == 1) both.push_back(d);
      const std::string tag = cat.root_name(f) + "," + cat.root_name(g);
      if (both.size() != 2) {
        is.add(tag + ": " + std::to_string(both.size()) + " common classes");
        continue;
      }
      if (cat.dot(both[0], both[1]) != 0) is.add(tag + ": common classes meet");
      if (both[0] + both[1] != -cat.canonical() - roots[f] - roots[g]) is.add(tag + ": wrong sum");
    }
  const std::vector<std::tuple<std::string, std::string, std::string, std::string>> listed = {
      {"A'12", "A'34", "B13", "C24"}, {"A'12", "B'123", "A2", "C23"}, {"A'12", "B'345", "B16", "B17"},
      {"A'12", "C'3", "A2", "B13"},   {"B'123", "B'145", "A1", "B67"}, {"B'123", "C'1", "A2", "A3"}};
  for (const auto& [f, g, d1, d2] : listed) {
    const auto got = pair_classes(class_from_name(f), class_from_name(g), cat);
    std::set<std::string> names{cat.pre_name(*cat.pre_index(got.first)), cat.pre_name(*cat.pre_index(got.second))};
    if (names != std::set<std::string>{d1, d2})
      is.add("(" + f + "," + g + ") gave " + *names.begin() + "," + *names.rbegin());
  }
  return finish(r, is, std::to_string(pairs) + " orthogonal pairs, 6 listed pairs compared");
}

CheckResult choice_independence() {
  CheckResult r = start(6, "choice-independence");
  r.expected = "pair curves independent of root choice";
  Issues is;
  std::size_t entries = 0, choices = 0;
  for (const auto& e : registry_entries()) {
    const auto cfg = registry_representative(e.type, e.variant);
    if (cfg.components.size() < 2) continue;
    ++entries;
    for (std::size_t a = 0; a < cfg.components.size(); ++a)
      for (std::size_t b = a + 1; b < cfg.components.size(); ++b) {
        const auto ref = derive_pair_curves(cfg, a, b);
        for (auto fp : cfg.components[a])
          for (auto gp : cfg.components[b]) {
            ++choices;
            if (derive_pair_curves(cfg, a, b, std::make_pair(fp, gp)) != ref)
              is.add(e.type + (e.variant.empty() ? "" : " (" + e.variant + ")") + " components " + std::to_string(a) +
                     "," + std::to_string(b));
          }
      }
  }
  return finish(r, is,
                std::to_string(entries) + " representatives, " + std::to_string(choices) + " root choices agree");
}

CheckResult exceptional_free_curves() {
  CheckResult r = start(7, "exceptional-free-curves");
  r.expected = "free curves 32/20/8, points needed 9/6/3";
  Issues is;
  const auto& cat = degree2_catalog();
  const auto quads = eckardt_quadruples(cat);
  const std::vector<std::pair<ExceptionalCase, Configuration>> reps = {
      {ExceptionalCase::kOne, registry_representative("A1")},
      {ExceptionalCase::kTwo, registry_representative("A2", "", {}, {true})},
      {ExceptionalCase::kThree, registry_representative("4A1", "no-tri-curve", {{0, 1, 2, 3}})}};
  std::ostringstream act;
  for (const auto& [c, cfg] : reps) {
    const auto& info = arithmetic_case(c);
    const auto free = free_minus1_curves(cfg);
    std::set<std::size_t> free_pos;
    for (const auto& d : free) free_pos.insert(*cat.pre_index(d));
    // the largest set of free curves through one point: a full quadruple,
    // never more, since a quadruple already sums to -2K
    std::size_t inside = 0;
    for (const auto& q : quads) {
      if (!std::all_of(q.begin(), q.end(), [&](std::size_t i) { return free_pos.count(i) != 0; })) continue;
      ++inside;
      for (auto e : free_pos) {
        if (std::find(q.begin(), q.end(), e) != q.end()) continue;
        if (std::all_of(q.begin(), q.end(), [&](std::size_t i) { return cat.dot(cat.pre_minus1()[i], cat.pre_minus1()[e]) == 1; }))
          is.add("five free curves meet pairwise");
      }
    }
    const int n = static_cast<int>(free.size()) / 4 + 1;
    const std::string tag = "case " + std::to_string(static_cast<int>(c));
    if (static_cast<int>(free.size()) != info.free_curves)
      is.add(tag + ": " + std::to_string(free.size()) + " free curves, expected " + std::to_string(info.free_curves));
    if (n != info.required_points || n != required_point_count(c))
      is.add(tag + ": n=" + std::to_string(n) + ", expected " + std::to_string(info.required_points));
    act << tag << ": free=" << free.size() << " n=" << n << " quadruples=" << inside << "; ";
  }
  return finish(r, is, act.str());
}

CheckResult figure_totality() {
  CheckResult r = start(8, "figure-totality");
  r.expected = "every figure isomorphic with matching target; every variant drawn; 5/6/7 points contract 2/4/7";
  Issues is;
  std::size_t ok = 0;
  std::set<std::pair<std::string, std::string>> drawn;
  for (const auto& f : expected_figures()) {
    drawn.insert({f.type, f.variant});
    const auto c = check_figure(f);
    if (c.ok())
      ++ok;
    else
      is.add(f.label + ": " + c.detail);
  }
  for (const auto& e : registry_entries())
    if (!drawn.count({e.type, e.variant})) is.add("no figure for " + e.type + " " + e.variant);
  std::set<std::string> types;
  for (const auto& e : registry_entries()) types.insert(e.type);
  if (types.size() != degree2_type_names().size()) is.add("registry has " + std::to_string(types.size()) + " types");
  const std::map<int, std::pair<std::size_t, int>> many = {{5, {2, 4}}, {6, {4, 6}}, {7, {7, 9}}};
  for (const auto& e : registry_entries()) {
    const auto cfg = registry_representative(e.type, e.variant);
    const auto it = many.find(cfg.type.delta());
    if (it == many.end()) continue;
    const auto g = derive_configuration(cfg);
    if (g.contraction_set.size() != it->second.first || g.target_degree != it->second.second)
      is.add(e.type + ": contracts " + std::to_string(g.contraction_set.size()) + " to degree " +
             std::to_string(g.target_degree));
  }
  return finish(r, is,
                std::to_string(ok) + "/" + std::to_string(expected_figures().size()) + " figures match");
}

CheckResult weyl_checks(const VerifyOptions& opt) {
  CheckResult r = start(9, "weyl-e7");
  r.expected = "order 2903040; transitive on roots, pairs, quadruples; traces {-4,-2,-1,0,1,2,3,4,5,6,8} "
               "{-4,-2,-1,0,1,2} {0,2}";
  if (opt.skip_weyl) {
    r.status = "skipped";
    return r;
  }
  Issues is;
  const E7RootSystem sys(degree2_catalog());
  auto wopt = WeylOptions::from_env();
  wopt.threads = opt.threads;
  const auto g = WeylGroup::generate(sys, wopt);
  const auto rep = analyse_weyl(g, 5, opt.seed, opt.threads);
  if (rep.order != kE7Order) is.add("order " + std::to_string(rep.order));
  if (!rep.transitive1) is.add("not transitive on roots");
  if (!rep.transitive2) is.add("not transitive on pairs");
  if (!rep.transitive3) is.add("not transitive on quadruples");
  const std::set<int> s1{-4, -2, -1, 0, 1, 2, 3, 4, 5, 6, 8}, s2{-4, -2, -1, 0, 1, 2}, s3{0, 2};
  if (rep.fix_root != s1) is.add("fix-root " + join(rep.fix_root));
  if (rep.swap_pair != s2) is.add("swap-pair " + join(rep.swap_pair));
  if (rep.cycle_quad != s3) is.add("cycle-quad " + join(rep.cycle_quad));
  if (!rep.witness_independent) is.add("trace sets depend on the witness");
  std::ostringstream os;
  os << "order " << rep.order << "; orbits " << rep.delta1 << "/" << rep.delta2 << "/" << rep.delta3 << "; traces "
     << join(rep.fix_root) << " " << join(rep.swap_pair) << " " << join(rep.cycle_quad) << "; "
     << rep.witnesses_per_kind << " witnesses each" << (rep.cached ? "; from cache" : "");
  return finish(r, is, os.str());
}

CheckResult thresholds() {
  CheckResult r = start(10, "thresholds");
  r.expected = "q0 9/8/4, failing at 8/7/3; waypoints 14,144,24,16,14,8";
  Issues is;
  using E = ExceptionalCase;
  const std::vector<std::tuple<E, std::int64_t, std::int64_t>> want = {{E::kOne, 9, 8}, {E::kTwo, 8, 7}, {E::kThree, 4, 3}};
  std::ostringstream os;
  for (const auto& [c, q0, fail] : want) {
    const auto t = unirationality_threshold(c, 100000);
    const std::string tag = "case " + std::to_string(static_cast<int>(c));
    if (t.q0 != q0 || t.last_failure != fail)
      is.add(tag + ": q0=" + std::to_string(t.q0) + " last failure " + std::to_string(t.last_failure));
    if (off_ramification_lower_bound(fail, c) >= required_point_count(c)) is.add(tag + ": q=" + std::to_string(fail) + " passes");
    if (off_ramification_lower_bound(q0, c) < required_point_count(c)) is.add(tag + ": q=" + std::to_string(q0) + " fails");
    if (!t.monotone) is.add(tag + ": bound not monotone");
    os << tag << " q0=" << t.q0 << " fails at " << t.last_failure << "; ";
  }
  const std::vector<std::tuple<std::int64_t, E, bool, std::int64_t>> points = {
      {9, E::kOne, false, 14}, {16, E::kOne, true, 144}, {9, E::kTwo, false, 24},
      {8, E::kTwo, true, 16},  {5, E::kThree, false, 14}, {4, E::kThree, true, 8}};
  os << "waypoints";
  for (const auto& [q, c, c2, v] : points) {
    const auto got = off_ramification_lower_bound(q, c, c2);
    os << ' ' << got;
    if (got != v)
      is.add("q=" + std::to_string(q) + " case " + std::to_string(static_cast<int>(c)) + ": " + std::to_string(got) +
             " != " + std::to_string(v));
  }
  return finish(r, is, os.str());
}

CheckResult property_suites(const VerifyOptions& opt) {
  CheckResult r = start(11, "property-suites");
  r.expected = std::to_string(opt.trials) + " trials per suite, no failures";
  Issues is;
  std::mt19937_64 rng(opt.seed);
  const auto& cat = degree2_catalog();
  const auto& entries = registry_entries();
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  // reflections, on rank 7 and rank 8 alternately
  const SurfaceLattice l8(8);
  const auto roots8 = root_classes(l8);
  for (int t = 0; t < opt.trials; ++t) {
    const bool big = t % 2;
    const SurfaceLattice& lat = big ? l8 : cat.lattice();
    const auto& root = big ? roots8[pick(roots8.size())] : cat.roots()[pick(cat.roots().size())];
    auto random_class = [&] {
      DivisorClass x(lat.rank());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::int64_t>(rng() % 11) - 5;
      return x;
    };
    const auto x = random_class(), y = random_class();
    const auto rx = reflect(lat, x, root), ry = reflect(lat, y, root);
    if (reflect(lat, rx, root) != x) is.add("reflection not involutive at trial " + std::to_string(t));
    if (intersect(lat, rx, ry) != intersect(lat, x, y)) is.add("reflection moves the form at trial " + std::to_string(t));
    if (reflect(lat, canonical_class(lat), root) != canonical_class(lat)) is.add("reflection moves K");
  }

  // reduction: independent of tie order, and D = E + removed roots
  for (int t = 0; t < opt.trials; ++t) {
    const auto& e = entries[pick(entries.size())];
    const auto cfg = registry_representative(e.type, e.variant);
    const auto& d = cat.pre_minus1()[pick(cat.pre_minus1().size())];
    std::vector<std::size_t> prio(cfg.simple_roots.size());
    for (std::size_t i = 0; i < prio.size(); ++i) prio[i] = i;
    std::shuffle(prio.begin(), prio.end(), rng);
    const auto a = reduce_to_minus1(d, cfg), b = reduce_to_minus1(d, cfg, &prio);
    if (a.curve != b.curve) is.add("reduction depends on order for " + e.type);
    DivisorClass sum = b.curve;
    for (auto p : b.removed) sum += cfg.simple_roots[p];
    if (sum != d) is.add("reduction loses a root for " + e.type);
  }

  // blow-downs keep products of classes orthogonal to what is contracted
  std::vector<DerivedGraph> contracting;
  for (const auto& e : entries) {
    auto g = derive_configuration(registry_representative(e.type, e.variant));
    if (g.blowdown) contracting.push_back(std::move(g));
  }
  for (int t = 0; t < opt.trials && !contracting.empty(); ++t) {
    const auto& g = contracting[pick(contracting.size())];
    const auto& bd = *g.blowdown;
    // random class pushed into the complement of the disjoint (-1)-classes
    auto candidate = [&] {
      DivisorClass x(cat.lattice().rank());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::int64_t>(rng() % 11) - 5;
      DivisorClass y = x;
      for (const auto& e : bd.contracted) y += cat.dot(x, e) * e;
      return y;
    };
    const auto a = candidate(), b = candidate();
    if (intersect(bd.target, bd.project(a), bd.project(b)) != cat.dot(a, b))
      is.add("blow-down changes " + a.to_string() + "." + b.to_string());
  }

  // fingerprints survive random Weyl elements
  const E7RootSystem sys(cat);
  for (int t = 0; t < opt.trials; ++t) {
    const auto& e = entries[pick(entries.size())];
    const auto cfg = registry_representative(e.type, e.variant);
    const auto m = sys.matrix(random_element(sys, rng, 40));
    std::vector<DivisorClass> moved;
    for (const auto& f : cfg.simple_roots) moved.push_back(m.apply(f));
    std::shuffle(moved.begin(), moved.end(), rng);
    const auto img = make_configuration(cfg.lattice, moved);
    if (orbit_fingerprint(img) != orbit_fingerprint(cfg)) is.add("fingerprint moved for " + e.type);
  }
  return finish(r, is, "4 suites x " + std::to_string(opt.trials) + " trials, " + std::to_string(is.list.size()) + " failures");
}

}  // namespace

bool RunReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == "fail"; });
}

std::string criterion_name(int id) {
  static const char* names[] = {"registry",          "class-counts",        "intersection-tables",
                                "intersection-ranges", "root-pairing",      "orthogonal-pairs",
                                "choice-independence", "exceptional-free-curves", "figure-totality",
                                "weyl-e7",           "thresholds",          "property-suites"};
  if (id < 0 || id > kCriteria) throw std::out_of_range("no criterion " + std::to_string(id));
  return names[id];
}

CheckResult check_registry(const std::vector<RegistryEntry>& entries) {
  CheckResult r = start(0, "registry");
  r.expected = "every entry classifies to its type";
  Issues is;
  for (const auto& e : entries) {
    const std::string tag = e.type + (e.variant.empty() ? "" : " (" + e.variant + ")");
    try {
      std::vector<DivisorClass> roots;
      for (const auto& n : e.roots) roots.push_back(class_from_name(n));
      const auto got = classify_dynkin(SurfaceLattice(7), roots);
      if (got != SingularityType::parse(e.type)) {
        is.add(tag + ": classifies as " + got.name());
        continue;
      }
      const auto cfg = make_configuration(SurfaceLattice(7), roots);
      for (const auto& v : validate_configuration(cfg)) is.add(tag + ": " + v);
    } catch (const std::exception& ex) {
      is.add(tag + ": " + ex.what());
    }
  }
  return finish(r, is, std::to_string(entries.size()) + " entries, " + std::to_string(is.list.size()) + " problems");
}

CheckResult run_criterion(int id, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  CheckResult r;
  try {
    switch (id) {
      case 0: r = check_registry(registry_entries()); break;
      case 1: r = class_counts(); break;
      case 2: r = intersection_tables(); break;
      case 3: r = intersection_ranges(); break;
      case 4: r = root_pairing(); break;
      case 5: r = orthogonal_pairs(); break;
      case 6: r = choice_independence(); break;
      case 7: r = exceptional_free_curves(); break;
      case 8: r = figure_totality(); break;
      case 9: r = weyl_checks(opt); break;
      case 10: r = thresholds(); break;
      case 11: r = property_suites(opt); break;
      default: throw std::out_of_range("no criterion " + std::to_string(id));
    }
  } catch (const std::out_of_range&) {
    throw;
  } catch (const std::exception& ex) {
    r.id = id;
    r.name = criterion_name(id);
    r.status = "fail";
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

RunReport verify_all(const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  RunReport rep;
  rep.command = "verify-all";
  for (int id : {0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 9}) rep.checks.push_back(run_criterion(id, opt));
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace dpl

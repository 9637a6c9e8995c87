#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "dpl/figures.hpp"
#include "dpl/weyl.hpp"

using namespace dpl;

namespace {

// For three A2 chains joined by six curves, each curve pairing one root of a
// chain with one root of another, following the pairings once around the
// three chains permutes the two roots of the first chain. Whether that
// permutation is a swap does not depend on labels.
int loop_parity(const ColoredGraph& g) {
  std::vector<std::size_t> chain(g.size(), 0), partner(g.size(), 0);
  std::size_t chains = 0;
  for (auto [a, b] : g.edges)
    if (g.colors[a] == 0 && g.colors[b] == 0) {
      chain[a] = chain[b] = chains++;
      partner[a] = b;
      partner[b] = a;
    }
  if (chains != 3) throw std::logic_error("expected three chains");
  std::map<std::size_t, std::vector<std::size_t>> met;
  for (auto [a, b] : g.edges)
    if (g.colors[a] != g.colors[b]) met[g.colors[a] ? a : b].push_back(g.colors[a] ? b : a);
  // (from chain, to chain, root) -> root
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> step;
  for (const auto& [curve, roots] : met) {
    if (roots.size() != 2) throw std::logic_error("curve meets " + std::to_string(roots.size()) + " roots");
    step[{chain[roots[0]], chain[roots[1]], roots[0]}] = roots[1];
    step[{chain[roots[1]], chain[roots[0]], roots[1]}] = roots[0];
  }
  std::size_t start = 0;
  while (g.colors[start] != 0 || chain[start] != 0) ++start;
  std::size_t v = start;
  for (auto [from, to] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 2}, {2, 0}}) v = step.at({from, to, v});
  return v == start ? 0 : 1;
}

const FigureGraph& figure(const std::string& type) {
  for (const auto& f : expected_figures())
    if (f.type == type) return f;
  throw std::out_of_range(type);
}

}  // namespace

TEST(Figures, EveryVariantDrawn) {
  std::set<std::pair<std::string, std::string>> drawn;
  for (const auto& f : expected_figures()) drawn.insert({f.type, f.variant});
  for (const auto& e : registry_entries()) EXPECT_TRUE(drawn.count({e.type, e.variant})) << e.type << " " << e.variant;
}

TEST(Figures, DerivedGraphsMatchDrawings) {
  for (const auto& f : expected_figures()) {
    const auto c = check_figure(f);
    EXPECT_TRUE(c.target_ok) << f.label << ": " << c.detail;
    EXPECT_TRUE(c.graph_ok) << f.label << ": " << c.detail;
  }
}

TEST(Figures, ManyPointTargets) {
  for (const auto& [type, curves, degree] :
       std::vector<std::tuple<const char*, std::size_t, int>>{{"5A1", 2, 4}, {"6A1", 4, 6}, {"7A1", 7, 9}}) {
    const auto g = derive_configuration(registry_representative(type));
    EXPECT_EQ(g.contraction_set.size(), curves) << type;
    EXPECT_EQ(g.target_degree, degree) << type;
  }
}

TEST(Figures, DrawingRoundTrip) {
  const auto& f = figure("2A1");
  const auto g = figure_graph(f);
  EXPECT_EQ(g.size(), f.roots + f.curves.size());
  EXPECT_TRUE(isomorphic(g, derived_graph(derive_configuration(registry_representative("2A1")))));
}

// The three-A2 drawing closes its loop without a swap; every lattice
// realisation closes it with one, so the two graphs cannot be isomorphic.
TEST(Figures, ThreeA2LoopParity) {
  EXPECT_EQ(loop_parity(figure_graph(figure("3A2"))), 0);
  const auto cfg = registry_representative("3A2");
  EXPECT_EQ(loop_parity(derived_graph(derive_configuration(cfg))), 1);

  const E7RootSystem sys(degree2_catalog());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto m = sys.matrix(random_element(sys, rng));
    std::vector<DivisorClass> moved;
    for (const auto& r : cfg.simple_roots) moved.push_back(m.apply(r));
    const auto image = make_configuration(cfg.lattice, moved);
    ASSERT_EQ(loop_parity(derived_graph(derive_configuration(image))), 1);
  }
}

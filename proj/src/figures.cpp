#include "dpl/figures.hpp"

#include <sstream>

namespace dpl {

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
using Curves = std::vector<std::vector<std::size_t>>;

Edges chain(std::size_t from, std::size_t to) {
  Edges e;
  for (std::size_t i = from; i < to; ++i) e.emplace_back(i, i + 1);
  return e;
}

Edges join(Edges a, const Edges& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FigureGraph fig(std::string type, std::string variant, std::string label, std::size_t roots, Edges edges,
                Curves curves, int degree, std::string target) {
  FigureGraph f;
  f.type = std::move(type);
  f.variant = std::move(variant);
  f.label = std::move(label);
  f.roots = roots;
  f.root_edges = std::move(edges);
  f.curves = std::move(curves);
  f.target_degree = degree;
  f.target_type = std::move(target);
  return f;
}

FigureGraph minimal(std::string type, std::string variant, std::string label, std::size_t roots, Edges edges,
                    std::string which) {
  auto f = fig(type, std::move(variant), std::move(label), roots, std::move(edges), {}, 2, type);
  f.minimal_case = std::move(which);
  return f;
}

std::vector<FigureGraph> build() {
  std::vector<FigureGraph> v;

  // One singular point. Indices follow each drawing left to right, with the
  // off-line vertex of D/E diagrams numbered last.
  v.push_back(minimal("A1", "", "one point, A1", 1, {}, "1"));
  {
    auto f = minimal("A2", "", "one point, A2 with conjugate roots", 2, chain(0, 1), "2");
    f.a2_conjugate = {true};
    v.push_back(f);
  }
  v.push_back(fig("A2", "", "one point, A2", 2, chain(0, 1), {{0}, {0}, {0}, {0}, {0}, {0}}, 8, "A1"));
  v.push_back(fig("D4", "", "one point, D4", 4, {{0, 1}, {0, 2}, {0, 3}}, {{1}, {1}, {2}, {2}, {3}, {3}}, 8, "A1"));
  v.push_back(fig("A3", "", "one point, A3", 3, chain(0, 2), {{1}, {1}}, 4, "2A1"));
  v.push_back(fig("A4", "", "one point, A4", 4, chain(0, 3), {{1}, {2}}, 4, "2A1"));
  v.push_back(fig("A5", "1", "one point, A5 (1)", 5, chain(0, 4), {{2}}, 3, "2A2"));
  v.push_back(fig("A5", "2", "one point, A5 (2)", 5, chain(0, 4), {{1}, {3}}, 4, "3A1"));
  v.push_back(fig("A6", "", "one point, A6", 6, chain(0, 5), {{1}, {4}}, 4, "2A1+A2"));
  v.push_back(fig("A7", "", "one point, A7", 7, chain(0, 6), {{1}, {5}}, 4, "2A1+A3"));
  v.push_back(fig("D5", "", "one point, D5", 5, join(chain(0, 3), {{4, 1}}), {{3}, {3}}, 4, "D4"));
  v.push_back(fig("D6", "", "one point, D6", 6, join(chain(0, 4), {{5, 1}}), {{4}, {4}}, 4, "D5"));
  v.push_back(fig("E6", "", "one point, E6", 6, join(chain(0, 4), {{5, 2}}), {{0}, {4}}, 4, "D4"));
  v.push_back(fig("E7", "", "one point, E7", 7, join(chain(0, 5), {{6, 2}}), {{5}}, 3, "E6"));

  // Two points; root 0 is the A1 when there is one.
  v.push_back(fig("2A1", "", "two points, 2A1", 2, {}, {{0, 1}, {0, 1}}, 4, "smooth"));
  v.push_back(fig("A1+A2", "", "two points, A1+A2", 3, chain(1, 2), {{0, 1}, {0, 2}}, 4, "smooth"));
  v.push_back(fig("A1+A3", "1", "two points, A1+A3 (1)", 4, chain(1, 3), {{0, 2}}, 3, "2A1"));
  v.push_back(fig("A1+A3", "2", "two points, A1+A3 (2)", 4, chain(1, 3), {{0, 1}, {0, 3}}, 4, "A1"));
  v.push_back(fig("A1+A4", "", "two points, A1+A4", 5, chain(1, 4), {{0, 1}, {0, 4}}, 4, "A2"));
  for (const char* var : {"a", "b"})
    v.push_back(fig("A1+A5", var, "two points, A1+A5", 6, chain(1, 5), {{0, 1}, {0, 5}}, 4, "A3"));
  v.push_back(fig("A1+D4", "", "two points, A1+D4", 5, {{1, 2}, {2, 3}, {2, 4}}, {{0, 1}}, 3, "A3"));
  v.push_back(fig("A1+D5", "", "two points, A1+D5", 6, join(chain(1, 3), {{3, 4}, {3, 5}}), {{0, 1}}, 3, "D4"));
  v.push_back(fig("A1+D6", "", "two points, A1+D6", 7, join(chain(1, 4), {{4, 5}, {4, 6}}), {{0, 1}}, 3, "D5"));
  v.push_back(fig("2A2", "", "two points, 2A2", 4, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, 4, "smooth"));
  v.push_back(fig("A2+A3", "", "two points, A2+A3", 5, join(chain(0, 2), {{3, 4}}), {{0, 3}, {2, 4}}, 4, "A1"));
  v.push_back(fig("A2+A4", "", "two points, A2+A4", 6, join(chain(0, 3), {{4, 5}}), {{0, 4}, {3, 5}}, 4, "A2"));
  v.push_back(fig("A2+A5", "", "two points, A2+A5", 7, join(chain(0, 4), {{5, 6}}), {{0, 5}, {4, 6}}, 4, "A3"));
  v.push_back(fig("2A3", "", "two points, 2A3", 6, join(chain(0, 2), chain(3, 5)), {{0, 3}, {2, 5}}, 4, "2A1"));

  // Three points.
  v.push_back(fig("3A1", "1", "three points, 3A1 (1)", 3, {}, {{0, 1, 2}}, 3, "smooth"));
  v.push_back(fig("3A1", "2", "three points, 3A1 (2)", 3, {}, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}}, 8,
                  "smooth"));
  v.push_back(fig("2A1+A2", "", "three points, 2A1+A2", 4, chain(0, 1),
                  {{0, 2}, {1, 3}, {1, 2}, {2, 3}, {0, 3}, {2, 3}}, 8, "smooth"));
  v.push_back(fig("2A1+A3", "1", "three points, 2A1+A3 (1)", 5, chain(0, 2),
                  {{0, 3}, {2, 4}, {2, 3}, {3, 4}, {0, 4}, {3, 4}}, 8, "A1"));
  v.push_back(fig("2A1+A3", "2", "three points, 2A1+A3 (2)", 5, chain(0, 2),
                  {{2, 4}, {1, 3}, {3, 4}, {0, 4}, {3, 4}}, 7, "smooth"));
  v.push_back(fig("2A1+D4", "", "three points, 2A1+D4", 6, {{0, 1}, {0, 2}, {0, 3}},
                  {{2, 4}, {3, 5}, {4, 5}, {4, 5}}, 6, "A2"));
  v.push_back(fig("A1+2A2", "", "three points, A1+2A2", 5, {{0, 1}, {2, 3}},
                  {{0, 4}, {1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}, 8, "smooth"));
  v.push_back(fig("A1+A2+A3", "", "three points, A1+A2+A3", 6, join({{0, 1}}, chain(2, 4)),
                  {{0, 5}, {1, 5}, {0, 2}, {1, 4}, {5, 3}}, 7, "smooth"));
  v.push_back(fig("A1+2A3", "", "three points, A1+2A3", 7, join(chain(0, 2), chain(3, 5)),
                  {{1, 6}, {6, 4}, {0, 3}, {2, 5}}, 6, "smooth"));
  v.push_back(fig("3A2", "", "three points, 3A2", 6, {{0, 1}, {2, 3}, {4, 5}},
                  {{0, 4}, {0, 2}, {2, 4}, {1, 5}, {1, 3}, {3, 5}}, 8, "smooth"));

  // Four points. The 3A1+X cases carry no drawing; the single curve through
  // the three A1 roots is forced, and so is the surviving component.
  v.push_back(fig("3A1+A2", "", "four points, 3A1+A2", 5, {{3, 4}}, {{0, 1, 2}}, 3, "A2"));
  v.push_back(fig("3A1+A3", "", "four points, 3A1+A3", 6, chain(3, 5), {{0, 1, 2}}, 3, "A3"));
  v.push_back(fig("3A1+D4", "", "four points, 3A1+D4", 7, {{3, 4}, {3, 5}, {3, 6}}, {{0, 1, 2}}, 3, "D4"));
  v.push_back(fig("4A1", "with-tri-curve", "four points, 4A1 (1)", 4, {}, {{0, 1, 2}}, 3, "A1"));
  {
    auto f = fig("4A1", "no-tri-curve", "four points, 4A1 (2)", 4, {},
                 {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 3}, {0, 3}}, 8, "smooth");
    f.orbits = {{0}, {1, 2, 3}};
    v.push_back(f);
  }
  {
    // The surviving pair of conjugate A1 points makes the target an
    // Iskovskih surface.
    auto f = fig("4A1", "no-tri-curve", "four points, 4A1 (3)", 4, {}, {{0, 1}, {0, 1}}, 4, "2A1");
    f.orbits = {{0, 1}, {2, 3}};
    v.push_back(f);
  }
  {
    auto f = minimal("4A1", "no-tri-curve", "four points, 4A1 all conjugate", 4, {}, "3");
    f.orbits = {{0, 1, 2, 3}};
    v.push_back(f);
  }

  // Five to seven A1 points: two curves sharing a root, the tetrahedron
  // (roots on edges, curves on vertices), and the Fano plane.
  v.push_back(fig("5A1", "", "five points", 5, {}, {{0, 1, 2}, {2, 3, 4}}, 4, "smooth"));
  v.push_back(fig("6A1", "", "six points", 6, {}, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}, 6, "smooth"));
  v.push_back(fig("7A1", "", "seven points", 7, {},
                  {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}, 9, "smooth"));
  return v;
}

}  // namespace

const std::vector<FigureGraph>& expected_figures() {
  static const std::vector<FigureGraph> figs = build();
  return figs;
}

ColoredGraph figure_graph(const FigureGraph& f) {
  ColoredGraph g;
  g.colors.assign(f.roots, 0);
  g.edges = f.root_edges;
  for (const auto& met : f.curves) {
    const std::size_t c = g.colors.size();
    g.colors.push_back(1);
    for (auto r : met) g.edges.emplace_back(r, c);
  }
  return g;
}

ColoredGraph derived_graph(const DerivedGraph& d) {
  ColoredGraph g;
  for (const auto& v : d.vertices) g.colors.push_back(v.is_root ? 0 : 1);
  g.edges = d.edges;
  return g;
}

FigureCheck check_figure(const FigureGraph& f) {
  FigureCheck out;
  std::ostringstream os;
  try {
    const auto cfg = registry_representative(f.type, f.variant, f.orbits, f.a2_conjugate);
    const auto d = derive_configuration(cfg);
    // Edges only record product 1; anything else between a curve and a root
    // would be invisible to the comparison.
    bool simple = true;
    for (const auto& e : d.contraction_set)
      for (const auto& r : cfg.simple_roots) {
        const auto p = cfg.dot(e, r);
        if (p != 0 && p != 1) simple = false;
      }
    out.graph_ok = simple && isomorphic(derived_graph(d), figure_graph(f));
    out.target_ok = d.target_degree == f.target_degree && d.target_type == SingularityType::parse(f.target_type) &&
                    d.minimal_case == f.minimal_case;
    os << "derived " << d.contraction_set.size() << " curves, target degree " << d.target_degree << " "
       << d.target_type.name() << (d.minimal() ? " (minimal " + d.minimal_case + ")" : "") << "; expected "
       << f.curves.size() << " curves, degree " << f.target_degree << " " << f.target_type;
    if (!simple) os << "; a curve meets a root with product other than 0 or 1";
    else if (!out.graph_ok) os << "; graphs are not isomorphic";
  } catch (const std::exception& ex) {
    os << "derivation failed: " << ex.what();
  }
  out.detail = os.str();
  return out;
}

}  // namespace dpl

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpl/curves.hpp"
#include "dpl/graph_canon.hpp"

namespace dpl {

/// A hand-transcribed configuration drawing: roots, their Dynkin edges, and
/// for each contracted curve the roots it meets.
struct FigureGraph {
  std::string type;
  std::string variant;  // registry variant the drawing belongs to
  std::string label;    // short human tag, e.g. "two points, A1+A3 (1)"
  std::size_t roots = 0;
  std::vector<std::pair<std::size_t, std::size_t>> root_edges;
  std::vector<std::vector<std::size_t>> curves;
  int target_degree = 2;
  std::string target_type;   // "smooth" or an ADE sum
  std::string minimal_case;  // "1", "2", "3" or empty
  /// Galois data used for the derivation; empty means every point is rational.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> a2_conjugate;
};

const std::vector<FigureGraph>& expected_figures();

/// Roots coloured 0, curves coloured 1.
ColoredGraph figure_graph(const FigureGraph& f);
ColoredGraph derived_graph(const DerivedGraph& g);

struct FigureCheck {
  bool graph_ok = false;
  bool target_ok = false;
  bool ok() const { return graph_ok && target_ok; }
  std::string detail;
};

/// Derives the registry representative under the figure's Galois data and
/// compares graph and target.
FigureCheck check_figure(const FigureGraph& f);

}  // namespace dpl

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace dpl {

/// Simple undirected graph with an integer colour per vertex.
struct ColoredGraph {
  std::vector<int> colors;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t size() const { return colors.size(); }
};

/// Label-independent certificate: colours in canonical order followed by the
/// upper triangle of the relabelled adjacency matrix. Colour refinement plus
/// individualisation, exhaustive over the search tree; fine up to a few dozen
/// vertices with moderate symmetry.
std::vector<std::int32_t> canonical_form(const ColoredGraph& g);

/// Canonical position of each vertex (a permutation), matching canonical_form.
std::vector<std::size_t> canonical_labeling(const ColoredGraph& g);

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace dpl

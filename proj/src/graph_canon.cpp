#include "dpl/graph_canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace dpl {

namespace {

using Adj = std::vector<std::vector<std::size_t>>;

// Ranks are dense and their order depends only on labels-free signatures.
std::vector<int> refine(const Adj& adj, std::vector<int> cls) {
  const std::size_t n = cls.size();
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = cls[v];
      for (auto u : adj[v]) sig[v].second.push_back(cls[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (std::size_t v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    const auto old_cells = *std::max_element(cls.begin(), cls.end());
    const auto new_cells = *std::max_element(next.begin(), next.end());
    cls = std::move(next);
    if (new_cells == old_cells) return cls;
  }
}

struct Search {
  const ColoredGraph& g;
  Adj adj;
  std::vector<std::vector<bool>> mat;
  std::vector<std::int32_t> best;
  std::vector<std::size_t> best_pos;

  explicit Search(const ColoredGraph& graph) : g(graph), adj(graph.size()), mat(graph.size()) {
    const std::size_t n = graph.size();
    for (auto& row : mat) row.assign(n, false);
    for (auto [a, b] : graph.edges) {
      if (a >= n || b >= n || a == b) throw std::invalid_argument("bad edge in coloured graph");
      if (mat[a][b]) continue;
      mat[a][b] = mat[b][a] = true;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }

  std::vector<std::int32_t> certificate(const std::vector<int>& pos) const {
    const std::size_t n = pos.size();
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v) at[static_cast<std::size_t>(pos[v])] = v;
    std::vector<std::int32_t> cert;
    cert.reserve(n + n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) cert.push_back(g.colors[at[i]]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) cert.push_back(mat[at[i]][at[j]] ? 1 : 0);
    return cert;
  }

  void run(std::vector<int> cls) {
    cls = refine(adj, std::move(cls));
    const std::size_t n = cls.size();
    const int cells = *std::max_element(cls.begin(), cls.end()) + 1;
    if (static_cast<std::size_t>(cells) == n) {
      auto cert = certificate(cls);
      if (best.empty() || cert < best) {
        best = std::move(cert);
        best_pos.assign(cls.begin(), cls.end());
      }
      return;
    }
    // First smallest non-trivial cell is a labelling-invariant choice.
    std::vector<int> sizes(static_cast<std::size_t>(cells), 0);
    for (int c : cls) ++sizes[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < cells; ++c)
      if (sizes[static_cast<std::size_t>(c)] > 1 &&
          (target < 0 || sizes[static_cast<std::size_t>(c)] < sizes[static_cast<std::size_t>(target)]))
        target = c;
    for (std::size_t v = 0; v < n; ++v) {
      if (cls[v] != target) continue;
      std::vector<int> split(n);
      for (std::size_t u = 0; u < n; ++u) split[u] = 2 * cls[u] + (cls[u] == target && u != v ? 1 : 0);
      run(std::move(split));
    }
  }
};

}  // namespace

std::vector<std::size_t> canonical_labeling(const ColoredGraph& g) {
  if (g.size() == 0) return {};
  Search s(g);
  // Initial cells come from the colour values themselves, so refinement starts
  // from a partition every relabelling agrees on.
  auto colors = g.colors;
  auto sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> cls(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    cls[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colors[v]) - sorted.begin());
  s.run(std::move(cls));
  return s.best_pos;
}

std::vector<std::int32_t> canonical_form(const ColoredGraph& g) {
  if (g.size() == 0) return {};
  Search s(g);
  const auto pos = canonical_labeling(g);
  std::vector<int> p(pos.begin(), pos.end());
  return s.certificate(p);
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dpl

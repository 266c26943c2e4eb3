#include "dfk/diamond.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace dfk {

namespace {

// Lexicographically smallest nonadjacent pair within a sorted vertex set.
std::optional<VertexPair> first_nonadjacent_pair(const Graph& g,
                                                 const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return VertexPair(s[i], s[j]);
  return std::nullopt;
}

}  // namespace

bool is_cross_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("is_cross_edge: " + std::to_string(u) + " " +
                                std::to_string(v) + " is not an edge");
  auto s = common_neighbors(g, u, v);
  return !is_clique(g, s);
}

std::optional<Diamond> find_diamond(const Graph& g) {
  for (const auto& e : g.edges()) {
    auto s = common_neighbors(g, e.a, e.b);
    if (auto wings = first_nonadjacent_pair(g, s))
      return Diamond{e, *wings};
  }
  return std::nullopt;
}

bool is_diamond_free(const Graph& g) { return !find_diamond(g).has_value(); }

std::vector<Vertex> unique_maximal_clique_of_edge(const Graph& g, Vertex u,
                                                  Vertex v) {
  if (is_cross_edge(g, u, v))
    throw std::invalid_argument(
        "unique_maximal_clique_of_edge: edge " + std::to_string(u) + " " +
        std::to_string(v) + " lies in two or more maximal cliques");
  std::vector<Vertex> clique = common_neighbors(g, u, v);
  clique.push_back(u);
  clique.push_back(v);
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::size_t count_diamonds(const Graph& g, std::size_t cap) {
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    auto s = common_neighbors(g, e.a, e.b);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g.has_edge(s[i], s[j]) && ++count >= cap) return cap;
  }
  return count;
}

namespace {

using Mask = std::vector<std::uint64_t>;

int mask_popcount(const Mask& m) {
  int c = 0;
  for (auto w : m) c += std::popcount(w);
  return c;
}

int mask_first(const Mask& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) return static_cast<int>(i) * 64 + std::countr_zero(m[i]);
  return -1;
}

bool clique_search(const std::vector<Mask>& adj, Mask cand, int need) {
  if (need <= 0) return true;
  while (mask_popcount(cand) >= need) {
    int v = mask_first(cand);
    Mask next(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & adj[v][i];
    if (clique_search(adj, std::move(next), need - 1)) return true;
    cand[v >> 6] &= ~(std::uint64_t(1) << (v & 63));  // exclude v
  }
  return false;
}

}  // namespace

bool has_clique_of_size(const Graph& g, const std::vector<Vertex>& within,
                        std::size_t t) {
  if (t == 0) return true;
  if (within.size() < t) return false;
  const int n = static_cast<int>(within.size());
  const int words = (n + 63) / 64;
  std::vector<Mask> adj(n, Mask(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(within[i], within[j])) {
        adj[i][j >> 6] |= std::uint64_t(1) << (j & 63);
        adj[j][i >> 6] |= std::uint64_t(1) << (i & 63);
      }
  Mask all(words, 0);
  for (int i = 0; i < n; ++i) all[i >> 6] |= std::uint64_t(1) << (i & 63);

  // greedy accept first; inside one large clique it ends the common case
  Mask cand = all;
  for (std::size_t found = 0; ; ++found) {
    if (found >= t) return true;
    int v = mask_first(cand);
    if (v < 0) break;
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] &= adj[v][i];
  }
  return clique_search(adj, std::move(all), static_cast<int>(t));
}

Graph make_diamond(const std::array<Vertex, 4>& v) {
  Graph g;
  for (Vertex x : v) g.add_vertex(x);
  g.add_edge(v[0], v[1]);
  g.add_edge(v[0], v[2]);
  g.add_edge(v[0], v[3]);
  g.add_edge(v[1], v[2]);
  g.add_edge(v[1], v[3]);
  return g;
}

Graph make_diamond() { return make_diamond({1, 2, 3, 4}); }

}  // namespace dfk

#include "dfk/bitgraph.hpp"

#include <algorithm>
#include <bit>

namespace dfk {

BitGraph::BitGraph(const Graph& g) {
  labels_ = g.vertices();
  n_ = static_cast<int>(labels_.size());
  words_ = n_ == 0 ? 1 : (n_ + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (int i = 0; i < n_; ++i) {
    for (Vertex w : g.neighbors(labels_[i])) {
      int j = static_cast<int>(
          std::lower_bound(labels_.begin(), labels_.end(), w) -
          labels_.begin());
      mut_row(i)[j >> 6] |= std::uint64_t(1) << (j & 63);
    }
  }
}

void BitGraph::set_edge(int u, int v) {
  mut_row(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
  mut_row(v)[u >> 6] |= std::uint64_t(1) << (u & 63);
}

void BitGraph::clear_edge(int u, int v) {
  mut_row(u)[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  mut_row(v)[u >> 6] &= ~(std::uint64_t(1) << (u & 63));
}

void BitGraph::toggle_edge(int u, int v) {
  mut_row(u)[v >> 6] ^= std::uint64_t(1) << (v & 63);
  mut_row(v)[u >> 6] ^= std::uint64_t(1) << (u & 63);
}

Graph BitGraph::to_graph() const {
  Graph g;
  for (Vertex v : labels_) g.add_vertex(v);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (edge(u, v)) g.add_edge(labels_[u], labels_[v]);
  return g;
}

namespace {

// First set bit strictly above position `from` (-1 for none), or -1.
int next_bit(const std::uint64_t* words, int nwords, int from) {
  int w = (from + 1) >> 6;
  if (w >= nwords) return -1;
  std::uint64_t cur = words[w];
  int off = (from + 1) & 63;
  cur &= ~std::uint64_t(0) << off;
  while (true) {
    if (cur != 0) return (w << 6) + std::countr_zero(cur);
    if (++w >= nwords) return -1;
    cur = words[w];
  }
}

}  // namespace

std::optional<std::array<int, 4>> find_diamond_indices(const BitGraph& g) {
  const int n = g.size();
  const int nw = g.words();
  std::vector<std::uint64_t> common(nw), nonadj(nw);
  for (int u = 0; u < n; ++u) {
    for (int v = next_bit(g.row(u), nw, u); v != -1;
         v = next_bit(g.row(u), nw, v)) {
      for (int w = 0; w < nw; ++w) common[w] = g.row(u)[w] & g.row(v)[w];
      for (int x = next_bit(common.data(), nw, -1); x != -1;
           x = next_bit(common.data(), nw, x)) {
        for (int w = 0; w < nw; ++w) nonadj[w] = common[w] & ~g.row(x)[w];
        int y = next_bit(nonadj.data(), nw, x);
        if (y != -1) return std::array<int, 4>{u, v, x, y};
      }
    }
  }
  return std::nullopt;
}

bool is_diamond_free(const BitGraph& g) {
  return !find_diamond_indices(g).has_value();
}

}  // namespace dfk

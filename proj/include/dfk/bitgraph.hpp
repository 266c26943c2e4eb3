#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dfk/graph.hpp"

namespace dfk {

// Dense adjacency mirror with vertices renumbered 0..n-1 in ascending
// label order.  Backing store for the exact search and the brute-force
// oracles, where set intersections dominate.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(const Graph& g);

  int size() const { return n_; }
  int words() const { return words_; }
  Vertex label(int i) const { return labels_[i]; }
  const std::vector<Vertex>& labels() const { return labels_; }

  bool edge(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  void set_edge(int u, int v);
  void clear_edge(int u, int v);
  void toggle_edge(int u, int v);

  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  Graph to_graph() const;

 private:
  std::uint64_t* mut_row(int v) {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Vertex> labels_;
};

// Indices {c1, c2, w1, w2} of the first induced diamond in canonical
// order (cross edge first, then wings), or nothing.
std::optional<std::array<int, 4>> find_diamond_indices(const BitGraph& g);

bool is_diamond_free(const BitGraph& g);

}  // namespace dfk

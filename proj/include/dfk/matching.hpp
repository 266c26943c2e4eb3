#pragma once

#include <optional>

#include "dfk/graph.hpp"

namespace dfk {

// Vertex-disjoint pairs.  Every pair is an edge of the queried graph; for
// the complement queries the queried graph is the complement of the
// induced common neighborhood.
struct Matching {
  std::vector<VertexPair> pairs;

  std::size_t size() const { return pairs.size(); }
};

// A matching of size exactly t, if one exists.  Augmenting-path search
// with blossom contraction, stopping as soon as t pairs are matched; exact
// on general graphs, odd cycles included.
std::optional<Matching> max_matching_at_least(const Graph& g, std::size_t t);

// Size-t matching inside the subgraph induced by N(u) ∩ N(v).
std::optional<Matching> disjoint_adjacent_pairs(const Graph& g, Vertex u,
                                                Vertex v, std::size_t t);

// Size-t matching in the complement of the induced common neighborhood.
// Only that small complement is ever materialized.
std::optional<Matching> disjoint_nonadjacent_pairs(const Graph& g, Vertex u,
                                                   Vertex v, std::size_t t);

}  // namespace dfk

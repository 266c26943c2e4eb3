#pragma once

#include <array>
#include <optional>

#include "dfk/graph.hpp"

namespace dfk {

// An induced diamond (K4 minus one edge).  `cross` joins the two
// degree-three vertices; `wings` is the nonadjacent pair.
struct Diamond {
  VertexPair cross;
  VertexPair wings;

  bool operator==(const Diamond&) const = default;
};

// An edge uv is a cross edge iff N(u) ∩ N(v) does not induce a clique.
bool is_cross_edge(const Graph& g, Vertex u, Vertex v);

// Deterministic: lowest cross edge in canonical pair order first, then the
// lexicographically smallest nonadjacent wing pair.
std::optional<Diamond> find_diamond(const Graph& g);

bool is_diamond_free(const Graph& g);

// {u,v} ∪ N(u)∩N(v) for a non-cross edge uv; this is the only maximal
// clique containing the edge.
std::vector<Vertex> unique_maximal_clique_of_edge(const Graph& g, Vertex u,
                                                  Vertex v);

// Number of induced diamonds, counted as (cross edge, wing pair) choices.
// Stops counting once `cap` is reached.
std::size_t count_diamonds(const Graph& g, std::size_t cap);

// Exact test for a clique of size t among `within`.  Branch-and-bound;
// worst case exponential in |within|, fine at the neighborhood sizes the
// reduction rules query.
bool has_clique_of_size(const Graph& g, const std::vector<Vertex>& within,
                        std::size_t t);

// Diamond with cross (v[0], v[1]) and wings (v[2], v[3]).
Graph make_diamond(const std::array<Vertex, 4>& v);
Graph make_diamond();  // labels 1..4

}  // namespace dfk

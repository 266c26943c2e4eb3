#pragma once

#include <array>
#include <set>

#include "dfk/graph.hpp"

namespace dfk {

enum class Part { i, ii, iii, iv, v };
std::string to_string(Part p);

// Vertex and edge marks produced by the partition pass over a reduced
// instance.
//
//   part (i)    small mark
//   part (ii)   vulnerable and type I, not small
//   part (iii)  vulnerable, not type I
//   part (iv)   type I only
//   part (v)    no marks
//
// vertex_small ⊆ vertex_type1, vertex_small ⊆ vertex_vulnerable, and
// edge_cross ⊆ edge_type1 ⊆ E(G).
struct PartitionLabels {
  std::set<Vertex> vertex_type1;
  std::set<Vertex> vertex_small;
  std::set<Vertex> vertex_vulnerable;
  std::set<VertexPair> edge_cross;
  std::set<VertexPair> edge_type1;
  std::set<Vertex> vertices;  // vertex set the labels were computed for
  int clique_visits = 0;      // unique-clique lookups performed in step 3
};

// Three passes:
//  1. every edge whose common neighborhood is not a clique is a cross
//     edge; its endpoints and common neighbors are type I, as are all
//     edges among them;
//  2. a type-I vertex is small if its neighborhood is not a cluster, or
//     some clique component of size <= 3k (so the maximal clique has at
//     most 3k+1 vertices) contains a cross edge;
//  3. the unique maximal clique of each unmarked edge is visited once and
//     marked vulnerable when it holds a small vertex.
PartitionLabels compute_partition(const Instance& inst);

// The maximal cliques of a guarded vertex: its neighborhood induces a
// cluster, and each component plus the owner is one maximal clique.  A
// clique is flagged type I iff it contains both ends of a cross edge.
struct GuardedCliqueView {
  Vertex owner = 0;
  std::vector<std::vector<Vertex>> cliques;
  std::vector<bool> type1;
};
GuardedCliqueView guarded_cliques(const Instance& inst,
                                  const PartitionLabels& labels, Vertex x);

Part part_of(const PartitionLabels& labels, Vertex v);

std::array<int, 5> part_counts(const PartitionLabels& labels);

}  // namespace dfk

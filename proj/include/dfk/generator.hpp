#pragma once

#include <cstdint>

#include "dfk/graph.hpp"

namespace dfk {

enum class GenKind { gnp, planted, figure3 };

// Reproducible instance generation: the same spec always yields the same
// instance, byte for byte after serialization.
struct GenSpec {
  GenKind kind = GenKind::gnp;
  int n = 0;
  double p = 0.0;        // gnp edge probability
  int clique_min = 2;    // planted clique size range
  int clique_max = 4;
  int r = 0;             // planted edit count; the instance gets k = r
  int k = 0;             // budget for gnp instances
  Mode mode = Mode::editing;
  std::uint64_t seed = 0;
};

Instance gen_gnp(const GenSpec& spec);

// Diamond-free base packed from random cliques that pairwise share at
// most one vertex, then r random edits (deletion mode plants additions
// only, so the instance is a yes-instance with optimum at most r).
Instance gen_planted(const GenSpec& spec);

// The 24-vertex worked example: a 14-clique carrying u1..u4 plus five
// attached cliques, 116 edges, budget 4.
Instance gen_figure3(Mode mode = Mode::editing);

Instance generate(const GenSpec& spec);

// Fixed labels of the figure3 instance; the ten remaining big-clique
// vertices are 15..24.
namespace fig3 {
inline constexpr Vertex v0 = 1, v1 = 2, v2 = 3, v3 = 4, v4 = 5, v5 = 6,
                        v6 = 7, v7 = 8, v8 = 9, v9 = 10;
inline constexpr Vertex u1 = 11, u2 = 12, u3 = 13, u4 = 14;
}  // namespace fig3

// The reference optimum for figure3 in editing mode: add u2v2, delete
// u1v2, v0v1 and u3v9.
EditSet fig3_reference_solution();

}  // namespace dfk

#pragma once

#include <optional>
#include <set>

#include "dfk/graph.hpp"

namespace dfk {

struct SolveResult {
  bool feasible = false;
  std::optional<int> opt_size;      // set when feasible
  std::optional<EditSet> witness;   // applies to the input graph
};

// Exact decision for the instance budget.  Depth-first branching on the
// six pairs of one found diamond (five deletions, plus the missing edge in
// editing mode), with pairs blocked once edited on a path; iterative
// deepening 0..k gives the optimum.
SolveResult solve(const Instance& inst);

// Completion variant: every diamond forces its missing edge, so the
// solution is the unique addition closure.  opt_size is always reported.
SolveResult solve_completion(const Instance& inst);

// All edit sets of minimum size whose application leaves the graph
// diamond-free, by exhaustive enumeration over vertex-pair subsets.
// Guarded: |V| <= 10 and cap <= 4; refuses (throws) when the optimum
// exceeds cap.
std::vector<EditSet> enumerate_min_solutions(const Instance& inst, int cap);

// Every maximal clique exactly once (pivoting enumeration); each clique
// sorted, list in lexicographic order.  Oracle scale: |V| <= 64 enforced.
std::vector<std::vector<Vertex>> enumerate_maximal_cliques(const Graph& g);

// Maximal cliques bucketed by the definitions the reductions rely on:
// type I shares >= 2 vertices with another maximal clique, big means at
// least 3k+2 vertices.
struct CliqueClassification {
  std::vector<std::vector<Vertex>> big_type1;
  std::vector<std::vector<Vertex>> small_type1;
  std::vector<std::vector<Vertex>> type2;
};
CliqueClassification classify_cliques(const Graph& g, int k);

// Union of small type-I cliques plus every type-II clique meeting one.
std::set<Vertex> vulnerable_set_bruteforce(const Graph& g, int k);

std::set<Vertex> union_of(const std::vector<std::vector<Vertex>>& cliques);

}  // namespace dfk

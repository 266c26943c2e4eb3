#pragma once

#include <map>
#include <string>

#include "dfk/partition.hpp"
#include "dfk/reduction.hpp"

namespace dfk {

// Rule-5 marks over the vertices outside S(G).
struct MarkedSet {
  std::set<Vertex> marked;
};

struct KernelStats {
  std::array<int, 5> parts_before{};
  std::array<int, 5> parts_after{};
  std::map<RuleId, int> applications;
  int n_before = 0, m_before = 0;
  int n_after = 0, m_after = 0;
  int k_before = 0, k_after = 0;
  std::string answer;  // "yes", "no" or "undecided"
};

struct KernelResult {
  Instance instance;
  std::vector<RuleApplication> trace;
  KernelStats stats;
};

// A vertex-deletion pass returns the shrunken instance together with the
// labels recomputed for it.
struct RulePassResult {
  Instance instance;
  std::vector<RuleApplication> trace;
  PartitionLabels labels;
};

// Lowest-labeled guarded type-I vertex whose only type-I maximal clique
// has at least 3k+3 vertices, if any.
std::optional<Vertex> rule3_candidate(const Instance& inst,
                                      const PartitionLabels& labels);

// Rule 3: a guarded type-I vertex whose only type-I maximal clique has at
// least 3k+3 vertices is deleted; lowest label first, labels recomputed
// after every deletion.
RulePassResult rule3_apply_exhaustively(Instance inst, PartitionLabels labels);

// Rule 4: delete every guarded vertex outside all type-I maximal cliques
// (part v), lowest label first.
RulePassResult rule4_apply_exhaustively(Instance inst, PartitionLabels labels);

// Rule 5 marking: for every pair u,v in S(G), the k+1 lowest-labeled
// common neighbors outside S(G) are marked; when |N(u,v)| <= k the
// second-level sets N(u,w) and N(v,w) are marked the same way.
MarkedSet rule5_mark(const Instance& inst, const PartitionLabels& labels);

// Rule 5 deletion: one batch removing every unmarked vertex of T(G).
RulePassResult rule5_apply(Instance inst, PartitionLabels labels,
                           const MarkedSet& marks);

// Vertex-count threshold above which the kernelized instance is declared
// a no-instance: S + 6k^2 (18k^3 + 6k^2 + 2k) + C(S,2)(k+1)(2k+3) with
// S = 18k^3 + 2k, saturated to LLONG_MAX.
long long editing_size_bound(int k);

KernelResult kernelize_editing(Instance inst);

}  // namespace dfk

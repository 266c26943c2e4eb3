#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dfk/graph.hpp"

namespace dfk {

enum class RuleId {
  R1_add,
  R2_delete,
  DD2_no_instance,
  R3_delete_vertex,
  R4_delete_vertex,
  R5_delete_vertex,
  DD3_strip,
  DD4_delete_vertex,
  SIZE_NO_INSTANCE,
  // Emitted when the budget is zero while an edit is still forced; the
  // base rules as written would drive k negative.
  BUDGET_NO_INSTANCE,
};

std::string to_string(RuleId id);
std::optional<RuleId> rule_from_string(const std::string& s);

// One trace record.  At most one of pair/vertex is set; k_after drops by
// exactly one for R1/R2 and is unchanged for every vertex-deletion rule.
struct RuleApplication {
  RuleId rule = RuleId::R1_add;
  std::optional<VertexPair> pair;
  std::optional<Vertex> vertex;
  int k_after = 0;
};

struct PermanentMarks {
  std::set<VertexPair> permanent;  // subset of E(G)
};

// Pattern finders shared by application and the reduced predicate.  A
// rule-1 target is a non-edge whose common neighborhood holds k+1 disjoint
// adjacent pairs; rule 2 wants nonadjacent pairs.  Scanning order is
// canonical (sorted pairs), with the |N(u)∩N(v)| >= 2k+2 necessary
// condition checked before any matching call.
std::optional<VertexPair> find_rule1_target(const Graph& g, int k);
std::optional<VertexPair> find_rule2_target(const Graph& g, int k);

std::optional<std::pair<Instance, RuleApplication>> rule1_find_and_apply(
    const Instance& inst);
std::optional<std::pair<Instance, RuleApplication>> rule2_find_and_apply(
    const Instance& inst);

struct SunflowerReduction {
  Instance instance;
  std::vector<RuleApplication> trace;
  bool no_instance = false;
};

// Apply the sunflower rules exhaustively (rule 2 only in deletion mode),
// restarting the scan after each application.  When the budget is zero
// and a forced pattern remains the instance is declared a no-instance: at
// k = 0 a size-one pattern is exactly a diamond.
SunflowerReduction reduce_sunflower(Instance inst);

// Rule DD-2 for the deletion kernel: mark permanent edges, then report a
// no-instance iff some induced diamond consists of permanent edges only.
// An edge is marked when its common neighborhood holds k+1 disjoint
// adjacent pairs, or k+1 pairwise adjacent vertices, or when k = 0 (with
// no budget every edge is untouchable).  The latter two conditions keep
// every edge of a big maximal clique marked for small k as well.
std::pair<PermanentMarks, bool> dd2_mark_and_check(const Instance& inst);

// True iff no rule of the instance's mode applies at the current budget.
bool is_reduced(const Instance& inst);

// A single diamond with k = 0, built on the four lowest labels of the
// graph the pipeline was looking at when it gave up.
Instance canonical_no_instance(const Graph& current, Mode mode);
bool is_canonical_no_instance(const Instance& inst);

}  // namespace dfk

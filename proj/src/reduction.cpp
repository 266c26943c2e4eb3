#include "dfk/reduction.hpp"

#include <algorithm>

#include "dfk/diamond.hpp"
#include "dfk/matching.hpp"

namespace dfk {

std::string to_string(RuleId id) {
  switch (id) {
    case RuleId::R1_add: return "R1_add";
    case RuleId::R2_delete: return "R2_delete";
    case RuleId::DD2_no_instance: return "DD2_no_instance";
    case RuleId::R3_delete_vertex: return "R3_delete_vertex";
    case RuleId::R4_delete_vertex: return "R4_delete_vertex";
    case RuleId::R5_delete_vertex: return "R5_delete_vertex";
    case RuleId::DD3_strip: return "DD3_strip";
    case RuleId::DD4_delete_vertex: return "DD4_delete_vertex";
    case RuleId::SIZE_NO_INSTANCE: return "SIZE_NO_INSTANCE";
    case RuleId::BUDGET_NO_INSTANCE: return "BUDGET_NO_INSTANCE";
  }
  throw std::logic_error("unknown rule id");
}

std::optional<RuleId> rule_from_string(const std::string& s) {
  static const RuleId all[] = {
      RuleId::R1_add,           RuleId::R2_delete,
      RuleId::DD2_no_instance,  RuleId::R3_delete_vertex,
      RuleId::R4_delete_vertex, RuleId::R5_delete_vertex,
      RuleId::DD3_strip,        RuleId::DD4_delete_vertex,
      RuleId::SIZE_NO_INSTANCE, RuleId::BUDGET_NO_INSTANCE,
  };
  for (RuleId id : all)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

std::optional<VertexPair> find_rule1_target(const Graph& g, int k) {
  const std::size_t t = static_cast<std::size_t>(k) + 1;
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j])) continue;
      if (common_neighbors(g, vs[i], vs[j]).size() < 2 * t) continue;
      if (disjoint_adjacent_pairs(g, vs[i], vs[j], t))
        return VertexPair(vs[i], vs[j]);
    }
  return std::nullopt;
}

std::optional<VertexPair> find_rule2_target(const Graph& g, int k) {
  const std::size_t t = static_cast<std::size_t>(k) + 1;
  for (const auto& e : g.edges()) {
    if (common_neighbors(g, e.a, e.b).size() < 2 * t) continue;
    if (disjoint_nonadjacent_pairs(g, e.a, e.b, t)) return e;
  }
  return std::nullopt;
}

std::optional<std::pair<Instance, RuleApplication>> rule1_find_and_apply(
    const Instance& inst) {
  if (inst.mode != Mode::editing)
    throw std::invalid_argument("rule 1 exists only in editing mode");
  if (inst.k < 1) return std::nullopt;
  auto target = find_rule1_target(inst.graph, inst.k);
  if (!target) return std::nullopt;
  Instance out = inst;
  out.graph.add_edge(*target);
  out.k = inst.k - 1;
  return std::make_pair(std::move(out),
                        RuleApplication{RuleId::R1_add, *target, {}, inst.k - 1});
}

std::optional<std::pair<Instance, RuleApplication>> rule2_find_and_apply(
    const Instance& inst) {
  if (inst.k < 1) return std::nullopt;
  auto target = find_rule2_target(inst.graph, inst.k);
  if (!target) return std::nullopt;
  Instance out = inst;
  out.graph.remove_edge(*target);
  out.k = inst.k - 1;
  return std::make_pair(
      std::move(out),
      RuleApplication{RuleId::R2_delete, *target, {}, inst.k - 1});
}

SunflowerReduction reduce_sunflower(Instance inst) {
  SunflowerReduction out;
  for (;;) {
    if (inst.k == 0) {
      if (!is_diamond_free(inst.graph)) {
        out.trace.push_back(RuleApplication{RuleId::BUDGET_NO_INSTANCE, {}, {}, 0});
        out.no_instance = true;
      }
      break;
    }
    if (inst.mode == Mode::editing) {
      if (auto a = rule1_find_and_apply(inst)) {
        inst = std::move(a->first);
        out.trace.push_back(a->second);
        continue;
      }
    }
    if (auto a = rule2_find_and_apply(inst)) {
      inst = std::move(a->first);
      out.trace.push_back(a->second);
      continue;
    }
    break;
  }
  out.instance = std::move(inst);
  return out;
}

std::pair<PermanentMarks, bool> dd2_mark_and_check(const Instance& inst) {
  if (inst.mode != Mode::deletion)
    throw std::invalid_argument("DD-2 belongs to the deletion kernel");
  if (!is_reduced(inst))
    throw std::invalid_argument("DD-2 requires a DD-1-reduced instance");
  const Graph& g = inst.graph;
  const std::size_t t = static_cast<std::size_t>(inst.k) + 1;
  PermanentMarks marks;
  for (const auto& e : g.edges()) {
    if (inst.k == 0) {
      marks.permanent.insert(e);
      continue;
    }
    auto s = common_neighbors(g, e.a, e.b);
    bool permanent =
        (s.size() >= 2 * t && disjoint_adjacent_pairs(g, e.a, e.b, t)) ||
        (s.size() >= t && has_clique_of_size(g, s, t));
    if (permanent) marks.permanent.insert(e);
  }
  // a diamond of permanent edges can never be destroyed by deletions
  for (const auto& e : marks.permanent) {
    auto s = common_neighbors(g, e.a, e.b);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!marks.permanent.count(VertexPair(e.a, s[i])) ||
          !marks.permanent.count(VertexPair(e.b, s[i])))
        continue;
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (g.has_edge(s[i], s[j])) continue;
        if (marks.permanent.count(VertexPair(e.a, s[j])) &&
            marks.permanent.count(VertexPair(e.b, s[j])))
          return {std::move(marks), true};
      }
    }
  }
  return {std::move(marks), false};
}

bool is_reduced(const Instance& inst) {
  if (inst.k < 1) return true;  // the rules need budget to apply
  if (inst.mode == Mode::editing &&
      find_rule1_target(inst.graph, inst.k))
    return false;
  return !find_rule2_target(inst.graph, inst.k).has_value();
}

Instance canonical_no_instance(const Graph& current, Mode mode) {
  auto vs = current.vertices();
  if (vs.size() < 4)
    throw std::logic_error("no-instance detected on fewer than four vertices");
  return Instance{make_diamond({vs[0], vs[1], vs[2], vs[3]}), 0, mode};
}

bool is_canonical_no_instance(const Instance& inst) {
  return inst.k == 0 && inst.graph.vertex_count() == 4 &&
         inst.graph.edge_count() == 5;
}

}  // namespace dfk

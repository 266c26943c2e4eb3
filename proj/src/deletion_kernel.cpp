#include "dfk/deletion_kernel.hpp"

#include <algorithm>

namespace dfk {

namespace {

void append(std::vector<RuleApplication>& trace,
            const std::vector<RuleApplication>& more) {
  trace.insert(trace.end(), more.begin(), more.end());
}

}  // namespace

RulePassResult dd3_strip(Instance inst, PartitionLabels labels) {
  RulePassResult out;
  for (const auto& e : inst.graph.edges()) {
    if (labels.edge_type1.count(e)) continue;
    inst.graph.remove_edge(e);
    out.trace.push_back(RuleApplication{RuleId::DD3_strip, e, {}, inst.k});
  }
  for (Vertex v : labels.vertices) {
    if (labels.vertex_type1.count(v)) continue;
    if (inst.graph.degree(v) != 0)
      throw std::logic_error(
          "dd3_strip: vertex outside type-I cliques kept an edge; the "
          "edge marks are not exact");
    inst.graph.remove_vertex(v);
    out.trace.push_back(RuleApplication{RuleId::DD3_strip, {}, v, inst.k});
  }
  out.labels = out.trace.empty() ? std::move(labels) : compute_partition(inst);
  out.instance = std::move(inst);
  return out;
}

RulePassResult dd4_apply_exhaustively(Instance inst, PartitionLabels labels) {
  RulePassResult out;
  for (;;) {
    std::optional<Vertex> victim;
    for (Vertex v : labels.vertices) {
      if (labels.vertex_small.count(v)) continue;
      victim = v;
      break;
    }
    if (!victim) break;
    inst.graph.remove_vertex(*victim);
    out.trace.push_back(
        RuleApplication{RuleId::DD4_delete_vertex, {}, *victim, inst.k});
    labels = compute_partition(inst);
  }
  out.instance = std::move(inst);
  out.labels = std::move(labels);
  return out;
}

long long deletion_size_bound(int k) {
  if (k < 0) throw std::invalid_argument("negative budget");
  const long long kk = k;
  return 18 * kk * kk * kk + 2 * kk;
}

KernelResult kernelize_deletion(Instance inst) {
  if (inst.mode != Mode::deletion)
    throw std::invalid_argument("kernelize_deletion: wrong mode");
  if (inst.k < 0) throw std::invalid_argument("negative budget");

  KernelResult res;
  KernelStats& stats = res.stats;
  stats.k_before = inst.k;
  stats.n_before = static_cast<int>(inst.graph.vertex_count());
  stats.m_before = static_cast<int>(inst.graph.edge_count());

  auto finish = [&](Instance kernel) {
    stats.k_after = kernel.k;
    stats.n_after = static_cast<int>(kernel.graph.vertex_count());
    stats.m_after = static_cast<int>(kernel.graph.edge_count());
    for (const auto& rec : res.trace) ++stats.applications[rec.rule];
    if (stats.answer.empty())
      stats.answer =
          kernel.graph.vertex_count() == 0 ? "yes" : "undecided";
    res.instance = std::move(kernel);
    return std::move(res);
  };

  // DD-1 to a fixed point.  No zero-budget diamond guard here: DD-2
  // subsumes it, since with no budget every edge is permanent.
  while (inst.k >= 1) {
    auto a = rule2_find_and_apply(inst);
    if (!a) break;
    inst = std::move(a->first);
    res.trace.push_back(a->second);
  }

  if (dd2_mark_and_check(inst).second) {
    res.trace.push_back(
        RuleApplication{RuleId::DD2_no_instance, {}, {}, inst.k});
    stats.answer = "no";
    return finish(canonical_no_instance(inst.graph, Mode::deletion));
  }

  auto labels = compute_partition(inst);
  stats.parts_before = part_counts(labels);

  auto r3 = dd3_strip(std::move(inst), std::move(labels));
  append(res.trace, r3.trace);
  auto r4 = dd4_apply_exhaustively(std::move(r3.instance),
                                   std::move(r3.labels));
  append(res.trace, r4.trace);
  inst = std::move(r4.instance);
  labels = std::move(r4.labels);

  if (!is_reduced(inst))
    throw std::logic_error(
        "kernelize_deletion: output is not reduced; phase-2 rules are "
        "unsound here");

  if (static_cast<long long>(inst.graph.vertex_count()) >
      deletion_size_bound(inst.k)) {
    res.trace.push_back(
        RuleApplication{RuleId::SIZE_NO_INSTANCE, {}, {}, inst.k});
    stats.answer = "no";
    return finish(canonical_no_instance(inst.graph, Mode::deletion));
  }

  stats.parts_after = part_counts(labels);
  return finish(std::move(inst));
}

}  // namespace dfk

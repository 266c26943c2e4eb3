#include "dfk/editing_kernel.hpp"

#include <algorithm>
#include <climits>

namespace dfk {

namespace {

void append(std::vector<RuleApplication>& trace,
            const std::vector<RuleApplication>& more) {
  trace.insert(trace.end(), more.begin(), more.end());
}

void count_applications(KernelStats& stats,
                        const std::vector<RuleApplication>& trace) {
  for (const auto& rec : trace) ++stats.applications[rec.rule];
}

}  // namespace

std::optional<Vertex> rule3_candidate(const Instance& inst,
                                      const PartitionLabels& labels) {
  const std::size_t threshold = static_cast<std::size_t>(3) * inst.k + 3;
  for (Vertex x : labels.vertex_type1) {
    if (labels.vertex_vulnerable.count(x)) continue;  // part iv only
    auto view = guarded_cliques(inst, labels, x);
    int type1_cliques = 0;
    std::size_t type1_size = 0;
    for (std::size_t i = 0; i < view.cliques.size(); ++i)
      if (view.type1[i]) {
        ++type1_cliques;
        type1_size = view.cliques[i].size();
      }
    if (type1_cliques == 1 && type1_size >= threshold) return x;
  }
  return std::nullopt;
}

RulePassResult rule3_apply_exhaustively(Instance inst,
                                        PartitionLabels labels) {
  RulePassResult out;
  for (;;) {
    auto victim = rule3_candidate(inst, labels);
    if (!victim) break;
    inst.graph.remove_vertex(*victim);
    out.trace.push_back(
        RuleApplication{RuleId::R3_delete_vertex, {}, *victim, inst.k});
    labels = compute_partition(inst);
  }
  out.instance = std::move(inst);
  out.labels = std::move(labels);
  return out;
}

RulePassResult rule4_apply_exhaustively(Instance inst,
                                        PartitionLabels labels) {
  RulePassResult out;
  for (;;) {
    std::optional<Vertex> victim;
    for (Vertex v : labels.vertices) {
      if (labels.vertex_type1.count(v) || labels.vertex_vulnerable.count(v))
        continue;
      victim = v;  // part v, lowest label
      break;
    }
    if (!victim) break;
    inst.graph.remove_vertex(*victim);
    out.trace.push_back(
        RuleApplication{RuleId::R4_delete_vertex, {}, *victim, inst.k});
    labels = compute_partition(inst);
  }
  out.instance = std::move(inst);
  out.labels = std::move(labels);
  return out;
}

namespace {

// N(u,v): common neighbors outside S(G), ascending.
std::vector<Vertex> common_outside_small(const Graph& g,
                                         const PartitionLabels& labels,
                                         Vertex u, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : common_neighbors(g, u, v))
    if (!labels.vertex_small.count(w)) out.push_back(w);
  return out;
}

void mark_lowest(const std::vector<Vertex>& candidates, std::size_t how_many,
                 std::set<Vertex>& marked) {
  for (std::size_t i = 0; i < candidates.size() && i < how_many; ++i)
    marked.insert(candidates[i]);
}

}  // namespace

MarkedSet rule5_mark(const Instance& inst, const PartitionLabels& labels) {
  const Graph& g = inst.graph;
  const std::size_t quota = static_cast<std::size_t>(inst.k) + 1;
  MarkedSet out;
  std::vector<Vertex> small(labels.vertex_small.begin(),
                            labels.vertex_small.end());
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      auto nuv = common_outside_small(g, labels, small[i], small[j]);
      mark_lowest(nuv, quota, out.marked);
      if (nuv.size() <= static_cast<std::size_t>(inst.k)) {
        for (Vertex w : nuv) {
          mark_lowest(common_outside_small(g, labels, small[i], w), quota,
                      out.marked);
          mark_lowest(common_outside_small(g, labels, small[j], w), quota,
                      out.marked);
        }
      }
    }
  return out;
}

RulePassResult rule5_apply(Instance inst, PartitionLabels labels,
                           const MarkedSet& marks) {
  RulePassResult out;
  std::vector<Vertex> victims;
  for (Vertex v : labels.vertices)
    if (!labels.vertex_type1.count(v) && !marks.marked.count(v))
      victims.push_back(v);  // T(G) is exactly the non-type-I vertices
  for (Vertex v : victims) {
    inst.graph.remove_vertex(v);
    out.trace.push_back(
        RuleApplication{RuleId::R5_delete_vertex, {}, v, inst.k});
  }
  out.labels = out.trace.empty() ? std::move(labels) : compute_partition(inst);
  out.instance = std::move(inst);
  return out;
}

long long editing_size_bound(int k) {
  if (k < 0) throw std::invalid_argument("negative budget");
  if (k >= 1000) return LLONG_MAX;  // far past saturation, keep the
                                    // 128-bit products overflow-free
  using Wide = unsigned __int128;
  const Wide kk = static_cast<Wide>(k);
  const Wide s = 18 * kk * kk * kk + 2 * kk;
  const Wide big_part = 6 * kk * kk * (18 * kk * kk * kk + 6 * kk * kk + 2 * kk);
  const Wide marks = (s * (s > 0 ? s - 1 : 0) / 2) * (kk + 1) * (2 * kk + 3);
  const Wide total = s + big_part + marks;
  if (total > static_cast<Wide>(LLONG_MAX)) return LLONG_MAX;
  return static_cast<long long>(total);
}

KernelResult kernelize_editing(Instance inst) {
  if (inst.mode != Mode::editing)
    throw std::invalid_argument("kernelize_editing: wrong mode");
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
    count_applications(stats, res.trace);
    if (stats.answer.empty())
      stats.answer =
          kernel.graph.vertex_count() == 0 ? "yes" : "undecided";
    res.instance = std::move(kernel);
    return std::move(res);
  };

  auto sun = reduce_sunflower(std::move(inst));
  append(res.trace, sun.trace);
  inst = std::move(sun.instance);
  if (sun.no_instance) {
    stats.answer = "no";
    return finish(canonical_no_instance(inst.graph, Mode::editing));
  }

  if (inst.k == 0) {
    // diamond-free at zero budget: every vertex is guarded and type II,
    // so rule 4 empties the graph
    for (Vertex v : inst.graph.vertices())
      res.trace.push_back(
          RuleApplication{RuleId::R4_delete_vertex, {}, v, 0});
    stats.parts_before[static_cast<int>(Part::v)] =
        static_cast<int>(inst.graph.vertex_count());
    stats.answer = "yes";
    return finish(Instance{Graph{}, 0, Mode::editing});
  }

  auto labels = compute_partition(inst);
  stats.parts_before = part_counts(labels);

  // rules 3 and 4 to a joint fixed point (a rule-3 deletion can demote a
  // type-I clique and expose new part-v vertices)
  for (;;) {
    auto r4 = rule4_apply_exhaustively(std::move(inst), std::move(labels));
    append(res.trace, r4.trace);
    auto r3 = rule3_apply_exhaustively(std::move(r4.instance),
                                       std::move(r4.labels));
    append(res.trace, r3.trace);
    inst = std::move(r3.instance);
    labels = std::move(r3.labels);
    if (r4.trace.empty() && r3.trace.empty()) break;
  }

  auto marks = rule5_mark(inst, labels);
  auto r5 = rule5_apply(std::move(inst), std::move(labels), marks);
  append(res.trace, r5.trace);
  inst = std::move(r5.instance);
  labels = std::move(r5.labels);

  // vertex deletions must not re-enable the sunflower rules
  if (!is_reduced(inst))
    throw std::logic_error(
        "kernelize_editing: output is not reduced; phase-2 rules are "
        "unsound here");

  if (static_cast<long long>(inst.graph.vertex_count()) >
      editing_size_bound(inst.k)) {
    res.trace.push_back(
        RuleApplication{RuleId::SIZE_NO_INSTANCE, {}, {}, inst.k});
    stats.answer = "no";
    return finish(canonical_no_instance(inst.graph, Mode::editing));
  }

  stats.parts_after = part_counts(labels);
  return finish(std::move(inst));
}

}  // namespace dfk

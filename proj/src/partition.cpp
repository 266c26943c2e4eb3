#include "dfk/partition.hpp"

#include <algorithm>
#include <deque>

#include "dfk/diamond.hpp"
#include "dfk/reduction.hpp"

namespace dfk {

std::string to_string(Part p) {
  switch (p) {
    case Part::i: return "i";
    case Part::ii: return "ii";
    case Part::iii: return "iii";
    case Part::iv: return "iv";
    case Part::v: return "v";
  }
  throw std::logic_error("unknown part");
}

namespace {

// Connected components of the subgraph induced by N(v), each sorted,
// ordered by smallest member.
std::vector<std::vector<Vertex>> neighborhood_components(const Graph& g,
                                                         Vertex v) {
  const auto& nb = g.neighbors(v);
  std::set<Vertex> left(nb.begin(), nb.end());
  std::vector<std::vector<Vertex>> comps;
  while (!left.empty()) {
    Vertex start = *left.begin();
    left.erase(left.begin());
    std::vector<Vertex> comp{start};
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      Vertex cur = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(cur)) {
        auto it = left.find(w);
        if (it == left.end()) continue;
        left.erase(it);
        comp.push_back(w);
        queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool contains_cross_edge(const PartitionLabels& labels,
                         const std::vector<Vertex>& comp) {
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = i + 1; j < comp.size(); ++j)
      if (labels.edge_cross.count(VertexPair(comp[i], comp[j]))) return true;
  return false;
}

}  // namespace

PartitionLabels compute_partition(const Instance& inst) {
  if (!is_reduced(inst))
    throw std::invalid_argument(
        "compute_partition: instance is not reduced; labels would be "
        "meaningless");
  const Graph& g = inst.graph;
  const std::size_t small_component = static_cast<std::size_t>(3) * inst.k;

  PartitionLabels labels;
  auto vs = g.vertices();
  labels.vertices.insert(vs.begin(), vs.end());

  // step 1: cross edges and type-I marks
  for (const auto& e : g.edges()) {
    auto s = common_neighbors(g, e.a, e.b);
    if (is_clique(g, s)) continue;
    labels.edge_cross.insert(e);
    labels.vertex_type1.insert(e.a);
    labels.vertex_type1.insert(e.b);
    labels.vertex_type1.insert(s.begin(), s.end());
    s.push_back(e.a);
    s.push_back(e.b);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (g.has_edge(s[i], s[j]))
          labels.edge_type1.insert(VertexPair(s[i], s[j]));
  }

  // step 2: small marks
  for (Vertex v : labels.vertex_type1) {
    auto comps = neighborhood_components(g, v);
    bool small = false;
    for (const auto& comp : comps)
      if (!is_clique(g, comp)) {
        small = true;
        break;
      }
    if (!small)
      for (const auto& comp : comps)
        if (comp.size() <= small_component &&
            contains_cross_edge(labels, comp)) {
          small = true;
          break;
        }
    if (small) labels.vertex_small.insert(v);
  }

  // step 3: vulnerable marks via the unique maximal clique of each
  // unmarked edge, visited once
  std::set<VertexPair> checked;
  for (const auto& e : g.edges()) {
    if (labels.edge_type1.count(e) || checked.count(e)) continue;
    auto clique = unique_maximal_clique_of_edge(g, e.a, e.b);
    ++labels.clique_visits;
    bool holds_small = std::any_of(clique.begin(), clique.end(), [&](Vertex v) {
      return labels.vertex_small.count(v) != 0;
    });
    if (holds_small)
      labels.vertex_vulnerable.insert(clique.begin(), clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        if (g.has_edge(clique[i], clique[j]))
          checked.insert(VertexPair(clique[i], clique[j]));
  }

  // small vertices are vulnerable by definition
  labels.vertex_vulnerable.insert(labels.vertex_small.begin(),
                                  labels.vertex_small.end());
  return labels;
}

GuardedCliqueView guarded_cliques(const Instance& inst,
                                  const PartitionLabels& labels, Vertex x) {
  if (labels.vertex_vulnerable.count(x))
    throw std::invalid_argument("guarded_cliques: vertex " +
                                std::to_string(x) + " is vulnerable");
  if (!labels.vertices.count(x))
    throw std::invalid_argument("guarded_cliques: unknown vertex " +
                                std::to_string(x));
  const Graph& g = inst.graph;
  GuardedCliqueView view;
  view.owner = x;
  for (auto& comp : neighborhood_components(g, x)) {
    if (!is_clique(g, comp))
      throw std::logic_error(
          "guarded vertex with a non-cluster neighborhood; partition labels "
          "are stale or wrong");
    view.type1.push_back(contains_cross_edge(labels, comp));
    comp.push_back(x);
    std::sort(comp.begin(), comp.end());
    view.cliques.push_back(std::move(comp));
  }
  return view;
}

Part part_of(const PartitionLabels& labels, Vertex v) {
  if (!labels.vertices.count(v))
    throw std::invalid_argument("part_of: unknown vertex " +
                                std::to_string(v));
  const bool small = labels.vertex_small.count(v) != 0;
  const bool type1 = labels.vertex_type1.count(v) != 0;
  const bool vulnerable = labels.vertex_vulnerable.count(v) != 0;
  if (small) return Part::i;
  if (vulnerable && type1) return Part::ii;
  if (vulnerable) return Part::iii;
  if (type1) return Part::iv;
  return Part::v;
}

std::array<int, 5> part_counts(const PartitionLabels& labels) {
  std::array<int, 5> counts{};
  for (Vertex v : labels.vertices)
    ++counts[static_cast<int>(part_of(labels, v))];
  return counts;
}

}  // namespace dfk

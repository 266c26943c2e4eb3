#include "dfk/graph.hpp"

#include <algorithm>

namespace dfk {

void Graph::require_vertex(Vertex v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("unknown vertex label " + std::to_string(v));
}

void Graph::add_vertex(Vertex v) {
  if (v < 0) throw std::invalid_argument("vertex labels are nonnegative");
  if (!adj_.emplace(v, std::set<Vertex>{}).second)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " already present");
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v)
    throw std::invalid_argument("self-loop at " + std::to_string(u));
  require_vertex(u);
  require_vertex(v);
  if (!adj_[u].insert(v).second)
    throw std::invalid_argument("edge " + std::to_string(u) + " " +
                                std::to_string(v) + " already present");
  adj_[v].insert(u);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  require_vertex(u);
  require_vertex(v);
  if (adj_[u].erase(v) == 0)
    throw std::invalid_argument("edge " + std::to_string(u) + " " +
                                std::to_string(v) + " not present");
  adj_[v].erase(u);
  --edges_;
}

void Graph::remove_vertex(Vertex v) {
  require_vertex(v);
  edges_ -= adj_[v].size();
  for (Vertex w : adj_[v]) adj_[w].erase(v);
  adj_.erase(v);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw std::invalid_argument("unknown vertex label " + std::to_string(v));
  return it->second;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, nb] : adj_) out.push_back(v);
  return out;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edges_);
  for (const auto& [v, nb] : adj_)
    for (Vertex w : nb)
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph Graph::with_vertices(int n, Vertex first) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(first + i);
  return g;
}

Graph Graph::complete(int n, Vertex first) {
  Graph g = with_vertices(n, first);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(first + i, first + j);
  return g;
}

std::string to_string(Mode m) {
  return m == Mode::editing ? "editing" : "deletion";
}

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "editing") return Mode::editing;
  if (s == "deletion") return Mode::deletion;
  return std::nullopt;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v)
    throw std::invalid_argument("common_neighbors: identical vertices");
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(out));
  return out;
}

Graph apply_edits(const Graph& g, const EditSet& e) {
  for (const auto& p : e.additions)
    if (e.deletions.count(p))
      throw std::invalid_argument("edit set adds and deletes the same pair");
  Graph out = g;
  for (const auto& p : e.additions) {
    if (g.has_edge(p))
      throw std::invalid_argument("addition " + std::to_string(p.a) + " " +
                                  std::to_string(p.b) + " already an edge");
    out.add_edge(p);
  }
  for (const auto& p : e.deletions) {
    if (!g.has_edge(p))
      throw std::invalid_argument("deletion " + std::to_string(p.a) + " " +
                                  std::to_string(p.b) + " is not an edge");
    out.remove_edge(p);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
  Graph out;
  for (Vertex v : s) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("induced_subgraph: unknown vertex " +
                                  std::to_string(v));
    out.add_vertex(v);
  }
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (v < w && out.has_vertex(w)) out.add_edge(v, w);
  return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  Graph out = g;
  out.remove_vertex(v);
  return out;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

}  // namespace dfk

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfk {

// Vertex labels are opaque nonnegative integers.  They are assigned once
// (at load or generation time) and never reassigned: every operation that
// shrinks a graph keeps the surviving labels, so traces and kernels can
// always be read against the original instance.
using Vertex = int;

// Unordered pair of distinct vertices, stored smaller-first so that
// equality, ordering and set membership are canonical.
struct VertexPair {
  Vertex a = 0;
  Vertex b = 0;

  VertexPair() = default;
  VertexPair(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {
    if (x == y)
      throw std::invalid_argument("VertexPair: endpoints must differ, got " +
                                  std::to_string(x) + " twice");
  }

  auto operator<=>(const VertexPair&) const = default;
};

// Undirected simple graph: no self-loops, no parallel edges, symmetric
// adjacency.  Stored as sorted neighbor sets keyed by label.
class Graph {
 public:
  Graph() = default;

  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v);
  void add_edge(VertexPair e) { add_edge(e.a, e.b); }
  void remove_edge(Vertex u, Vertex v);
  void remove_edge(VertexPair e) { remove_edge(e.a, e.b); }
  void remove_vertex(Vertex v);

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(VertexPair e) const { return has_edge(e.a, e.b); }

  const std::set<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::vector<Vertex> vertices() const;   // ascending labels
  std::vector<VertexPair> edges() const;  // canonical pair order
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool operator==(const Graph&) const = default;

  static Graph with_vertices(int n, Vertex first = 1);
  static Graph complete(int n, Vertex first = 1);

 private:
  void require_vertex(Vertex v) const;

  std::map<Vertex, std::set<Vertex>> adj_;
  std::size_t edges_ = 0;
};

enum class Mode { editing, deletion };

std::string to_string(Mode m);
std::optional<Mode> mode_from_string(const std::string& s);

// Edge additions and deletions relative to some graph.  The two sets are
// disjoint; additions must be non-edges and deletions edges of the graph
// they are applied to.
struct EditSet {
  std::set<VertexPair> additions;
  std::set<VertexPair> deletions;

  std::size_t size() const { return additions.size() + deletions.size(); }
  bool empty() const { return additions.empty() && deletions.empty(); }
  // The inverse edit: additions and deletions exchange roles.
  EditSet swapped() const { return EditSet{deletions, additions}; }

  bool operator==(const EditSet&) const = default;
};

struct Instance {
  Graph graph;
  int k = 0;
  Mode mode = Mode::editing;
};

// N(u) ∩ N(v); never contains u or v.  u and v need not be adjacent.
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

// (E(g) ∪ additions) \ deletions over the same vertex set.
Graph apply_edits(const Graph& g, const EditSet& e);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

Graph delete_vertex(const Graph& g, Vertex v);

bool is_clique(const Graph& g, const std::vector<Vertex>& s);

}  // namespace dfk

#include "dfk/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace dfk {

namespace {

// Edmonds' blossom algorithm over vertices 0..n-1.  Augments one path at a
// time so a bounded target can stop the search early.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(int n)
      : n_(n), adj_(n), match_(n, -1), parent_(n), base_(n), used_(n),
        in_blossom_(n) {}

  void add_edge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  // Grow the matching until `target` pairs exist; returns the size reached
  // (the maximum matching size if that is below the target).
  int augment_until(int target) {
    int size = 0;
    if (size >= target) return size;
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_augmenting_path(root);
      if (v == -1) continue;
      while (v != -1) {  // flip matched edges along the path
        int pv = parent_[v];
        int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
      if (++size >= target) break;
    }
    return size;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) out.emplace_back(v, match_[v]);
    return out;
  }

 private:
  int lowest_common_base(int a, int b) const {
    std::vector<char> seen(n_, 0);
    for (int x = a;;) {
      x = base_[x];
      seen[x] = 1;
      if (match_[x] == -1) break;
      x = parent_[match_[x]];
    }
    for (int y = b;;) {
      y = base_[y];
      if (seen[y]) return y;
      y = parent_[match_[y]];
    }
  }

  void mark_blossom_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // BFS from a free root over the alternating forest; returns the free
  // vertex ending an augmenting path, or -1.
  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // odd cycle: contract the blossom
          int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_blossom_path(v, b, to);
          mark_blossom_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

// Run the matcher over an explicit vertex set with an edge predicate.
std::optional<Matching> match_on(const std::vector<Vertex>& verts,
                                 const std::function<bool(Vertex, Vertex)>& adj,
                                 std::size_t t) {
  if (t == 0) return Matching{};
  if (verts.size() < 2 * t) return std::nullopt;
  BlossomMatcher m(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adj(verts[i], verts[j])) m.add_edge((int)i, (int)j);
  if (m.augment_until(static_cast<int>(t)) < static_cast<int>(t))
    return std::nullopt;
  Matching out;
  for (auto [i, j] : m.pairs()) out.pairs.emplace_back(verts[i], verts[j]);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace

std::optional<Matching> max_matching_at_least(const Graph& g, std::size_t t) {
  return match_on(g.vertices(),
                  [&g](Vertex u, Vertex v) { return g.has_edge(u, v); }, t);
}

std::optional<Matching> disjoint_adjacent_pairs(const Graph& g, Vertex u,
                                                Vertex v, std::size_t t) {
  auto s = common_neighbors(g, u, v);
  return match_on(s, [&g](Vertex a, Vertex b) { return g.has_edge(a, b); }, t);
}

std::optional<Matching> disjoint_nonadjacent_pairs(const Graph& g, Vertex u,
                                                   Vertex v, std::size_t t) {
  auto s = common_neighbors(g, u, v);
  return match_on(s, [&g](Vertex a, Vertex b) { return !g.has_edge(a, b); },
                  t);
}

}  // namespace dfk

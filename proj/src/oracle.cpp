#include "dfk/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

#include "dfk/bitgraph.hpp"

namespace dfk {

namespace {

struct Searcher {
  BitGraph g;
  Mode mode;
  int n;
  std::vector<char> blocked;                      // n*n, pair already edited
  std::vector<std::pair<int, int>> edits;         // index pairs, in order
  std::vector<char> was_edge;                     // original state per edit

  explicit Searcher(const Graph& graph, Mode m)
      : g(graph), mode(m), n(g.size()), blocked(std::size_t(n) * n, 0) {}

  bool dfs(int depth) {
    auto d = find_diamond_indices(g);
    if (!d) return true;
    if (depth == 0) return false;
    auto [c1, c2, w1, w2] = *d;
    std::array<std::pair<int, int>, 6> cand{{{c1, c2},
                                             {std::min(c1, w1), std::max(c1, w1)},
                                             {std::min(c1, w2), std::max(c1, w2)},
                                             {std::min(c2, w1), std::max(c2, w1)},
                                             {std::min(c2, w2), std::max(c2, w2)},
                                             {w1, w2}}};
    std::sort(cand.begin(), cand.begin() + 5);  // deletions in pair order
    int count = mode == Mode::editing ? 6 : 5;
    for (int i = 0; i < count; ++i) {
      auto [a, b] = cand[i];
      char& block = blocked[std::size_t(a) * n + b];
      if (block) continue;
      block = 1;
      was_edge.push_back(g.edge(a, b) ? 1 : 0);
      g.toggle_edge(a, b);
      edits.emplace_back(a, b);
      if (dfs(depth - 1)) return true;
      edits.pop_back();
      g.toggle_edge(a, b);
      was_edge.pop_back();
      block = 0;
    }
    return false;
  }
};

}  // namespace

SolveResult solve(const Instance& inst) {
  if (inst.k < 0) throw std::invalid_argument("solve: negative budget");
  Searcher s(inst.graph, inst.mode);
  for (int depth = 0; depth <= inst.k; ++depth) {
    if (!s.dfs(depth)) continue;
    EditSet w;
    for (std::size_t i = 0; i < s.edits.size(); ++i) {
      VertexPair p(s.g.label(s.edits[i].first), s.g.label(s.edits[i].second));
      if (s.was_edge[i])
        w.deletions.insert(p);
      else
        w.additions.insert(p);
    }
    return SolveResult{true, static_cast<int>(w.size()), std::move(w)};
  }
  return SolveResult{};
}

SolveResult solve_completion(const Instance& inst) {
  if (inst.k < 0) throw std::invalid_argument("solve: negative budget");
  BitGraph g(inst.graph);
  EditSet w;
  while (auto d = find_diamond_indices(g)) {
    int w1 = (*d)[2], w2 = (*d)[3];
    g.set_edge(w1, w2);
    w.additions.insert(VertexPair(g.label(w1), g.label(w2)));
  }
  int opt = static_cast<int>(w.size());
  bool feasible = opt <= inst.k;
  return SolveResult{feasible, opt, std::move(w)};
}

std::vector<EditSet> enumerate_min_solutions(const Instance& inst, int cap) {
  const auto n = inst.graph.vertex_count();
  if (n > 10 || cap < 0 || cap > 4)
    throw std::invalid_argument(
        "enumerate_min_solutions: guarded to |V| <= 10 and cap <= 4");
  BitGraph g(inst.graph);
  std::vector<std::pair<int, int>> universe;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (inst.mode == Mode::editing || g.edge(i, j))
        universe.emplace_back(i, j);

  std::vector<EditSet> found;
  std::vector<int> pick;
  // all size-s subsets of the pair universe, smallest s with a hit wins
  auto emit = [&]() {
    EditSet e;
    for (int idx : pick) {
      auto [a, b] = universe[idx];
      VertexPair p(g.label(a), g.label(b));
      if (inst.graph.has_edge(p))
        e.deletions.insert(p);
      else
        e.additions.insert(p);
    }
    found.push_back(std::move(e));
  };
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      if (is_diamond_free(g)) emit();
      return;
    }
    for (int i = start; i + remaining <= static_cast<int>(universe.size());
         ++i) {
      pick.push_back(i);
      g.toggle_edge(universe[i].first, universe[i].second);
      rec(i + 1, remaining - 1);
      g.toggle_edge(universe[i].first, universe[i].second);
      pick.pop_back();
    }
  };
  for (int s = 0; s <= cap; ++s) {
    rec(0, s);
    if (!found.empty()) return found;
  }
  throw std::invalid_argument(
      "enumerate_min_solutions: optimum exceeds the requested cap");
}

namespace {

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // pivot with the most candidates covered
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (std::uint64_t m = px; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int cover = std::popcount(p & adj[v]);
    if (cover > best) {
      best = cover;
      pivot = v;
    }
  }
  std::uint64_t ext = p & ~adj[pivot];
  while (ext) {
    int v = std::countr_zero(ext);
    std::uint64_t bit = std::uint64_t(1) << v;
    ext &= ext - 1;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_maximal_cliques(const Graph& g) {
  if (g.vertex_count() > 64)
    throw std::invalid_argument(
        "enumerate_maximal_cliques: oracle scale is |V| <= 64");
  BitGraph bg(g);
  const int n = bg.size();
  if (n == 0) return {};
  std::vector<std::uint64_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && bg.edge(i, j)) adj[i] |= std::uint64_t(1) << j;
  std::vector<std::uint64_t> masks;
  std::uint64_t all = n == 64 ? ~std::uint64_t(0)
                              : ((std::uint64_t(1) << n) - 1);
  bron_kerbosch(adj, 0, all, 0, masks);
  std::vector<std::vector<Vertex>> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) {
    std::vector<Vertex> clique;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      clique.push_back(bg.label(v));
    }
    out.push_back(std::move(clique));  // ascending already
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliqueClassification classify_cliques(const Graph& g, int k) {
  auto cliques = enumerate_maximal_cliques(g);
  const std::size_t big = static_cast<std::size_t>(3) * std::max(k, 0) + 2;
  CliqueClassification out;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    bool type1 = false;
    for (std::size_t j = 0; j < cliques.size() && !type1; ++j) {
      if (i == j) continue;
      std::vector<Vertex> shared;
      std::set_intersection(cliques[i].begin(), cliques[i].end(),
                            cliques[j].begin(), cliques[j].end(),
                            std::back_inserter(shared));
      type1 = shared.size() >= 2;
    }
    if (!type1)
      out.type2.push_back(cliques[i]);
    else if (cliques[i].size() >= big)
      out.big_type1.push_back(cliques[i]);
    else
      out.small_type1.push_back(cliques[i]);
  }
  return out;
}

std::set<Vertex> union_of(const std::vector<std::vector<Vertex>>& cliques) {
  std::set<Vertex> out;
  for (const auto& c : cliques) out.insert(c.begin(), c.end());
  return out;
}

std::set<Vertex> vulnerable_set_bruteforce(const Graph& g, int k) {
  auto cls = classify_cliques(g, k);
  std::set<Vertex> small = union_of(cls.small_type1);
  std::set<Vertex> out = small;
  for (const auto& t2 : cls.type2) {
    bool meets_small = false;
    for (Vertex v : t2)
      if (small.count(v)) {
        meets_small = true;
        break;
      }
    if (meets_small) out.insert(t2.begin(), t2.end());
  }
  return out;
}

}  // namespace dfk

#include "dfk/generator.hpp"

#include <algorithm>
#include <random>

#include "dfk/diamond.hpp"

namespace dfk {

namespace {

// Raw-bits uniform double in [0,1); keeps generation identical across
// standard libraries.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

// k distinct elements of 0..n-1 via partial Fisher-Yates.
std::vector<int> sample_indices(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(draw_below(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace

Instance gen_gnp(const GenSpec& spec) {
  if (spec.n < 0 || spec.p < 0.0 || spec.p > 1.0 || spec.k < 0)
    throw std::invalid_argument("gen_gnp: bad spec");
  std::mt19937_64 rng(spec.seed);
  Graph g = Graph::with_vertices(spec.n);
  for (int u = 1; u <= spec.n; ++u)
    for (int v = u + 1; v <= spec.n; ++v)
      if (unit_draw(rng) < spec.p) g.add_edge(u, v);
  return Instance{std::move(g), spec.k, spec.mode};
}

Instance gen_planted(const GenSpec& spec) {
  if (spec.n < 0 || spec.r < 0 || spec.clique_min < 2 ||
      spec.clique_max < spec.clique_min)
    throw std::invalid_argument("gen_planted: bad spec");
  if (spec.n > 0 && spec.clique_min > spec.n)
    throw std::invalid_argument(
        "gen_planted: clique packing infeasible, smallest clique exceeds n");
  std::mt19937_64 rng(spec.seed);
  Graph g = Graph::with_vertices(spec.n);

  // greedy packing: a candidate clique is kept when it meets every placed
  // clique in at most one vertex and the union stays diamond-free (three
  // cliques pairwise sharing single vertices can still close a diamond)
  std::vector<std::vector<Vertex>> placed;
  int consecutive_failures = 0;
  const int max_failures = 50;
  const std::size_t max_cliques = 2 * static_cast<std::size_t>(spec.n) + 4;
  while (spec.n > 0 && consecutive_failures < max_failures &&
         placed.size() < max_cliques) {
    int size = spec.clique_min +
               static_cast<int>(draw_below(
                   rng, spec.clique_max - spec.clique_min + 1));
    size = std::min(size, spec.n);
    std::vector<Vertex> cand;
    for (int idx : sample_indices(rng, spec.n, size))
      cand.push_back(idx + 1);
    std::sort(cand.begin(), cand.end());

    bool ok = true;
    for (const auto& old : placed) {
      std::vector<Vertex> shared;
      std::set_intersection(cand.begin(), cand.end(), old.begin(), old.end(),
                            std::back_inserter(shared));
      if (shared.size() > 1) {
        ok = false;
        break;
      }
    }
    std::vector<VertexPair> added;
    if (ok) {
      for (std::size_t i = 0; i < cand.size() && ok; ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
          if (!g.has_edge(cand[i], cand[j])) {
            g.add_edge(cand[i], cand[j]);
            added.emplace_back(cand[i], cand[j]);
          }
      if (!is_diamond_free(g)) {
        ok = false;
        for (const auto& e : added) g.remove_edge(e);
      }
    }
    if (ok) {
      placed.push_back(std::move(cand));
      consecutive_failures = 0;
    } else {
      ++consecutive_failures;
    }
  }

  // plant r edits on top of the base
  std::vector<VertexPair> pool;
  for (int u = 1; u <= spec.n; ++u)
    for (int v = u + 1; v <= spec.n; ++v) {
      if (spec.mode == Mode::deletion && g.has_edge(u, v)) continue;
      pool.emplace_back(u, v);
    }
  if (static_cast<std::size_t>(spec.r) > pool.size())
    throw std::invalid_argument(
        "gen_planted: not enough pairs to plant the requested edits");
  auto chosen = sample_indices(rng, static_cast<int>(pool.size()), spec.r);
  for (int idx : chosen) {
    const auto& e = pool[idx];
    if (g.has_edge(e))
      g.remove_edge(e);
    else
      g.add_edge(e);
  }
  return Instance{std::move(g), spec.r, spec.mode};
}

Instance gen_figure3(Mode mode) {
  Graph g = Graph::with_vertices(24);
  auto add_clique = [&g](const std::vector<Vertex>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        if (!g.has_edge(clique[i], clique[j]))
          g.add_edge(clique[i], clique[j]);
  };
  std::vector<Vertex> big{fig3::u1, fig3::u2, fig3::u3, fig3::u4};
  for (Vertex v = 15; v <= 24; ++v) big.push_back(v);
  add_clique(big);                                             // K6 of the figure
  add_clique({fig3::v0, fig3::v1, fig3::v2, fig3::u1});        // K1
  add_clique({fig3::v2, fig3::v3, fig3::v4, fig3::v5, fig3::v6});  // K2
  add_clique({fig3::u2, fig3::v3, fig3::v4, fig3::v5, fig3::v6});  // K3
  add_clique({fig3::u3, fig3::v7, fig3::v8});                  // K4
  add_clique({fig3::u3, fig3::u4, fig3::v9});                  // K5
  return Instance{std::move(g), 4, mode};
}

Instance generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::gnp: return gen_gnp(spec);
    case GenKind::planted: return gen_planted(spec);
    case GenKind::figure3: return gen_figure3(spec.mode);
  }
  throw std::logic_error("unknown generator kind");
}

EditSet fig3_reference_solution() {
  EditSet e;
  e.additions.insert(VertexPair(fig3::u2, fig3::v2));
  e.deletions.insert(VertexPair(fig3::u1, fig3::v2));
  e.deletions.insert(VertexPair(fig3::v0, fig3::v1));
  e.deletions.insert(VertexPair(fig3::u3, fig3::v9));
  return e;
}

}  // namespace dfk

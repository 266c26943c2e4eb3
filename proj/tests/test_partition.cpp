#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dfk/diamond.hpp"
#include "dfk/generator.hpp"
#include "dfk/oracle.hpp"
#include "dfk/partition.hpp"
#include "dfk/reduction.hpp"
#include "shapes.hpp"

using namespace dfk;

namespace {

std::set<Vertex> set_of(std::initializer_list<Vertex> vs) {
  return std::set<Vertex>(vs);
}

std::set<VertexPair> edges_in_type1_cliques(const CliqueClassification& cls) {
  std::set<VertexPair> out;
  auto collect = [&](const std::vector<std::vector<Vertex>>& cliques) {
    for (const auto& c : cliques)
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          out.insert(VertexPair(c[i], c[j]));
  };
  collect(cls.big_type1);
  collect(cls.small_type1);
  return out;
}

}  // namespace

TEST_CASE("figure3 partition golden values") {
  Instance inst = gen_figure3(Mode::editing);
  auto labels = compute_partition(inst);

  std::set<Vertex> small = set_of({fig3::v2, fig3::v3, fig3::v4, fig3::v5,
                                   fig3::v6, fig3::v9, fig3::u2, fig3::u3,
                                   fig3::u4});
  CHECK(labels.vertex_small == small);

  std::set<Vertex> vulnerable;
  for (Vertex v = 1; v <= 14; ++v) vulnerable.insert(v);
  CHECK(labels.vertex_vulnerable == vulnerable);

  // parts: (i) the nine S(G) vertices, (ii) u1, (iii) v0 v1 v7 v8,
  // (iv) the ten unlabeled big-clique vertices, (v) empty
  CHECK(part_counts(labels) == std::array<int, 5>{9, 1, 4, 10, 0});
  CHECK(part_of(labels, fig3::v2) == Part::i);
  CHECK(part_of(labels, fig3::u1) == Part::ii);
  CHECK(part_of(labels, fig3::v7) == Part::iii);
  CHECK(part_of(labels, 15) == Part::iv);
  CHECK_THROWS_AS(part_of(labels, 99), std::invalid_argument);

  // cross edges: the six pairs inside {v3..v6} plus u3u4
  std::set<VertexPair> cross;
  for (Vertex a : {fig3::v3, fig3::v4, fig3::v5, fig3::v6})
    for (Vertex b : {fig3::v3, fig3::v4, fig3::v5, fig3::v6})
      if (a < b) cross.insert(VertexPair(a, b));
  cross.insert(VertexPair(fig3::u3, fig3::u4));
  CHECK(labels.edge_cross == cross);

  // two nontrivial type-II cliques (K1 and K4), each visited once
  CHECK(labels.clique_visits == 2);
}

TEST_CASE("partition trivial cases") {
  Instance free_inst{Graph::complete(6), 2, Mode::editing};
  auto labels = compute_partition(free_inst);
  CHECK(labels.vertex_type1.empty());
  CHECK(labels.vertex_small.empty());
  CHECK(labels.vertex_vulnerable.empty());
  CHECK(labels.edge_cross.empty());
  CHECK(labels.edge_type1.empty());

  Instance d{make_diamond(), 1, Mode::editing};
  auto dl = compute_partition(d);
  CHECK(dl.vertex_small == set_of({1, 2, 3, 4}));
  CHECK(dl.vertex_vulnerable == set_of({1, 2, 3, 4}));
  CHECK(part_counts(dl) == std::array<int, 5>{4, 0, 0, 0, 0});
}

TEST_CASE("partition demands a reduced instance") {
  Graph g = Graph::with_vertices(6);
  for (Vertex w : {3, 4, 5, 6}) {
    g.add_edge(1, w);
    g.add_edge(2, w);
  }
  g.add_edge(1, 2);
  Instance not_reduced{std::move(g), 1, Mode::editing};
  CHECK_THROWS_AS(compute_partition(not_reduced), std::invalid_argument);
}

TEST_CASE("guarded_cliques on the named examples") {
  Instance fig = gen_figure3(Mode::editing);
  auto labels = compute_partition(fig);
  auto view = guarded_cliques(fig, labels, 15);
  REQUIRE(view.cliques.size() == 1);
  CHECK(view.cliques[0].size() == 14);
  CHECK(view.type1[0]);
  CHECK_THROWS_AS(guarded_cliques(fig, labels, fig3::u1),
                  std::invalid_argument);

  // isolated vertex: guarded with zero cliques
  Graph lonely = Graph::with_vertices(1, 42);
  Instance li{std::move(lonely), 1, Mode::editing};
  auto ll = compute_partition(li);
  CHECK(guarded_cliques(li, ll, 42).cliques.empty());

  // guarded vertex whose neighborhood is two disjoint triangles
  Graph g = Graph::with_vertices(7);
  for (Vertex w : {2, 3, 4, 5, 6, 7}) g.add_edge(1, w);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  g.add_edge(5, 6);
  g.add_edge(5, 7);
  g.add_edge(6, 7);
  Instance two{std::move(g), 1, Mode::editing};
  REQUIRE(is_reduced(two));
  auto tl = compute_partition(two);
  auto tv = guarded_cliques(two, tl, 1);
  REQUIRE(tv.cliques.size() == 2);
  CHECK(tv.cliques[0] == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(tv.cliques[1] == std::vector<Vertex>{1, 5, 6, 7});
  CHECK_FALSE(tv.type1[0]);
  CHECK_FALSE(tv.type1[1]);
}

TEST_CASE("partition marks match the brute-force classifier") {
  std::mt19937_64 rng(616);
  int accepted = 0;
  for (int round = 0; accepted < 120 && round < 2000; ++round) {
    GenSpec spec;
    spec.n = 5 + int(rng() % 8);
    spec.p = 0.25 + 0.1 * double(rng() % 6);
    spec.seed = rng();
    spec.k = int(rng() % 4);
    spec.mode = Mode::editing;
    Instance inst = gen_gnp(spec);
    auto reduced = reduce_sunflower(inst);
    if (reduced.no_instance) continue;
    ++accepted;
    inst = reduced.instance;

    auto labels = compute_partition(inst);
    auto cls = classify_cliques(inst.graph, inst.k);

    auto type1 = union_of(cls.big_type1);
    for (Vertex v : union_of(cls.small_type1)) type1.insert(v);
    CHECK(labels.vertex_type1 == type1);
    CHECK(labels.vertex_small == union_of(cls.small_type1));
    CHECK(labels.vertex_vulnerable ==
          vulnerable_set_bruteforce(inst.graph, inst.k));
    CHECK(labels.edge_type1 == edges_in_type1_cliques(cls));

    // a vertex is type I iff it sits inside an induced diamond
    for (Vertex v : inst.graph.vertices()) {
      bool in_diamond = false;
      for (const auto& e : inst.graph.edges()) {
        if (in_diamond) break;
        auto s = common_neighbors(inst.graph, e.a, e.b);
        for (std::size_t i = 0; i < s.size() && !in_diamond; ++i)
          for (std::size_t j = i + 1; j < s.size() && !in_diamond; ++j)
            if (!inst.graph.has_edge(s[i], s[j])) {
              std::set<Vertex> quad{e.a, e.b, s[i], s[j]};
              in_diamond = quad.count(v) != 0;
            }
      }
      CHECK(labels.vertex_type1.count(v) == std::size_t(in_diamond));
    }

    // step 3 touches each nontrivial type-II clique exactly once
    int nontrivial_type2 = 0;
    for (const auto& c : cls.type2)
      if (c.size() >= 2) ++nontrivial_type2;
    CHECK(labels.clique_visits == nontrivial_type2);

    // common neighbors outside S(G) of a nonadjacent pair are pairwise
    // nonadjacent on reduced instances
    auto vs = inst.graph.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (inst.graph.has_edge(vs[i], vs[j])) continue;
        std::vector<Vertex> outside;
        for (Vertex w : common_neighbors(inst.graph, vs[i], vs[j]))
          if (!labels.vertex_small.count(w)) outside.push_back(w);
        for (std::size_t a = 0; a < outside.size(); ++a)
          for (std::size_t b = a + 1; b < outside.size(); ++b)
            CHECK_FALSE(inst.graph.has_edge(outside[a], outside[b]));
      }
  }
  CHECK(accepted >= 120);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <climits>
#include <random>

#include "dfk/deletion_kernel.hpp"
#include "dfk/diamond.hpp"
#include "dfk/editing_kernel.hpp"
#include "dfk/generator.hpp"
#include "dfk/oracle.hpp"
#include "shapes.hpp"

using namespace dfk;

namespace {

bool answers_match(const Instance& a, const Instance& b) {
  return solve(a).feasible == solve(b).feasible;
}

// Big clique on 1..m with the small clique {1, 2, m+1} glued to one edge;
// reduced at the given k, and rule 3 applies when m >= 3k+3.
Instance big_with_small_attachment(int m, int k) {
  Graph g = Graph::complete(m);
  g.add_vertex(m + 1);
  g.add_edge(1, m + 1);
  g.add_edge(2, m + 1);
  return Instance{std::move(g), k, Mode::editing};
}

}  // namespace

TEST_CASE("rule 3 on the named examples") {
  Instance fig = gen_figure3(Mode::editing);
  auto labels = compute_partition(fig);
  auto res = rule3_apply_exhaustively(fig, labels);
  CHECK(res.trace.empty());  // |K6| = 14 < 3k+3 = 15

  Instance free_inst{Graph::complete(7), 1, Mode::editing};
  auto fl = compute_partition(free_inst);
  CHECK(rule3_apply_exhaustively(free_inst, fl).trace.empty());

  // k=1: the 6-clique is big type I, vertices 3..6 are guarded and
  // private to it; rule 3 trims until the clique has 3k+2 vertices
  Instance inst = big_with_small_attachment(6, 1);
  REQUIRE(is_reduced(inst));
  auto il = compute_partition(inst);
  auto trimmed = rule3_apply_exhaustively(inst, il);
  CHECK(trimmed.trace.size() == 1);
  CHECK(trimmed.trace[0].rule == RuleId::R3_delete_vertex);
  CHECK(*trimmed.trace[0].vertex == 3);  // lowest guarded private vertex
  CHECK(answers_match(inst, trimmed.instance));

  // figure3 with the big clique grown to 16 vertices crosses the 3k+3
  // threshold; the guarded private vertices are trimmed back to 14
  Instance grown = gen_figure3(Mode::editing);
  for (Vertex v : {25, 26}) {
    grown.graph.add_vertex(v);
    for (Vertex u : {fig3::u1, fig3::u2, fig3::u3, fig3::u4})
      grown.graph.add_edge(v, u);
    for (Vertex u = 15; u <= 24; ++u) grown.graph.add_edge(v, u);
  }
  grown.graph.add_edge(25, 26);
  REQUIRE(is_reduced(grown));
  auto gl = compute_partition(grown);
  auto gres = rule3_apply_exhaustively(grown, gl);
  REQUIRE(gres.trace.size() == 2);
  CHECK(*gres.trace[0].vertex == 15);
  CHECK(*gres.trace[1].vertex == 16);

  // a vertex shared by two big type-I cliques is not private: no trim
  Graph twin = Graph::complete(6);  // clique A on 1..6
  for (Vertex v = 7; v <= 11; ++v) twin.add_vertex(v);
  for (Vertex a = 6; a <= 11; ++a)
    for (Vertex b = a + 1; b <= 11; ++b) twin.add_edge(a, b);  // B on 6..11
  twin.add_vertex(12);
  twin.add_edge(1, 12);
  twin.add_edge(2, 12);  // small clique on A's edge
  twin.add_vertex(13);
  twin.add_edge(7, 13);
  twin.add_edge(8, 13);  // small clique on B's edge
  Instance shared{std::move(twin), 1, Mode::editing};
  REQUIRE(is_reduced(shared));
  auto sl = compute_partition(shared);
  CHECK(part_of(sl, 6) == Part::iv);
  auto sv = guarded_cliques(shared, sl, 6);
  CHECK(sv.cliques.size() == 2);
  CHECK(sv.type1 == std::vector<bool>{true, true});
  auto strimmed = rule3_apply_exhaustively(shared, sl);
  for (const auto& rec : strimmed.trace) CHECK(*rec.vertex != 6);
  CHECK(answers_match(shared, strimmed.instance));
}

TEST_CASE("rule 4 on the named examples") {
  // diamond plus a disjoint triangle: the triangle is guarded type II
  Graph g = make_diamond();
  for (Vertex v : {5, 6, 7}) g.add_vertex(v);
  g.add_edge(5, 6);
  g.add_edge(5, 7);
  g.add_edge(6, 7);
  Instance inst{std::move(g), 1, Mode::editing};
  auto labels = compute_partition(inst);
  auto res = rule4_apply_exhaustively(inst, labels);
  CHECK(res.trace.size() == 3);
  CHECK(res.instance.graph == make_diamond());
  CHECK(answers_match(inst, res.instance));

  Instance fig = gen_figure3(Mode::editing);
  auto fl = compute_partition(fig);
  CHECK(rule4_apply_exhaustively(fig, fl).trace.empty());

  Instance k5{Graph::complete(5), 1, Mode::editing};
  auto kl = compute_partition(k5);
  auto kres = rule4_apply_exhaustively(k5, kl);
  CHECK(kres.trace.size() == 5);
  CHECK(kres.instance.graph.vertex_count() == 0);
}

TEST_CASE("rule 5 marking on the named examples") {
  Instance d{make_diamond(), 1, Mode::editing};
  auto dl = compute_partition(d);
  CHECK(rule5_mark(d, dl).marked.empty());  // T(G) empty, S(G) everything

  // figure3: v7 and v8 stay unmarked; v0 and v1 are marked through the
  // second level (N(v2,u3) = {u1} is small, and N(v2,u1) = {v0,v1})
  Instance fig = gen_figure3(Mode::editing);
  auto fl = compute_partition(fig);
  auto marks = rule5_mark(fig, fl);
  CHECK(marks.marked.count(fig3::v0) == 1);
  CHECK(marks.marked.count(fig3::v1) == 1);
  CHECK(marks.marked.count(fig3::v7) == 0);
  CHECK(marks.marked.count(fig3::v8) == 0);

  // nonadjacent u=1, v=2 in S(G) sharing k+3 common neighbors outside
  // S(G): exactly the k+1 lowest get marked.  Each of 1 and 2 carries its
  // own small type-I gadget (a K4 whose base edge is crossed by a pendant
  // wing) to put it into S(G) without touching the common neighbors.
  const int k = 2;
  Graph g = Graph::with_vertices(7);  // 1, 2 and the commons 3..7
  for (Vertex w = 3; w <= 7; ++w) {
    g.add_edge(1, w);
    g.add_edge(2, w);
  }
  auto attach_gadget = [&g](Vertex owner, Vertex base) {
    for (Vertex v = base; v <= base + 3; ++v) g.add_vertex(v);
    g.add_edge(owner, base);
    g.add_edge(owner, base + 1);
    g.add_edge(owner, base + 2);
    g.add_edge(base, base + 1);
    g.add_edge(base, base + 2);
    g.add_edge(base + 1, base + 2);     // K4 = {owner, base, base+1, base+2}
    g.add_edge(base, base + 3);
    g.add_edge(base + 1, base + 3);     // wing makes (base, base+1) a cross edge
  };
  attach_gadget(1, 10);
  attach_gadget(2, 20);
  Instance inst{std::move(g), k, Mode::editing};
  REQUIRE(is_reduced(inst));
  auto labels = compute_partition(inst);
  REQUIRE(labels.vertex_small.count(1) == 1);
  REQUIRE(labels.vertex_small.count(2) == 1);
  for (Vertex w = 3; w <= 7; ++w) REQUIRE(labels.vertex_small.count(w) == 0);
  auto m = rule5_mark(inst, labels);
  for (Vertex w : {3, 4, 5}) CHECK(m.marked.count(w) == 1);
  CHECK(m.marked.count(6) == 0);
  CHECK(m.marked.count(7) == 0);
}

TEST_CASE("rule 5 application on the named examples") {
  Instance fig = gen_figure3(Mode::editing);
  auto fl = compute_partition(fig);
  auto marks = rule5_mark(fig, fl);
  auto res = rule5_apply(fig, fl, marks);
  CHECK(res.trace.size() == 2);
  CHECK(*res.trace[0].vertex == fig3::v7);
  CHECK(*res.trace[1].vertex == fig3::v8);
  CHECK(res.instance.graph.vertex_count() == 22);
  auto after = solve(res.instance);
  CHECK(after.feasible);
  CHECK(*after.opt_size == 4);

  Instance d{make_diamond(), 1, Mode::editing};
  auto dl = compute_partition(d);
  CHECK(rule5_apply(d, dl, rule5_mark(d, dl)).trace.empty());

  // diamond with a pendant path off one wing: rule 4 eats the guarded
  // tail, rule 5 then removes the remaining unmarked T(G) vertex
  Graph g = make_diamond();
  for (Vertex v : {5, 6, 7}) g.add_vertex(v);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  Instance tail{std::move(g), 1, Mode::editing};
  auto tl = compute_partition(tail);
  auto r4 = rule4_apply_exhaustively(tail, tl);
  CHECK(r4.trace.size() == 2);  // 6 and 7 are guarded, type II only
  auto tres = rule5_apply(r4.instance, r4.labels,
                          rule5_mark(r4.instance, r4.labels));
  CHECK(tres.trace.size() == 1);  // 5 is vulnerable but unmarked T(G)
  CHECK(tres.instance.graph == make_diamond());
  CHECK(answers_match(tail, tres.instance));
}

TEST_CASE("kernelize_editing on the named examples") {
  auto fig = kernelize_editing(gen_figure3(Mode::editing));
  CHECK(fig.instance.graph.vertex_count() == 22);
  CHECK(fig.instance.k == 4);
  CHECK(fig.stats.answer == "undecided");
  auto r = solve(fig.instance);
  CHECK(r.feasible);
  CHECK(*r.opt_size == 4);
  CHECK(is_reduced(fig.instance));
  // fixed point: no phase-2 rule applies to the output
  auto labels = compute_partition(fig.instance);
  CHECK(rule3_apply_exhaustively(fig.instance, labels).trace.empty());
  CHECK(rule4_apply_exhaustively(fig.instance, labels).trace.empty());
  auto again = rule5_mark(fig.instance, labels);
  CHECK(rule5_apply(fig.instance, labels, again).trace.empty());

  auto free_kernel = kernelize_editing(Instance{shapes::petersen(), 2,
                                                Mode::editing});
  CHECK(free_kernel.instance.graph.vertex_count() == 0);
  CHECK(free_kernel.stats.answer == "yes");

  auto dead = kernelize_editing(
      Instance{shapes::two_cliques_sharing_edge(5, 5), 0, Mode::editing});
  CHECK(is_canonical_no_instance(dead.instance));
  CHECK(dead.stats.answer == "no");
  CHECK_FALSE(solve(dead.instance).feasible);
}

TEST_CASE("kernelize_deletion on the named examples") {
  auto d = kernelize_deletion(Instance{make_diamond(), 1, Mode::deletion});
  CHECK(d.instance.graph == make_diamond());
  CHECK(solve(d.instance).feasible);

  auto dead = kernelize_deletion(
      Instance{shapes::two_cliques_sharing_edge(5, 5), 0, Mode::deletion});
  CHECK(is_canonical_no_instance(dead.instance));
  CHECK(dead.stats.applications.count(RuleId::DD2_no_instance) == 1);

  auto empty = kernelize_deletion(Instance{Graph::complete(9), 0,
                                           Mode::deletion});
  CHECK(empty.instance.graph.vertex_count() == 0);
  CHECK(empty.stats.answer == "yes");

  auto fig = kernelize_deletion(gen_figure3(Mode::deletion));
  CHECK(fig.instance.graph.vertex_count() == 19);
  CHECK(fig.instance.k == 4);
  CHECK(answers_match(gen_figure3(Mode::deletion), fig.instance));
  // every kernel vertex lies in a small type-I maximal clique
  auto labels = compute_partition(fig.instance);
  CHECK(labels.vertex_small == labels.vertices);
}

TEST_CASE("dd3_strip on the named examples") {
  // diamond plus disjoint triangle: the triangle goes, the diamond stays
  Graph g = make_diamond();
  for (Vertex v : {5, 6, 7}) g.add_vertex(v);
  g.add_edge(5, 6);
  g.add_edge(5, 7);
  g.add_edge(6, 7);
  Instance inst{std::move(g), 1, Mode::deletion};
  auto labels = compute_partition(inst);
  auto res = dd3_strip(inst, labels);
  CHECK(res.instance.graph == make_diamond());
  CHECK(res.trace.size() == 6);  // three edges, then three vertices

  Instance free_inst{shapes::petersen(), 1, Mode::deletion};
  auto fl = compute_partition(free_inst);
  auto fres = dd3_strip(free_inst, fl);
  CHECK(fres.instance.graph.vertex_count() == 0);

  // figure3: K1 and K4 edges go, v0 v1 v7 v8 become isolated and go
  Instance fig = gen_figure3(Mode::deletion);
  auto gl = compute_partition(fig);
  auto gres = dd3_strip(fig, gl);
  CHECK(gres.instance.graph.vertex_count() == 20);
  CHECK(gres.instance.graph.edge_count() == 116 - 9);
  for (Vertex gone : {fig3::v0, fig3::v1, fig3::v7, fig3::v8})
    CHECK_FALSE(gres.instance.graph.has_vertex(gone));
}

TEST_CASE("dd4 deletes until everything is small") {
  Instance fig = gen_figure3(Mode::deletion);
  auto labels = compute_partition(fig);
  auto stripped = dd3_strip(fig, labels);
  auto res = dd4_apply_exhaustively(stripped.instance, stripped.labels);
  // u1 goes first; the 13-vertex remnant of the big clique is then small
  REQUIRE(res.trace.size() == 1);
  CHECK(*res.trace[0].vertex == fig3::u1);
  CHECK(res.instance.graph.vertex_count() == 19);
  auto after = compute_partition(res.instance);
  CHECK(after.vertex_small == after.vertices);

  Instance d{make_diamond(), 1, Mode::deletion};
  auto dl = compute_partition(d);
  CHECK(dd4_apply_exhaustively(d, dl).trace.empty());
}

TEST_CASE("editing size bound has the pinned closed form") {
  CHECK(editing_size_bound(0) == 0);
  // S = 20, big part = 6*26 = 156, marks = C(20,2)*2*5 = 1900
  CHECK(editing_size_bound(1) == 20 + 156 + 1900);
  CHECK(deletion_size_bound(0) == 0);
  CHECK(deletion_size_bound(1) == 20);
  CHECK(deletion_size_bound(4) == 18 * 64 + 8);
  CHECK(editing_size_bound(100000) == LLONG_MAX);  // saturates
  CHECK(editing_size_bound(120) == LLONG_MAX);     // already past LLONG_MAX
  CHECK(editing_size_bound(100) > editing_size_bound(99));
}

TEST_CASE("kernel equivalence on random instances") {
  std::mt19937_64 rng(2718);
  for (int round = 0; round < 60; ++round) {
    GenSpec spec;
    spec.n = 6 + int(rng() % 7);
    spec.p = 0.3 + 0.2 * double(rng() % 3);
    spec.seed = rng();
    spec.k = int(rng() % 5);

    spec.mode = Mode::editing;
    Instance e = gen_gnp(spec);
    auto ek = kernelize_editing(e);
    CHECK(solve(e).feasible == solve(ek.instance).feasible);
    CHECK(ek.instance.k <= e.k);
    for (Vertex v : ek.instance.graph.vertices())
      CHECK(e.graph.has_vertex(v));  // kernels never invent vertices

    spec.mode = Mode::deletion;
    Instance del = gen_gnp(spec);
    auto dk = kernelize_deletion(del);
    CHECK(solve(del).feasible == solve(dk.instance).feasible);
    CHECK(dk.instance.k <= del.k);
    for (Vertex v : dk.instance.graph.vertices())
      CHECK(del.graph.has_vertex(v));
  }
}

TEST_CASE("kernelization is idempotent") {
  auto ek = kernelize_editing(gen_figure3(Mode::editing));
  auto ek2 = kernelize_editing(ek.instance);
  CHECK(ek2.instance.graph == ek.instance.graph);
  CHECK(ek2.instance.k == ek.instance.k);
  CHECK(ek2.trace.empty());

  auto dk = kernelize_deletion(gen_figure3(Mode::deletion));
  auto dk2 = kernelize_deletion(dk.instance);
  CHECK(dk2.instance.graph == dk.instance.graph);
  CHECK(dk2.trace.empty());

  std::mt19937_64 rng(321);
  for (int round = 0; round < 20; ++round) {
    GenSpec spec;
    spec.n = 7 + int(rng() % 6);
    spec.p = 0.4;
    spec.seed = rng();
    spec.k = 1 + int(rng() % 3);
    spec.mode = Mode::editing;
    auto once = kernelize_editing(gen_gnp(spec));
    if (is_canonical_no_instance(once.instance)) continue;
    auto twice = kernelize_editing(once.instance);
    CHECK(twice.instance.graph == once.instance.graph);
    CHECK(twice.trace.empty());
  }
}

TEST_CASE("many disjoint diamonds trip the size thresholds") {
  auto disjoint_diamonds = [](int count) {
    Graph g;
    for (int i = 0; i < count; ++i) {
      Vertex base = 1 + 4 * i;
      Graph d = make_diamond({base, base + 1, base + 2, base + 3});
      for (Vertex v : d.vertices()) g.add_vertex(v);
      for (const auto& e : d.edges()) g.add_edge(e);
    }
    return g;
  };

  // deletion: 24 vertices, all in small type-I cliques, exceed 18k^3+2k=20
  Instance del{disjoint_diamonds(6), 1, Mode::deletion};
  REQUIRE_FALSE(solve(del).feasible);
  auto dk = kernelize_deletion(del);
  CHECK(is_canonical_no_instance(dk.instance));
  CHECK(dk.stats.applications.count(RuleId::SIZE_NO_INSTANCE) == 1);

  // editing: 520 diamonds leave 2080 > B(1) = 2076 vertices
  Instance ed{disjoint_diamonds(520), 1, Mode::editing};
  auto ek = kernelize_editing(ed);
  CHECK(is_canonical_no_instance(ek.instance));
  CHECK(ek.stats.applications.count(RuleId::SIZE_NO_INSTANCE) == 1);
  CHECK(ek.stats.answer == "no");

  // just inside the bound: no size verdict
  Instance ok{disjoint_diamonds(5), 1, Mode::deletion};
  auto okk = kernelize_deletion(ok);
  CHECK_FALSE(is_canonical_no_instance(okk.instance));
  CHECK(okk.instance.graph.vertex_count() == 20);
}

TEST_CASE("phase-2 rules never apply to kernel outputs") {
  std::mt19937_64 rng(424242);
  for (int round = 0; round < 40; ++round) {
    GenSpec spec;
    spec.n = 6 + int(rng() % 7);
    spec.p = 0.3 + 0.15 * double(rng() % 3);
    spec.seed = rng();
    spec.k = 1 + int(rng() % 4);
    spec.mode = Mode::editing;
    auto ek = kernelize_editing(gen_gnp(spec));
    const Instance& kernel = ek.instance;
    CHECK(is_reduced(kernel));
    if (kernel.graph.vertex_count() == 0 || is_canonical_no_instance(kernel))
      continue;
    auto labels = compute_partition(kernel);
    CHECK_FALSE(rule3_candidate(kernel, labels).has_value());
    for (Vertex v : labels.vertices) {
      bool part_v = !labels.vertex_type1.count(v) &&
                    !labels.vertex_vulnerable.count(v);
      CHECK_FALSE(part_v);
    }
    auto marks = rule5_mark(kernel, labels);
    CHECK(rule5_apply(kernel, labels, marks).trace.empty());

    spec.mode = Mode::deletion;
    auto dk = kernelize_deletion(gen_gnp(spec));
    if (dk.instance.graph.vertex_count() == 0 ||
        is_canonical_no_instance(dk.instance))
      continue;
    auto dl = compute_partition(dk.instance);
    CHECK(dl.vertex_small == dl.vertices);  // DD-4 fixed point
    CHECK(dl.edge_type1.size() == dk.instance.graph.edge_count());
  }
}

TEST_CASE("size bounds of reduced yes-instances hold on the harness") {
  std::mt19937_64 rng(515151);
  int editing_checked = 0, deletion_checked = 0;
  for (int round = 0; round < 300; ++round) {
    GenSpec spec;
    spec.n = 6 + int(rng() % 7);
    spec.p = 0.3 + 0.15 * double(rng() % 3);
    spec.seed = rng();
    spec.k = 1 + int(rng() % 4);
    spec.mode = Mode::editing;
    auto reduced = reduce_sunflower(gen_gnp(spec));
    if (reduced.no_instance || reduced.instance.k < 1) continue;
    const Instance& inst = reduced.instance;
    if (!solve(inst).feasible) continue;
    const long long k = inst.k;
    auto cls = classify_cliques(inst.graph, inst.k);
    // |S(G)| and the number of big type-I cliques stay under the closed
    // forms used by the size arguments
    CHECK(static_cast<long long>(union_of(cls.small_type1).size()) <=
          18 * k * k * k + 2 * k);
    CHECK(static_cast<long long>(cls.big_type1.size()) <= 6 * k * k);
    ++editing_checked;

    // deletion-mode reducedness: DD-1 fixpoint plus a passing DD-2 imply
    // two big maximal cliques never share two vertices
    Instance del = inst;
    del.mode = Mode::deletion;
    if (!is_reduced(del) || dd2_mark_and_check(del).second) continue;
    auto dcls = classify_cliques(del.graph, del.k);
    for (std::size_t i = 0; i < dcls.big_type1.size(); ++i)
      for (std::size_t j = i + 1; j < dcls.big_type1.size(); ++j) {
        std::vector<Vertex> shared;
        std::set_intersection(
            dcls.big_type1[i].begin(), dcls.big_type1[i].end(),
            dcls.big_type1[j].begin(), dcls.big_type1[j].end(),
            std::back_inserter(shared));
        CHECK(shared.size() <= 1);
      }
    ++deletion_checked;
  }
  CHECK(editing_checked >= 50);
  CHECK(deletion_checked >= 30);
}

TEST_CASE("traces follow the budget invariant") {
  auto check_trace = [](const KernelResult& kr, int k0) {
    int k = k0;
    for (const auto& rec : kr.trace) {
      bool edit = rec.rule == RuleId::R1_add || rec.rule == RuleId::R2_delete;
      CHECK(rec.k_after == k - (edit ? 1 : 0));
      k = rec.k_after;
    }
  };
  std::mt19937_64 rng(13);
  for (int round = 0; round < 30; ++round) {
    GenSpec spec;
    spec.n = 8 + int(rng() % 5);
    spec.p = 0.4;
    spec.seed = rng();
    spec.k = 1 + int(rng() % 4);
    spec.mode = Mode::editing;
    Instance inst = gen_gnp(spec);
    check_trace(kernelize_editing(inst), inst.k);
    inst.mode = Mode::deletion;
    check_trace(kernelize_deletion(inst), inst.k);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dfk/diamond.hpp"
#include "dfk/generator.hpp"
#include "dfk/io.hpp"
#include "dfk/oracle.hpp"

using namespace dfk;

TEST_CASE("gen_gnp edge cases and determinism") {
  GenSpec empty;
  empty.n = 0;
  CHECK(gen_gnp(empty).graph == Graph{});

  GenSpec full;
  full.n = 5;
  full.p = 1.0;
  CHECK(gen_gnp(full).graph == Graph::complete(5));

  GenSpec spec;
  spec.n = 12;
  spec.p = 0.4;
  spec.seed = 99;
  spec.k = 3;
  Instance a = gen_gnp(spec);
  Instance b = gen_gnp(spec);
  CHECK(a.graph == b.graph);
  CHECK(a.k == 3);
  CHECK(instance_to_string(a.graph, a.k) == instance_to_string(b.graph, b.k));
}

TEST_CASE("gen_planted bases are diamond-free and edits stay within budget") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    GenSpec spec;
    spec.kind = GenKind::planted;
    spec.n = 4 + int(rng() % 9);
    spec.clique_min = 2;
    spec.clique_max = 2 + int(rng() % 3);
    spec.seed = rng();
    spec.r = 0;
    Instance base = gen_planted(spec);
    CHECK(is_diamond_free(base.graph));  // r = 0 keeps the bare base
    CHECK(base.k == 0);

    spec.r = 1 + int(rng() % 2);
    spec.mode = Mode::deletion;
    Instance planted = gen_planted(spec);
    CHECK(planted.k == spec.r);
    auto res = solve(planted);
    CHECK(res.feasible);  // reverting the planted additions is a witness
  }
}

TEST_CASE("planted editing instances have optimum at most r") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 40; ++round) {
    GenSpec spec;
    spec.kind = GenKind::planted;
    spec.n = 5 + int(rng() % 6);
    spec.clique_min = 2;
    spec.clique_max = 4;
    spec.seed = rng();
    spec.r = 1;
    spec.mode = Mode::editing;
    Instance inst = gen_planted(spec);
    auto res = solve(inst);
    CHECK(res.feasible);
    CHECK(*res.opt_size <= 1);  // a random edit may heal itself
  }
}

TEST_CASE("gen_planted is deterministic per spec") {
  GenSpec spec;
  spec.kind = GenKind::planted;
  spec.n = 14;
  spec.clique_min = 3;
  spec.clique_max = 5;
  spec.r = 2;
  spec.mode = Mode::deletion;
  spec.seed = 4711;
  Instance a = gen_planted(spec);
  Instance b = gen_planted(spec);
  CHECK(instance_to_string(a.graph, a.k) == instance_to_string(b.graph, b.k));
}

TEST_CASE("gen_planted rejects impossible packings") {
  GenSpec spec;
  spec.kind = GenKind::planted;
  spec.n = 3;
  spec.clique_min = 5;
  spec.clique_max = 6;
  CHECK_THROWS_AS(gen_planted(spec), std::invalid_argument);
}

TEST_CASE("figure3 structure golden values") {
  Instance inst = gen_figure3();
  CHECK(inst.k == 4);
  CHECK(inst.graph.vertex_count() == 24);
  CHECK(inst.graph.edge_count() == 116);
  CHECK(enumerate_maximal_cliques(inst.graph).size() == 6);

  // byte-identical serialization for identical specs
  GenSpec spec;
  spec.kind = GenKind::figure3;
  CHECK(instance_to_string(generate(spec).graph, 4) ==
        instance_to_string(gen_figure3().graph, 4));
}

TEST_CASE("figure3 reference solution verifies") {
  Instance inst = gen_figure3();
  EditSet e = fig3_reference_solution();
  CHECK(e.size() == 4);
  CHECK(is_diamond_free(apply_edits(inst.graph, e)));
}

#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <set>

#include "clockrc/corpus.hpp"
#include "clockrc/io.hpp"

#include <nlohmann/json.hpp>

using namespace clockrc;

TEST_SUITE_BEGIN("corpus");

TEST_CASE("small enumerations match hand counts") {
  CHECK(enumerate_corpus_graphs(1, 5).size() == 1);
  CHECK(enumerate_corpus_graphs(2, 5).size() == 4);  // edge; 2 trees on 3 vertices; triangle
  CHECK(enumerate_corpus_graphs(4, 5).size() == 38);
}

TEST_CASE("the first graph is the single rooted edge") {
  auto graphs = enumerate_corpus_graphs();
  REQUIRE(!graphs.empty());
  CHECK(graphs[0].num_vertices == 2);
  CHECK(graphs[0].edges.size() == 1);
}

TEST_CASE("every corpus graph is connected with one boundary vertex") {
  for (const auto& g : enumerate_corpus_graphs()) {
    CHECK(g.boundary == std::vector<Vertex>{0});
    CHECK(g.num_vertices <= 5);
    CHECK(g.edges.size() <= 5);
    CHECK(g.edges.size() + 1 >= static_cast<std::size_t>(g.num_vertices));
    UnionFind uf(g.num_vertices);
    for (const auto& e : g.edges) uf.unite(e.a, e.b);
    for (Vertex v = 1; v < g.num_vertices; ++v) CHECK(uf.same(0, v));
  }
}

TEST_CASE("enumeration is deterministic") {
  auto a = enumerate_corpus_graphs();
  auto b = enumerate_corpus_graphs();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].num_vertices == b[i].num_vertices);
    CHECK(a[i].edges.size() == b[i].edges.size());
    for (std::size_t e = 0; e < a[i].edges.size(); ++e) CHECK(a[i].edges[e] == b[i].edges[e]);
  }
}

TEST_CASE("default corpus parameters") {
  CorpusSpec spec = default_corpus();
  CHECK(spec.qs == std::vector<int>{2, 3, 4, 5});
  CHECK(spec.betas == std::vector<double>{0.25, 1.0, 4.0});
  CHECK(spec.graphs.size() == 38);
}

TEST_CASE("manifest round trip") {
  CorpusSpec spec = default_corpus();
  std::string path = "corpus_roundtrip_test.json";
  save_corpus(spec, path);
  CorpusSpec loaded = load_corpus(path);
  std::remove(path.c_str());
  REQUIRE(loaded.graphs.size() == spec.graphs.size());
  CHECK(loaded.qs == spec.qs);
  CHECK(loaded.betas == spec.betas);
  for (std::size_t i = 0; i < spec.graphs.size(); ++i) {
    CHECK(loaded.graphs[i].num_vertices == spec.graphs[i].num_vertices);
    for (std::size_t e = 0; e < spec.graphs[i].edges.size(); ++e)
      CHECK(loaded.graphs[i].edges[e] == spec.graphs[i].edges[e]);
  }
}

TEST_CASE("the committed manifest matches the enumerator") {
  CorpusSpec committed = load_corpus(std::string(CLOCKRC_SOURCE_DIR) + "/data/corpus.json");
  CorpusSpec generated = default_corpus();
  REQUIRE(committed.graphs.size() == generated.graphs.size());
  CHECK(committed.qs == generated.qs);
  CHECK(committed.betas == generated.betas);
  for (std::size_t i = 0; i < generated.graphs.size(); ++i) {
    CHECK(committed.graphs[i].num_vertices == generated.graphs[i].num_vertices);
    for (std::size_t e = 0; e < generated.graphs[i].edges.size(); ++e)
      CHECK(committed.graphs[i].edges[e] == generated.graphs[i].edges[e]);
  }
}

TEST_CASE("graph JSON round trip") {
  Graph g = build_box_graph(1, 2);
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.num_vertices == g.num_vertices);
  CHECK(back.boundary == g.boundary);
  CHECK(back.box_n == 1);
  CHECK(back.box_d == 2);
  CHECK(back.coords == g.coords);
}

TEST_CASE("graph labels are distinct across the corpus") {
  std::set<std::string> labels;
  for (const auto& g : enumerate_corpus_graphs()) labels.insert(graph_label(g));
  CHECK(labels.size() == 38);
}

TEST_SUITE_END();

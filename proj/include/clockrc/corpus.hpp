#pragma once

#include <string>
#include <vector>

#include "clockrc/graph.hpp"

namespace clockrc {

struct CorpusSpec {
  std::vector<Graph> graphs;
  std::vector<int> qs;
  std::vector<double> betas;
};

// All connected graphs with one boundary vertex (id 0), up to max_free free
// vertices and max_edges edges, deduplicated under relabelings of the free
// vertices. Deterministic order: by free-vertex count, then edge count, then
// first-seen edge mask.
std::vector<Graph> enumerate_corpus_graphs(int max_free = 4, int max_edges = 5);

// The verification corpus: the graphs above with q in {2,3,4,5} and
// beta in {0.25, 1, 4}.
CorpusSpec default_corpus();

CorpusSpec load_corpus(const std::string& path);
void save_corpus(const CorpusSpec& corpus, const std::string& path);

// Short label like "e01-02-12" identifying a corpus graph by its edge list.
std::string graph_label(const Graph& g);

}  // namespace clockrc

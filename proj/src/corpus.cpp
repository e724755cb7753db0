#include "clockrc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clockrc/io.hpp"

#include <nlohmann/json.hpp>

namespace clockrc {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList canonical_form(const EdgeList& edges, int free_count) {
  std::vector<int> perm(static_cast<std::size_t>(free_count));
  std::iota(perm.begin(), perm.end(), 1);
  EdgeList best;
  do {
    EdgeList mapped;
    mapped.reserve(edges.size());
    for (auto [a, b] : edges) {
      int ma = a == 0 ? 0 : perm[static_cast<std::size_t>(a - 1)];
      int mb = b == 0 ? 0 : perm[static_cast<std::size_t>(b - 1)];
      if (ma > mb) std::swap(ma, mb);
      mapped.emplace_back(ma, mb);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected_all(const EdgeList& edges, int num_vertices) {
  UnionFind uf(num_vertices);
  for (auto [a, b] : edges) uf.unite(a, b);
  for (int v = 1; v < num_vertices; ++v) {
    if (!uf.same(0, v)) return false;
  }
  return true;
}

}  // namespace

std::vector<Graph> enumerate_corpus_graphs(int max_free, int max_edges) {
  std::vector<Graph> out;
  for (int m = 1; m <= max_free; ++m) {
    const int n = m + 1;
    EdgeList candidates;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) candidates.emplace_back(a, b);
    }
    std::set<EdgeList> seen;
    const auto num_masks = std::uint32_t{1} << candidates.size();
    for (std::uint32_t mask = 0; mask < num_masks; ++mask) {
      int bits = __builtin_popcount(mask);
      if (bits < m || bits > max_edges) continue;
      EdgeList edges;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) edges.push_back(candidates[i]);
      }
      if (!connected_all(edges, n)) continue;
      if (!seen.insert(canonical_form(edges, m)).second) continue;
      std::vector<Edge> gedges;
      gedges.reserve(edges.size());
      for (auto [a, b] : edges) gedges.push_back({a, b});
      out.push_back(make_graph(n, {0}, std::move(gedges)));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.num_vertices != b.num_vertices) return a.num_vertices < b.num_vertices;
    return a.edges.size() < b.edges.size();
  });
  return out;
}

CorpusSpec default_corpus() {
  CorpusSpec spec;
  spec.graphs = enumerate_corpus_graphs();
  spec.qs = {2, 3, 4, 5};
  spec.betas = {0.25, 1.0, 4.0};
  return spec;
}

CorpusSpec load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_corpus: cannot open " + path);
  nlohmann::json j;
  in >> j;
  CorpusSpec spec;
  spec.qs = j.at("qs").get<std::vector<int>>();
  spec.betas = j.at("betas").get<std::vector<double>>();
  for (const auto& gj : j.at("graphs")) spec.graphs.push_back(graph_from_json(gj));
  return spec;
}

void save_corpus(const CorpusSpec& corpus, const std::string& path) {
  nlohmann::json j;
  j["qs"] = corpus.qs;
  j["betas"] = corpus.betas;
  j["graphs"] = nlohmann::json::array();
  for (const auto& g : corpus.graphs) j["graphs"].push_back(graph_to_json(g));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_corpus: cannot open " + path);
  out << j.dump(2) << "\n";
}

std::string graph_label(const Graph& g) {
  std::ostringstream os;
  os << "e";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) os << "-";
    os << g.edges[i].a << g.edges[i].b;
  }
  return os.str();
}

}  // namespace clockrc

#include "clockrc/io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace clockrc {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.num_vertices;
  j["boundary"] = g.boundary;
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.a, e.b});
  j["edges"] = std::move(edges);
  if (g.box_d > 0) {
    j["box_n"] = g.box_n;
    j["box_d"] = g.box_d;
    j["coords"] = g.coords;
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  Graph g = make_graph(j.at("vertices").get<int>(), j.at("boundary").get<std::vector<Vertex>>(),
                       std::move(edges));
  if (j.contains("box_n")) {
    g.box_n = j.at("box_n").get<int>();
    g.box_d = j.at("box_d").get<int>();
    g.coords = j.at("coords").get<std::vector<std::vector<int>>>();
  }
  return g;
}

nlohmann::json weight_table_to_json(const WeightTable& wt) {
  nlohmann::json j;
  j["q"] = wt.q;
  j["beta"] = wt.beta;
  j["k"] = wt.k;
  j["t"] = wt.t;
  j["r"] = wt.r;
  j["K"] = wt.K;
  return j;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void CsvWriter::comment(const std::string& text) { os_ << "# " << text << "\n"; }

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ",";
    os_ << cells[i];
  }
  os_ << "\n";
}

}  // namespace clockrc

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "clockrc/graph.hpp"
#include "clockrc/weights.hpp"

namespace clockrc {

// {"vertices": N, "boundary": [...], "edges": [[a,b],...]}; box graphs add
// box_n / box_d / coords.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json weight_table_to_json(const WeightTable& wt);

// Fixed %.12g rendering so equal configs give byte-identical output.
std::string fmt_double(double x);

// CSV with '#' comment lines; every emitted file starts with the full run
// config echoed as a comment.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}
  void comment(const std::string& text);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
};

}  // namespace clockrc

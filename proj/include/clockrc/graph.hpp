#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace clockrc {

using Vertex = int;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;
};

inline bool operator==(const Edge& x, const Edge& y) { return x.a == y.a && x.b == y.b; }

// Finite graph with a distinguished non-empty boundary U. No loops, no
// duplicate edges, and no edge joins two boundary vertices.
struct Graph {
  int num_vertices = 0;
  std::vector<Vertex> boundary;  // U, sorted ascending
  std::vector<Edge> edges;       // each stored with a < b

  // set for box graphs only (box_d == 0 otherwise)
  int box_n = 0;
  int box_d = 0;
  std::vector<std::vector<int>> coords;  // per-vertex lattice coordinates

  std::vector<char> boundary_mask;
  // adjacency[v] = list of (neighbour, edge index)
  std::vector<std::vector<std::pair<Vertex, int>>> adjacency;

  bool is_boundary(Vertex v) const { return boundary_mask[static_cast<std::size_t>(v)] != 0; }
  std::vector<Vertex> free_vertices() const;
  std::size_t num_edges() const { return edges.size(); }
};

// Validates invariants and builds mask/adjacency. Throws std::invalid_argument
// on a malformed input (empty U, U-U edge, loop, duplicate edge, id range).
Graph make_graph(int num_vertices, std::vector<Vertex> boundary, std::vector<Edge> edges);

// Box Lambda_n = [-n,n]^d with boundary U = the outer site shell; edges are
// all nearest-neighbour pairs meeting Lambda_n. Interior sites come first in
// row-major order, then boundary sites in lexicographic order.
Graph build_box_graph(int n, int d);

Vertex box_center_vertex(const Graph& g);
Vertex box_site_vertex(const Graph& g, const std::vector<int>& coord);

// Open/closed marking of every edge of an ambient graph.
struct Disorder {
  std::vector<std::uint8_t> open;
};

// Keeps only the open edges; vertices and boundary unchanged.
Graph apply_disorder(const Graph& g, const Disorder& J);

// Collapses U to a single vertex (new id 0); free vertices keep their
// relative order starting at id 1. Parallel edges created by the collapse are
// merged. Intended to run before edge levels are assigned.
Graph identify_boundary(const Graph& g);

// old vertex id -> new vertex id under identify_boundary
std::vector<Vertex> identified_vertex_map(const Graph& g);

class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  void unite(int x, int y);
  bool same(int x, int y) { return find(x) == find(y); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Path of open edges from x to some boundary vertex; x in U counts as
// connected. open_edges is aligned with g.edges.
bool connected_to_boundary(const Graph& g, const std::vector<char>& open_edges, Vertex x);
bool connected_to_boundary(const Graph& g, const Disorder& J, Vertex x);

}  // namespace clockrc

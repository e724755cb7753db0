#include "clockrc/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace clockrc {

std::vector<Vertex> Graph::free_vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(num_vertices) - boundary.size());
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (!is_boundary(v)) out.push_back(v);
  }
  return out;
}

namespace {

void finalize(Graph& g) {
  if (g.boundary.empty()) throw std::invalid_argument("graph: boundary U must be non-empty");
  std::sort(g.boundary.begin(), g.boundary.end());
  g.boundary_mask.assign(static_cast<std::size_t>(g.num_vertices), 0);
  for (Vertex u : g.boundary) {
    if (u < 0 || u >= g.num_vertices) throw std::invalid_argument("graph: boundary id out of range");
    g.boundary_mask[static_cast<std::size_t>(u)] = 1;
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto& e : g.edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 0 || e.b >= g.num_vertices) throw std::invalid_argument("graph: edge id out of range");
    if (e.a == e.b) throw std::invalid_argument("graph: loop edge");
    if (!seen.insert({e.a, e.b}).second) throw std::invalid_argument("graph: duplicate edge");
    if (g.is_boundary(e.a) && g.is_boundary(e.b))
      throw std::invalid_argument("graph: edge joining two boundary vertices");
  }
  g.adjacency.assign(static_cast<std::size_t>(g.num_vertices), {});
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    g.adjacency[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(i)].a)].push_back(
        {g.edges[static_cast<std::size_t>(i)].b, i});
    g.adjacency[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(i)].b)].push_back(
        {g.edges[static_cast<std::size_t>(i)].a, i});
  }
}

}  // namespace

Graph make_graph(int num_vertices, std::vector<Vertex> boundary, std::vector<Edge> edges) {
  Graph g;
  g.num_vertices = num_vertices;
  g.boundary = std::move(boundary);
  g.edges = std::move(edges);
  finalize(g);
  return g;
}

Graph build_box_graph(int n, int d) {
  if (n < 1) throw std::invalid_argument("build_box_graph: n must be >= 1");
  if (d < 1) throw std::invalid_argument("build_box_graph: d must be >= 1");

  const int side = 2 * n + 1;
  long long interior_count = 1;
  for (int i = 0; i < d; ++i) interior_count *= side;

  // interior site id: row-major over coordinates in [-n, n]
  auto interior_id = [&](const std::vector<int>& c) {
    long long id = 0;
    for (int i = 0; i < d; ++i) id = id * side + (c[static_cast<std::size_t>(i)] + n);
    return static_cast<Vertex>(id);
  };
  auto in_box = [&](const std::vector<int>& c) {
    for (int v : c)
      if (v < -n || v > n) return false;
    return true;
  };

  std::vector<std::vector<int>> coords(static_cast<std::size_t>(interior_count));
  {
    std::vector<int> c(static_cast<std::size_t>(d), -n);
    for (long long i = 0; i < interior_count; ++i) {
      coords[static_cast<std::size_t>(i)] = c;
      for (int axis = d - 1; axis >= 0; --axis) {
        if (++c[static_cast<std::size_t>(axis)] <= n) break;
        c[static_cast<std::size_t>(axis)] = -n;
      }
    }
  }

  // boundary sites collected in lexicographic order
  std::map<std::vector<int>, Vertex> boundary_ids;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cross_edges;  // (interior, boundary)
  std::vector<Edge> edges;
  for (long long i = 0; i < interior_count; ++i) {
    const auto& c = coords[static_cast<std::size_t>(i)];
    for (int axis = 0; axis < d; ++axis) {
      for (int dir : {-1, +1}) {
        std::vector<int> nb = c;
        nb[static_cast<std::size_t>(axis)] += dir;
        if (in_box(nb)) {
          Vertex j = interior_id(nb);
          if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
        } else {
          boundary_ids.emplace(nb, -1);
          cross_edges.push_back({c, nb});
        }
      }
    }
  }
  Vertex next_id = static_cast<Vertex>(interior_count);
  std::vector<Vertex> boundary;
  for (auto& [coord, id] : boundary_ids) {
    id = next_id++;
    boundary.push_back(id);
  }
  for (const auto& [ic, bc] : cross_edges) {
    edges.push_back({interior_id(ic), boundary_ids.at(bc)});
  }

  Graph g;
  g.num_vertices = next_id;
  g.boundary = std::move(boundary);
  g.edges = std::move(edges);
  g.box_n = n;
  g.box_d = d;
  g.coords = std::move(coords);
  g.coords.resize(static_cast<std::size_t>(g.num_vertices));
  for (const auto& [coord, id] : boundary_ids) g.coords[static_cast<std::size_t>(id)] = coord;
  finalize(g);
  return g;
}

Vertex box_center_vertex(const Graph& g) {
  return box_site_vertex(g, std::vector<int>(static_cast<std::size_t>(g.box_d), 0));
}

Vertex box_site_vertex(const Graph& g, const std::vector<int>& coord) {
  if (g.box_d == 0) throw std::invalid_argument("box_site_vertex: not a box graph");
  const int side = 2 * g.box_n + 1;
  long long id = 0;
  for (int i = 0; i < g.box_d; ++i) {
    int v = coord[static_cast<std::size_t>(i)];
    if (v < -g.box_n || v > g.box_n) throw std::invalid_argument("box_site_vertex: site outside the box");
    id = id * side + (v + g.box_n);
  }
  return static_cast<Vertex>(id);
}

Graph apply_disorder(const Graph& g, const Disorder& J) {
  if (J.open.size() != g.edges.size())
    throw std::invalid_argument("apply_disorder: disorder does not cover the edge set");
  Graph out;
  out.num_vertices = g.num_vertices;
  out.boundary = g.boundary;
  out.box_n = g.box_n;
  out.box_d = g.box_d;
  out.coords = g.coords;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (J.open[i]) out.edges.push_back(g.edges[i]);
  }
  finalize(out);
  return out;
}

std::vector<Vertex> identified_vertex_map(const Graph& g) {
  std::vector<Vertex> map(static_cast<std::size_t>(g.num_vertices), 0);
  Vertex next = 1;
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    if (!g.is_boundary(v)) map[static_cast<std::size_t>(v)] = next++;
  }
  return map;
}

Graph identify_boundary(const Graph& g) {
  if (g.boundary.size() == 1 && g.boundary[0] == 0) return g;
  auto map = identified_vertex_map(g);
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges;
  for (const auto& e : g.edges) {
    Vertex a = map[static_cast<std::size_t>(e.a)];
    Vertex b = map[static_cast<std::size_t>(e.b)];
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) edges.push_back({a, b});
  }
  int n = g.num_vertices - static_cast<int>(g.boundary.size()) + 1;
  return make_graph(n, {0}, std::move(edges));
}

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
  for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
}

int UnionFind::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    x = parent_[static_cast<std::size_t>(x)];
  }
  return x;
}

void UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return;
  if (size_[static_cast<std::size_t>(x)] < size_[static_cast<std::size_t>(y)]) std::swap(x, y);
  parent_[static_cast<std::size_t>(y)] = x;
  size_[static_cast<std::size_t>(x)] += size_[static_cast<std::size_t>(y)];
}

bool connected_to_boundary(const Graph& g, const std::vector<char>& open_edges, Vertex x) {
  if (g.is_boundary(x)) return true;
  // virtual root g.num_vertices collects all of U
  UnionFind uf(g.num_vertices + 1);
  for (Vertex u : g.boundary) uf.unite(u, g.num_vertices);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (open_edges[i]) uf.unite(g.edges[i].a, g.edges[i].b);
  }
  return uf.same(x, g.num_vertices);
}

bool connected_to_boundary(const Graph& g, const Disorder& J, Vertex x) {
  if (J.open.size() != g.edges.size())
    throw std::invalid_argument("connected_to_boundary: disorder does not cover the edge set");
  std::vector<char> open(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) open[i] = J.open[i] ? 1 : 0;
  return connected_to_boundary(g, open, x);
}

}  // namespace clockrc

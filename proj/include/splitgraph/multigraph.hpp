#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitgraph/errors.hpp"

namespace splitgraph {

// Orders strings by runs: digit runs compare numerically, so "e2" < "e10".
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(const std::string& a, const std::string& b) const { return natural_less(a, b); }
};

using Vertex = std::string;
using Label = std::string;
using EdgeSet = std::set<Label, NaturalLess>;
using VertexSet = std::set<Vertex, NaturalLess>;

struct Edge {
  Label label;
  Vertex u;  // u <= v in natural order
  Vertex v;
  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

// Undirected multigraph with labelled edges. Immutable once built; vertices
// and edges are kept sorted so equal inputs yield identical internal order.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  // Vertex set is inferred from the endpoints.
  static Multigraph from_edges(const std::vector<Edge>& edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(const Vertex& v) const { return vindex_.count(v) != 0; }
  bool has_edge(const Label& e) const { return eindex_.count(e) != 0; }
  std::size_t vertex_index(const Vertex& v) const;
  std::size_t edge_index(const Label& e) const;
  const Edge& edge(const Label& e) const { return edges_[edge_index(e)]; }

  // Endpoint vertex indices of edge i (first <= second).
  std::pair<int, int> ends(std::size_t i) const { return ends_[i]; }

  std::vector<Label> labels() const;
  EdgeSet label_set() const;
  int degree(const Vertex& v) const;  // loops count twice
  std::vector<int> degrees() const;
  bool is_simple() const;

  bool operator==(const Multigraph& o) const { return vertices_ == o.vertices_ && edges_ == o.edges_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<int, int>> ends_;
  std::unordered_map<Vertex, std::size_t> vindex_;
  std::unordered_map<Label, std::size_t> eindex_;
};

// Minors.
Multigraph delete_edge(const Multigraph& g, const Label& e);
Multigraph contract_edge(const Multigraph& g, const Label& e);
Multigraph take_minor(const Multigraph& g, const EdgeSet& del, const EdgeSet& con);
Multigraph delete_vertices(const Multigraph& g, const VertexSet& vs);
Multigraph induced_subgraph(const Multigraph& g, const VertexSet& vs);
Multigraph edge_subgraph(const Multigraph& g, const EdgeSet& es);  // keeps all vertices
Multigraph add_edge(const Multigraph& g, const Edge& e);
Multigraph rename_vertices(const Multigraph& g, const std::unordered_map<Vertex, Vertex>& names);
Multigraph rename_edges(const Multigraph& g, const std::unordered_map<Label, Label>& names);
Multigraph underlying_simple(const Multigraph& g);  // drops loops and extra parallels

// Connectivity.
std::vector<VertexSet> connected_components(const Multigraph& g);
int num_components(const Multigraph& g);
bool is_connected(const Multigraph& g);
int loop_number(const Multigraph& g);

// Smallest separator of size <= k (k in 1..4), found by exhaustive search.
// A separator leaves the graph disconnected or with a single vertex.
std::optional<VertexSet> vertex_connectivity_le(const Multigraph& g, int k);
bool is_k_connected(const Multigraph& g, int k);
// All separators of exactly this size.
std::vector<VertexSet> vertex_cuts(const Multigraph& g, int size);

struct FullComponent {
  VertexSet cut;
  Multigraph component;
};
std::vector<FullComponent> full_components(const Multigraph& g, const VertexSet& cut);

// Spanning trees.
void for_each_spanning_tree(const Multigraph& g, const std::function<void(const EdgeSet&)>& visit);
std::vector<EdgeSet> spanning_trees(const Multigraph& g);
bool is_spanning_tree(const Multigraph& g, const EdgeSet& t);
bool is_forest(const Multigraph& g, const EdgeSet& es);
// Number of edges of a spanning forest of the given edge subset.
int edge_rank(const Multigraph& g, const EdgeSet& es);
std::size_t count_spanning_trees(const Multigraph& g);

// Canonical form. Optional colours constrain the isomorphism: vertex colours
// must be preserved, edge colours too. Edge colours are indexed by edge order.
std::string canonical_form(const Multigraph& g);
std::string canonical_form(const Multigraph& g, const std::vector<int>& vertex_colors,
                           const std::vector<int>& edge_colors);
bool is_isomorphic(const Multigraph& a, const Multigraph& b);

// Human readable dump: one "label u v" per line.
std::string describe(const Multigraph& g);

}  // namespace splitgraph

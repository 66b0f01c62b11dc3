#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "splitgraph/structure.hpp"

namespace splitgraph {

bool Dart::operator<(const Dart& o) const {
  if (edge != o.edge) return natural_less(edge, o.edge);
  return end < o.end;
}

namespace {

const Vertex& dart_vertex(const Multigraph& g, const Dart& d) {
  const Edge& e = g.edge(d.edge);
  return d.end == 0 ? e.u : e.v;
}

Dart twin(const Dart& d) { return Dart{d.edge, 1 - d.end}; }

// Position of each dart inside its vertex rotation.
std::map<Dart, std::pair<Vertex, std::size_t>> dart_positions(const RotationSystem& rs) {
  std::map<Dart, std::pair<Vertex, std::size_t>> pos;
  for (const auto& [v, ds] : rs.order)
    for (std::size_t i = 0; i < ds.size(); ++i) pos[ds[i]] = {v, i};
  return pos;
}

std::vector<std::vector<Dart>> trace_faces(const Multigraph& g, const RotationSystem& rs) {
  auto pos = dart_positions(rs);
  std::set<Dart> used;
  std::vector<std::vector<Dart>> out;
  for (const Edge& e : g.edges()) {
    for (int end = 0; end < 2; ++end) {
      Dart start{e.label, end};
      if (used.count(start)) continue;
      std::vector<Dart> face;
      Dart d = start;
      while (!used.count(d)) {
        used.insert(d);
        face.push_back(d);
        Dart t = twin(d);
        auto [v, i] = pos.at(t);
        const auto& rot = rs.order.at(v);
        d = rot[(i + 1) % rot.size()];
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

}  // namespace

void validate_rotation(const Multigraph& g, const RotationSystem& rs) {
  std::set<Dart> seen;
  for (const auto& [v, ds] : rs.order) {
    if (!g.has_vertex(v)) throw Error("rotation system names unknown vertex '" + v + "'");
    for (const Dart& d : ds) {
      if (!g.has_edge(d.edge) || (d.end != 0 && d.end != 1)) throw Error("rotation system has invalid dart on '" + d.edge + "'");
      if (dart_vertex(g, d) != v) throw Error("dart of '" + d.edge + "' placed at wrong vertex '" + v + "'");
      if (!seen.insert(d).second) throw Error("dart of '" + d.edge + "' appears twice");
    }
  }
  if (seen.size() != 2 * g.num_edges()) throw Error("rotation system misses edge ends");
  long f = static_cast<long>(trace_faces(g, rs).size());
  long c = 0, isolated = 0;
  auto degs = g.degrees();
  for (const auto& comp : connected_components(g)) {
    ++c;
    if (comp.size() == 1 && degs[g.vertex_index(*comp.begin())] == 0) ++isolated;
  }
  long euler = static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + f + isolated;
  if (euler != 2 * c) throw Error("rotation system is not planar (Euler check failed)");
}

std::vector<std::vector<Dart>> faces(const Multigraph& g, const RotationSystem& rs) {
  validate_rotation(g, rs);
  return trace_faces(g, rs);
}

std::optional<RotationSystem> is_planar(const Multigraph& g) {
  using namespace boost;
  using BG = adjacency_list<vecS, vecS, undirectedS, no_property, property<edge_index_t, int>>;
  // Subdivide every edge (loops twice) so the test runs on a simple graph
  // and each graph edge end becomes a distinct simple edge.
  int n = static_cast<int>(g.num_vertices());
  std::vector<std::pair<int, int>> simple;
  std::vector<std::optional<Dart>> end_of;  // per simple edge, the original dart it carries
  int next = n;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [a, b] = g.ends(i);
    const Label& l = g.edges()[i].label;
    if (a == b) {
      int m1 = next++, m2 = next++;
      simple.emplace_back(a, m1);
      end_of.push_back(Dart{l, 0});
      simple.emplace_back(m1, m2);
      end_of.push_back(std::nullopt);
      simple.emplace_back(m2, a);
      end_of.push_back(Dart{l, 1});
    } else {
      int m = next++;
      simple.emplace_back(a, m);
      end_of.push_back(Dart{l, 0});
      simple.emplace_back(m, b);
      end_of.push_back(Dart{l, 1});
    }
  }
  BG bg(next);
  for (std::size_t k = 0; k < simple.size(); ++k) add_edge(simple[k].first, simple[k].second, static_cast<int>(k), bg);
  using EdgeD = graph_traits<BG>::edge_descriptor;
  std::vector<std::vector<EdgeD>> emb(next);
  auto idx = get(edge_index, bg);
  bool planar = boyer_myrvold_planarity_test(
      boyer_myrvold_params::graph = bg,
      boyer_myrvold_params::embedding = make_iterator_property_map(emb.begin(), get(vertex_index, bg)));
  if (!planar) return std::nullopt;
  RotationSystem rs;
  for (int v = 0; v < n; ++v) {
    auto& rot = rs.order[g.vertices()[v]];
    for (const EdgeD& e : emb[v]) rot.push_back(*end_of[idx[e]]);
  }
  validate_rotation(g, rs);
  return rs;
}

Multigraph planar_dual(const Multigraph& g, const RotationSystem& rs) {
  if (!is_connected(g)) throw Error("planar dual needs a connected graph");
  auto fs = faces(g, rs);
  std::map<Dart, int> face_of;
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (const Dart& d : fs[f]) face_of[d] = static_cast<int>(f);
  std::vector<Vertex> vs;
  for (std::size_t f = 0; f < std::max<std::size_t>(fs.size(), 1); ++f) vs.push_back("f" + std::to_string(f + 1));
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    es.push_back(Edge{e.label, vs[face_of.at({e.label, 0})], vs[face_of.at({e.label, 1})]});
  return Multigraph(vs, es);
}

Multigraph planar_dual(const Multigraph& g) {
  auto rs = is_planar(g);
  if (!rs) throw Error("graph is not planar");
  return planar_dual(g, *rs);
}

RotationSystem embedding_delete(const Multigraph& g, const RotationSystem& rs, const Label& e) {
  g.edge_index(e);
  RotationSystem out;
  for (const auto& [v, ds] : rs.order) {
    auto& rot = out.order[v];
    for (const Dart& d : ds)
      if (d.edge != e) rot.push_back(d);
  }
  return out;
}

RotationSystem embedding_contract(const Multigraph& g, const RotationSystem& rs, const Label& e) {
  const Edge& c = g.edge(e);
  if (c.is_loop()) return embedding_delete(g, rs, e);
  Multigraph h = contract_edge(g, e);
  const Vertex& keep = c.u;
  const Vertex& gone = c.v;
  // rotation at the merged vertex: around u after e, then around v after e
  auto rotate_after = [&](const Vertex& v, const Dart& d) {
    const auto& rot = rs.order.at(v);
    auto it = std::find(rot.begin(), rot.end(), d);
    std::vector<Dart> out;
    for (std::size_t k = 1; k < rot.size(); ++k) out.push_back(rot[(it - rot.begin() + k) % rot.size()]);
    return out;
  };
  std::vector<Dart> merged = rotate_after(keep, Dart{e, 0});
  for (const Dart& d : rotate_after(gone, Dart{e, 1})) merged.push_back(d);
  // Dart ends are relative to each edge's endpoint order, which can change
  // when an endpoint is renamed; re-derive them from the vertex they sit at.
  RotationSystem out;
  std::set<Label> loop_seen;
  auto convert = [&](const Dart& d, const Vertex& new_v) {
    const Edge& ne = h.edge(d.edge);
    if (!ne.is_loop()) return Dart{d.edge, ne.u == new_v ? 0 : 1};
    if (g.edge(d.edge).is_loop()) return d;
    // parallel edge to e became a loop: first end met gets 0
    return Dart{d.edge, loop_seen.insert(d.edge).second ? 0 : 1};
  };
  for (const auto& [v, ds] : rs.order) {
    if (v == gone) continue;
    auto& rot = out.order[v];
    const std::vector<Dart>& src = v == keep ? merged : ds;
    for (const Dart& d : src) rot.push_back(convert(d, v));
  }
  return out;
}

}  // namespace splitgraph

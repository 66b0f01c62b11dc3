#include <set>

#include "splitgraph/splitting.hpp"
#include "splitgraph/structure.hpp"

namespace splitgraph {

namespace {

Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Vertex> vs;
  for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    es.push_back(Edge{"e" + std::to_string(k + 1), vs[pairs[k].first - 1], vs[pairs[k].second - 1]});
  return Multigraph(vs, es);
}

Multigraph complete(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
  return from_pairs(n, p);
}

Multigraph octahedron() {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (i + j != 7) p.emplace_back(i, j);
  return from_pairs(6, p);
}

Multigraph cube() {
  // vertex v(k+1) is the bit string k; edges join strings at Hamming distance one
  std::vector<std::pair<int, int>> p;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (__builtin_popcount(a ^ b) == 1) p.emplace_back(a + 1, b + 1);
  return from_pairs(8, p);
}

Multigraph zigzag(int n) {
  if (n < 0) throw Error("zigzag needs n >= 0");
  int m = n + 4;
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i < m; ++i) p.emplace_back(i, i + 1);
  for (int i = 1; i + 2 <= m; ++i) p.emplace_back(i, i + 2);
  p.emplace_back(1, m);
  return from_pairs(m, p);
}

Multigraph sq_odd_cycle(int k) {
  if (k < 2) throw Error("sq_odd_cycle needs k >= 2");
  int n = 2 * k + 1;
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i + 1, (i + 1) % n + 1);
  for (int i = 0; i < n; ++i) p.emplace_back(i + 1, (i + 2) % n + 1);
  for (auto& [a, b] : p)
    if (a > b) std::swap(a, b);
  return from_pairs(n, p);
}

Multigraph h_graph() {
  Multigraph o = octahedron();
  // face triangle v1 v2 v3: e1 = v1v2, e2 = v1v3, e5 = v2v3
  return tidy_labels(delta_to_y(o, EdgeSet{"e1", "e2", "e5"}));
}

// Q as found by locate_q, relabelled.
Multigraph q_graph() {
  return from_pairs(5, {{1, 3}, {1, 5}, {3, 5}, {1, 3}, {1, 4}, {3, 4}, {1, 2}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"K4", "K5", "K33", "O", "C", "H", "Q", "S2", "c4chord", "zigzag", "sq_odd_cycle"};
}

Multigraph builtin(const std::string& name, int k) {
  auto no_param = [&] {
    if (k != -1) throw Error("builtin '" + name + "' takes no parameter");
  };
  if (name == "K4") return no_param(), complete(4);
  if (name == "K5") return no_param(), complete(5);
  if (name == "K33") {
    no_param();
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i <= 3; ++i)
      for (int j = 4; j <= 6; ++j) p.emplace_back(i, j);
    return from_pairs(6, p);
  }
  if (name == "O") return no_param(), octahedron();
  if (name == "C") return no_param(), cube();
  if (name == "H") return no_param(), h_graph();
  if (name == "Q") return no_param(), q_graph();
  if (name == "S2") return no_param(), s2_graph();
  if (name == "c4chord") return no_param(), from_pairs(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}});
  if (name == "zigzag") {
    if (k < 0) throw Error("builtin 'zigzag' needs a parameter n >= 0");
    return zigzag(k);
  }
  if (name == "sq_odd_cycle") {
    if (k < 2) throw Error("builtin 'sq_odd_cycle' needs a parameter k >= 2");
    return sq_odd_cycle(k);
  }
  throw Error("unknown builtin '" + name + "'");
}

Multigraph s2_graph() {
  Vertex v1 = "v1", v2 = "v2", v3 = "v3", a = "a", b = "b", w = "w";
  return Multigraph({v1, v2, v3, a, b, w}, {Edge{"e1", v1, a}, Edge{"e2", a, v2}, Edge{"e3", v2, w}, Edge{"e4", a, w},
                                            Edge{"e5", w, v3}, Edge{"e6", v3, b}, Edge{"e7", b, v1}, Edge{"e8", b, w}});
}

Multigraph locate_q() {
  std::vector<Multigraph> hits;
  for (const auto& [form, g] : delta_y_family(octahedron())) {
    if (graph_splits(g)) continue;
    auto ns = nonsplitting_configs(g);
    if (configuration_orbits(g, ns).size() != 1) continue;
    if (!is_minor_minimal_nonsplitting(g).minimal) continue;
    hits.push_back(g);
  }
  if (hits.size() != 1) throw Error("expected one family member with a single non-splitting orbit, found " + std::to_string(hits.size()));
  return hits.front();
}

}  // namespace splitgraph

#include "splitgraph/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "union_find.hpp"

namespace splitgraph {

using detail::UnionFind;

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t si = i, sj = j;
      while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
      while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) ++j;
      std::string_view ra = a.substr(si, i - si), rb = b.substr(sj, j - sj);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

Multigraph::Multigraph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end(), NaturalLess{});
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw Error("empty vertex token");
    if (i > 0 && vertices[i] == vertices[i - 1]) throw Error("duplicate vertex '" + vertices[i] + "'");
  }
  vertices_ = std::move(vertices);
  for (std::size_t i = 0; i < vertices_.size(); ++i) vindex_.emplace(vertices_[i], i);

  for (Edge& e : edges) {
    if (e.label.empty()) throw Error("empty edge label");
    if (!has_vertex(e.u)) throw Error("edge '" + e.label + "' has unknown endpoint '" + e.u + "'");
    if (!has_vertex(e.v)) throw Error("edge '" + e.label + "' has unknown endpoint '" + e.v + "'");
    if (natural_less(e.v, e.u)) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return natural_less(x.label, y.label); });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].label == edges[i - 1].label) throw Error("duplicate edge label '" + edges[i].label + "'");
  edges_ = std::move(edges);
  ends_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    eindex_.emplace(edges_[i].label, i);
    ends_.emplace_back(static_cast<int>(vindex_.at(edges_[i].u)), static_cast<int>(vindex_.at(edges_[i].v)));
  }
}

Multigraph Multigraph::from_edges(const std::vector<Edge>& edges) {
  VertexSet vs;
  for (const Edge& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return Multigraph(std::vector<Vertex>(vs.begin(), vs.end()), edges);
}

std::size_t Multigraph::vertex_index(const Vertex& v) const {
  auto it = vindex_.find(v);
  if (it == vindex_.end()) throw Error("no such vertex '" + v + "'");
  return it->second;
}

std::size_t Multigraph::edge_index(const Label& e) const {
  auto it = eindex_.find(e);
  if (it == eindex_.end()) throw Error("no such edge '" + e + "'");
  return it->second;
}

std::vector<Label> Multigraph::labels() const {
  std::vector<Label> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.label);
  return out;
}

EdgeSet Multigraph::label_set() const {
  EdgeSet out;
  for (const Edge& e : edges_) out.insert(e.label);
  return out;
}

int Multigraph::degree(const Vertex& v) const { return degrees()[vertex_index(v)]; }

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(vertices_.size(), 0);
  for (auto [a, b] : ends_) {
    ++d[a];
    ++d[b];
  }
  return d;
}

bool Multigraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (auto p : ends_) {
    if (p.first == p.second) return false;
    if (!seen.insert(p).second) return false;
  }
  return true;
}

Multigraph delete_edge(const Multigraph& g, const Label& e) {
  std::size_t idx = g.edge_index(e);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() - 1);
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (i != idx) edges.push_back(g.edges()[i]);
  return Multigraph(g.vertices(), std::move(edges));
}

Multigraph contract_edge(const Multigraph& g, const Label& e) {
  const Edge& c = g.edge(e);
  if (c.is_loop()) return delete_edge(g, e);
  const Vertex& keep = c.u;  // smaller token
  const Vertex gone = c.v;
  std::vector<Vertex> vertices;
  for (const Vertex& v : g.vertices())
    if (v != gone) vertices.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& x : g.edges()) {
    if (x.label == e) continue;
    Edge y = x;
    if (y.u == gone) y.u = keep;
    if (y.v == gone) y.v = keep;
    edges.push_back(std::move(y));
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph take_minor(const Multigraph& g, const EdgeSet& del, const EdgeSet& con) {
  for (const Label& e : del) {
    g.edge_index(e);
    if (con.count(e)) throw Error("edge '" + e + "' is both deleted and contracted");
  }
  for (const Label& e : con) g.edge_index(e);
  // Contract all at once: merge classes of the contracted edges, name each
  // class after its smallest token.
  UnionFind uf(static_cast<int>(g.num_vertices()));
  for (const Label& e : con) {
    auto [a, b] = g.ends(g.edge_index(e));
    uf.unite(a, b);
  }
  // vertices are sorted, so the first member met is the smallest
  std::vector<int> rep(g.num_vertices(), -1);
  std::vector<int> name(g.num_vertices(), -1);
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (name[r] < 0) name[r] = static_cast<int>(i);
    rep[i] = name[r];
  }
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < g.num_vertices(); ++i)
    if (rep[i] == static_cast<int>(i)) vertices.push_back(g.vertices()[i]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& x = g.edges()[i];
    if (del.count(x.label) || con.count(x.label)) continue;
    auto [a, b] = g.ends(i);
    edges.push_back(Edge{x.label, g.vertices()[rep[a]], g.vertices()[rep[b]]});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph delete_vertices(const Multigraph& g, const VertexSet& vs) {
  std::vector<Vertex> vertices;
  for (const Vertex& v : g.vertices())
    if (!vs.count(v)) vertices.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!vs.count(e.u) && !vs.count(e.v)) edges.push_back(e);
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& vs) {
  std::vector<Vertex> vertices;
  for (const Vertex& v : g.vertices())
    if (vs.count(v)) vertices.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (vs.count(e.u) && vs.count(e.v)) edges.push_back(e);
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph edge_subgraph(const Multigraph& g, const EdgeSet& es) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (es.count(e.label)) edges.push_back(e);
  return Multigraph(g.vertices(), std::move(edges));
}

Multigraph add_edge(const Multigraph& g, const Edge& e) {
  std::vector<Vertex> vertices = g.vertices();
  if (!g.has_vertex(e.u)) vertices.push_back(e.u);
  if (e.v != e.u && !g.has_vertex(e.v)) vertices.push_back(e.v);
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph rename_vertices(const Multigraph& g, const std::unordered_map<Vertex, Vertex>& names) {
  auto nm = [&](const Vertex& v) {
    auto it = names.find(v);
    return it == names.end() ? v : it->second;
  };
  std::vector<Vertex> vertices;
  for (const Vertex& v : g.vertices()) vertices.push_back(nm(v));
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge{e.label, nm(e.u), nm(e.v)});
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph rename_edges(const Multigraph& g, const std::unordered_map<Label, Label>& names) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    auto it = names.find(e.label);
    edges.push_back(Edge{it == names.end() ? e.label : it->second, e.u, e.v});
  }
  return Multigraph(g.vertices(), std::move(edges));
}

Multigraph underlying_simple(const Multigraph& g) {
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto p = g.ends(i);
    if (p.first == p.second || !seen.insert(p).second) continue;
    edges.push_back(g.edges()[i]);
  }
  return Multigraph(g.vertices(), std::move(edges));
}

namespace {

UnionFind component_uf(const Multigraph& g) {
  UnionFind uf(static_cast<int>(g.num_vertices()));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [a, b] = g.ends(i);
    uf.unite(a, b);
  }
  return uf;
}

// Components of g minus the masked vertices (removed[i] true).
int count_components_without(const Multigraph& g, const std::vector<char>& removed) {
  UnionFind uf(static_cast<int>(g.num_vertices()));
  int alive = 0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) alive += removed[i] ? 0 : 1;
  int comps = alive;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [a, b] = g.ends(i);
    if (removed[a] || removed[b]) continue;
    if (uf.unite(a, b)) --comps;
  }
  return comps;
}

template <typename F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == k) return f(idx);
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      if (rec(i + 1, depth + 1)) return true;
    }
    return false;
  };
  rec(0, 0);
}

}  // namespace

std::vector<VertexSet> connected_components(const Multigraph& g) {
  UnionFind uf = component_uf(g);
  std::vector<int> slot(g.num_vertices(), -1);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].insert(g.vertices()[i]);
  }
  return out;
}

int num_components(const Multigraph& g) { return component_uf(g).sets; }

bool is_connected(const Multigraph& g) { return num_components(g) <= 1; }

int loop_number(const Multigraph& g) {
  return static_cast<int>(g.num_edges()) - static_cast<int>(g.num_vertices()) + num_components(g);
}

std::optional<VertexSet> vertex_connectivity_le(const Multigraph& g, int k) {
  if (k < 1 || k > 4) throw Error("connectivity bound must lie in 1..4");
  if (!is_connected(g)) throw Error("graph must be connected");
  int n = static_cast<int>(g.num_vertices());
  for (int s = 1; s <= k && s < n; ++s) {
    std::optional<VertexSet> found;
    for_each_subset(n, s, [&](const std::vector<int>& idx) {
      std::vector<char> removed(n, 0);
      for (int i : idx) removed[i] = 1;
      if (n - s == 1 || count_components_without(g, removed) > 1) {
        VertexSet cut;
        for (int i : idx) cut.insert(g.vertices()[i]);
        found = std::move(cut);
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool is_k_connected(const Multigraph& g, int k) {
  if (static_cast<int>(g.num_vertices()) <= k) return false;
  if (!is_connected(g)) return false;
  if (k <= 1) return true;
  return !vertex_connectivity_le(g, k - 1).has_value();
}

std::vector<VertexSet> vertex_cuts(const Multigraph& g, int size) {
  int n = static_cast<int>(g.num_vertices());
  std::vector<VertexSet> out;
  if (size < 1 || size > n) return out;
  for_each_subset(n, size, [&](const std::vector<int>& idx) {
    std::vector<char> removed(n, 0);
    for (int i : idx) removed[i] = 1;
    if (count_components_without(g, removed) > 1) {
      VertexSet cut;
      for (int i : idx) cut.insert(g.vertices()[i]);
      out.push_back(std::move(cut));
    }
    return false;
  });
  return out;
}

std::vector<FullComponent> full_components(const Multigraph& g, const VertexSet& cut) {
  for (const Vertex& v : cut) g.vertex_index(v);
  Multigraph rest = delete_vertices(g, cut);
  std::vector<FullComponent> out;
  for (const VertexSet& comp : connected_components(rest)) {
    std::vector<Vertex> vertices(comp.begin(), comp.end());
    vertices.insert(vertices.end(), cut.begin(), cut.end());
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      bool in_u = comp.count(e.u) != 0, in_v = comp.count(e.v) != 0;
      bool cu = cut.count(e.u) != 0, cv = cut.count(e.v) != 0;
      if ((in_u || cu) && (in_v || cv) && (in_u || in_v || (cu && cv))) edges.push_back(e);
    }
    out.push_back(FullComponent{cut, Multigraph(std::move(vertices), std::move(edges))});
  }
  return out;
}

void for_each_spanning_tree(const Multigraph& g, const std::function<void(const EdgeSet&)>& visit) {
  int n = static_cast<int>(g.num_vertices());
  int m = static_cast<int>(g.num_edges());
  if (n == 0) {
    visit(EdgeSet{});
    return;
  }
  if (!is_connected(g)) return;
  std::vector<int> chosen;
  // Can the forest plus edges i.. still connect everything?
  auto can_finish = [&](UnionFind uf, int from) {
    for (int i = from; i < m && uf.sets > 1; ++i) {
      auto [a, b] = g.ends(i);
      uf.unite(a, b);
    }
    return uf.sets == 1;
  };
  std::function<void(int, UnionFind&)> rec = [&](int i, UnionFind& uf) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      EdgeSet t;
      for (int c : chosen) t.insert(g.edges()[c].label);
      visit(t);
      return;
    }
    if (i == m || m - i < n - 1 - static_cast<int>(chosen.size())) return;
    auto [a, b] = g.ends(i);
    if (uf.find(a) != uf.find(b)) {
      UnionFind next = uf;
      next.unite(a, b);
      chosen.push_back(i);
      rec(i + 1, next);
      chosen.pop_back();
    }
    if (can_finish(uf, i + 1)) rec(i + 1, uf);
  };
  UnionFind uf(n);
  rec(0, uf);
}

std::vector<EdgeSet> spanning_trees(const Multigraph& g) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(g, [&](const EdgeSet& t) { out.push_back(t); });
  return out;
}

bool is_forest(const Multigraph& g, const EdgeSet& es) {
  UnionFind uf(static_cast<int>(g.num_vertices()));
  for (const Label& e : es) {
    auto [a, b] = g.ends(g.edge_index(e));
    if (!uf.unite(a, b)) return false;
  }
  return true;
}

int edge_rank(const Multigraph& g, const EdgeSet& es) {
  UnionFind uf(static_cast<int>(g.num_vertices()));
  int r = 0;
  for (const Label& e : es) {
    auto [a, b] = g.ends(g.edge_index(e));
    if (uf.unite(a, b)) ++r;
  }
  return r;
}

bool is_spanning_tree(const Multigraph& g, const EdgeSet& t) {
  if (g.num_vertices() == 0) return t.empty();
  for (const Label& e : t)
    if (!g.has_edge(e)) return false;
  return t.size() + 1 == g.num_vertices() && is_forest(g, t);
}

std::size_t count_spanning_trees(const Multigraph& g) {
  std::size_t count = 0;
  for_each_spanning_tree(g, [&](const EdgeSet&) { ++count; });
  return count;
}

std::string describe(const Multigraph& g) {
  std::ostringstream os;
  for (const Edge& e : g.edges()) os << e.label << ' ' << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace splitgraph

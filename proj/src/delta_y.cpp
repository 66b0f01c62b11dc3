#include <deque>
#include <set>

#include "splitgraph/structure.hpp"

namespace splitgraph {

namespace {

std::string fresh(const std::string& prefix, const std::function<bool(const std::string&)>& taken) {
  for (int k = 1;; ++k) {
    std::string s = prefix + std::to_string(k);
    if (!taken(s)) return s;
  }
}

}  // namespace

bool is_triangle_site(const Multigraph& g, const EdgeSet& tri) {
  if (tri.size() != 3) return false;
  VertexSet vs;
  for (const Label& l : tri) {
    if (!g.has_edge(l)) return false;
    const Edge& e = g.edge(l);
    if (e.is_loop()) return false;
    vs.insert(e.u);
    vs.insert(e.v);
  }
  if (vs.size() != 3) return false;
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const Label& l : tri) pairs.emplace(g.edge(l).u, g.edge(l).v);
  return pairs.size() == 3;
}

bool is_star_site(const Multigraph& g, const Vertex& center) {
  if (!g.has_vertex(center) || g.degree(center) != 3) return false;
  VertexSet nb;
  for (const Edge& e : g.edges()) {
    if (e.u != center && e.v != center) continue;
    if (e.is_loop()) return false;
    nb.insert(e.u == center ? e.v : e.u);
  }
  return nb.size() == 3;
}

std::vector<EdgeSet> triangle_sites(const Multigraph& g) {
  std::vector<EdgeSet> out;
  const auto& es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      for (std::size_t c = b + 1; c < es.size(); ++c) {
        EdgeSet t{es[a].label, es[b].label, es[c].label};
        if (is_triangle_site(g, t)) out.push_back(std::move(t));
      }
  return out;
}

std::vector<Vertex> star_sites(const Multigraph& g) {
  std::vector<Vertex> out;
  for (const Vertex& v : g.vertices())
    if (is_star_site(g, v)) out.push_back(v);
  return out;
}

Multigraph delta_to_y(const Multigraph& g, const EdgeSet& tri) {
  if (!is_triangle_site(g, tri)) throw Error("not a triangle site: {" + [&] {
      std::string s;
      for (const Label& l : tri) s += (s.empty() ? "" : ",") + l;
      return s;
    }() + "}");
  VertexSet corners;
  for (const Label& l : tri) {
    corners.insert(g.edge(l).u);
    corners.insert(g.edge(l).v);
  }
  Vertex y = fresh(kFreshVertexPrefix, [&](const std::string& s) { return g.has_vertex(s); });
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(y);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (!tri.count(e.label)) es.push_back(e);
  std::set<Label> used;
  for (const Vertex& c : corners) {
    Label l = fresh(kFreshEdgePrefix, [&](const std::string& s) { return g.has_edge(s) || used.count(s); });
    used.insert(l);
    es.push_back(Edge{l, c, y});
  }
  return Multigraph(vs, es);
}

Multigraph y_to_delta(const Multigraph& g, const Vertex& center) {
  if (!is_star_site(g, center)) throw Error("not a star site: '" + center + "'");
  std::vector<Vertex> nb;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e.u == center || e.v == center) nb.push_back(e.u == center ? e.v : e.u);
    else es.push_back(e);
  }
  std::sort(nb.begin(), nb.end(), NaturalLess{});
  std::set<Label> used;
  auto label = [&] {
    Label l = fresh(kFreshEdgePrefix, [&](const std::string& s) { return g.has_edge(s) || used.count(s); });
    used.insert(l);
    return l;
  };
  es.push_back(Edge{label(), nb[0], nb[1]});
  es.push_back(Edge{label(), nb[0], nb[2]});
  es.push_back(Edge{label(), nb[1], nb[2]});
  std::vector<Vertex> vs;
  for (const Vertex& v : g.vertices())
    if (v != center) vs.push_back(v);
  return Multigraph(vs, es);
}

std::map<std::string, Multigraph> delta_y_family(const Multigraph& g, std::size_t cap) {
  std::map<std::string, Multigraph> seen;
  std::deque<Multigraph> queue;
  auto visit = [&](const Multigraph& h) {
    Multigraph t = tidy_labels(h);
    std::string f = canonical_form(t);
    if (seen.count(f)) return;
    if (seen.size() >= cap) throw FamilyCapError("delta-wye family exceeds cap " + std::to_string(cap), seen);
    seen.emplace(f, t);
    queue.push_back(std::move(t));
  };
  visit(g);
  while (!queue.empty()) {
    Multigraph h = std::move(queue.front());
    queue.pop_front();
    for (const EdgeSet& t : triangle_sites(h)) visit(delta_to_y(h, t));
    for (const Vertex& v : star_sites(h)) visit(y_to_delta(h, v));
  }
  return seen;
}

Multigraph tidy_labels(const Multigraph& g) {
  std::unordered_map<Vertex, Vertex> vn;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) vn[g.vertices()[i]] = "v" + std::to_string(i + 1);
  std::vector<Vertex> vs;
  for (const Vertex& v : g.vertices()) vs.push_back(vn[v]);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    es.push_back(Edge{"e" + std::to_string(i + 1), vn[e.u], vn[e.v]});
  }
  return Multigraph(vs, es);
}

}  // namespace splitgraph

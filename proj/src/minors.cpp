#include <limits>
#include <set>
#include <unordered_set>

#include "splitgraph/structure.hpp"

namespace splitgraph {

std::string to_string(const MinorStep& s) {
  switch (s.op) {
    case MinorStep::DeleteEdge: return "delete " + s.name;
    case MinorStep::ContractEdge: return "contract " + s.name;
    case MinorStep::DeleteVertex: return "delete-vertex " + s.name;
  }
  return s.name;
}

Multigraph apply_minor_steps(const Multigraph& g, const std::vector<MinorStep>& steps) {
  Multigraph h = g;
  for (const MinorStep& s : steps) {
    switch (s.op) {
      case MinorStep::DeleteEdge: h = delete_edge(h, s.name); break;
      case MinorStep::ContractEdge: h = contract_edge(h, s.name); break;
      case MinorStep::DeleteVertex:
        if (!h.has_vertex(s.name)) throw Error("no such vertex '" + s.name + "'");
        h = delete_vertices(h, VertexSet{s.name});
        break;
    }
  }
  return h;
}

namespace {

using Roots = std::map<Vertex, int>;

std::vector<int> colour_vector(const Multigraph& g, const Roots& roots) {
  std::vector<int> c(g.num_vertices(), 0);
  for (const auto& [v, k] : roots) c[g.vertex_index(v)] = k;
  return c;
}

class MinorSearch {
 public:
  MinorSearch(const Multigraph& h, const Roots& h_roots) : h_(h) {
    target_ = canonical_form(h, colour_vector(h, h_roots), std::vector<int>(h.num_edges(), 0));
    h_loops_ = false;
    std::set<std::pair<Vertex, Vertex>> pairs;
    h_parallel_ = false;
    for (const Edge& e : h.edges()) {
      if (e.is_loop()) h_loops_ = true;
      else if (!pairs.emplace(e.u, e.v).second) h_parallel_ = true;
    }
    auto degs = h.degrees();
    min_free_degree_ = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < h.num_vertices(); ++i)
      if (!h_roots.count(h.vertices()[i])) min_free_degree_ = std::min(min_free_degree_, degs[i]);
    h_connected_ = is_connected(h);
  }

  bool run(Multigraph g, Roots roots, std::vector<MinorStep>& path) { return rec(std::move(g), std::move(roots), path); }

 private:
  void step(Multigraph& g, Roots& roots, std::vector<MinorStep>& path, MinorStep s) {
    switch (s.op) {
      case MinorStep::DeleteEdge: g = delete_edge(g, s.name); break;
      case MinorStep::ContractEdge: {
        const Edge& e = g.edge(s.name);
        Vertex keep = e.u, gone = e.v;
        g = contract_edge(g, s.name);
        auto it = roots.find(gone);
        if (it != roots.end() && gone != keep) {
          roots[keep] = it->second;
          roots.erase(gone);
        }
        break;
      }
      case MinorStep::DeleteVertex: g = delete_vertices(g, VertexSet{s.name}); break;
    }
    path.push_back(std::move(s));
  }

  // Reductions that cannot destroy a model of h.
  void reduce(Multigraph& g, Roots& roots, std::vector<MinorStep>& path) {
    for (bool changed = true; changed;) {
      changed = false;
      std::set<std::pair<Vertex, Vertex>> pairs;
      for (const Edge& e : g.edges()) {
        bool drop = (e.is_loop() && !h_loops_) || (!e.is_loop() && !h_parallel_ && !pairs.emplace(e.u, e.v).second);
        if (drop) {
          step(g, roots, path, {MinorStep::DeleteEdge, e.label});
          changed = true;
          break;
        }
      }
      if (changed) continue;
      auto degs = g.degrees();
      for (std::size_t i = 0; i < g.num_vertices() && !changed; ++i) {
        const Vertex& v = g.vertices()[i];
        if (roots.count(v)) continue;
        if (degs[i] == 0 && min_free_degree_ >= 1) {
          step(g, roots, path, {MinorStep::DeleteVertex, v});
          changed = true;
        } else if (degs[i] == 1 && min_free_degree_ >= 2) {
          step(g, roots, path, {MinorStep::DeleteVertex, v});
          changed = true;
        } else if (degs[i] == 2 && min_free_degree_ >= 3 && !h_parallel_ && !h_loops_) {
          for (const Edge& e : g.edges())
            if ((e.u == v || e.v == v) && !e.is_loop()) {
              step(g, roots, path, {MinorStep::ContractEdge, e.label});
              changed = true;
              break;
            }
        }
      }
    }
  }

  bool rec(Multigraph g, Roots roots, std::vector<MinorStep>& path) {
    std::size_t mark = path.size();
    reduce(g, roots, path);
    auto fail = [&] {
      path.resize(mark);
      return false;
    };
    if (g.num_vertices() < h_.num_vertices() || g.num_edges() < h_.num_edges()) return fail();
    if (h_connected_ && !is_connected(g)) {
      for (const VertexSet& comp : connected_components(g)) {
        if (comp.size() < h_.num_vertices()) continue;
        bool all_roots = true;
        for (const auto& [v, k] : roots) all_roots = all_roots && comp.count(v);
        if (!all_roots) continue;
        std::size_t inner = path.size();
        Multigraph sub = g;
        Roots r = roots;
        for (const Vertex& v : g.vertices())
          if (!comp.count(v)) step(sub, r, path, {MinorStep::DeleteVertex, v});
        if (rec(std::move(sub), std::move(r), path)) return true;
        path.resize(inner);
      }
      return fail();
    }
    std::string key = canonical_form(g, colour_vector(g, roots), std::vector<int>(g.num_edges(), 0));
    if (failed_.count(key)) return fail();
    if (g.num_vertices() == h_.num_vertices() && g.num_edges() == h_.num_edges()) {
      if (key == target_) return true;
      failed_.insert(key);
      return fail();
    }
    bool can_delete = g.num_edges() > h_.num_edges();
    bool can_contract = g.num_vertices() > h_.num_vertices();
    for (const Edge& e : g.edges()) {
      if (can_contract && !e.is_loop() && !(roots.count(e.u) && roots.count(e.v))) {
        std::size_t inner = path.size();
        Multigraph c = g;
        Roots r = roots;
        step(c, r, path, {MinorStep::ContractEdge, e.label});
        if (rec(std::move(c), std::move(r), path)) return true;
        path.resize(inner);
      }
      if (can_delete) {
        std::size_t inner = path.size();
        Multigraph d = g;
        Roots r = roots;
        step(d, r, path, {MinorStep::DeleteEdge, e.label});
        if (rec(std::move(d), std::move(r), path)) return true;
        path.resize(inner);
      }
    }
    failed_.insert(key);
    return fail();
  }

  const Multigraph& h_;
  std::string target_;
  bool h_loops_ = false, h_parallel_ = false, h_connected_ = true;
  int min_free_degree_ = 0;
  std::unordered_set<std::string> failed_;
};

}  // namespace

bool has_rooted_minor(const Multigraph& g, const Roots& g_roots, const Multigraph& h, const Roots& h_roots,
                      std::vector<MinorStep>* certificate) {
  std::map<int, int> gc, hc;
  for (const auto& [v, k] : g_roots) {
    if (!g.has_vertex(v)) throw Error("no such vertex '" + v + "'");
    if (k != 0) ++gc[k];
  }
  for (const auto& [v, k] : h_roots) {
    if (!h.has_vertex(v)) throw Error("no such vertex '" + v + "'");
    if (k != 0) ++hc[k];
  }
  if (gc != hc) return false;
  Roots gr, hr;
  for (const auto& [v, k] : g_roots)
    if (k) gr[v] = k;
  for (const auto& [v, k] : h_roots)
    if (k) hr[v] = k;
  MinorSearch search(h, hr);
  std::vector<MinorStep> path;
  bool ok = search.run(g, gr, path);
  if (ok && certificate) *certificate = std::move(path);
  return ok;
}

bool has_minor(const Multigraph& g, const Multigraph& h, std::vector<MinorStep>* certificate) {
  return has_rooted_minor(g, {}, h, {}, certificate);
}

std::vector<std::string> forbidden_minor_scan(const Multigraph& g) {
  std::vector<std::string> out;
  for (const char* name : {"K5", "K33", "O", "H", "C"})
    if (has_minor(g, builtin(name))) out.push_back(name);
  return out;
}

}  // namespace splitgraph

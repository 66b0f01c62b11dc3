#include <algorithm>
#include <functional>
#include <set>

#include "splitgraph/splitting.hpp"
#include "splitgraph/structure.hpp"

namespace splitgraph {

namespace {

void check_cut(const Multigraph& g, const VertexSet& cut) {
  if (cut.size() != 3) throw Error("invalid cut: need three distinct vertices, got " + std::to_string(cut.size()));
  for (const Vertex& v : cut)
    if (!g.has_vertex(v)) throw Error("invalid cut: no such vertex '" + v + "'");
}

std::vector<VertexSet> components_without(const Multigraph& g, const VertexSet& removed) {
  VertexSet keep;
  for (const Vertex& v : g.vertices())
    if (!removed.count(v)) keep.insert(v);
  return connected_components(induced_subgraph(g, keep));
}

}  // namespace

bool has_well_connected_s2(const Multigraph& g, const VertexSet& cut) {
  check_cut(g, cut);
  Multigraph s2 = s2_graph();
  std::map<Vertex, int> s2_roots{{"v1", 1}, {"v2", 2}, {"v3", 3}};
  std::vector<Vertex> c(cut.begin(), cut.end());
  for (const VertexSet& comp : components_without(g, cut)) {
    VertexSet vs = comp;
    vs.insert(cut.begin(), cut.end());
    Multigraph side = induced_subgraph(g, vs);
    std::vector<int> perm{1, 2, 3};
    do {
      std::map<Vertex, int> roots{{c[0], perm[0]}, {c[1], perm[1]}, {c[2], perm[2]}};
      if (has_rooted_minor(side, roots, s2, s2_roots)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

PrimitiveDivergence primitive_divergent(const Multigraph& g) {
  PrimitiveDivergence out;
  long e = static_cast<long>(g.num_edges());
  long h = loop_number(g);
  if (e != 2 * h) {
    out.reason = "|E| = " + std::to_string(e) + " but 2h = " + std::to_string(2 * h);
    return out;
  }
  int n = static_cast<int>(g.num_vertices());
  if (n > 24) throw ScaleError("primitive divergence check limited to 24 vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s + 1 < (std::uint32_t{1} << n); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (std::uint32_t s : subsets) {
    VertexSet vs;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) vs.insert(g.vertices()[i]);
    Multigraph sub = induced_subgraph(g, vs);
    if (sub.num_edges() == 0 || !is_connected(sub)) continue;
    long se = static_cast<long>(sub.num_edges()), sv = static_cast<long>(sub.num_vertices());
    if (se < 2 * sv - 2) continue;
    out.reason = "subgraph with " + std::to_string(se) + " edges on " + std::to_string(sv) +
                 " vertices violates |E| < 2|V| - 2";
    out.violation = sub;
    return out;
  }
  out.divergent = true;
  return out;
}

bool verify_three_cut_ordering(const Multigraph& g, const std::vector<Label>& order) {
  if (order.size() != g.num_edges()) return false;
  if (EdgeSet(order.begin(), order.end()) != g.label_set()) return false;
  int n = static_cast<int>(order.size());
  for (int i = 3; i <= n - 3; ++i) {
    VertexSet a, b;
    for (int k = 0; k < n; ++k) {
      const Edge& e = g.edge(order[k]);
      auto& s = k < i ? a : b;
      s.insert(e.u);
      s.insert(e.v);
    }
    int common = 0;
    for (const Vertex& v : a) common += b.count(v);
    if (common != 3) return false;
  }
  return true;
}

namespace {

// Edge lists from the cut inward: cut-to-cut edges, then the single edge
// from a cut vertex with one inside neighbour, then recurse on the smaller cut.
class Peeler {
 public:
  explicit Peeler(const Multigraph& g) : g_(g) {}

  std::optional<std::vector<Label>> peel(const VertexSet& cut, const VertexSet& inside, std::set<Label> listed) {
    std::vector<Label> seq;
    for (const Edge& e : g_.edges())
      if (cut.count(e.u) && cut.count(e.v) && !listed.count(e.label)) {
        seq.push_back(e.label);
        listed.insert(e.label);
      }
    if (inside.empty()) return seq;
    if (inside.size() == 1) {
      const Vertex& x = *inside.begin();
      for (const Edge& e : g_.edges())
        if ((e.u == x || e.v == x) && !listed.count(e.label)) seq.push_back(e.label);
      return seq;
    }
    if (++budget_ > 20000) return std::nullopt;
    for (const Vertex& c : cut) {
      std::vector<const Edge*> in_edges;
      VertexSet nb;
      for (const Edge& e : g_.edges()) {
        if (listed.count(e.label)) continue;
        if (e.u == c && inside.count(e.v)) nb.insert(e.v), in_edges.push_back(&e);
        else if (e.v == c && inside.count(e.u)) nb.insert(e.u), in_edges.push_back(&e);
      }
      if (nb.size() != 1 || in_edges.size() != 1) continue;
      const Vertex& u = *nb.begin();
      VertexSet next_cut = cut;
      next_cut.erase(c);
      next_cut.insert(u);
      VertexSet next_inside = inside;
      next_inside.erase(u);
      std::set<Label> l2 = listed;
      l2.insert(in_edges[0]->label);
      auto rest = peel(next_cut, next_inside, l2);
      if (!rest) continue;
      std::vector<Label> out = seq;
      out.push_back(in_edges[0]->label);
      out.insert(out.end(), rest->begin(), rest->end());
      return out;
    }
    return std::nullopt;
  }

 private:
  const Multigraph& g_;
  long budget_ = 0;
};

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (const Vertex& v : s) out += (out.size() > 1 ? "," : "") + v;
  return out + "}";
}

}  // namespace

EdgeOrdering three_cut_edge_ordering(const Multigraph& g) {
  if (!g.is_simple()) throw Error("precondition: graph must be simple");
  if (g.num_vertices() < 4 || !is_k_connected(g, 3)) throw Error("precondition: graph must be 3-connected");
  if (!graph_splits(g)) throw Error("precondition: graph must split");
  EdgeOrdering out;
  const auto& vs = g.vertices();
  std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        VertexSet cut{vs[a], vs[b], vs[c]};
        auto comps = components_without(g, cut);
        if (comps.size() > 2) {
          out.diagnostics.push_back("cut " + set_text(cut) + ": more than two components");
          continue;
        }
        VertexSet side1 = comps.empty() ? VertexSet{} : comps[0];
        VertexSet side2 = comps.size() > 1 ? comps[1] : VertexSet{};
        Peeler p(g);
        auto s1 = p.peel(cut, side1, {});
        auto s2 = s1 ? p.peel(cut, side2, {}) : std::nullopt;
        if (!s1 || !s2) {
          out.diagnostics.push_back("cut " + set_text(cut) + ": no single-neighbour peeling");
          continue;
        }
        std::vector<Label> order(s1->rbegin(), s1->rend());
        std::set<Label> have(order.begin(), order.end());
        for (const Label& l : *s2)
          if (have.insert(l).second) order.push_back(l);
        if (!verify_three_cut_ordering(g, order)) {
          out.diagnostics.push_back("cut " + set_text(cut) + ": peeled order fails the three-vertex boundary check");
          continue;
        }
        out.order = order;
        out.diagnostics.clear();
        return out;
      }
  return out;
}

}  // namespace splitgraph

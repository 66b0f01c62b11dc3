#include "splitgraph/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <map>
#include <thread>

#include "splitgraph/errors.hpp"
#include "union_find.hpp"

namespace splitgraph {

using detail::UnionFind;
using Mask = std::uint64_t;

namespace {

constexpr int kMaxEdges = 64;

inline Mask bit(int i) { return Mask{1} << i; }

template <class F>
void for_bits(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

using Ends = std::vector<std::pair<int, int>>;

bool is_forest(int n, const Ends& ends, Mask es) {
  UnionFind uf(n);
  bool ok = true;
  for_bits(es, [&](int e) {
    if (ok && !uf.unite(ends[e].first, ends[e].second)) ok = false;
  });
  return ok;
}

// Rooted forest on a mask of edges, answering fundamental-cycle queries.
struct RootedForest {
  std::vector<int> root, parent, parent_edge, depth;

  RootedForest(int n, const Ends& ends, Mask es) : root(n, -1), parent(n, -1), parent_edge(n, -1), depth(n, 0) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for_bits(es, [&](int e) {
      adj[ends[e].first].emplace_back(ends[e].second, e);
      adj[ends[e].second].emplace_back(ends[e].first, e);
    });
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
      if (root[s] != -1) continue;
      root[s] = s;
      stack.push_back(s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[u]) {
          if (root[w] != -1) continue;
          root[w] = s;
          parent[w] = u;
          parent_edge[w] = e;
          depth[w] = depth[u] + 1;
          stack.push_back(w);
        }
      }
    }
  }

  // Edges on the tree path u..v, or nullopt when u, v lie in different trees.
  std::optional<Mask> path(int u, int v) const {
    if (root[u] != root[v]) return std::nullopt;
    Mask m = 0;
    while (depth[u] > depth[v]) {
      m |= bit(parent_edge[u]);
      u = parent[u];
    }
    while (depth[v] > depth[u]) {
      m |= bit(parent_edge[v]);
      v = parent[v];
    }
    while (u != v) {
      m |= bit(parent_edge[u]) | bit(parent_edge[v]);
      u = parent[u];
      v = parent[v];
    }
    return m;
  }
};

// Is there X within `ground` of size r with X+a1 and X+a2 both forests?
bool common_independent_of_size(int n, const Ends& ends, Mask ground, Mask a1, Mask a2, int r) {
  if (r == 0) return true;
  Mask x = 0;
  int size = 0;
  {
    UnionFind u1(n), u2(n);
    for_bits(a1, [&](int e) { u1.unite(ends[e].first, ends[e].second); });
    for_bits(a2, [&](int e) { u2.unite(ends[e].first, ends[e].second); });
    for_bits(ground, [&](int e) {
      auto [a, b] = ends[e];
      if (u1.find(a) != u1.find(b) && u2.find(a) != u2.find(b)) {
        u1.unite(a, b);
        u2.unite(a, b);
        x |= bit(e);
        ++size;
      }
    });
  }
  while (size < r) {
    RootedForest f1(n, ends, a1 | x), f2(n, ends, a2 | x);
    std::vector<int> out;
    for_bits(ground & ~x, [&](int y) { out.push_back(y); });
    std::vector<Mask> cyc1(kMaxEdges, 0), cyc2(kMaxEdges, 0);
    std::vector<char> source(kMaxEdges, 0), sink(kMaxEdges, 0);
    for (int y : out) {
      auto [a, b] = ends[y];
      if (auto p = f1.path(a, b)) cyc1[y] = *p & x;
      else source[y] = 1;
      if (auto p = f2.path(a, b)) cyc2[y] = *p & x;
      else sink[y] = 1;
    }
    // Arcs: x -> y when x is on y's M1 cycle; y -> x when x is on y's M2 cycle.
    std::vector<int> prev(kMaxEdges, -2);
    std::deque<int> queue;
    for (int y : out)
      if (source[y]) {
        prev[y] = -1;
        queue.push_back(y);
      }
    int end = -1;
    while (!queue.empty() && end < 0) {
      int v = queue.front();
      queue.pop_front();
      if (x & bit(v)) {
        for (int y : out)
          if (prev[y] == -2 && (cyc1[y] & bit(v))) {
            prev[y] = v;
            queue.push_back(y);
          }
      } else {
        if (sink[v]) {
          end = v;
          break;
        }
        for_bits(cyc2[v], [&](int w) {
          if (prev[w] == -2) {
            prev[w] = v;
            queue.push_back(w);
          }
        });
      }
    }
    if (end < 0) return false;
    for (int v = end; v >= 0; v = prev[v]) x ^= bit(v);
    ++size;
  }
  return true;
}

// Edge masks of the full components of every disconnecting 2-vertex cut.
// Vertices with alive[v] == 0 are ignored; edge `skip` is treated as absent.
std::vector<Mask> two_cut_parts(int n, const Ends& ends, const std::vector<char>& alive, int skip) {
  std::vector<Mask> parts;
  int m = static_cast<int>(ends.size());
  for (int a = 0; a < n; ++a) {
    if (!alive[a]) continue;
    for (int b = a + 1; b < n; ++b) {
      if (!alive[b]) continue;
      UnionFind uf(n);
      for (int e = 0; e < m; ++e) {
        if (e == skip) continue;
        auto [u, v] = ends[e];
        if (u == a || u == b || v == a || v == b) continue;
        uf.unite(u, v);
      }
      std::map<int, int> comp;
      for (int v = 0; v < n; ++v)
        if (alive[v] && v != a && v != b) comp.emplace(uf.find(v), static_cast<int>(comp.size()));
      if (comp.size() < 2) continue;
      std::vector<Mask> local(comp.size(), 0);
      Mask shared = 0;
      for (int e = 0; e < m; ++e) {
        if (e == skip) continue;
        auto [u, v] = ends[e];
        int w = (u != a && u != b) ? u : (v != a && v != b) ? v : -1;
        if (w < 0) shared |= bit(e);
        else local[comp.at(uf.find(w))] |= bit(e);
      }
      for (Mask p : local) parts.push_back(p | shared);
    }
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return parts;
}

std::vector<int> bits_of(Mask m) {
  std::vector<int> v;
  for_bits(m, [&](int i) { v.push_back(i); });
  return v;
}

}  // namespace

std::string shortcut_name(Shortcut s) {
  switch (s) {
    case Shortcut::SmallEdgeCut: return "small-edge-cut-in-S";
    case Shortcut::SmallCycle: return "small-cycle-in-S";
    case Shortcut::TwoCutDistribution: return "two-cut-distribution";
    case Shortcut::ThreeCutDistribution: return "three-cut-distribution";
    case Shortcut::None: break;
  }
  return "none";
}

SplitContext::SplitContext(const Multigraph& g) : g_(g) {
  n_ = static_cast<int>(g.num_vertices());
  m_ = static_cast<int>(g.num_edges());
  if (m_ > kMaxEdges) throw ScaleError("splitting sweeps support at most 64 edges, got " + std::to_string(m_));
  for (int e = 0; e < m_; ++e) ends_.push_back(g.ends(e));
  base_components_ = static_cast<int>(num_components(g));
  std::vector<char> alive(n_, 1);
  two_cut_parts_ = two_cut_parts(n_, ends_, alive, -1);
  del_parts_.resize(m_);
  con_parts_.resize(m_);
  for (int e = 0; e < m_; ++e) {
    del_parts_[e] = two_cut_parts(n_, ends_, alive, e);
    auto [a, b] = ends_[e];
    if (a == b) {
      con_parts_[e] = del_parts_[e];
      continue;
    }
    Ends merged = ends_;
    for (auto& [u, v] : merged) {
      if (u == b) u = a;
      if (v == b) v = a;
      if (u > v) std::swap(u, v);
    }
    std::vector<char> alive2 = alive;
    alive2[b] = 0;
    con_parts_[e] = two_cut_parts(n_, merged, alive2, e);
  }
}

Mask SplitContext::mask_of(const EdgeSet& s) const {
  Mask m = 0;
  for (const auto& l : s) m |= bit(static_cast<int>(g_.edge_index(l)));
  return m;
}

EdgeSet SplitContext::set_of(Mask m) const {
  EdgeSet s;
  for_bits(m, [&](int i) { s.insert(g_.edges()[i].label); });
  return s;
}

bool SplitContext::dodgson_is_zero(Mask i, Mask j, Mask k) const {
  if (base_components_ != 1) return true;
  Mask all = m_ == 64 ? ~Mask{0} : bit(m_) - 1;
  Mask a1 = (j | k) & ~i;
  Mask a2 = (i | k) & ~j;
  Mask ground = all & ~(i | j | k);
  int r1 = n_ - 1 - std::popcount(a1);
  int r2 = n_ - 1 - std::popcount(a2);
  if (r1 != r2 || r1 < 0) return true;
  if (!is_forest(n_, ends_, a1) || !is_forest(n_, ends_, a2)) return true;
  return !common_independent_of_size(n_, ends_, ground, a1, a2, r1);
}

bool SplitContext::dodgson_is_zero(const DodgsonSpec& spec) const {
  validate_spec(g_, spec);
  return dodgson_is_zero(mask_of(spec.I), mask_of(spec.J), mask_of(spec.K));
}

bool SplitContext::is_edge_cut(Mask c) const {
  UnionFind uf(n_);
  int comps = n_;
  for (int e = 0; e < m_; ++e)
    if (!(c & bit(e)) && uf.unite(ends_[e].first, ends_[e].second)) --comps;
  return comps > base_components_;
}

bool SplitContext::is_cycle(Mask c) const {
  std::map<int, int> deg;
  UnionFind uf(n_);
  int first = -1;
  for_bits(c, [&](int e) {
    auto [a, b] = ends_[e];
    deg[a] += 1;
    deg[b] += 1;
    uf.unite(a, b);
    first = a;
  });
  if (first < 0) return false;
  for (auto [v, d] : deg)
    if (d != 2 || uf.find(v) != uf.find(first)) return false;
  return true;
}

namespace {

// Rewrite a witness in the form produced by enumerate_dodgson_specs.
DodgsonSpec to_enumerated(const EdgeSet& s, DodgsonSpec d) {
  for (const auto& e : enumerate_dodgson_specs(s)) {
    if (e == d) return e;
    if (e.I == d.J && e.J == d.I && e.K == d.K) return e;
  }
  throw Error("internal: witness " + d.to_string() + " is not a configuration Dodgson");
}

}  // namespace

Shortcut SplitContext::shortcut(Mask s, DodgsonSpec* witness) const {
  EdgeSet sset = set_of(s);
  std::vector<int> se = bits_of(s);
  auto lab = [&](int e) { return g_.edges()[e].label; };
  auto put = [&](DodgsonSpec d) {
    if (witness) *witness = to_enumerated(sset, std::move(d));
  };
  // subsets of size 1..3 in size-then-lexicographic order
  std::vector<Mask> small;
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> pick(5, 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
      Mask c = 0;
      for (int t = 0; t < 5; ++t)
        if (pick[t]) c |= bit(se[t]);
      small.push_back(c);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  auto fill3 = [&](Mask c) {
    for (int e : se)
      if (std::popcount(c) < 3) c |= bit(e);
    return c;
  };
  for (Mask c : small) {
    if (!is_edge_cut(c)) continue;
    Mask in = fill3(c);
    int x = std::countr_zero(c);
    put({set_of(in), set_of((s & ~in) | bit(x)), {}});
    return Shortcut::SmallEdgeCut;
  }
  for (Mask c : small) {
    if (!is_cycle(c)) continue;
    Mask t = fill3(c);
    int k = std::countr_zero(t);
    put({set_of(s & ~t), set_of(t & ~bit(k)), {lab(k)}});
    return Shortcut::SmallCycle;
  }
  for (Mask p : two_cut_parts_) {
    Mask in = s & p, out = s & ~p;
    if (std::popcount(in) < 2 || std::popcount(out) < 2) continue;
    std::vector<int> vi = bits_of(in), vo = bits_of(out);
    int e3 = vi.size() == 3 ? vi[2] : vo[2];
    put({set_of(bit(vi[0]) | bit(vi[1]) | bit(e3)), set_of(bit(vo[0]) | bit(vo[1]) | bit(e3)), {}});
    return Shortcut::TwoCutDistribution;
  }
  for (int e1 : se) {
    Mask rest = s & ~bit(e1);
    for (int op = 0; op < 2; ++op) {
      const auto& parts = op == 0 ? del_parts_[e1] : con_parts_[e1];
      for (Mask p : parts) {
        Mask in = rest & p, out = rest & ~p;
        if (std::popcount(in) != 2 || std::popcount(out) != 2) continue;
        if (op == 0) put({set_of(in | bit(e1)), set_of(out | bit(e1)), {}});
        else put({set_of(in), set_of(out), {lab(e1)}});
        return Shortcut::ThreeCutDistribution;
      }
    }
  }
  return Shortcut::None;
}

std::optional<DodgsonSpec> SplitContext::first_zero(Mask s) const {
  for (const auto& d : enumerate_dodgson_specs(set_of(s)))
    if (dodgson_is_zero(mask_of(d.I), mask_of(d.J), mask_of(d.K))) return d;
  return std::nullopt;
}

SplitReport SplitContext::config_splits(Mask s, const SplitOptions& opt) const {
  if (std::popcount(s) != 5) throw Error("a 5-configuration needs exactly five edges");
  SplitReport r;
  r.configuration = set_of(s);
  if (opt.use_shortcuts) {
    DodgsonSpec w;
    Shortcut tag = shortcut(s, &w);
    if (tag != Shortcut::None) {
      if (dodgson_is_zero(mask_of(w.I), mask_of(w.J), mask_of(w.K))) {
        if (opt.check && !first_zero(s)) throw Error("internal: shortcut verdict contradicted by full scan");
        r.splits = true;
        r.witness = w;
        r.shortcut = tag;
        return r;
      }
      ++misses_;
    }
  }
  r.witness = first_zero(s);
  r.splits = r.witness.has_value();
  return r;
}

bool dodgson_is_zero(const Multigraph& g, const DodgsonSpec& spec) {
  validate_spec(g, spec);
  return SplitContext(g).dodgson_is_zero(spec);
}

std::optional<std::pair<Shortcut, DodgsonSpec>> shortcut_predicates(const Multigraph& g, const EdgeSet& s) {
  if (s.size() != 5) throw Error("a 5-configuration needs exactly five edges, got " + std::to_string(s.size()));
  SplitContext ctx(g);
  DodgsonSpec w;
  Shortcut tag = ctx.shortcut(ctx.mask_of(s), &w);
  if (tag == Shortcut::None) return std::nullopt;
  return std::make_pair(tag, w);
}

namespace {

void check_configuration(const Multigraph& g, const EdgeSet& s) {
  if (s.size() != 5) throw Error("a 5-configuration needs exactly five edges, got " + std::to_string(s.size()));
  for (const auto& l : s)
    if (!g.has_edge(l)) throw Error("no such edge '" + l + "'");
}

std::vector<Mask> all_masks(int m) {
  std::vector<Mask> out;
  if (m < 5) return out;
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + 5, 1);
  do {
    Mask s = 0;
    for (int i = 0; i < m; ++i)
      if (pick[i]) s |= bit(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

unsigned worker_count(unsigned jobs) {
  if (jobs) return jobs;
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

// Runs body(i) for i in [0, count) on a pool; body returns false to stop everyone.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto work = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (!body(i)) stop = true;
    }
  };
  unsigned n = std::min<std::size_t>(worker_count(jobs), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace

SplitReport config_splits(const Multigraph& g, const EdgeSet& s, const SplitOptions& opt) {
  check_configuration(g, s);
  SplitContext ctx(g);
  return ctx.config_splits(ctx.mask_of(s), opt);
}

std::vector<EdgeSet> all_configurations(const Multigraph& g) {
  if (g.num_edges() > kMaxEdges) throw ScaleError("splitting sweeps support at most 64 edges");
  std::vector<EdgeSet> out;
  for (Mask s : all_masks(static_cast<int>(g.num_edges()))) {
    EdgeSet e;
    for_bits(s, [&](int i) { e.insert(g.edges()[i].label); });
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SplitReport> sweep_configurations(const Multigraph& g, const SplitOptions& opt) {
  SplitContext ctx(g);
  std::vector<Mask> masks = all_masks(static_cast<int>(g.num_edges()));
  std::vector<SplitReport> out(masks.size());
  parallel_for(masks.size(), opt.jobs, [&](std::size_t i) {
    out[i] = ctx.config_splits(masks[i], opt);
    return true;
  });
  return out;
}

bool graph_splits(const Multigraph& g, const SplitOptions& opt) {
  if (g.num_edges() < 5) return true;
  SplitContext ctx(g);
  std::vector<Mask> masks = all_masks(static_cast<int>(g.num_edges()));
  std::atomic<bool> splits{true};
  parallel_for(masks.size(), opt.jobs, [&](std::size_t i) {
    if (!ctx.config_splits(masks[i], opt).splits) {
      splits = false;
      return false;
    }
    return true;
  });
  return splits;
}

std::vector<EdgeSet> nonsplitting_configs(const Multigraph& g, const SplitOptions& opt) {
  std::vector<EdgeSet> out;
  for (auto& r : sweep_configurations(g, opt))
    if (!r.splits) out.push_back(std::move(r.configuration));
  return out;
}

MinimalityReport is_minor_minimal_nonsplitting(const Multigraph& g, const SplitOptions& opt) {
  MinimalityReport rep;
  rep.nonsplitting = nonsplitting_configs(g, opt);
  if (rep.nonsplitting.empty()) throw Error("graph splits; minimality undefined");
  for (const auto& e : g.edges()) {
    EdgeMinorResult res;
    res.edge = e.label;
    res.deletion_splits = graph_splits(delete_edge(g, e.label), opt);
    res.contraction_splits = graph_splits(contract_edge(g, e.label), opt);
    if (!rep.reducible_via) {
      if (!res.deletion_splits) rep.reducible_via = std::make_pair(e.label, std::string("delete"));
      else if (!res.contraction_splits) rep.reducible_via = std::make_pair(e.label, std::string("contract"));
    }
    rep.per_edge.push_back(std::move(res));
  }
  rep.minimal = !rep.reducible_via.has_value();
  return rep;
}

std::vector<std::vector<EdgeSet>> configuration_orbits(const Multigraph& g, const std::vector<EdgeSet>& configs) {
  std::map<std::string, std::vector<EdgeSet>> by_form;
  std::vector<std::string> order;
  std::vector<int> vcolor(g.num_vertices(), 0);
  for (const auto& s : configs) {
    std::vector<int> ecolor(g.num_edges(), 0);
    for (const auto& l : s) ecolor[g.edge_index(l)] = 1;
    std::string f = canonical_form(g, vcolor, ecolor);
    auto [it, fresh] = by_form.try_emplace(f);
    if (fresh) order.push_back(f);
    it->second.push_back(s);
  }
  std::vector<std::vector<EdgeSet>> out;
  for (const auto& f : order) out.push_back(std::move(by_form[f]));
  return out;
}

}  // namespace splitgraph

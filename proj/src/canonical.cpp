#include <algorithm>
#include <map>
#include <sstream>

#include "splitgraph/multigraph.hpp"

namespace splitgraph {

namespace {

// Individualisation-refinement over an integer "edge type" matrix. Each type
// stands for a sorted multiset of edge colours between two vertices, so
// parallel edges and loops are part of the structure being labelled.
class Canonizer {
 public:
  Canonizer(int n, std::vector<int> vcolor, std::vector<int> types, std::vector<int> header)
      : n_(n), vcolor_(std::move(vcolor)), t_(std::move(types)), header_(std::move(header)) {}

  std::vector<int> run() {
    std::vector<int> cells = initial_cells();
    refine(cells);
    search(cells);
    return best_;
  }

 private:
  int type(int a, int b) const { return t_[a * n_ + b]; }

  std::vector<int> initial_cells() const {
    std::vector<int> sorted = vcolor_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> cells(n_);
    for (int v = 0; v < n_; ++v)
      cells[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vcolor_[v]) - sorted.begin());
    return cells;
  }

  // Cell ids are dense ranks; refinement splits cells by neighbourhood
  // signatures and renumbers by sorted signature, which keeps it canonical.
  static int count_cells(const std::vector<int>& cells) {
    return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  }

  void refine(std::vector<int>& cells) const {
    int k = count_cells(cells);
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> nb;
        for (int w = 0; w < n_; ++w)
          if (type(v, w) != 0) nb.emplace_back(cells[w] * 2 + (w == v ? 1 : 0), type(v, w));
        std::sort(nb.begin(), nb.end());
        sig[v].push_back(cells[v]);
        for (auto [c, t] : nb) {
          sig[v].push_back(c);
          sig[v].push_back(t);
        }
      }
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_);
      int id = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++id;
        next[order[i]] = id;
      }
      int nk = id + 1;
      cells = std::move(next);
      if (nk == k) return;
      k = nk;
    }
  }

  std::vector<int> certificate(const std::vector<int>& cells) const {
    std::vector<int> pos_to_v(n_);
    for (int v = 0; v < n_; ++v) pos_to_v[cells[v]] = v;
    std::vector<int> cert = header_;
    cert.push_back(n_);
    for (int p = 0; p < n_; ++p) cert.push_back(vcolor_[pos_to_v[p]]);
    for (int p = 0; p < n_; ++p)
      for (int q = p; q < n_; ++q) cert.push_back(type(pos_to_v[p], pos_to_v[q]));
    return cert;
  }

  bool twins(int a, int b) const {
    if (vcolor_[a] != vcolor_[b] || type(a, a) != type(b, b) || type(a, b) != type(b, a)) return false;
    for (int w = 0; w < n_; ++w) {
      if (w == a || w == b) continue;
      if (type(a, w) != type(b, w)) return false;
    }
    return true;
  }

  void search(const std::vector<int>& cells) {
    int k = count_cells(cells);
    if (k == n_) {
      std::vector<int> cert = certificate(cells);
      if (best_.empty() || cert < best_) best_ = std::move(cert);
      return;
    }
    // first non-singleton cell
    std::vector<int> size(k, 0);
    for (int v = 0; v < n_; ++v) ++size[cells[v]];
    int target = 0;
    while (size[target] < 2) ++target;
    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (cells[v] == target) members.push_back(v);
    std::vector<int> tried;
    for (int v : members) {
      bool skip = false;
      for (int u : tried)
        if (twins(u, v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int w = 0; w < n_; ++w) next[w] = cells[w] > target ? cells[w] + 1 : cells[w];
      for (int w = 0; w < n_; ++w)
        if (cells[w] == target && w != v) next[w] = target + 1;
      refine(next);
      search(next);
    }
  }

  int n_;
  std::vector<int> vcolor_;
  std::vector<int> t_;
  std::vector<int> header_;
  std::vector<int> best_;
};

std::string encode(const std::vector<int>& cert) {
  std::string out;
  out.reserve(cert.size() * 2);
  for (int x : cert) {
    out += std::to_string(x);
    out += ',';
  }
  return out;
}

}  // namespace

std::string canonical_form(const Multigraph& g, const std::vector<int>& vertex_colors,
                           const std::vector<int>& edge_colors) {
  int n = static_cast<int>(g.num_vertices());
  if (static_cast<int>(vertex_colors.size()) != n) throw Error("vertex colour count mismatch");
  if (edge_colors.size() != g.num_edges()) throw Error("edge colour count mismatch");
  std::vector<std::vector<int>> multi(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [a, b] = g.ends(i);
    multi[a * n + b].push_back(edge_colors[i]);
    if (a != b) multi[b * n + a].push_back(edge_colors[i]);
  }
  std::set<std::vector<int>> kinds;
  for (auto& m : multi) {
    std::sort(m.begin(), m.end());
    if (!m.empty()) kinds.insert(m);
  }
  std::map<std::vector<int>, int> kind_id;
  std::vector<int> header;
  header.push_back(static_cast<int>(kinds.size()));
  for (const auto& m : kinds) {
    kind_id.emplace(m, static_cast<int>(kind_id.size()) + 1);
    header.push_back(static_cast<int>(m.size()));
    header.insert(header.end(), m.begin(), m.end());
  }
  std::vector<int> types(multi.size(), 0);
  for (std::size_t i = 0; i < multi.size(); ++i)
    if (!multi[i].empty()) types[i] = kind_id.at(multi[i]);
  Canonizer c(n, vertex_colors, std::move(types), std::move(header));
  return encode(c.run());
}

std::string canonical_form(const Multigraph& g) {
  return canonical_form(g, std::vector<int>(g.num_vertices(), 0), std::vector<int>(g.num_edges(), 0));
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace splitgraph

#include "splitgraph/kirchhoff.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace splitgraph {

namespace {

std::string join(const EdgeSet& s) {
  std::string out;
  for (const Label& e : s) {
    if (!out.empty()) out += ',';
    out += e;
  }
  return out;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  for (const Label& e : a)
    if (!b.count(e)) r.insert(e);
  return r;
}

}  // namespace

IncidenceFixture::IncidenceFixture(const Multigraph& g)
    : graph(g), vertex_order(g.vertices()), edge_order(g.labels()) {
  std::size_t cols = g.num_vertices() > 0 ? g.num_vertices() - 1 : 0;
  if (g.num_vertices() > 0) deleted_vertex = g.vertices().back();
  reduced_incidence.assign(g.num_edges(), std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [a, b] = g.ends(i);
    if (a == b) continue;
    if (static_cast<std::size_t>(a) < cols) reduced_incidence[i][a] = 1;
    if (static_cast<std::size_t>(b) < cols) reduced_incidence[i][b] = -1;
  }
}

std::string IncidenceFixture::describe() const {
  std::ostringstream os;
  os << "vertex-order:";
  for (const Vertex& v : vertex_order) os << ' ' << v;
  os << "\ndeleted-vertex: " << deleted_vertex << "\nedge-order:";
  for (const Label& e : edge_order) os << ' ' << e;
  os << "\norientation:";
  for (const Edge& e : graph.edges()) os << ' ' << e.label << '=' << e.u << "->" << e.v;
  os << '\n';
  return os.str();
}

std::string DodgsonSpec::to_string() const { return "I={" + join(I) + "} J={" + join(J) + "} K={" + join(K) + "}"; }

void validate_spec(const Multigraph& g, const DodgsonSpec& spec) {
  if (spec.I.size() != spec.J.size()) throw Error("Dodgson index sets I and J must have equal size");
  for (const EdgeSet* s : {&spec.I, &spec.J, &spec.K})
    for (const Label& e : *s)
      if (!g.has_edge(e)) throw Error("no such edge '" + e + "'");
}

Polynomial kirchhoff_poly(const Multigraph& g) {
  std::vector<Monomial> monos;
  for_each_spanning_tree(g, [&](const EdgeSet& t) {
    std::vector<Monomial::Factor> f;
    for (const Edge& e : g.edges())
      if (!t.count(e.label)) f.emplace_back(e.label, 1);
    monos.push_back(Monomial::from_factors(std::move(f)));
  });
  Polynomial p;
  for (const Monomial& m : monos) p += Polynomial(m);
  return p;
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Polynomial dodgson_matrix_oracle(const IncidenceFixture& fx, const DodgsonSpec& spec) {
  const Multigraph& g = fx.graph;
  validate_spec(g, spec);
  const std::size_t vc = fx.reduced_incidence.empty() ? (g.num_vertices() > 0 ? g.num_vertices() - 1 : 0)
                                                      : fx.reduced_incidence[0].size();
  std::vector<std::size_t> rows, cols;  // edge indices kept as rows / columns
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (!spec.I.count(g.edges()[i].label)) rows.push_back(i);
    if (!spec.J.count(g.edges()[i].label)) cols.push_back(i);
  }
  const std::size_t dim = rows.size() + vc;
  if (dim > static_cast<std::size_t>(kOracleMaxDimension))
    throw ScaleError("oracle scale only: matrix dimension " + std::to_string(dim) + " exceeds " +
                     std::to_string(kOracleMaxDimension));

  // entry(r, c) as a polynomial
  auto entry = [&](std::size_t r, std::size_t c) -> Polynomial {
    bool er = r < rows.size(), ec = c < cols.size();
    if (er && ec) {
      std::size_t e = rows[r];
      if (e == cols[c] && !spec.K.count(g.edges()[e].label)) return Polynomial::var(g.edges()[e].label);
      return Polynomial();
    }
    if (er && !ec) return Polynomial(static_cast<long>(fx.reduced_incidence[rows[r]][c - cols.size()]));
    if (!er && ec) return Polynomial(static_cast<long>(-fx.reduced_incidence[cols[c]][r - rows.size()]));
    return Polynomial();
  };

  std::map<unsigned, Polynomial> dp;
  dp.emplace(0u, Polynomial(1));
  for (std::size_t r = 0; r < dim; ++r) {
    std::vector<std::pair<std::size_t, Polynomial>> nz;
    for (std::size_t c = 0; c < dim; ++c) {
      Polynomial x = entry(r, c);
      if (!x.is_zero()) nz.emplace_back(c, std::move(x));
    }
    std::map<unsigned, Polynomial> next;
    for (const auto& [mask, val] : dp) {
      for (const auto& [c, x] : nz) {
        if (mask & (1u << c)) continue;
        int above = __builtin_popcount(mask >> (c + 1));
        Polynomial term = val * x;
        if (above % 2) term = -term;
        next[mask | (1u << c)] += term;
      }
    }
    dp.clear();
    for (auto& [mask, val] : next)
      if (!val.is_zero()) dp.emplace(mask, std::move(val));
    if (dp.empty()) return Polynomial();
  }
  auto it = dp.find(dim == 0 ? 0u : ((1u << dim) - 1));
  return it == dp.end() ? Polynomial() : it->second;
}

Polynomial kirchhoff_det_oracle(const Multigraph& g) { return dodgson_matrix_oracle(IncidenceFixture(g), DodgsonSpec{}); }

Polynomial dodgson(const IncidenceFixture& fx, const DodgsonSpec& spec) {
  const Multigraph& g = fx.graph;
  validate_spec(g, spec);
  const EdgeSet a1 = set_minus(set_union(spec.J, spec.K), spec.I);
  const EdgeSet a2 = set_minus(set_union(spec.I, spec.K), spec.J);
  if (g.num_vertices() == 0) return Polynomial();
  const std::size_t rank = g.num_vertices() - 1;
  if (!is_connected(g) || !is_forest(g, a1) || !is_forest(g, a2) || a1.size() > rank) return Polynomial();

  EdgeSet removed = set_union(set_union(spec.I, spec.J), spec.K);
  EdgeSet del;
  for (const Edge& e : g.edges())
    if (removed.count(e.label) && !a1.count(e.label)) del.insert(e.label);
  const Multigraph first = take_minor(g, del, a1);

  // row position of each edge inside the kept row / column lists
  std::unordered_map<Label, int> pos_r, pos_c;
  int pr = 0, pc = 0;
  for (const Edge& e : g.edges()) {
    if (!spec.I.count(e.label)) pos_r[e.label] = pr++;
    if (!spec.J.count(e.label)) pos_c[e.label] = pc++;
  }

  auto det_rows = [&](const EdgeSet& u, const EdgeSet& extra) {
    std::vector<std::vector<long long>> m;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Label& l = g.edges()[i].label;
      if (u.count(l) || extra.count(l))
        m.emplace_back(fx.reduced_incidence[i].begin(), fx.reduced_incidence[i].end());
    }
    return integer_determinant(std::move(m));
  };

  Polynomial out;
  for_each_spanning_tree(first, [&](const EdgeSet& u) {
    EdgeSet t2 = set_union(u, a2);
    if (t2.size() != rank || !is_forest(g, t2)) return;
    long long s = det_rows(u, a1) * det_rows(u, a2);
    if (s == 0) return;
    std::vector<Monomial::Factor> f;
    int parity = 0;
    for (const Edge& e : g.edges()) {
      if (removed.count(e.label) || u.count(e.label)) continue;
      f.emplace_back(e.label, 1);
      parity += pos_r.at(e.label) + pos_c.at(e.label);
    }
    if (parity % 2) s = -s;
    out += Polynomial(Monomial::from_factors(std::move(f)), Integer(static_cast<long>(s)));
  });
  return out;
}

std::vector<DodgsonSpec> enumerate_dodgson_specs(const EdgeSet& s) {
  if (s.size() != 5) throw Error("a 5-configuration needs exactly five edges, got " + std::to_string(s.size()));
  std::vector<Label> v(s.begin(), s.end());
  std::vector<DodgsonSpec> out;
  static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (int shape = 0; shape < 2; ++shape) {
    for (int x = 0; x < 5; ++x) {
      std::vector<Label> r;
      for (int i = 0; i < 5; ++i)
        if (i != x) r.push_back(v[i]);
      for (const auto& p : pairings) {
        DodgsonSpec d;
        d.I = {r[p[0]], r[p[1]]};
        d.J = {r[p[2]], r[p[3]]};
        if (shape == 0) {
          d.K = {v[x]};
        } else {
          d.I.insert(v[x]);
          d.J.insert(v[x]);
        }
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

Polynomial five_invariant_raw(const IncidenceFixture& fx, const std::array<Label, 5>& e) {
  EdgeSet distinct(e.begin(), e.end());
  if (distinct.size() != 5) throw Error("five-invariant needs five distinct edges");
  for (const Label& l : e)
    if (!fx.graph.has_edge(l)) throw Error("no such edge '" + l + "'");
  auto d = [&](EdgeSet i, EdgeSet j, EdgeSet k) { return dodgson(fx, DodgsonSpec{std::move(i), std::move(j), std::move(k)}); };
  Polynomial first = d({e[0], e[1]}, {e[2], e[3]}, {e[4]}) * d({e[0], e[2], e[4]}, {e[1], e[3], e[4]}, {});
  Polynomial second = d({e[0], e[2]}, {e[1], e[3]}, {e[4]}) * d({e[0], e[1], e[4]}, {e[2], e[3], e[4]}, {});
  return first - second;
}

Polynomial five_invariant(const IncidenceFixture& fx, const std::array<Label, 5>& e) {
  return normalize_sign(five_invariant_raw(fx, e));
}

std::string status_name(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::Exhausted: return "exhausted";
    case ReductionStatus::ReducedConstant: return "reduced-to-constant";
    case ReductionStatus::ReducedZero: return "reduced-to-zero";
    case ReductionStatus::NonSquare: return "non-square";
    case ReductionStatus::NotQuadratic: return "not-quadratic";
  }
  return "unknown";
}

std::optional<Polynomial> reduction_step(const Polynomial& p, const std::string& v) {
  Slices s = coefficient_slices(p, v);
  Polynomial disc = s.b * s.b - s.a * s.c * Integer(4);
  return perfect_square_root(disc);
}

ReductionTrace denominator_reduce(const Multigraph& g, const std::vector<Label>& order) {
  if (g.num_edges() < 6) throw Error("denominator reduction needs at least six edges");
  EdgeSet seen;
  for (const Label& l : order) {
    if (!g.has_edge(l)) throw Error("no such edge '" + l + "'");
    if (!seen.insert(l).second) throw Error("edge '" + l + "' repeated in order");
  }
  if (seen.size() != g.num_edges()) throw Error("edge order must cover every edge");

  IncidenceFixture fx(g);
  ReductionTrace trace;
  Polynomial p = five_invariant(fx, {order[0], order[1], order[2], order[3], order[4]});
  int n = 5;
  trace.steps.push_back({n, "", p, false});
  for (std::size_t idx = 5; idx < order.size(); ++idx) {
    const std::string& v = order[idx];
    if (p.is_zero()) {
      if (trace.status != ReductionStatus::ReducedZero) {
        trace.status = ReductionStatus::ReducedZero;
        trace.stop_index = n;
      }
      trace.steps.push_back({++n, v, p, false});
      continue;
    }
    if (p.is_constant()) {
      trace.status = ReductionStatus::ReducedConstant;
      trace.stop_index = n;
      return trace;
    }
    unsigned d = p.degree_in(v);
    if (d == 0) {
      trace.steps.push_back({++n, v, p, true});
      continue;
    }
    if (d > 2) {
      trace.status = ReductionStatus::NotQuadratic;
      trace.stop_index = n;
      return trace;
    }
    auto next = reduction_step(p, v);
    if (!next) {
      trace.status = ReductionStatus::NonSquare;
      trace.stop_index = n;
      return trace;
    }
    p = std::move(*next);
    trace.steps.push_back({++n, v, p, false});
  }
  if (trace.status == ReductionStatus::ReducedZero) return trace;
  if (p.is_zero()) {
    trace.status = ReductionStatus::ReducedZero;
    trace.stop_index = n;
  } else if (p.is_constant()) {
    trace.status = ReductionStatus::ReducedConstant;
    trace.stop_index = n;
  }
  return trace;
}

}  // namespace splitgraph

// Acceptance criteria 1-12, one PASS/FAIL line each.
// Usage: acceptance [--slow] [N ...]   (criterion 5 runs only with --slow or when named)

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "splitgraph/kirchhoff.hpp"
#include "splitgraph/polynomial.hpp"
#include "splitgraph/splitting.hpp"
#include "splitgraph/structure.hpp"

using namespace splitgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Exact comparisons only; these are the pinned tolerances.
constexpr std::size_t kOctahedronNonsplit = 516;
constexpr std::size_t kOctahedronSplit = 276;
constexpr std::size_t kConfigsOf12 = 792;
constexpr std::size_t kFamilyO = 15, kFamilyK33 = 123, kFamilyK5 = 361, kFamilySecond = 191;
constexpr int kTransferSamples = 100;
constexpr int kDeletionContractionGraphs = 50;
constexpr int kSyntheticReductions = 200;

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

Outcome kirchhoff_golden() {
  Outcome o;
  Polynomial got = kirchhoff_poly(corpus::c4chord());
  Polynomial want = Polynomial::parse("e2*e4 + e2*e3 + e1*e4 + e1*e3 + e4*e5 + e3*e5 + e2*e5 + e1*e5");
  expect(o, got == want, "psi = " + got.to_string());
  expect(o, got.to_string() == "e1*e3 + e1*e4 + e1*e5 + e2*e3 + e2*e4 + e2*e5 + e3*e5 + e4*e5", "canonical string");
  o.detail = o.pass ? got.to_string() : o.detail;
  return o;
}

std::vector<Multigraph> small_corpus() {
  std::vector<Multigraph> out = {corpus::k4(), corpus::c4chord(), corpus::triangle()};
  Multigraph t = corpus::triangle();
  out.push_back(add_edge(t, Edge{"e4", "v1", "v2"}));
  out.push_back(add_edge(add_edge(t, Edge{"e4", "v1", "v2"}), Edge{"e5", "v2", "v3"}));
  out.push_back(add_edge(add_edge(add_edge(t, Edge{"e4", "v1", "v2"}), Edge{"e5", "v2", "v3"}), Edge{"e6", "v1", "v3"}));
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) out.push_back(corpus::random_multigraph(rng, 3 + i % 3, 4 + i % 5));
  return out;
}

Outcome determinant_equivalence() {
  Outcome o;
  std::mt19937 rng(2);
  std::size_t graphs = 0, dodgsons = 0;
  for (const Multigraph& g : small_corpus()) {
    if (g.num_edges() > 8) continue;
    ++graphs;
    expect(o, kirchhoff_poly(g) == kirchhoff_det_oracle(g), "psi mismatch on\n" + describe(g));
    IncidenceFixture fx(g);
    std::vector<DodgsonSpec> specs;
    if (g.num_edges() >= 5) {
      auto cs = all_configurations(g);
      for (std::size_t c = 0; c < std::min<std::size_t>(cs.size(), 3); ++c)
        for (const auto& d : enumerate_dodgson_specs(cs[c])) specs.push_back(d);
    }
    auto ls = g.labels();
    for (int t = 0; t < 20; ++t) {
      std::shuffle(ls.begin(), ls.end(), rng);
      std::size_t k = rng() % 3;
      DodgsonSpec d;
      for (std::size_t i = 0; i < k && i < ls.size(); ++i) d.I.insert(ls[i]);
      for (std::size_t i = 0; i < k && i < ls.size(); ++i) d.J.insert(ls[ls.size() - 1 - i]);
      if (ls.size() > 2 * k && rng() % 2) d.K.insert(ls[k]);
      for (const Label& l : d.K)
        if (d.I.count(l) || d.J.count(l)) d.K.clear();
      if (d.I.size() == d.J.size()) specs.push_back(d);
    }
    for (const DodgsonSpec& d : specs) {
      ++dodgsons;
      if (dodgson(fx, d) != dodgson_matrix_oracle(fx, d)) expect(o, false, "dodgson mismatch " + d.to_string());
    }
  }
  o.detail = o.pass ? std::to_string(graphs) + " graphs, " + std::to_string(dodgsons) + " Dodgsons" : o.detail;
  return o;
}

Outcome deletion_contraction() {
  Outcome o;
  std::mt19937 rng(3);
  int edges = 0;
  for (int t = 0; t < kDeletionContractionGraphs; ++t) {
    Multigraph g = corpus::random_multigraph(rng, 2 + t % 5, 1 + t % 10);
    Polynomial psi = kirchhoff_poly(g);
    for (const Edge& e : g.edges()) {
      ++edges;
      Polynomial a = Polynomial::var(e.label);
      Polynomial del = kirchhoff_poly(delete_edge(g, e.label));
      // a loop lies outside every spanning tree
      Polynomial rhs = e.is_loop() ? a * del : a * del + kirchhoff_poly(contract_edge(g, e.label));
      expect(o, psi == rhs, "edge " + e.label + " of\n" + describe(g));
    }
  }
  o.detail = o.pass ? std::to_string(edges) + " edges" : o.detail;
  return o;
}

Outcome nonsplitting_counts() {
  Outcome o;
  auto count = [](const Multigraph& g) {
    std::size_t n = 0;
    auto rs = sweep_configurations(g);
    for (const auto& r : rs) n += !r.splits;
    return std::make_pair(n, rs.size());
  };
  auto [on, ot] = count(builtin("O"));
  auto [cn, ct] = count(builtin("C"));
  expect(o, ot == kConfigsOf12 && on == kOctahedronNonsplit && ot - on == kOctahedronSplit, "O " + std::to_string(on));
  expect(o, ct == kConfigsOf12 && cn == kOctahedronNonsplit, "C " + std::to_string(cn));
  // configurations of O containing one of its eight triangles
  Multigraph g = builtin("O");
  std::vector<EdgeSet> tris = triangle_sites(g);
  std::size_t with_tri = 0;
  for (const EdgeSet& s : all_configurations(g))
    with_tri += std::any_of(tris.begin(), tris.end(), [&](const EdgeSet& t) {
      return std::includes(s.begin(), s.end(), t.begin(), t.end(), NaturalLess{});
    });
  std::size_t formula = 8 * 36 - 12;
  expect(o, tris.size() == 8 && with_tri == formula && with_tri == kOctahedronSplit, "triangle count");
  o.detail = o.pass ? "O " + std::to_string(on) + "/" + std::to_string(ot - on) + " of " + std::to_string(ot) +
                          ", C " + std::to_string(cn) + ", 8*C(9,2)-12 = " + std::to_string(formula)
                    : o.detail;
  return o;
}

Outcome forbidden_minimal() {
  Outcome o;
  for (const char* n : {"K5", "K33", "O", "H", "C"}) expect(o, is_minor_minimal_nonsplitting(builtin(n)).minimal, n);
  o.detail = o.pass ? "K5, K33, O, H, C" : o.detail;
  return o;
}

Outcome family_counts() {
  Outcome o;
  std::ostringstream d;
  auto check = [&](const std::string& tag, const Multigraph& g, std::size_t want) {
    std::size_t got = 0;
    try {
      auto fam = delta_y_family(g, 20000);
      got = fam.size();
      for (const auto& [f, h] : fam)
        if (h.num_edges() != g.num_edges()) expect(o, false, tag + " edge count drift");
    } catch (const FamilyCapError& e) {
      got = e.partial.size();
    }
    d << tag << " " << got << "/" << want << " ";
    expect(o, got == want, tag + " has " + std::to_string(got) + ", want " + std::to_string(want));
  };
  check("O", builtin("O"), kFamilyO);
  check("K33", builtin("K33"), kFamilyK33);
  check("K5", builtin("K5"), kFamilyK5);
  expect(o, false, "second family: no reconstructed seed, want " + std::to_string(kFamilySecond));
  o.detail = d.str() + "| " + o.detail;
  return o;
}

Outcome delta_y_transfer() {
  Outcome o;
  std::mt19937 rng(7);
  std::vector<Multigraph> pool;
  for (const auto& [f, g] : delta_y_family(builtin("O"))) pool.push_back(g);
  for (const auto& [f, g] : delta_y_family(builtin("K33"))) pool.push_back(g);
  int samples = 0, nonsplit = 0, guard = 0;
  while (samples < kTransferSamples && guard++ < 100000) {
    const Multigraph& g = pool[rng() % pool.size()];
    auto tris = triangle_sites(g);
    auto stars = star_sites(g);
    if (tris.empty() && stars.empty()) continue;
    EdgeSet site;
    Multigraph h;
    std::size_t pick = rng() % (tris.size() + stars.size());
    if (pick < tris.size()) {
      site = tris[pick];
      h = delta_to_y(g, site);
    } else {
      const Vertex& v = stars[pick - tris.size()];
      for (const Edge& e : g.edges())
        if (e.u == v || e.v == v) site.insert(e.label);
      h = y_to_delta(g, v);
    }
    std::vector<Label> rest;
    for (const Label& l : g.labels())
      if (!site.count(l)) rest.push_back(l);
    if (rest.size() < 5) continue;
    std::shuffle(rest.begin(), rest.end(), rng);
    EdgeSet s(rest.begin(), rest.begin() + 5);
    if (samples % 2) {
      // every other sample from the non-splitting configurations avoiding the site
      std::vector<EdgeSet> cands;
      for (const EdgeSet& c : nonsplitting_configs(g)) {
        bool ok = true;
        for (const Label& l : c) ok = ok && !site.count(l);
        if (ok) cands.push_back(c);
      }
      if (!cands.empty()) s = cands[rng() % cands.size()];
    }
    bool a = config_splits(g, s).splits, b = config_splits(h, s).splits;
    nonsplit += !a;
    expect(o, a == b, "disagreement on " + describe(g));
    ++samples;
  }
  expect(o, samples == kTransferSamples, "too few samples");
  o.detail = o.pass ? std::to_string(samples) + " pairs, " + std::to_string(nonsplit) + " non-splitting" : o.detail;
  return o;
}

Outcome duality() {
  Outcome o;
  expect(o, is_isomorphic(planar_dual(builtin("O")), builtin("C")), "dual(O) != C");
  for (const char* n : {"K4", "O", "C", "H", "Q"}) {
    Multigraph g = builtin(n);
    auto rs = is_planar(g);
    if (!rs) {
      expect(o, false, std::string(n) + " not planar");
      continue;
    }
    Multigraph d = planar_dual(g, *rs);
    expect(o, is_isomorphic(planar_dual(d), g), std::string("dual of dual of ") + n);
    if (is_k_connected(g, 3) && g.is_simple()) {
      auto a = sweep_configurations(g), b = sweep_configurations(d);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].splits != b[i].splits) expect(o, false, std::string("verdict differs in dual of ") + n);
    }
    for (const Edge& e : g.edges()) {
      bool del = is_isomorphic(planar_dual(delete_edge(g, e.label), embedding_delete(g, *rs, e.label)),
                               contract_edge(d, e.label));
      bool con = is_isomorphic(planar_dual(contract_edge(g, e.label), embedding_contract(g, *rs, e.label)),
                               delete_edge(d, e.label));
      expect(o, del && con, std::string(n) + " edge " + e.label);
    }
  }
  o.detail = o.pass ? "K4, O, C, H, Q" : o.detail;
  return o;
}

Outcome zigzag_suite() {
  Outcome o;
  for (int n = 0; n <= 4; ++n) {
    Multigraph z = builtin("zigzag", n);
    std::string t = "zigzag(" + std::to_string(n) + ")";
    expect(o, z.num_edges() == static_cast<std::size_t>(2 * n + 6), t + " edge count");
    expect(o, graph_splits(z), t + " does not split");
    expect(o, primitive_divergent(z).divergent, t + " not primitive divergent");
    expect(o, forbidden_minor_scan(z).empty(), t + " has a forbidden minor");
  }
  o.detail = o.pass ? "n = 0..4" : o.detail;
  return o;
}

EdgeSet k33_nonsplitting() {
  Multigraph g = builtin("K33");
  auto ns = nonsplitting_configs(g);
  return ns.empty() ? EdgeSet{} : ns.front();
}

Outcome permutation_signs() {
  Outcome o;
  EdgeSet s = k33_nonsplitting();
  expect(o, s.size() == 5, "no non-splitting configuration");
  if (!o.pass) return o;
  IncidenceFixture fx(builtin("K33"));
  std::vector<Label> e(s.begin(), s.end());
  Polynomial base = five_invariant_raw(fx, {e[0], e[1], e[2], e[3], e[4]});
  int perms = 0, flips = 0;
  do {
    Polynomial p = five_invariant_raw(fx, {e[0], e[1], e[2], e[3], e[4]});
    ++perms;
    if (p == -base) ++flips;
    else expect(o, p == base, "permutation changes more than the sign");
  } while (std::next_permutation(e.begin(), e.end(), NaturalLess{}));
  expect(o, perms == 120, "permutation count");
  expect(o, !base.is_zero(), "zero five-invariant");
  o.detail = o.pass ? std::to_string(perms) + " permutations, " + std::to_string(flips) + " sign flips" : o.detail;
  return o;
}

Outcome k33_nonlinearity() {
  Outcome o;
  Multigraph g = builtin("K33");
  IncidenceFixture fx(g);
  auto ns = nonsplitting_configs(g);
  std::size_t with_square = 0;
  std::string first;
  for (const EdgeSet& s : ns) {
    std::vector<Label> e(s.begin(), s.end());
    auto [content, cofactor] = monomial_content(five_invariant(fx, {e[0], e[1], e[2], e[3], e[4]}));
    std::string squared;
    for (const std::string& v : cofactor.variables())
      if (cofactor.degree_in(v) == 2 && squared.empty()) squared = v;
    if (squared.empty()) continue;
    ++with_square;
    if (first.empty()) first = "{" + e[0] + "," + e[1] + "," + e[2] + "," + e[3] + "," + e[4] + "} squares " + squared;
  }
  expect(o, with_square > 0, "every non-splitting cofactor is linear in every variable");
  o.detail = o.pass ? first + "; " + std::to_string(with_square) + " of " + std::to_string(ns.size()) +
                          " non-splitting configurations have a squared variable"
                    : o.detail;
  return o;
}

Outcome denominator_reduction() {
  Outcome o;
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_poly = [&] {
    Polynomial p;
    for (int t = 0; t < 3; ++t) {
      Polynomial m(coef(rng));
      for (int k = 0; k < 2; ++k) m = m * Polynomial::var("x" + std::to_string(1 + rng() % 4));
      p += m;
    }
    if (p.is_zero()) p = Polynomial::var("x1");
    return p;
  };
  Polynomial v = Polynomial::var("v");
  int ok = 0;
  for (int t = 0; t < kSyntheticReductions; ++t) {
    Polynomial f1 = random_poly(), f0 = random_poly(), g1 = random_poly(), g0 = random_poly();
    Polynomial p = (f1 * v + f0) * (g1 * v + g0);
    Polynomial want = f1 * g0 - f0 * g1;
    auto r = reduction_step(p, "v");
    bool good = r && (*r == want || *r == -want);
    ok += good;
    expect(o, good, "synthetic case " + std::to_string(t));
  }
  std::vector<Label> order{"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"};
  ReductionTrace tr = denominator_reduce(builtin("zigzag", 1), order);
  bool past5 = tr.steps.size() > 1 && !(tr.status == ReductionStatus::NonSquare && tr.stop_index <= 5);
  expect(o, past5, "zigzag(1) trace stops at step 5: " + status_name(tr.status));
  o.detail = o.pass ? std::to_string(ok) + " synthetic steps, zigzag(1) reaches P" +
                          std::to_string(tr.steps.back().index) + " (" + status_name(tr.status) + ")"
                    : o.detail;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  bool slow;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "Kirchhoff golden test", false, kirchhoff_golden},
      {2, "determinant equivalence", false, determinant_equivalence},
      {3, "deletion-contraction", false, deletion_contraction},
      {4, "non-splitting counts", false, nonsplitting_counts},
      {5, "forbidden five are minor-minimal", true, forbidden_minimal},
      {6, "delta-wye family counts", false, family_counts},
      {7, "delta-wye transfer", false, delta_y_transfer},
      {8, "duality suite", false, duality},
      {9, "zigzag suite", false, zigzag_suite},
      {10, "five-invariant sign property", false, permutation_signs},
      {11, "K33 non-linearity witness", false, k33_nonlinearity},
      {12, "denominator reduction", false, denominator_reduction},
  };
  bool slow = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--slow") slow = true;
    else only.insert(std::stoi(a));
  }
  int failed = 0;
  for (const Criterion& c : all) {
    if (!only.empty() ? !only.count(c.id) : (c.slow && !slow)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !r.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << c.name << (c.slow ? " [slow]" : "")
         << "  (" << r.detail << ", " << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

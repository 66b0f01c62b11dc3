#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "splitgraph/errors.hpp"
#include "splitgraph/splitting.hpp"
#include "splitgraph/structure.hpp"

using namespace splitgraph;

namespace {

std::vector<Multigraph> planar_3connected() {
  return {builtin("K4"), builtin("O"), builtin("C"), builtin("zigzag", 1), builtin("zigzag", 2), builtin("H")};
}

// S non-splitting in g, and splits in every single-edge minor away from S.
bool minimal_wrt(const Multigraph& g, const EdgeSet& s) {
  if (config_splits(g, s).splits) return false;
  for (const Edge& e : g.edges()) {
    if (s.count(e.label)) continue;
    if (!config_splits(delete_edge(g, e.label), s).splits) return false;
    if (!e.is_loop() && !config_splits(contract_edge(g, e.label), s).splits) return false;
  }
  return true;
}

std::vector<EdgeSet> configs_avoiding(const Multigraph& g, const EdgeSet& avoid) {
  std::vector<EdgeSet> out;
  for (const EdgeSet& s : all_configurations(g)) {
    bool ok = true;
    for (const Label& l : s) ok = ok && !avoid.count(l);
    if (ok) out.push_back(s);
  }
  return out;
}

EdgeSet star_edges(const Multigraph& g, const Vertex& v) {
  EdgeSet out;
  for (const Edge& e : g.edges())
    if (e.u == v || e.v == v) out.insert(e.label);
  return out;
}

}  // namespace

TEST_CASE("planarity and embeddings") {
  CHECK_FALSE(is_planar(builtin("K5")));
  CHECK_FALSE(is_planar(builtin("K33")));
  for (const Multigraph& g : planar_3connected()) {
    auto rs = is_planar(g);
    REQUIRE(rs);
    CHECK_NOTHROW(validate_rotation(g, *rs));
    long f = static_cast<long>(faces(g, *rs).size());
    CHECK(static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + f == 2);
  }
  Multigraph loops = corpus::make("e1 v1 v1, e2 v1 v2, e3 v1 v2, e4 v2 v2");
  auto rs = is_planar(loops);
  REQUIRE(rs);
  CHECK(faces(loops, *rs).size() == 4);
  RotationSystem bad = *rs;
  bad.order["v1"].pop_back();
  CHECK_THROWS_AS(validate_rotation(loops, bad), Error);
  CHECK_THROWS_AS(planar_dual(builtin("K5")), Error);
}

TEST_CASE("planar duals") {
  Multigraph o = builtin("O"), c = builtin("C");
  CHECK(is_isomorphic(planar_dual(o), c));
  CHECK(is_isomorphic(planar_dual(c), o));
  CHECK(is_isomorphic(planar_dual(planar_dual(c)), c));
  CHECK(is_isomorphic(planar_dual(builtin("K4")), builtin("K4")));
  // edge labels survive into the dual
  CHECK(planar_dual(o).label_set() == o.label_set());
}

TEST_CASE("deletion and contraction are dual operations") {
  for (const Multigraph& g : planar_3connected()) {
    auto rs = is_planar(g);
    REQUIRE(rs);
    Multigraph d = planar_dual(g, *rs);
    for (const Edge& e : g.edges()) {
      Multigraph gd = delete_edge(g, e.label), gc = contract_edge(g, e.label);
      CHECK(is_isomorphic(planar_dual(gd, embedding_delete(g, *rs, e.label)), contract_edge(d, e.label)));
      CHECK(is_isomorphic(planar_dual(gc, embedding_contract(g, *rs, e.label)), delete_edge(d, e.label)));
    }
  }
}

TEST_CASE("splitting is preserved under duality") {
  for (const Multigraph& g : planar_3connected()) {
    Multigraph d = planar_dual(g);
    CHECK(graph_splits(g) == graph_splits(d));
    // configuration by configuration, with the shared labels
    std::vector<SplitReport> a = sweep_configurations(g), b = sweep_configurations(d);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].configuration == b[i].configuration);
      CHECK(a[i].splits == b[i].splits);
    }
  }
}

TEST_CASE("delta-wye moves") {
  Multigraph k4 = builtin("K4");
  EdgeSet tri{"e1", "e2", "e4"};
  REQUIRE(is_triangle_site(k4, tri));
  Multigraph y = delta_to_y(k4, tri);
  CHECK(y.num_vertices() == 5);
  CHECK(y.num_edges() == 6);
  CHECK(y.has_vertex("dy_v1"));
  CHECK(y.has_edge("e3"));
  CHECK(y.has_edge("e5"));
  CHECK(y.has_edge("e6"));
  CHECK(is_star_site(y, "dy_v1"));
  CHECK(is_isomorphic(y_to_delta(y, "dy_v1"), k4));
  CHECK_THROWS_AS(delta_to_y(k4, EdgeSet{"e1", "e2", "e3"}), Error);
  CHECK_THROWS_AS(y_to_delta(builtin("K5"), "v1"), Error);

  // Y to delta may create parallel edges
  Multigraph w = corpus::make("e1 c a, e2 c b, e3 c d, e4 a b, e5 b d, e6 a d");
  Multigraph t = y_to_delta(w, "c");
  CHECK_FALSE(t.is_simple());
  CHECK(t.num_edges() == 6);

  Multigraph o = builtin("O");
  Multigraph h = delta_to_y(o, EdgeSet{"e1", "e2", "e5"});
  CHECK(is_isomorphic(h, builtin("H")));
  // every face triangle of O gives H
  auto rs = is_planar(o);
  REQUIRE(rs);
  for (const auto& f : faces(o, *rs)) {
    EdgeSet s;
    for (const Dart& d : f) s.insert(d.edge);
    CHECK(is_isomorphic(delta_to_y(o, s), h));
  }
  bool reaches_cube = false;
  for (const EdgeSet& s : triangle_sites(h)) reaches_cube = reaches_cube || is_isomorphic(delta_to_y(h, s), builtin("C"));
  CHECK(reaches_cube);
}

TEST_CASE("delta-wye family of the octahedron") {
  auto fam = delta_y_family(builtin("O"));
  CHECK(fam.size() == 15);
  for (const auto& [form, g] : fam) CHECK(g.num_edges() == 12);
  CHECK(fam.count(canonical_form(builtin("H"))));
  CHECK(fam.count(canonical_form(builtin("C"))));
  CHECK(fam.count(canonical_form(builtin("Q"))));
  auto from_c = delta_y_family(builtin("C"));
  CHECK(from_c.size() == fam.size());
  for (const auto& [form, g] : from_c) CHECK(fam.count(form));
  try {
    delta_y_family(builtin("O"), 4);
    FAIL("cap not enforced");
  } catch (const FamilyCapError& e) {
    CHECK(e.partial.size() == 4);
  }
}

TEST_CASE("Q is the single-orbit minimal member") {
  Multigraph q = builtin("Q");
  CHECK(is_isomorphic(locate_q(), q));
  auto ns = nonsplitting_configs(q);
  CHECK_FALSE(ns.empty());
  CHECK(configuration_orbits(q, ns).size() == 1);
  CHECK(is_minor_minimal_nonsplitting(q).minimal);

  // a one-move neighbour of Q that has a K33 minor, does not split, and is not minimal
  std::vector<Multigraph> nbrs;
  for (const EdgeSet& t : triangle_sites(q)) nbrs.push_back(delta_to_y(q, t));
  for (const Vertex& v : star_sites(q)) nbrs.push_back(y_to_delta(q, v));
  bool found = false;
  for (const Multigraph& g : nbrs) {
    if (!has_minor(g, builtin("K33"))) continue;
    if (graph_splits(g)) continue;
    found = found || !is_minor_minimal_nonsplitting(g).minimal;
  }
  CHECK(found);
}

TEST_CASE("minor containment") {
  for (const char* n : {"K4", "K5", "K33", "O", "C"}) CHECK(has_minor(builtin(n), builtin(n)));
  CHECK_FALSE(has_minor(builtin("sq_odd_cycle", 3), builtin("O")));
  CHECK(has_minor(builtin("K5"), builtin("K4")));
  CHECK_FALSE(has_minor(builtin("K4"), builtin("K5")));
  CHECK_FALSE(has_minor(builtin("O"), builtin("K5")));

  std::vector<MinorStep> cert;
  REQUIRE(has_minor(builtin("C"), builtin("K4"), &cert));
  CHECK(is_isomorphic(apply_minor_steps(builtin("C"), cert), builtin("K4")));
  cert.clear();
  REQUIRE(has_minor(builtin("H"), builtin("C"), &cert) == false);
  Multigraph big = add_edge(builtin("O"), Edge{"e13", "v1", "v6"});
  REQUIRE(has_minor(big, builtin("O"), &cert));
  CHECK(is_isomorphic(apply_minor_steps(big, cert), builtin("O")));
  CHECK(has_minor(big, builtin("K5")));
}

TEST_CASE("rooted minors") {
  Multigraph path = corpus::make("e1 a b, e2 b c");
  Multigraph edge = corpus::make("f1 x y");
  CHECK(has_rooted_minor(path, {{"a", 1}, {"c", 2}}, edge, {{"x", 1}, {"y", 2}}));
  CHECK_FALSE(has_rooted_minor(path, {{"a", 1}, {"b", 2}, {"c", 3}}, edge, {{"x", 1}, {"y", 2}}));
  Multigraph two = corpus::make("e1 a b, e2 c d");
  CHECK_FALSE(has_rooted_minor(two, {{"a", 1}, {"c", 2}}, edge, {{"x", 1}, {"y", 2}}));
}

TEST_CASE("forbidden minor scan") {
  auto k5 = forbidden_minor_scan(builtin("K5"));
  CHECK(k5 == std::vector<std::string>{"K5"});
  auto o = forbidden_minor_scan(builtin("O"));
  CHECK(std::find(o.begin(), o.end(), "O") != o.end());
  for (int n = 0; n <= 4; ++n) CHECK(forbidden_minor_scan(builtin("zigzag", n)).empty());
}

TEST_CASE("named builders") {
  CHECK(is_isomorphic(builtin("zigzag", 0), builtin("K4")));
  for (int n = 0; n <= 4; ++n) {
    Multigraph z = builtin("zigzag", n);
    CHECK(z.num_edges() == static_cast<std::size_t>(2 * n + 6));
    int four = 0, three = 0;
    for (int d : z.degrees()) four += d == 4, three += d == 3;
    CHECK(four == n);
    CHECK(three == 4);
  }
  CHECK(builtin("O").num_edges() == 12);
  CHECK(builtin("O").num_vertices() == 6);
  CHECK(builtin("sq_odd_cycle", 3).num_edges() == 14);
  CHECK_THROWS_AS(builtin("nope"), Error);
  CHECK_THROWS_AS(builtin("zigzag"), Error);
  CHECK_THROWS_AS(builtin("K5", 2), Error);
  for (const std::string& n : builtin_names())
    if (n != "zigzag" && n != "sq_odd_cycle") CHECK_NOTHROW(builtin(n));
}

TEST_CASE("zigzag graphs split and are primitive divergent") {
  for (int n = 0; n <= 4; ++n) {
    Multigraph z = builtin("zigzag", n);
    CHECK(graph_splits(z));
    CHECK(primitive_divergent(z).divergent);
  }
}

TEST_CASE("primitive divergence certificates") {
  // zigzag(1) with its chord v1v3 (e5) moved onto v1v2
  Multigraph dbl = add_edge(delete_edge(builtin("zigzag", 1), "e5"), Edge{"e99", "v1", "v2"});
  REQUIRE(dbl.num_edges() == static_cast<std::size_t>(2 * loop_number(dbl)));
  auto r = primitive_divergent(dbl);
  CHECK_FALSE(r.divergent);
  REQUIRE(r.violation);
  CHECK(r.violation->num_edges() == 2);
  CHECK(r.violation->num_vertices() == 2);

  // subdivide an edge and add a chord so that |E| = 2h still holds
  Multigraph deg2 = corpus::make("e1 v1 x, e2 x v2, e3 v1 v3, e4 v1 v4, e5 v2 v3, e6 v2 v4, e7 v3 v4, e8 v1 v2");
  REQUIRE(deg2.num_edges() == static_cast<std::size_t>(2 * loop_number(deg2)));
  CHECK_FALSE(primitive_divergent(deg2).divergent);
  CHECK_FALSE(primitive_divergent(builtin("K5")).divergent);
}

TEST_CASE("well-connected S2") {
  Multigraph s2 = s2_graph();
  CHECK(s2.num_vertices() == 6);
  CHECK(s2.num_edges() == 8);
  for (int n = 1; n <= 4; ++n) {
    Multigraph z = builtin("zigzag", n);
    for (const VertexSet& cut : vertex_cuts(z, 3)) CHECK_FALSE(has_well_connected_s2(z, cut));
  }
  CHECK_FALSE(has_well_connected_s2(builtin("K4"), VertexSet{"v1", "v2", "v3"}));
  // two copies of S2 glued along v1, v2, v3
  Multigraph glued = corpus::make(
      "e1 v1 a, e2 a v2, e3 v2 w, e4 a w, e5 w v3, e6 v3 b, e7 b v1, e8 b w, "
      "f1 v1 a2, f2 a2 v2, f3 v2 w2, f4 a2 w2, f5 w2 v3, f6 v3 b2, f7 b2 v1, f8 b2 w2");
  CHECK(has_well_connected_s2(glued, VertexSet{"v1", "v2", "v3"}));
  CHECK_THROWS_AS(has_well_connected_s2(glued, VertexSet{"v1", "v2"}), Error);
  CHECK_THROWS_AS(has_well_connected_s2(glued, VertexSet{"v1", "v2", "zz"}), Error);
}

TEST_CASE("three-cut edge orderings") {
  for (const Multigraph& g : {builtin("K4"), builtin("zigzag", 1), builtin("zigzag", 2), builtin("zigzag", 3)}) {
    EdgeOrdering r = three_cut_edge_ordering(g);
    REQUIRE(r.order);
    CHECK(verify_three_cut_ordering(g, *r.order));
  }
  CHECK_THROWS_AS(three_cut_edge_ordering(builtin("O")), Error);
  CHECK_THROWS_AS(three_cut_edge_ordering(corpus::c4chord()), Error);
  CHECK_FALSE(verify_three_cut_ordering(builtin("K4"), {"e1", "e2"}));
}

TEST_CASE("delta-wye transfer of splitting") {
  std::mt19937 rng(11);
  std::vector<Multigraph> seeds;
  for (const auto& [f, g] : delta_y_family(builtin("O"))) seeds.push_back(g);
  seeds.push_back(builtin("K33"));
  seeds.push_back(builtin("K5"));
  int checked = 0;
  for (const Multigraph& g : seeds) {
    for (const EdgeSet& t : triangle_sites(g)) {
      Multigraph y = delta_to_y(g, t);
      auto cs = configs_avoiding(g, t);
      std::shuffle(cs.begin(), cs.end(), rng);
      for (std::size_t i = 0; i < std::min<std::size_t>(cs.size(), 6); ++i) {
        CHECK(config_splits(g, cs[i]).splits == config_splits(y, cs[i]).splits);
        ++checked;
      }
    }
    for (const Vertex& v : star_sites(g)) {
      Multigraph d = y_to_delta(g, v);
      auto cs = configs_avoiding(g, star_edges(g, v));
      std::shuffle(cs.begin(), cs.end(), rng);
      for (std::size_t i = 0; i < std::min<std::size_t>(cs.size(), 6); ++i) {
        CHECK(config_splits(g, cs[i]).splits == config_splits(d, cs[i]).splits);
        ++checked;
      }
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("delta-wye transfer of minimality on planar pairs") {
  std::mt19937 rng(5);
  int checked = 0;
  for (const char* name : {"O", "H", "C", "Q"}) {
    Multigraph g = builtin(name);
    REQUIRE(is_planar(g));
    for (const EdgeSet& t : triangle_sites(g)) {
      Multigraph y = delta_to_y(g, t);
      auto cs = configs_avoiding(g, t);
      std::shuffle(cs.begin(), cs.end(), rng);
      int used = 0;
      for (const EdgeSet& s : cs) {
        if (used == 3) break;
        if (config_splits(g, s).splits) continue;
        CHECK(minimal_wrt(g, s) == minimal_wrt(y, s));
        ++used;
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("4-connected corpus graphs have an O minor or are odd cycle squares") {
  std::vector<Multigraph> graphs = {builtin("K5"), builtin("O"), builtin("sq_odd_cycle", 2), builtin("sq_odd_cycle", 3),
                                    corpus::cycle_square(8), add_edge(builtin("O"), Edge{"e13", "v1", "v6"})};
  for (const Multigraph& g : graphs) {
    REQUIRE(is_k_connected(g, 4));
    bool odd_square = false;
    for (int k = 2; k <= 4; ++k) odd_square = odd_square || is_isomorphic(g, builtin("sq_odd_cycle", k));
    CHECK((odd_square || has_minor(g, builtin("O"))));
  }
  // squares of odd cycles beyond K5 have no O minor
  CHECK_FALSE(has_minor(builtin("sq_odd_cycle", 3), builtin("O")));
}

TEST_CASE("main theorem on sampled 3-connected simple graphs") {
  std::mt19937 rng(99);
  std::vector<Multigraph> graphs = {builtin("K4"), builtin("K5"), builtin("K33"), builtin("O"), builtin("C"),
                                    builtin("H"), builtin("zigzag", 2), builtin("sq_odd_cycle", 3)};
  int tries = 0;
  while (graphs.size() < 20 && tries++ < 2000) {
    Multigraph g = corpus::random_connected(rng, 7, 12, false);
    if (!g.is_simple() || !is_k_connected(g, 3)) continue;
    graphs.push_back(g);
  }
  REQUIRE(graphs.size() >= 12);
  for (const Multigraph& g : graphs) {
    bool splits = graph_splits(g);
    bool free = forbidden_minor_scan(g).empty();
    if (!splits) CHECK_FALSE(free);
    if (free) CHECK(splits);
  }
}

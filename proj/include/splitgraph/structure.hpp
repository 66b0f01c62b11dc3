#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitgraph/errors.hpp"
#include "splitgraph/multigraph.hpp"

namespace splitgraph {

// ---- planarity -------------------------------------------------------------

// One end of an edge: end 0 sits at Edge::u, end 1 at Edge::v.
struct Dart {
  Label edge;
  int end = 0;
  bool operator==(const Dart& o) const { return edge == o.edge && end == o.end; }
  bool operator<(const Dart& o) const;
};

struct RotationSystem {
  std::map<Vertex, std::vector<Dart>, NaturalLess> order;  // cyclic, one entry per vertex
};

// Throws Error unless every edge end appears exactly once and Euler's formula holds.
void validate_rotation(const Multigraph& g, const RotationSystem& rs);

// Faces as closed dart walks.
std::vector<std::vector<Dart>> faces(const Multigraph& g, const RotationSystem& rs);

std::optional<RotationSystem> is_planar(const Multigraph& g);

// Face vertices f1, f2, ... and one dual edge per edge, keeping its label.
Multigraph planar_dual(const Multigraph& g, const RotationSystem& rs);
Multigraph planar_dual(const Multigraph& g);  // throws if g is not planar

// Induced embeddings of g minus e and g contract e.
RotationSystem embedding_delete(const Multigraph& g, const RotationSystem& rs, const Label& e);
RotationSystem embedding_contract(const Multigraph& g, const RotationSystem& rs, const Label& e);

// ---- delta-wye -------------------------------------------------------------

inline constexpr const char* kFreshVertexPrefix = "dy_v";
inline constexpr const char* kFreshEdgePrefix = "dy_e";

bool is_triangle_site(const Multigraph& g, const EdgeSet& tri);
bool is_star_site(const Multigraph& g, const Vertex& center);
std::vector<EdgeSet> triangle_sites(const Multigraph& g);
std::vector<Vertex> star_sites(const Multigraph& g);

Multigraph delta_to_y(const Multigraph& g, const EdgeSet& tri);
Multigraph y_to_delta(const Multigraph& g, const Vertex& center);

struct FamilyCapError : Error {
  std::map<std::string, Multigraph> partial;
  FamilyCapError(std::string msg, std::map<std::string, Multigraph> p) : Error(std::move(msg)), partial(std::move(p)) {}
};

// Closure under both moves keyed by canonical form.
std::map<std::string, Multigraph> delta_y_family(const Multigraph& g, std::size_t cap = 5000);

// ---- minors ----------------------------------------------------------------

struct MinorStep {
  enum Op { DeleteEdge, ContractEdge, DeleteVertex } op;
  std::string name;
};
std::string to_string(const MinorStep& s);

// Minor containment with an optional delete/contract certificate.
bool has_minor(const Multigraph& g, const Multigraph& h, std::vector<MinorStep>* certificate = nullptr);

// Rooted variant: vertices with nonzero colour must survive, never merge with
// each other, and land on the vertex of h with the same colour.
bool has_rooted_minor(const Multigraph& g, const std::map<Vertex, int>& g_roots, const Multigraph& h,
                      const std::map<Vertex, int>& h_roots, std::vector<MinorStep>* certificate = nullptr);

Multigraph apply_minor_steps(const Multigraph& g, const std::vector<MinorStep>& steps);

// Tags among K5, K33, O, H, C.
std::vector<std::string> forbidden_minor_scan(const Multigraph& g);

// ---- named graphs ----------------------------------------------------------

std::vector<std::string> builtin_names();
// K4, K5, K33, O, C, H, Q, S2, c4chord, zigzag (k >= 0),
// sq_odd_cycle (k >= 2).
Multigraph builtin(const std::string& name, int k = -1);

// Vertices v1.., edges e1.. in current order.
Multigraph tidy_labels(const Multigraph& g);

// Property search for Q over the family of O.
Multigraph locate_q();

// S2 roots: v1, v2, v3.
Multigraph s2_graph();
bool has_well_connected_s2(const Multigraph& g, const VertexSet& cut);

// ---- primitive divergence and orderings -----------------------------------

struct PrimitiveDivergence {
  bool divergent = false;
  std::string reason;                   // empty when divergent
  std::optional<Multigraph> violation;  // offending subgraph
};
PrimitiveDivergence primitive_divergent(const Multigraph& g);

struct EdgeOrdering {
  std::optional<std::vector<Label>> order;
  std::vector<std::string> diagnostics;
};
// Throws Error unless g is simple, 3-connected and splits.
EdgeOrdering three_cut_edge_ordering(const Multigraph& g);
bool verify_three_cut_ordering(const Multigraph& g, const std::vector<Label>& order);

}  // namespace splitgraph

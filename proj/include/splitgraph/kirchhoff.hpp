#pragma once

#include <array>
#include <string>
#include <vector>

#include "splitgraph/multigraph.hpp"
#include "splitgraph/polynomial.hpp"

namespace splitgraph {

// Fixed orientation and orderings for one graph. Rows follow edge order,
// columns follow vertex order with the last vertex dropped; each non-loop edge
// points from its smaller endpoint (+1) to its larger one (-1).
struct IncidenceFixture {
  Multigraph graph;
  std::vector<Vertex> vertex_order;
  std::vector<Label> edge_order;
  Vertex deleted_vertex;
  std::vector<std::vector<int>> reduced_incidence;  // |E| x (|V|-1)

  explicit IncidenceFixture(const Multigraph& g);
  std::string describe() const;
};

struct DodgsonSpec {
  EdgeSet I, J, K;

  std::string to_string() const;  // "I={e1,e2} J={e3,e4} K={e5}"
  bool operator==(const DodgsonSpec& o) const { return I == o.I && J == o.J && K == o.K; }
};

void validate_spec(const Multigraph& g, const DodgsonSpec& spec);

Polynomial kirchhoff_poly(const Multigraph& g);

// Symbolic det(M_G); throws ScaleError beyond the oracle size cap.
Polynomial kirchhoff_det_oracle(const Multigraph& g);

// Common-spanning-tree expansion with exact fixture signs.
Polynomial dodgson(const IncidenceFixture& fx, const DodgsonSpec& spec);

// Symbolic det of M_G with rows I, columns J removed and alpha zeroed on K.
Polynomial dodgson_matrix_oracle(const IncidenceFixture& fx, const DodgsonSpec& spec);

constexpr int kOracleMaxDimension = 16;

// The 30 Dodgsons of a 5-configuration: 15 of shape (ab,cd)_e first, then
// 15 of shape (abe,cde).
std::vector<DodgsonSpec> enumerate_dodgson_specs(const EdgeSet& s);

// Difference of products for the ordered edges, signs as given by the fixture.
Polynomial five_invariant_raw(const IncidenceFixture& fx, const std::array<Label, 5>& e);
// Same, with the leading coefficient made positive.
Polynomial five_invariant(const IncidenceFixture& fx, const std::array<Label, 5>& e);

// Integer determinant by fraction-free elimination.
long long integer_determinant(std::vector<std::vector<long long>> m);

enum class ReductionStatus {
  Exhausted,       // every variable consumed
  ReducedConstant, // P became a nonzero constant
  ReducedZero,     // P became zero
  NonSquare,       // discriminant not a perfect square
  NotQuadratic,    // degree above two in the next variable
};

struct ReductionStep {
  int index;         // n of P_n
  std::string variable;  // variable consumed to produce this step, empty for P5
  Polynomial value;
  bool skipped = false;  // variable absent from the previous P
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  ReductionStatus status = ReductionStatus::Exhausted;
  int stop_index = -1;  // n at which the terminal status arose
};

std::string status_name(ReductionStatus s);

// One step: sqrt(B^2 - 4AC) in the given variable.
std::optional<Polynomial> reduction_step(const Polynomial& p, const std::string& v);

ReductionTrace denominator_reduce(const Multigraph& g, const std::vector<Label>& order);

}  // namespace splitgraph

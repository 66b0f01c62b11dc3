#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitgraph/kirchhoff.hpp"
#include "splitgraph/multigraph.hpp"

namespace splitgraph {

enum class Shortcut {
  None,
  SmallEdgeCut,          // at most three edges of S form an edge cut
  SmallCycle,            // at most three edges of S form a cycle
  TwoCutDistribution,    // a 2-vertex cut puts two S-edges on each side
  ThreeCutDistribution,  // same after deleting or contracting one S-edge
};
std::string shortcut_name(Shortcut s);

struct SplitReport {
  EdgeSet configuration;
  bool splits = false;
  std::optional<DodgsonSpec> witness;  // a zero Dodgson when splits
  Shortcut shortcut = Shortcut::None;
};

struct SplitOptions {
  bool use_shortcuts = true;
  bool check = false;  // re-verify shortcut verdicts with the full Dodgson scan
  unsigned jobs = 0;   // worker threads, 0 = hardware concurrency
};

// Zero test by common-basis search in two graphic matroids.
bool dodgson_is_zero(const Multigraph& g, const DodgsonSpec& spec);

// Per-graph precomputation shared by all configurations of one sweep.
class SplitContext {
 public:
  explicit SplitContext(const Multigraph& g);

  const Multigraph& graph() const { return g_; }
  std::uint64_t mask_of(const EdgeSet& s) const;
  EdgeSet set_of(std::uint64_t mask) const;

  bool dodgson_is_zero(std::uint64_t i, std::uint64_t j, std::uint64_t k) const;
  bool dodgson_is_zero(const DodgsonSpec& spec) const;

  // Structural guarantee of splitting, with the Dodgson it predicts to vanish.
  Shortcut shortcut(std::uint64_t s, DodgsonSpec* witness) const;

  SplitReport config_splits(std::uint64_t s, const SplitOptions& opt) const;

  // Shortcut witnesses that failed to verify as zero.
  std::size_t shortcut_misses() const { return misses_.load(); }

 private:
  bool is_edge_cut(std::uint64_t c) const;
  bool is_cycle(std::uint64_t c) const;
  std::optional<DodgsonSpec> first_zero(std::uint64_t s) const;

  Multigraph g_;
  int n_ = 0;
  int m_ = 0;
  std::vector<std::pair<int, int>> ends_;
  int base_components_ = 0;
  std::vector<std::uint64_t> two_cut_parts_;            // full components of 2-cuts of g
  std::vector<std::vector<std::uint64_t>> del_parts_;   // same in g minus edge i
  std::vector<std::vector<std::uint64_t>> con_parts_;   // same in g contract edge i
  mutable std::atomic<std::size_t> misses_{0};
};

std::optional<std::pair<Shortcut, DodgsonSpec>> shortcut_predicates(const Multigraph& g, const EdgeSet& s);
SplitReport config_splits(const Multigraph& g, const EdgeSet& s, const SplitOptions& opt = {});

// All 5-configurations in lexicographic order of edge positions.
std::vector<EdgeSet> all_configurations(const Multigraph& g);
std::vector<SplitReport> sweep_configurations(const Multigraph& g, const SplitOptions& opt = {});
bool graph_splits(const Multigraph& g, const SplitOptions& opt = {});
std::vector<EdgeSet> nonsplitting_configs(const Multigraph& g, const SplitOptions& opt = {});

struct EdgeMinorResult {
  Label edge;
  bool deletion_splits = false;
  bool contraction_splits = false;
};

struct MinimalityReport {
  std::vector<EdgeSet> nonsplitting;
  std::vector<EdgeMinorResult> per_edge;
  bool minimal = false;
  std::optional<std::pair<Label, std::string>> reducible_via;  // (edge, "delete" | "contract")
};

MinimalityReport is_minor_minimal_nonsplitting(const Multigraph& g, const SplitOptions& opt = {});

// Classes of configurations under graph automorphisms.
std::vector<std::vector<EdgeSet>> configuration_orbits(const Multigraph& g, const std::vector<EdgeSet>& configs);

}  // namespace splitgraph

#pragma once

#include <cstddef>
#include <vector>

#include "holeminer/graph.hpp"

namespace holeminer {

// Funnel counters for one pattern size. The removal counters satisfy
//   potential - escaping_successor - escaping_cascade == candidate
//   candidate - oversized_closure - exact_closure - closure_cascade == final_count
struct PruneStats {
  std::size_t size = 0;
  std::size_t potential = 0;
  std::size_t candidate = 0;
  std::size_t final_count = 0;

  std::size_t carried_over = 0;        // nodes of the previous candidate list, not re-examined
  std::size_t escaping_successor = 0;  // had a direct successor outside the list
  std::size_t escaping_cascade = 0;    // predecessors removed with them
  std::size_t oversized_closure = 0;   // closure larger than the size
  std::size_t exact_closure = 0;       // closure of exactly the size, emitted
  std::size_t closure_cascade = 0;     // predecessors removed by the two rules above
  std::size_t emitted = 0;             // distinct closures emitted

  // Shape of the subgraph induced by the final list.
  std::size_t final_nodes = 0;
  std::size_t final_edges = 0;
  std::size_t final_components = 0;
};

// Nodes with out-degree below `size`; only they can belong to a blackhole of
// that size.
Membership potential_list(const DirectedGraph& g, std::size_t size);

// Drops every node with a direct successor outside the list, cascading each
// removal to all predecessors until no surviving node points outside.
// Members of `carried` (the previous size's candidate list, or empty) are never
// examined or removed; they must be a successor-closed subset of `potential`.
Membership candidate_list(const DirectedGraph& g, std::size_t size, const Membership& potential,
                          const Membership& carried, PruneStats* stats = nullptr);

struct FinalList {
  Membership alive;
  std::vector<NodeSet> emitted;  // sorted, distinct
};

// Probes each surviving node's closure (capped at `size`) in ascending id order.
// Oversized closures remove the node, closures of exactly `size` are emitted as
// blackholes and remove it; both cascade to predecessors.
FinalList final_list(const DirectedGraph& g, std::size_t size, const Membership& candidate,
                     PruneStats* stats = nullptr);

// One full size step of the pipeline.
struct PruneOutcome {
  Membership potential;
  Membership candidate;
  FinalList final;
  PruneStats stats;
};

PruneOutcome prune(const DirectedGraph& g, std::size_t size, const Membership& carried);

// Runs sizes 1..size, carrying candidate lists forward, and reports the last
// step including the shape of the final list's induced subgraph.
PruneStats prune_stats(const DirectedGraph& g, std::size_t size);

std::size_t count(const Membership& m);

}  // namespace holeminer

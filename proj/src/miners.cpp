#include "holeminer/miners.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "holeminer/errors.hpp"

namespace holeminer {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::BruteForce: return "brute";
    case Algorithm::IBlackhole: return "iblackhole";
    case Algorithm::IBlackholeDC: return "iblackhole-dc";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "brute" || text == "brute-force") return Algorithm::BruteForce;
  if (text == "iblackhole") return Algorithm::IBlackhole;
  if (text == "iblackhole-dc") return Algorithm::IBlackholeDC;
  return std::nullopt;
}

std::size_t PatternResult::total() const {
  std::size_t n = 0;
  for (const auto& p : patterns) n += p.size();
  return n;
}

double PatternResult::total_ms() const {
  return std::accumulate(timings_ms.begin(), timings_ms.end(), 0.0);
}

double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  return std::round(r);
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void require_max_size(std::size_t n) {
  if (n < 1) throw ContractViolation("max size must be at least 1");
}

void guard(double predicted, std::uint64_t limit) {
  if (predicted > static_cast<double>(limit)) throw GuardLimitExceeded(predicted, limit);
}

// Enumerates the k-subsets of a sorted scope in lexicographic order and keeps
// those that are weakly connected with no edge leaving the subset. Marks live
// in a node_count-sized scratch so membership tests are O(1).
class SubsetSearch {
 public:
  explicit SubsetSearch(const DirectedGraph& g) : g_(g), marks_(g.node_count(), 0) {}

  // k-subsets of `scope` whose smallest member is scope[first] for first in
  // [lo, hi).
  void run(std::span<const NodeId> scope, std::size_t k, std::size_t lo, std::size_t hi,
           std::vector<NodeSet>& out) {
    scope_ = scope;
    k_ = k;
    const std::size_t m = scope_.size();
    if (k_ == 0 || k_ > m) return;
    hi = std::min(hi, m - k_ + 1);
    if (lo >= hi) return;
    std::vector<std::size_t> idx(k_);
    std::iota(idx.begin(), idx.end(), lo);
    std::vector<NodeId> members(k_);
    while (true) {
      for (std::size_t j = 0; j < k_; ++j) members[j] = scope_[idx[j]];
      if (accept(members)) out.emplace_back(std::vector<NodeId>(members));

      // Advance to the next combination.
      std::size_t j = k_;
      while (j > 0 && idx[j - 1] == m - k_ + (j - 1)) --j;
      if (j == 0) return;
      ++idx[j - 1];
      if (j == 1 && idx[0] >= hi) return;
      for (std::size_t t = j; t < k_; ++t) idx[t] = idx[t - 1] + 1;
    }
  }

 private:
  bool accept(std::span<const NodeId> members) {
    for (NodeId v : members) marks_[v] = 1;
    const bool ok = closed(members) && connected(members);
    for (NodeId v : members) marks_[v] = 0;
    return ok;
  }

  bool closed(std::span<const NodeId> members) const {
    for (NodeId v : members) {
      for (const Neighbor& s : g_.successors(v)) {
        if (!marks_[s.node]) return false;
      }
    }
    return true;
  }

  bool connected(std::span<const NodeId> members) {
    if (members.size() == 1) return true;
    reached_.assign(members.size(), 0);
    stack_.assign(1, 0);
    reached_[0] = 1;
    std::size_t count = 1;
    auto visit = [&](NodeId u) {
      if (!marks_[u]) return;
      auto k = static_cast<std::size_t>(std::find(members.begin(), members.end(), u) - members.begin());
      if (reached_[k]) return;
      reached_[k] = 1;
      ++count;
      stack_.push_back(k);
    };
    while (!stack_.empty()) {
      NodeId v = members[stack_.back()];
      stack_.pop_back();
      for (const Neighbor& nb : g_.successors(v)) visit(nb.node);
      for (const Neighbor& nb : g_.predecessors(v)) visit(nb.node);
    }
    return count == members.size();
  }

  const DirectedGraph& g_;
  std::span<const NodeId> scope_;
  std::size_t k_ = 0;
  Membership marks_;
  std::vector<std::uint8_t> reached_;
  std::vector<std::size_t> stack_;
};

std::vector<NodeSet> search_subsets(const DirectedGraph& g, std::span<const NodeId> scope,
                                    std::size_t k) {
  std::vector<NodeSet> out;
  SubsetSearch(g).run(scope, k, 0, scope.size(), out);
  return out;
}

// Splits the search by smallest member across worker threads; concatenating
// the slices in order reproduces the sequential output.
std::vector<NodeSet> search_subsets_parallel(const DirectedGraph& g, std::span<const NodeId> scope,
                                             std::size_t k) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || scope.size() < 2 * workers) return search_subsets(g, scope, k);
  const std::size_t slices = workers * 4;
  std::vector<std::vector<NodeSet>> parts(slices);
  std::atomic<std::size_t> next{0};
  const std::size_t step = (scope.size() + slices - 1) / slices;
  auto work = [&] {
    SubsetSearch search(g);
    for (std::size_t s; (s = next.fetch_add(1)) < slices;) {
      search.run(scope, k, s * step, (s + 1) * step, parts[s]);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  std::vector<NodeSet> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::vector<NodeId> members_of(const Membership& m) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < m.size(); ++v) {
    if (m[v]) out.push_back(v);
  }
  return out;
}

void canonicalize(std::vector<NodeSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

enum class FinalSearch { Whole, PerComponent };

PatternResult mine_pruned(const DirectedGraph& g, std::size_t max_size, std::uint64_t guard_limit,
                          FinalSearch mode, bool parallel) {
  require_max_size(max_size);
  PatternResult r;
  r.algorithm = mode == FinalSearch::Whole ? Algorithm::IBlackhole : Algorithm::IBlackholeDC;
  r.max_size = max_size;
  Membership carried;
  for (std::size_t i = 1; i <= max_size; ++i) {
    const auto start = Clock::now();
    PruneOutcome o = prune(g, i, carried);
    carried = o.candidate;
    std::vector<NodeSet> found = std::move(o.final.emitted);
    const std::vector<NodeId> final_nodes = members_of(o.final.alive);
    o.stats.final_nodes = final_nodes.size();

    if (mode == FinalSearch::Whole) {
      guard(choose(final_nodes.size(), i), guard_limit);
      auto hits = search_subsets(g, final_nodes, i);
      std::move(hits.begin(), hits.end(), std::back_inserter(found));
    } else {
      std::vector<NodeSet> comps = weak_components(g, o.final.alive);
      o.stats.final_components = comps.size();
      std::erase_if(comps, [&](const NodeSet& c) { return c.size() < i; });
      for (const NodeSet& c : comps) guard(choose(c.size(), i), guard_limit);

      std::vector<std::vector<NodeSet>> per_comp(comps.size());
      const std::size_t workers =
          parallel ? std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                           comps.size())
                   : 1;
      if (workers <= 1) {
        SubsetSearch search(g);
        for (std::size_t c = 0; c < comps.size(); ++c) {
          search.run(comps[c].members(), i, 0, comps[c].size(), per_comp[c]);
        }
      } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
          pool.emplace_back([&] {
            SubsetSearch search(g);
            for (std::size_t c; (c = next.fetch_add(1)) < comps.size();) {
              search.run(comps[c].members(), i, 0, comps[c].size(), per_comp[c]);
            }
          });
        }
      }
      for (auto& part : per_comp) std::move(part.begin(), part.end(), std::back_inserter(found));
    }
    canonicalize(found);
    r.patterns.push_back(std::move(found));
    r.prune_stats.push_back(o.stats);
    r.timings_ms.push_back(elapsed_ms(start));
  }
  return r;
}

}  // namespace

PatternResult mine_brute_force(const DirectedGraph& g, std::size_t max_size,
                               const std::optional<NodeSet>& scope, std::uint64_t guard_limit,
                               bool parallel) {
  require_max_size(max_size);
  std::vector<NodeId> nodes;
  if (scope) {
    for (NodeId v : *scope) {
      if (v >= g.node_count()) throw RangeError("scope node " + std::to_string(v) + " out of range");
    }
    nodes.assign(scope->begin(), scope->end());
  } else {
    nodes.resize(g.node_count());
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
  }
  double predicted = 0.0;
  for (std::size_t i = 1; i <= max_size; ++i) predicted += choose(nodes.size(), i);
  guard(predicted, guard_limit);

  PatternResult r;
  r.algorithm = Algorithm::BruteForce;
  r.max_size = max_size;
  for (std::size_t i = 1; i <= max_size; ++i) {
    const auto start = Clock::now();
    r.patterns.push_back(parallel ? search_subsets_parallel(g, nodes, i)
                                  : search_subsets(g, nodes, i));
    r.timings_ms.push_back(elapsed_ms(start));
  }
  return r;
}

PatternResult mine_iblackhole(const DirectedGraph& g, std::size_t max_size,
                              std::uint64_t guard_limit) {
  return mine_pruned(g, max_size, guard_limit, FinalSearch::Whole, false);
}

PatternResult mine_iblackhole_dc(const DirectedGraph& g, std::size_t max_size,
                                 std::uint64_t guard_limit, bool parallel) {
  return mine_pruned(g, max_size, guard_limit, FinalSearch::PerComponent, parallel);
}

PatternResult mine(const DirectedGraph& g, const MiningConfig& cfg) {
  require_max_size(cfg.max_size);
  const auto [kind, target] = dualize(cfg.kind, g);
  (void)kind;
  PatternResult r;
  switch (cfg.algorithm) {
    case Algorithm::BruteForce:
      r = mine_brute_force(target, cfg.max_size, std::nullopt, cfg.guard_limit, cfg.parallel);
      break;
    case Algorithm::IBlackhole:
      r = mine_iblackhole(target, cfg.max_size, cfg.guard_limit);
      break;
    case Algorithm::IBlackholeDC:
      r = mine_iblackhole_dc(target, cfg.max_size, cfg.guard_limit, cfg.parallel);
      break;
  }
  r.kind = cfg.kind;
  return r;
}

}  // namespace holeminer

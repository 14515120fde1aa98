#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "numsgp/semigroup.hpp"

namespace numsgp {

/// Largest genus accepted by the enumerators.
inline constexpr int kMaxGenusCap = 40;

/// A node of the semigroup tree rooted at N. The children of S are the
/// semigroups S \ {a} for the minimal generators a > F(S), so every
/// semigroup of genus g appears exactly once at depth g.
struct TreeNode {
  explicit TreeNode(Semigroup s);

  Semigroup semigroup;
  /// Minimal generators strictly greater than the Frobenius number, ascending.
  std::vector<Value> removable_generators;
};

/// One child per removable generator, ordered by the removed generator.
std::vector<TreeNode> children(const TreeNode& node);

/// Calls `visit` once for every semigroup of genus <= max_genus (depth first)
/// and returns how many were visited. Throws BoundTooLarge above
/// kMaxGenusCap and InvalidArgument for a negative bound.
std::uint64_t enumerate_up_to(int max_genus, const std::function<void(const Semigroup&)>& visit);

/// Same traversal spread over `jobs` threads. The tree is cut at a fixed
/// depth; nodes above the cut are visited by the calling thread as worker 0
/// and the subtrees below it are handed out dynamically. `visit` receives
/// the index of the worker running it, in [0, jobs), so callers can keep
/// per-worker state without locking.
std::uint64_t enumerate_up_to_parallel(
    int max_genus, unsigned jobs,
    const std::function<void(unsigned worker, const Semigroup&)>& visit);

}  // namespace numsgp

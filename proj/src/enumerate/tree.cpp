#include "numsgp/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace numsgp {

namespace {

// Depth at which the parallel traversal cuts the tree into tasks. The
// frontier at this depth has a few hundred nodes, enough to keep a desktop
// worth of threads busy despite the skewed subtree sizes.
constexpr int kSplitDepth = 11;

void check_bound(int max_genus) {
  if (max_genus < 0) throw Error(ErrorCode::InvalidArgument, "max genus must be nonnegative");
  if (max_genus > kMaxGenusCap) {
    throw Error(ErrorCode::BoundTooLarge, "max genus " + std::to_string(max_genus) +
                                              " exceeds the cap " + std::to_string(kMaxGenusCap));
  }
}

template <class Visit>
std::uint64_t depth_first(TreeNode root, int max_genus, Visit&& visit) {
  std::uint64_t count = 0;
  std::vector<TreeNode> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    visit(node.semigroup);
    ++count;
    if (node.semigroup.genus() >= max_genus) continue;
    std::vector<TreeNode> kids = children(node);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
  }
  return count;
}

}  // namespace

TreeNode::TreeNode(Semigroup s) : semigroup(std::move(s)) {
  const auto gens = semigroup.min_generators();
  const Value f = semigroup.frobenius();
  std::copy_if(gens.begin(), gens.end(), std::back_inserter(removable_generators),
               [f](Value a) { return a > f; });
}

std::vector<TreeNode> children(const TreeNode& node) {
  std::vector<TreeNode> out;
  out.reserve(node.removable_generators.size());
  for (const Value a : node.removable_generators) {
    out.emplace_back(node.semigroup.with_generator_removed(a));
  }
  return out;
}

std::uint64_t enumerate_up_to(int max_genus, const std::function<void(const Semigroup&)>& visit) {
  check_bound(max_genus);
  return depth_first(TreeNode(Semigroup()), max_genus, visit);
}

std::uint64_t enumerate_up_to_parallel(
    int max_genus, unsigned jobs,
    const std::function<void(unsigned worker, const Semigroup&)>& visit) {
  check_bound(max_genus);
  if (jobs <= 1 || max_genus <= kSplitDepth) {
    return depth_first(TreeNode(Semigroup()), max_genus,
                       [&](const Semigroup& s) { visit(0, s); });
  }

  // Nodes shallower than the cut are visited here; the cut nodes become tasks.
  std::uint64_t count = 0;
  std::vector<TreeNode> frontier;
  std::vector<TreeNode> stack;
  stack.emplace_back(Semigroup());
  while (!stack.empty()) {
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    if (node.semigroup.genus() == kSplitDepth) {
      frontier.push_back(std::move(node));
      continue;
    }
    visit(0, node.semigroup);
    ++count;
    for (TreeNode& child : children(node)) stack.push_back(std::move(child));
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> counts(jobs, 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned worker) {
    try {
      for (std::size_t i = next.fetch_add(1); i < frontier.size(); i = next.fetch_add(1)) {
        counts[worker] += depth_first(std::move(frontier[i]), max_genus,
                                      [&](const Semigroup& s) { visit(worker, s); });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(frontier.size());
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(jobs - 1);
  for (unsigned w = 1; w < jobs; ++w) threads.emplace_back(work, w);
  work(0);
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const std::uint64_t c : counts) count += c;
  return count;
}

}  // namespace numsgp

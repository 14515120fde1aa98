#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include <json.hpp>

#include "numsgp/campaign.hpp"
#include "numsgp/enumerate.hpp"
#include "numsgp/error.hpp"
#include "numsgp/properties.hpp"
#include "oracle.hpp"

using numsgp::ErrorCode;
using numsgp::Semigroup;
using numsgp::TreeNode;
using numsgp::Value;
using V = std::vector<Value>;

namespace {

Semigroup sg(V gens) { return Semigroup::from_generators(gens); }

V to_vec(std::span<const Value> s) { return {s.begin(), s.end()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const numsgp::Error& e) {
    return e.code();
  }
  FAIL("expected numsgp::Error");
  return ErrorCode::InvalidArgument;
}

const std::vector<std::uint64_t> kCounts{1,   1,   2,   4,   7,    12,   23,   39,
                                         67,  118, 204, 343, 592,  1001, 1693, 2857};

std::vector<std::uint64_t> tree_counts(int max_genus) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_genus) + 1, 0);
  numsgp::enumerate_up_to(max_genus, [&](const Semigroup& s) { ++counts[static_cast<std::size_t>(s.genus())]; });
  return counts;
}

std::vector<std::string> all_properties() { return numsgp::parse_property_list("all"); }

}  // namespace

TEST_CASE("children") {
  const TreeNode root{Semigroup()};
  const auto a = numsgp::children(root);
  REQUIRE(a.size() == 1);
  CHECK(a[0].semigroup == sg({2, 3}));

  const auto b = numsgp::children(a[0]);
  REQUIRE(b.size() == 2);
  CHECK(b[0].semigroup == sg({3, 4, 5}));
  CHECK(b[1].semigroup == sg({2, 5}));

  const auto c = numsgp::children(b[0]);
  REQUIRE(c.size() == 3);
  CHECK(c[0].semigroup == sg({4, 5, 6, 7}));
  CHECK(c[1].semigroup == sg({3, 5, 7}));
  CHECK(c[2].semigroup == sg({3, 4}));

  CHECK(TreeNode(sg({3, 5, 7})).removable_generators == V{5, 7});
  CHECK(TreeNode(sg({2, 5})).removable_generators == V{5});
}

TEST_CASE("each child has genus one more than its parent") {
  numsgp::enumerate_up_to(9, [](const Semigroup& s) {
    for (const TreeNode& child : numsgp::children(TreeNode(s))) {
      REQUIRE(child.semigroup.genus() == s.genus() + 1);
      REQUIRE(child.semigroup.frobenius() > s.frobenius());
    }
  });
}

TEST_CASE("enumerate_up_to bounds") {
  CHECK(numsgp::enumerate_up_to(0, [](const Semigroup& s) { CHECK(s.is_trivial()); }) == 1);
  CHECK(code_of([] { numsgp::enumerate_up_to(numsgp::kMaxGenusCap + 1, [](const Semigroup&) {}); }) ==
        ErrorCode::BoundTooLarge);
  CHECK(code_of([] { numsgp::enumerate_up_to(-1, [](const Semigroup&) {}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("tree counts match the subset oracle and its gap sets exactly for g <= 8") {
  std::map<int, std::multiset<V>> tree;
  numsgp::enumerate_up_to(8, [&](const Semigroup& s) { tree[static_cast<int>(s.genus())].insert(s.gaps()); });
  for (int g = 0; g <= 8; ++g) {
    CAPTURE(g);
    const auto sets = oracle::subset_gap_sets(g);
    CHECK(sets.size() == kCounts[static_cast<std::size_t>(g)]);
    const std::multiset<V> expected(sets.begin(), sets.end());
    CHECK(tree[g] == expected);
  }
}

TEST_CASE("tree counts match the backtracking oracle for g <= 15") {
  const auto counts = tree_counts(15);
  for (int g = 0; g <= 15; ++g) {
    CAPTURE(g);
    CHECK(oracle::backtrack_count(g) == kCounts[static_cast<std::size_t>(g)]);
    CHECK(counts[static_cast<std::size_t>(g)] == kCounts[static_cast<std::size_t>(g)]);
  }
}

TEST_CASE("no semigroup is visited twice") {
  std::set<V> seen;
  std::uint64_t visits = 0;
  const auto total = numsgp::enumerate_up_to(12, [&](const Semigroup& s) {
    ++visits;
    seen.insert(to_vec(s.min_generators()));
  });
  CHECK(total == visits);
  CHECK(seen.size() == visits);
}

TEST_CASE("parallel traversal visits the same multiset as the serial one") {
  std::multiset<V> serial;
  numsgp::enumerate_up_to(14, [&](const Semigroup& s) { serial.insert(to_vec(s.min_generators())); });
  for (unsigned jobs : {1u, 2u, 3u, 8u}) {
    CAPTURE(jobs);
    std::mutex mu;
    std::multiset<V> parallel;
    std::atomic<bool> worker_in_range{true};
    const auto total = numsgp::enumerate_up_to_parallel(14, jobs, [&](unsigned w, const Semigroup& s) {
      if (w >= jobs) worker_in_range = false;
      std::lock_guard lock(mu);
      parallel.insert(to_vec(s.min_generators()));
    });
    CHECK(worker_in_range);
    CHECK(total == serial.size());
    CHECK(parallel == serial);
  }
}

TEST_CASE("property list parsing") {
  const auto all = all_properties();
  CHECK(all.size() == numsgp::registered_properties().size());
  CHECK(numsgp::parse_property_list("wilf, type,wilf") == std::vector<std::string>{"type", "wilf"});
  CHECK(code_of([] { numsgp::parse_property_list("bogus"); }) == ErrorCode::UnknownProperty);
  CHECK(code_of([] { numsgp::parse_property_list(""); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { numsgp::find_property("prop"); }) == ErrorCode::UnknownProperty);
}

TEST_CASE("campaign examples") {
  const std::vector<std::string> wilf{"wilf"};
  const auto a = numsgp::run_campaign(12, wilf, 1);
  CHECK(a.passed());
  CHECK(a.property_failures.empty());

  const std::vector<std::string> corr{"correspondence"};
  const auto b = numsgp::run_campaign(12, corr, 3);
  CHECK(b.passed());
  for (std::size_t g = 0; g < 12; ++g) {
    CHECK(b.maxgen_counts_by_genus[g] == b.symmetric_counts_by_genus[g + 1]);
  }

  const auto c = numsgp::run_campaign(
      10,
      numsgp::parse_property_list(
          "reflected_gaps,pf_formula,frobenius_formula,type,canonical_gens,closed_gap_wilf"),
      4);
  CHECK(c.passed());
  CHECK(c.total() == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204);

  const auto d = numsgp::run_campaign(0, all_properties(), 2);
  CHECK(d.counts_by_genus == std::vector<std::uint64_t>{1});
  CHECK(d.passed());

  CHECK(code_of([] { numsgp::run_campaign(numsgp::kMaxGenusCap + 1, std::vector<std::string>{"wilf"}, 1); }) ==
        ErrorCode::BoundTooLarge);
  CHECK(code_of([] { numsgp::run_campaign(3, std::vector<std::string>{"nope"}, 1); }) ==
        ErrorCode::UnknownProperty);
}

TEST_CASE("campaign reports do not depend on the number of workers") {
  const auto props = all_properties();
  const std::string serial = numsgp::report_to_json(numsgp::run_campaign(13, props, 1), false);
  for (unsigned jobs : {2u, 4u, 7u}) {
    CAPTURE(jobs);
    CHECK(numsgp::report_to_json(numsgp::run_campaign(13, props, jobs), false) == serial);
  }
}

TEST_CASE("campaign JSON layout") {
  const auto report = numsgp::run_campaign(4, std::vector<std::string>{"wilf", "type"}, 2);
  const auto j = nlohmann::ordered_json::parse(numsgp::report_to_json(report, true));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "command", "max_genus", "properties",
                                         "verdict", "total", "counts_by_genus",
                                         "maxgen_counts_by_genus", "symmetric_counts_by_genus",
                                         "tallies", "property_failures", "wall_time_ms"});
  CHECK(j["verdict"] == "PASS");
  CHECK(j["counts_by_genus"] == nlohmann::ordered_json({1, 1, 2, 4, 7}));
  CHECK(j["properties"] == nlohmann::ordered_json({"wilf", "type"}));
  const auto untimed = nlohmann::ordered_json::parse(numsgp::report_to_json(report, false));
  CHECK_FALSE(untimed.contains("wall_time_ms"));
}

TEST_CASE("property checks on single semigroups") {
  using Status = numsgp::CheckOutcome::Status;
  const auto& bound = numsgp::find_property("genus_bound");
  // F < m is exactly <m, ..., 2m - 1>, where the bound is expected to fail for m >= 3
  CHECK(bound.check(sg({4, 5, 6, 7})).status == Status::Pass);
  CHECK(bound.check(sg({3, 5})).status == Status::Pass);
  CHECK(bound.check(Semigroup()).status == Status::NotApplicable);

  CHECK(numsgp::find_property("pf_formula").check(sg({3, 4})).status == Status::NotApplicable);
  CHECK(numsgp::find_property("pf_formula").check(sg({3, 5, 7})).status == Status::Pass);
  CHECK(numsgp::find_property("wilf").check(sg({3, 4, 5})).status == Status::Pass);
  CHECK(numsgp::find_property("wilf_chain").check(sg({2, 3})).status == Status::NotApplicable);
  CHECK(numsgp::find_property("correspondence").check(sg({2, 3})).status == Status::Pass);
  for (const auto& p : numsgp::registered_properties()) {
    CAPTURE(p.name);
    CHECK_FALSE(p.statement.empty());
    CHECK(p.check(sg({7, 11, 16, 17, 19})).status != Status::Fail);
  }
}

#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "numsgp/semigroup.hpp"

namespace numsgp {

/// Failures kept per property; the smallest witnesses by (genus, generators).
inline constexpr std::size_t kWitnessesPerProperty = 8;

struct PropertyTally {
  std::string property;
  std::uint64_t checked = 0;  // semigroups inside the property's hypotheses
  std::uint64_t failed = 0;
};

struct PropertyFailure {
  std::string property;
  Value genus = 0;
  std::vector<Value> witness;  // canonical minimal generators; empty for count checks
  std::string detail;
};

struct CampaignReport {
  int max_genus = 0;
  std::vector<std::string> properties;
  std::vector<std::uint64_t> counts_by_genus;
  std::vector<std::uint64_t> maxgen_counts_by_genus;  // a_e = 2g + 1, counting N = <1> at genus 0
  std::vector<std::uint64_t> symmetric_counts_by_genus;
  std::vector<PropertyTally> tallies;
  std::vector<PropertyFailure> property_failures;
  std::chrono::nanoseconds wall_time{0};

  bool passed() const noexcept { return property_failures.empty(); }
  std::uint64_t total() const noexcept;
};

/// Runs every named property on every semigroup of genus <= max_genus.
/// The report is identical for every value of `jobs` apart from wall_time.
/// Throws UnknownProperty, BoundTooLarge.
CampaignReport run_campaign(int max_genus, std::span<const std::string> properties,
                            unsigned jobs);

/// One-line JSON rendering with a fixed key order.
std::string report_to_json(const CampaignReport& report, bool include_timing);

}  // namespace numsgp

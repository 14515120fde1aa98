#include "numsgp/campaign.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "numsgp/enumerate.hpp"
#include "numsgp/maxgen.hpp"
#include "numsgp/properties.hpp"

namespace numsgp {

namespace {

bool witness_less(const PropertyFailure& a, const PropertyFailure& b) {
  return std::tie(a.genus, a.witness, a.detail) < std::tie(b.genus, b.witness, b.detail);
}

// Per-worker partial report. Merging is associative and commutative, so the
// final report does not depend on how the tree was split.
struct Accumulator {
  Accumulator(int max_genus, std::size_t properties)
      : counts(static_cast<std::size_t>(max_genus) + 1, 0),
        maxgen(counts.size(), 0),
        symmetric(counts.size(), 0),
        checked(properties, 0),
        failed(properties, 0),
        witnesses(properties) {}

  void record_failure(std::size_t index, PropertyFailure f) {
    ++failed[index];
    auto& kept = witnesses[index];
    kept.push_back(std::move(f));
    std::sort(kept.begin(), kept.end(), witness_less);
    if (kept.size() > kWitnessesPerProperty) kept.resize(kWitnessesPerProperty);
  }

  void merge(Accumulator&& other) {
    for (std::size_t g = 0; g < counts.size(); ++g) {
      counts[g] += other.counts[g];
      maxgen[g] += other.maxgen[g];
      symmetric[g] += other.symmetric[g];
    }
    for (std::size_t i = 0; i < checked.size(); ++i) {
      checked[i] += other.checked[i];
      failed[i] += other.failed[i];
      auto& kept = witnesses[i];
      std::move(other.witnesses[i].begin(), other.witnesses[i].end(), std::back_inserter(kept));
      std::sort(kept.begin(), kept.end(), witness_less);
      if (kept.size() > kWitnessesPerProperty) kept.resize(kWitnessesPerProperty);
    }
  }

  std::vector<std::uint64_t> counts, maxgen, symmetric;
  std::vector<std::uint64_t> checked, failed;
  std::vector<std::vector<PropertyFailure>> witnesses;
};

}  // namespace

std::uint64_t CampaignReport::total() const noexcept {
  return std::accumulate(counts_by_genus.begin(), counts_by_genus.end(), std::uint64_t{0});
}

CampaignReport run_campaign(int max_genus, std::span<const std::string> properties,
                            unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<const PropertyCheck*> checks;
  for (const std::string& name : properties) checks.push_back(&find_property(name));
  if (max_genus > kMaxGenusCap) {
    throw Error(ErrorCode::BoundTooLarge, "max genus exceeds the cap");
  }
  jobs = std::max(1u, jobs);

  std::vector<Accumulator> partials;
  partials.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) partials.emplace_back(std::max(max_genus, 0), checks.size());

  enumerate_up_to_parallel(max_genus, jobs, [&](unsigned worker, const Semigroup& s) {
    Accumulator& acc = partials[worker];
    const auto g = static_cast<std::size_t>(s.genus());
    ++acc.counts[g];
    if (s.is_trivial()) {
      ++acc.maxgen[g];  // N = <1> has a_e = 1 = 2g + 1 and pairs with <2,3>
    } else {
      if (is_max_generated(s)) ++acc.maxgen[g];
      if (s.is_symmetric()) ++acc.symmetric[g];
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
      CheckOutcome outcome = checks[i]->check(s);
      if (outcome.status == CheckOutcome::Status::NotApplicable) continue;
      ++acc.checked[i];
      if (outcome.status == CheckOutcome::Status::Fail) {
        const auto gens = s.min_generators();
        acc.record_failure(i, PropertyFailure{std::string(checks[i]->name), s.genus(),
                                              {gens.begin(), gens.end()},
                                              std::move(outcome.detail)});
      }
    }
  });

  Accumulator total = std::move(partials.front());
  for (std::size_t w = 1; w < partials.size(); ++w) total.merge(std::move(partials[w]));

  CampaignReport report;
  report.max_genus = max_genus;
  report.properties.assign(properties.begin(), properties.end());
  report.counts_by_genus = total.counts;
  report.maxgen_counts_by_genus = total.maxgen;
  report.symmetric_counts_by_genus = total.symmetric;

  for (std::size_t i = 0; i < checks.size(); ++i) {
    PropertyTally tally{std::string(checks[i]->name), total.checked[i], total.failed[i]};
    std::vector<PropertyFailure> extra;
    if (checks[i]->name == "correspondence") {
      // the bijection forces equal counts on both sides
      for (int g = 0; g < max_genus; ++g) {
        const auto gi = static_cast<std::size_t>(g);
        ++tally.checked;
        if (total.maxgen[gi] != total.symmetric[gi + 1]) {
          ++tally.failed;
          extra.push_back(PropertyFailure{
              tally.property, g, {},
              "max-generated at genus " + std::to_string(g) + ": " +
                  std::to_string(total.maxgen[gi]) + ", symmetric at genus " +
                  std::to_string(g + 1) + ": " + std::to_string(total.symmetric[gi + 1])});
        }
      }
    }
    for (PropertyFailure& f : total.witnesses[i]) report.property_failures.push_back(std::move(f));
    for (PropertyFailure& f : extra) report.property_failures.push_back(std::move(f));
    report.tallies.push_back(std::move(tally));
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

std::string report_to_json(const CampaignReport& report, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = "1";
  j["command"] = "verify";
  j["max_genus"] = report.max_genus;
  j["properties"] = report.properties;
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  j["total"] = report.total();
  j["counts_by_genus"] = report.counts_by_genus;
  j["maxgen_counts_by_genus"] = report.maxgen_counts_by_genus;
  j["symmetric_counts_by_genus"] = report.symmetric_counts_by_genus;
  ordered_json tallies = ordered_json::array();
  for (const PropertyTally& t : report.tallies) {
    ordered_json row;
    row["property"] = t.property;
    row["checked"] = t.checked;
    row["failed"] = t.failed;
    tallies.push_back(std::move(row));
  }
  j["tallies"] = std::move(tallies);
  ordered_json failures = ordered_json::array();
  for (const PropertyFailure& f : report.property_failures) {
    ordered_json row;
    row["property"] = f.property;
    row["genus"] = f.genus;
    row["witness"] = f.witness;
    row["detail"] = f.detail;
    failures.push_back(std::move(row));
  }
  j["property_failures"] = std::move(failures);
  if (include_timing) {
    j["wall_time_ms"] = std::chrono::duration<double, std::milli>(report.wall_time).count();
  }
  return j.dump();
}

}  // namespace numsgp

// numsgp: command-line front end over the C interface.
//
//   numsgp info 3,5,7
//   numsgp check wilf 3,5,7
//   numsgp construct close-gap 3,5,7
//   numsgp construct notiz-family 4 5
//   numsgp verify --max-genus 12 --properties all --jobs 4 --out report.json
//
// Exit codes: 0 pass, 1 property failure, 2 usage error, 3 invalid
// semigroup, 4 violated precondition, 5 internal error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numsgp/numsgp.h"

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kPass = 0,
  kPropertyFailure = 1,
  kUsage = 2,
  kInvalidSemigroup = 3,
  kPrecondition = 4,
  kInternal = 5,
};

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(numsgp_status status) {
  switch (status) {
    case NUMSGP_OK: return kPass;
    case NUMSGP_ERR_INVALID_ARGUMENT:
    case NUMSGP_ERR_EMPTY_INPUT:
    case NUMSGP_ERR_NON_COPRIME:
    case NUMSGP_ERR_TOO_LARGE: return kInvalidSemigroup;
    case NUMSGP_ERR_IS_TRIVIAL:
    case NUMSGP_ERR_NOT_MAX_GENERATED:
    case NUMSGP_ERR_NOT_SYMMETRIC:
    case NUMSGP_ERR_EMBEDDING_DIM_TOO_SMALL:
    case NUMSGP_ERR_NOT_A_GAP_SET:
    case NUMSGP_ERR_GAP_TOO_SMALL:
    case NUMSGP_ERR_BAD_PARAMETERS: return kPrecondition;
    case NUMSGP_ERR_BOUND_TOO_LARGE:
    case NUMSGP_ERR_UNKNOWN_PROPERTY: return kUsage;
    case NUMSGP_ERR_BUFFER_TOO_SMALL:
    case NUMSGP_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(numsgp_status status) {
  if (status != NUMSGP_OK) {
    throw CliError{exit_code_for(status),
                   std::string(numsgp_status_name(status)) + ": " + numsgp_last_error()};
  }
}

// RAII owner for semigroup handles.
class Handle {
 public:
  explicit Handle(numsgp_semigroup* raw = nullptr) : raw_(raw) {}
  Handle(Handle&& other) noexcept : raw_(std::exchange(other.raw_, nullptr)) {}
  Handle& operator=(Handle&& other) noexcept {
    std::swap(raw_, other.raw_);
    return *this;
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { numsgp_semigroup_destroy(raw_); }

  const numsgp_semigroup* get() const { return raw_; }
  numsgp_semigroup** out() { return &raw_; }

 private:
  numsgp_semigroup* raw_;
};

template <class Fill>
std::vector<int64_t> fetch(Fill fill) {
  size_t length = 0;
  check(fill(nullptr, 0, &length));
  std::vector<int64_t> values(length);
  check(fill(values.data(), values.size(), &length));
  return values;
}

std::vector<int64_t> list(const Handle& s, numsgp_list_kind kind) {
  return fetch([&](int64_t* out, size_t cap, size_t* len) {
    return numsgp_semigroup_list(s.get(), kind, out, cap, len);
  });
}

numsgp_invariants invariants(const Handle& s) {
  numsgp_invariants inv{};
  check(numsgp_semigroup_invariants(s.get(), &inv));
  return inv;
}

bool flag(numsgp_status (*fn)(const numsgp_semigroup*, int*), const Handle& s) {
  int value = 0;
  check(fn(s.get(), &value));
  return value != 0;
}

ordered_json rational(numsgp_rational r) {
  ordered_json j;
  j["num"] = r.num;
  j["den"] = r.den;
  return j;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

int64_t parse_positive(std::string_view token) {
  const std::string t = trim(token);
  int64_t value = 0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || end != t.data() + t.size() || value < 1) {
    throw CliError{kUsage, "expected a positive integer, got '" + std::string(token) + "'"};
  }
  return value;
}

// "a1,a2,..." possibly split across several shell words ("3, 5, 7").
std::vector<int64_t> parse_generators(const std::vector<std::string>& words) {
  std::string joined;
  for (const std::string& w : words) joined += w + ' ';
  std::vector<int64_t> values;
  std::string_view rest = joined;
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(parse_positive(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return values;
}

Handle make_semigroup(const std::vector<int64_t>& gens) {
  Handle h;
  check(numsgp_semigroup_create(gens.data(), gens.size(), h.out()));
  return h;
}

ordered_json summary(const Handle& s) {
  const numsgp_invariants inv = invariants(s);
  ordered_json j;
  j["generators"] = list(s, NUMSGP_LIST_GENERATORS);
  j["multiplicity"] = inv.multiplicity;
  j["embedding_dimension"] = inv.embedding_dimension;
  j["genus"] = inv.genus;
  j["frobenius"] = inv.frobenius;
  j["conductor"] = inv.conductor;
  return j;
}

ordered_json record(const std::string& command, const std::vector<int64_t>& input,
                    ordered_json result, const std::string& provenance) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = input;
  j["result"] = std::move(result);
  j["provenance"] = provenance;
  return j;
}

std::string flatten(const ordered_json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array() && std::all_of(value.begin(), value.end(),
                                      [](const ordered_json& v) { return v.is_number(); })) {
    std::string out;
    for (const auto& v : value) {
      if (!out.empty()) out += ' ';
      out += v.dump();
    }
    return out;
  }
  return value.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_record(const ordered_json& rec, const std::string& format) {
  const ordered_json& result = rec["result"];
  if (format == "jsonl") {
    std::cout << rec.dump() << '\n';
  } else if (format == "csv") {
    std::string header = "command,input";
    std::string row = csv_field(rec["command"].get<std::string>()) + "," + csv_field(flatten(rec["input"]));
    for (const auto& [key, value] : result.items()) {
      header += "," + key;
      row += "," + csv_field(flatten(value));
    }
    std::cout << header << '\n' << row << '\n';
  } else {
    std::size_t width = 5;
    for (const auto& [key, value] : result.items()) width = std::max(width, key.size());
    std::cout << std::left << std::setw(static_cast<int>(width)) << "input" << "  "
              << flatten(rec["input"]) << '\n';
    for (const auto& [key, value] : result.items()) {
      std::cout << std::setw(static_cast<int>(width)) << key << "  " << flatten(value) << '\n';
    }
  }
}

// ---------------------------------------------------------------- info

int cmd_info(const std::vector<std::string>& words, const std::string& format) {
  const std::vector<int64_t> input = parse_generators(words);
  const Handle s = make_semigroup(input);
  const numsgp_invariants inv = invariants(s);

  ordered_json r = summary(s);
  r["gaps"] = list(s, NUMSGP_LIST_GAPS);
  r["apery"] = list(s, NUMSGP_LIST_APERY);
  if (inv.is_trivial) {
    r["sporadic"] = nullptr;
    r["pseudo_frobenius"] = nullptr;
    r["type"] = nullptr;
    r["is_symmetric"] = nullptr;
    r["is_max_generated"] = nullptr;
  } else {
    r["sporadic"] = list(s, NUMSGP_LIST_SPORADIC);
    r["pseudo_frobenius"] = list(s, NUMSGP_LIST_PSEUDO_FROBENIUS);
    int64_t type = 0;
    check(numsgp_type_number(s.get(), &type));
    r["type"] = type;
    r["is_symmetric"] = flag(numsgp_is_symmetric, s);
    r["is_max_generated"] = flag(numsgp_is_max_generated, s);
  }
  print_record(record("info", input, std::move(r),
                      "invariants of S: multiplicity, embedding dimension, genus, Frobenius "
                      "number, gaps, sporadic elements, Apery set, pseudo-Frobenius elements"),
               format);
  return kPass;
}

// ---------------------------------------------------------------- check

int cmd_check(const std::string& property, const std::vector<std::string>& words,
              const std::string& format) {
  const std::vector<int64_t> input = parse_generators(words);
  const Handle s = make_semigroup(input);

  std::string statement;
  for (size_t i = 0; i < numsgp_property_count(); ++i) {
    if (property == numsgp_property_name(i)) statement = numsgp_property_statement(i);
  }
  numsgp_check_status status = NUMSGP_CHECK_NOT_APPLICABLE;
  char detail[512] = {0};
  check(numsgp_check_property(s.get(), property.c_str(), &status, detail, sizeof detail));

  ordered_json r;
  r["property"] = property;
  r["generators"] = list(s, NUMSGP_LIST_GENERATORS);
  r["status"] = status == NUMSGP_CHECK_PASS   ? "pass"
                : status == NUMSGP_CHECK_FAIL ? "fail"
                                              : "not_applicable";
  r["detail"] = std::string(detail);
  print_record(record("check", input, std::move(r), statement), format);
  if (status == NUMSGP_CHECK_NOT_APPLICABLE) {
    std::cerr << "numsgp: " << property << " does not apply to this semigroup\n";
    return kPrecondition;
  }
  return status == NUMSGP_CHECK_PASS ? kPass : kPropertyFailure;
}

// ---------------------------------------------------------------- construct

ordered_json wilf_json(const Handle& s) {
  numsgp_wilf_info w{};
  check(numsgp_wilf_report(s.get(), &w));
  ordered_json j;
  j["lhs"] = rational(w.lhs);
  j["rhs"] = rational(w.rhs);
  j["margin"] = rational(w.margin);
  j["holds"] = w.holds != 0;
  return j;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& words,
                  const std::string& format) {
  std::vector<int64_t> input;
  ordered_json r;
  r["kind"] = kind;
  std::string provenance;

  if (kind == "notiz-family" || kind == "interval-family") {
    if (words.size() != 2) throw CliError{kUsage, kind + " expects two integers: m f"};
    input = {parse_positive(words[0]), parse_positive(words[1])};
    Handle s;
    check(numsgp_interval_family(input[0], input[1], s.out()));
    const numsgp_invariants inv = invariants(s);
    const std::vector<int64_t> gens = list(s, NUMSGP_LIST_GENERATORS);
    r["semigroup"] = summary(s);
    r["frobenius_is_f"] = inv.frobenius == input[1];
    r["a_e_is_f_plus_m"] = gens.back() == input[0] + input[1];
    r["is_max_generated"] = flag(numsgp_is_max_generated, s);
    r["f_is_m_plus_1"] = input[1] == input[0] + 1;
    provenance = "<m, f+1, ..., f+m> with f > m, m not dividing f has F = f and a_e = f + m; "
                 "a_e = 2g + 1 iff f = m + 1";
  } else {
    input = parse_generators(words);
    const Handle s = make_semigroup(input);
    const numsgp_invariants before = invariants(s);
    const std::vector<int64_t> gens = list(s, NUMSGP_LIST_GENERATORS);
    Handle t;
    if (kind == "to-symmetric") {
      check(numsgp_to_symmetric(s.get(), t.out()));
      const numsgp_invariants after = invariants(t);
      r["semigroup"] = summary(t);
      r["is_symmetric"] = flag(numsgp_is_symmetric, t);
      r["genus_is_g_plus_1"] = after.genus == before.genus + 1;
      r["frobenius_is_a_e"] = after.frobenius == gens.back();
      r["same_multiplicity"] = after.multiplicity == before.multiplicity;
      provenance = "a_e = 2g + 1 iff S \\ {a_e} is symmetric; then S \\ {a_e} = <a_1..a_(e-1)> "
                   "for e > 2 and <2, a_e + 2> for e = 2";
    } else if (kind == "from-symmetric") {
      check(numsgp_from_symmetric(s.get(), t.out()));
      const numsgp_invariants after = invariants(t);
      Handle back;
      check(numsgp_to_symmetric(t.get(), back.out()));
      r["semigroup"] = summary(t);
      r["is_max_generated"] = flag(numsgp_is_max_generated, t);
      r["genus_is_g_minus_1"] = after.genus + 1 == before.genus;
      r["round_trip"] = numsgp_semigroup_equal(back.get(), s.get()) != 0;
      provenance = "S' -> S' u {F(S')} inverts S -> S \\ {a_e} on symmetric semigroups";
    } else if (kind == "close-gap") {
      check(numsgp_close_largest_gap(s.get(), t.out()));
      const numsgp_invariants after = invariants(t);
      r["semigroup"] = summary(t);
      r["genus_is_g_minus_1"] = after.genus + 1 == before.genus;
      r["same_embedding_dimension"] = after.embedding_dimension == before.embedding_dimension;
      r["wilf"] = after.is_trivial ? ordered_json(nullptr) : wilf_json(t);
      if (gens.back() > 2 * gens.front()) {
        const auto d = fetch([&](int64_t* out, size_t cap, size_t* len) {
          return numsgp_distinguished_set_for_closed(s.get(), out, cap, len);
        });
        int distinguished = 0;
        check(numsgp_is_distinguished(t.get(), d.data(), d.size(), &distinguished));
        r["distinguished_set"] = d;
        r["distinguished_set_is_pf"] = d == list(t, NUMSGP_LIST_PSEUDO_FROBENIUS);
        r["is_distinguished"] = distinguished != 0;
      } else {
        r["distinguished_set"] = nullptr;
      }
      provenance = "T = S u {a_e - a_1} satisfies Wilf's inequality; for a_e > 2a_1 it is "
                   "minimally generated by a_1..a_(e-1), a_e - a_1";
    } else {
      throw CliError{kUsage, "unknown construction '" + kind +
                                 "' (to-symmetric, from-symmetric, close-gap, notiz-family or interval-family)"};
    }
  }
  print_record(record("construct", input, std::move(r), provenance), format);
  return kPass;
}

// ---------------------------------------------------------------- verify

struct CampaignHandle {
  numsgp_campaign* raw = nullptr;
  ~CampaignHandle() { numsgp_campaign_destroy(raw); }
};

std::vector<uint64_t> counts(const CampaignHandle& c, numsgp_count_kind kind) {
  size_t length = 0;
  check(numsgp_campaign_counts(c.raw, kind, nullptr, 0, &length));
  std::vector<uint64_t> out(length);
  check(numsgp_campaign_counts(c.raw, kind, out.data(), out.size(), &length));
  return out;
}

int cmd_verify(int max_genus, const std::string& properties, unsigned jobs,
               const std::string& out_path, const std::string& format) {
  if (jobs == 0) throw CliError{kUsage, "--jobs must be at least 1"};
  CampaignHandle c;
  check(numsgp_campaign_run(max_genus, properties.c_str(), jobs, &c.raw));

  size_t length = 0;
  check(numsgp_campaign_json(c.raw, 1, nullptr, 0, &length));
  std::string json(length + 1, '\0');
  check(numsgp_campaign_json(c.raw, 1, json.data(), json.size(), &length));
  json.resize(length);

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw CliError{kUsage, "cannot open '" + out_path + "' for writing"};
    file << json << '\n';
  }

  const auto all = counts(c, NUMSGP_COUNT_ALL);
  const auto maxgen = counts(c, NUMSGP_COUNT_MAX_GENERATED);
  const auto symmetric = counts(c, NUMSGP_COUNT_SYMMETRIC);
  const bool passed = numsgp_campaign_passed(c.raw) != 0;

  if (format == "jsonl") {
    std::cout << json << '\n';
  } else if (format == "csv") {
    std::cout << "genus,count,max_generated,symmetric\n";
    for (size_t g = 0; g < all.size(); ++g) {
      std::cout << g << ',' << all[g] << ',' << maxgen[g] << ',' << symmetric[g] << '\n';
    }
  } else {
    std::cout << "genus        count  max-generated    symmetric\n";
    for (size_t g = 0; g < all.size(); ++g) {
      std::cout << std::right << std::setw(5) << g << std::setw(13) << all[g] << std::setw(15)
                << maxgen[g] << std::setw(13) << symmetric[g] << '\n';
    }
    for (size_t i = 0; i < numsgp_campaign_failure_count(c.raw); ++i) {
      const char* property = nullptr;
      const char* detail = nullptr;
      const int64_t* witness = nullptr;
      size_t witness_length = 0;
      int64_t genus = 0;
      check(numsgp_campaign_failure(c.raw, i, &property, &genus, &witness, &witness_length,
                                    &detail));
      std::cout << "FAIL " << property << " genus " << genus << " <";
      for (size_t k = 0; k < witness_length; ++k) std::cout << (k ? "," : "") << witness[k];
      std::cout << "> " << detail << '\n';
    }
    std::cout << (passed ? "PASS" : "FAIL") << " (" << numsgp_campaign_wall_time_ms(c.raw)
              << " ms)\n";
  }
  return passed ? kPass : kPropertyFailure;
}

void apply_environment() {
  const char* cap = std::getenv("NUMSGP_MAX_CONDUCTOR");
  if (cap == nullptr) return;
  const int64_t value = parse_positive(cap);
  check(numsgp_set_max_conductor(value));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroup invariants, constructions and exhaustive verification"};
  app.require_subcommand(1);

  std::string format;
  bool json = false;
  auto add_format = [&](CLI::App* sub, const char* fallback) {
    sub->add_option("--format", format, std::string("Output format (default ") + fallback + ")")
        ->check(CLI::IsMember({"jsonl", "csv", "table"}));
    sub->add_flag("--json", json, "Shorthand for --format jsonl");
  };

  std::vector<std::string> words;
  auto* info = app.add_subcommand("info", "Invariants of the semigroup generated by a1,a2,...");
  info->add_option("generators", words, "Comma-separated generators")->required();
  add_format(info, "jsonl");

  std::string property;
  auto* check_cmd = app.add_subcommand("check", "Evaluate one named property on a semigroup");
  check_cmd->add_option("property", property, "Property name")->required();
  check_cmd->add_option("generators", words, "Comma-separated generators")->required();
  add_format(check_cmd, "jsonl");

  std::string kind;
  auto* construct = app.add_subcommand("construct", "Build a derived semigroup");
  construct->add_option("kind", kind,
                        "to-symmetric | from-symmetric | close-gap | notiz-family (alias interval-family)")
      ->required();
  construct->add_option("args", words, "Generators, or 'm f' for notiz-family")->required();
  add_format(construct, "jsonl");

  int max_genus = 12;
  std::string properties = "all";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Check properties on every semigroup up to a genus");
  verify->add_option("--max-genus", max_genus, "Largest genus to enumerate")->check(CLI::NonNegativeNumber);
  verify->add_option("--properties", properties, "'all' or a comma-separated list");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--out", out_path, "Write the JSON report here");
  add_format(verify, "table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    apply_environment();
    if (json) format = "jsonl";
    if (*verify) {
      return cmd_verify(max_genus, properties, jobs, out_path, format.empty() ? "table" : format);
    }
    if (format.empty()) format = "jsonl";
    if (*info) return cmd_info(words, format);
    if (*check_cmd) return cmd_check(property, words, format);
    return cmd_construct(kind, words, format);
  } catch (const CliError& e) {
    std::cerr << "numsgp: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "numsgp: " << e.what() << '\n';
    return kInternal;
  }
}

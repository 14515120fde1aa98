#include "numsgp/numsgp.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "numsgp/campaign.hpp"
#include "numsgp/enumerate.hpp"
#include "numsgp/maxgen.hpp"
#include "numsgp/properties.hpp"

struct numsgp_semigroup {
  numsgp::Semigroup value;
};

struct numsgp_campaign {
  numsgp::CampaignReport report;
  std::string json_with_timing;
  std::string json_without_timing;
};

namespace {

using numsgp::ErrorCode;

thread_local std::string t_last_error;

numsgp_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return NUMSGP_ERR_INVALID_ARGUMENT;
    case ErrorCode::EmptyInput: return NUMSGP_ERR_EMPTY_INPUT;
    case ErrorCode::NonCoprime: return NUMSGP_ERR_NON_COPRIME;
    case ErrorCode::TooLarge: return NUMSGP_ERR_TOO_LARGE;
    case ErrorCode::IsTrivial: return NUMSGP_ERR_IS_TRIVIAL;
    case ErrorCode::NotMaxGenerated: return NUMSGP_ERR_NOT_MAX_GENERATED;
    case ErrorCode::NotSymmetric: return NUMSGP_ERR_NOT_SYMMETRIC;
    case ErrorCode::EmbeddingDimTooSmall: return NUMSGP_ERR_EMBEDDING_DIM_TOO_SMALL;
    case ErrorCode::NotAGapSet: return NUMSGP_ERR_NOT_A_GAP_SET;
    case ErrorCode::GapTooSmall: return NUMSGP_ERR_GAP_TOO_SMALL;
    case ErrorCode::BadParameters: return NUMSGP_ERR_BAD_PARAMETERS;
    case ErrorCode::BoundTooLarge: return NUMSGP_ERR_BOUND_TOO_LARGE;
    case ErrorCode::UnknownProperty: return NUMSGP_ERR_UNKNOWN_PROPERTY;
  }
  return NUMSGP_ERR_INTERNAL;
}

numsgp_status fail(numsgp_status status, std::string message) {
  t_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
numsgp_status guarded(Fn&& fn) {
  t_last_error.clear();
  try {
    return fn();
  } catch (const numsgp::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NUMSGP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NUMSGP_ERR_INTERNAL, e.what());
  }
}

#define NUMSGP_REQUIRE(cond)                                                            \
  do {                                                                                  \
    if (!(cond)) return fail(NUMSGP_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

template <class T, class Range>
numsgp_status copy_out(const Range& values, T* out, size_t capacity, size_t* length) {
  NUMSGP_REQUIRE(length != nullptr);
  NUMSGP_REQUIRE(out != nullptr || capacity == 0);
  *length = values.size();
  const size_t n = std::min(capacity, values.size());
  std::copy_n(values.begin(), n, out);
  if (capacity < values.size() && !(out == nullptr && capacity == 0)) {
    return fail(NUMSGP_ERR_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(capacity) + " of " +
                    std::to_string(values.size()) + " values");
  }
  return NUMSGP_OK;
}

numsgp_rational to_c(const numsgp::Rational& r) { return {r.num(), r.den()}; }

numsgp_status emit(numsgp::Semigroup value, numsgp_semigroup** out) {
  *out = new numsgp_semigroup{std::move(value)};
  return NUMSGP_OK;
}

}  // namespace

extern "C" {

const char* numsgp_version(void) { return "1.0.0"; }

const char* numsgp_status_name(numsgp_status status) {
  switch (status) {
    case NUMSGP_OK: return "OK";
    case NUMSGP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case NUMSGP_ERR_EMPTY_INPUT: return "EmptyInput";
    case NUMSGP_ERR_NON_COPRIME: return "NonCoprime";
    case NUMSGP_ERR_TOO_LARGE: return "TooLarge";
    case NUMSGP_ERR_IS_TRIVIAL: return "IsTrivial";
    case NUMSGP_ERR_NOT_MAX_GENERATED: return "NotMaxGenerated";
    case NUMSGP_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case NUMSGP_ERR_EMBEDDING_DIM_TOO_SMALL: return "EmbeddingDimTooSmall";
    case NUMSGP_ERR_NOT_A_GAP_SET: return "NotAGapSet";
    case NUMSGP_ERR_GAP_TOO_SMALL: return "GapTooSmall";
    case NUMSGP_ERR_BAD_PARAMETERS: return "BadParameters";
    case NUMSGP_ERR_BOUND_TOO_LARGE: return "BoundTooLarge";
    case NUMSGP_ERR_UNKNOWN_PROPERTY: return "UnknownProperty";
    case NUMSGP_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case NUMSGP_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* numsgp_last_error(void) { return t_last_error.c_str(); }

int64_t numsgp_max_conductor(void) { return numsgp::max_conductor(); }

numsgp_status numsgp_set_max_conductor(int64_t cap) {
  return guarded([&] {
    numsgp::set_max_conductor(cap);
    return NUMSGP_OK;
  });
}

int numsgp_max_genus_cap(void) { return numsgp::kMaxGenusCap; }

numsgp_status numsgp_semigroup_create(const int64_t* generators, size_t count,
                                      numsgp_semigroup** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(out != nullptr);
    NUMSGP_REQUIRE(generators != nullptr || count == 0);
    return emit(numsgp::Semigroup::from_generators({generators, count}), out);
  });
}

numsgp_status numsgp_semigroup_from_gaps(const int64_t* gaps, size_t count,
                                         numsgp_semigroup** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(out != nullptr);
    NUMSGP_REQUIRE(gaps != nullptr || count == 0);
    return emit(numsgp::Semigroup::from_gaps({gaps, count}), out);
  });
}

numsgp_status numsgp_semigroup_clone(const numsgp_semigroup* s, numsgp_semigroup** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    return emit(s->value, out);
  });
}

void numsgp_semigroup_destroy(numsgp_semigroup* s) { delete s; }

numsgp_status numsgp_semigroup_invariants(const numsgp_semigroup* s, numsgp_invariants* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    const numsgp::Semigroup& v = s->value;
    *out = {v.multiplicity(), v.embedding_dimension(), v.genus(),
            v.frobenius(),    v.conductor(),           v.is_trivial() ? 1 : 0};
    return NUMSGP_OK;
  });
}

int numsgp_semigroup_contains(const numsgp_semigroup* s, int64_t n) {
  return s != nullptr && s->value.contains(n) ? 1 : 0;
}

int numsgp_semigroup_equal(const numsgp_semigroup* a, const numsgp_semigroup* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

numsgp_status numsgp_semigroup_list(const numsgp_semigroup* s, numsgp_list_kind kind,
                                    int64_t* out, size_t capacity, size_t* length) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr);
    const numsgp::Semigroup& v = s->value;
    switch (kind) {
      case NUMSGP_LIST_GENERATORS: return copy_out(v.min_generators(), out, capacity, length);
      case NUMSGP_LIST_GAPS: return copy_out(v.gaps(), out, capacity, length);
      case NUMSGP_LIST_SPORADIC: return copy_out(v.sporadic_elements(), out, capacity, length);
      case NUMSGP_LIST_APERY: return copy_out(v.apery_set().sorted(), out, capacity, length);
      case NUMSGP_LIST_PSEUDO_FROBENIUS:
        return copy_out(v.pseudo_frobenius(), out, capacity, length);
      case NUMSGP_LIST_CANONICAL_OFFSETS:
        return copy_out(numsgp::canonical_ideal(v).offsets(), out, capacity, length);
    }
    return fail(NUMSGP_ERR_INVALID_ARGUMENT, "unknown list kind");
  });
}

numsgp_status numsgp_type_number(const numsgp_semigroup* s, int64_t* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    *out = s->value.type_number();
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_is_symmetric(const numsgp_semigroup* s, int* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    *out = s->value.is_symmetric();
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_is_symmetric_by_reflection(const numsgp_semigroup* s, int* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    *out = s->value.is_symmetric_by_reflection();
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_is_max_generated(const numsgp_semigroup* s, int* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    *out = numsgp::is_max_generated(s->value);
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_reflection_map(const numsgp_semigroup* s, int64_t* out, size_t capacity,
                                    size_t* length) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr);
    std::vector<int64_t> flat;
    for (const auto& [n, image] : numsgp::reflection_map(s->value)) {
      flat.push_back(n);
      flat.push_back(image);
    }
    return copy_out(flat, out, capacity, length);
  });
}

numsgp_status numsgp_to_symmetric(const numsgp_semigroup* s, numsgp_semigroup** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    return emit(numsgp::to_symmetric(s->value), out);
  });
}

numsgp_status numsgp_from_symmetric(const numsgp_semigroup* s, numsgp_semigroup** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    return emit(numsgp::from_symmetric(s->value), out);
  });
}

numsgp_status numsgp_close_largest_gap(const numsgp_semigroup* s, numsgp_semigroup** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    return emit(numsgp::close_largest_gap(s->value), out);
  });
}

numsgp_status numsgp_interval_family(int64_t m, int64_t f, numsgp_semigroup** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(out != nullptr);
    return emit(numsgp::interval_family(m, f), out);
  });
}

numsgp_status numsgp_frobenius_formula_check(const numsgp_semigroup* s, int* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    *out = numsgp::frobenius_formula_check(s->value);
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_pf_formula_check(const numsgp_semigroup* s, int* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    *out = numsgp::pf_formula_check(s->value);
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_reflected_gaps(const numsgp_semigroup* s, int64_t n, int64_t* out,
                                    size_t capacity, size_t* length) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr);
    return copy_out(numsgp::reflected_gaps(n, s->value), out, capacity, length);
  });
}

numsgp_status numsgp_reflected_gap_report(const numsgp_semigroup* s,
                                          numsgp_reflected_gap_info* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    const numsgp::ReflectedGapReport r = numsgp::reflected_gap_report(s->value);
    *out = {r.cond_i, r.cond_ii, r.cond_iii, r.ae_equals_f_plus_m, r.rg_f.size(),
            r.rg_f_plus_m.size()};
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_reflected_gap_report_list(const numsgp_semigroup* s,
                                               numsgp_reflected_gap_list which, int64_t* out,
                                               size_t capacity, size_t* length) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr);
    const numsgp::ReflectedGapReport r = numsgp::reflected_gap_report(s->value);
    switch (which) {
      case NUMSGP_RG_F: return copy_out(r.rg_f, out, capacity, length);
      case NUMSGP_RG_F_PLUS_M: return copy_out(r.rg_f_plus_m, out, capacity, length);
      case NUMSGP_RG_APERY_MINUS: return copy_out(r.apery_minus, out, capacity, length);
    }
    return fail(NUMSGP_ERR_INVALID_ARGUMENT, "unknown reflected gap list");
  });
}

numsgp_status numsgp_wilf_report(const numsgp_semigroup* s, numsgp_wilf_info* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    const numsgp::WilfReport r = numsgp::wilf_report(s->value);
    *out = {r.e,          r.g,          r.frobenius,     r.m, to_c(r.lhs), to_c(r.rhs),
            to_c(r.margin), r.holds ? 1 : 0, r.sporadic_form ? 1 : 0};
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_inequality_chain(const numsgp_semigroup* s, numsgp_inequality_info* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    const numsgp::InequalityChain c = numsgp::maxgen_inequality_chain(s->value);
    *out = {c.ratio_form, c.product_form, c.genus_form, c.symmetric_form, c.wilf};
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_genus_lower_bound(const numsgp_semigroup* s, numsgp_genus_bound* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    const numsgp::GenusBoundReport r = numsgp::genus_lower_bound(s->value);
    *out = {r.frobenius_exceeds_multiplicity, r.counting_bound, r.bound_holds, to_c(r.bound)};
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_is_distinguished(const numsgp_semigroup* s, const int64_t* d, size_t count,
                                      int* out) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && out != nullptr);
    NUMSGP_REQUIRE(d != nullptr || count == 0);
    *out = numsgp::is_distinguished({d, count}, s->value);
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_distinguished_set_for_closed(const numsgp_semigroup* s, int64_t* out,
                                                  size_t capacity, size_t* length) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr);
    return copy_out(numsgp::distinguished_set_for_closed(s->value), out, capacity, length);
  });
}

size_t numsgp_property_count(void) { return numsgp::registered_properties().size(); }

const char* numsgp_property_name(size_t index) {
  const auto props = numsgp::registered_properties();
  return index < props.size() ? props[index].name.data() : nullptr;
}

const char* numsgp_property_statement(size_t index) {
  const auto props = numsgp::registered_properties();
  return index < props.size() ? props[index].statement.data() : nullptr;
}

numsgp_status numsgp_check_property(const numsgp_semigroup* s, const char* property,
                                    numsgp_check_status* result, char* detail,
                                    size_t detail_capacity) {
  return guarded([&] {
    NUMSGP_REQUIRE(s != nullptr && property != nullptr && result != nullptr);
    const numsgp::CheckOutcome outcome = numsgp::find_property(property).check(s->value);
    switch (outcome.status) {
      case numsgp::CheckOutcome::Status::NotApplicable: *result = NUMSGP_CHECK_NOT_APPLICABLE; break;
      case numsgp::CheckOutcome::Status::Pass: *result = NUMSGP_CHECK_PASS; break;
      case numsgp::CheckOutcome::Status::Fail: *result = NUMSGP_CHECK_FAIL; break;
    }
    if (detail != nullptr && detail_capacity > 0) {
      const size_t n = std::min(detail_capacity - 1, outcome.detail.size());
      std::memcpy(detail, outcome.detail.data(), n);
      detail[n] = '\0';
    }
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_campaign_run(int max_genus, const char* properties, unsigned jobs,
                                  numsgp_campaign** out) {
  return guarded([&] {
    NUMSGP_REQUIRE(properties != nullptr && out != nullptr);
    const std::vector<std::string> names = numsgp::parse_property_list(properties);
    auto* c = new numsgp_campaign{numsgp::run_campaign(max_genus, names, jobs), {}, {}};
    c->json_with_timing = numsgp::report_to_json(c->report, true);
    c->json_without_timing = numsgp::report_to_json(c->report, false);
    *out = c;
    return NUMSGP_OK;
  });
}

void numsgp_campaign_destroy(numsgp_campaign* c) { delete c; }

int numsgp_campaign_passed(const numsgp_campaign* c) {
  return c != nullptr && c->report.passed() ? 1 : 0;
}

int numsgp_campaign_max_genus(const numsgp_campaign* c) {
  return c != nullptr ? c->report.max_genus : -1;
}

double numsgp_campaign_wall_time_ms(const numsgp_campaign* c) {
  if (c == nullptr) return 0.0;
  return std::chrono::duration<double, std::milli>(c->report.wall_time).count();
}

numsgp_status numsgp_campaign_counts(const numsgp_campaign* c, numsgp_count_kind kind,
                                     uint64_t* out, size_t capacity, size_t* length) {
  return guarded([&] {
    NUMSGP_REQUIRE(c != nullptr);
    switch (kind) {
      case NUMSGP_COUNT_ALL: return copy_out(c->report.counts_by_genus, out, capacity, length);
      case NUMSGP_COUNT_MAX_GENERATED:
        return copy_out(c->report.maxgen_counts_by_genus, out, capacity, length);
      case NUMSGP_COUNT_SYMMETRIC:
        return copy_out(c->report.symmetric_counts_by_genus, out, capacity, length);
    }
    return fail(NUMSGP_ERR_INVALID_ARGUMENT, "unknown count kind");
  });
}

size_t numsgp_campaign_failure_count(const numsgp_campaign* c) {
  return c != nullptr ? c->report.property_failures.size() : 0;
}

numsgp_status numsgp_campaign_failure(const numsgp_campaign* c, size_t index,
                                      const char** property, int64_t* genus,
                                      const int64_t** witness, size_t* witness_length,
                                      const char** detail) {
  return guarded([&] {
    NUMSGP_REQUIRE(c != nullptr && index < c->report.property_failures.size());
    const numsgp::PropertyFailure& f = c->report.property_failures[index];
    if (property) *property = f.property.c_str();
    if (genus) *genus = f.genus;
    if (witness) *witness = f.witness.data();
    if (witness_length) *witness_length = f.witness.size();
    if (detail) *detail = f.detail.c_str();
    return NUMSGP_OK;
  });
}

numsgp_status numsgp_campaign_json(const numsgp_campaign* c, int include_timing, char* out,
                                   size_t capacity, size_t* length) {
  return guarded([&] {
    NUMSGP_REQUIRE(c != nullptr && length != nullptr);
    NUMSGP_REQUIRE(out != nullptr || capacity == 0);
    const std::string& json = include_timing ? c->json_with_timing : c->json_without_timing;
    *length = json.size();
    if (out == nullptr) return NUMSGP_OK;
    if (capacity < json.size() + 1) {
      return fail(NUMSGP_ERR_BUFFER_TOO_SMALL, "buffer too small for campaign JSON");
    }
    std::memcpy(out, json.c_str(), json.size() + 1);
    return NUMSGP_OK;
  });
}

}  // extern "C"

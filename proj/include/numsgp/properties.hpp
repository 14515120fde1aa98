#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsgp/semigroup.hpp"

namespace numsgp {

struct CheckOutcome {
  enum class Status { NotApplicable, Pass, Fail };

  Status status = Status::NotApplicable;
  std::string detail;  // set on failure

  static CheckOutcome not_applicable() { return {}; }
  static CheckOutcome pass() { return {Status::Pass, {}}; }
  static CheckOutcome fail(std::string why) { return {Status::Fail, std::move(why)}; }
};

/// A named statement checked on individual semigroups. The check is a pure
/// function; it reports NotApplicable when the semigroup is outside the
/// statement's hypotheses.
struct PropertyCheck {
  std::string_view name;
  std::string_view statement;
  CheckOutcome (*check)(const Semigroup&);
};

/// All registered checks, in a fixed order.
std::span<const PropertyCheck> registered_properties();

/// Throws UnknownProperty.
const PropertyCheck& find_property(std::string_view name);

/// Parses "all" or a comma-separated list of registered names into the
/// canonical (registry-ordered, duplicate-free) list. Throws UnknownProperty
/// and EmptyInput.
std::vector<std::string> parse_property_list(std::string_view list);

}  // namespace numsgp

#include "numsgp/shift_ideal.hpp"

#include <algorithm>
#include <string>

namespace numsgp {

ShiftIdeal::ShiftIdeal(Semigroup base, std::vector<std::uint8_t> members)
    : base_(std::move(base)), members_(std::move(members)) {
  if (!contains(0)) throw Error(ErrorCode::InvalidArgument, "ideal must contain 0");
  const auto gens = base_.min_generators();
  for (Value n = 0; n < base_.conductor(); ++n) {
    if (!contains(n)) continue;
    for (const Value a : gens) {
      if (!contains(n + a)) {
        throw Error(ErrorCode::InvalidArgument, "set is not closed under adding " +
                                                    std::to_string(a) + " to " + std::to_string(n));
      }
    }
  }
  // z is a minimal offset iff z - a_j is outside the ideal for every generator.
  const Value limit = base_.conductor() + base_.multiplicity();
  for (Value z = 0; z < limit; ++z) {
    if (!contains(z)) continue;
    const bool minimal =
        std::none_of(gens.begin(), gens.end(), [&](Value a) { return contains(z - a); });
    if (minimal) offsets_.push_back(z);
  }
}

ShiftIdeal ShiftIdeal::from_offsets(Semigroup base, std::span<const Value> offsets) {
  if (std::find(offsets.begin(), offsets.end(), Value{0}) == offsets.end()) {
    throw Error(ErrorCode::InvalidArgument, "offsets must include 0");
  }
  if (std::any_of(offsets.begin(), offsets.end(), [](Value o) { return o < 0; })) {
    throw Error(ErrorCode::InvalidArgument, "offsets must be nonnegative");
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(base.conductor()), 0);
  for (Value n = 0; n < base.conductor(); ++n) {
    table[static_cast<std::size_t>(n)] = std::any_of(
        offsets.begin(), offsets.end(), [&](Value o) { return base.contains(n - o); });
  }
  return ShiftIdeal(std::move(base), std::move(table));
}

std::vector<Value> ShiftIdeal::members_below_conductor() const {
  std::vector<Value> out;
  for (Value n = 0; n < base_.conductor(); ++n) {
    if (members_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

}  // namespace numsgp

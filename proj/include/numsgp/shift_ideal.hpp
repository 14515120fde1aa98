#pragma once

#include <span>
#include <vector>

#include "numsgp/semigroup.hpp"

namespace numsgp {

/// A relative ideal I of a semigroup S with min(I) = 0, so S is contained in
/// I and I in N. Stored as its minimal generating offsets (I = union of
/// offset + S) together with the membership table below the conductor of S.
class ShiftIdeal {
 public:
  /// The ideal generated by `offsets`; 0 must be among them and all must be
  /// nonnegative. The stored offsets are minimalized.
  static ShiftIdeal from_offsets(Semigroup base, std::span<const Value> offsets);

  /// The ideal whose members in [0, F(base)] are exactly those n with
  /// member(n) true. Throws InvalidArgument if that set is not an ideal
  /// with minimal element 0.
  template <class Pred>
  static ShiftIdeal from_predicate(Semigroup base, Pred member) {
    std::vector<std::uint8_t> table(static_cast<std::size_t>(base.conductor()));
    for (Value n = 0; n < base.conductor(); ++n) table[static_cast<std::size_t>(n)] = member(n);
    return ShiftIdeal(std::move(base), std::move(table));
  }

  const Semigroup& base() const noexcept { return base_; }
  std::span<const Value> offsets() const noexcept { return offsets_; }

  bool contains(Value n) const noexcept {
    if (n < 0) return false;
    if (n >= base_.conductor()) return true;
    return members_[static_cast<std::size_t>(n)] != 0;
  }

  /// Members below the conductor of the base, ascending.
  std::vector<Value> members_below_conductor() const;

  friend bool operator==(const ShiftIdeal& a, const ShiftIdeal& b) noexcept {
    return a.base_ == b.base_ && a.offsets_ == b.offsets_;
  }

 private:
  ShiftIdeal(Semigroup base, std::vector<std::uint8_t> members);

  Semigroup base_;
  std::vector<Value> offsets_;
  std::vector<std::uint8_t> members_;
};

}  // namespace numsgp

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "numsgp/error.hpp"

namespace numsgp {

using Value = std::int64_t;

/// Default upper limit for the conductor of any constructed semigroup. The
/// conductor must stay strictly below this value.
inline constexpr Value kDefaultMaxConductor = Value{1} << 31;

Value max_conductor() noexcept;
/// Process-wide; thread-safe but meant to be set once at startup.
void set_max_conductor(Value cap);

/// Minimal elements of a numerical semigroup in each residue class modulo
/// the multiplicity: entry(r) is the least s in S with s = r (mod m).
class AperyTable {
 public:
  /// The table of N: modulus 1, entry 0.
  AperyTable() : entries_{0} {}
  explicit AperyTable(std::vector<Value> entries) : entries_(std::move(entries)) {}

  std::size_t modulus() const noexcept { return entries_.size(); }
  Value operator[](std::size_t residue) const { return entries_.at(residue); }
  std::span<const Value> entries() const noexcept { return entries_; }
  /// The elements in ascending order.
  std::vector<Value> sorted() const;

  friend bool operator==(const AperyTable&, const AperyTable&) = default;

 private:
  std::vector<Value> entries_;
};

/// A numerical semigroup, stored canonically: its unique minimal generating
/// set, the membership table below the conductor, and the Apery table with
/// respect to the multiplicity. Immutable once constructed.
///
/// The trivial semigroup N is representable: generators {1}, Frobenius
/// number -1, genus 0, conductor 0. Queries that only make sense for S != N
/// throw Error(IsTrivial).
class Semigroup {
 public:
  /// The trivial semigroup N.
  Semigroup();

  /// Builds the semigroup generated by `generators`. The list may be
  /// unsorted, contain duplicates and redundant elements.
  /// Throws EmptyInput, InvalidArgument (value < 1), NonCoprime, TooLarge.
  static Semigroup from_generators(std::span<const Value> generators);

  /// Builds the semigroup whose positive complement is `gaps`.
  /// Throws InvalidArgument if the complement is not additively closed.
  static Semigroup from_gaps(std::span<const Value> gaps);

  std::span<const Value> min_generators() const noexcept { return generators_; }
  Value multiplicity() const noexcept { return generators_.front(); }
  Value largest_generator() const noexcept { return generators_.back(); }
  Value embedding_dimension() const noexcept { return static_cast<Value>(generators_.size()); }
  Value genus() const noexcept { return genus_; }
  Value frobenius() const noexcept { return conductor() - 1; }
  Value conductor() const noexcept { return static_cast<Value>(members_.size()); }
  bool is_trivial() const noexcept { return members_.empty(); }

  bool contains(Value n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor()) return true;
    return members_[static_cast<std::size_t>(n)] != 0;
  }

  /// {1..F} \ S, ascending.
  std::vector<Value> gaps() const;
  /// Elements of S below the Frobenius number, ascending. Throws IsTrivial.
  std::vector<Value> sporadic_elements() const;
  const AperyTable& apery_set() const noexcept { return apery_; }
  /// Gaps p with p + s in S for every positive s in S. Throws IsTrivial.
  std::vector<Value> pseudo_frobenius() const;
  Value type_number() const;

  /// F + 1 == 2g. Throws IsTrivial.
  bool is_symmetric() const;
  /// n in S xor F - n in S for every integer n. Throws IsTrivial.
  bool is_symmetric_by_reflection() const;

  /// S \ {a} for a minimal generator a. Throws InvalidArgument otherwise.
  Semigroup with_generator_removed(Value a) const;
  /// S u {n}. Requires n to be a gap with n + S_+ in S and 2n in S, which
  /// is exactly when the union is again a semigroup. Throws InvalidArgument.
  Semigroup with_element_added(Value n) const;

  friend bool operator==(const Semigroup& a, const Semigroup& b) noexcept {
    return a.generators_ == b.generators_;
  }

 private:
  // members[n] for n in [0, conductor), members.back() == 0 unless empty.
  explicit Semigroup(std::vector<std::uint8_t> members);

  std::vector<Value> generators_;
  std::vector<std::uint8_t> members_;
  AperyTable apery_;
  Value genus_ = 0;
};

struct SemigroupHash {
  std::size_t operator()(const Semigroup& s) const noexcept;
};

}  // namespace numsgp

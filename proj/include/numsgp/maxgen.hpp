#pragma once

// Semigroups whose largest minimal generator attains the bound a_e = 2g + 1
// ("max-generated" semigroups), their relation to symmetric semigroups, and
// the inequalities around Wilf's question that hold for them.

#include <span>
#include <utility>
#include <vector>

#include "numsgp/rational.hpp"
#include "numsgp/semigroup.hpp"
#include "numsgp/shift_ideal.hpp"

namespace numsgp {

/// a_e == 2g + 1. Throws IsTrivial for N.
bool is_max_generated(const Semigroup& s);

/// Pairs (n, 2g+1-n) for every member n of S in [1, 2g]. For a max-generated
/// S the second components are exactly the gaps.
std::vector<std::pair<Value, Value>> reflection_map(const Semigroup& s);

/// True iff n -> 2g+1-n is a bijection from S n [1, 2g] onto [1, 2g] \ S.
/// Holds exactly for max-generated semigroups. Throws IsTrivial.
bool reflection_is_bijection(const Semigroup& s);

/// S \ {a_e}, which is symmetric of genus g + 1. Throws NotMaxGenerated.
Semigroup to_symmetric(const Semigroup& s);
/// S' u {F(S')}, the inverse of to_symmetric. Throws NotSymmetric (also for N).
Semigroup from_symmetric(const Semigroup& symmetric);

/// F(S) == a_e - m. Throws NotMaxGenerated.
bool frobenius_formula_check(const Semigroup& s);

/// {L in [1, n-1] : L not in S and n - L not in S}, ascending.
std::vector<Value> reflected_gaps(Value n, const Semigroup& s);

struct ReflectedGapReport {
  bool cond_i = false;    // a_e == 2g + 1
  bool cond_ii = false;   // m + RG(F, S) == Ap(S) \ {0, F + m}
  bool cond_iii = false;  // a_e == F + m and |RG(F, S)| == m - 2
  bool ae_equals_f_plus_m = false;
  std::vector<Value> rg_f;
  std::vector<Value> rg_f_plus_m;
  std::vector<Value> apery_minus;  // Ap(S) \ {0, F + m}, ascending

  bool equivalent() const noexcept { return cond_i == cond_ii && cond_i == cond_iii; }
};

/// Evaluates the three equivalent characterizations of a_e = 2g + 1 through
/// reflected gaps. Throws IsTrivial.
ReflectedGapReport reflected_gap_report(const Semigroup& s);

/// The canonical ideal with minimal element 0: {z : F(S) - z not in S}.
/// Its minimal offsets are {F - p : p in PF(S)}. Throws IsTrivial.
ShiftIdeal canonical_ideal(const Semigroup& s);

/// {s - m : s in S} \ {-m}, i.e. the maximal ideal translated by -m. For a
/// max-generated S it differs from the canonical ideal exactly by a_e - m.
ShiftIdeal translated_maximal_ideal(const Semigroup& s);

/// PF(S) == {a_e - a_i : i < e}. Throws NotMaxGenerated.
bool pf_formula_check(const Semigroup& s);

struct WilfReport {
  Value e = 0, g = 0, frobenius = 0, m = 0;
  Rational lhs;     // g / (F + 1)
  Rational rhs;     // (e - 1) / e
  Rational margin;  // rhs - lhs
  bool holds = false;          // g e <= (e - 1)(F + 1)
  bool sporadic_form = false;  // e (F + 1 - g) >= F + 1
};

WilfReport wilf_report(const Semigroup& s);

/// Equivalent reformulations of Wilf's inequality for a max-generated S with
/// e > 2, the last one on the associated symmetric semigroup S'.
struct InequalityChain {
  bool ratio_form = false;      // g / (2g + 2 - m) <= (e - 1) / e
  bool product_form = false;    // (m - 2)(e - 1) <= (e - 2) g
  bool genus_form = false;      // g >= (m - 2)(e - 1) / (e - 2)
  bool symmetric_form = false;  // g(S') >= 1 + (m(S') - 2) e(S') / (e(S') - 1)
  bool wilf = false;

  bool consistent() const noexcept {
    return ratio_form == wilf && product_form == wilf && genus_form == wilf &&
           symmetric_form == wilf;
  }
};

/// Throws NotMaxGenerated, EmbeddingDimTooSmall for e <= 2.
InequalityChain maxgen_inequality_chain(const Semigroup& s);

struct GenusBoundReport {
  bool frobenius_exceeds_multiplicity = false;  // F(T) > m(T)
  bool counting_bound = false;                  // e + g >= 2m - 1
  bool bound_holds = false;                     // g >= 1 + (m - 2) e / (e - 1)
  Rational bound;                               // 1 + (m - 2) e / (e - 1)
};

/// Throws IsTrivial.
GenusBoundReport genus_lower_bound(const Semigroup& t);
/// The truth value of g(T) >= 1 + (m - 2) e / (e - 1). Throws IsTrivial.
bool genus_lower_bound_check(const Semigroup& t);

/// Every gap a has some s in S with a + s in `d`. Throws NotAGapSet unless
/// `d` consists of gaps of S.
bool is_distinguished(std::span<const Value> d, const Semigroup& s);

/// T = S u {a_e - a_1}. Throws NotMaxGenerated.
Semigroup close_largest_gap(const Semigroup& s);

/// {a_e - 2a_1, a_e - a_2, ..., a_e - a_(e-1)}, ascending; the pseudo-Frobenius
/// set of close_largest_gap(s). Throws NotMaxGenerated, GapTooSmall if
/// a_e < 2 a_1.
std::vector<Value> distinguished_set_for_closed(const Semigroup& s);

/// <m, f+1, ..., f+m>, which has Frobenius number f and a_e = f + m.
/// Throws BadParameters unless m >= 3, f > m and m does not divide f.
Semigroup interval_family(Value m, Value f);

}  // namespace numsgp

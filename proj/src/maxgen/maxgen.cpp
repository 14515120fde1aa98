#include "numsgp/maxgen.hpp"

#include <algorithm>
#include <string>

namespace numsgp {

namespace {

std::string describe(const Semigroup& s) {
  std::string out = "<";
  const auto gens = s.min_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gens[i]);
  }
  return out + ">";
}

void require_nontrivial(const Semigroup& s, const char* what) {
  if (s.is_trivial()) throw Error(ErrorCode::IsTrivial, std::string(what) + " requires S != N");
}

void require_max_generated(const Semigroup& s) {
  if (s.is_trivial() || s.largest_generator() != 2 * s.genus() + 1) {
    throw Error(ErrorCode::NotMaxGenerated,
                describe(s) + " does not satisfy a_e = 2g + 1 (g = " + std::to_string(s.genus()) +
                    ")");
  }
}

}  // namespace

bool is_max_generated(const Semigroup& s) {
  require_nontrivial(s, "is_max_generated");
  return s.largest_generator() == 2 * s.genus() + 1;
}

std::vector<std::pair<Value, Value>> reflection_map(const Semigroup& s) {
  require_max_generated(s);
  const Value top = 2 * s.genus() + 1;
  std::vector<std::pair<Value, Value>> out;
  for (Value n = 1; n < top; ++n) {
    if (s.contains(n)) out.emplace_back(n, top - n);
  }
  return out;
}

bool reflection_is_bijection(const Semigroup& s) {
  require_nontrivial(s, "reflection_is_bijection");
  // n -> 2g+1-n is injective on [1, 2g], so it is a bijection between the
  // members and the gaps of that range iff it swaps membership everywhere.
  const Value top = 2 * s.genus() + 1;
  for (Value n = 1; n < top; ++n) {
    if (s.contains(n) == s.contains(top - n)) return false;
  }
  return true;
}

Semigroup to_symmetric(const Semigroup& s) {
  require_max_generated(s);
  return s.with_generator_removed(s.largest_generator());
}

Semigroup from_symmetric(const Semigroup& symmetric) {
  if (symmetric.is_trivial() || !symmetric.is_symmetric()) {
    throw Error(ErrorCode::NotSymmetric, describe(symmetric) + " is not a symmetric semigroup");
  }
  return symmetric.with_element_added(symmetric.frobenius());
}

bool frobenius_formula_check(const Semigroup& s) {
  require_max_generated(s);
  return s.frobenius() == s.largest_generator() - s.multiplicity();
}

std::vector<Value> reflected_gaps(Value n, const Semigroup& s) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "reflected gaps need n >= 1");
  std::vector<Value> out;
  for (Value l = 1; l < n; ++l) {
    if (!s.contains(l) && !s.contains(n - l)) out.push_back(l);
  }
  return out;
}

ReflectedGapReport reflected_gap_report(const Semigroup& s) {
  require_nontrivial(s, "reflected_gap_report");
  ReflectedGapReport r;
  const Value f = s.frobenius();
  const Value m = s.multiplicity();
  r.rg_f = reflected_gaps(f, s);
  r.rg_f_plus_m = reflected_gaps(f + m, s);
  for (const Value w : s.apery_set().sorted()) {
    if (w != 0 && w != f + m) r.apery_minus.push_back(w);
  }

  std::vector<Value> shifted = r.rg_f;
  for (Value& l : shifted) l += m;

  r.cond_i = s.largest_generator() == 2 * s.genus() + 1;
  r.cond_ii = shifted == r.apery_minus;
  r.ae_equals_f_plus_m = s.largest_generator() == f + m;
  r.cond_iii = r.ae_equals_f_plus_m && static_cast<Value>(r.rg_f.size()) == m - 2;
  return r;
}

ShiftIdeal canonical_ideal(const Semigroup& s) {
  require_nontrivial(s, "canonical_ideal");
  const Value f = s.frobenius();
  return ShiftIdeal::from_predicate(s, [&](Value z) { return !s.contains(f - z); });
}

ShiftIdeal translated_maximal_ideal(const Semigroup& s) {
  const Value m = s.multiplicity();
  return ShiftIdeal::from_predicate(s, [&](Value z) { return s.contains(z + m); });
}

bool pf_formula_check(const Semigroup& s) {
  require_max_generated(s);
  const auto gens = s.min_generators();
  std::vector<Value> expected;
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) expected.push_back(gens.back() - gens[i]);
  std::sort(expected.begin(), expected.end());
  return s.pseudo_frobenius() == expected;
}

WilfReport wilf_report(const Semigroup& s) {
  require_nontrivial(s, "wilf_report");
  WilfReport r;
  r.e = s.embedding_dimension();
  r.g = s.genus();
  r.frobenius = s.frobenius();
  r.m = s.multiplicity();
  r.lhs = Rational(r.g, r.frobenius + 1);
  r.rhs = Rational(r.e - 1, r.e);
  r.margin = r.rhs - r.lhs;
  r.holds = r.g * r.e <= (r.e - 1) * (r.frobenius + 1);
  r.sporadic_form = r.e * (r.frobenius + 1 - r.g) >= r.frobenius + 1;
  return r;
}

InequalityChain maxgen_inequality_chain(const Semigroup& s) {
  require_max_generated(s);
  const Value e = s.embedding_dimension();
  if (e <= 2) {
    throw Error(ErrorCode::EmbeddingDimTooSmall,
                describe(s) + " has embedding dimension " + std::to_string(e) + " <= 2");
  }
  const Value g = s.genus();
  const Value m = s.multiplicity();
  InequalityChain c;
  c.ratio_form = Rational(g, 2 * g + 2 - m) <= Rational(e - 1, e);
  c.product_form = (m - 2) * (e - 1) <= (e - 2) * g;
  c.genus_form = Rational(g) >= Rational((m - 2) * (e - 1), e - 2);

  const Semigroup sym = to_symmetric(s);
  const Value e_sym = sym.embedding_dimension();
  c.symmetric_form =
      Rational(sym.genus()) >= Rational(1) + Rational((sym.multiplicity() - 2) * e_sym, e_sym - 1);
  c.wilf = wilf_report(s).holds;
  return c;
}

GenusBoundReport genus_lower_bound(const Semigroup& t) {
  require_nontrivial(t, "genus_lower_bound");
  const Value m = t.multiplicity();
  const Value e = t.embedding_dimension();
  const Value g = t.genus();
  GenusBoundReport r;
  r.frobenius_exceeds_multiplicity = t.frobenius() > m;
  r.counting_bound = e + g >= 2 * m - 1;
  r.bound = Rational(1) + Rational((m - 2) * e, e - 1);
  r.bound_holds = Rational(g) >= r.bound;
  return r;
}

bool genus_lower_bound_check(const Semigroup& t) { return genus_lower_bound(t).bound_holds; }

bool is_distinguished(std::span<const Value> d, const Semigroup& s) {
  for (const Value x : d) {
    if (x < 1 || s.contains(x)) {
      throw Error(ErrorCode::NotAGapSet, std::to_string(x) + " is not a gap of " + describe(s));
    }
  }
  for (const Value a : s.gaps()) {
    const bool reaches =
        std::any_of(d.begin(), d.end(), [&](Value x) { return x >= a && s.contains(x - a); });
    if (!reaches) return false;
  }
  return true;
}

Semigroup close_largest_gap(const Semigroup& s) {
  require_max_generated(s);
  return s.with_element_added(s.largest_generator() - s.multiplicity());
}

std::vector<Value> distinguished_set_for_closed(const Semigroup& s) {
  require_max_generated(s);
  const auto gens = s.min_generators();
  const Value ae = gens.back();
  if (ae < 2 * gens.front()) {
    throw Error(ErrorCode::GapTooSmall, describe(s) + " has a_e < 2 a_1");
  }
  std::vector<Value> out{ae - 2 * gens.front()};
  for (std::size_t i = 1; i + 1 < gens.size(); ++i) out.push_back(ae - gens[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Semigroup interval_family(Value m, Value f) {
  if (m < 3 || f <= m || f % m == 0) {
    throw Error(ErrorCode::BadParameters, "interval family needs m >= 3, f > m and m not dividing f (m = " +
                                              std::to_string(m) + ", f = " + std::to_string(f) + ")");
  }
  std::vector<Value> gens{m};
  for (Value i = 1; i <= m; ++i) gens.push_back(f + i);
  return Semigroup::from_generators(gens);
}

}  // namespace numsgp

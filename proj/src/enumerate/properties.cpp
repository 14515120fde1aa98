#include "numsgp/properties.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "numsgp/maxgen.hpp"

namespace numsgp {

namespace {

using Outcome = CheckOutcome;

std::string join(std::span<const Value> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

bool max_generated(const Semigroup& s) { return !s.is_trivial() && is_max_generated(s); }

Outcome core_invariants(const Semigroup& s) {
  const Value m = s.multiplicity();
  const Value e = s.embedding_dimension();
  const auto& ap = s.apery_set();
  if (static_cast<Value>(ap.modulus()) != m) return Outcome::fail("|Ap(S)| != m");
  if (ap[0] != 0) return Outcome::fail("Ap(S) misses 0");
  for (std::size_t r = 0; r < ap.modulus(); ++r) {
    if (ap[r] % m != static_cast<Value>(r) || !s.contains(ap[r]) || s.contains(ap[r] - m)) {
      return Outcome::fail("Apery entry " + std::to_string(ap[r]) + " is wrong");
    }
  }
  if (e > m) return Outcome::fail("e > m");
  if (s.is_trivial()) return Outcome::pass();

  const Value f = s.frobenius();
  const Value g = s.genus();
  if (static_cast<Value>(s.sporadic_elements().size()) + g != f + 1) {
    return Outcome::fail("F + 1 != sigma + g");
  }
  if (s.largest_generator() > 2 * g + 1) return Outcome::fail("a_e > 2g + 1");
  const auto entries = ap.entries();
  for (const Value a : s.min_generators().subspan(1)) {
    if (std::find(entries.begin(), entries.end(), a) == entries.end()) {
      return Outcome::fail("generator " + std::to_string(a) + " outside Ap(S)");
    }
  }
  if (*std::max_element(entries.begin(), entries.end()) != f + m) {
    return Outcome::fail("max Ap(S) != F + m");
  }
  const std::vector<Value> pf = s.pseudo_frobenius();
  if (pf.empty() || pf.back() != f) return Outcome::fail("max PF(S) != F");
  for (const Value p : pf) {
    if (s.contains(p)) return Outcome::fail("PF element " + std::to_string(p) + " is not a gap");
    if (ap[static_cast<std::size_t>((p + m) % m)] != p + m) {
      return Outcome::fail("p + m not in Ap(S) for p = " + std::to_string(p));
    }
  }
  return Outcome::pass();
}

Outcome symmetric_equivalence(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  if (s.is_symmetric() != s.is_symmetric_by_reflection()) {
    return Outcome::fail("F + 1 = 2g and the reflection test disagree");
  }
  return Outcome::pass();
}

Outcome reflection(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  const bool mg = is_max_generated(s);
  if (reflection_is_bijection(s) != mg) {
    return Outcome::fail(mg ? "a_e = 2g + 1 but n -> 2g+1-n is not a bijection"
                            : "n -> 2g+1-n is a bijection but a_e != 2g + 1");
  }
  if (mg) {
    std::vector<Value> image;
    for (const auto& pair : reflection_map(s)) image.push_back(pair.second);
    std::sort(image.begin(), image.end());
    if (image != s.gaps()) return Outcome::fail("reflection image " + join(image) + " != gaps");
  }
  return Outcome::pass();
}

Outcome reflected_gap_equivalence(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  const ReflectedGapReport r = reflected_gap_report(s);
  if (!r.equivalent()) {
    return Outcome::fail("conditions disagree: i=" + std::to_string(r.cond_i) +
                         " ii=" + std::to_string(r.cond_ii) + " iii=" + std::to_string(r.cond_iii));
  }
  if (r.ae_equals_f_plus_m && r.cond_i != r.rg_f_plus_m.empty()) {
    return Outcome::fail("with a_e = F + m, a_e = 2g + 1 does not match RG(F + m, S) = {}");
  }
  return Outcome::pass();
}

Outcome frobenius_formula(const Semigroup& s) {
  if (!max_generated(s)) return Outcome::not_applicable();
  if (!frobenius_formula_check(s)) return Outcome::fail("F != a_e - m");
  return Outcome::pass();
}

Outcome correspondence(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  const bool mg = is_max_generated(s);
  const bool sym = s.is_symmetric();
  if (!mg && !sym) return Outcome::not_applicable();

  if (mg) {
    const Semigroup sp = to_symmetric(s);
    if (!sp.is_symmetric()) return Outcome::fail("S \\ {a_e} is not symmetric");
    if (sp.genus() != s.genus() + 1 || sp.frobenius() != s.largest_generator() ||
        sp.multiplicity() != s.multiplicity()) {
      return Outcome::fail("S \\ {a_e} has the wrong genus, Frobenius number or multiplicity");
    }
    const auto gens = s.min_generators();
    std::vector<Value> expected;
    if (gens.size() == 2) {
      expected = {2, gens.back() + 2};
    } else {
      expected.assign(gens.begin(), gens.end() - 1);
    }
    const auto got = sp.min_generators();
    if (!std::equal(got.begin(), got.end(), expected.begin(), expected.end())) {
      return Outcome::fail("S \\ {a_e} = <" + join(got) + "> instead of " + join(expected));
    }
    if (!(from_symmetric(sp) == s)) return Outcome::fail("from_symmetric(to_symmetric(S)) != S");
  }
  if (sym) {
    const Semigroup back = from_symmetric(s);
    // <2,3> u {1} = N = <1>, whose only generator is 1 = 2g + 1
    if (back.is_trivial()) {
      return s.min_generators().size() == 2 && s.largest_generator() == 3
                 ? Outcome::pass()
                 : Outcome::fail("S u {F} = N for S != <2,3>");
    }
    if (!is_max_generated(back) || back.genus() + 1 != s.genus()) {
      return Outcome::fail("S u {F} is not max-generated of genus g - 1");
    }
    if (!(to_symmetric(back) == s)) return Outcome::fail("to_symmetric(from_symmetric(S)) != S");
  }
  return Outcome::pass();
}

Outcome symmetric_generators(const Semigroup& s) {
  if (s.is_trivial() || s.multiplicity() < 3 || !s.is_symmetric()) return Outcome::not_applicable();
  if (s.largest_generator() >= s.frobenius()) {
    return Outcome::fail("symmetric with a generator >= F");
  }
  return Outcome::pass();
}

Outcome pf_formula(const Semigroup& s) {
  if (!max_generated(s)) return Outcome::not_applicable();
  if (!pf_formula_check(s)) return Outcome::fail("PF(S) = " + join(s.pseudo_frobenius()));
  return Outcome::pass();
}

Outcome type(const Semigroup& s) {
  if (!max_generated(s)) return Outcome::not_applicable();
  if (s.type_number() != s.embedding_dimension() - 1) {
    return Outcome::fail("t(S) = " + std::to_string(s.type_number()));
  }
  return Outcome::pass();
}

Outcome canonical_gens(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  const ShiftIdeal k = canonical_ideal(s);
  std::vector<Value> expected;
  for (const Value p : s.pseudo_frobenius()) expected.push_back(s.frobenius() - p);
  std::sort(expected.begin(), expected.end());
  const auto offsets = k.offsets();
  if (!std::equal(offsets.begin(), offsets.end(), expected.begin(), expected.end())) {
    return Outcome::fail("canonical offsets " + join(offsets) + " != F - PF(S) " + join(expected));
  }
  if (max_generated(s)) {
    const auto gens = s.min_generators();
    std::vector<Value> shifted;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) shifted.push_back(gens[i] - gens[0]);
    if (!std::equal(offsets.begin(), offsets.end(), shifted.begin(), shifted.end())) {
      return Outcome::fail("canonical offsets " + join(offsets) + " != a_i - a_1 " + join(shifted));
    }
    // {s - a_1 : s in S} \ {-a_1} is K together with a_e - a_1
    const ShiftIdeal translated = translated_maximal_ideal(s);
    const Value extra = gens.back() - gens.front();
    for (Value z = 0; z <= s.conductor(); ++z) {
      if (translated.contains(z) != (k.contains(z) || z == extra)) {
        return Outcome::fail("translated maximal ideal differs from K u {a_e - a_1} at " +
                             std::to_string(z));
      }
    }
  }
  return Outcome::pass();
}

Outcome wilf(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  const WilfReport r = wilf_report(s);
  if (!r.holds) return Outcome::fail("Wilf's inequality fails");
  if (r.sporadic_form != r.holds) return Outcome::fail("sporadic form disagrees");
  if ((r.margin >= Rational(0)) != r.holds) return Outcome::fail("margin sign disagrees");
  const bool equality_expected = r.m == 2 || r.frobenius == r.m - 1;
  if (equality_expected && r.margin != Rational(0)) {
    return Outcome::fail("expected equality, margin " + std::to_string(r.margin.num()) + "/" +
                         std::to_string(r.margin.den()));
  }
  return Outcome::pass();
}

Outcome wilf_chain(const Semigroup& s) {
  if (!max_generated(s) || s.embedding_dimension() <= 2) return Outcome::not_applicable();
  const InequalityChain c = maxgen_inequality_chain(s);
  if (!c.consistent()) return Outcome::fail("reformulations of Wilf's inequality disagree");
  if (!c.wilf) return Outcome::fail("Wilf's inequality fails");
  return Outcome::pass();
}

Outcome closed_gap_wilf(const Semigroup& s) {
  if (!max_generated(s)) return Outcome::not_applicable();
  const Semigroup t = close_largest_gap(s);
  const auto gens = s.min_generators();
  const Value a1 = gens.front();
  const Value ae = gens.back();
  if (t.genus() + 1 != s.genus()) return Outcome::fail("g(T) != g(S) - 1");
  if (t.frobenius() >= ae - a1) return Outcome::fail("F(T) >= a_e - a_1");
  if (!t.is_trivial() && !wilf_report(t).holds) return Outcome::fail("T fails Wilf's inequality");

  if (ae > 2 * a1) {
    std::vector<Value> expected(gens.begin(), gens.end() - 1);
    expected.push_back(ae - a1);
    std::sort(expected.begin(), expected.end());
    const auto got = t.min_generators();
    if (!std::equal(got.begin(), got.end(), expected.begin(), expected.end())) {
      return Outcome::fail("T = <" + join(got) + "> instead of " + join(expected));
    }
    const std::vector<Value> d = distinguished_set_for_closed(s);
    if (d != t.pseudo_frobenius()) {
      return Outcome::fail("D = " + join(d) + " != PF(T) = " + join(t.pseudo_frobenius()));
    }
    if (!is_distinguished(d, t)) return Outcome::fail("D is not distinguished in T");
  } else {
    // a_e < 2 a_1 forces S = <a_1, ..., 2a_1 - 1> and T = <a_1 - 1, ..., 2a_1 - 3>
    std::vector<Value> expected_s, expected_t;
    for (Value x = a1; x <= 2 * a1 - 1; ++x) expected_s.push_back(x);
    for (Value x = a1 - 1; x <= 2 * a1 - 3; ++x) expected_t.push_back(x);
    if (!std::equal(gens.begin(), gens.end(), expected_s.begin(), expected_s.end())) {
      return Outcome::fail("a_e < 2 a_1 but S is not <a_1, ..., 2a_1 - 1>");
    }
    const auto got = t.min_generators();
    if (!std::equal(got.begin(), got.end(), expected_t.begin(), expected_t.end())) {
      return Outcome::fail("T = <" + join(got) + "> instead of " + join(expected_t));
    }
    if (!t.is_trivial() && wilf_report(t).margin != Rational(0)) {
      return Outcome::fail("Wilf's inequality for T is not an equality");
    }
  }
  return Outcome::pass();
}

Outcome distinguished(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  const std::vector<Value> pf = s.pseudo_frobenius();
  if (!is_distinguished(pf, s)) return Outcome::fail("PF(S) is not distinguished");
  const auto d = static_cast<Value>(pf.size());
  if (Rational(s.genus(), s.frobenius() + 1) > Rational(d, d + 1)) {
    return Outcome::fail("g / (F + 1) > d / (d + 1) for D = PF(S)");
  }
  // a distinguished set must contain PF(S); dropping any element breaks it
  for (std::size_t i = 0; i < pf.size(); ++i) {
    std::vector<Value> smaller = pf;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_distinguished(smaller, s)) return Outcome::fail("PF(S) minus one element is distinguished");
  }
  return Outcome::pass();
}

Outcome genus_bound(const Semigroup& s) {
  if (s.is_trivial()) return Outcome::not_applicable();
  const GenusBoundReport r = genus_lower_bound(s);
  if (r.frobenius_exceeds_multiplicity) {
    if (!r.counting_bound) return Outcome::fail("e + g < 2m - 1");
    if (!r.bound_holds) return Outcome::fail("g < 1 + (m - 2) e / (e - 1)");
    return Outcome::pass();
  }
  // F < m: S = <m, ..., 2m - 1>, where the bound holds only for m = 2
  if (r.bound_holds != (s.multiplicity() < 3)) {
    return Outcome::fail("bound on <m, ..., 2m - 1> does not fail exactly for m >= 3");
  }
  return Outcome::pass();
}

constexpr std::array kProperties{
    PropertyCheck{"core_invariants",
                  "F + 1 = sigma + g, a_e <= 2g + 1, e <= m, |Ap(S)| = m, generators other than m "
                  "lie in Ap(S), max Ap(S) = F + m, PF(S) are gaps with max F and p + m in Ap(S)",
                  core_invariants},
    PropertyCheck{"symmetric_equivalence",
                  "F + 1 = 2g iff n in S xor F - n in S for all n", symmetric_equivalence},
    PropertyCheck{"reflection",
                  "a_e = 2g + 1 iff n -> 2g + 1 - n maps S n [1, 2g] bijectively onto the gaps",
                  reflection},
    PropertyCheck{"reflected_gaps",
                  "a_e = 2g + 1 iff m + RG(F, S) = Ap(S) \\ {0, F + m} iff a_e = F + m and "
                  "|RG(F, S)| = m - 2",
                  reflected_gap_equivalence},
    PropertyCheck{"frobenius_formula", "a_e = 2g + 1 implies F = a_e - m", frobenius_formula},
    PropertyCheck{"correspondence",
                  "S -> S \\ {a_e} and S' -> S' u {F(S')} are inverse bijections between "
                  "semigroups with a_e = 2g + 1 and symmetric semigroups of genus g + 1",
                  correspondence},
    PropertyCheck{"symmetric_generators",
                  "a symmetric semigroup with m >= 3 is generated by its elements below F",
                  symmetric_generators},
    PropertyCheck{"pf_formula", "a_e = 2g + 1 implies PF(S) = {a_e - a_i : i < e}", pf_formula},
    PropertyCheck{"type", "a_e = 2g + 1 implies t(S) = e - 1", type},
    PropertyCheck{"canonical_gens",
                  "the canonical ideal {z : F - z not in S} is minimally generated by F - PF(S); "
                  "for a_e = 2g + 1 these are a_i - a_1, i < e",
                  canonical_gens},
    PropertyCheck{"wilf",
                  "g / (F + 1) <= (e - 1) / e, with equality for m = 2 and for <m, ..., 2m - 1>",
                  wilf},
    PropertyCheck{"wilf_chain",
                  "for a_e = 2g + 1 and e > 2, Wilf's inequality is equivalent to "
                  "(m - 2)(e - 1) <= (e - 2) g and to the genus bound on S \\ {a_e}",
                  wilf_chain},
    PropertyCheck{"closed_gap_wilf",
                  "for a_e = 2g + 1, T = S u {a_e - a_1} satisfies Wilf's inequality; if a_e > 2a_1 "
                  "T is minimally generated by a_1..a_(e-1), a_e - a_1 and "
                  "{a_e - 2a_1, a_e - a_i} = PF(T) is distinguished",
                  closed_gap_wilf},
    PropertyCheck{"distinguished",
                  "PF(S) is a minimal distinguished gap set and g / (F + 1) <= t / (t + 1)",
                  distinguished},
    PropertyCheck{"genus_bound",
                  "F(T) > m(T) >= 2 implies g >= 1 + (m - 2) e / (e - 1); for <m, ..., 2m - 1> the "
                  "bound fails exactly when m >= 3",
                  genus_bound},
};

}  // namespace

std::span<const PropertyCheck> registered_properties() { return kProperties; }

const PropertyCheck& find_property(std::string_view name) {
  for (const PropertyCheck& p : kProperties) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::UnknownProperty, "unknown property '" + std::string(name) + "'");
}

std::vector<std::string> parse_property_list(std::string_view list) {
  std::set<std::string_view> wanted;
  bool all = false;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    std::string_view token = list.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == "all") {
      all = true;
    } else if (!token.empty()) {
      wanted.insert(find_property(token).name);
    }
    pos = comma + 1;
  }
  std::vector<std::string> out;
  for (const PropertyCheck& p : kProperties) {
    if (all || wanted.count(p.name)) out.emplace_back(p.name);
  }
  if (out.empty()) throw Error(ErrorCode::EmptyInput, "no properties selected");
  return out;
}

}  // namespace numsgp

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "numsgp/enumerate.hpp"
#include "numsgp/error.hpp"
#include "numsgp/maxgen.hpp"
#include "oracle.hpp"

using numsgp::ErrorCode;
using numsgp::Rational;
using numsgp::Semigroup;
using numsgp::Value;
using V = std::vector<Value>;

namespace {

Semigroup sg(V gens) { return Semigroup::from_generators(gens); }

V to_vec(std::span<const Value> s) { return {s.begin(), s.end()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const numsgp::Error& e) {
    return e.code();
  }
  FAIL("expected numsgp::Error");
  return ErrorCode::InvalidArgument;
}

// Family <m, m+2, ..., 2m+1> (m+1 omitted).
Semigroup skip_family(Value m) {
  V gens{m};
  for (Value a = m + 2; a <= 2 * m + 1; ++a) gens.push_back(a);
  return sg(gens);
}

V range(Value lo, Value hi) {
  V out;
  for (Value a = lo; a <= hi; ++a) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("is_max_generated") {
  CHECK(numsgp::is_max_generated(sg({3, 5, 7})));
  CHECK(numsgp::is_max_generated(sg({4, 6, 7, 9})));
  CHECK_FALSE(numsgp::is_max_generated(sg({7, 11, 16, 17, 19})));
  CHECK(code_of([] { numsgp::is_max_generated(Semigroup()); }) == ErrorCode::IsTrivial);
}

TEST_CASE("reflection map") {
  using P = std::vector<std::pair<Value, Value>>;
  CHECK(numsgp::reflection_map(sg({2, 3})) == P{{2, 1}});
  CHECK(numsgp::reflection_map(sg({3, 5, 7})) == P{{3, 4}, {5, 2}, {6, 1}});
  V images;
  for (const auto& [n, r] : numsgp::reflection_map(sg({4, 6, 7, 9}))) images.push_back(r);
  std::sort(images.begin(), images.end());
  CHECK(images == V{1, 2, 3, 5});
  CHECK(code_of([] { numsgp::reflection_map(sg({3, 4})); }) == ErrorCode::NotMaxGenerated);
  CHECK(numsgp::reflection_is_bijection(sg({3, 5, 7})));
  CHECK_FALSE(numsgp::reflection_is_bijection(sg({3, 4})));
}

TEST_CASE("to_symmetric and from_symmetric") {
  CHECK(numsgp::to_symmetric(sg({3, 5, 7})) == sg({3, 5}));
  CHECK(numsgp::to_symmetric(sg({2, 3})) == sg({2, 5}));
  CHECK(numsgp::to_symmetric(sg({4, 6, 7, 9})) == sg({4, 6, 7}));
  CHECK(numsgp::to_symmetric(sg({4, 6, 7, 9})).is_symmetric_by_reflection());
  CHECK(numsgp::from_symmetric(sg({3, 5})) == sg({3, 5, 7}));
  CHECK(numsgp::from_symmetric(sg({2, 5})) == sg({2, 3}));
  CHECK(numsgp::from_symmetric(sg({4, 6, 7})) == sg({4, 6, 7, 9}));
  CHECK(code_of([] { numsgp::to_symmetric(sg({7, 11, 16, 17, 19})); }) ==
        ErrorCode::NotMaxGenerated);
  CHECK(code_of([] { numsgp::from_symmetric(sg({3, 5, 7})); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([] { numsgp::from_symmetric(Semigroup()); }) == ErrorCode::NotSymmetric);
}

TEST_CASE("Frobenius formula") {
  CHECK(numsgp::frobenius_formula_check(sg({3, 5, 7})));
  CHECK(numsgp::frobenius_formula_check(sg({2, 3})));
  CHECK(numsgp::frobenius_formula_check(sg({4, 6, 7, 9})));
  CHECK(code_of([] { numsgp::frobenius_formula_check(sg({3, 4})); }) ==
        ErrorCode::NotMaxGenerated);
}

TEST_CASE("reflected gaps") {
  const Semigroup s = sg({7, 11, 16, 17, 19});
  CHECK(s.genus() == 13);
  CHECK(numsgp::reflected_gaps(s.frobenius(), s) == V{5, 8, 10, 12, 15});
  CHECK(numsgp::reflected_gaps(4, sg({3, 5, 7})) == V{2});
  CHECK(numsgp::reflected_gaps(1, sg({3, 5, 7})).empty());
  CHECK(numsgp::reflected_gaps(1, s).empty());
  CHECK(code_of([] { numsgp::reflected_gaps(0, sg({3, 5, 7})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("reflected gap report") {
  const auto r = numsgp::reflected_gap_report(sg({3, 5, 7}));
  CHECK(r.cond_i);
  CHECK(r.cond_ii);
  CHECK(r.cond_iii);
  CHECK(r.rg_f == V{2});
  CHECK(r.apery_minus == V{5});

  const auto q = numsgp::reflected_gap_report(sg({7, 11, 16, 17, 19}));
  CHECK_FALSE(q.cond_i);
  CHECK(q.rg_f.size() == 5);  // = m - 2
  CHECK_FALSE(q.ae_equals_f_plus_m);
  CHECK_FALSE(q.cond_iii);
  CHECK_FALSE(q.cond_ii);
  CHECK(q.equivalent());
}

TEST_CASE("canonical ideal") {
  const auto k = numsgp::canonical_ideal(sg({3, 5, 7}));
  CHECK(to_vec(k.offsets()) == V{0, 2});
  CHECK(k.members_below_conductor() == V{0, 2, 3});
  for (Value z : {0, 2, 3, 5, 6, 7, 8}) CHECK(k.contains(z));
  CHECK_FALSE(k.contains(1));
  CHECK_FALSE(k.contains(4));

  for (const V gens : {V{3, 5}, V{2, 7}, V{4, 6, 7}, V{5, 6, 7, 8, 9}}) {
    CAPTURE(gens);
    const Semigroup s = sg(gens);
    if (!s.is_symmetric()) continue;
    const auto ks = numsgp::canonical_ideal(s);
    CHECK(to_vec(ks.offsets()) == V{0});
    for (Value z = 0; z <= s.conductor(); ++z) CHECK(ks.contains(z) == s.contains(z));
  }
  CHECK(to_vec(numsgp::canonical_ideal(sg({4, 6, 7, 9})).offsets()) == V{0, 2, 3});
  CHECK(code_of([] { numsgp::canonical_ideal(Semigroup()); }) == ErrorCode::IsTrivial);
}

TEST_CASE("the translated maximal ideal contains a_e - a_1 and the canonical ideal does not") {
  const Semigroup s = sg({3, 5, 7});
  const auto k = numsgp::canonical_ideal(s);
  const auto t = numsgp::translated_maximal_ideal(s);
  CHECK(t.contains(4));
  CHECK_FALSE(k.contains(4));
  for (Value z = 0; z <= 10; ++z) {
    if (z != 4) CHECK(t.contains(z) == k.contains(z));
  }
}

TEST_CASE("PF formula") {
  CHECK(numsgp::pf_formula_check(sg({3, 5, 7})));
  CHECK(numsgp::pf_formula_check(sg({2, 3})));
  CHECK(numsgp::pf_formula_check(sg({4, 6, 7, 9})));
  CHECK(sg({4, 6, 7, 9}).pseudo_frobenius() == V{2, 3, 5});
  CHECK(code_of([] { numsgp::pf_formula_check(sg({3, 4})); }) == ErrorCode::NotMaxGenerated);
}

TEST_CASE("Wilf report") {
  const auto a = numsgp::wilf_report(sg({3, 5, 7}));
  CHECK(a.lhs == Rational(3, 5));
  CHECK(a.rhs == Rational(2, 3));
  CHECK(a.margin == Rational(1, 15));
  CHECK(a.holds);

  const auto b = numsgp::wilf_report(sg({3, 4, 5}));
  CHECK(b.lhs == Rational(2, 3));
  CHECK(b.rhs == Rational(2, 3));
  CHECK(b.margin == Rational(0));
  CHECK(b.holds);

  const auto c = numsgp::wilf_report(sg({2, 3}));
  CHECK(c.lhs == Rational(1, 2));
  CHECK(c.margin == Rational(0));
  CHECK(c.sporadic_form);
  CHECK(code_of([] { numsgp::wilf_report(Semigroup()); }) == ErrorCode::IsTrivial);
}

TEST_CASE("inequality chain") {
  for (const Semigroup& s : {sg({3, 5, 7}), sg({4, 6, 7, 9}), skip_family(5)}) {
    const auto c = numsgp::maxgen_inequality_chain(s);
    CHECK(c.product_form);
    CHECK(c.wilf);
    CHECK(c.consistent());
  }
  CHECK(code_of([] { numsgp::maxgen_inequality_chain(sg({2, 3})); }) ==
        ErrorCode::EmbeddingDimTooSmall);
  CHECK(code_of([] { numsgp::maxgen_inequality_chain(sg({3, 4})); }) ==
        ErrorCode::NotMaxGenerated);
}

TEST_CASE("genus lower bound") {
  const auto a = numsgp::genus_lower_bound(sg({3, 5}));
  CHECK(a.bound == Rational(3));
  CHECK(a.bound_holds);
  CHECK(a.frobenius_exceeds_multiplicity);

  const auto b = numsgp::genus_lower_bound(sg({4, 5, 6, 7}));
  CHECK(b.bound == Rational(11, 3));
  CHECK_FALSE(b.bound_holds);
  CHECK_FALSE(b.frobenius_exceeds_multiplicity);

  CHECK(numsgp::genus_lower_bound_check(sg({2, 3})));
  for (Value m = 3; m <= 12; ++m) CHECK_FALSE(numsgp::genus_lower_bound_check(sg(range(m, 2 * m - 1))));
}

TEST_CASE("distinguished gap sets") {
  CHECK(numsgp::is_distinguished(V{1, 2}, sg({3, 4, 5})));
  CHECK_FALSE(numsgp::is_distinguished(V{4}, sg({3, 5, 7})));
  for (const V gens : {V{3, 5, 7}, V{2, 3}, V{4, 6, 7, 9}, V{7, 11, 16, 17, 19}}) {
    const Semigroup s = sg(gens);
    CHECK(numsgp::is_distinguished(s.pseudo_frobenius(), s));
  }
  CHECK(code_of([] { numsgp::is_distinguished(V{3}, sg({3, 5, 7})); }) == ErrorCode::NotAGapSet);
}

TEST_CASE("closing the largest gap") {
  const Semigroup t = numsgp::close_largest_gap(sg({3, 5, 7}));
  CHECK(t == sg({3, 4, 5}));
  CHECK(to_vec(t.min_generators()) == V{3, 4, 5});
  CHECK(numsgp::close_largest_gap(sg({4, 5, 6, 7})) == sg({3, 4, 5}));
  const Semigroup u = numsgp::close_largest_gap(sg({4, 6, 7, 9}));
  CHECK(u == sg({4, 5, 6, 7}));
  CHECK(u.embedding_dimension() == 4);
  CHECK(code_of([] { numsgp::close_largest_gap(sg({3, 4})); }) == ErrorCode::NotMaxGenerated);
}

TEST_CASE("distinguished set of the closed semigroup") {
  CHECK(numsgp::distinguished_set_for_closed(sg({3, 5, 7})) == V{1, 2});
  CHECK(sg({3, 4, 5}).pseudo_frobenius() == V{1, 2});
  CHECK(numsgp::distinguished_set_for_closed(sg({4, 6, 7, 9})) == V{1, 2, 3});
  CHECK(sg({4, 5, 6, 7}).pseudo_frobenius() == V{1, 2, 3});
  CHECK(code_of([] { numsgp::distinguished_set_for_closed(sg({2, 3})); }) ==
        ErrorCode::GapTooSmall);
}

TEST_CASE("interval family") {
  const Semigroup a = numsgp::interval_family(4, 5);
  CHECK(a == sg({4, 6, 7, 9}));
  CHECK(numsgp::is_max_generated(a));

  const Semigroup b = numsgp::interval_family(4, 7);
  CHECK(to_vec(b.min_generators()) == V{4, 9, 10, 11});
  CHECK(b.frobenius() == 7);
  CHECK(b.largest_generator() == 11);
  CHECK(b.genus() == oracle::Naive({4, 9, 10, 11}).gaps().size());
  CHECK(b.genus() == 6);
  CHECK_FALSE(numsgp::is_max_generated(b));

  CHECK(code_of([] { numsgp::interval_family(3, 6); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { numsgp::interval_family(2, 5); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { numsgp::interval_family(4, 4); }) == ErrorCode::BadParameters);

  for (Value m = 3; m <= 9; ++m) {
    for (Value f = m + 1; f <= 4 * m; ++f) {
      if (f % m == 0) continue;
      CAPTURE(m);
      CAPTURE(f);
      const Semigroup s = numsgp::interval_family(m, f);
      CHECK(s.frobenius() == f);
      CHECK(s.largest_generator() == f + m);
      CHECK(numsgp::is_max_generated(s) == (f == m + 1));
    }
  }
}

TEST_CASE("family <m, m+2, ..., 2m+1> has genus m and is max-generated") {
  for (Value m = 3; m <= 10; ++m) {
    const Semigroup s = skip_family(m);
    CHECK(s.genus() == m);
    CHECK(s.largest_generator() == 2 * s.genus() + 1);
  }
}

TEST_CASE("maxgen statements agree with the naive oracle on every semigroup of genus <= 11") {
  numsgp::enumerate_up_to(11, [](const Semigroup& s) {
    if (s.is_trivial()) return;
    const V gens = to_vec(s.min_generators());
    const oracle::Naive n(gens);
    const Value g = s.genus(), f = n.frobenius(), m = n.multiplicity(), ae = gens.back();
    const bool mg = ae == 2 * g + 1;
    CAPTURE(gens);
    REQUIRE(numsgp::is_max_generated(s) == mg);

    // reflected gaps by definition
    V rg;
    for (Value l = 1; l < f; ++l) if (!n.in(l) && !n.in(f - l)) rg.push_back(l);
    REQUIRE(numsgp::reflected_gaps(f, s) == rg);
    const auto report = numsgp::reflected_gap_report(s);
    REQUIRE(report.equivalent());
    REQUIRE(report.cond_i == mg);

    // canonical ideal offsets from the set {z : F - z not in S}
    V offsets;
    for (Value z = 0; z <= f + m; ++z) {
      if (n.in(f - z)) continue;
      bool generated = false;
      for (Value a : gens) generated = generated || (z - a >= 0 && !n.in(f - (z - a)));
      if (!generated) offsets.push_back(z);
    }
    REQUIRE(to_vec(numsgp::canonical_ideal(s).offsets()) == offsets);

    const auto w = numsgp::wilf_report(s);
    const Value e = static_cast<Value>(gens.size());
    REQUIRE(w.holds == (g * e <= (e - 1) * (f + 1)));
    REQUIRE(w.margin == Rational(e - 1, e) - Rational(g, f + 1));

    if (!mg) {
      REQUIRE(code_of([&] { numsgp::to_symmetric(s); }) == ErrorCode::NotMaxGenerated);
      return;
    }
    REQUIRE(f == ae - m);
    V pf;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) pf.push_back(ae - gens[i]);
    std::sort(pf.begin(), pf.end());
    REQUIRE(n.pseudo_frobenius() == pf);

    // S \ {a_e} by direct set removal
    std::vector<Value> gaps_sp = n.gaps();
    gaps_sp.push_back(ae);
    std::sort(gaps_sp.begin(), gaps_sp.end());
    const Semigroup sp = numsgp::to_symmetric(s);
    REQUIRE(sp.gaps() == gaps_sp);
    REQUIRE(oracle::Naive(to_vec(sp.min_generators())).symmetric_by_definition());
    REQUIRE(numsgp::from_symmetric(sp) == s);

    // T = S u {a_e - m}
    std::vector<Value> gaps_t;
    for (Value x : n.gaps()) if (x != ae - m) gaps_t.push_back(x);
    const Semigroup t = numsgp::close_largest_gap(s);
    REQUIRE(t.gaps() == gaps_t);
    if (ae > 2 * m) {
      V expected(gens.begin(), gens.end() - 1);
      expected.push_back(ae - m);
      std::sort(expected.begin(), expected.end());
      REQUIRE(to_vec(t.min_generators()) == expected);
      REQUIRE(numsgp::distinguished_set_for_closed(s) ==
              oracle::Naive(to_vec(t.min_generators())).pseudo_frobenius());
    }
  });
}

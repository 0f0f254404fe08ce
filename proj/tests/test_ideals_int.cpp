#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/ideals_int.hpp"
#include "goldman/liealg.hpp"
#include "goldman/sampling.hpp"

using namespace goldman;

namespace {

GeometricSubmodule corrupted_table() {
  return GeometricSubmodule::table(ExponentBox{2, 10}, 1,
                                   {{Monomial{1, 0}, 2}, {Monomial{1, 1}, 3}});
}

// Ideal test straight from the definition: [alpha(w) w, v] must lie in the
// submodule whenever both w and vw stay in the box.
bool ideal_by_brackets(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                       const ExponentBox& box) {
  bool ok = true;
  box.for_each([&](const Monomial& w) {
    box.for_each([&](const Monomial& vw) {
      if (!ok) {
        return;
      }
      const Monomial v = vw * monomial_inv(w);
      IntElement gen = IntElement::term(w, sub.alpha(w));
      ok = contains(sub, bracket(sig, gen, v));
    });
  });
  return ok;
}

}  // namespace

TEST_CASE("alpha for I_K") {
  auto sub = GeometricSubmodule::ik(2, {Monomial{1, 0}});
  CHECK(sub.alpha(Monomial{1, 0}) == 1);
  CHECK(sub.alpha(Monomial{2, 4}) == 2);
  CHECK(sub.alpha(Monomial{0, 0}) == 0);
  CHECK(sub.alpha(Monomial{-3, 6}) == 3);
  auto with_e = GeometricSubmodule::ik(2, {Monomial{0, 0}});
  CHECK(with_e.alpha(Monomial{0, 0}) == 1);
}

TEST_CASE("exponent gcd") {
  CHECK(exponent_gcd(Monomial{0, 0}) == 0);
  CHECK(exponent_gcd(Monomial{-4, 6}) == 2);
  CHECK(exponent_gcd(Monomial{0, -5}) == 5);
}

TEST_CASE("membership") {
  auto sub = GeometricSubmodule::ik(2, {Monomial{1, 0}});
  CHECK(contains(sub, IntElement::term(Monomial{2, 4}, 6)));
  CHECK_FALSE(contains(sub, IntElement::term(Monomial{2, 4}, 3)));
  CHECK(contains(sub, IntElement(2)));
  CHECK_FALSE(contains(sub, IntElement::term(Monomial{0, 0}, 5)));
  CHECK(contains(sub, IntElement::term(Monomial{1, 0}, -7)));
}

TEST_CASE("table rules validate their entries") {
  CHECK_THROWS_AS(GeometricSubmodule::table(ExponentBox{2, 1}, 1, {{Monomial{2, 0}, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeometricSubmodule::table(ExponentBox{2, 1}, -1), std::invalid_argument);
  auto t = GeometricSubmodule::table(ExponentBox{2, 1}, 1);
  CHECK_THROWS_AS(t.alpha(Monomial{2, 0}), std::out_of_range);
  CHECK_THROWS_AS(ideal_check_sampled(SurfaceSignature::closed(1), t, ExponentBox{2, 2}, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("box enumeration") {
  ExponentBox b{2, 1};
  CHECK(b.points() == 9);
  std::vector<Monomial> seen;
  b.for_each([&](const Monomial& x) { seen.push_back(x); });
  REQUIRE(seen.size() == 9);
  CHECK(seen.front() == Monomial{-1, -1});
  CHECK(seen[1] == Monomial{-1, 0});
  CHECK(seen.back() == Monomial{1, 1});
  for (std::uint64_t i = 0; i < 9; ++i) {
    CHECK(b.point(i) == seen[i]);
  }
}

TEST_CASE("sampled closure check") {
  const auto sig = SurfaceSignature::closed(1);
  const ExponentBox box{2, 10};
  auto r = ideal_check_sampled(sig, GeometricSubmodule::ik(2, {Monomial{1, 0}}), box, 10000, 7);
  CHECK(r.verdict);
  CHECK(r.pairs_checked == 10000);
  CHECK(r.seed == 7);
  CHECK(ideal_check_sampled(sig, GeometricSubmodule::table(box, 1), box, 2000, 1).verdict);
}

TEST_CASE("corrupted table is rejected with the hand-computed witness") {
  const auto sig = SurfaceSignature::closed(1);
  auto r = ideal_check_exhaustive(sig, corrupted_table(), ExponentBox{2, 2});
  CHECK_FALSE(r.verdict);
  REQUIRE(r.counterexample.has_value());
  CHECK_FALSE(closure_condition(sig, corrupted_table(), r.counterexample->first,
                               r.counterexample->second));
  // v=(0,1), w=(1,0): alpha(1,1)=3 does not divide <v,w> alpha(w) = -2
  CHECK(pair(sig, Monomial{0, 1}, Monomial{1, 0}) == -1);
  CHECK_FALSE(closure_condition(sig, corrupted_table(), Monomial{0, 1}, Monomial{1, 0}));
  auto s = ideal_check_sampled(sig, corrupted_table(), ExponentBox{2, 10}, 10000, 3);
  CHECK_FALSE(s.verdict);
}

TEST_CASE("divisibility criterion") {
  const auto sig = SurfaceSignature::closed(1);
  CHECK(prop_multiplier(sig, Monomial{1, 1}, Monomial{1, 0}) == 1);
  CHECK(prop_multiplier(sig, Monomial{2, 4}, Monomial{3, 6}) == 6);
  CHECK(prop_divisibility_check(sig, GeometricSubmodule::ik(2, {}), ExponentBox{2, 10}, 5000, 2)
            .verdict);
  CHECK(prop_divisibility_exhaustive(sig, GeometricSubmodule::table(ExponentBox{2, 2}, 1),
                                     ExponentBox{2, 2})
            .verdict);
  CHECK_FALSE(prop_condition(sig, corrupted_table(), Monomial{1, 1}, Monomial{1, 0}));
  CHECK_FALSE(
      prop_divisibility_exhaustive(sig, corrupted_table(), ExponentBox{2, 2}).verdict);
}

TEST_CASE("I_K is bracket closed, checked from the definition") {
  sampling::Rng rng(31);
  const auto sig = SurfaceSignature::closed(1);
  for (int i = 0; i < 10; ++i) {
    std::set<Monomial> k;
    for (int j = 0; j < 3; ++j) {
      k.insert(sampling::monomial(rng, 2, 3));
    }
    auto sub = GeometricSubmodule::ik(2, k);
    CHECK(ideal_by_brackets(sig, sub, ExponentBox{2, 3}));
    CHECK(ideal_check_exhaustive(sig, sub, ExponentBox{2, 3}).verdict);
  }
}

TEST_CASE("exhaustive check agrees with the bracket definition on random tables") {
  sampling::Rng rng(32);
  const auto sig = SurfaceSignature::closed(1);
  const ExponentBox box{2, 2};
  int rejected = 0;
  for (int i = 0; i < 60; ++i) {
    std::map<Monomial, Integer> entries;
    box.for_each([&](const Monomial& x) {
      if (sampling::coin(rng, 0.15)) {
        entries[x] = sampling::uniform(rng, 0, 3);
      }
    });
    auto sub = GeometricSubmodule::table(box, 1, entries);
    const bool expected = ideal_by_brackets(sig, sub, box);
    rejected += expected ? 0 : 1;
    CHECK(ideal_check_exhaustive(sig, sub, box).verdict == expected);
  }
  CHECK(rejected > 0);
}

TEST_CASE("ik_family") {
  auto fam = ik_family(2, {Monomial{1, 0}}, 3);
  REQUIRE(fam.size() == 3);
  auto cands = ik_candidates(2, {Monomial{1, 0}}, 2);
  REQUIRE(cands.size() == 2);
  CHECK(cands[0] == Monomial{-2, -2});
  CHECK(cands[1] == Monomial{-2, 0});
  // each added tuple has alpha 1 from its own member onwards
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(fam[j].alpha(Monomial{1, 0}) == 1);
    for (std::size_t t = 0; t < 2; ++t) {
      CHECK(fam[j].alpha(cands[t]) == (t < j ? 1 : 2));
    }
  }
  CHECK(ik_family(2, {Monomial{1, 0}}, 1).size() == 1);
  CHECK(ik_candidates(2, {}, 9).size() == 9);
  for (const Monomial& x : ik_candidates(3, {}, 40)) {
    CHECK(exponent_gcd(x) > 1);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/properties.hpp"

#include <set>

using namespace goldman;

TEST_CASE("suite names are unique and runnable") {
  std::set<std::string_view> names;
  for (const PropertySuite& s : property_suites()) {
    CHECK(names.insert(s.name).second);
    CHECK(s.default_count > 0);
  }
  CHECK(names.size() >= 30);
  CHECK_THROWS_AS(run_property("no_such_suite", 1, 1), std::invalid_argument);
}

TEST_CASE("every suite passes a short run") {
  for (const PropertySuite& s : property_suites()) {
    const std::uint64_t count = std::max<std::uint64_t>(1, s.default_count / 100);
    PropertyResult r = run_property(s.name, count, 17);
    INFO(s.name);
    CHECK(r.passed);
    CHECK(r.counterexample.is_null());
    if (s.name == "chain.strict_levels") {
      CHECK(r.cases == 21);  // levels 0..6 times three choices of c
    } else if (s.name == "ideals_rat.closed_classification") {
      CHECK(r.cases >= count);  // several generator sets per draw
    } else {
      CHECK(r.cases == count);
    }
  }
}

TEST_CASE("the faulty pairing is caught") {
  const auto sig = SurfaceSignature::closed(1);
  TestForm good(sig);
  TestForm bad(sig, Fault::pairing_sign);
  CHECK(good.pair(Monomial{0, 1}, Monomial{1, 0}) == -1);
  CHECK(bad.pair(Monomial{0, 1}, Monomial{1, 0}) == 1);
  CHECK(bad.pair(Monomial{1, 0}, Monomial{0, 1}) == 1);

  for (std::string_view name : {"symplectic.pair_antisymmetry", "liealg.antisymmetry",
                                "liealg.jacobi"}) {
    PropertyResult r = run_property(name, 1000, 3, Fault::pairing_sign);
    INFO(name);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.counterexample.is_null());
  }
}

TEST_CASE("selftest report shape") {
  Json a = run_selftest(8, 0.005);
  CHECK(a["verdict"] == true);
  CHECK(a["suites"].size() == property_suites().size());
  CHECK(a.dump() == run_selftest(8, 0.005).dump());
  Json f = run_selftest(8, 0.01, Fault::pairing_sign);
  CHECK(f["verdict"] == false);
  bool jacobi_failed = false;
  for (const auto& s : f["suites"]) {
    if (s["name"] == "liealg.jacobi") {
      jacobi_failed = s["verdict"] == false && s.contains("counterexample");
    }
  }
  CHECK(jacobi_failed);
}

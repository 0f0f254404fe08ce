#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/groebner.hpp"
#include "goldman/sampling.hpp"

#include <algorithm>

using namespace goldman;

namespace {

Polynomial poly(std::size_t vars, std::initializer_list<std::pair<PolyExponent, long>> terms) {
  Polynomial p(vars);
  for (const auto& [e, c] : terms) {
    p.add_term(e, c);
  }
  return p;
}

Polynomial random_poly(sampling::Rng& rng, std::size_t vars, int terms, long degree) {
  Polynomial p(vars);
  for (int i = 0; i < terms; ++i) {
    PolyExponent e(vars);
    for (auto& k : e) {
      k = sampling::uniform(rng, 0, degree);
    }
    p.add_term(e, sampling::nonzero(rng, 5));
  }
  return p;
}

bool divides(const PolyExponent& a, const PolyExponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

// Buchberger's criterion with every pair, no shortcuts.
bool every_s_polynomial_reduces(const std::vector<Polynomial>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto& a = g[i].leading_exponent();
      const auto& b = g[j].leading_exponent();
      PolyExponent l(a.size()), sa(a.size()), sb(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        l[k] = std::max(a[k], b[k]);
        sa[k] = l[k] - a[k];
        sb[k] = l[k] - b[k];
      }
      Polynomial s(a.size());
      s.add_scaled(g[i], 1 / g[i].leading_coefficient(), sa);
      s.add_scaled(g[j], -1 / g[j].leading_coefficient(), sb);
      if (!normal_form(s, g).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(const std::vector<Polynomial>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].leading_coefficient() != 1) {
      return false;
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) {
        continue;
      }
      for (const auto& [e, c] : g[i].terms()) {
        if (divides(g[j].leading_exponent(), e)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("grevlex order") {
  GrevlexGreater gt;
  CHECK(gt({0, 2}, {1, 0}));
  CHECK(gt({2, 0}, {1, 1}));
  CHECK(gt({1, 1}, {0, 2}));
  CHECK_FALSE(gt({1, 1}, {1, 1}));
  CHECK(gt({1, 1, 0}, {1, 0, 1}));
}

TEST_CASE("polynomial arithmetic") {
  Polynomial p = poly(2, {{{1, 0}, 2}, {{0, 0}, 1}});
  CHECK(p.leading_exponent() == PolyExponent{1, 0});
  CHECK(p.monic().leading_coefficient() == 1);
  p.add_term({1, 0}, -2);
  CHECK(p == Polynomial::constant(2, 1));
  CHECK(p.to_string() == "1");
  CHECK(Polynomial(2).to_string() == "0");
  CHECK_THROWS_AS(p.add_term({1}, 1), std::invalid_argument);
}

TEST_CASE("reduced bases of small ideals") {
  // (x^2 - y, x y - 1) contains x - y^2 and y^3 - 1
  auto g = groebner_basis({poly(2, {{{2, 0}, 1}, {{0, 1}, -1}}), poly(2, {{{1, 1}, 1}, {{0, 0}, -1}})});
  CHECK(every_s_polynomial_reduces(g));
  CHECK(is_reduced(g));
  CHECK(normal_form(poly(2, {{{0, 3}, 1}, {{0, 0}, -1}}), g).is_zero());
  CHECK(normal_form(poly(2, {{{1, 0}, 1}, {{0, 2}, -1}}), g).is_zero());
  CHECK_FALSE(normal_form(poly(2, {{{1, 0}, 1}}), g).is_zero());

  auto unit = groebner_basis({poly(1, {{{1}, 1}, {{0}, -1}}), poly(1, {{{1}, 1}, {{0}, 1}})});
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == Polynomial::constant(1, 1));
  CHECK(groebner_basis({}).empty());
}

TEST_CASE("saturation removes monomial factors") {
  // t1 (1 + t2) saturates to (1 + t2)
  auto s = saturate_by_variables({poly(2, {{{1, 0}, 1}, {{1, 1}, 1}})}, 2);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == poly(2, {{{0, 1}, 1}, {{0, 0}, 1}}));
  // (t1 - t2, t1 t2 - t2) : t^inf contains t1 - 1 and t2 - 1
  auto u = saturate_by_variables(
      {poly(2, {{{1, 0}, 1}, {{0, 1}, -1}}), poly(2, {{{1, 1}, 1}, {{0, 1}, -1}})}, 2);
  CHECK(normal_form(poly(2, {{{1, 0}, 1}, {{0, 0}, -1}}), u).is_zero());
  CHECK(normal_form(poly(2, {{{0, 1}, 1}, {{0, 0}, -1}}), u).is_zero());
  // a monomial generates the unit ideal after saturation
  auto m = saturate_by_variables({poly(3, {{{2, 0, 1}, 4}})}, 3);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == Polynomial::constant(3, 1));
  CHECK_THROWS_AS(saturate_by_variables({poly(2, {{{1, 0}, 1}})}, 3), std::invalid_argument);
}

TEST_CASE("random bases satisfy Buchberger's criterion and are reduced") {
  sampling::Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    const std::size_t vars = 1 + static_cast<std::size_t>(i % 3);
    std::vector<Polynomial> gens;
    for (int j = 0; j < 1 + i % 3; ++j) {
      gens.push_back(random_poly(rng, vars, 3, 2));
    }
    auto g = groebner_basis(gens);
    CHECK(every_s_polynomial_reduces(g));
    CHECK(is_reduced(g));
    for (const auto& f : gens) {
      CHECK(normal_form(f, g).is_zero());
    }
    // the reduced basis does not depend on generator order
    std::reverse(gens.begin(), gens.end());
    CHECK(groebner_basis(gens) == g);
  }
}

TEST_CASE("saturation ignores monomial multipliers on the generators") {
  sampling::Rng rng(42);
  for (int i = 0; i < 150; ++i) {
    const std::size_t vars = 1 + static_cast<std::size_t>(i % 3);
    std::vector<Polynomial> plain;
    std::vector<Polynomial> shifted;
    for (int j = 0; j < 1 + i % 2; ++j) {
      Polynomial f = random_poly(rng, vars, 3, 2);
      PolyExponent shift(vars);
      for (auto& k : shift) {
        k = sampling::uniform(rng, 0, 2);
      }
      Polynomial g(vars);
      g.add_scaled(f, 1, shift);
      plain.push_back(f);
      shifted.push_back(g);
    }
    auto a = saturate_by_variables(plain, vars);
    CHECK(a == saturate_by_variables(shifted, vars));
    CHECK(is_reduced(a));
    CHECK(every_s_polynomial_reduces(a));
    for (const auto& f : shifted) {
      CHECK(normal_form(f, a).is_zero());
    }
    CHECK(saturate_by_variables(a, vars) == a);
    // each element of the saturation times some (t_1 ... t_k)^m lies in the ideal
    const auto base = groebner_basis(shifted);
    for (const auto& g : a) {
      bool found = false;
      for (long m = 0; m <= 12 && !found; ++m) {
        Polynomial q(vars);
        q.add_scaled(g, 1, PolyExponent(vars, m));
        found = normal_form(q, base).is_zero();
      }
      CHECK(found);
    }
  }
}

TEST_CASE("saturation of an inhomogeneous ideal") {
  // t1 (t1 t2 - 1) : t^inf = (t1 t2 - 1)
  auto s = saturate_by_variables({poly(2, {{{2, 1}, 1}, {{1, 0}, -1}})}, 2);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == poly(2, {{{1, 1}, 1}, {{0, 0}, -1}}));
  // (t1^2 - t1, t2 - t1 t2) : t^inf = (t1 - 1)
  auto u = saturate_by_variables(
      {poly(2, {{{2, 0}, 1}, {{1, 0}, -1}}), poly(2, {{{0, 1}, 1}, {{1, 1}, -1}})}, 2);
  REQUIRE(u.size() == 1);
  CHECK(u[0] == poly(2, {{{1, 0}, 1}, {{0, 0}, -1}}));
}

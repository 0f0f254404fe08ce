#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/abelian.hpp"
#include "goldman/sampling.hpp"
#include "support.hpp"

using namespace goldman;
using goldman::testing::w;

TEST_CASE("re sums exponents per generator") {
  CHECK(re(Word(2), 2) == Monomial{0, 0});
  CHECK(re(w("a1^2 a2^-3", 2), 2) == Monomial{2, -3});
  CHECK(re(w("a1 a2 a1^-1", 2), 2) == Monomial{0, 1});
  CHECK_THROWS_AS(re(w("a3", 3), 2), std::out_of_range);
}

TEST_CASE("ab merges and prunes") {
  CHECK(ab<Integer>({{1, w("a1 a2 a1^-1", 2)}, {-1, w("a2", 2)}}, 2).is_zero());
  IntElement three = ab<Integer>({{3, w("a1", 2)}}, 2);
  CHECK(three.size() == 1);
  CHECK(three.coefficient(Monomial{1, 0}) == 3);
  CHECK(ab<Integer>({{1, w("a1", 2)}, {2, w("a1", 2)}}, 2) == three);
  RatElement half = ab<Rational>({{Rational(1, 2), w("a1", 2)}, {Rational(1, 2), w("a1", 2)}}, 2);
  CHECK(half == RatElement::term(Monomial{1, 0}));
}

TEST_CASE("exp_c") {
  CHECK(exp_c(w("a1^3 a2 a1^-1"), 1) == 2);
  CHECK(exp_c(w("a2"), 1) == 0);
  CHECK(exp_c(Word::generator(3, 1, pow2(70)), 1) == pow2(70));
  CHECK_THROWS_AS(exp_c(w("a2"), 4), std::out_of_range);
}

TEST_CASE("monomial group law") {
  CHECK(Monomial{1, 2} * Monomial{0, -2} == Monomial{1, 0});
  CHECK(monomial_inv(Monomial{2, -3}) == Monomial{-2, 3});
  Monomial x{5, -7, 1};
  CHECK((x * monomial_inv(x)).is_identity());
  CHECK_THROWS_AS(monomial_mul(Monomial{1}, Monomial{1, 2}), std::invalid_argument);
}

TEST_CASE("module elements reject mixed ranks") {
  IntElement u(2);
  CHECK_THROWS_AS(u.add_term(Monomial{1, 2, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(IntElement(2) + IntElement(3), std::invalid_argument);
}

TEST_CASE("arithmetic stays exact past 64 bits") {
  const Integer big = pow2(64);
  Word x = Word::generator(2, 1, big) * Word::generator(2, 1, big);
  CHECK(re(x, 2)[0] == pow2(65));
  IntElement u = IntElement::term(Monomial{1, 0}, big);
  u += IntElement::term(Monomial{1, 0}, -big);
  CHECK(u.is_zero());
}

TEST_CASE("promote embeds Z into Q") {
  IntElement u = ab<Integer>({{3, w("a1", 2)}, {-2, w("a2^5", 2)}}, 2);
  RatElement q = promote(u);
  CHECK(q.coefficient(Monomial{1, 0}) == 3);
  CHECK(q.coefficient(Monomial{0, 5}) == -2);
  CHECK(q.size() == 2);
}

TEST_CASE("iteration is lexicographic in the exponent vector") {
  sampling::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    IntElement u = sampling::element<Integer>(rng, 3, 6, 4);
    const Monomial* prev = nullptr;
    for (const auto& [x, c] : u.terms()) {
      CHECK(c != 0);
      if (prev != nullptr) {
        CHECK(std::lexicographical_compare(prev->exps().begin(), prev->exps().end(),
                                           x.exps().begin(), x.exps().end()));
      }
      prev = &x;
    }
  }
}

TEST_CASE("re is computed independently of word reduction") {
  // oracle: sum the raw letters without reducing
  sampling::Rng rng(4);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Letter> raw = sampling::raw_letters(rng, 3, 9, 4);
    std::vector<Integer> sums(3);
    for (const Letter& l : raw) {
      sums[l.gen - 1] += l.exp;
    }
    CHECK(re(Word::reduce(3, raw), 3) == Monomial(sums));
  }
}

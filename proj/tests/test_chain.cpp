#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/chain.hpp"
#include "goldman/sampling.hpp"
#include "support.hpp"

using namespace goldman;
using goldman::testing::str;
using goldman::testing::w;

namespace {

// One letter at a time on a stack, c-syllables kept as residues mod 2^n.
std::vector<Letter> stack_project(const Word& x, unsigned long n, std::size_t c) {
  const Integer mod = pow2(n);
  std::vector<Letter> st;
  for (const Letter& l : x.letters()) {
    if (l.gen == c) {
      Integer e = l.exp;
      if (!st.empty() && st.back().gen == c) {
        e += st.back().exp;
        st.pop_back();
      }
      e %= mod;  // mpz % truncates; sign fixed below
      if (e < 0) {
        e += mod;
      }
      if (e != 0) {
        st.push_back({c, e});
      }
      continue;
    }
    const int s = l.exp > 0 ? 1 : -1;
    for (Integer k = 0; k < abs(l.exp); ++k) {
      if (!st.empty() && st.back().gen == l.gen && st.back().exp == -s) {
        st.pop_back();
      } else {
        st.push_back({l.gen, s});
      }
    }
  }
  std::vector<Letter> out;
  for (Letter l : st) {
    if (l.gen == c && 2 * l.exp > mod) {
      l.exp -= mod;
    }
    if (!out.empty() && out.back().gen == l.gen && l.gen != c) {
      out.back().exp += l.exp;
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GnElement p(std::string_view text, unsigned long n) { return project_gn(w(text), n, 1); }

}  // namespace

TEST_CASE("projection examples") {
  CHECK(str(p("a1^5", 1).word()) == "a1");
  for (unsigned long n = 0; n <= 8; ++n) {
    CHECK(project_gn(Word::generator(3, 1, pow2(n)), n, 1).is_identity());
  }
  CHECK(str(p("a2 a1^6 a2^-1", 2).word()) == "a2 a1^2 a2^-1");
  CHECK(str(p("a2 a1^-2 a2^-1", 2).word()) == "a2 a1^2 a2^-1");
  CHECK(str(p("a2 a1^3 a2^-1", 2).word()) == "a2 a1^-1 a2^-1");
  CHECK(str(p("a2 a1^7 a2", 0).word()) == "a2^2");
  CHECK(str(p("a1^3 a2", 3).word()) == "a1^3 a2");
  CHECK_THROWS_AS(project_gn(w("a2"), 1, 4), std::out_of_range);
}

TEST_CASE("group law examples") {
  CHECK(gn_mul(p("a1", 1), p("a1", 1)).is_identity());
  CHECK(str(gn_mul(p("a2 a1", 1), p("a1 a2", 1)).word()) == "a2^2");
  CHECK(str(gn_inv(p("a2 a1", 1)).word()) == "a1 a2^-1");
  CHECK(str(gn_inv(p("a2 a1", 3)).word()) == "a1^-1 a2^-1");
  CHECK_THROWS_AS(gn_mul(p("a1", 1), p("a1", 2)), std::invalid_argument);
  CHECK_THROWS_AS(gn_mul(p("a1", 1), project_gn(w("a2"), 1, 2)), std::invalid_argument);
}

TEST_CASE("conjugacy examples") {
  CHECK(gn_conjugate(p("a1^2", 1), GnElement::identity(1, 1, 3)));
  for (unsigned long n = 0; n <= 6; ++n) {
    CHECK_FALSE(gn_conjugate(project_gn(Word::generator(3, 1, pow2(n)), n + 1, 1),
                             GnElement::identity(n + 1, 1, 3)));
  }
  CHECK(gn_conjugate(p("a2 a1 a2^-1", 1), p("a1", 1)));
  CHECK(gn_conjugate(p("a1 a2 a1^3", 2), p("a2", 2)));
  CHECK_FALSE(gn_conjugate(p("a1 a2 a1^2", 3), p("a2", 3)));
  CHECK_THROWS_AS(gn_conjugate(p("a1", 1), p("a1", 2)), std::invalid_argument);
}

TEST_CASE("cn generators") {
  std::vector<unsigned long> m0{0};
  std::vector<Word> x0{w("a2")};
  Word g0 = cn_generator(0, m0, x0, Word(3), 1);
  CHECK(str(g0) == "a1 a2 a1^-1 a2^-1");
  CHECK(project_gn(g0, 0, 1).is_identity());

  std::vector<unsigned long> m1{1};
  Word g1 = cn_generator(1, m1, x0, w("a3"), 1);
  CHECK(str(g1) == "a3 a1^2 a2 a1^-2 a2^-1 a3^-1");
  CHECK(project_gn(g1, 1, 1).is_identity());
  CHECK_FALSE(project_gn(g1, 2, 1).is_identity());

  CHECK_THROWS_AS(cn_generator(1, std::span<const unsigned long>{}, std::span<const Word>{},
                               Word(3), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(cn_generator(2, m1, x0, Word(3), 1), std::invalid_argument);
  std::vector<unsigned long> m2{1, 2};
  CHECK_THROWS_AS(cn_generator(1, m2, x0, Word(3), 1), std::invalid_argument);
}

TEST_CASE("separation examples") {
  for (unsigned long k = 0; k <= 6; ++k) {
    CHECK(separation_level(Word::generator(3, 1, pow2(k)), Word(3), 1, 12) == k + 1);
  }
  CHECK(separation_level(w("a2"), w("a2^-1"), 1, 12) == 0ul);
  CHECK_THROWS_AS(separation_level(w("a1 a2"), w("a2 a1"), 1, 12), std::invalid_argument);
  CHECK_FALSE(separation_level(Word::generator(3, 1, pow2(10)), Word(3), 1, 5).has_value());
  CHECK(total_c_exponent(w("a1^3 a2 a1^-2"), w("a1"), 1) == 6);
  CHECK(separation_bound(0) == 0);
  CHECK(separation_bound(1) == 2);
  CHECK(separation_bound(2) == 3);
  CHECK(separation_bound(3) == 3);
  CHECK(separation_bound(4) == 4);
}

TEST_CASE("projection matches the stack oracle") {
  sampling::Rng rng(61);
  for (int i = 0; i < 4000; ++i) {
    Word x = sampling::word(rng, 3, 8, 9);
    const unsigned long n = static_cast<unsigned long>(i % 7);
    CHECK(project_gn(x, n, 1).letters() == stack_project(x, n, 1));
  }
}

TEST_CASE("conjugation keeps the class and abelian invariants separate classes") {
  sampling::Rng rng(62);
  for (int i = 0; i < 2000; ++i) {
    const unsigned long n = static_cast<unsigned long>(i % 6);
    GnElement x = project_gn(sampling::word(rng, 3, 5, 5), n, 1);
    GnElement g = project_gn(sampling::word(rng, 3, 4, 5), n, 1);
    CHECK(gn_conjugate(x, gn_mul(gn_mul(g, x), gn_inv(g))));
    GnElement y = project_gn(sampling::word(rng, 3, 5, 5), n, 1);
    // exponent sums of the free generators, and of c mod 2^n, are class functions
    Monomial ex = re(x.word(), 3);
    Monomial ey = re(y.word(), 3);
    Integer dc = ex[0] - ey[0];
    const bool invariants_agree =
        ex[1] == ey[1] && ex[2] == ey[2] && (n == 0 || dc % pow2(n) == 0);
    if (!invariants_agree) {
      CHECK_FALSE(gn_conjugate(x, y));
    }
    CHECK(gn_conjugate(x, y) == (gn_conjugacy_canonical(x) == gn_conjugacy_canonical(y)));
  }
}

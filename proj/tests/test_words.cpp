#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/sampling.hpp"
#include "goldman/words.hpp"
#include "support.hpp"

#include <algorithm>
#include <deque>

using namespace goldman;
using goldman::testing::str;
using goldman::testing::w;

namespace {

// Single-letter expansion, so oracles can work letter by letter.
std::vector<std::pair<std::size_t, int>> expand(const Word& x) {
  std::vector<std::pair<std::size_t, int>> out;
  for (const Letter& l : x.letters()) {
    const int s = l.exp > 0 ? 1 : -1;
    for (Integer k = 0; k < abs(l.exp); ++k) {
      out.emplace_back(l.gen, s);
    }
  }
  return out;
}

// Letter-at-a-time cancellation on the single-letter sequence.
std::vector<std::pair<std::size_t, int>> naive_reduce(const std::vector<Letter>& raw) {
  std::vector<std::pair<std::size_t, int>> st;
  for (const Letter& l : raw) {
    const int s = l.exp > 0 ? 1 : -1;
    for (Integer k = 0; k < abs(l.exp); ++k) {
      if (!st.empty() && st.back().first == l.gen && st.back().second == -s) {
        st.pop_back();
      } else {
        st.emplace_back(l.gen, s);
      }
    }
  }
  return st;
}

// All rotations of the cyclically reduced single-letter sequence; the
// canonical forms of conjugate words share this set.
std::vector<std::vector<std::pair<std::size_t, int>>> rotations_of_core(const Word& x) {
  std::deque<std::pair<std::size_t, int>> d;
  for (auto p : expand(x)) {
    d.push_back(p);
  }
  while (d.size() >= 2 && d.front().first == d.back().first &&
         d.front().second == -d.back().second) {
    d.pop_front();
    d.pop_back();
  }
  std::vector<std::pair<std::size_t, int>> v(d.begin(), d.end());
  std::vector<std::vector<std::pair<std::size_t, int>>> out;
  for (std::size_t r = 0; r < std::max<std::size_t>(v.size(), 1); ++r) {
    std::vector<std::pair<std::size_t, int>> rot;
    for (std::size_t i = 0; i < v.size(); ++i) {
      rot.push_back(v[(r + i) % v.size()]);
    }
    out.push_back(rot);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("reduce cancels and merges") {
  std::vector<Letter> cancel{{1, 1}, {1, -1}};
  CHECK(Word::reduce(2, cancel).empty());
  std::vector<Letter> merge{{1, 2}, {2, 1}, {2, -1}, {1, 3}};
  CHECK(str(Word::reduce(2, merge)) == "a1^5");
  std::vector<Letter> plain{{1, 1}, {2, 1}};
  CHECK(str(Word::reduce(2, plain)) == "a1 a2");
  std::vector<Letter> zeros{{1, 0}, {2, 3}, {2, 0}, {2, -3}};
  CHECK(Word::reduce(2, zeros).empty());
}

TEST_CASE("reduce rejects generators outside the alphabet") {
  std::vector<Letter> bad{{3, 1}};
  CHECK_THROWS_AS(Word::reduce(2, bad), std::out_of_range);
  std::vector<Letter> zero{{0, 1}};
  CHECK_THROWS_AS(Word::reduce(2, zero), std::out_of_range);
}

TEST_CASE("concat and inverse") {
  CHECK((w("a1") * w("a1^-1")).empty());
  CHECK(str(w("a1 a2") * w("a2^-1 a1")) == "a1^2");
  CHECK(Word(3) * w("a2 a3") == w("a2 a3"));
  CHECK(str(inverse(w("a1 a2"))) == "a2^-1 a1^-1");
  CHECK(inverse(Word(3)).empty());
  CHECK(str(inverse(w("a1^3"))) == "a1^-3");
  CHECK_THROWS_AS(concat(w("a1", 2), w("a1", 3)), std::invalid_argument);
}

TEST_CASE("cyclic_reduce examples") {
  CyclicReduction a = cyclic_reduce(w("a1 a2 a1^-1"));
  CHECK(str(a.core) == "a2");
  CHECK(str(a.conjugator) == "a1");
  CyclicReduction b = cyclic_reduce(w("a1 a2"));
  CHECK(str(b.core) == "a1 a2");
  CHECK(b.conjugator.empty());
  CyclicReduction c = cyclic_reduce(w("a1 a2 a2^-1 a1^-1"));
  CHECK(c.core.empty());
  CHECK(c.conjugator.empty());
  // partial merge of the end syllables
  CyclicReduction d = cyclic_reduce(w("a1^2 a2 a1^-1"));
  CHECK(d.core.is_cyclically_reduced());
  CHECK(d.core.syllables() == 2);
  CHECK(are_conjugate(d.core, w("a1 a2")));
  CHECK(conjugate(d.core, d.conjugator) == w("a1^2 a2 a1^-1"));
}

TEST_CASE("conjugacy canonical form") {
  CHECK(conjugacy_canonical(w("a2 a1")) == conjugacy_canonical(w("a1 a2")));
  CHECK(str(conjugacy_canonical(w("a2 a1")).representative()) == "a1 a2");
  CHECK(str(conjugacy_canonical(w("a1 a2 a1^-1")).representative()) == "a2");
  CHECK(are_conjugate(w("a1 a2 a1^-1"), w("a2")));
  CHECK_FALSE(are_conjugate(w("a1"), w("a2")));
  CHECK(are_conjugate(w("a1 a2"), w("a2 a1")));
  CHECK_FALSE(are_conjugate(w("a1 a2"), w("a1 a2^-1")));
  // least rotation under (gen, exp): a1^-1 sorts before a1
  CHECK(str(conjugacy_canonical(w("a2 a1 a3 a1^-1")).representative()) == "a1^-1 a2 a1 a3");
}

TEST_CASE("empty and single-syllable words are cyclically reduced") {
  CHECK(Word(2).is_cyclically_reduced());
  CHECK(w("a1^4").is_cyclically_reduced());
  CHECK_FALSE(w("a1 a2 a1").is_cyclically_reduced());
}

TEST_CASE("reduce matches letter-by-letter cancellation") {
  sampling::Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    std::vector<Letter> raw = sampling::raw_letters(rng, 3, 8, 3);
    CHECK(expand(Word::reduce(3, raw)) == naive_reduce(raw));
  }
}

TEST_CASE("conjugacy agrees with the rotation-set oracle") {
  sampling::Rng rng(12);
  for (int i = 0; i < 3000; ++i) {
    Word a = sampling::word(rng, 2, 4, 2);
    Word b = sampling::word(rng, 2, 4, 2);
    if (i % 3 == 0) {
      b = conjugate(a, sampling::word(rng, 2, 3, 2));
    }
    CHECK(are_conjugate(a, b) == (rotations_of_core(a) == rotations_of_core(b)));
  }
}

TEST_CASE("canonical form is a rotation-minimal cyclically reduced word") {
  sampling::Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    Word x = sampling::word(rng, 3, 6, 3);
    CyclicWord c = conjugacy_canonical(x);
    const auto& ls = c.letters();
    CHECK(c.representative().is_cyclically_reduced());
    for (std::size_t r = 1; r < ls.size(); ++r) {
      std::vector<Letter> rot(ls.begin() + static_cast<long>(r), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(r));
      bool not_smaller = std::lexicographical_compare_three_way(
                             ls.begin(), ls.end(), rot.begin(), rot.end(), compare_letters) <= 0;
      CHECK(not_smaller);
    }
  }
}

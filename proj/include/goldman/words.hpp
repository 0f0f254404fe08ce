#pragma once

// Free-group words over generators a_1..a_n, run-length encoded.
//
// A Word is always freely reduced: adjacent letters carry distinct generators
// and no letter has exponent zero. Conjugacy classes (free homotopy classes of
// loops on a surface with boundary) are represented by CyclicWord, the least
// rotation of the cyclically reduced core under the (gen, exp) letter order.
//
// Words are plain free-group words. For closed surfaces the surface relator is
// not applied, so are_conjugate is only sound when pi_1 is free.

#include "goldman/number.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace goldman {

struct Letter {
  std::size_t gen = 1;  // 1-based generator index
  Integer exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Total order on letters: generator ascending, then exponent ascending.
std::strong_ordering compare_letters(const Letter& x, const Letter& y);

class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  // Freely reduces an arbitrary letter sequence. Zero exponents are dropped.
  // Throws std::out_of_range if a generator is outside 1..rank.
  static Word reduce(std::size_t rank, std::span<const Letter> raw);

  static Word generator(std::size_t rank, std::size_t gen, Integer exp = 1);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t syllables() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Word length in single letters, i.e. the sum of |exp|.
  Integer length() const;

  bool is_cyclically_reduced() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

// Free reduction of raw (gen, exp) pairs; see Word::reduce.
Word reduce(std::size_t rank, std::span<const Letter> raw);

// Reduced product u·v. Throws std::invalid_argument on rank mismatch.
Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

// g·w·g^{-1}
Word conjugate(const Word& w, const Word& g);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator · core · conjugator^{-1}
};

CyclicReduction cyclic_reduce(const Word& w);

class CyclicWord {
 public:
  CyclicWord() = default;

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  // The stored rotation as a linear word.
  Word representative() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& x, const CyclicWord& y);

 private:
  friend CyclicWord conjugacy_canonical(const Word& w);

  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

CyclicWord conjugacy_canonical(const Word& w);

// Conjugacy in the free group. Throws std::invalid_argument on rank mismatch.
bool are_conjugate(const Word& u, const Word& v);

// Index of the least rotation of a letter sequence under compare_letters.
std::size_t least_rotation(std::span<const Letter> letters);

}  // namespace goldman

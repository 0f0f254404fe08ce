#pragma once

// The quotients G_n = Z/2^n * F of a free group by the normal closure of
// c^{2^n}, where c = a_{c_index} is a free generator and F is free on the
// remaining generators.
//
// Elements are kept in free-product normal form: syllables alternate between
// factors, c-syllables carry symmetric residues in (-2^{n-1}, 2^{n-1}]. At
// level 0 the c factor is trivial.

#include "goldman/number.hpp"
#include "goldman/words.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace goldman {

class GnElement {
 public:
  // Normal form of an arbitrary letter sequence. Throws std::out_of_range for
  // generators outside 1..rank or c_index outside 1..rank.
  static GnElement normalize(unsigned long level, std::size_t c_index, std::size_t rank,
                             std::span<const Letter> raw);
  static GnElement identity(unsigned long level, std::size_t c_index, std::size_t rank);

  unsigned long level() const noexcept { return level_; }
  std::size_t c_index() const noexcept { return c_index_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }

  // The normal form read back as a free-group word.
  Word word() const { return Word::reduce(rank_, letters_); }

  friend bool operator==(const GnElement&, const GnElement&) = default;

 private:
  GnElement() = default;

  unsigned long level_ = 0;
  std::size_t c_index_ = 1;
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

GnElement project_gn(const Word& w, unsigned long level, std::size_t c_index);

// Throw std::invalid_argument on mismatched level, c_index or rank.
GnElement gn_mul(const GnElement& x, const GnElement& y);
GnElement gn_inv(const GnElement& x);
bool gn_conjugate(const GnElement& x, const GnElement& y);

// Cyclically reduced normal form, least rotation; equal iff conjugate.
std::vector<Letter> gn_conjugacy_canonical(const GnElement& x);

// g * prod_i (c^{2^{m_i}} x_i c^{-2^{m_i}} x_i^{-1}) * g^{-1}, reduced.
// Throws std::invalid_argument on empty or mismatched lists, m_i < level, or
// words of different rank.
Word cn_generator(unsigned long level, std::span<const unsigned long> m_list,
                  std::span<const Word> x_list, const Word& g, std::size_t c_index);

// Smallest level <= n_max at which the projections of a and b are not
// conjugate. Throws std::invalid_argument if a and b are conjugate in the free
// group, since then no level separates them.
std::optional<unsigned long> separation_level(const Word& a, const Word& b, std::size_t c_index,
                                              unsigned long n_max);

// Sum of |exponent| over the c-syllables of the reduced words a and b.
Integer total_c_exponent(const Word& a, const Word& b, std::size_t c_index);

// min { n : 2^{n-1} > e }: at this level no c-exponent of size <= e is
// changed by the projection, so non-conjugate words stay non-conjugate.
unsigned long separation_bound(const Integer& e);

}  // namespace goldman

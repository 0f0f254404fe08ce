#pragma once

// Abelianization layer: exponent-vector monomials of A(n), exact formal sums
// over Z or Q, and the maps Re (word -> monomial) and Ab (formal sum of words
// -> module element).

#include "goldman/number.hpp"
#include "goldman/words.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goldman {

// Element of A(n), stored as its exponent vector (entry j-1 is the exponent of a_j).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Integer> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<long> exps) : exps_(exps.begin(), exps.end()) {}

  static Monomial identity(std::size_t n) { return Monomial(std::vector<Integer>(n)); }
  // a_j, 1-based
  static Monomial generator(std::size_t n, std::size_t j, Integer exp = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  const std::vector<Integer>& exps() const noexcept { return exps_; }
  const Integer& operator[](std::size_t i) const { return exps_[i]; }
  bool is_identity() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic on the exponent vector.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

 private:
  std::vector<Integer> exps_;
};

// Group law of A(n). Throws std::invalid_argument on length mismatch.
Monomial monomial_mul(const Monomial& x, const Monomial& y);
Monomial monomial_inv(const Monomial& x);

inline Monomial operator*(const Monomial& x, const Monomial& y) { return monomial_mul(x, y); }

// Finitely supported map Monomial -> Coef with no stored zeros, iterated in
// lexicographic monomial order.
template <Coefficient Coef>
class ModuleElement {
 public:
  using coefficient_type = Coef;
  using term_map = std::map<Monomial, Coef>;
  static constexpr Ring ring = RingOf<Coef>::value;

  ModuleElement() = default;
  explicit ModuleElement(std::size_t rank) : rank_(rank) {}

  static ModuleElement term(const Monomial& x, Coef c = Coef(1)) {
    ModuleElement e(x.size());
    e.add_term(x, c);
    return e;
  }

  std::size_t rank() const noexcept { return rank_; }
  const term_map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coef coefficient(const Monomial& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  ModuleElement& add_term(const Monomial& x, const Coef& c) {
    if (x.size() != rank_) {
      throw std::invalid_argument("monomial of length " + std::to_string(x.size()) +
                                  " in element of rank " + std::to_string(rank_));
    }
    if (c == 0) {
      return *this;
    }
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
    return *this;
  }

  ModuleElement& operator+=(const ModuleElement& other) {
    check_rank(other);
    for (const auto& [x, c] : other.terms_) {
      add_term(x, c);
    }
    return *this;
  }

  ModuleElement& operator-=(const ModuleElement& other) {
    check_rank(other);
    for (const auto& [x, c] : other.terms_) {
      add_term(x, Coef(-c));
    }
    return *this;
  }

  ModuleElement& operator*=(const Coef& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, c] : terms_) {
      c *= s;
    }
    return *this;
  }

  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Coef& s, ModuleElement a) { return a *= s; }
  friend ModuleElement operator-(ModuleElement a) { return a *= Coef(-1); }

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  void check_rank(const ModuleElement& other) const {
    if (other.rank_ != rank_) {
      throw std::invalid_argument("module elements of different rank");
    }
  }

  std::size_t rank_ = 0;
  term_map terms_;
};

using IntElement = ModuleElement<Integer>;
using RatElement = ModuleElement<Rational>;

// Explicit embedding Z[A(n)] -> Q[A(n)].
RatElement promote(const IntElement& u);

// Re: exponent sums per generator. Throws std::out_of_range if w uses a
// generator beyond n.
Monomial re(const Word& w, std::size_t n);

template <Coefficient Coef>
struct WordTerm {
  Coef coef;
  Word word;
};

// Ab: linear extension of re to formal sums of words.
template <Coefficient Coef>
ModuleElement<Coef> ab(std::span<const WordTerm<Coef>> sum, std::size_t n) {
  ModuleElement<Coef> out(n);
  for (const auto& t : sum) {
    out.add_term(re(t.word, n), t.coef);
  }
  return out;
}

template <Coefficient Coef>
ModuleElement<Coef> ab(std::initializer_list<WordTerm<Coef>> sum, std::size_t n) {
  return ab<Coef>(std::span<const WordTerm<Coef>>(sum.begin(), sum.size()), n);
}

// Exponent of the generator a_{c_index} in re(w). Throws std::out_of_range.
Integer exp_c(const Word& w, std::size_t c_index);

}  // namespace goldman

#include "goldman/abelian.hpp"

#include <algorithm>

namespace goldman {

Monomial Monomial::generator(std::size_t n, std::size_t j, Integer exp) {
  if (j < 1 || j > n) {
    throw std::out_of_range("generator a" + std::to_string(j) + " outside 1.." +
                            std::to_string(n));
  }
  std::vector<Integer> e(n);
  e[j - 1] = std::move(exp);
  return Monomial(std::move(e));
}

bool Monomial::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const Integer& e) { return e == 0; });
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  return std::lexicographical_compare_three_way(
      x.exps_.begin(), x.exps_.end(), y.exps_.begin(), y.exps_.end(),
      [](const Integer& a, const Integer& b) {
        int c = cmp(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
      });
}

Monomial monomial_mul(const Monomial& x, const Monomial& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("monomial lengths differ");
  }
  std::vector<Integer> e(x.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = x[i] + y[i];
  }
  return Monomial(std::move(e));
}

Monomial monomial_inv(const Monomial& x) {
  std::vector<Integer> e(x.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = -x[i];
  }
  return Monomial(std::move(e));
}

RatElement promote(const IntElement& u) {
  RatElement out(u.rank());
  for (const auto& [x, c] : u.terms()) {
    out.add_term(x, Rational(c));
  }
  return out;
}

Monomial re(const Word& w, std::size_t n) {
  std::vector<Integer> e(n);
  for (const Letter& l : w.letters()) {
    if (l.gen < 1 || l.gen > n) {
      throw std::out_of_range("re: generator a" + std::to_string(l.gen) + " outside 1.." +
                              std::to_string(n));
    }
    e[l.gen - 1] += l.exp;
  }
  return Monomial(std::move(e));
}

Integer exp_c(const Word& w, std::size_t c_index) {
  if (c_index < 1 || c_index > w.rank()) {
    throw std::out_of_range("exp_c: index " + std::to_string(c_index) + " outside 1.." +
                            std::to_string(w.rank()));
  }
  Integer total = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == c_index) {
      total += l.exp;
    }
  }
  return total;
}

}  // namespace goldman

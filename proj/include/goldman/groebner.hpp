#pragma once

// Multivariate polynomials over Q and reduced Groebner bases in graded
// reverse lexicographic order.
//
// Used to decide membership in ideals of the Laurent polynomial ring
// Q[t_1^{+-1}, ..., t_k^{+-1}] = Q[C_S]: such an ideal is represented by its
// contraction to Q[t_1, ..., t_k], which is saturated with respect to
// t_1 ... t_k, and the reduced basis of that contraction is canonical.

#include "goldman/number.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace goldman {

using PolyExponent = std::vector<long>;

// a > b in grevlex: higher total degree, then the smaller exponent in the
// last variable where they differ.
struct GrevlexGreater {
  bool operator()(const PolyExponent& a, const PolyExponent& b) const;
};

class Polynomial {
 public:
  // Terms in descending grevlex order, so begin() is the leading term.
  using term_map = std::map<PolyExponent, Rational, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const Rational& c);

  std::size_t vars() const noexcept { return vars_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  const PolyExponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Polynomial& add_term(const PolyExponent& e, const Rational& c);
  // this += c * x^shift * p
  Polynomial& add_scaled(const Polynomial& p, const Rational& c, const PolyExponent& shift);

  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t vars_ = 0;
  term_map terms_;
};

// Full reduction of p modulo `basis` (any generating set; a Groebner basis
// gives the canonical remainder).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

// Reduced Groebner basis, monic, sorted by leading exponent descending.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators);

// Reduced basis of (generators) : (x_0 x_1 ... x_{k-1})^infinity.
std::vector<Polynomial> saturate_by_variables(const std::vector<Polynomial>& generators,
                                              std::size_t vars);

}  // namespace goldman

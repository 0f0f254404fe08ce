#pragma once

// Ideals of Q[A(n)].
//
// Monomials fall into classes modulo the center C_S. A class that is not the
// center itself is written f_alpha(x) = sum_i q_i c_i x with central c_i; the
// data (c_i, q_i), normalized by central translation and scaling, is a
// PrimitiveLabel. Every ideal is the span of the f_alpha(x) (x non-central) for
// the labels alpha in the ideal of Q[C_S] generated by its labels, plus a
// subspace C_1 of Q[C_S]. RationalIdeal stores the generating labels, the
// canonical Groebner form of the label ideal, and C_1 in reduced echelon form.

#include "goldman/abelian.hpp"
#include "goldman/groebner.hpp"
#include "goldman/number.hpp"
#include "goldman/symplectic.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace goldman {

class PrimitiveLabel {
 public:
  using Pair = std::pair<Monomial, Rational>;

  PrimitiveLabel() = default;

  // Canonicalizes (c_i, q_i): translate so the lex-least c_i is the identity,
  // then scale its coefficient to 1. If given, *offset receives the least c_i
  // and *scale its coefficient. Throws std::invalid_argument on an empty list,
  // zero coefficients, repeated or non-central monomials.
  static PrimitiveLabel canonical(const SurfaceSignature& sig, std::vector<Pair> pairs,
                                  Monomial* offset = nullptr, Rational* scale = nullptr);

  static PrimitiveLabel trivial(std::size_t n);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t rank() const { return pairs_.front().first.size(); }
  bool is_trivial() const noexcept { return pairs_.size() == 1; }

  // The label as an element of Q[C_S].
  RatElement as_element() const;

  friend bool operator==(const PrimitiveLabel&, const PrimitiveLabel&) = default;
  friend std::strong_ordering operator<=>(const PrimitiveLabel& a, const PrimitiveLabel& b);

 private:
  std::vector<Pair> pairs_;
};

// f_label(x) = sum_i q_i c_i x
RatElement f_label(const PrimitiveLabel& label, const Monomial& x);

// x with the central coordinates (2g+1..n) zeroed.
Monomial class_base(const SurfaceSignature& sig, const Monomial& x);

struct StandardPart {
  PrimitiveLabel label;
  Monomial base;    // central coordinates zero
  Monomial offset;  // central
  Rational scale;   // part = scale * f_label(offset * base)
};

struct StandardRepresentation {
  std::vector<StandardPart> parts;  // ordered by base
  RatElement central;
};

StandardRepresentation standard_representation(const SurfaceSignature& sig, const RatElement& u);

// Inverse of standard_representation.
RatElement reassemble(const StandardRepresentation& rep);

// [f_label(x), y] == <x, y> f_label(xy). Throws std::invalid_argument if x is central.
bool primitive_bracket_identity_check(const SurfaceSignature& sig, const PrimitiveLabel& label,
                                      const Monomial& x, const Monomial& y);

// Reduced echelon basis under the lexicographic monomial order: the pivot of
// each row is its least monomial, with coefficient 1, absent from other rows.
std::vector<RatElement> echelon_basis(std::vector<RatElement> vectors, std::size_t rank);

// Remainder of v after eliminating the pivots of an echelon basis.
RatElement echelon_reduce(RatElement v, const std::vector<RatElement>& basis);

class RationalIdeal {
 public:
  // The zero ideal.
  explicit RationalIdeal(const SurfaceSignature& sig);

  // Throws std::invalid_argument if a label or central vector is not over the
  // center of `sig`.
  static RationalIdeal from_parts(const SurfaceSignature& sig, std::set<PrimitiveLabel> labels,
                                  std::vector<RatElement> central_span);

  const SurfaceSignature& signature() const noexcept { return sig_; }
  const std::set<PrimitiveLabel>& labels() const noexcept { return labels_; }
  const std::vector<RatElement>& central_basis() const noexcept { return central_basis_; }
  // Reduced grevlex Groebner basis of the label ideal in Q[t_1..t_k], t_j <-> a_{2g+j}.
  const std::vector<Polynomial>& label_ideal() const noexcept { return label_ideal_; }

  // Q[X_label] is contained in this ideal.
  bool covers_label(const PrimitiveLabel& label) const;
  bool central_contains(const RatElement& c) const;

 private:
  SurfaceSignature sig_;
  std::set<PrimitiveLabel> labels_;
  std::vector<RatElement> central_basis_;
  std::vector<Polynomial> label_ideal_;
};

// Label of a central-supported element as a polynomial in the central variables,
// shifted to nonnegative exponents.
Polynomial label_polynomial(const SurfaceSignature& sig, const PrimitiveLabel& label);

// Smallest ideal containing the generators.
RationalIdeal ideal_closure(const SurfaceSignature& sig, const std::vector<RatElement>& generators);

bool contains(const RationalIdeal& ideal, const RatElement& u);
inline bool contains(const SurfaceSignature&, const RationalIdeal& ideal, const RatElement& u) {
  return contains(ideal, u);
}

bool ideals_equal(const RationalIdeal& a, const RationalIdeal& b);
// a is contained in b.
bool is_subideal(const RationalIdeal& a, const RationalIdeal& b);

// The forms an ideal of Q[A(n)] can take on a closed surface.
enum class ClosedIdealForm { zero, identity_line, non_identity, whole };

// nullopt if the ideal is not one of the listed forms (or the surface is not closed).
std::optional<ClosedIdealForm> classify_closed(const RationalIdeal& ideal);

struct ClosedClassificationReport {
  bool verdict = true;
  std::uint64_t cases = 0;
  std::vector<RatElement> failing_generators;
};

// Closures of sampled single-monomial generator sets ({e}, {x}, {e, x} and
// random monomials with random coefficients) each land in one of the forms.
// Throws std::invalid_argument for surfaces with boundary.
ClosedClassificationReport classify_closed_check(const SurfaceSignature& sig,
                                                 std::uint64_t samples, std::uint64_t seed);

struct ClosureViolation {
  RatElement member;
  Monomial v;
};

// Samples members of the ideal and monomials v and checks [member, v] stays in
// the ideal. Debug aid: the closure computation does not rely on it.
std::optional<ClosureViolation> verify_closure_sampled(const RationalIdeal& ideal,
                                                       std::uint64_t samples,
                                                       std::uint64_t seed);

}  // namespace goldman

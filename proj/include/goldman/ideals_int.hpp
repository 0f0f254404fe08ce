#pragma once

// Geometric Z-submodules of Z[A(n)]: submodules spanned by integer multiples of
// monomials, described by alpha(x) = least positive multiple of x inside the
// submodule (0 when no multiple lies in it).
//
// A geometric submodule is a Lie ideal iff alpha(vw) | <v,w> alpha(w) for all
// monomials v, w. The checks here sample or enumerate that condition over a
// finite exponent box; they cannot prove it for all of A(n).

#include "goldman/abelian.hpp"
#include "goldman/number.hpp"
#include "goldman/symplectic.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace goldman {

// The cube [-radius, radius]^dim.
struct ExponentBox {
  std::size_t dim = 0;
  long radius = 0;

  bool contains(const Monomial& x) const;
  bool contains(const ExponentBox& other) const;
  // Number of lattice points.
  std::uint64_t points() const;
  // Calls f on every point, lexicographic order.
  template <typename F>
  void for_each(F&& f) const;
  Monomial point(std::uint64_t index) const;
};

// alpha = 1 on the finite exception set K, gcd of the exponents elsewhere.
struct IKRule {
  std::size_t n = 0;
  std::set<Monomial> exceptions;
};

// alpha given explicitly inside a box: `entries` override `default_alpha`.
struct TableRule {
  ExponentBox box;
  Integer default_alpha = 1;
  std::map<Monomial, Integer> entries;
};

class GeometricSubmodule {
 public:
  using Rule = std::variant<IKRule, TableRule>;

  static GeometricSubmodule ik(std::size_t n, std::set<Monomial> exceptions);
  // Throws std::invalid_argument on negative values or entries outside the box.
  static GeometricSubmodule table(ExponentBox box, Integer default_alpha,
                                  std::map<Monomial, Integer> entries = {});

  std::size_t n() const;
  const Rule& rule() const noexcept { return rule_; }
  bool in_domain(const Monomial& x) const;
  bool domain_contains(const ExponentBox& box) const;

  // Throws std::out_of_range outside a table rule's box.
  Integer alpha(const Monomial& x) const;

 private:
  explicit GeometricSubmodule(Rule rule) : rule_(std::move(rule)) {}
  Rule rule_;
};

inline Integer alpha(const GeometricSubmodule& sub, const Monomial& x) { return sub.alpha(x); }

// gcd of the exponent tuple; gcd of the zero tuple is 0.
Integer exponent_gcd(const Monomial& x);

// Every coefficient is a multiple of alpha at its monomial.
bool contains(const GeometricSubmodule& sub, const IntElement& u);

struct PairCounterexample {
  Monomial first;   // v (closure form) or k (divisibility form)
  Monomial second;  // w (closure form) or i (divisibility form)
};

struct IdealCheckReport {
  bool verdict = true;
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;
  std::optional<PairCounterexample> counterexample;
};

// alpha(vw) | <v, w> alpha(w), i.e. [alpha(w) w, v] lies in the submodule.
bool closure_condition(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                      const Monomial& v, const Monomial& w);

// Samples (w, vw) uniformly from the box. Throws std::invalid_argument when
// the box leaves the rule's domain.
IdealCheckReport ideal_check_sampled(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                                     const ExponentBox& box, std::uint64_t samples,
                                     std::uint64_t seed);

// Every (w, vw) with both ends in the box, lexicographic order.
IdealCheckReport ideal_check_exhaustive(const SurfaceSignature& sig,
                                        const GeometricSubmodule& sub, const ExponentBox& box);

// gcd over t = 1..g of gcd(k_{2t-1}, k_{2t}) * gcd(i_{2t-1}, i_{2t}).
Integer prop_multiplier(const SurfaceSignature& sig, const Monomial& k, const Monomial& i);

// alpha(k) | alpha(i) * prop_multiplier(k, i)
bool prop_condition(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                    const Monomial& k, const Monomial& i);

IdealCheckReport prop_divisibility_check(const SurfaceSignature& sig,
                                         const GeometricSubmodule& sub, const ExponentBox& box,
                                         std::uint64_t samples, std::uint64_t seed);

IdealCheckReport prop_divisibility_exhaustive(const SurfaceSignature& sig,
                                              const GeometricSubmodule& sub,
                                              const ExponentBox& box);

// Exponent tuples ordered by max |entry|, then lexicographically, keeping
// those with gcd > 1 that are not in `excluded`.
std::vector<Monomial> ik_candidates(std::size_t n, const std::set<Monomial>& excluded,
                                    std::size_t count);

// I_{K_0}, I_{K_1}, ..., I_{K_{count-1}} with K_j = K_0 plus the first j candidates.
std::vector<GeometricSubmodule> ik_family(std::size_t n, const std::set<Monomial>& k0,
                                          std::size_t count);

template <typename F>
void ExponentBox::for_each(F&& f) const {
  std::vector<long> e(dim, -radius);
  std::vector<Integer> big(dim);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) {
      big[i] = e[i];
    }
    f(Monomial(big));
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (e[i] < radius) {
        ++e[i];
        break;
      }
      e[i] = -radius;
      if (i == 0) {
        return;
      }
    }
    if (dim == 0) {
      return;
    }
  }
}

}  // namespace goldman

#pragma once

// Lie bracket on Z[A(n)] and Q[A(n)]: [x, y] = <x, y> xy on monomials,
// extended bilinearly. Results are merged and zero-pruned, so equality of
// brackets is structural.

#include "goldman/abelian.hpp"
#include "goldman/symplectic.hpp"

#include <stdexcept>

namespace goldman {

template <Coefficient Coef = Integer, SymplecticForm F>
ModuleElement<Coef> bracket_monomial(const F& form, const Monomial& x, const Monomial& y) {
  ModuleElement<Coef> out(form.n());
  Integer p = form.pair(x, y);
  if (p != 0) {
    out.add_term(x * y, Coef(p));
  }
  return out;
}

template <Coefficient Coef, SymplecticForm F>
ModuleElement<Coef> bracket(const F& form, const ModuleElement<Coef>& u,
                            const ModuleElement<Coef>& v) {
  if (u.rank() != form.n() || v.rank() != form.n()) {
    throw std::invalid_argument("bracket: element rank does not match the surface");
  }
  ModuleElement<Coef> out(form.n());
  for (const auto& [x, cx] : u.terms()) {
    for (const auto& [y, cy] : v.terms()) {
      Integer p = form.pair(x, y);
      if (p != 0) {
        out.add_term(x * y, Coef(cx * cy * p));
      }
    }
  }
  return out;
}

// [u, y] for a single monomial y.
template <Coefficient Coef, SymplecticForm F>
ModuleElement<Coef> bracket(const F& form, const ModuleElement<Coef>& u, const Monomial& y) {
  return bracket(form, u, ModuleElement<Coef>::term(y));
}

}  // namespace goldman

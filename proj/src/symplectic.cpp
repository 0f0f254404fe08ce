#include "goldman/symplectic.hpp"

#include <stdexcept>

namespace goldman {

namespace {

PairingMatrix build_matrix(std::size_t n, unsigned genus) {
  PairingMatrix a(n);
  for (std::size_t t = 1; t <= genus; ++t) {
    a(2 * t, 2 * t - 1) = 1;   // <a_{2t-1}, a_{2t}> = 1
    a(2 * t - 1, 2 * t) = -1;  // <a_{2t}, a_{2t-1}> = -1
  }
  return a;
}

void check_length(const SurfaceSignature& sig, const Monomial& x) {
  if (x.size() != sig.n()) {
    throw std::invalid_argument("monomial of length " + std::to_string(x.size()) +
                                " on a surface with n = " + std::to_string(sig.n()));
  }
}

}  // namespace

SurfaceSignature::SurfaceSignature(Kind kind, unsigned genus, unsigned boundary)
    : kind_(kind),
      genus_(genus),
      boundary_(boundary),
      n_(kind == Kind::closed ? 2 * std::size_t{genus}
                              : 2 * std::size_t{genus} + boundary - 1),
      matrix_(std::make_shared<const PairingMatrix>(build_matrix(n_, genus))) {}

SurfaceSignature SurfaceSignature::closed(unsigned genus) {
  if (genus == 0) {
    throw std::invalid_argument("closed surface needs genus >= 1");
  }
  return SurfaceSignature(Kind::closed, genus, 0);
}

SurfaceSignature SurfaceSignature::with_boundary(unsigned genus, unsigned boundary_components) {
  if (boundary_components == 0) {
    throw std::invalid_argument("surface with boundary needs b >= 1");
  }
  if (2 * genus + boundary_components - 1 == 0) {
    throw std::invalid_argument("disc has trivial fundamental group (n = 0)");
  }
  return SurfaceSignature(Kind::boundary, genus, boundary_components);
}

Integer SurfaceSignature::pair(const Monomial& x, const Monomial& y) const {
  check_length(*this, x);
  check_length(*this, y);
  Integer total = 0;
  for (std::size_t t = 0; t < genus_; ++t) {
    total += x[2 * t] * y[2 * t + 1] - x[2 * t + 1] * y[2 * t];
  }
  return total;
}

std::string SurfaceSignature::describe() const {
  if (is_closed()) {
    return "closed(g=" + std::to_string(genus_) + ")";
  }
  return "boundary(g=" + std::to_string(genus_) + ",b=" + std::to_string(boundary_) + ")";
}

PairingMatrix pairing_matrix(const SurfaceSignature& sig) { return sig.pairing_matrix(); }

Integer pair(const SurfaceSignature& sig, const Monomial& x, const Monomial& y) {
  return sig.pair(x, y);
}

std::vector<Integer> m_vector(const SurfaceSignature& sig, const Monomial& x) {
  check_length(sig, x);
  const PairingMatrix& a = sig.pairing_matrix();
  std::vector<Integer> m(sig.n());
  for (std::size_t j = 1; j <= sig.n(); ++j) {
    for (std::size_t i = 1; i <= sig.n(); ++i) {
      if (int aji = a(j, i); aji != 0) {
        m[j - 1] += aji * x[i - 1];
      }
    }
  }
  return m;
}

std::vector<Monomial> center_generators(const SurfaceSignature& sig) {
  std::vector<Monomial> gens;
  for (std::size_t j = 2 * sig.genus() + 1; j <= sig.n(); ++j) {
    gens.push_back(Monomial::generator(sig.n(), j));
  }
  return gens;
}

bool is_central(const SurfaceSignature& sig, const Monomial& x) {
  check_length(sig, x);
  for (std::size_t i = 0; i < 2 * std::size_t{sig.genus()}; ++i) {
    if (x[i] != 0) {
      return false;
    }
  }
  return true;
}

Integer intersection_pairing(const SurfaceSignature& sig, const Word& u, const Word& v) {
  return sig.pair(re(u, sig.n()), re(v, sig.n()));
}

}  // namespace goldman

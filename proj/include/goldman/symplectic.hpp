#pragma once

// Surface signatures and the symplectic pairing on A(n).
//
// Generators are ordered so that <a_{2t-1}, a_{2t}> = +1 for t = 1..g and every
// other pair of distinct generators pairs to 0. For a closed surface n = 2g;
// with b boundary components n = 2g + b - 1 and a_{2g+1}..a_n span the center.

#include "goldman/abelian.hpp"
#include "goldman/number.hpp"
#include "goldman/words.hpp"

#include <concepts>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace goldman {

// A[j][i] = <a_i, a_j>, 1-based in the accessors.
class PairingMatrix {
 public:
  PairingMatrix() = default;
  explicit PairingMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t j, std::size_t i) const { return entries_[(j - 1) * n_ + (i - 1)]; }
  int& operator()(std::size_t j, std::size_t i) { return entries_[(j - 1) * n_ + (i - 1)]; }
  // <a_i, a_j>
  int generator_pairing(std::size_t i, std::size_t j) const { return (*this)(j, i); }

  friend bool operator==(const PairingMatrix&, const PairingMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> entries_;
};

class SurfaceSignature {
 public:
  enum class Kind { closed, boundary };

  // Throws std::invalid_argument for g = 0.
  static SurfaceSignature closed(unsigned genus);
  // Throws std::invalid_argument for b = 0 or n = 2g + b - 1 = 0.
  static SurfaceSignature with_boundary(unsigned genus, unsigned boundary_components);

  Kind kind() const noexcept { return kind_; }
  bool is_closed() const noexcept { return kind_ == Kind::closed; }
  unsigned genus() const noexcept { return genus_; }
  unsigned boundary_components() const noexcept { return boundary_; }
  std::size_t n() const noexcept { return n_; }
  // Number of coordinates spanning the center (n - 2g).
  std::size_t central_rank() const noexcept { return n_ - 2 * genus_; }

  const PairingMatrix& pairing_matrix() const noexcept { return *matrix_; }

  // sum_t x_{2t-1} y_{2t} - x_{2t} y_{2t-1}
  Integer pair(const Monomial& x, const Monomial& y) const;

  std::string describe() const;

  friend bool operator==(const SurfaceSignature& a, const SurfaceSignature& b) {
    return a.kind_ == b.kind_ && a.genus_ == b.genus_ && a.boundary_ == b.boundary_;
  }

 private:
  SurfaceSignature(Kind kind, unsigned genus, unsigned boundary);

  Kind kind_ = Kind::closed;
  unsigned genus_ = 1;
  unsigned boundary_ = 0;
  std::size_t n_ = 2;
  std::shared_ptr<const PairingMatrix> matrix_;
};

// Anything that can pair two monomials of a fixed rank antisymmetrically.
template <typename F>
concept SymplecticForm = requires(const F& f, const Monomial& x, const Monomial& y) {
  { f.pair(x, y) } -> std::convertible_to<Integer>;
  { f.n() } -> std::convertible_to<std::size_t>;
};

PairingMatrix pairing_matrix(const SurfaceSignature& sig);

// Throws std::invalid_argument on length mismatch.
Integer pair(const SurfaceSignature& sig, const Monomial& x, const Monomial& y);

// M(x) = A.X, so that pair(x, y) = y . M(x).
std::vector<Integer> m_vector(const SurfaceSignature& sig, const Monomial& x);

// Generators a_{2g+1}..a_n of the center C_S; empty for closed surfaces.
std::vector<Monomial> center_generators(const SurfaceSignature& sig);
bool is_central(const SurfaceSignature& sig, const Monomial& x);

// Total signed intersection number m(u, v), realized as <re(u), re(v)>.
Integer intersection_pairing(const SurfaceSignature& sig, const Word& u, const Word& v);

}  // namespace goldman

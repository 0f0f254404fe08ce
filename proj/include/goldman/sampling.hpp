#pragma once

// Seeded random generators for words, monomials, elements and labels. All
// draws go through std::mt19937_64, so a seed fixes every sample.

#include "goldman/abelian.hpp"
#include "goldman/ideals_rat.hpp"
#include "goldman/symplectic.hpp"
#include "goldman/words.hpp"

#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

namespace goldman::sampling {

using Rng = std::mt19937_64;

// splitmix64 step; used to give each suite or stream its own seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline long nonzero(Rng& rng, long radius) {
  long v = uniform(rng, 1, radius);
  return coin(rng) ? v : -v;
}

// Raw letter sequence: may contain zero exponents and adjacent repeats.
inline std::vector<Letter> raw_letters(Rng& rng, std::size_t rank, std::size_t max_len,
                                       long max_exp) {
  std::vector<Letter> out(static_cast<std::size_t>(uniform(rng, 0, long(max_len))));
  for (Letter& l : out) {
    l.gen = static_cast<std::size_t>(uniform(rng, 1, long(rank)));
    l.exp = uniform(rng, -max_exp, max_exp);
  }
  return out;
}

inline Word word(Rng& rng, std::size_t rank, std::size_t max_syllables, long max_exp) {
  std::vector<Letter> ls(static_cast<std::size_t>(uniform(rng, 0, long(max_syllables))));
  for (Letter& l : ls) {
    l.gen = static_cast<std::size_t>(uniform(rng, 1, long(rank)));
    l.exp = nonzero(rng, max_exp);
  }
  return Word::reduce(rank, ls);
}

inline Monomial monomial(Rng& rng, std::size_t n, long radius) {
  std::vector<Integer> e(n);
  for (Integer& x : e) {
    x = uniform(rng, -radius, radius);
  }
  return Monomial(std::move(e));
}

inline Monomial central_monomial(Rng& rng, const SurfaceSignature& sig, long radius) {
  std::vector<Integer> e(sig.n());
  for (std::size_t i = 2 * std::size_t{sig.genus()}; i < e.size(); ++i) {
    e[i] = uniform(rng, -radius, radius);
  }
  return Monomial(std::move(e));
}

// Requires genus >= 1.
inline Monomial noncentral_monomial(Rng& rng, const SurfaceSignature& sig, long radius) {
  while (true) {
    Monomial x = monomial(rng, sig.n(), radius);
    if (!is_central(sig, x)) {
      return x;
    }
  }
}

inline Integer integer(Rng& rng, long radius) { return Integer(uniform(rng, -radius, radius)); }

inline Rational rational(Rng& rng, long radius, long max_den) {
  Rational q(uniform(rng, -radius, radius), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline Rational nonzero_rational(Rng& rng, long radius, long max_den) {
  Rational q(nonzero(rng, radius), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

template <Coefficient Coef>
Coef coefficient(Rng& rng, long radius) {
  if constexpr (std::is_same_v<Coef, Integer>) {
    return integer(rng, radius);
  } else {
    return rational(rng, radius, 4);
  }
}

template <Coefficient Coef>
ModuleElement<Coef> element(Rng& rng, std::size_t n, std::size_t max_terms, long radius,
                            long coef_radius = 9) {
  ModuleElement<Coef> u(n);
  const long terms = uniform(rng, 0, long(max_terms));
  for (long t = 0; t < terms; ++t) {
    u.add_term(monomial(rng, n, radius), coefficient<Coef>(rng, coef_radius));
  }
  return u;
}

inline PrimitiveLabel label(Rng& rng, const SurfaceSignature& sig, std::size_t max_pairs,
                            long radius) {
  std::vector<PrimitiveLabel::Pair> pairs;
  const long k = sig.central_rank() == 0 ? 1 : uniform(rng, 1, long(max_pairs));
  for (long i = 0; i < k; ++i) {
    Monomial c = central_monomial(rng, sig, radius);
    bool repeated = false;
    for (const auto& p : pairs) {
      repeated = repeated || p.first == c;
    }
    if (!repeated) {
      pairs.emplace_back(std::move(c), nonzero_rational(rng, 6, 4));
    }
  }
  return PrimitiveLabel::canonical(sig, std::move(pairs));
}

}  // namespace goldman::sampling

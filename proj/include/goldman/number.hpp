#pragma once

// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace goldman {

using Integer  = mpz_class;
using Rational = mpq_class;

enum class Ring { integer, rational };

template <typename Coef>
struct RingOf;

template <>
struct RingOf<Integer> {
  static constexpr Ring value = Ring::integer;
  static constexpr const char* tag = "Z";
};

template <>
struct RingOf<Rational> {
  static constexpr Ring value = Ring::rational;
  static constexpr const char* tag = "Q";
};

template <typename Coef>
concept Coefficient = requires { RingOf<Coef>::value; };

// Decimal integer, optional sign. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

// "p" or "p/q", canonicalized. Throws std::invalid_argument (also on q = 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// a | b, with 0 | b only for b = 0.
bool divides(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);

Integer pow2(unsigned long k);

// Residue of m modulo 2^level in (-2^{level-1}, 2^{level-1}]; level 0 gives 0.
Integer symmetric_residue(const Integer& m, unsigned long level);

std::optional<std::int64_t> to_int64(const Integer& x);

}  // namespace goldman

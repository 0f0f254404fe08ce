#include "goldman/number.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace goldman {

namespace {

bool is_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    i = 1;
  }
  if (i == text.size()) {
    return false;
  }
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') {
    text.remove_prefix(1);
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) { return x.get_str(10); }

bool divides(const Integer& a, const Integer& b) {
  if (a == 0) {
    return b == 0;
  }
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Integer symmetric_residue(const Integer& m, unsigned long level) {
  if (level == 0) {
    return 0;
  }
  Integer modulus = pow2(level);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  // keep +2^{level-1}, map anything above it down
  if (r > modulus / 2) {
    r -= modulus;
  }
  return r;
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  if (x < std::numeric_limits<std::int64_t>::min() ||
      x > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  // mpz_get_si takes long; long is 64-bit on the supported targets
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

}  // namespace goldman

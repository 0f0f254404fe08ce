#pragma once

// Text and JSON forms shared by the CLI and the tests.
//
// Words: whitespace-separated tokens a<k> or a<k>^<e>, e.g. "a1 a2^-3 a1^2";
// the empty string is the identity.
// Elements: {"ring":"Z"|"Q","terms":[{"exp":[...],"coef":"p/q"}]}, terms in
// lexicographic order. Exponents are JSON integers when they fit in 64 bits and
// decimal strings otherwise; both are accepted on input.
// Ideals: {"labels":[element],"central_basis":[element]} with Q elements.
// Table rules: {"box":r,"default":"1","entries":[{"exp":[...],"alpha":"2"}]}.
//
// Every parser throws ParseError on malformed input.

#include "goldman/abelian.hpp"
#include "goldman/ideals_int.hpp"
#include "goldman/ideals_rat.hpp"
#include "goldman/number.hpp"
#include "goldman/symplectic.hpp"
#include "goldman/words.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace goldman {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Letter> parse_letters(std::string_view text);
// Rank-checked; throws ParseError for generators beyond rank.
Word parse_word(std::string_view text, std::size_t rank);
std::string format_letters(std::span<const Letter> letters);
std::string format_word(const Word& w);
std::string format_monomial(const Monomial& x);

Json exponent_json(const Integer& e);
Json monomial_json(const Monomial& x);
Monomial parse_monomial_json(const Json& j);

template <Coefficient Coef>
Json element_json(const ModuleElement<Coef>& u) {
  Json terms = Json::array();
  for (const auto& [x, c] : u.terms()) {
    Json t;
    t["exp"] = monomial_json(x);
    t["coef"] = to_string(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["ring"] = RingOf<Coef>::tag;
  j["terms"] = std::move(terms);
  return j;
}

using AnyElement = std::variant<IntElement, RatElement>;

// `rank` fixes the rank of elements without terms and is checked against
// the exponent lengths of the others.
AnyElement parse_element_json(const Json& j, std::size_t rank);
IntElement parse_int_element_json(const Json& j, std::size_t rank);
// Accepts Z input by promotion.
RatElement parse_rat_element_json(const Json& j, std::size_t rank);

Json ideal_json(const RationalIdeal& ideal);
RationalIdeal parse_ideal_json(const SurfaceSignature& sig, const Json& j);

Json table_rule_json(const TableRule& rule);
GeometricSubmodule parse_table_rule_json(const Json& j, std::size_t n);

// "[(1,0),(2,-3)]"; every tuple must have n entries.
std::set<Monomial> parse_tuple_set(std::string_view text, std::size_t n);

Json report_json(const IdealCheckReport& report, std::string_view first_name,
                 std::string_view second_name);

// JSON text parse that reports failures as ParseError.
Json parse_json_text(std::string_view text);

}  // namespace goldman

#include "goldman/io.hpp"

#include <cctype>
#include <limits>

namespace goldman {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Integer parse_integer_or_throw(std::string_view text, std::string_view what) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
}

Rational parse_rational_or_throw(std::string_view text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid coefficient '" + std::string(text) + "'");
  }
}

Integer integer_field(const Json& j, std::string_view what) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    return parse_integer_or_throw(j.get<std::string>(), what);
  }
  throw ParseError(std::string(what) + " must be an integer or a decimal string");
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

const Json& array_member(const Json& j, const char* key) {
  const Json& a = member(j, key);
  if (!a.is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  return a;
}

template <Coefficient Coef>
ModuleElement<Coef> parse_terms(const Json& terms, std::size_t rank, bool integral) {
  ModuleElement<Coef> u(rank);
  for (const Json& t : terms) {
    Monomial x = parse_monomial_json(member(t, "exp"));
    if (x.size() != rank) {
      throw ParseError("exponent vector of length " + std::to_string(x.size()) +
                       ", expected " + std::to_string(rank));
    }
    const Json& c = member(t, "coef");
    if (!c.is_string()) {
      throw ParseError("coef must be a string");
    }
    const std::string text = c.get<std::string>();
    if (integral && text.find('/') != std::string::npos) {
      throw ParseError("Z element with fractional coefficient '" + text + "'");
    }
    if (u.coefficient(x) != 0) {
      throw ParseError("repeated monomial " + format_monomial(x));
    }
    if constexpr (std::is_same_v<Coef, Integer>) {
      u.add_term(x, parse_integer_or_throw(text, "coefficient"));
    } else {
      u.add_term(x, parse_rational_or_throw(text));
    }
  }
  return u;
}

}  // namespace

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && is_space(text[i])) {
      ++i;
    }
    if (i == text.size()) {
      return out;
    }
    std::size_t end = i;
    while (end < text.size() && !is_space(text[end])) {
      ++end;
    }
    std::string_view tok = text.substr(i, end - i);
    i = end;
    if (tok.size() < 2 || tok[0] != 'a') {
      throw ParseError("bad word token '" + std::string(tok) + "'");
    }
    std::size_t caret = tok.find('^');
    std::string_view gen = tok.substr(1, caret == std::string_view::npos ? tok.npos : caret - 1);
    if (gen.empty() || !std::all_of(gen.begin(), gen.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) != 0;
        })) {
      throw ParseError("bad generator in token '" + std::string(tok) + "'");
    }
    Integer g = parse_integer_or_throw(gen, "generator");
    if (g < 1 || !g.fits_ulong_p()) {
      throw ParseError("generator index out of range in '" + std::string(tok) + "'");
    }
    Integer e = 1;
    if (caret != std::string_view::npos) {
      e = parse_integer_or_throw(tok.substr(caret + 1), "exponent");
    }
    out.push_back(Letter{static_cast<std::size_t>(g.get_ui()), std::move(e)});
  }
}

Word parse_word(std::string_view text, std::size_t rank) {
  std::vector<Letter> letters = parse_letters(text);
  for (const Letter& l : letters) {
    if (l.gen > rank) {
      throw ParseError("generator a" + std::to_string(l.gen) + " outside a1..a" +
                       std::to_string(rank));
    }
  }
  return Word::reduce(rank, letters);
}

std::string format_letters(std::span<const Letter> letters) {
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 'a' + std::to_string(l.gen);
    if (l.exp != 1) {
      out += '^' + to_string(l.exp);
    }
  }
  return out;
}

std::string format_word(const Word& w) { return format_letters(w.letters()); }

std::string format_monomial(const Monomial& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += to_string(x[i]);
  }
  return out + ')';
}

Json exponent_json(const Integer& e) {
  if (auto v = to_int64(e)) {
    return Json(*v);
  }
  return Json(to_string(e));
}

Json monomial_json(const Monomial& x) {
  Json a = Json::array();
  for (const Integer& e : x.exps()) {
    a.push_back(exponent_json(e));
  }
  return a;
}

Monomial parse_monomial_json(const Json& j) {
  if (!j.is_array()) {
    throw ParseError("exponent vector must be an array");
  }
  std::vector<Integer> e;
  e.reserve(j.size());
  for (const Json& v : j) {
    e.push_back(integer_field(v, "exponent"));
  }
  return Monomial(std::move(e));
}

AnyElement parse_element_json(const Json& j, std::size_t rank) {
  const Json& ring = member(j, "ring");
  const Json& terms = array_member(j, "terms");
  if (ring == "Z") {
    return parse_terms<Integer>(terms, rank, true);
  }
  if (ring == "Q") {
    return parse_terms<Rational>(terms, rank, false);
  }
  throw ParseError("ring must be \"Z\" or \"Q\"");
}

IntElement parse_int_element_json(const Json& j, std::size_t rank) {
  AnyElement u = parse_element_json(j, rank);
  if (auto* z = std::get_if<IntElement>(&u)) {
    return std::move(*z);
  }
  throw ParseError("expected a Z element");
}

RatElement parse_rat_element_json(const Json& j, std::size_t rank) {
  AnyElement u = parse_element_json(j, rank);
  if (auto* z = std::get_if<IntElement>(&u)) {
    return promote(*z);
  }
  return std::get<RatElement>(std::move(u));
}

Json ideal_json(const RationalIdeal& ideal) {
  Json labels = Json::array();
  for (const PrimitiveLabel& label : ideal.labels()) {
    labels.push_back(element_json(label.as_element()));
  }
  Json central = Json::array();
  for (const RatElement& c : ideal.central_basis()) {
    central.push_back(element_json(c));
  }
  Json j;
  j["labels"] = std::move(labels);
  j["central_basis"] = std::move(central);
  return j;
}

RationalIdeal parse_ideal_json(const SurfaceSignature& sig, const Json& j) {
  std::set<PrimitiveLabel> labels;
  std::vector<RatElement> central;
  try {
    for (const Json& l : array_member(j, "labels")) {
      RatElement e = parse_rat_element_json(l, sig.n());
      if (e.is_zero()) {
        throw ParseError("empty label");
      }
      std::vector<PrimitiveLabel::Pair> pairs(e.terms().begin(), e.terms().end());
      labels.insert(PrimitiveLabel::canonical(sig, std::move(pairs)));
    }
    for (const Json& c : array_member(j, "central_basis")) {
      central.push_back(parse_rat_element_json(c, sig.n()));
    }
    return RationalIdeal::from_parts(sig, std::move(labels), std::move(central));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid ideal: ") + e.what());
  }
}

Json table_rule_json(const TableRule& rule) {
  Json entries = Json::array();
  for (const auto& [x, a] : rule.entries) {
    Json e;
    e["exp"] = monomial_json(x);
    e["alpha"] = to_string(a);
    entries.push_back(std::move(e));
  }
  Json j;
  j["box"] = rule.box.radius;
  j["default"] = to_string(rule.default_alpha);
  j["entries"] = std::move(entries);
  return j;
}

GeometricSubmodule parse_table_rule_json(const Json& j, std::size_t n) {
  const Json& box = member(j, "box");
  if (!box.is_number_integer() || box.get<long long>() < 0) {
    throw ParseError("box must be a nonnegative integer radius");
  }
  Integer def = 1;
  if (j.contains("default")) {
    def = integer_field(j.at("default"), "default");
  }
  std::map<Monomial, Integer> entries;
  if (j.contains("entries")) {
    for (const Json& e : array_member(j, "entries")) {
      Monomial x = parse_monomial_json(member(e, "exp"));
      if (x.size() != n) {
        throw ParseError("table entry " + format_monomial(x) + " has the wrong length");
      }
      if (!entries.emplace(x, integer_field(member(e, "alpha"), "alpha")).second) {
        throw ParseError("repeated table entry " + format_monomial(x));
      }
    }
  }
  try {
    return GeometricSubmodule::table(ExponentBox{n, static_cast<long>(box.get<long long>())},
                                     def, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid table rule: ") + e.what());
  }
}

std::set<Monomial> parse_tuple_set(std::string_view text, std::size_t n) {
  std::string s;
  for (char c : text) {
    if (!is_space(c)) {
      s += c;
    }
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("tuple set must look like [(1,0),(2,3)]");
  }
  std::set<Monomial> out;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  while (i < end) {
    if (s[i] != '(') {
      throw ParseError("expected '(' in tuple set");
    }
    std::size_t close = s.find(')', i);
    if (close == std::string::npos || close > end) {
      throw ParseError("unterminated tuple in tuple set");
    }
    std::vector<Integer> e;
    std::string_view body(s.data() + i + 1, close - i - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string_view field = body.substr(start, comma == body.npos ? body.npos : comma - start);
      e.push_back(parse_integer_or_throw(field, "tuple entry"));
      if (comma == body.npos) {
        break;
      }
      start = comma + 1;
    }
    if (e.size() != n) {
      throw ParseError("tuple of length " + std::to_string(e.size()) + ", expected " +
                       std::to_string(n));
    }
    out.insert(Monomial(std::move(e)));
    i = close + 1;
    if (i < end) {
      if (s[i] != ',') {
        throw ParseError("expected ',' between tuples");
      }
      ++i;
      if (i == end) {
        throw ParseError("trailing ',' in tuple set");
      }
    }
  }
  return out;
}

Json report_json(const IdealCheckReport& report, std::string_view first_name,
                 std::string_view second_name) {
  Json j;
  j["verdict"] = report.verdict;
  j["seed"] = report.seed;
  j["pairs_checked"] = report.pairs_checked;
  if (report.counterexample) {
    Json c;
    c[std::string(first_name)] = monomial_json(report.counterexample->first);
    c[std::string(second_name)] = monomial_json(report.counterexample->second);
    j["counterexample"] = std::move(c);
  }
  return j;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace goldman

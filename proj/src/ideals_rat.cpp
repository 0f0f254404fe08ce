#include "goldman/ideals_rat.hpp"

#include "goldman/liealg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace goldman {

namespace {

void require_central(const SurfaceSignature& sig, const Monomial& c) {
  if (c.size() != sig.n() || !is_central(sig, c)) {
    throw std::invalid_argument("monomial is not central on " + sig.describe());
  }
}

std::strong_ordering compare_rationals(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

PrimitiveLabel PrimitiveLabel::canonical(const SurfaceSignature& sig, std::vector<Pair> pairs,
                                         Monomial* offset, Rational* scale) {
  if (pairs.empty()) {
    throw std::invalid_argument("primitive label needs at least one central monomial");
  }
  for (const auto& [c, q] : pairs) {
    require_central(sig, c);
    if (q == 0) {
      throw std::invalid_argument("primitive label coefficients must be nonzero");
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) {
      throw std::invalid_argument("primitive label monomials must be distinct");
    }
  }
  const Monomial least = pairs.front().first;
  const Rational lead = pairs.front().second;
  const Monomial shift = monomial_inv(least);
  PrimitiveLabel label;
  for (auto& [c, q] : pairs) {
    // translation preserves the lexicographic order
    label.pairs_.emplace_back(c * shift, q / lead);
  }
  if (offset != nullptr) {
    *offset = least;
  }
  if (scale != nullptr) {
    *scale = lead;
  }
  return label;
}

PrimitiveLabel PrimitiveLabel::trivial(std::size_t n) {
  PrimitiveLabel label;
  label.pairs_.emplace_back(Monomial::identity(n), Rational(1));
  return label;
}

RatElement PrimitiveLabel::as_element() const {
  RatElement e(rank());
  for (const auto& [c, q] : pairs_) {
    e.add_term(c, q);
  }
  return e;
}

std::strong_ordering operator<=>(const PrimitiveLabel& a, const PrimitiveLabel& b) {
  return std::lexicographical_compare_three_way(
      a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(), b.pairs_.end(),
      [](const PrimitiveLabel::Pair& x, const PrimitiveLabel::Pair& y) {
        if (auto c = x.first <=> y.first; c != 0) {
          return c;
        }
        return compare_rationals(x.second, y.second);
      });
}

RatElement f_label(const PrimitiveLabel& label, const Monomial& x) {
  RatElement e(x.size());
  for (const auto& [c, q] : label.pairs()) {
    e.add_term(c * x, q);
  }
  return e;
}

Monomial class_base(const SurfaceSignature& sig, const Monomial& x) {
  std::vector<Integer> e = x.exps();
  for (std::size_t i = 2 * std::size_t{sig.genus()}; i < e.size(); ++i) {
    e[i] = 0;
  }
  return Monomial(std::move(e));
}

StandardRepresentation standard_representation(const SurfaceSignature& sig,
                                               const RatElement& u) {
  if (u.rank() != sig.n()) {
    throw std::invalid_argument("element rank does not match the surface");
  }
  StandardRepresentation rep{{}, RatElement(sig.n())};
  std::map<Monomial, std::vector<PrimitiveLabel::Pair>> classes;
  for (const auto& [x, q] : u.terms()) {
    Monomial base = class_base(sig, x);
    if (base.is_identity()) {
      rep.central.add_term(x, q);
    } else {
      classes[base].emplace_back(x * monomial_inv(base), q);
    }
  }
  for (auto& [base, pairs] : classes) {
    StandardPart part;
    part.label = PrimitiveLabel::canonical(sig, std::move(pairs), &part.offset, &part.scale);
    part.base = base;
    rep.parts.push_back(std::move(part));
  }
  return rep;
}

RatElement reassemble(const StandardRepresentation& rep) {
  RatElement out = rep.central;
  for (const StandardPart& p : rep.parts) {
    out += p.scale * f_label(p.label, p.offset * p.base);
  }
  return out;
}

bool primitive_bracket_identity_check(const SurfaceSignature& sig, const PrimitiveLabel& label,
                                      const Monomial& x, const Monomial& y) {
  if (is_central(sig, x)) {
    throw std::invalid_argument("primitive_bracket_identity_check: x must be non-central");
  }
  RatElement lhs = bracket(sig, f_label(label, x), RatElement::term(y));
  RatElement rhs = Rational(sig.pair(x, y)) * f_label(label, x * y);
  return lhs == rhs;
}

RatElement echelon_reduce(RatElement v, const std::vector<RatElement>& basis) {
  for (const RatElement& row : basis) {
    const Monomial& pivot = row.terms().begin()->first;
    Rational c = v.coefficient(pivot);
    if (c != 0) {
      v -= c * row;
    }
  }
  return v;
}

std::vector<RatElement> echelon_basis(std::vector<RatElement> vectors, std::size_t rank) {
  std::vector<RatElement> basis;
  for (RatElement& v : vectors) {
    if (v.rank() != rank) {
      throw std::invalid_argument("echelon_basis: vector of wrong rank");
    }
    RatElement r = echelon_reduce(std::move(v), basis);
    if (r.is_zero()) {
      continue;
    }
    const Monomial pivot = r.terms().begin()->first;
    r *= 1 / r.terms().begin()->second;
    for (RatElement& row : basis) {
      Rational c = row.coefficient(pivot);
      if (c != 0) {
        row -= c * r;
      }
    }
    basis.push_back(std::move(r));
  }
  std::sort(basis.begin(), basis.end(), [](const RatElement& a, const RatElement& b) {
    return a.terms().begin()->first < b.terms().begin()->first;
  });
  return basis;
}

Polynomial label_polynomial(const SurfaceSignature& sig, const PrimitiveLabel& label) {
  const std::size_t g2 = 2 * std::size_t{sig.genus()};
  const std::size_t k = sig.central_rank();
  std::vector<long> low(k, 0);
  std::vector<PolyExponent> exps;
  for (const auto& [c, q] : label.pairs()) {
    PolyExponent e(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto v = to_int64(c[g2 + j]);
      if (!v) {
        throw std::overflow_error("central exponent too large for ideal arithmetic");
      }
      e[j] = *v;
      low[j] = std::min(low[j], e[j]);
    }
    exps.push_back(std::move(e));
  }
  Polynomial p(k);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      exps[i][j] -= low[j];
    }
    p.add_term(exps[i], label.pairs()[i].second);
  }
  return p;
}

RationalIdeal::RationalIdeal(const SurfaceSignature& sig) : sig_(sig) {}

RationalIdeal RationalIdeal::from_parts(const SurfaceSignature& sig,
                                        std::set<PrimitiveLabel> labels,
                                        std::vector<RatElement> central_span) {
  RationalIdeal ideal(sig);
  std::vector<Polynomial> gens;
  for (const PrimitiveLabel& label : labels) {
    // re-canonicalizing validates centrality and normal form
    if (PrimitiveLabel::canonical(sig, label.pairs()) != label) {
      throw std::invalid_argument("primitive label is not in canonical form");
    }
    gens.push_back(label_polynomial(sig, label));
  }
  for (const RatElement& c : central_span) {
    if (c.rank() != sig.n()) {
      throw std::invalid_argument("central vector of wrong rank");
    }
    for (const auto& [x, q] : c.terms()) {
      require_central(sig, x);
    }
  }
  ideal.labels_ = std::move(labels);
  ideal.central_basis_ = echelon_basis(std::move(central_span), sig.n());
  ideal.label_ideal_ = saturate_by_variables(gens, sig.central_rank());
  return ideal;
}

bool RationalIdeal::covers_label(const PrimitiveLabel& label) const {
  return normal_form(label_polynomial(sig_, label), label_ideal_).is_zero();
}

bool RationalIdeal::central_contains(const RatElement& c) const {
  return echelon_reduce(c, central_basis_).is_zero();
}

RationalIdeal ideal_closure(const SurfaceSignature& sig,
                            const std::vector<RatElement>& generators) {
  std::set<PrimitiveLabel> labels;
  std::vector<RatElement> central;
  for (const RatElement& g : generators) {
    StandardRepresentation rep = standard_representation(sig, g);
    for (StandardPart& p : rep.parts) {
      labels.insert(std::move(p.label));
    }
    if (!rep.central.is_zero()) {
      central.push_back(std::move(rep.central));
    }
  }
  return RationalIdeal::from_parts(sig, std::move(labels), std::move(central));
}

bool contains(const RationalIdeal& ideal, const RatElement& u) {
  StandardRepresentation rep = standard_representation(ideal.signature(), u);
  for (const StandardPart& p : rep.parts) {
    if (!ideal.covers_label(p.label)) {
      return false;
    }
  }
  return ideal.central_contains(rep.central);
}

bool ideals_equal(const RationalIdeal& a, const RationalIdeal& b) {
  return a.signature() == b.signature() && a.label_ideal() == b.label_ideal() &&
         a.central_basis() == b.central_basis();
}

bool is_subideal(const RationalIdeal& a, const RationalIdeal& b) {
  if (!(a.signature() == b.signature())) {
    return false;
  }
  for (const PrimitiveLabel& label : a.labels()) {
    if (!b.covers_label(label)) {
      return false;
    }
  }
  for (const RatElement& c : a.central_basis()) {
    if (!b.central_contains(c)) {
      return false;
    }
  }
  return true;
}

std::optional<ClosedIdealForm> classify_closed(const RationalIdeal& ideal) {
  const SurfaceSignature& sig = ideal.signature();
  if (!sig.is_closed()) {
    return std::nullopt;
  }
  const std::size_t n = sig.n();
  for (const PrimitiveLabel& label : ideal.labels()) {
    if (label != PrimitiveLabel::trivial(n)) {
      return std::nullopt;
    }
  }
  bool has_identity = false;
  for (const RatElement& c : ideal.central_basis()) {
    if (c != RatElement::term(Monomial::identity(n))) {
      return std::nullopt;
    }
    has_identity = true;
  }
  const bool has_rest = !ideal.labels().empty();
  if (has_identity) {
    return has_rest ? ClosedIdealForm::whole : ClosedIdealForm::identity_line;
  }
  return has_rest ? ClosedIdealForm::non_identity : ClosedIdealForm::zero;
}

namespace {

Monomial random_monomial(std::size_t n, long radius, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-radius, radius);
  std::vector<Integer> e(n);
  for (auto& x : e) {
    x = dist(rng);
  }
  return Monomial(std::move(e));
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  long p = 0;
  while (p == 0) {
    p = num(rng);
  }
  Rational q(p, den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

ClosedClassificationReport classify_closed_check(const SurfaceSignature& sig,
                                                 std::uint64_t samples, std::uint64_t seed) {
  if (!sig.is_closed()) {
    throw std::invalid_argument("classify_closed_check needs a closed surface");
  }
  const std::size_t n = sig.n();
  const Monomial e = Monomial::identity(n);
  std::mt19937_64 rng(seed);
  ClosedClassificationReport report;

  auto run = [&](const std::vector<RatElement>& gens, ClosedIdealForm expected) {
    ++report.cases;
    auto form = classify_closed(ideal_closure(sig, gens));
    if (!form || *form != expected) {
      report.verdict = false;
      if (report.failing_generators.empty()) {
        report.failing_generators = gens;
      }
    }
  };

  for (std::uint64_t s = 0; s < samples; ++s) {
    Monomial x = random_monomial(n, 4, rng);
    while (x.is_identity()) {
      x = random_monomial(n, 4, rng);
    }
    RatElement ge = random_nonzero_rational(rng) * RatElement::term(e);
    RatElement gx = random_nonzero_rational(rng) * RatElement::term(x);
    run({ge}, ClosedIdealForm::identity_line);
    run({gx}, ClosedIdealForm::non_identity);
    run({ge, gx}, ClosedIdealForm::whole);
  }
  return report;
}

std::optional<ClosureViolation> verify_closure_sampled(const RationalIdeal& ideal,
                                                       std::uint64_t samples,
                                                       std::uint64_t seed) {
  const SurfaceSignature& sig = ideal.signature();
  const std::size_t n = sig.n();
  std::mt19937_64 rng(seed);
  std::vector<PrimitiveLabel> labels(ideal.labels().begin(), ideal.labels().end());
  const bool has_noncentral = sig.genus() > 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    RatElement member(n);
    if (has_noncentral) {
      for (const PrimitiveLabel& label : labels) {
        Monomial x = random_monomial(n, 3, rng);
        while (is_central(sig, x)) {
          x = random_monomial(n, 3, rng);
        }
        member += random_nonzero_rational(rng) * f_label(label, x);
      }
    }
    for (const RatElement& c : ideal.central_basis()) {
      member += random_nonzero_rational(rng) * c;
    }
    Monomial v = random_monomial(n, 3, rng);
    if (!contains(ideal, member) || !contains(ideal, bracket(sig, member, v))) {
      return ClosureViolation{member, v};
    }
  }
  return std::nullopt;
}

}  // namespace goldman

#include "goldman/ideals_int.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace goldman {

bool ExponentBox::contains(const Monomial& x) const {
  if (x.size() != dim) {
    return false;
  }
  return std::all_of(x.exps().begin(), x.exps().end(),
                     [this](const Integer& e) { return e >= -radius && e <= radius; });
}

bool ExponentBox::contains(const ExponentBox& other) const {
  return other.dim == dim && other.radius <= radius;
}

std::uint64_t ExponentBox::points() const {
  std::uint64_t side = static_cast<std::uint64_t>(2 * radius + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= side;
  }
  return total;
}

Monomial ExponentBox::point(std::uint64_t index) const {
  const std::uint64_t side = static_cast<std::uint64_t>(2 * radius + 1);
  std::vector<Integer> e(dim);
  for (std::size_t i = dim; i > 0; --i) {
    e[i - 1] = static_cast<long>(index % side) - radius;
    index /= side;
  }
  return Monomial(std::move(e));
}

GeometricSubmodule GeometricSubmodule::ik(std::size_t n, std::set<Monomial> exceptions) {
  for (const Monomial& k : exceptions) {
    if (k.size() != n) {
      throw std::invalid_argument("exception tuple of wrong length");
    }
  }
  return GeometricSubmodule(IKRule{n, std::move(exceptions)});
}

GeometricSubmodule GeometricSubmodule::table(ExponentBox box, Integer default_alpha,
                                             std::map<Monomial, Integer> entries) {
  if (default_alpha < 0) {
    throw std::invalid_argument("alpha values must be nonnegative");
  }
  for (const auto& [x, a] : entries) {
    if (a < 0) {
      throw std::invalid_argument("alpha values must be nonnegative");
    }
    if (!box.contains(x)) {
      throw std::invalid_argument("table entry outside its box");
    }
  }
  return GeometricSubmodule(TableRule{box, std::move(default_alpha), std::move(entries)});
}

std::size_t GeometricSubmodule::n() const {
  return std::visit(
      [](const auto& r) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, IKRule>) {
          return r.n;
        } else {
          return r.box.dim;
        }
      },
      rule_);
}

bool GeometricSubmodule::in_domain(const Monomial& x) const {
  if (const auto* t = std::get_if<TableRule>(&rule_)) {
    return t->box.contains(x);
  }
  return x.size() == n();
}

bool GeometricSubmodule::domain_contains(const ExponentBox& box) const {
  if (const auto* t = std::get_if<TableRule>(&rule_)) {
    return t->box.contains(box);
  }
  return box.dim == n();
}

Integer GeometricSubmodule::alpha(const Monomial& x) const {
  if (const auto* r = std::get_if<IKRule>(&rule_)) {
    if (x.size() != r->n) {
      throw std::invalid_argument("alpha: monomial of wrong length");
    }
    return r->exceptions.contains(x) ? Integer(1) : exponent_gcd(x);
  }
  const auto& t = std::get<TableRule>(rule_);
  if (!t.box.contains(x)) {
    throw std::out_of_range("alpha: monomial outside the table box");
  }
  auto it = t.entries.find(x);
  return it == t.entries.end() ? t.default_alpha : it->second;
}

Integer exponent_gcd(const Monomial& x) {
  Integer g = 0;
  for (const Integer& e : x.exps()) {
    g = gcd(g, e);
  }
  return g;
}

bool contains(const GeometricSubmodule& sub, const IntElement& u) {
  for (const auto& [x, c] : u.terms()) {
    if (!divides(sub.alpha(x), c)) {
      return false;
    }
  }
  return true;
}

bool closure_condition(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                      const Monomial& v, const Monomial& w) {
  return divides(sub.alpha(v * w), sig.pair(v, w) * sub.alpha(w));
}

Integer prop_multiplier(const SurfaceSignature& sig, const Monomial& k, const Monomial& i) {
  Integer g = 0;
  for (std::size_t t = 0; t < sig.genus(); ++t) {
    g = gcd(g, gcd(k[2 * t], k[2 * t + 1]) * gcd(i[2 * t], i[2 * t + 1]));
  }
  return g;
}

bool prop_condition(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                    const Monomial& k, const Monomial& i) {
  return divides(sub.alpha(k), sub.alpha(i) * prop_multiplier(sig, k, i));
}

namespace {

void require_domain(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                    const ExponentBox& box) {
  if (box.dim != sig.n() || sub.n() != sig.n()) {
    throw std::invalid_argument("box, rule and surface disagree on n");
  }
  if (!sub.domain_contains(box)) {
    throw std::invalid_argument("check box is not inside the rule's domain");
  }
}

Monomial random_point(const ExponentBox& box, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-box.radius, box.radius);
  std::vector<Integer> e(box.dim);
  for (auto& x : e) {
    x = dist(rng);
  }
  return Monomial(std::move(e));
}

// Runs `holds(first, second)` over sampled box points (a, b) mapped to the
// reported pair by `to_pair`.
template <typename Holds, typename ToPair>
IdealCheckReport sampled(const ExponentBox& box, std::uint64_t samples, std::uint64_t seed,
                         Holds holds, ToPair to_pair) {
  IdealCheckReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Monomial a = random_point(box, rng);
    Monomial b = random_point(box, rng);
    ++report.pairs_checked;
    auto p = to_pair(a, b);
    if (!holds(p.first, p.second)) {
      report.verdict = false;
      report.counterexample = std::move(p);
      return report;
    }
  }
  return report;
}

template <typename Holds, typename ToPair>
IdealCheckReport exhaustive(const ExponentBox& box, Holds holds, ToPair to_pair) {
  IdealCheckReport report;
  const std::uint64_t pts = box.points();
  for (std::uint64_t ia = 0; ia < pts; ++ia) {
    Monomial a = box.point(ia);
    for (std::uint64_t ib = 0; ib < pts; ++ib) {
      ++report.pairs_checked;
      auto p = to_pair(a, box.point(ib));
      if (!holds(p.first, p.second)) {
        report.verdict = false;
        report.counterexample = std::move(p);
        return report;
      }
    }
  }
  return report;
}

}  // namespace

// Closure pairs are parametrized by (w, z = vw), both inside the box.
IdealCheckReport ideal_check_sampled(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                                     const ExponentBox& box, std::uint64_t samples,
                                     std::uint64_t seed) {
  require_domain(sig, sub, box);
  return sampled(
      box, samples, seed,
      [&](const Monomial& v, const Monomial& w) { return closure_condition(sig, sub, v, w); },
      [](const Monomial& w, const Monomial& z) {
        return PairCounterexample{z * monomial_inv(w), w};
      });
}

IdealCheckReport ideal_check_exhaustive(const SurfaceSignature& sig,
                                        const GeometricSubmodule& sub, const ExponentBox& box) {
  require_domain(sig, sub, box);
  return exhaustive(
      box,
      [&](const Monomial& v, const Monomial& w) { return closure_condition(sig, sub, v, w); },
      [](const Monomial& w, const Monomial& z) {
        return PairCounterexample{z * monomial_inv(w), w};
      });
}

IdealCheckReport prop_divisibility_check(const SurfaceSignature& sig,
                                         const GeometricSubmodule& sub, const ExponentBox& box,
                                         std::uint64_t samples, std::uint64_t seed) {
  require_domain(sig, sub, box);
  return sampled(
      box, samples, seed,
      [&](const Monomial& k, const Monomial& i) { return prop_condition(sig, sub, k, i); },
      [](const Monomial& k, const Monomial& i) { return PairCounterexample{k, i}; });
}

IdealCheckReport prop_divisibility_exhaustive(const SurfaceSignature& sig,
                                              const GeometricSubmodule& sub,
                                              const ExponentBox& box) {
  require_domain(sig, sub, box);
  return exhaustive(
      box,
      [&](const Monomial& k, const Monomial& i) { return prop_condition(sig, sub, k, i); },
      [](const Monomial& k, const Monomial& i) { return PairCounterexample{k, i}; });
}

std::vector<Monomial> ik_candidates(std::size_t n, const std::set<Monomial>& excluded,
                                    std::size_t count) {
  std::vector<Monomial> out;
  if (n == 0) {
    return out;
  }
  for (long r = 2; out.size() < count; ++r) {
    ExponentBox shell{n, r};
    shell.for_each([&](const Monomial& x) {
      if (out.size() >= count) {
        return;
      }
      bool on_shell = std::any_of(x.exps().begin(), x.exps().end(),
                                  [r](const Integer& e) { return abs(e) == r; });
      if (on_shell && exponent_gcd(x) > 1 && !excluded.contains(x)) {
        out.push_back(x);
      }
    });
  }
  return out;
}

std::vector<GeometricSubmodule> ik_family(std::size_t n, const std::set<Monomial>& k0,
                                          std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("ik_family: count must be >= 1");
  }
  std::vector<Monomial> added = ik_candidates(n, k0, count - 1);
  std::vector<GeometricSubmodule> family;
  std::set<Monomial> k = k0;
  family.push_back(GeometricSubmodule::ik(n, k));
  for (const Monomial& x : added) {
    k.insert(x);
    family.push_back(GeometricSubmodule::ik(n, k));
  }
  return family;
}

}  // namespace goldman

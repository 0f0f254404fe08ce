#pragma once

// Randomized invariant suites for every module, shared by `goldman selftest`,
// the unit tests and the acceptance runner. Each suite draws `count` cases
// from its seed and stops at the first failure, reporting a shrunken
// counterexample as JSON.

#include "goldman/io.hpp"
#include "goldman/number.hpp"
#include "goldman/symplectic.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace goldman {

enum class Fault { none, pairing_sign };

// The surface pairing, optionally with <a_{2t}, a_{2t-1}> flipped to +1 so
// that the form becomes symmetric. Used to check that the suites notice.
class TestForm {
 public:
  explicit TestForm(SurfaceSignature sig, Fault fault = Fault::none)
      : sig_(std::move(sig)), fault_(fault) {}

  std::size_t n() const noexcept { return sig_.n(); }
  const SurfaceSignature& signature() const noexcept { return sig_; }
  Integer pair(const Monomial& x, const Monomial& y) const;

 private:
  SurfaceSignature sig_;
  Fault fault_;
};

struct PropertyContext {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  Fault fault = Fault::none;
};

struct PropertyResult {
  explicit PropertyResult(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  Json counterexample;  // null unless failed
};

struct PropertySuite {
  std::string_view name;
  std::uint64_t default_count;
  PropertyResult (*run)(const PropertyContext&);
};

// In a fixed order; selftest derives each suite's seed from its position.
const std::vector<PropertySuite>& property_suites();

// Throws std::invalid_argument for an unknown name.
PropertyResult run_property(std::string_view name, std::uint64_t count, std::uint64_t seed,
                            Fault fault = Fault::none);

// Runs every suite with round(default_count * scale) cases. Scale 0 runs
// nothing and passes.
Json run_selftest(std::uint64_t seed, double scale, Fault fault = Fault::none);

}  // namespace goldman

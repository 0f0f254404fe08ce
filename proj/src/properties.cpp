#include "goldman/properties.hpp"

#include "goldman/chain.hpp"
#include "goldman/ideals_int.hpp"
#include "goldman/ideals_rat.hpp"
#include "goldman/liealg.hpp"
#include "goldman/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace goldman {

using sampling::Rng;

Integer TestForm::pair(const Monomial& x, const Monomial& y) const {
  if (fault_ == Fault::none) {
    return sig_.pair(x, y);
  }
  // x_{2t-1} y_{2t} + x_{2t} y_{2t-1}: the symmetric mutant
  Integer s = 0;
  for (std::size_t t = 0; t < sig_.genus(); ++t) {
    s += x[2 * t] * y[2 * t + 1] + x[2 * t + 1] * y[2 * t];
  }
  return s;
}

namespace {

// ---- shrinking ------------------------------------------------------------

constexpr int kShrinkBudget = 5000;

// Greedy: take the first candidate that still fails, until none does.
template <class T, class Candidates, class Pred>
T shrink(T value, Candidates candidates, Pred fails) {
  int budget = kShrinkBudget;
  auto still_fails = [&](const T& c) {
    try {
      return fails(c);
    } catch (const std::exception&) {
      return false;  // candidate left the property's domain
    }
  };
  for (bool progress = true; progress && budget > 0;) {
    progress = false;
    for (T& c : candidates(value)) {
      if (--budget <= 0) {
        break;
      }
      if (still_fails(c)) {
        value = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return value;
}

std::vector<Integer> toward_zero(const Integer& e) {
  std::vector<Integer> out;
  if (e == 0) {
    return out;
  }
  out.push_back(0);
  Integer half = e / 2;
  if (half != 0) {
    out.push_back(half);
  }
  Integer step = e > 0 ? Integer(e - 1) : Integer(e + 1);
  if (step != 0 && step != half) {
    out.push_back(step);
  }
  return out;
}

std::vector<std::vector<Word>> word_candidates(const std::vector<Word>& ws) {
  std::vector<std::vector<Word>> out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const auto& ls = ws[i].letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::vector<Letter> dropped = ls;
      dropped.erase(dropped.begin() + static_cast<long>(k));
      out.push_back(ws);
      out.back()[i] = Word::reduce(ws[i].rank(), dropped);
      for (const Integer& e : toward_zero(ls[k].exp)) {
        std::vector<Letter> smaller = ls;
        smaller[k].exp = e;
        out.push_back(ws);
        out.back()[i] = Word::reduce(ws[i].rank(), smaller);
      }
    }
  }
  return out;
}

std::vector<std::vector<Monomial>> monomial_candidates(const std::vector<Monomial>& xs) {
  std::vector<std::vector<Monomial>> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs[i].size(); ++j) {
      for (const Integer& e : toward_zero(xs[i][j])) {
        std::vector<Integer> v = xs[i].exps();
        v[j] = e;
        out.push_back(xs);
        out.back()[i] = Monomial(std::move(v));
      }
    }
  }
  return out;
}

template <Coefficient Coef>
std::vector<std::vector<ModuleElement<Coef>>> element_candidates(
    const std::vector<ModuleElement<Coef>>& us) {
  std::vector<std::vector<ModuleElement<Coef>>> out;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (const auto& [x, c] : us[i].terms()) {
      ModuleElement<Coef> without = us[i];
      without.add_term(x, Coef(-c));
      out.push_back(us);
      out.back()[i] = without;
      if (c != 1) {
        out.push_back(us);
        out.back()[i] = without;
        out.back()[i].add_term(x, Coef(1));
      }
      for (std::size_t j = 0; j < x.size(); ++j) {
        for (const Integer& e : toward_zero(x[j])) {
          std::vector<Integer> v = x.exps();
          v[j] = e;
          out.push_back(us);
          out.back()[i] = without;
          out.back()[i].add_term(Monomial(std::move(v)), c);
        }
      }
    }
  }
  return out;
}

Json words_json(const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const Word& w : ws) {
    a.push_back(format_word(w));
  }
  return a;
}

Json monomials_json(const std::vector<Monomial>& xs) {
  Json a = Json::array();
  for (const Monomial& x : xs) {
    a.push_back(monomial_json(x));
  }
  return a;
}

template <Coefficient Coef>
Json elements_json(const std::vector<ModuleElement<Coef>>& us) {
  Json a = Json::array();
  for (const auto& u : us) {
    a.push_back(element_json(u));
  }
  return a;
}

void fail(PropertyResult& r, Json counterexample) {
  r.passed = false;
  r.counterexample = std::move(counterexample);
}

Json with_surface(const SurfaceSignature& sig, Json inputs) {
  Json j;
  j["surface"] = sig.describe();
  j["inputs"] = std::move(inputs);
  return j;
}

// Surfaces the algebraic suites cycle through.
const std::vector<SurfaceSignature>& lie_surfaces() {
  static const std::vector<SurfaceSignature> s = {SurfaceSignature::closed(1),
                                                  SurfaceSignature::closed(2),
                                                  SurfaceSignature::with_boundary(1, 2)};
  return s;
}

const std::vector<SurfaceSignature>& pairing_surfaces() {
  static const std::vector<SurfaceSignature> s = {
      SurfaceSignature::closed(1), SurfaceSignature::closed(2),
      SurfaceSignature::with_boundary(1, 2), SurfaceSignature::with_boundary(0, 3),
      SurfaceSignature::with_boundary(2, 3)};
  return s;
}

const std::vector<SurfaceSignature>& boundary_surfaces() {
  static const std::vector<SurfaceSignature> s = {SurfaceSignature::with_boundary(1, 2),
                                                  SurfaceSignature::with_boundary(1, 3)};
  return s;
}

// ---- words ----------------------------------------------------------------

constexpr std::size_t kWordRank = 3;

bool freely_reduced(const Word& w) {
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].exp == 0 || (i > 0 && ls[i].gen == ls[i - 1].gen)) {
      return false;
    }
  }
  return true;
}

PropertyResult words_reduce_idempotent(const PropertyContext& ctx) {
  PropertyResult r{"words.reduce_idempotent"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::vector<Letter> raw = sampling::raw_letters(rng, kWordRank, 10, 3);
    ++r.cases;
    Word once = Word::reduce(kWordRank, raw);
    if (!freely_reduced(once) || Word::reduce(kWordRank, once.letters()) != once) {
      Json j;
      j["raw"] = format_letters(raw);
      j["reduced"] = format_word(once);
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult words_concat_associative(const PropertyContext& ctx) {
  PropertyResult r{"words.concat_associative"};
  Rng rng(ctx.seed);
  auto bad = [](const std::vector<Word>& w) {
    const Word e(kWordRank);
    return (w[0] * w[1]) * w[2] != w[0] * (w[1] * w[2]) || e * w[0] != w[0] || w[0] * e != w[0];
  };
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::vector<Word> w;
    for (int k = 0; k < 3; ++k) {
      w.push_back(sampling::word(rng, kWordRank, 6, 3));
    }
    ++r.cases;
    if (bad(w)) {
      fail(r, words_json(shrink(w, word_candidates, bad)));
      return r;
    }
  }
  return r;
}

PropertyResult words_inverse(const PropertyContext& ctx) {
  PropertyResult r{"words.inverse"};
  Rng rng(ctx.seed);
  auto bad = [](const std::vector<Word>& w) {
    return !(w[0] * inverse(w[0])).empty() || !(inverse(w[0]) * w[0]).empty();
  };
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::vector<Word> w{sampling::word(rng, kWordRank, 8, 4)};
    ++r.cases;
    if (bad(w)) {
      fail(r, words_json(shrink(w, word_candidates, bad)));
      return r;
    }
  }
  return r;
}

PropertyResult words_conjugacy_invariance(const PropertyContext& ctx) {
  PropertyResult r{"words.conjugacy_invariance"};
  Rng rng(ctx.seed);
  auto bad = [](const std::vector<Word>& w) {
    return conjugacy_canonical(conjugate(w[0], w[1])) != conjugacy_canonical(w[0]);
  };
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::vector<Word> w{sampling::word(rng, kWordRank, 6, 3), sampling::word(rng, kWordRank, 4, 3)};
    ++r.cases;
    if (bad(w)) {
      fail(r, words_json(shrink(w, word_candidates, bad)));
      return r;
    }
  }
  return r;
}

// All reduced words of at most `len` single letters over kWordRank generators.
std::vector<Word> short_words(std::size_t len) {
  std::vector<Word> out{Word(kWordRank)};
  std::vector<Word> frontier = out;
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (std::size_t g = 1; g <= kWordRank; ++g) {
        for (int s : {1, -1}) {
          Word x = w * Word::generator(kWordRank, g, s);
          if (x.length() == static_cast<long>(l + 1)) {
            next.push_back(x);
          }
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

PropertyResult words_cyclic_core_minimal(const PropertyContext& ctx) {
  PropertyResult r{"words.cyclic_core_minimal"};
  Rng rng(ctx.seed);
  static const std::vector<Word> conjugators = short_words(3);
  auto bad = [](const std::vector<Word>& w) {
    CyclicReduction cr = cyclic_reduce(w[0]);
    if (!cr.core.is_cyclically_reduced() || conjugate(cr.core, cr.conjugator) != w[0]) {
      return true;
    }
    Integer best = w[0].length();
    for (const Word& g : conjugators) {
      Integer l = conjugate(w[0], g).length();
      if (l < best) {
        best = l;
      }
    }
    return cr.core.length() != best;
  };
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::vector<Letter> ls(static_cast<std::size_t>(sampling::uniform(rng, 0, 6)));
    for (Letter& l : ls) {
      l.gen = static_cast<std::size_t>(sampling::uniform(rng, 1, kWordRank));
      l.exp = sampling::coin(rng) ? 1 : -1;
    }
    std::vector<Word> w{Word::reduce(kWordRank, ls)};
    ++r.cases;
    if (bad(w)) {
      fail(r, words_json(shrink(w, word_candidates, bad)));
      return r;
    }
  }
  return r;
}

// ---- abelian --------------------------------------------------------------

PropertyResult abelian_conjugation_invariant(const PropertyContext& ctx) {
  PropertyResult r{"abelian.ab_conjugation_invariant"};
  Rng rng(ctx.seed);
  auto bad = [](const std::vector<Word>& w) {
    return ab<Integer>({{1, conjugate(w[0], w[1])}}, kWordRank) !=
           ab<Integer>({{1, w[0]}}, kWordRank);
  };
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::vector<Word> w{sampling::word(rng, kWordRank, 6, 4), sampling::word(rng, kWordRank, 5, 4)};
    ++r.cases;
    if (bad(w)) {
      fail(r, words_json(shrink(w, word_candidates, bad)));
      return r;
    }
  }
  return r;
}

PropertyResult abelian_re_homomorphism(const PropertyContext& ctx) {
  PropertyResult r{"abelian.re_homomorphism"};
  Rng rng(ctx.seed);
  auto bad = [](const std::vector<Word>& w) {
    return re(w[0] * w[1], kWordRank) != re(w[0], kWordRank) * re(w[1], kWordRank);
  };
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::vector<Word> w{sampling::word(rng, kWordRank, 6, 4), sampling::word(rng, kWordRank, 6, 4)};
    ++r.cases;
    if (bad(w)) {
      fail(r, words_json(shrink(w, word_candidates, bad)));
      return r;
    }
  }
  return r;
}

template <Coefficient Coef>
std::vector<WordTerm<Coef>> random_sum(Rng& rng) {
  std::vector<WordTerm<Coef>> s(static_cast<std::size_t>(sampling::uniform(rng, 0, 4)));
  for (auto& t : s) {
    t.coef = sampling::coefficient<Coef>(rng, 6);
    t.word = sampling::word(rng, kWordRank, 5, 3);
  }
  return s;
}

template <Coefficient Coef>
bool ab_linear_fails(const std::vector<WordTerm<Coef>>& s, const std::vector<WordTerm<Coef>>& t) {
  std::vector<WordTerm<Coef>> st = s;
  st.insert(st.end(), t.begin(), t.end());
  return ab<Coef>(st, kWordRank) != ab<Coef>(s, kWordRank) + ab<Coef>(t, kWordRank);
}

template <Coefficient Coef>
Json sum_json(const std::vector<WordTerm<Coef>>& s) {
  Json a = Json::array();
  for (const auto& t : s) {
    a.push_back(Json::array({to_string(t.coef), format_word(t.word)}));
  }
  return a;
}

PropertyResult abelian_ab_linear(const PropertyContext& ctx) {
  PropertyResult r{"abelian.ab_linear"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    ++r.cases;
    auto s = random_sum<Integer>(rng);
    auto t = random_sum<Integer>(rng);
    auto p = random_sum<Rational>(rng);
    auto q = random_sum<Rational>(rng);
    if (ab_linear_fails(s, t)) {
      fail(r, Json::array({sum_json(s), sum_json(t)}));
      return r;
    }
    if (ab_linear_fails(p, q)) {
      fail(r, Json::array({sum_json(p), sum_json(q)}));
      return r;
    }
  }
  return r;
}

// ---- symplectic -----------------------------------------------------------

template <class Bad>
PropertyResult monomial_property(const PropertyContext& ctx, std::string name, std::size_t arity,
                                 long radius, Bad bad) {
  PropertyResult r{std::move(name)};
  Rng rng(ctx.seed);
  const auto& surfaces = pairing_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const TestForm form(surfaces[i % surfaces.size()], ctx.fault);
    std::vector<Monomial> xs;
    for (std::size_t k = 0; k < arity; ++k) {
      xs.push_back(sampling::monomial(rng, form.n(), radius));
    }
    auto b = [&](const std::vector<Monomial>& v) { return bad(form, v); };
    ++r.cases;
    if (b(xs)) {
      fail(r, with_surface(form.signature(), monomials_json(shrink(xs, monomial_candidates, b))));
      return r;
    }
  }
  return r;
}

PropertyResult symplectic_antisymmetry(const PropertyContext& ctx) {
  return monomial_property(ctx, "symplectic.pair_antisymmetry", 2, 20,
                           [](const TestForm& f, const std::vector<Monomial>& x) {
                             return f.pair(x[0], x[1]) != -f.pair(x[1], x[0]);
                           });
}

PropertyResult symplectic_matrix_agreement(const PropertyContext& ctx) {
  return monomial_property(ctx, "symplectic.matrix_agreement", 2, 20,
                           [](const TestForm& f, const std::vector<Monomial>& x) {
                             std::vector<Integer> m = m_vector(f.signature(), x[0]);
                             Integer dot = 0;
                             for (std::size_t j = 0; j < m.size(); ++j) {
                               dot += x[1][j] * m[j];
                             }
                             return f.pair(x[0], x[1]) != dot;
                           });
}

PropertyResult symplectic_bi_additivity(const PropertyContext& ctx) {
  return monomial_property(ctx, "symplectic.bi_additivity", 3, 20,
                           [](const TestForm& f, const std::vector<Monomial>& x) {
                             return f.pair(x[0] * x[1], x[2]) !=
                                        f.pair(x[0], x[2]) + f.pair(x[1], x[2]) ||
                                    f.pair(x[2], x[0] * x[1]) !=
                                        f.pair(x[2], x[0]) + f.pair(x[2], x[1]);
                           });
}

PropertyResult symplectic_center_criterion(const PropertyContext& ctx) {
  PropertyResult r{"symplectic.center_criterion"};
  Rng rng(ctx.seed);
  const auto& surfaces = pairing_surfaces();
  auto bad = [](const TestForm& f, const Monomial& x) {
    const SurfaceSignature& sig = f.signature();
    std::vector<Integer> m = m_vector(sig, x);
    bool m_zero = std::all_of(m.begin(), m.end(), [](const Integer& v) { return v == 0; });
    bool pairs_zero = true;
    for (std::size_t j = 1; j <= sig.n(); ++j) {
      pairs_zero = pairs_zero && f.pair(x, Monomial::generator(sig.n(), j)) == 0;
    }
    return is_central(sig, x) != m_zero || m_zero != pairs_zero;
  };
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const TestForm form(surfaces[i % surfaces.size()], ctx.fault);
    // half the draws are central, so both sides of the equivalence are hit
    Monomial x = sampling::coin(rng) ? sampling::central_monomial(rng, form.signature(), 5)
                                     : sampling::monomial(rng, form.n(), 5);
    ++r.cases;
    if (bad(form, x)) {
      auto b = [&](const std::vector<Monomial>& v) { return bad(form, v[0]); };
      fail(r, with_surface(form.signature(),
                           monomials_json(shrink(std::vector<Monomial>{x}, monomial_candidates, b))));
      return r;
    }
  }
  return r;
}

PropertyResult symplectic_intersection_decomposition(const PropertyContext& ctx) {
  PropertyResult r{"symplectic.intersection_decomposition"};
  Rng rng(ctx.seed);
  const auto& surfaces = pairing_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const TestForm form(surfaces[i % surfaces.size()], ctx.fault);
    const std::size_t n = form.n();
    auto m = [&](const Word& u, const Word& v) { return form.pair(re(u, n), re(v, n)); };
    auto bad = [&](const std::vector<Word>& w) {
      return m(w[0] * w[1], w[2] * w[3]) !=
             m(w[0], w[2]) + m(w[0], w[3]) + m(w[1], w[2]) + m(w[1], w[3]);
    };
    std::vector<Word> w;
    for (int k = 0; k < 4; ++k) {
      w.push_back(sampling::word(rng, n, 5, 4));
    }
    ++r.cases;
    if (bad(w)) {
      fail(r, with_surface(form.signature(), words_json(shrink(w, word_candidates, bad))));
      return r;
    }
  }
  return r;
}

// ---- liealg ---------------------------------------------------------------

template <Coefficient Coef, class Bad>
bool element_case(PropertyResult& r, const TestForm& form, std::vector<ModuleElement<Coef>> us,
                  Bad bad) {
  auto b = [&](const std::vector<ModuleElement<Coef>>& v) { return bad(form, v); };
  ++r.cases;
  if (!b(us)) {
    return true;
  }
  fail(r, with_surface(form.signature(), elements_json(shrink(std::move(us),
                                                              element_candidates<Coef>, b))));
  return false;
}

struct AntisymmetryBad {
  template <Coefficient Coef>
  bool operator()(const TestForm& f, const std::vector<ModuleElement<Coef>>& u) const {
    return !(bracket(f, u[0], u[1]) + bracket(f, u[1], u[0])).is_zero();
  }
};

struct JacobiBad {
  template <Coefficient Coef>
  bool operator()(const TestForm& f, const std::vector<ModuleElement<Coef>>& u) const {
    const auto& [x, y, z] = std::tie(u[0], u[1], u[2]);
    return !(bracket(f, x, bracket(f, y, z)) + bracket(f, y, bracket(f, z, x)) +
             bracket(f, z, bracket(f, x, y)))
                .is_zero();
  }
};

template <class Bad>
PropertyResult element_property(const PropertyContext& ctx, std::string name, std::size_t arity,
                                 Bad bad) {
  PropertyResult r{std::move(name)};
  Rng rng(ctx.seed);
  const auto& surfaces = lie_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const TestForm form(surfaces[i % surfaces.size()], ctx.fault);
    // alternate rings
    if (i % 2 == 0) {
      std::vector<IntElement> us;
      for (std::size_t k = 0; k < arity; ++k) {
        us.push_back(sampling::element<Integer>(rng, form.n(), 4, 3));
      }
      if (!element_case(r, form, std::move(us), bad)) {
        return r;
      }
    } else {
      std::vector<RatElement> us;
      for (std::size_t k = 0; k < arity; ++k) {
        us.push_back(sampling::element<Rational>(rng, form.n(), 4, 3));
      }
      if (!element_case(r, form, std::move(us), bad)) {
        return r;
      }
    }
  }
  return r;
}

PropertyResult liealg_antisymmetry(const PropertyContext& ctx) {
  return element_property(ctx, "liealg.antisymmetry", 2, AntisymmetryBad{});
}

PropertyResult liealg_jacobi(const PropertyContext& ctx) {
  return element_property(ctx, "liealg.jacobi", 3, JacobiBad{});
}

PropertyResult liealg_homomorphism(const PropertyContext& ctx) {
  PropertyResult r{"liealg.homomorphism"};
  Rng rng(ctx.seed);
  const auto& surfaces = lie_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const TestForm form(surfaces[i % surfaces.size()], ctx.fault);
    const SurfaceSignature& sig = form.signature();
    const std::size_t n = form.n();
    auto bad = [&](const std::vector<Word>& w) {
      Monomial x = re(w[0], n);
      Monomial y = re(w[1], n);
      IntElement b = bracket_monomial(form, x, y);
      Integer m = intersection_pairing(sig, w[0], w[1]);
      // Ab[u, v] = [Ab u, Ab v] on single words: one term, coefficient m
      IntElement expected(n);
      expected.add_term(x * y, m);
      return b != expected;
    };
    std::vector<Word> w{sampling::word(rng, n, 6, 3), sampling::word(rng, n, 6, 3)};
    ++r.cases;
    if (bad(w)) {
      fail(r, with_surface(sig, words_json(shrink(w, word_candidates, bad))));
      return r;
    }
  }
  return r;
}

PropertyResult liealg_centrality(const PropertyContext& ctx) {
  PropertyResult r{"liealg.centrality"};
  Rng rng(ctx.seed);
  const auto& surfaces = pairing_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const TestForm form(surfaces[i % surfaces.size()], ctx.fault);
    auto bad = [&](const std::vector<Monomial>& x) {
      return is_central(form.signature(), x[0]) &&
             !bracket_monomial(form, x[0], x[1]).is_zero();
    };
    std::vector<Monomial> xs{sampling::central_monomial(rng, form.signature(), 6),
                             sampling::monomial(rng, form.n(), 6)};
    ++r.cases;
    if (bad(xs)) {
      fail(r, with_surface(form.signature(), monomials_json(shrink(xs, monomial_candidates, bad))));
      return r;
    }
  }
  return r;
}

// ---- ideals-int -----------------------------------------------------------

std::set<Monomial> random_k(Rng& rng, std::size_t n, std::size_t max_size, long radius) {
  std::set<Monomial> k;
  const long size = sampling::uniform(rng, 0, long(max_size));
  for (long i = 0; i < size; ++i) {
    k.insert(sampling::monomial(rng, n, radius));
  }
  return k;
}

Json tuple_set_json(const std::set<Monomial>& k) {
  return monomials_json(std::vector<Monomial>(k.begin(), k.end()));
}

PropertyResult ideals_int_ik_bracket_closure(const PropertyContext& ctx) {
  PropertyResult r{"ideals_int.ik_bracket_closure"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const SurfaceSignature sig = SurfaceSignature::closed(i % 2 == 0 ? 1 : 2);
    const std::size_t n = sig.n();
    GeometricSubmodule sub = GeometricSubmodule::ik(n, random_k(rng, n, 4, 3));
    IntElement u(n);
    const long terms = sampling::uniform(rng, 1, 4);
    for (long t = 0; t < terms; ++t) {
      Monomial x = sampling::monomial(rng, n, 5);
      u.add_term(x, sub.alpha(x) * sampling::integer(rng, 5));
    }
    Monomial v = sampling::monomial(rng, n, 3);
    ++r.cases;
    if (!contains(sub, u) || !contains(sub, bracket(sig, u, v))) {
      Json j;
      j["surface"] = sig.describe();
      j["K"] = tuple_set_json(std::get<IKRule>(sub.rule()).exceptions);
      j["element"] = element_json(u);
      j["v"] = monomial_json(v);
      fail(r, j);
      return r;
    }
  }
  return r;
}

// Independent oracle for the closure criterion on a box: bracket every
// generator alpha(w) w with every v keeping vw in the box, test membership.
bool bracket_closed_on_box(const SurfaceSignature& sig, const GeometricSubmodule& sub,
                           const ExponentBox& box) {
  const std::uint64_t pts = box.points();
  for (std::uint64_t iw = 0; iw < pts; ++iw) {
    const Monomial w = box.point(iw);
    const IntElement gen = IntElement::term(w, sub.alpha(w));
    for (std::uint64_t iz = 0; iz < pts; ++iz) {
      const Monomial v = box.point(iz) * monomial_inv(w);
      if (!contains(sub, bracket(sig, gen, v))) {
        return false;
      }
    }
  }
  return true;
}

GeometricSubmodule random_table(Rng& rng, const ExponentBox& box, const std::vector<long>& values,
                                double density) {
  std::map<Monomial, Integer> entries;
  box.for_each([&](const Monomial& x) {
    if (sampling::coin(rng, density)) {
      entries.emplace(x, values[static_cast<std::size_t>(
                             sampling::uniform(rng, 0, long(values.size()) - 1))]);
    }
  });
  return GeometricSubmodule::table(box, 1, std::move(entries));
}

// An I_K rule written out as a table on the box; always an ideal.
GeometricSubmodule ik_as_table(Rng& rng, const ExponentBox& box) {
  GeometricSubmodule ik = GeometricSubmodule::ik(box.dim, random_k(rng, box.dim, 3, box.radius));
  std::map<Monomial, Integer> entries;
  box.for_each([&](const Monomial& x) { entries.emplace(x, ik.alpha(x)); });
  return GeometricSubmodule::table(box, 1, std::move(entries));
}

PropertyResult ideals_int_criterion_vs_closure(const PropertyContext& ctx) {
  PropertyResult r{"ideals_int.criterion_vs_bracket_closure"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const bool genus2 = i % 4 == 3;
    const SurfaceSignature sig = SurfaceSignature::closed(genus2 ? 2 : 1);
    const ExponentBox box{sig.n(), genus2 ? 1L : 2L};
    GeometricSubmodule sub = sampling::coin(rng, 0.3)
                                 ? ik_as_table(rng, box)
                                 : random_table(rng, box, {0, 1, 2, 3, 4, 6}, 0.1);
    ++r.cases;
    const bool criterion = ideal_check_exhaustive(sig, sub, box).verdict;
    if (criterion != bracket_closed_on_box(sig, sub, box)) {
      Json j;
      j["surface"] = sig.describe();
      j["rule"] = table_rule_json(std::get<TableRule>(sub.rule()));
      j["closure"] = criterion;
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult ideals_int_divisibility_vs_closure(const PropertyContext& ctx) {
  PropertyResult r{"ideals_int.divisibility_vs_closure"};
  Rng rng(ctx.seed);
  const SurfaceSignature sig = SurfaceSignature::closed(1);
  const ExponentBox box{2, 2};
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    std::map<Monomial, Integer> entries;
    if (sampling::coin(rng)) {
      // Structured: primitive points share one value, even points are free;
      // then maybe flip one point. Hits both verdicts often.
      const long primitive = sampling::coin(rng) ? 1 : 2;
      box.for_each([&](const Monomial& x) {
        const bool even = x[0] % 2 == 0 && x[1] % 2 == 0;
        entries.emplace(x, even ? sampling::uniform(rng, 1, 2) : primitive);
      });
      if (sampling::coin(rng)) {
        Monomial x = box.point(static_cast<std::uint64_t>(sampling::uniform(rng, 0, 24)));
        entries[x] = entries[x] == 1 ? 2 : 1;
      }
    } else {
      box.for_each([&](const Monomial& x) { entries.emplace(x, sampling::uniform(rng, 1, 2)); });
    }
    GeometricSubmodule sub = GeometricSubmodule::table(box, 1, std::move(entries));
    ++r.cases;
    const bool criterion = ideal_check_exhaustive(sig, sub, box).verdict;
    const bool prop = prop_divisibility_exhaustive(sig, sub, box).verdict;
    if (criterion != prop) {
      Json j;
      j["rule"] = table_rule_json(std::get<TableRule>(sub.rule()));
      j["closure"] = criterion;
      j["prop"] = prop;
      fail(r, j);
      return r;
    }
  }
  return r;
}

// ---- ideals-rat -----------------------------------------------------------

const std::vector<SurfaceSignature>& rat_surfaces() {
  static const std::vector<SurfaceSignature> s = {
      SurfaceSignature::closed(1), SurfaceSignature::with_boundary(1, 2),
      SurfaceSignature::with_boundary(1, 3), SurfaceSignature::with_boundary(2, 2)};
  return s;
}

bool standard_form_ok(const SurfaceSignature& sig, const RatElement& u) {
  StandardRepresentation rep = standard_representation(sig, u);
  const Monomial e = Monomial::identity(sig.n());
  for (std::size_t i = 0; i < rep.parts.size(); ++i) {
    const StandardPart& p = rep.parts[i];
    const auto& pairs = p.label.pairs();
    if (pairs.front().first != e || pairs.front().second != 1 || !is_central(sig, p.offset) ||
        class_base(sig, p.base) != p.base || is_central(sig, p.base) ||
        (i > 0 && !(rep.parts[i - 1].base < p.base))) {
      return false;
    }
  }
  for (const auto& [x, q] : rep.central.terms()) {
    if (!is_central(sig, x)) {
      return false;
    }
  }
  return reassemble(rep) == u;
}

PropertyResult ideals_rat_reassembly(const PropertyContext& ctx) {
  PropertyResult r{"ideals_rat.reassembly"};
  Rng rng(ctx.seed);
  const auto& surfaces = rat_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const SurfaceSignature& sig = surfaces[i % surfaces.size()];
    // Small first coordinates so classes collide and parts get several terms.
    RatElement u(sig.n());
    const long terms = sampling::uniform(rng, 0, 6);
    for (long t = 0; t < terms; ++t) {
      Monomial x = sampling::monomial(rng, sig.n(), 3);
      std::vector<Integer> e = x.exps();
      for (std::size_t j = 0; j < 2 * std::size_t{sig.genus()}; ++j) {
        e[j] = sampling::uniform(rng, -1, 1);
      }
      u.add_term(Monomial(std::move(e)), sampling::nonzero_rational(rng, 9, 4));
    }
    std::vector<RatElement> us{u};
    auto bad = [&](const std::vector<RatElement>& v) { return !standard_form_ok(sig, v[0]); };
    if (!element_case(r, TestForm(sig), us, [&](const TestForm&, const auto& v) { return bad(v); })) {
      return r;
    }
  }
  return r;
}

PropertyResult ideals_rat_bracket_identity(const PropertyContext& ctx) {
  PropertyResult r{"ideals_rat.bracket_identity"};
  Rng rng(ctx.seed);
  const auto& surfaces = rat_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const SurfaceSignature& sig = surfaces[i % surfaces.size()];
    PrimitiveLabel label = sampling::label(rng, sig, 3, 3);
    Monomial x = sampling::noncentral_monomial(rng, sig, 4);
    Monomial y = sampling::monomial(rng, sig.n(), 4);
    ++r.cases;
    if (!primitive_bracket_identity_check(sig, label, x, y)) {
      Json j;
      j["surface"] = sig.describe();
      j["label"] = element_json(label.as_element());
      j["x"] = monomial_json(x);
      j["y"] = monomial_json(y);
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult ideals_rat_saturation(const PropertyContext& ctx) {
  PropertyResult r{"ideals_rat.saturation"};
  Rng rng(ctx.seed);
  const auto& surfaces = rat_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const SurfaceSignature& sig = surfaces[i % surfaces.size()];
    PrimitiveLabel label = sampling::label(rng, sig, 3, 2);
    Monomial x = sampling::noncentral_monomial(rng, sig, 4);
    Monomial y = sampling::noncentral_monomial(rng, sig, 4);
    RationalIdeal ideal = ideal_closure(sig, {sampling::nonzero_rational(rng, 5, 3) *
                                              f_label(label, x)});
    ++r.cases;
    if (!contains(ideal, f_label(label, y)) || ideal.labels() != std::set{label} ||
        !ideal.central_basis().empty()) {
      Json j;
      j["surface"] = sig.describe();
      j["label"] = element_json(label.as_element());
      j["x"] = monomial_json(x);
      j["y"] = monomial_json(y);
      fail(r, j);
      return r;
    }
  }
  return r;
}

struct RandomIdeal {
  std::set<PrimitiveLabel> labels;
  std::vector<RatElement> central;
};

RandomIdeal random_ideal_data(Rng& rng, const SurfaceSignature& sig) {
  RandomIdeal d;
  const long labels = sampling::uniform(rng, 0, 3);
  for (long i = 0; i < labels; ++i) {
    d.labels.insert(sampling::label(rng, sig, 3, 2));
  }
  const long central = sampling::uniform(rng, 0, 2);
  for (long i = 0; i < central; ++i) {
    RatElement c(sig.n());
    const long terms = sampling::uniform(rng, 1, 3);
    for (long t = 0; t < terms; ++t) {
      c.add_term(sampling::central_monomial(rng, sig, 2), sampling::nonzero_rational(rng, 5, 3));
    }
    d.central.push_back(std::move(c));
  }
  return d;
}

Json ideal_data_json(const SurfaceSignature& sig, const RandomIdeal& d) {
  Json j;
  j["surface"] = sig.describe();
  Json labels = Json::array();
  for (const PrimitiveLabel& l : d.labels) {
    labels.push_back(element_json(l.as_element()));
  }
  j["labels"] = std::move(labels);
  j["central"] = elements_json(d.central);
  return j;
}

PropertyResult ideals_rat_closure_is_ideal(const PropertyContext& ctx) {
  PropertyResult r{"ideals_rat.closure_is_ideal"};
  Rng rng(ctx.seed);
  const auto& surfaces = rat_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const SurfaceSignature& sig = surfaces[i % surfaces.size()];
    std::vector<RatElement> gens;
    const long count = sampling::uniform(rng, 1, 3);
    for (long g = 0; g < count; ++g) {
      RatElement u(sig.n());
      const long terms = sampling::uniform(rng, 1, 4);
      for (long t = 0; t < terms; ++t) {
        std::vector<Integer> e = sampling::monomial(rng, sig.n(), 2).exps();
        for (std::size_t j = 0; j < 2 * std::size_t{sig.genus()}; ++j) {
          e[j] = sampling::uniform(rng, -1, 1);
        }
        u.add_term(Monomial(std::move(e)), sampling::nonzero_rational(rng, 5, 3));
      }
      gens.push_back(std::move(u));
    }
    RationalIdeal ideal = ideal_closure(sig, gens);
    ++r.cases;
    bool ok = std::all_of(gens.begin(), gens.end(),
                          [&](const RatElement& g) { return contains(ideal, g); });
    std::optional<ClosureViolation> v;
    if (ok) {
      v = verify_closure_sampled(ideal, 8, sampling::derive_seed(ctx.seed, i));
    }
    if (!ok || v) {
      Json j;
      j["surface"] = sig.describe();
      j["generators"] = elements_json(gens);
      if (v) {
        j["member"] = element_json(v->member);
        j["v"] = monomial_json(v->v);
      }
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult ideals_rat_round_trip(const PropertyContext& ctx) {
  PropertyResult r{"ideals_rat.round_trip"};
  Rng rng(ctx.seed);
  const auto& surfaces = boundary_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const SurfaceSignature& sig = surfaces[i % surfaces.size()];
    RandomIdeal d = random_ideal_data(rng, sig);
    RationalIdeal target = RationalIdeal::from_parts(sig, d.labels, d.central);

    // One scaled, translated f-term per label plus the central vectors.
    std::vector<RatElement> exact;
    for (const PrimitiveLabel& l : d.labels) {
      Monomial x = sampling::noncentral_monomial(rng, sig, 3);
      exact.push_back(sampling::nonzero_rational(rng, 5, 3) * f_label(l, x));
    }
    exact.insert(exact.end(), d.central.begin(), d.central.end());
    RationalIdeal rebuilt = ideal_closure(sig, exact);

    // Random members of the ideal generate a subideal.
    std::vector<RatElement> drawn;
    const long count = sampling::uniform(rng, 0, 3);
    for (long g = 0; g < count; ++g) {
      RatElement u(sig.n());
      for (const PrimitiveLabel& l : d.labels) {
        if (sampling::coin(rng)) {
          u += sampling::nonzero_rational(rng, 5, 3) *
               f_label(l, sampling::noncentral_monomial(rng, sig, 3));
        }
      }
      for (const RatElement& c : d.central) {
        if (sampling::coin(rng)) {
          u += sampling::nonzero_rational(rng, 5, 3) * c;
        }
      }
      drawn.push_back(std::move(u));
    }
    RationalIdeal sub = ideal_closure(sig, drawn);

    ++r.cases;
    if (rebuilt.labels() != d.labels || !ideals_equal(rebuilt, target) ||
        !is_subideal(sub, target)) {
      Json j = ideal_data_json(sig, d);
      j["generators"] = elements_json(exact);
      j["drawn"] = elements_json(drawn);
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult ideals_rat_minimality(const PropertyContext& ctx) {
  PropertyResult r{"ideals_rat.central_minimality"};
  Rng rng(ctx.seed);
  const auto& surfaces = rat_surfaces();
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const SurfaceSignature& sig = surfaces[i % surfaces.size()];
    RatElement c(sig.n());
    const long terms = sampling::uniform(rng, 1, 3);
    for (long t = 0; t < terms; ++t) {
      c.add_term(sampling::central_monomial(rng, sig, 3), sampling::nonzero_rational(rng, 5, 3));
    }
    RationalIdeal ideal = ideal_closure(sig, {c});
    ++r.cases;
    if (!ideal.labels().empty() || !contains(ideal, c)) {
      Json j;
      j["surface"] = sig.describe();
      j["element"] = element_json(c);
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult ideals_rat_closed_classification(const PropertyContext& ctx) {
  PropertyResult r{"ideals_rat.closed_classification"};
  for (unsigned g : {1U, 2U}) {
    ClosedClassificationReport rep = classify_closed_check(
        SurfaceSignature::closed(g), (ctx.count + 1) / 2, sampling::derive_seed(ctx.seed, g));
    r.cases += rep.cases;
    if (!rep.verdict) {
      fail(r, with_surface(SurfaceSignature::closed(g), elements_json(rep.failing_generators)));
      return r;
    }
  }
  return r;
}

// ---- chain ----------------------------------------------------------------

constexpr std::size_t kChainRank = 3;
constexpr unsigned long kMaxLevel = 6;

bool gn_invariants_hold(const GnElement& x) {
  const auto& ls = x.letters();
  const Integer half = x.level() == 0 ? Integer(0) : pow2(x.level() - 1);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].exp == 0 || (i > 0 && ls[i].gen == ls[i - 1].gen)) {
      return false;
    }
    if (ls[i].gen == x.c_index() && (ls[i].exp <= -half || ls[i].exp > half)) {
      return false;
    }
  }
  return true;
}

// Words with large c-exponents so every level's residue arithmetic is hit.
Word chain_word(Rng& rng, std::size_t c_index) {
  std::vector<Letter> ls(static_cast<std::size_t>(sampling::uniform(rng, 0, 7)));
  for (Letter& l : ls) {
    l.gen = static_cast<std::size_t>(sampling::uniform(rng, 1, kChainRank));
    l.exp = l.gen == c_index ? sampling::nonzero(rng, 80) : sampling::nonzero(rng, 3);
  }
  return Word::reduce(kChainRank, ls);
}

// Product of conjugates of c^{k 2^m}: lies in the kernel of every level <= m.
Word kernel_word(Rng& rng, std::size_t c_index, unsigned long m) {
  Word w(kChainRank);
  const long factors = sampling::uniform(rng, 1, 3);
  for (long f = 0; f < factors; ++f) {
    Word g = sampling::word(rng, kChainRank, 3, 2);
    Integer e = pow2(m) * sampling::nonzero(rng, 2);
    w = w * conjugate(Word::generator(kChainRank, c_index, e), g);
  }
  return w;
}

PropertyResult chain_homomorphism(const PropertyContext& ctx) {
  PropertyResult r{"chain.homomorphism"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const std::size_t c = static_cast<std::size_t>(sampling::uniform(rng, 1, kChainRank));
    auto bad = [&](const std::vector<Word>& w) {
      for (unsigned long n = 0; n <= kMaxLevel; ++n) {
        GnElement pu = project_gn(w[0], n, c);
        GnElement pv = project_gn(w[1], n, c);
        GnElement puv = project_gn(w[0] * w[1], n, c);
        if (!gn_invariants_hold(pu) || puv != gn_mul(pu, pv) ||
            project_gn(inverse(w[0]), n, c) != gn_inv(pu) || !gn_mul(pu, gn_inv(pu)).is_identity()) {
          return true;
        }
      }
      return false;
    };
    std::vector<Word> w{chain_word(rng, c), chain_word(rng, c)};
    ++r.cases;
    if (bad(w)) {
      Json j;
      j["c"] = c;
      j["words"] = words_json(shrink(w, word_candidates, bad));
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult chain_kernel_nesting(const PropertyContext& ctx) {
  PropertyResult r{"chain.kernel_nesting"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const std::size_t c = static_cast<std::size_t>(sampling::uniform(rng, 1, kChainRank));
    Word w(kChainRank);
    switch (i % 3) {
      case 0:
        w = chain_word(rng, c);
        break;
      case 1:
        w = kernel_word(rng, c, static_cast<unsigned long>(sampling::uniform(rng, 0, 7)));
        break;
      default:
        // kernel element times a conjugate of a smaller power of c
        w = kernel_word(rng, c, 6) *
            conjugate(Word::generator(kChainRank, c,
                                      pow2(static_cast<unsigned long>(sampling::uniform(rng, 0, 5)))),
                      sampling::word(rng, kChainRank, 2, 2));
        break;
    }
    auto bad = [&](const std::vector<Word>& v) {
      for (unsigned long n = 0; n + 1 <= kMaxLevel; ++n) {
        if (project_gn(v[0], n + 1, c).is_identity() && !project_gn(v[0], n, c).is_identity()) {
          return true;
        }
      }
      return false;
    };
    std::vector<Word> ws{w};
    ++r.cases;
    if (bad(ws)) {
      Json j;
      j["c"] = c;
      j["word"] = words_json(shrink(ws, word_candidates, bad));
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult chain_cn_generators(const PropertyContext& ctx) {
  PropertyResult r{"chain.cn_generators_trivial"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const std::size_t c = static_cast<std::size_t>(sampling::uniform(rng, 1, kChainRank));
    const auto n = static_cast<unsigned long>(sampling::uniform(rng, 0, long(kMaxLevel)));
    const long len = sampling::uniform(rng, 1, 3);
    std::vector<unsigned long> ms;
    std::vector<Word> xs;
    for (long k = 0; k < len; ++k) {
      ms.push_back(n + static_cast<unsigned long>(sampling::uniform(rng, 0, 3)));
      xs.push_back(sampling::word(rng, kChainRank, 4, 3));
    }
    Word g = sampling::word(rng, kChainRank, 4, 3);
    Word w = cn_generator(n, ms, xs, g, c);
    ++r.cases;
    if (!project_gn(w, n, c).is_identity()) {
      Json j;
      j["level"] = n;
      j["c"] = c;
      j["m"] = ms;
      j["x"] = words_json(xs);
      j["g"] = format_word(g);
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult chain_strict_levels(const PropertyContext& ctx) {
  PropertyResult r{"chain.strict_levels"};
  if (ctx.count == 0) {
    return r;
  }
  for (unsigned long n = 0; n <= kMaxLevel; ++n) {
    for (std::size_t c = 1; c <= kChainRank; ++c) {
      const Word w = Word::generator(kChainRank, c, pow2(n));
      const Word e(kChainRank);
      ++r.cases;
      std::optional<unsigned long> level = separation_level(w, e, c, kMaxLevel + 1);
      if (!project_gn(w, n, c).is_identity() ||
          gn_conjugate(project_gn(w, n + 1, c), project_gn(e, n + 1, c)) || level != n + 1) {
        Json j;
        j["level"] = n;
        j["c"] = c;
        fail(r, j);
        return r;
      }
    }
  }
  return r;
}

PropertyResult chain_separation_bound(const PropertyContext& ctx) {
  PropertyResult r{"chain.separation_bound"};
  Rng rng(ctx.seed);
  const std::size_t c = 1;
  std::uint64_t i = 0;
  while (r.cases < ctx.count) {
    ++i;
    Word a(kChainRank);
    std::vector<Letter> ls(static_cast<std::size_t>(sampling::uniform(rng, 1, 6)));
    for (Letter& l : ls) {
      l.gen = static_cast<std::size_t>(sampling::uniform(rng, 1, kChainRank));
      l.exp = l.gen == c ? sampling::nonzero(rng, 12) : sampling::nonzero(rng, 2);
    }
    a = Word::reduce(kChainRank, ls);
    Word b(kChainRank);
    if (i % 2 == 0) {
      // perturb one c-syllable of a by a power of two: separated late
      std::vector<Letter> bl = a.letters();
      for (Letter& l : bl) {
        if (l.gen == c) {
          l.exp += pow2(static_cast<unsigned long>(sampling::uniform(rng, 0, 4))) *
                   (sampling::coin(rng) ? 1 : -1);
          break;
        }
      }
      b = conjugate(Word::reduce(kChainRank, bl), sampling::word(rng, kChainRank, 2, 2));
    } else {
      b = sampling::word(rng, kChainRank, 5, 6);
    }
    const Integer e = total_c_exponent(a, b, c);
    if (e > 32 || are_conjugate(a, b)) {
      continue;
    }
    ++r.cases;
    const unsigned long bound = separation_bound(e);
    std::optional<unsigned long> level = separation_level(a, b, c, bound);
    if (!level) {
      Json j;
      j["a"] = format_word(a);
      j["b"] = format_word(b);
      j["E"] = to_string(e);
      j["bound"] = bound;
      fail(r, j);
      return r;
    }
  }
  return r;
}

PropertyResult chain_conjugacy_equivalence(const PropertyContext& ctx) {
  PropertyResult r{"chain.conjugacy_equivalence"};
  Rng rng(ctx.seed);
  for (std::uint64_t i = 0; i < ctx.count; ++i) {
    const std::size_t c = static_cast<std::size_t>(sampling::uniform(rng, 1, kChainRank));
    const auto n = static_cast<unsigned long>(sampling::uniform(rng, 0, long(kMaxLevel)));
    const Word u = chain_word(rng, c);
    const Word v = conjugate(u, chain_word(rng, c));
    const Word w = conjugate(v, chain_word(rng, c));
    const Word z = chain_word(rng, c);
    const GnElement x = project_gn(u, n, c);
    const GnElement y = project_gn(v, n, c);
    const GnElement t = project_gn(w, n, c);
    const GnElement s = project_gn(z, n, c);
    // Abelian invariants: non-c exponent sums, and the c-sum modulo 2^n.
    auto invariant = [&](const GnElement& g) {
      Monomial m = re(g.word(), kChainRank);
      std::vector<Integer> e = m.exps();
      e[c - 1] = symmetric_residue(e[c - 1], n);
      return e;
    };
    ++r.cases;
    const bool ok = gn_conjugate(x, x) && gn_conjugate(x, y) && gn_conjugate(y, x) &&
                    gn_conjugate(x, t) && gn_conjugate(x, s) == gn_conjugate(s, x) &&
                    (!gn_conjugate(x, s) || gn_conjugate(t, s)) &&
                    (invariant(x) == invariant(s) || !gn_conjugate(x, s));
    if (!ok) {
      Json j;
      j["level"] = n;
      j["c"] = c;
      j["words"] = words_json({u, v, w, z});
      fail(r, j);
      return r;
    }
  }
  return r;
}

}  // namespace

const std::vector<PropertySuite>& property_suites() {
  static const std::vector<PropertySuite> suites = {
      {"words.reduce_idempotent", 10000, words_reduce_idempotent},
      {"words.concat_associative", 10000, words_concat_associative},
      {"words.inverse", 10000, words_inverse},
      {"words.conjugacy_invariance", 10000, words_conjugacy_invariance},
      {"words.cyclic_core_minimal", 1000, words_cyclic_core_minimal},
      {"abelian.ab_conjugation_invariant", 10000, abelian_conjugation_invariant},
      {"abelian.re_homomorphism", 10000, abelian_re_homomorphism},
      {"abelian.ab_linear", 1000, abelian_ab_linear},
      {"symplectic.pair_antisymmetry", 10000, symplectic_antisymmetry},
      {"symplectic.matrix_agreement", 10000, symplectic_matrix_agreement},
      {"symplectic.bi_additivity", 10000, symplectic_bi_additivity},
      {"symplectic.center_criterion", 1000, symplectic_center_criterion},
      {"symplectic.intersection_decomposition", 10000, symplectic_intersection_decomposition},
      {"liealg.antisymmetry", 10000, liealg_antisymmetry},
      {"liealg.jacobi", 1000, liealg_jacobi},
      {"liealg.homomorphism", 1000, liealg_homomorphism},
      {"liealg.centrality", 1000, liealg_centrality},
      {"ideals_int.ik_bracket_closure", 1000, ideals_int_ik_bracket_closure},
      {"ideals_int.criterion_vs_bracket_closure", 100, ideals_int_criterion_vs_closure},
      {"ideals_int.divisibility_vs_closure", 300, ideals_int_divisibility_vs_closure},
      {"ideals_rat.reassembly", 10000, ideals_rat_reassembly},
      {"ideals_rat.bracket_identity", 1000, ideals_rat_bracket_identity},
      {"ideals_rat.saturation", 1000, ideals_rat_saturation},
      {"ideals_rat.closure_is_ideal", 100, ideals_rat_closure_is_ideal},
      {"ideals_rat.round_trip", 200, ideals_rat_round_trip},
      {"ideals_rat.central_minimality", 1000, ideals_rat_minimality},
      {"ideals_rat.closed_classification", 100, ideals_rat_closed_classification},
      {"chain.homomorphism", 10000, chain_homomorphism},
      {"chain.kernel_nesting", 10000, chain_kernel_nesting},
      {"chain.cn_generators_trivial", 1000, chain_cn_generators},
      {"chain.strict_levels", 1, chain_strict_levels},
      {"chain.separation_bound", 1000, chain_separation_bound},
      {"chain.conjugacy_equivalence", 1000, chain_conjugacy_equivalence},
  };
  return suites;
}

PropertyResult run_property(std::string_view name, std::uint64_t count, std::uint64_t seed,
                            Fault fault) {
  for (const PropertySuite& s : property_suites()) {
    if (s.name == name) {
      PropertyContext ctx{count, seed, fault};
      try {
        return s.run(ctx);
      } catch (const std::exception& e) {
        PropertyResult r{std::string(name)};
        Json j;
        j["exception"] = e.what();
        fail(r, j);
        return r;
      }
    }
  }
  throw std::invalid_argument("unknown property suite '" + std::string(name) + "'");
}

Json run_selftest(std::uint64_t seed, double scale, Fault fault) {
  if (!(scale >= 0) || !std::isfinite(scale)) {
    throw std::invalid_argument("scale must be a finite nonnegative number");
  }
  Json suites = Json::array();
  bool all = true;
  const auto& list = property_suites();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto count =
        static_cast<std::uint64_t>(std::llround(static_cast<double>(list[i].default_count) * scale));
    const std::uint64_t suite_seed = sampling::derive_seed(seed, i);
    PropertyResult r = run_property(list[i].name, count, suite_seed, fault);
    all = all && r.passed;
    Json j;
    j["name"] = r.name;
    j["verdict"] = r.passed;
    j["cases"] = r.cases;
    j["seed"] = suite_seed;
    if (!r.passed) {
      j["counterexample"] = r.counterexample;
    }
    suites.push_back(std::move(j));
  }
  Json report;
  report["seed"] = seed;
  report["scale"] = scale;
  report["verdict"] = all;
  report["suites"] = std::move(suites);
  return report;
}

}  // namespace goldman

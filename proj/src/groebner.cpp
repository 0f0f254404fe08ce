#include "goldman/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace goldman {

namespace {

bool divides_exp(const PolyExponent& a, const PolyExponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

PolyExponent minus(const PolyExponent& b, const PolyExponent& a) {
  PolyExponent d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    d[i] = b[i] - a[i];
  }
  return d;
}

PolyExponent lcm(const PolyExponent& a, const PolyExponent& b) {
  PolyExponent l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    l[i] = std::max(a[i], b[i]);
  }
  return l;
}

bool coprime(const PolyExponent& a, const PolyExponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) {
      return false;
    }
  }
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PolyExponent l = lcm(f.leading_exponent(), g.leading_exponent());
  Polynomial s(f.vars());
  s.add_scaled(f, 1 / f.leading_coefficient(), minus(l, f.leading_exponent()));
  s.add_scaled(g, -1 / g.leading_coefficient(), minus(l, g.leading_exponent()));
  return s;
}

// Pairs are processed smallest lcm first; a pair is skipped when its leading
// terms are coprime or when some third leading term divides the lcm and both
// of its pairs with the current ones are already done.
struct Pair {
  std::size_t i;
  std::size_t j;
  PolyExponent lcm;
};

}  // namespace

bool GrevlexGreater::operator()(const PolyExponent& a, const PolyExponent& b) const {
  long da = 0;
  long db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) {
    return da > db;
  }
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a[i - 1] != b[i - 1]) {
      return a[i - 1] < b[i - 1];
    }
  }
  return false;
}

Polynomial Polynomial::constant(std::size_t vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(PolyExponent(vars, 0), c);
  return p;
}

Polynomial& Polynomial::add_term(const PolyExponent& e, const Rational& c) {
  if (e.size() != vars_) {
    throw std::invalid_argument("polynomial exponent of wrong length");
  }
  if (c == 0) {
    return *this;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::add_scaled(const Polynomial& p, const Rational& c,
                                   const PolyExponent& shift) {
  for (const auto& [e, pc] : p.terms_) {
    PolyExponent s(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      s[i] = e[i] + shift[i];
    }
    add_term(s, c * pc);
  }
  return *this;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    return *this;
  }
  Polynomial out(vars_);
  const Rational lc = leading_coefficient();
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(e, c / lc);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << goldman::to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) {
        os << "*t" << (i + 1);
        if (e[i] != 1) {
          os << '^' << e[i];
        }
      }
    }
  }
  return os.str();
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial rem(p.vars());
  Polynomial work = p;
  while (!work.is_zero()) {
    const PolyExponent lead = work.leading_exponent();
    const Rational lc = work.leading_coefficient();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : basis) {
      if (!g.is_zero() && divides_exp(g.leading_exponent(), lead)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      work.add_scaled(*divisor, -lc / divisor->leading_coefficient(),
                      minus(lead, divisor->leading_exponent()));
    } else {
      rem.add_term(lead, lc);
      work.add_term(lead, -lc);
    }
  }
  return rem;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators) {
  std::vector<Polynomial> g;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;

  auto add = [&](Polynomial p) {
    const std::size_t h = g.size();
    g.push_back(p.monic());
    for (std::size_t i = 0; i < h; ++i) {
      pending.push_back(Pair{i, h, lcm(g[i].leading_exponent(), g[h].leading_exponent())});
      open.emplace(i, h);
    }
  };
  for (auto& p : generators) {
    Polynomial r = normal_form(p, g);
    if (!r.is_zero()) {
      add(std::move(r));
    }
  }

  const GrevlexGreater greater;
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      return greater(b.lcm, a.lcm);
    });
    Pair pr = std::move(*best);
    pending.erase(best);
    open.erase({pr.i, pr.j});
    if (coprime(g[pr.i].leading_exponent(), g[pr.j].leading_exponent())) {
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !divides_exp(g[k].leading_exponent(), pr.lcm)) {
        continue;
      }
      chain = !open.contains({std::min(pr.i, k), std::max(pr.i, k)}) &&
              !open.contains({std::min(pr.j, k), std::max(pr.j, k)});
    }
    if (chain) {
      continue;
    }
    Polynomial r = normal_form(s_polynomial(g[pr.i], g[pr.j]), g);
    if (!r.is_zero()) {
      add(std::move(r));
    }
  }

  // minimal basis: drop elements whose leading term another element divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) {
        continue;
      }
      const auto& li = g[i].leading_exponent();
      const auto& lj = g[j].leading_exponent();
      if (divides_exp(lj, li) && (lj != li || j < i)) {
        redundant = true;
      }
    }
    if (!redundant) {
      minimal.push_back(g[i]);
    }
  }

  // interreduce tails
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) {
        others.push_back(minimal[j]);
      }
    }
    Polynomial head(minimal[i].vars());
    head.add_term(minimal[i].leading_exponent(), minimal[i].leading_coefficient());
    Polynomial tail = minimal[i];
    tail.add_term(minimal[i].leading_exponent(), -minimal[i].leading_coefficient());
    Polynomial nf = normal_form(tail, others);
    head.add_scaled(nf, 1, PolyExponent(head.vars(), 0));
    reduced.push_back(head.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return greater(a.leading_exponent(), b.leading_exponent());
  });
  return reduced;
}

namespace {

Polynomial swap_variables(const Polynomial& p, std::size_t a, std::size_t b) {
  Polynomial q(p.vars());
  for (const auto& [e, c] : p.terms()) {
    PolyExponent f = e;
    std::swap(f[a], f[b]);
    q.add_term(f, c);
  }
  return q;
}

// Appends h so that every term has the top total degree.
Polynomial homogenize(const Polynomial& p) {
  long top = 0;
  for (const auto& [e, c] : p.terms()) {
    top = std::max(top, std::accumulate(e.begin(), e.end(), 0L));
  }
  Polynomial q(p.vars() + 1);
  for (const auto& [e, c] : p.terms()) {
    PolyExponent f = e;
    f.push_back(top - std::accumulate(e.begin(), e.end(), 0L));
    q.add_term(f, c);
  }
  return q;
}

// Sets the last variable to 1.
Polynomial dehomogenize(const Polynomial& p) {
  Polynomial q(p.vars() - 1);
  for (const auto& [e, c] : p.terms()) {
    q.add_term(PolyExponent(e.begin(), e.end() - 1), c);
  }
  return q;
}

}  // namespace

std::vector<Polynomial> saturate_by_variables(const std::vector<Polynomial>& generators,
                                              std::size_t vars) {
  for (const Polynomial& p : generators) {
    if (p.vars() != vars) {
      throw std::invalid_argument("saturate: polynomial in the wrong number of variables");
    }
  }
  std::vector<Polynomial> current = groebner_basis(generators);
  // For a homogeneous ideal and x last in grevlex, dividing each element of
  // the reduced basis by its largest power of x gives a basis of I : x^inf.
  // So homogenize with an extra variable h (slot `vars`), saturate there and
  // set h = 1; the homogenized grevlex basis generates the homogenization.
  const std::size_t h = vars;
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Polynomial> moved;
    for (const Polynomial& p : current) {
      moved.push_back(swap_variables(homogenize(p), v, h));
    }
    std::vector<Polynomial> divided;
    for (const Polynomial& p : groebner_basis(std::move(moved))) {
      long power = std::numeric_limits<long>::max();
      for (const auto& [e, c] : p.terms()) {
        power = std::min(power, e[h]);
      }
      PolyExponent shift(vars + 1, 0);
      shift[h] = -power;
      Polynomial q(vars + 1);
      q.add_scaled(p, 1, shift);
      divided.push_back(dehomogenize(swap_variables(q, v, h)));
    }
    current = groebner_basis(std::move(divided));
  }
  return current;
}

}  // namespace goldman

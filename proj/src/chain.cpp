#include "goldman/chain.hpp"

#include <stdexcept>
#include <string>

namespace goldman {

namespace {

void check_compatible(const GnElement& x, const GnElement& y) {
  if (x.level() != y.level() || x.c_index() != y.c_index() || x.rank() != y.rank()) {
    throw std::invalid_argument("G_n elements of different level, c_index or rank");
  }
}

}  // namespace

GnElement GnElement::normalize(unsigned long level, std::size_t c_index, std::size_t rank,
                               std::span<const Letter> raw) {
  if (c_index < 1 || c_index > rank) {
    throw std::out_of_range("c_index " + std::to_string(c_index) + " outside 1.." +
                            std::to_string(rank));
  }
  GnElement x;
  x.level_ = level;
  x.c_index_ = c_index;
  x.rank_ = rank;
  auto& out = x.letters_;
  for (const Letter& l : raw) {
    if (l.gen < 1 || l.gen > rank) {
      throw std::out_of_range("generator a" + std::to_string(l.gen) + " outside 1.." +
                              std::to_string(rank));
    }
    const bool is_c = l.gen == c_index;
    Integer e = is_c ? symmetric_residue(l.exp, level) : l.exp;
    if (e == 0) {
      continue;
    }
    if (!out.empty() && out.back().gen == l.gen) {
      Integer merged = out.back().exp + e;
      if (is_c) {
        merged = symmetric_residue(merged, level);
      }
      if (merged == 0) {
        out.pop_back();
      } else {
        out.back().exp = std::move(merged);
      }
    } else {
      out.push_back(Letter{l.gen, std::move(e)});
    }
  }
  return x;
}

GnElement GnElement::identity(unsigned long level, std::size_t c_index, std::size_t rank) {
  return normalize(level, c_index, rank, {});
}

GnElement project_gn(const Word& w, unsigned long level, std::size_t c_index) {
  return GnElement::normalize(level, c_index, w.rank(), w.letters());
}

GnElement gn_mul(const GnElement& x, const GnElement& y) {
  check_compatible(x, y);
  std::vector<Letter> raw = x.letters();
  raw.insert(raw.end(), y.letters().begin(), y.letters().end());
  return GnElement::normalize(x.level(), x.c_index(), x.rank(), raw);
}

GnElement gn_inv(const GnElement& x) {
  std::vector<Letter> raw(x.letters().rbegin(), x.letters().rend());
  for (Letter& l : raw) {
    l.exp = -l.exp;
  }
  return GnElement::normalize(x.level(), x.c_index(), x.rank(), raw);
}

std::vector<Letter> gn_conjugacy_canonical(const GnElement& x) {
  std::vector<Letter> ls = x.letters();
  const bool c_factor = x.level() > 0;
  // Conjugate the last syllable around to the front until the ends lie in
  // different factors.
  while (ls.size() >= 2 && ls.front().gen == ls.back().gen) {
    Integer merged = ls.front().exp + ls.back().exp;
    if (ls.front().gen == x.c_index() && c_factor) {
      merged = symmetric_residue(merged, x.level());
    }
    ls.pop_back();
    if (merged == 0) {
      ls.erase(ls.begin());
    } else {
      ls.front().exp = std::move(merged);
    }
  }
  const std::size_t start = least_rotation(ls);
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    out.push_back(ls[(start + i) % ls.size()]);
  }
  return out;
}

bool gn_conjugate(const GnElement& x, const GnElement& y) {
  check_compatible(x, y);
  return gn_conjugacy_canonical(x) == gn_conjugacy_canonical(y);
}

Word cn_generator(unsigned long level, std::span<const unsigned long> m_list,
                  std::span<const Word> x_list, const Word& g, std::size_t c_index) {
  if (m_list.empty()) {
    throw std::invalid_argument("cn_generator: empty product");
  }
  if (m_list.size() != x_list.size()) {
    throw std::invalid_argument("cn_generator: m and x lists differ in length");
  }
  const std::size_t rank = g.rank();
  if (c_index < 1 || c_index > rank) {
    throw std::out_of_range("cn_generator: c_index outside the alphabet");
  }
  Word product(rank);
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < level) {
      throw std::invalid_argument("cn_generator: m_" + std::to_string(i + 1) + " = " +
                                  std::to_string(m_list[i]) + " is below the level " +
                                  std::to_string(level));
    }
    const Word c = Word::generator(rank, c_index, pow2(m_list[i]));
    const Word& xi = x_list[i];
    product = product * c * xi * inverse(c) * inverse(xi);
  }
  return conjugate(product, g);
}

std::optional<unsigned long> separation_level(const Word& a, const Word& b, std::size_t c_index,
                                              unsigned long n_max) {
  if (are_conjugate(a, b)) {
    throw std::invalid_argument("separation_level: words are conjugate in the free group");
  }
  for (unsigned long n = 0; n <= n_max; ++n) {
    if (!gn_conjugate(project_gn(a, n, c_index), project_gn(b, n, c_index))) {
      return n;
    }
  }
  return std::nullopt;
}

Integer total_c_exponent(const Word& a, const Word& b, std::size_t c_index) {
  Integer total = 0;
  for (const Word* w : {&a, &b}) {
    for (const Letter& l : w->letters()) {
      if (l.gen == c_index) {
        total += abs(l.exp);
      }
    }
  }
  return total;
}

unsigned long separation_bound(const Integer& e) {
  if (e < 0) {
    throw std::invalid_argument("separation_bound: negative exponent sum");
  }
  // 2^{n-1} > e  <=>  2^n > 2e
  unsigned long n = 0;
  const Integer twice = 2 * e;
  while (pow2(n) <= twice) {
    ++n;
  }
  return n;
}

}  // namespace goldman

#include "goldman/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace goldman {

std::strong_ordering compare_letters(const Letter& x, const Letter& y) {
  if (auto c = x.gen <=> y.gen; c != 0) {
    return c;
  }
  if (x.exp < y.exp) {
    return std::strong_ordering::less;
  }
  if (y.exp < x.exp) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Word Word::reduce(std::size_t rank, std::span<const Letter> raw) {
  Word w(rank);
  auto& out = w.letters_;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen < 1 || l.gen > rank) {
      throw std::out_of_range("generator a" + std::to_string(l.gen) +
                              " outside 1.." + std::to_string(rank));
    }
    if (l.exp == 0) {
      continue;
    }
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) {
        out.pop_back();
      }
    } else {
      out.push_back(l);
    }
  }
  return w;
}

Word Word::generator(std::size_t rank, std::size_t gen, Integer exp) {
  Letter l{gen, std::move(exp)};
  return reduce(rank, std::span<const Letter>(&l, 1));
}

Integer Word::length() const {
  Integer total = 0;
  for (const Letter& l : letters_) {
    total += abs(l.exp);
  }
  return total;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() <= 1 || letters_.front().gen != letters_.back().gen;
}

Word reduce(std::size_t rank, std::span<const Letter> raw) {
  return Word::reduce(rank, raw);
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("concat: alphabet sizes differ (" +
                                std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()) + ")");
  }
  std::vector<Letter> raw;
  raw.reserve(u.syllables() + v.syllables());
  raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(u.rank(), raw);
}

Word inverse(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.syllables());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    raw.push_back(Letter{it->gen, -it->exp});
  }
  return Word::reduce(w.rank(), raw);
}

Word conjugate(const Word& w, const Word& g) {
  return concat(concat(g, w), inverse(g));
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Letter> core = w.letters();
  std::vector<Letter> conj;
  std::size_t lo = 0;
  std::size_t hi = core.size();  // live range [lo, hi)
  while (hi - lo >= 2 && core[lo].gen == core[hi - 1].gen) {
    const Letter first = core[lo];
    conj.push_back(first);
    if (first.exp + core[hi - 1].exp == 0) {
      ++lo;
      --hi;
    } else {
      // x^p m x^q = x^p (m x^{p+q}) x^{-p}; the middle starts with another generator
      core[hi - 1].exp += first.exp;
      ++lo;
      break;
    }
  }
  std::vector<Letter> live(core.begin() + static_cast<std::ptrdiff_t>(lo),
                           core.begin() + static_cast<std::ptrdiff_t>(hi));
  return {Word::reduce(w.rank(), live), Word::reduce(w.rank(), conj)};
}

std::size_t least_rotation(std::span<const Letter> letters) {
  const std::size_t k = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      auto c = compare_letters(letters[(r + i) % k], letters[(best + i) % k]);
      if (c < 0) {
        best = r;
        break;
      }
      if (c > 0) {
        break;
      }
    }
  }
  return best;
}

Word CyclicWord::representative() const { return Word::reduce(rank_, letters_); }

std::strong_ordering operator<=>(const CyclicWord& x, const CyclicWord& y) {
  if (auto c = x.rank_ <=> y.rank_; c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                y.letters_.begin(), y.letters_.end(),
                                                compare_letters);
}

CyclicWord conjugacy_canonical(const Word& w) {
  auto [core, conj] = cyclic_reduce(w);
  CyclicWord out;
  out.rank_ = w.rank();
  const auto& ls = core.letters();
  std::size_t start = least_rotation(ls);
  out.letters_.reserve(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    out.letters_.push_back(ls[(start + i) % ls.size()]);
  }
  return out;
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("are_conjugate: alphabet sizes differ");
  }
  return conjugacy_canonical(u) == conjugacy_canonical(v);
}

}  // namespace goldman

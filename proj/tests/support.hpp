#pragma once

#include "goldman/io.hpp"
#include "goldman/words.hpp"

#include <string_view>

namespace goldman::testing {

inline Word w(std::string_view text, std::size_t rank = 3) { return parse_word(text, rank); }

inline std::string str(const Word& x) { return format_word(x); }

}  // namespace goldman::testing

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tsf {

/// One letter of the input alphabet. Symbols are raw bytes ordered numerically.
using Symbol = std::uint8_t;

/// A finite byte sequence. std::string compares through
/// char_traits<char>, which orders bytes as unsigned char, so the
/// lexicographic order of Words matches the numeric symbol order.
using Word = std::string;
using WordView = std::string_view;

inline Symbol symbol_at(WordView w, std::size_t pos) {
    return static_cast<Symbol>(w[pos]);
}

/// Which side of the comparison a word belongs to.
enum class SourceTag : std::uint8_t { Reference, Target };

struct TaggedWord {
    Word word;
    SourceTag tag;
};

/// Sum of word lengths, written size(P) in the literature.
inline std::size_t total_size(const std::vector<Word>& words) {
    std::size_t n = 0;
    for (const auto& w : words) n += w.size();
    return n;
}

} // namespace tsf

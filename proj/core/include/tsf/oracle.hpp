#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "tsf/word.hpp"

// Brute-force mirrors of the fast algorithms. They share no code with the
// automata: plain string sets and window scans only.
namespace tsf::oracle {

/// Inputs larger than this (total symbols) are refused with std::length_error.
inline constexpr std::size_t kMaxInputSize = 10'000;

/// All factors of all words, always including ε.
using FactorSet = std::set<Word>;

FactorSet factors_naive(const std::vector<Word>& words);

/// Factors of T absent from R whose proper factors all occur in R. Sorted.
std::vector<Word> specific_naive(const std::vector<Word>& reference,
                                 const std::vector<Word>& target);

std::vector<std::int64_t> ts_table_naive(const std::vector<Word>& reference, const Word& target);

/// Minimal absent words of Fact(R) over `alphabet`. Sorted.
std::vector<Word> maw_naive(const std::vector<Word>& reference, const std::vector<Symbol>& alphabet);

} // namespace tsf::oracle

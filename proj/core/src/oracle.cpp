#include "tsf/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsf::oracle {

namespace {

void guard(std::size_t size) {
    if (size > kMaxInputSize) throw std::length_error("oracle input too large");
}

bool proper_factors_in(const Word& u, const FactorSet& fact) {
    // Checking the two maximal proper factors suffices: Fact is factor-closed.
    if (u.empty()) return true;
    return fact.contains(u.substr(1)) && fact.contains(u.substr(0, u.size() - 1));
}

} // namespace

FactorSet factors_naive(const std::vector<Word>& words) {
    guard(total_size(words));
    FactorSet out{Word{}};
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t len = 1; i + len <= w.size(); ++len) out.insert(w.substr(i, len));
        }
    }
    return out;
}

std::vector<Word> specific_naive(const std::vector<Word>& reference,
                                 const std::vector<Word>& target) {
    guard(total_size(reference) + total_size(target));
    const FactorSet fr = factors_naive(reference);
    std::vector<Word> out;
    for (const Word& u : factors_naive(target)) {
        if (!fr.contains(u) && proper_factors_in(u, fr)) out.push_back(u);
    }
    return out; // std::set iteration order is already sorted
}

std::vector<std::int64_t> ts_table_naive(const std::vector<Word>& reference, const Word& target) {
    guard(total_size(reference) + target.size());
    const auto specific = specific_naive(reference, {target});
    const std::set<Word> lookup(specific.begin(), specific.end());
    std::vector<std::int64_t> table(target.size(), -1);
    for (std::size_t i = 0; i < target.size(); ++i) {
        for (std::size_t j = i; j < target.size(); ++j) {
            if (lookup.contains(target.substr(i, j - i + 1))) {
                table[i] = static_cast<std::int64_t>(j);
                break;
            }
        }
    }
    return table;
}

std::vector<Word> maw_naive(const std::vector<Word>& reference, const std::vector<Symbol>& alphabet) {
    guard(total_size(reference));
    const FactorSet fr = factors_naive(reference);
    std::size_t longest = 0;
    for (const auto& w : reference) longest = std::max(longest, w.size());

    // Every minimal absent word is a factor of R extended by one letter on
    // the right, so grow candidates from the factor set level by level.
    std::vector<Word> out;
    for (const Word& u : fr) {
        if (u.size() > longest) continue;
        for (Symbol a : alphabet) {
            Word cand = u;
            cand.push_back(static_cast<char>(a));
            if (!fr.contains(cand) && proper_factors_in(cand, fr)) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace tsf::oracle

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tsf/dawg.hpp"
#include "tsf/word.hpp"

namespace tsf {

struct NodeId {
    std::uint32_t index = 0;

    constexpr auto operator<=>(const NodeId&) const = default;
};

struct TrieEdge {
    Symbol symbol;
    NodeId target;
};

/// Tree-shaped automaton accepting exactly the target-specific words with
/// respect to the reference. Internal nodes mirror Dawg states marked as
/// occurring on both sides; every accepted word ends in its own sink.
class SpecificTrie {
public:
    struct Node {
        std::vector<TrieEdge> edges; // sorted by symbol
        std::optional<StateId> origin; // absent for sinks
        std::uint32_t depth = 0;
    };

    NodeId root() const { return NodeId{0}; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t sink_count() const;
    const Node& node(NodeId n) const { return nodes_.at(n.index); }
    bool is_sink(NodeId n) const { return !node(n).origin.has_value(); }

    /// Copy without internal branches that lead to no sink. The root is kept.
    SpecificTrie pruned() const;

private:
    friend SpecificTrie build_specific_trie(const Dawg& d);

    NodeId add(std::optional<StateId> origin, std::uint32_t depth);

    std::vector<Node> nodes_;
};

/// Breadth-first over states marked on both sides, symbols in ascending
/// byte order. `d` must be built from tagged reference and target words.
SpecificTrie build_specific_trie(const Dawg& d);

/// Labels of all root-to-sink paths, sorted and duplicate-free.
std::vector<Word> enumerate_words(const SpecificTrie& trie);

/// Upper bound on the number of target-specific words. For a reference of
/// total length above one it is
///   (2·size_R − 2)(alpha_R − 1) + alpha_T_minus_R − alpha_R + m,
/// otherwise alpha_T_minus_R. The value is returned as is, even if negative.
std::int64_t count_bound(std::int64_t size_r, std::int64_t m, std::int64_t alpha_r,
                         std::int64_t alpha_t_minus_r);

struct SpecificWordReport {
    std::vector<Word> words;
    std::size_t count = 0;
    std::int64_t bound = 0;
};

/// Full pipeline: automaton of R ∪ T, trie, enumeration and bound.
SpecificWordReport specific_words(std::span<const Word> reference, std::span<const Word> target);

} // namespace tsf
